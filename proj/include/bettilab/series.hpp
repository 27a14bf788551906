#ifndef BETTILAB_SERIES_HPP
#define BETTILAB_SERIES_HPP

#include "bettilab/bipoly.hpp"

#include <json.hpp>
#include <optional>
#include <string>
#include <vector>

namespace bettilab {

struct InvalidDenominator : std::runtime_error {
    explicit InvalidDenominator(const std::string& w) : std::runtime_error(w) {}
};
struct NotPlusMinusOnePoles : std::runtime_error {
    NotPlusMinusOnePoles() : std::runtime_error("denominator has roots other than +1/-1") {}
};
struct DenominatorVanishes : std::runtime_error {
    DenominatorVanishes() : std::runtime_error("denominator constant term vanishes after substitution") {}
};
struct NegativeYExponent : std::runtime_error {
    NegativeYExponent() : std::runtime_error("yOffset would make a coefficient exponent negative") {}
};

/* num/den * y^yOffset, den(y,0) = 1 after normalization, so coefficient
 * extraction as a power series in z is exact integer arithmetic. */
class RationalSeries {
public:
    RationalSeries() : num_(), den_(BiPoly::one()), yOffset_(0) {}
    RationalSeries(BiPoly num, BiPoly den, int yOffset = 0)
        : num_(std::move(num)), den_(std::move(den)), yOffset_(yOffset)
    {
        normalize();
    }
    static RationalSeries polynomial(BiPoly p, int yOffset = 0)
    {
        return RationalSeries(std::move(p), BiPoly::one(), yOffset);
    }

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    int y_offset() const { return yOffset_; }

    bool is_zero() const { return num_.is_zero(); }
    bool univariate() const
    {
        return yOffset_ == 0 && num_.univariate_in_z() && den_.univariate_in_z();
    }

    RationalSeries operator+(const RationalSeries& o) const;
    RationalSeries operator-(const RationalSeries& o) const;
    RationalSeries operator*(const RationalSeries& o) const;

    std::string to_text() const;
    nlohmann::json to_json() const;
    static RationalSeries from_json(const nlohmann::json& j);

private:
    void normalize();

    BiPoly num_, den_;
    int yOffset_;

    friend RationalSeries specialize_y(const RationalSeries&);
};

/* Quasi-polynomial description of a coefficient sequence with poles at +-1:
 * beta_i = betaEven(i) for even i >= validFrom, betaOdd(i) for odd ones. */
struct QuasiPolynomialPair {
    std::vector<Rat> betaEven; // coefficients, low degree first; empty = 0
    std::vector<Rat> betaOdd;
    int cx = 0;
    int gn = 0;
    int validFrom = 0;

    Rat eval_even(long i) const { return eval(betaEven, i); }
    Rat eval_odd(long i) const { return eval(betaOdd, i); }
    Rat eval_at(long i) const { return (i % 2 == 0) ? eval_even(i) : eval_odd(i); }

    static Rat eval(const std::vector<Rat>& c, long i)
    {
        Rat acc = 0;
        for (size_t k = c.size(); k-- > 0;)
            acc = acc * i + c[k];
        return acc;
    }
};

// coefficients c_0..c_orderZ of the series, each a polynomial in y
std::vector<BiPoly> expand(const RationalSeries& s, int orderZ);

// (cx order at z=+1, gn order at z=-1) for a univariate series
std::pair<int, int> pole_orders(const RationalSeries& s);

QuasiPolynomialPair betti_polynomials(const RationalSeries& s);

RationalSeries specialize_y(const RationalSeries& s);

} // namespace bettilab

#endif
