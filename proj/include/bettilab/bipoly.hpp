#ifndef BETTILAB_BIPOLY_HPP
#define BETTILAB_BIPOLY_HPP

#include "bettilab/numeric.hpp"

#include <map>
#include <utility>
#include <vector>

namespace bettilab {

struct ZeroPolynomial : std::runtime_error {
    ZeroPolynomial() : std::runtime_error("zero polynomial has no root multiplicity") {}
};

/* Integer polynomial in y and z, canonical form: no zero coefficients stored.
 * Exponents are non-negative; Laurent bookkeeping is done by the callers. */
class BiPoly {
public:
    using Key = std::pair<int, int>; // (yExp, zExp)
    using TermMap = std::map<Key, Int>;

    BiPoly() = default;

    static BiPoly constant(Int c)
    {
        BiPoly p;
        p.add_term(0, 0, std::move(c));
        return p;
    }
    static BiPoly term(Int c, int yExp, int zExp)
    {
        BiPoly p;
        p.add_term(yExp, zExp, std::move(c));
        return p;
    }
    static BiPoly one() { return constant(1); }
    // 1 + y^a z^b with sign: convenience for the (1 +- y^a z^b) factors
    static BiPoly one_plus(Int c, int yExp, int zExp)
    {
        BiPoly p = one();
        p.add_term(yExp, zExp, std::move(c));
        return p;
    }

    void add_term(int yExp, int zExp, Int c)
    {
        if (c == 0)
            return;
        if (yExp < 0 || zExp < 0)
            throw std::invalid_argument("BiPoly: negative exponent");
        auto it = terms_.find({yExp, zExp});
        if (it == terms_.end()) {
            terms_.emplace(Key{yExp, zExp}, std::move(c));
        } else {
            it->second += c;
            if (it->second == 0)
                terms_.erase(it);
        }
    }

    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool operator==(const BiPoly& o) const { return terms_ == o.terms_; }
    bool operator!=(const BiPoly& o) const { return !(*this == o); }

    Int coeff(int yExp, int zExp) const
    {
        auto it = terms_.find({yExp, zExp});
        return it == terms_.end() ? Int(0) : it->second;
    }

    int y_degree() const
    {
        int d = -1;
        for (auto& [k, c] : terms_)
            if (k.first > d)
                d = k.first;
        return d;
    }
    int z_degree() const
    {
        int d = -1;
        for (auto& [k, c] : terms_)
            if (k.second > d)
                d = k.second;
        return d;
    }
    // smallest z exponent appearing; -1 for the zero polynomial
    int z_valuation() const
    {
        int v = -1;
        for (auto& [k, c] : terms_)
            if (v < 0 || k.second < v)
                v = k.second;
        return v;
    }
    bool univariate_in_z() const { return y_degree() <= 0; }

    BiPoly operator+(const BiPoly& o) const
    {
        BiPoly r = *this;
        for (auto& [k, c] : o.terms_)
            r.add_term(k.first, k.second, c);
        return r;
    }
    BiPoly operator-(const BiPoly& o) const
    {
        BiPoly r = *this;
        for (auto& [k, c] : o.terms_)
            r.add_term(k.first, k.second, -c);
        return r;
    }
    BiPoly operator-() const
    {
        BiPoly r;
        for (auto& [k, c] : terms_)
            r.terms_.emplace(k, -c);
        return r;
    }
    BiPoly operator*(const BiPoly& o) const
    {
        BiPoly r;
        for (auto& [k1, c1] : terms_)
            for (auto& [k2, c2] : o.terms_)
                r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
        return r;
    }
    BiPoly pow(int n) const
    {
        if (n < 0)
            throw std::invalid_argument("BiPoly::pow: negative exponent");
        BiPoly r = one();
        BiPoly b = *this;
        while (n) {
            if (n & 1)
                r = r * b;
            n >>= 1;
            if (n)
                b = b * b;
        }
        return r;
    }

    // multiply by y^dy z^dz; exponents must stay non-negative
    BiPoly shifted(int dy, int dz) const
    {
        BiPoly r;
        for (auto& [k, c] : terms_)
            r.add_term(k.first + dy, k.second + dz, c);
        return r;
    }

    // exact division by z^k; throws if some term has zExp < k
    BiPoly divided_by_z(int k) const
    {
        BiPoly r;
        for (auto& [key, c] : terms_) {
            if (key.second < k)
                throw std::domain_error("BiPoly: not divisible by z^" + std::to_string(k));
            r.terms_.emplace(Key{key.first, key.second - k}, c);
        }
        return r;
    }

    // coefficient of z^k, as a polynomial in y
    BiPoly z_coefficient(int k) const
    {
        BiPoly r;
        for (auto& [key, c] : terms_)
            if (key.second == k)
                r.terms_.emplace(Key{key.first, 0}, c);
        return r;
    }

    BiPoly substitute_y_one() const
    {
        BiPoly r;
        for (auto& [key, c] : terms_)
            r.add_term(0, key.second, c);
        return r;
    }

    // evaluate a univariate-in-z polynomial at z = v
    Int eval_z(const Int& v) const
    {
        Int acc = 0;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (it->first.first != 0)
                throw std::domain_error("BiPoly::eval_z: not univariate in z");
        }
        int d = z_degree();
        for (int k = d; k >= 0; --k)
            acc = acc * v + coeff(0, k);
        return acc;
    }

private:
    TermMap terms_;
};

// exact division of a univariate-in-z polynomial by (1 - r*z), r = +-1
inline BiPoly divide_one_minus_rz(const BiPoly& p, int r)
{
    if (!p.univariate_in_z())
        throw std::domain_error("divide_one_minus_rz: not univariate in z");
    int d = p.z_degree();
    if (d < 1)
        throw std::domain_error("divide_one_minus_rz: not divisible");
    std::vector<Int> c(static_cast<size_t>(d) + 1, Int(0));
    for (auto& [k, v] : p.terms())
        c[static_cast<size_t>(k.second)] = v;
    // (1 - rz) q = p  =>  q_i = p_i + r q_{i-1}
    std::vector<Int> q(static_cast<size_t>(d), Int(0));
    Int prev = 0;
    for (int i = 0; i < d; ++i) {
        prev = c[static_cast<size_t>(i)] + Int(r) * prev;
        q[static_cast<size_t>(i)] = prev;
    }
    if (c[static_cast<size_t>(d)] + Int(r) * q[static_cast<size_t>(d - 1)] != 0)
        throw std::domain_error("divide_one_minus_rz: not divisible");
    BiPoly out;
    for (int i = 0; i < d; ++i)
        out.add_term(0, i, q[static_cast<size_t>(i)]);
    return out;
}

/* Multiplicity of the root z = +1 or z = -1 of a univariate-in-z polynomial,
 * by repeated synthetic division. */
inline int root_multiplicity(const BiPoly& p, int root)
{
    if (root != 1 && root != -1)
        throw std::invalid_argument("root_multiplicity: root must be +1 or -1");
    if (p.is_zero())
        throw ZeroPolynomial();
    if (!p.univariate_in_z())
        throw std::domain_error("root_multiplicity: polynomial not univariate in z");
    std::vector<Int> c(static_cast<size_t>(p.z_degree()) + 1, Int(0));
    for (auto& [k, v] : p.terms())
        c[static_cast<size_t>(k.second)] = v;
    int mult = 0;
    Int r(root);
    while (true) {
        // evaluate
        Int val = 0;
        for (size_t i = c.size(); i-- > 0;)
            val = val * r + c[i];
        if (val != 0)
            break;
        // synthetic division by (z - root): q_i = c_{i+1} + root*q_{i+1}
        std::vector<Int> q(c.size() - 1, Int(0));
        Int carry = 0;
        for (size_t i = c.size(); i-- > 1;) {
            carry = c[i] + r * carry;
            q[i - 1] = carry;
        }
        c = std::move(q);
        ++mult;
        if (c.empty())
            break;
    }
    return mult;
}

} // namespace bettilab

#endif
