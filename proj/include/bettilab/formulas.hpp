#ifndef BETTILAB_FORMULAS_HPP
#define BETTILAB_FORMULAS_HPP

#include "bettilab/series.hpp"

namespace bettilab {

struct NumeratorNotDivisibleByZ : std::runtime_error {
    NumeratorNotDivisibleByZ() : std::runtime_error("series numerator is not divisible by z") {}
};
struct NotPolynomial : std::runtime_error {
    NotPolynomial() : std::runtime_error("expression did not cancel to a polynomial") {}
};
struct NegativePowersRemain : std::runtime_error {
    NegativePowersRemain() : std::runtime_error("negative powers of z remain after assembly") {}
};
struct BadParameters : std::runtime_error {
    explicit BadParameters(const std::string& w) : std::runtime_error(w) {}
};

// P^R_k = (1+z)^dim / (1-z)^codim
RationalSeries tate_series(int dimR, int codimR);

// P^A_k(y,z) = (1+yz)^e / prod (1 - y^{n} z^2) for a graded c.i. of the given degrees
RationalSeries graded_ci_pk(int e, const std::vector<int>& degrees);

// P^A_k(y,z) = (1+yz)^e / (1 - z^2 P^B_I) for a Golod algebra
RationalSeries golod_pk(int e, const BiPoly& pBI);

// P^R_S = ((1+z)^{a+1}(1-z)^a + z^2 P^Q_J - 1) / (z (1+z)^{c-d+e} (1-z)^c)
RationalSeries golod_residue_series(int a, int c, int d, int e, const BiPoly& pQJ);

// graded Poincare polynomial of I(X) for an adequate s x (s+h-1) matrix:
// P^B_I = (1 - (1+yz)^h sum_{i<s} C(h-1+i,i)(-yz)^i) / (-z)^s
BiPoly adequate_ideal_series(int s, int h, int e);

// the closed form of z^2 P^Q_J for J = I(U) + (u)^{s+1}
BiPoly det_power_series(int s, int h, int e);

struct ComponentData {
    int j = 0;
    RationalSeries hPrev; // H_{B/I<j-1>} as a univariate series in t
    RationalSeries hCur;  // H_{B/I<j>}
    long long nPrev = 0;  // n_{j-1} = rank I_{j-1}
};
RationalSeries componentwise_linear_series(int e, const std::vector<ComponentData>& data);

// P^B_I for a t-linear ideal: (-z)^t P^B_I = (1+yz)^e H_I(-yz)
RationalSeries linear_ideal_series(int t, int e, const RationalSeries& hI);

enum class GringCase { HEqualsE, HAtMostEMinus1 };

struct GringParams {
    int c = 0, d = 0, e = 0, a = 0, h = 0;
    GringCase caseTag = GringCase::HEqualsE;
};
GringParams make_gring_params(int c, int d, int e, int a, int h);
int gring_granularity(const GringParams& p);

int granularity_bound(int c, int q);

// substitute t -> -yz into a univariate rational series
RationalSeries substitute_minus_yz(const RationalSeries& s);

} // namespace bettilab

#endif
