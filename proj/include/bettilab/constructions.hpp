#ifndef BETTILAB_CONSTRUCTIONS_HPP
#define BETTILAB_CONSTRUCTIONS_HPP

#include "bettilab/formulas.hpp"
#include "bettilab/ring_spec.hpp"

namespace bettilab {

/* s x (s+h-1) matrix with entries drawn from x_1..x_e and 0 (entry 0 = zero).
 * The band diagonals Delta_n (n = j-i+1 in [1,h]) must carry exactly x_n. */
struct AdequateMatrix {
    int s = 0;
    int h = 0;
    int e = 0;
    std::vector<int> entries; // row-major, s x (s+h-1); 0 = zero, else 1-based index

    int cols() const { return s + h - 1; }
    int at(int i, int j) const { return entries[static_cast<size_t>(i * cols() + j)]; }
};

// staircase pattern: band diagonals filled, everything else zero
AdequateMatrix staircase_matrix(int s, int h, int e);

struct AdequacyReport {
    bool valid = false;
    std::vector<std::string> violations;
};
AdequacyReport validate_adequate(const AdequateMatrix& U);

// all s x s minors of U, expanded over F_p; zero and duplicate minors removed;
// column subsets in lexicographic order
std::vector<HomogPoly> minors_ideal(const AdequateMatrix& U, uint32_t p = kDefaultPrime);

// B/(I(U) + (x)^{s+1}) over e variables
RingSpec golod_quotient_ideal(const AdequateMatrix& U, int e, uint32_t p = kDefaultPrime);

struct OptimalFamily {
    int d = 0, c = 0, q = 0, a = 0;
    int e = 0; // number of u-variables
    RingSpec R;
    RingSpec Stilde;
    AdequateMatrix U;
    int predictedGn = 0;
};

/* The explicit rings witnessing that the granularity bound is optimal.
 * Variables are t1..t_{d-e} then u1..u_e; requires d >= c >= q >= 0, c >= a >= 0. */
OptimalFamily optimal_family(int d, int c, int q, int a, uint32_t p = kDefaultPrime);

struct SamplePoint {
    std::vector<uint32_t> a;
    bool passed = false;
};
struct SampleReport {
    std::vector<SamplePoint> samples;
    int passes = 0;
    double ratio = 0.0;
};

/* Randomized membership test for the minimal-multiplicity locus: draws trial
 * vectors a, forms f_i - a_i f_r, and checks the first q of them. */
SampleReport sample_regular_point(int e, const std::vector<HomogPoly>& forms, int q, uint64_t seed,
                                  int trials, int regTrials = 5);

// explicit check of a single point a (used for engineered fixtures)
bool sample_point_passes(int e, const std::vector<HomogPoly>& forms, int q,
                         const std::vector<uint32_t>& a, int regTrials = 5, uint64_t seed = 0x5eed);

// the three 2x3 matrices classifying height-2 non-degenerate primes of
// minimal multiplicity; index 0..2, over d >= 6 variables
AdequateMatrix delpezzo_matrix(int which);

} // namespace bettilab

#endif
