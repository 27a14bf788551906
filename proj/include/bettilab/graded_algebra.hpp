#ifndef BETTILAB_GRADED_ALGEBRA_HPP
#define BETTILAB_GRADED_ALGEBRA_HPP

#include "bettilab/numeric.hpp"
#include "bettilab/ring_spec.hpp"
#include "bettilab/series.hpp"

#include <memory>
#include <mutex>
#include <unordered_map>

namespace bettilab {

struct CapExceeded : std::runtime_error {
    CapExceeded() : std::runtime_error("no dimension trial terminated within the degree cap") {}
};
struct NotASubideal : std::runtime_error {
    explicit NotASubideal(const std::string& w) : std::runtime_error(w) {}
};

/* Graded piece A_j of A = F_p[x]/I: representative monomials (the standard
 * monomials of degree j) plus the reduction of every candidate monomial
 * x_t * (representative of degree j-1) onto them. */
struct DegreeBasis {
    std::vector<Expo> reps;                  // degrevlex-sorted (descending)
    std::map<Expo, std::vector<uint32_t>> candidateReduction; // candidate -> coords over reps
    long long polyRank = 0;                  // rank of B_j (all monomials)

    size_t dim() const { return reps.size(); }
};

/* Cached graded structure of one presented algebra. Queries on a single
 * Algebra are safe from multiple threads; construction is degree-by-degree
 * under an internal mutex. The RingSpec is immutable after construction. */
class Algebra {
public:
    explicit Algebra(RingSpec spec);

    const RingSpec& spec() const { return spec_; }
    uint32_t p() const { return spec_.p; }
    int e() const { return spec_.e; }

    const DegreeBasis& degree_basis(int j) const;
    long long dim_at(int j) const { return static_cast<long long>(degree_basis(j).dim()); }

    // coordinates of an arbitrary monomial / form in A_deg over the reps
    std::vector<uint32_t> class_of_monomial(const Expo& m) const;
    std::vector<uint32_t> class_of(const HomogPoly& f) const;

    // multiplication by variable t (0-based): A_j -> A_{j+1}, column k = image of reps[k]
    const MatrixFp& var_mult(int t, int j) const;

    // multiplication of a coordinate vector in A_j by a monomial
    std::vector<uint32_t> mono_mult(const Expo& m, int j, const std::vector<uint32_t>& v) const;

    // echelon of the degree-j piece I_j of the defining ideal, over monomial coords
    const Echelon& ideal_piece(int j) const;

    // socle certificate: smallest j with A_j = 0 if one exists below the probe bound
    std::optional<int> vanishing_degree(int probeLimit) const;

private:
    void ensure_degree(int j) const;
    std::vector<uint32_t> class_of_monomial_level(const Expo& m, int deg) const;

    RingSpec spec_;
    mutable std::mutex mu_;
    mutable std::vector<std::unique_ptr<DegreeBasis>> levels_; // stable addresses
    mutable std::vector<std::unique_ptr<Echelon>> idealPieces_;
    mutable std::map<std::pair<int, int>, std::unique_ptr<MatrixFp>> varMult_;
    mutable std::mutex multMu_;
};

using AlgebraPtr = std::shared_ptr<Algebra>;
AlgebraPtr make_algebra(RingSpec spec);

// ---- ring-level operations ----

HilbertData hilbert(const Algebra& A, int jmax, std::optional<int> capHint = std::nullopt);

Tagged<bool> is_regular_sequence(int e, const std::vector<HomogPoly>& forms, int trials = 5,
                                 uint64_t seed = 0x5eed);

Tagged<int> krull_dimension(const Algebra& A, int trials = 5, std::optional<int> cap = std::nullopt,
                            uint64_t seed = 0x5eed);

RingSpec quadratic_part(const RingSpec& R);

struct InvariantOptions {
    int trials = 5;
    std::optional<int> cap;
    uint64_t seed = 0x5eed;
    int oracleImaxPad = 1; // extra steps past the projective-dimension bound
};

InvariantReport invariants(const RingSpec& R, const std::optional<RingSpec>& Stilde = std::nullopt,
                           const InvariantOptions& opt = {});

bool min_multiplicity_check(int e, const std::vector<HomogPoly>& quadrics, int trials = 5,
                            uint64_t seed = 0x5eed);

struct LoewyCheck {
    long long lhs = 0, rhs = 0;
    bool holds = false;
};
LoewyCheck loewy_bound_check(const RingSpec& R, const std::vector<HomogPoly>& L,
                             const InvariantOptions& opt = {});

// linear elimination: quotient by the degree-1 part of an ideal, substituting
// pivot variables; returns the smaller presentation and the surviving gens
struct Eliminated {
    RingSpec ring; // surviving variables, substituted generators of degree >= 2
    int removedLinear = 0;
};
Eliminated eliminate_linear_part(const RingSpec& S);

// default degree cap of the randomized dimension probe
int default_cap(const RingSpec& spec);

// exact Hilbert series numerator/(1-t)^dim as a RationalSeries; throws when
// the stabilized numerator cannot be certified within the probed range
RationalSeries hilbert_series(const RingSpec& spec, int jmax = -1);

/* Convenience wrapper for the componentwise-linear Poincare formula: computes
 * the jump set J = { j : I_j != B_1 I_{j-1} }, the ranks n_{j-1}, and the
 * Hilbert series of the B/(B I_j), then evaluates the closed expression. */
RationalSeries componentwise_linear_auto(const RingSpec& idealSpec);

} // namespace bettilab

#endif
