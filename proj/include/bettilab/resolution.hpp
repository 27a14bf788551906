#ifndef BETTILAB_RESOLUTION_HPP
#define BETTILAB_RESOLUTION_HPP

#include "bettilab/graded_algebra.hpp"

#include <json.hpp>

namespace bettilab {

/* Truncated graded Betti table beta_{i,j}; absent entry = 0.
 * completeColumns[i] certifies that no beta_{i,j} with j > jmax exists. */
struct BettiTable {
    std::map<std::pair<int, int>, long long> entries;
    int imax = 0;
    int jmax = 0;
    std::vector<bool> completeColumns;
    bool truncationTight = false; // a generator appeared at degree jmax

    long long at(int i, int j) const
    {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
    long long total(int i) const
    {
        long long t = 0;
        for (auto& [k, v] : entries)
            if (k.first == i)
                t += v;
        return t;
    }
    bool all_complete() const
    {
        for (bool b : completeColumns)
            if (!b)
                return false;
        return true;
    }
    int max_nonzero_i() const
    {
        int m = -1;
        for (auto& [k, v] : entries)
            m = std::max(m, k.first);
        return m;
    }

    std::string triangle() const; // Macaulay-style display
    nlohmann::json to_json() const;
};

// default truncation policy for the degree bound
int default_jmax(const RingSpec& A, const std::vector<HomogPoly>& moduleGens, int imax);

/* Minimal graded free resolution of the cyclic module A/J' by linear algebra
 * per degree. moduleGens generate J' (degree >= 1 allowed; k is A/(x1..xe)). */
BettiTable minimal_betti_table(const Algebra& A, const std::vector<HomogPoly>& moduleGens, int imax,
                               int jmax = -1);

// the module "k": J' = (x1, ..., xe)
std::vector<HomogPoly> residue_field_gens(const RingSpec& A);

struct TruncatedPoincare {
    BiPoly poly; // sum beta_{i,j} y^j z^i
    int imax = 0;
    int jmax = 0;
    bool complete = false;
};
TruncatedPoincare poincare_truncated(const BettiTable& t);

bool is_koszul_truncated(const Algebra& A, int imax);

bool is_golod_truncated(const Algebra& A, int imax, int jmax);

// resolves B/J over the polynomial ring on the same variables (full finite
// table; raises jmax internally until every column is certified complete)
BettiTable polynomial_ring_table(const RingSpec& A, const std::vector<HomogPoly>& idealGens,
                                 int extraImax = 0);

// P^B_J of the ideal J as a module, from the table of B/J: beta_{i,j}(J) = beta_{i+1,j}(B/J)
BiPoly ideal_poincare(const BettiTable& cyclicTable);

// total (y = 1) Poincare polynomial sum_i beta_i z^i of a finite table
BiPoly total_poincare(const BettiTable& t);

} // namespace bettilab

#endif
