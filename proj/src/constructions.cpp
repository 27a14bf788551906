#include "bettilab/constructions.hpp"

#include "bettilab/graded_algebra.hpp"

#include <algorithm>
#include <sstream>

namespace bettilab {

AdequateMatrix staircase_matrix(int s, int h, int e)
{
    if (s < 1 || h < 1 || h > e)
        throw BadParameters("staircase_matrix: need s >= 1 and 1 <= h <= e");
    AdequateMatrix U;
    U.s = s;
    U.h = h;
    U.e = e;
    U.entries.assign(static_cast<size_t>(s) * static_cast<size_t>(s + h - 1), 0);
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s + h - 1; ++j) {
            int n = j - i + 1;
            if (n >= 1 && n <= h)
                U.entries[static_cast<size_t>(i * (s + h - 1) + j)] = n;
        }
    return U;
}

AdequacyReport validate_adequate(const AdequateMatrix& U)
{
    AdequacyReport rep;
    auto cellname = [&](int i, int j) {
        return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
    };
    if (U.s < 1 || U.h < 1 ||
        U.entries.size() != static_cast<size_t>(U.s) * static_cast<size_t>(U.cols())) {
        rep.violations.push_back("matrix is not s x (s+h-1)");
        return rep;
    }
    for (int i = 0; i < U.s; ++i)
        for (int j = 0; j < U.cols(); ++j) {
            int v = U.at(i, j);
            int n = j - i + 1;
            bool onBand = n >= 1 && n <= U.h;
            if (v < 0 || v > U.e) {
                rep.violations.push_back("entry " + cellname(i, j) + " is not a variable index");
                continue;
            }
            if (onBand) {
                if (v == 0)
                    rep.violations.push_back("band entry " + cellname(i, j) +
                                             " is zero (diagonal must lie in x)");
                else if (v != n)
                    rep.violations.push_back("band entry " + cellname(i, j) + " carries x" +
                                             std::to_string(v) + " instead of x" +
                                             std::to_string(n));
            } else if (v >= 1 && v <= U.h) {
                rep.violations.push_back("x" + std::to_string(v) + " appears off its diagonal at " +
                                         cellname(i, j));
            }
        }
    // variables outside x_1..x_h occur at most once in the whole matrix
    std::map<int, int> count;
    for (int v : U.entries)
        if (v > U.h)
            ++count[v];
    for (auto& [v, c] : count)
        if (c > 1)
            rep.violations.push_back("x" + std::to_string(v) + " occurs " + std::to_string(c) +
                                     " times (at most once allowed outside x1..xh)");
    rep.valid = rep.violations.empty();
    return rep;
}

std::vector<HomogPoly> minors_ideal(const AdequateMatrix& U, uint32_t p)
{
    int s = U.s, n = U.cols();
    if (s > n)
        throw BadParameters("minors_ideal: more rows than columns");
    std::vector<HomogPoly> out;
    std::vector<int> cols(static_cast<size_t>(s));
    // lexicographic column subsets
    auto emit = [&]() {
        // Laplace expansion over permutations (s is small)
        HomogPoly minor(p, s);
        std::vector<int> perm(static_cast<size_t>(s));
        for (int i = 0; i < s; ++i)
            perm[static_cast<size_t>(i)] = i;
        do {
            int sign = 1;
            for (int i = 0; i < s; ++i)
                for (int k = i + 1; k < s; ++k)
                    if (perm[static_cast<size_t>(i)] > perm[static_cast<size_t>(k)])
                        sign = -sign;
            Expo mono(static_cast<size_t>(U.e), 0);
            bool zero = false;
            for (int i = 0; i < s && !zero; ++i) {
                int v = U.at(i, cols[static_cast<size_t>(perm[static_cast<size_t>(i)])]);
                if (v == 0)
                    zero = true;
                else
                    ++mono[static_cast<size_t>(v - 1)];
            }
            if (!zero)
                minor.add_term(std::move(mono), sign > 0 ? 1u : p - 1);
        } while (std::next_permutation(perm.begin(), perm.end()));
        if (!minor.is_zero() &&
            std::find(out.begin(), out.end(), minor) == out.end())
            out.push_back(std::move(minor));
    };
    // iterate over all column subsets of size s in lexicographic order
    for (int i = 0; i < s; ++i)
        cols[static_cast<size_t>(i)] = i;
    while (true) {
        emit();
        int i = s - 1;
        while (i >= 0 && cols[static_cast<size_t>(i)] == n - s + i)
            --i;
        if (i < 0)
            break;
        ++cols[static_cast<size_t>(i)];
        for (int k = i + 1; k < s; ++k)
            cols[static_cast<size_t>(k)] = cols[static_cast<size_t>(k - 1)] + 1;
    }
    return out;
}

namespace {

std::vector<HomogPoly> monomial_power_gens(uint32_t p, int e, int deg,
                                           const std::vector<int>& varSubset)
{
    // all monomials of degree `deg` in the chosen variables (1-based indices)
    std::vector<HomogPoly> out;
    std::vector<Expo> ms = monomials_of_degree(static_cast<int>(varSubset.size()), deg);
    for (auto& m : ms) {
        Expo full(static_cast<size_t>(e), 0);
        for (size_t i = 0; i < varSubset.size(); ++i)
            full[static_cast<size_t>(varSubset[i] - 1)] = m[i];
        out.push_back(HomogPoly::monomial(p, std::move(full)));
    }
    return out;
}

} // namespace

RingSpec golod_quotient_ideal(const AdequateMatrix& U, int e, uint32_t p)
{
    AdequacyReport rep = validate_adequate(U);
    if (!rep.valid)
        throw BadParameters("golod_quotient_ideal: matrix is not adequate: " + rep.violations[0]);
    if (U.h > e)
        throw BadParameters("golod_quotient_ideal: h exceeds the variable count");
    std::vector<HomogPoly> gens = minors_ideal(U, p);
    std::vector<int> allVars;
    for (int i = 1; i <= e; ++i)
        allVars.push_back(i);
    for (auto& m : monomial_power_gens(p, e, U.s + 1, allVars))
        gens.push_back(m);
    RingSpec out(p, generic_var_names(static_cast<size_t>(e)), std::move(gens),
                 "golod_s" + std::to_string(U.s) + "_h" + std::to_string(U.h) + "_e" +
                     std::to_string(e));
    return out;
}

OptimalFamily optimal_family(int d, int c, int q, int a, uint32_t p)
{
    if (!(d >= c))
        throw BadParameters("optimal_family: requires d >= c");
    if (!(c >= q && q >= 0))
        throw BadParameters("optimal_family: requires c >= q >= 0");
    if (!(a >= 0))
        throw BadParameters("optimal_family: requires a >= 0");
    if (!(a <= c))
        throw BadParameters("optimal_family: requires a <= c (the displayed ideals index "
                            "generators up to c)");
    OptimalFamily fam;
    fam.d = d;
    fam.c = c;
    fam.q = q;
    fam.a = a;
    int e = (q > a) ? d - q + a : d;
    fam.e = e;
    int nT = d - e; // = q - a in the q > a branch, 0 otherwise

    std::vector<std::string> vars;
    for (int i = 1; i <= nT; ++i)
        vars.push_back("t" + std::to_string(i));
    for (int i = 1; i <= e; ++i)
        vars.push_back("u" + std::to_string(i));

    auto tvar = [&](int i) { return i; };        // 1-based position of t_i
    auto uvar = [&](int i) { return nT + i; };   // 1-based position of u_i

    auto power = [&](int var1b, int k) {
        Expo m(static_cast<size_t>(d), 0);
        m[static_cast<size_t>(var1b - 1)] = k;
        return HomogPoly::monomial(p, std::move(m));
    };

    std::vector<HomogPoly> igens;
    std::vector<HomogPoly> jgens;
    int hCap = std::min(q, e);
    if (q > a) {
        // I = (t_1^2..t_{q-a}^2) + (u_1^2..u_a^2) + (c-q fourth powers of u's)
        for (int i = 1; i <= q - a; ++i)
            igens.push_back(power(tvar(i), 2));
        for (int i = 1; i <= a; ++i)
            igens.push_back(power(uvar(i), 2));
        // the displayed indices q+1..c overflow the u-range when c > e;
        // fall back to the top c-q indices, which never collide with u_1..u_a
        int first4 = (c <= e) ? q + 1 : e - (c - q) + 1;
        for (int i = first4; i <= first4 + (c - q) - 1; ++i)
            igens.push_back(power(uvar(i), 4));
        // Jtilde = (t's) + (u_1..u_hCap)^2 + (u_1..u_e)^3
        for (int i = 1; i <= q - a; ++i)
            jgens.push_back(power(tvar(i), 1));
    } else {
        // I = (u_1^2..u_q^2) + (u_{q+1}^3..u_a^3) + (u_{a+1}^4..u_c^4)
        for (int i = 1; i <= q; ++i)
            igens.push_back(power(uvar(i), 2));
        for (int i = q + 1; i <= a; ++i)
            igens.push_back(power(uvar(i), 3));
        for (int i = a + 1; i <= c; ++i)
            igens.push_back(power(uvar(i), 4));
    }
    // quadric block (u_1..u_hCap)^2 and cubic block (u_1..u_e)^3
    std::vector<int> uFirstH, uAll;
    for (int i = 1; i <= hCap; ++i)
        uFirstH.push_back(uvar(i));
    for (int i = 1; i <= e; ++i)
        uAll.push_back(uvar(i));
    for (auto& g : monomial_power_gens(p, d, 2, uFirstH))
        jgens.push_back(g);
    for (auto& g : monomial_power_gens(p, d, 3, uAll))
        jgens.push_back(g);

    std::ostringstream rn, sn;
    rn << "optimal_R_d" << d << "c" << c << "q" << q << "a" << a;
    sn << "optimal_S_d" << d << "c" << c << "q" << q << "a" << a;
    fam.R = RingSpec(p, vars, std::move(igens), rn.str());
    fam.Stilde = RingSpec(p, vars, std::move(jgens), sn.str());
    fam.U = (hCap >= 1) ? staircase_matrix(2, hCap, e) : AdequateMatrix{};
    fam.predictedGn = std::max(c - q - 1, 0);

    // membership I <= Jtilde is part of the contract
    Algebra AS(fam.Stilde);
    for (auto& g : fam.R.gens) {
        std::vector<uint32_t> cl = AS.class_of(g);
        for (uint32_t v : cl)
            if (v != 0)
                throw std::logic_error("optimal_family: containment I <= Jtilde failed");
    }
    return fam;
}

bool sample_point_passes(int e, const std::vector<HomogPoly>& forms, int q,
                         const std::vector<uint32_t>& a, int regTrials, uint64_t seed)
{
    if (q == 0)
        return true;
    uint32_t p = forms.front().p();
    std::vector<HomogPoly> moved;
    const HomogPoly& last = forms.back();
    for (int i = 0; i < q; ++i) {
        HomogPoly f = forms[static_cast<size_t>(i)];
        uint32_t ai = a[static_cast<size_t>(i)] % p;
        if (ai != 0)
            for (auto& [m, cf] : last.terms())
                f.add_term(m, mul_mod(p - ai, cf, p));
        if (f.is_zero())
            return false;
        moved.push_back(std::move(f));
    }
    return min_multiplicity_check(e, moved, regTrials, seed);
}

SampleReport sample_regular_point(int e, const std::vector<HomogPoly>& forms, int q, uint64_t seed,
                                  int trials, int regTrials)
{
    if (forms.size() < 2)
        throw BadParameters("sample_regular_point: need r >= 2 forms");
    if (q >= static_cast<int>(forms.size()))
        throw BadParameters("sample_regular_point: need q < r");
    uint32_t p = forms.front().p();
    SampleReport rep;
    for (int t = 0; t < trials; ++t) {
        SplitMix64 rng(seed + static_cast<uint64_t>(t));
        SamplePoint pt;
        for (size_t i = 0; i + 1 < forms.size(); ++i)
            pt.a.push_back(rng.below(p));
        pt.passed = sample_point_passes(e, forms, q, pt.a, regTrials, seed + 1000003 * (t + 1));
        if (pt.passed)
            ++rep.passes;
        rep.samples.push_back(std::move(pt));
    }
    rep.ratio = trials > 0 ? static_cast<double>(rep.passes) / trials : 1.0;
    return rep;
}

AdequateMatrix delpezzo_matrix(int which)
{
    AdequateMatrix U;
    U.s = 2;
    U.h = 2;
    switch (which) {
    case 0:
        U.entries = {1, 2, 3, 4, 1, 2};
        U.e = 4;
        break;
    case 1:
        U.entries = {1, 2, 3, 4, 5, 2};
        U.e = 5;
        break;
    case 2:
        U.entries = {1, 2, 3, 4, 5, 6};
        U.e = 6;
        break;
    default:
        throw BadParameters("delpezzo_matrix: index must be 0, 1 or 2");
    }
    return U;
}

} // namespace bettilab
