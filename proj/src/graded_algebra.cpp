#include "bettilab/graded_algebra.hpp"

#include "bettilab/formulas.hpp"
#include "bettilab/resolution.hpp"

#include <algorithm>
#include <numeric>

namespace bettilab {

RingSpec::RingSpec(uint32_t prime, std::vector<std::string> variables,
                   std::vector<HomogPoly> generators, std::string ringName)
    : p(prime), e(static_cast<int>(variables.size())), vars(std::move(variables)),
      gens(std::move(generators)), name(std::move(ringName))
{
    if (!is_prime_u32(p) || p >= (1u << 31))
        throw NotPrime(p);
    for (auto& g : gens) {
        if (g.p() != p)
            throw std::invalid_argument("RingSpec: generator modulus mismatch");
        for (auto& [m, c] : g.terms())
            if (m.size() != static_cast<size_t>(e))
                throw std::invalid_argument("RingSpec: generator variable count mismatch");
    }
    // drop zero generators (an explicitly empty list is the zero ideal)
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const HomogPoly& g) { return g.is_zero(); }),
               gens.end());
}

std::string HomogPoly::to_string(const std::vector<std::string>& vars) const
{
    if (terms_.empty())
        return "0";
    std::string out;
    bool first = true;
    // largest monomial first
    std::vector<const Expo*> keys;
    for (auto& [m, c] : terms_)
        keys.push_back(&m);
    std::sort(keys.begin(), keys.end(),
              [](const Expo* a, const Expo* b) { return degrevlex_greater(*a, *b); });
    for (const Expo* m : keys) {
        uint32_t c = terms_.at(*m);
        if (!first)
            out += " + ";
        first = false;
        if (c != 1 || total_degree(*m) == 0) {
            out += std::to_string(c);
            if (total_degree(*m) > 0)
                out += "*";
        }
        if (total_degree(*m) > 0)
            out += mono_to_string(*m, vars);
    }
    return out;
}

std::string RingSpec::to_text() const
{
    std::string out = "ring " + name + " {\n  prime = " + std::to_string(p) + ";\n  vars = ";
    for (int i = 0; i < e; ++i) {
        if (i)
            out += ", ";
        out += vars[static_cast<size_t>(i)];
    }
    out += ";\n  ideal = ";
    if (gens.empty())
        out += "0";
    for (size_t i = 0; i < gens.size(); ++i) {
        if (i)
            out += ",\n          ";
        out += gens[i].to_string(vars);
    }
    out += ";\n}\n";
    return out;
}

// ------------------------------------------------------------------
// Algebra: incremental graded bases
// ------------------------------------------------------------------

Algebra::Algebra(RingSpec spec) : spec_(std::move(spec)) {}

AlgebraPtr make_algebra(RingSpec spec) { return std::make_shared<Algebra>(std::move(spec)); }

void Algebra::ensure_degree(int j) const
{
    if (static_cast<size_t>(j) < levels_.size())
        return;
    // A = 0 when the ideal contains a unit
    bool trivial = false;
    for (auto& g : spec_.gens)
        if (g.degree() == 0)
            trivial = true;

    for (int d = static_cast<int>(levels_.size()); d <= j; ++d) {
        auto lvp = std::make_unique<DegreeBasis>();
        DegreeBasis& lv = *lvp;
        lv.polyRank = static_cast<long long>(binomial(d + spec_.e - 1, spec_.e - 1));
        if (trivial) {
            levels_.push_back(std::move(lvp));
            continue;
        }
        if (d == 0) {
            lv.reps.push_back(Expo(static_cast<size_t>(spec_.e), 0));
            levels_.push_back(std::move(lvp));
            continue;
        }
        const DegreeBasis& prev = *levels_[static_cast<size_t>(d - 1)];
        // candidate monomials x_t * (rep of degree d-1), deduped, descending
        std::map<Expo, size_t> candIndex;
        std::vector<Expo> cands;
        for (int t = 0; t < spec_.e; ++t)
            for (auto& m : prev.reps) {
                Expo c = m;
                ++c[static_cast<size_t>(t)];
                candIndex.emplace(std::move(c), 0);
            }
        cands.reserve(candIndex.size());
        for (auto& [m, idx] : candIndex)
            cands.push_back(m);
        std::sort(cands.begin(), cands.end(), degrevlex_greater);
        for (size_t i = 0; i < cands.size(); ++i)
            candIndex[cands[i]] = i;
        size_t nc = cands.size();

        Echelon E(spec_.p, nc);
        // commutation relations x_s*(x_t m) - x_t*(x_s m), m a rep of degree d-2
        if (d >= 2) {
            const DegreeBasis& prev2 = *levels_[static_cast<size_t>(d - 2)];
            for (int s = 0; s < spec_.e; ++s)
                for (int t = s + 1; t < spec_.e; ++t)
                    for (auto& m : prev2.reps) {
                        std::vector<uint32_t> row(nc, 0);
                        Expo mt = m;
                        ++mt[static_cast<size_t>(t)];
                        const std::vector<uint32_t>& clt = prev.candidateReduction.at(mt);
                        for (size_t r = 0; r < clt.size(); ++r) {
                            if (clt[r] == 0)
                                continue;
                            Expo sym = prev.reps[r];
                            ++sym[static_cast<size_t>(s)];
                            size_t col = candIndex.at(sym);
                            row[col] = add_mod(row[col], clt[r], spec_.p);
                        }
                        Expo ms = m;
                        ++ms[static_cast<size_t>(s)];
                        const std::vector<uint32_t>& cls = prev.candidateReduction.at(ms);
                        for (size_t r = 0; r < cls.size(); ++r) {
                            if (cls[r] == 0)
                                continue;
                            Expo sym = prev.reps[r];
                            ++sym[static_cast<size_t>(t)];
                            size_t col = candIndex.at(sym);
                            row[col] = sub_mod(row[col], cls[r], spec_.p);
                        }
                        E.insert(std::move(row));
                    }
        }
        // generators of the ideal in this degree
        for (auto& g : spec_.gens) {
            if (g.degree() != d)
                continue;
            std::vector<uint32_t> row(nc, 0);
            for (auto& [mu, cf] : g.terms()) {
                int t = 0;
                while (mu[static_cast<size_t>(t)] == 0)
                    ++t;
                Expo rest = mu;
                --rest[static_cast<size_t>(t)];
                std::vector<uint32_t> cl = class_of_monomial_level(rest, d - 1);
                for (size_t r = 0; r < cl.size(); ++r) {
                    if (cl[r] == 0)
                        continue;
                    Expo sym = prev.reps[r];
                    ++sym[static_cast<size_t>(t)];
                    size_t col = candIndex.at(sym);
                    row[col] = add_mod(row[col], mul_mod(cf, cl[r], spec_.p), spec_.p);
                }
            }
            E.insert(std::move(row));
        }

        // representatives = non-pivot candidates; reductions from the echelon
        std::vector<bool> isPivot(nc, false);
        for (size_t c : E.pivots())
            isPivot[c] = true;
        std::vector<size_t> repPos(nc, SIZE_MAX);
        for (size_t i = 0; i < nc; ++i)
            if (!isPivot[i]) {
                repPos[i] = lv.reps.size();
                lv.reps.push_back(cands[i]);
            }
        size_t nreps = lv.reps.size();
        for (size_t i = 0; i < nc; ++i) {
            std::vector<uint32_t> red(nreps, 0);
            if (!isPivot[i]) {
                red[repPos[i]] = 1;
            } else {
                // locate the echelon row with this pivot
                for (size_t r = 0; r < E.pivots().size(); ++r) {
                    if (E.pivots()[r] != i)
                        continue;
                    const std::vector<uint32_t>& row = E.rows()[r];
                    for (size_t cidx = 0; cidx < nc; ++cidx) {
                        if (cidx == i || row[cidx] == 0)
                            continue;
                        red[repPos[cidx]] = spec_.p - row[cidx];
                    }
                    break;
                }
            }
            lv.candidateReduction.emplace(cands[i], std::move(red));
        }
        levels_.push_back(std::move(lvp));
    }
}

const DegreeBasis& Algebra::degree_basis(int j) const
{
    if (j < 0)
        throw std::invalid_argument("degree_basis: negative degree");
    std::lock_guard<std::mutex> lock(mu_);
    ensure_degree(j);
    return *levels_[static_cast<size_t>(j)];
}

std::vector<uint32_t> Algebra::class_of_monomial_level(const Expo& m, int deg) const
{
    // internal: levels_ through deg already built, mu_ held by caller
    const DegreeBasis& lv = *levels_[static_cast<size_t>(deg)];
    if (deg == 0)
        return std::vector<uint32_t>(lv.dim(), lv.dim() ? 1 : 0);
    auto direct = lv.candidateReduction.find(m);
    if (direct != lv.candidateReduction.end())
        return direct->second;
    int t = 0;
    while (m[static_cast<size_t>(t)] == 0)
        ++t;
    Expo rest = m;
    --rest[static_cast<size_t>(t)];
    std::vector<uint32_t> sub = class_of_monomial_level(rest, deg - 1);
    std::vector<uint32_t> out(lv.dim(), 0);
    const DegreeBasis& prev = *levels_[static_cast<size_t>(deg - 1)];
    for (size_t r = 0; r < sub.size(); ++r) {
        if (sub[r] == 0)
            continue;
        Expo cand = prev.reps[r];
        ++cand[static_cast<size_t>(t)];
        const std::vector<uint32_t>& red = lv.candidateReduction.at(cand);
        for (size_t k = 0; k < out.size(); ++k)
            if (red[k] != 0)
                out[k] = add_mod(out[k], mul_mod(sub[r], red[k], spec_.p), spec_.p);
    }
    return out;
}

std::vector<uint32_t> Algebra::class_of_monomial(const Expo& m) const
{
    int d = total_degree(m);
    std::lock_guard<std::mutex> lock(mu_);
    ensure_degree(d);
    return class_of_monomial_level(m, d);
}

std::vector<uint32_t> Algebra::class_of(const HomogPoly& f) const
{
    int d = f.degree();
    std::lock_guard<std::mutex> lock(mu_);
    ensure_degree(d);
    std::vector<uint32_t> out(levels_[static_cast<size_t>(d)]->dim(), 0);
    for (auto& [m, c] : f.terms()) {
        std::vector<uint32_t> cl = class_of_monomial_level(m, d);
        for (size_t k = 0; k < out.size(); ++k)
            if (cl[k] != 0)
                out[k] = add_mod(out[k], mul_mod(c, cl[k], spec_.p), spec_.p);
    }
    return out;
}

const MatrixFp& Algebra::var_mult(int t, int j) const
{
    {
        std::lock_guard<std::mutex> lock(multMu_);
        auto it = varMult_.find({t, j});
        if (it != varMult_.end())
            return *it->second;
    }
    const DegreeBasis& src = degree_basis(j);
    const DegreeBasis& dst = degree_basis(j + 1);
    auto M = std::make_unique<MatrixFp>(spec_.p, dst.dim(), src.dim());
    for (size_t k = 0; k < src.dim(); ++k) {
        Expo cand = src.reps[k];
        ++cand[static_cast<size_t>(t)];
        const std::vector<uint32_t>& red = dst.candidateReduction.at(cand);
        for (size_t r = 0; r < dst.dim(); ++r)
            if (red[r] != 0)
                M->set(r, k, red[r]);
    }
    std::lock_guard<std::mutex> lock(multMu_);
    auto [it, inserted] = varMult_.emplace(std::make_pair(t, j), std::move(M));
    return *it->second;
}

std::vector<uint32_t> Algebra::mono_mult(const Expo& m, int j, const std::vector<uint32_t>& v) const
{
    std::vector<uint32_t> cur = v;
    int deg = j;
    for (int t = 0; t < spec_.e; ++t)
        for (int rep = 0; rep < m[static_cast<size_t>(t)]; ++rep) {
            const MatrixFp& M = var_mult(t, deg);
            std::vector<uint32_t> next(M.rows(), 0);
            for (size_t c = 0; c < M.cols(); ++c) {
                if (cur[c] == 0)
                    continue;
                for (size_t r = 0; r < M.rows(); ++r) {
                    uint32_t a = M.at(r, c);
                    if (a != 0)
                        next[r] = add_mod(next[r], mul_mod(a, cur[c], spec_.p), spec_.p);
                }
            }
            cur = std::move(next);
            ++deg;
        }
    return cur;
}

const Echelon& Algebra::ideal_piece(int j) const
{
    std::lock_guard<std::mutex> lock(mu_);
    if (static_cast<size_t>(j) < idealPieces_.size() && idealPieces_[static_cast<size_t>(j)])
        return *idealPieces_[static_cast<size_t>(j)];
    if (static_cast<size_t>(j) >= idealPieces_.size())
        idealPieces_.resize(static_cast<size_t>(j) + 1);
    std::vector<Expo> monos = monomials_of_degree(spec_.e, j);
    std::map<Expo, size_t> idx;
    for (size_t i = 0; i < monos.size(); ++i)
        idx[monos[i]] = i;
    auto E = std::make_unique<Echelon>(spec_.p, monos.size());
    for (auto& g : spec_.gens) {
        if (g.degree() > j)
            continue;
        for (auto& m : monomials_of_degree(spec_.e, j - g.degree())) {
            std::vector<uint32_t> row(monos.size(), 0);
            for (auto& [gm, c] : g.terms())
                row[idx.at(mono_mul(m, gm))] = add_mod(row[idx.at(mono_mul(m, gm))], c, spec_.p);
            E->insert(std::move(row));
        }
    }
    idealPieces_[static_cast<size_t>(j)] = std::move(E);
    return *idealPieces_[static_cast<size_t>(j)];
}

std::optional<int> Algebra::vanishing_degree(int probeLimit) const
{
    for (int j = 0; j <= probeLimit; ++j)
        if (dim_at(j) == 0)
            return j;
    return std::nullopt;
}

// ------------------------------------------------------------------
// dimension and Hilbert machinery
// ------------------------------------------------------------------

int default_cap(const RingSpec& spec)
{
    int s = 0;
    for (auto& g : spec.gens)
        s += g.degree();
    return s + spec.e + 4;
}

namespace {

// Krull dimension of a monomial quotient: the largest coordinate subspace
// avoiding every generator's support.
int monomial_krull_dim(const RingSpec& spec)
{
    std::vector<uint32_t> supports;
    for (auto& g : spec.gens) {
        uint32_t s = 0;
        const Expo& m = g.terms().begin()->first;
        for (int i = 0; i < spec.e; ++i)
            if (m[static_cast<size_t>(i)] > 0)
                s |= 1u << i;
        supports.push_back(s);
    }
    int best = 0;
    for (uint32_t T = 0; T < (1u << spec.e); ++T) {
        bool ok = true;
        for (uint32_t s : supports)
            if ((s & ~T) == 0) { // support contained in T
                ok = false;
                break;
            }
        if (ok)
            best = std::max(best, __builtin_popcount(T));
    }
    return best;
}

HomogPoly random_linear_form(const RingSpec& spec, SplitMix64& rng)
{
    HomogPoly f(spec.p, 1);
    for (int t = 0; t < spec.e; ++t) {
        Expo m(static_cast<size_t>(spec.e), 0);
        m[static_cast<size_t>(t)] = 1;
        f.add_term(std::move(m), rng.below(spec.p));
    }
    return f;
}

bool hits_zero_by(const RingSpec& spec, int cap)
{
    Algebra A(spec);
    for (int j = 0; j <= cap; ++j)
        if (A.dim_at(j) == 0)
            return true;
    return false;
}

} // namespace

Tagged<int> krull_dimension(const Algebra& A, int trials, std::optional<int> cap, uint64_t seed)
{
    const RingSpec& spec = A.spec();
    if (spec.is_monomial_ideal())
        return {monomial_krull_dim(spec), Tag::Exact};
    int theCap = cap.value_or(default_cap(spec));
    // an observed vanishing degree is a proof of dimension zero
    if (A.vanishing_degree(theCap))
        return {0, Tag::Exact};
    std::map<int, int> votes;
    bool anyTerminated = false;
    for (int trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(seed + static_cast<uint64_t>(trial));
        for (int s = 1; s <= spec.e; ++s) {
            RingSpec cut = spec;
            for (int i = 0; i < s; ++i)
                cut.gens.push_back(random_linear_form(spec, rng));
            if (hits_zero_by(cut, theCap)) {
                ++votes[s];
                anyTerminated = true;
                break;
            }
        }
    }
    if (!anyTerminated)
        throw CapExceeded();
    int bestDim = -1, bestCount = -1;
    for (auto& [dim, count] : votes)
        if (count > bestCount || (count == bestCount && dim < bestDim)) {
            bestDim = dim;
            bestCount = count;
        }
    return {bestDim, Tag::Heuristic};
}

HilbertData hilbert(const Algebra& A, int jmax, std::optional<int> capHint)
{
    const RingSpec& spec = A.spec();
    HilbertData out;
    for (int j = 0; j <= jmax; ++j)
        out.values.push_back(A.dim_at(j));
    Tagged<int> dim;
    try {
        dim = krull_dimension(A, 5, capHint);
    } catch (const CapExceeded&) {
        out.exact = false;
        return out;
    }
    out.krullDim = dim.value;
    out.krullDimTag = dim.tag;
    // numerator by stabilization: (sum H_j t^j) * (1-t)^dim, top e+2 coefficients must vanish
    std::vector<long long> num = out.values;
    for (int k = 0; k < dim.value; ++k)
        for (int j = jmax; j >= 1; --j)
            num[static_cast<size_t>(j)] -= num[static_cast<size_t>(j - 1)];
    int window = spec.e + 2;
    bool stable = jmax + 1 > window;
    for (int j = jmax - window + 1; stable && j <= jmax; ++j)
        if (j >= 0 && num[static_cast<size_t>(j)] != 0)
            stable = false;
    if (stable) {
        while (!num.empty() && num.back() == 0)
            num.pop_back();
        long long mult = std::accumulate(num.begin(), num.end(), 0ll);
        out.numerator = num;
        out.multiplicity = mult;
        out.exact = dim.exact();
    }
    return out;
}

Tagged<bool> is_regular_sequence(int e, const std::vector<HomogPoly>& forms, int trials,
                                 uint64_t seed)
{
    if (forms.empty())
        return {true, Tag::Exact};
    uint32_t p = forms.front().p();
    int s = static_cast<int>(forms.size());
    for (auto& f : forms)
        if (f.is_zero())
            return {false, Tag::Exact};
    if (s > e)
        return {false, Tag::Exact};
    int D = 0;
    for (auto& f : forms)
        D += f.degree() - 1;
    RingSpec base(p, generic_var_names(static_cast<size_t>(e)), forms, "regtest");
    if (s == e) {
        Algebra A(base);
        return {A.dim_at(D + 1) == 0, Tag::Exact};
    }
    // prediction for the augmented (now Artinian) system:
    // prod (1 - t^{n_i}) * (1-t)^{e-s} / (1-t)^e = prod (1 - t^{n_i}) / (1-t)^s
    std::vector<long long> pred(static_cast<size_t>(D) + 2, 0);
    for (int j = 0; j <= D + 1; ++j)
        pred[static_cast<size_t>(j)] = static_cast<long long>(binomial(j + s - 1, s - 1));
    for (auto& f : forms)
        for (int j = D + 1; j >= f.degree(); --j)
            pred[static_cast<size_t>(j)] -= pred[static_cast<size_t>(j - f.degree())];
    bool allPass = true;
    for (int trial = 0; trial < trials; ++trial) {
        SplitMix64 rng(seed + static_cast<uint64_t>(trial));
        RingSpec aug = base;
        for (int i = 0; i < e - s; ++i)
            aug.gens.push_back(random_linear_form(base, rng));
        Algebra A(aug);
        bool pass = true;
        for (int j = 0; j <= D + 1; ++j) {
            long long v = A.dim_at(j);
            if (v < pred[static_cast<size_t>(j)])
                return {false, Tag::Exact}; // below the c.i. prediction: provably irregular
            if (j == D + 1 && v != 0)
                pass = false;
        }
        if (!pass)
            allPass = false;
    }
    return {allPass, Tag::Heuristic};
}

// ------------------------------------------------------------------
// quadratic part, invariants, bounds
// ------------------------------------------------------------------

RingSpec quadratic_part(const RingSpec& R)
{
    if (!R.minimal_presentation())
        throw std::invalid_argument("quadratic_part: spec is not a minimal presentation");
    std::vector<Expo> monos = monomials_of_degree(R.e, 2);
    std::map<Expo, size_t> idx;
    for (size_t i = 0; i < monos.size(); ++i)
        idx[monos[i]] = i;
    Echelon E(R.p, monos.size());
    for (auto& g : R.gens) {
        if (g.degree() != 2)
            continue;
        std::vector<uint32_t> row(monos.size(), 0);
        for (auto& [m, c] : g.terms())
            row[idx.at(m)] = c;
        E.insert(std::move(row));
    }
    std::vector<HomogPoly> quads;
    for (auto& row : E.rows()) {
        HomogPoly q(R.p, 2);
        for (size_t i = 0; i < row.size(); ++i)
            if (row[i] != 0)
                q.add_term(monos[i], row[i]);
        quads.push_back(std::move(q));
    }
    RingSpec out(R.p, R.vars, std::move(quads), R.name + "_quad");
    return out;
}

Eliminated eliminate_linear_part(const RingSpec& S)
{
    // echelon of the degree-1 piece over variable coordinates
    Echelon E(S.p, static_cast<size_t>(S.e));
    for (auto& g : S.gens) {
        if (g.degree() != 1)
            continue;
        std::vector<uint32_t> row(static_cast<size_t>(S.e), 0);
        for (auto& [m, c] : g.terms())
            for (int t = 0; t < S.e; ++t)
                if (m[static_cast<size_t>(t)] > 0)
                    row[static_cast<size_t>(t)] = c;
        E.insert(std::move(row));
    }
    std::vector<bool> isPivot(static_cast<size_t>(S.e), false);
    for (size_t c : E.pivots())
        isPivot[c] = true;
    std::vector<int> newIndex(static_cast<size_t>(S.e), -1);
    std::vector<std::string> keptVars;
    for (int t = 0; t < S.e; ++t)
        if (!isPivot[static_cast<size_t>(t)]) {
            newIndex[static_cast<size_t>(t)] = static_cast<int>(keptVars.size());
            keptVars.push_back(S.vars[static_cast<size_t>(t)]);
        }
    int eNew = static_cast<int>(keptVars.size());
    // substitution for pivot variable of echelon row r: x_piv = -sum(rest)
    std::map<int, HomogPoly> subst;
    for (size_t r = 0; r < E.pivots().size(); ++r) {
        HomogPoly lin(S.p, 1);
        const std::vector<uint32_t>& row = E.rows()[r];
        for (int t = 0; t < S.e; ++t) {
            if (static_cast<size_t>(t) == E.pivots()[r] || row[static_cast<size_t>(t)] == 0)
                continue;
            Expo m(static_cast<size_t>(eNew), 0);
            m[static_cast<size_t>(newIndex[static_cast<size_t>(t)])] = 1;
            lin.add_term(std::move(m), S.p - row[static_cast<size_t>(t)]);
        }
        subst.emplace(static_cast<int>(E.pivots()[r]), std::move(lin));
    }
    std::vector<HomogPoly> newGens;
    for (auto& g : S.gens) {
        if (g.degree() == 1)
            continue;
        HomogPoly acc(S.p, g.degree());
        for (auto& [m, c] : g.terms()) {
            // product over variables of the substituted images
            HomogPoly term(S.p, 0);
            term.add_term(Expo(static_cast<size_t>(eNew), 0), c);
            for (int t = 0; t < S.e; ++t)
                for (int rep = 0; rep < m[static_cast<size_t>(t)]; ++rep) {
                    if (isPivot[static_cast<size_t>(t)])
                        term = homog_mul(term, subst.at(t));
                    else {
                        Expo v(static_cast<size_t>(eNew), 0);
                        v[static_cast<size_t>(newIndex[static_cast<size_t>(t)])] = 1;
                        term = homog_mul(term, HomogPoly::monomial(S.p, std::move(v)));
                    }
                }
            for (auto& [mm, cc] : term.terms())
                acc.add_term(mm, cc);
        }
        if (!acc.is_zero())
            newGens.push_back(std::move(acc));
    }
    Eliminated out;
    out.removedLinear = static_cast<int>(E.rank());
    out.ring = RingSpec(S.p, std::move(keptVars), std::move(newGens), S.name + "_min");
    return out;
}

namespace {

// span of B_1 * (degree-(j-1) piece of the ideal of S), over monomial coords of degree j
Echelon span_b1_times(const Algebra& S, int j)
{
    std::vector<Expo> monos = monomials_of_degree(S.e(), j);
    std::map<Expo, size_t> idx;
    for (size_t i = 0; i < monos.size(); ++i)
        idx[monos[i]] = i;
    Echelon W(S.p(), monos.size());
    if (j < 1)
        return W;
    const Echelon& J = S.ideal_piece(j - 1);
    std::vector<Expo> monosPrev = monomials_of_degree(S.e(), j - 1);
    for (auto& row : J.rows()) {
        for (int t = 0; t < S.e(); ++t) {
            std::vector<uint32_t> nr(monos.size(), 0);
            for (size_t i = 0; i < row.size(); ++i) {
                if (row[i] == 0)
                    continue;
                Expo m = monosPrev[i];
                ++m[static_cast<size_t>(t)];
                nr[idx.at(m)] = add_mod(nr[idx.at(m)], row[i], S.p());
            }
            W.insert(std::move(nr));
        }
    }
    return W;
}

} // namespace

InvariantReport invariants(const RingSpec& R, const std::optional<RingSpec>& Stilde,
                           const InvariantOptions& opt)
{
    Algebra A(R);
    InvariantReport rep;
    rep.d = {R.e, Tag::Exact};
    Tagged<int> dimR = krull_dimension(A, opt.trials, opt.cap, opt.seed);
    rep.c = {R.e - dimR.value, dimR.tag};
    RingSpec quad = quadratic_part(R);
    Algebra Aq(quad);
    Tagged<int> dimQ = krull_dimension(Aq, opt.trials, opt.cap, opt.seed);
    rep.q = {R.e - dimQ.value, dimQ.tag};
    // rel R: minimal generator count of I
    int maxdeg = R.max_gen_degree();
    long long rel = 0;
    for (int j = 1; j <= maxdeg; ++j) {
        const Echelon& Ij = A.ideal_piece(j);
        Echelon W = span_b1_times(A, j);
        rel += static_cast<long long>(Ij.rank()) - static_cast<long long>(W.rank());
    }
    rep.r = {static_cast<int>(rel), Tag::Exact};
    if (!Stilde)
        return rep;

    const RingSpec& St = *Stilde;
    if (St.p != R.p || St.e != R.e)
        throw NotASubideal("module spec lives over a different polynomial ring");
    Algebra AS(St);
    for (auto& g : R.gens) {
        std::vector<uint32_t> cl = AS.class_of(g);
        for (uint32_t v : cl)
            if (v != 0)
                throw NotASubideal("generator " + g.to_string(R.vars) + " is not in the module ideal");
    }
    // e(S) = edim of P/Jtilde
    const Echelon& J1 = AS.ideal_piece(1);
    int eS = R.e - static_cast<int>(J1.rank());
    rep.eS = Tagged<int>{eS, Tag::Exact};
    // a(phi) = sum_j rank I_j - rank(I_j  intersect  (B_1 Jtilde)_j)
    long long a = 0;
    for (int j = 1; j <= maxdeg; ++j) {
        const Echelon& Ij = A.ideal_piece(j);
        Echelon W = span_b1_times(AS, j);
        size_t unionRank = span_union_rank(Ij, W);
        size_t interRank = Ij.rank() + W.rank() - unionRank;
        a += static_cast<long long>(Ij.rank()) - static_cast<long long>(interRank);
    }
    rep.aPhi = Tagged<int>{static_cast<int>(a), Tag::Exact};
    // m(S) from the oracle over the minimal presentation Q of S
    Eliminated elim = eliminate_linear_part(St);
    BettiTable t = polynomial_ring_table(
        RingSpec(elim.ring.p, elim.ring.vars, {}, elim.ring.name + "_poly"), elim.ring.gens,
        opt.oracleImaxPad);
    BiPoly T = total_poincare(t); // sum beta_i(Q/J) z^i
    // z^2 P^Q_J - 1 = z*T - z - 1
    BiPoly zT = T.shifted(0, 1);
    zT.add_term(0, 1, Int(-1));
    zT.add_term(0, 0, Int(-1));
    int m = root_multiplicity(zT, -1);
    rep.mS = Tagged<int>{m, t.all_complete() ? Tag::Exact : Tag::Heuristic};
    return rep;
}

bool min_multiplicity_check(int e, const std::vector<HomogPoly>& quadrics, int trials,
                            uint64_t seed)
{
    if (quadrics.empty())
        return true;
    for (auto& q : quadrics)
        if (q.degree() != 2)
            throw std::invalid_argument("min_multiplicity_check: forms must be quadrics");
    if (static_cast<int>(quadrics.size()) > e)
        return false;
    // linear independence
    std::vector<Expo> monos = monomials_of_degree(e, 2);
    std::map<Expo, size_t> idx;
    for (size_t i = 0; i < monos.size(); ++i)
        idx[monos[i]] = i;
    Echelon E(quadrics.front().p(), monos.size());
    for (auto& q : quadrics) {
        std::vector<uint32_t> row(monos.size(), 0);
        for (auto& [m, c] : q.terms())
            row[idx.at(m)] = c;
        E.insert(std::move(row));
    }
    if (E.rank() != quadrics.size())
        return false;
    return is_regular_sequence(e, quadrics, trials, seed).value;
}

RationalSeries hilbert_series(const RingSpec& spec, int jmax)
{
    if (jmax < 0)
        jmax = default_cap(spec) + 2 * spec.e + 4;
    Algebra A(spec);
    HilbertData h = hilbert(A, jmax);
    if (!h.numerator || !h.krullDim)
        throw std::runtime_error("hilbert_series: numerator did not stabilize for " + spec.name);
    BiPoly num;
    for (size_t i = 0; i < h.numerator->size(); ++i)
        num.add_term(0, static_cast<int>(i), Int((*h.numerator)[i]));
    return RationalSeries(num, BiPoly::one_plus(Int(-1), 0, 1).pow(*h.krullDim));
}

RationalSeries componentwise_linear_auto(const RingSpec& idealSpec)
{
    const RingSpec& S = idealSpec;
    if (S.gens.empty())
        return RationalSeries();
    Algebra A(S);
    int maxdeg = S.max_gen_degree();
    std::vector<ComponentData> data;
    for (int j = 1; j <= maxdeg; ++j) {
        const Echelon& Ij = A.ideal_piece(j);
        Echelon W = span_b1_times(A, j);
        long long nj = static_cast<long long>(Ij.rank());
        if (nj == static_cast<long long>(W.rank()))
            continue; // j not in the jump set
        ComponentData cd;
        cd.j = j;
        cd.nPrev = static_cast<long long>(A.ideal_piece(j - 1).rank());
        // B * I_{j-1} and B * I_j as ring specs
        auto pieceSpec = [&](int deg, const std::string& suffix) {
            std::vector<HomogPoly> gens;
            std::vector<Expo> monos = monomials_of_degree(S.e, deg);
            for (auto& row : A.ideal_piece(deg).rows()) {
                HomogPoly g(S.p, deg);
                for (size_t i = 0; i < row.size(); ++i)
                    if (row[i] != 0)
                        g.add_term(monos[i], row[i]);
                gens.push_back(std::move(g));
            }
            return RingSpec(S.p, S.vars, std::move(gens), S.name + suffix);
        };
        cd.hPrev = hilbert_series(pieceSpec(j - 1, "_piece" + std::to_string(j - 1)));
        cd.hCur = hilbert_series(pieceSpec(j, "_piece" + std::to_string(j)));
        data.push_back(std::move(cd));
    }
    return componentwise_linear_series(S.e, data);
}

LoewyCheck loewy_bound_check(const RingSpec& R, const std::vector<HomogPoly>& L,
                             const InvariantOptions& opt)
{
    Algebra A(R);
    Tagged<int> dimR = krull_dimension(A, opt.trials, opt.cap, opt.seed);
    long long c = R.e - dimR.value;
    LoewyCheck out;
    out.lhs = c - 1;
    // L*_1: degree-1 members of L; their span
    Echelon L1(R.p, static_cast<size_t>(R.e));
    for (auto& f : L) {
        if (f.degree() != 1)
            continue;
        std::vector<uint32_t> row(static_cast<size_t>(R.e), 0);
        for (auto& [m, cf] : f.terms())
            for (int t = 0; t < R.e; ++t)
                if (m[static_cast<size_t>(t)] > 0)
                    row[static_cast<size_t>(t)] = cf;
        L1.insert(std::move(row));
    }
    // B_1 * L*_1 inside degree 2
    std::vector<Expo> monos = monomials_of_degree(R.e, 2);
    std::map<Expo, size_t> idx;
    for (size_t i = 0; i < monos.size(); ++i)
        idx[monos[i]] = i;
    Echelon W(R.p, monos.size());
    for (auto& row : L1.rows())
        for (int t = 0; t < R.e; ++t) {
            std::vector<uint32_t> nr(monos.size(), 0);
            for (int u = 0; u < R.e; ++u) {
                if (row[static_cast<size_t>(u)] == 0)
                    continue;
                Expo m(static_cast<size_t>(R.e), 0);
                ++m[static_cast<size_t>(t)];
                ++m[static_cast<size_t>(u)];
                nr[idx.at(m)] = add_mod(nr[idx.at(m)], row[static_cast<size_t>(u)], R.p);
            }
            W.insert(std::move(nr));
        }
    const Echelon& I2 = A.ideal_piece(2);
    size_t unionRank = span_union_rank(I2, W);
    size_t interRank = I2.rank() + W.rank() - unionRank;
    out.rhs = static_cast<long long>(L1.rank()) +
              (static_cast<long long>(I2.rank()) - static_cast<long long>(interRank));
    out.holds = out.lhs <= out.rhs;
    return out;
}

} // namespace bettilab
