#include "bettilab/resolution.hpp"

#include <algorithm>
#include <sstream>

namespace bettilab {

std::vector<HomogPoly> residue_field_gens(const RingSpec& A)
{
    std::vector<HomogPoly> out;
    for (int t = 0; t < A.e; ++t) {
        Expo m(static_cast<size_t>(A.e), 0);
        m[static_cast<size_t>(t)] = 1;
        out.push_back(HomogPoly::monomial(A.p, std::move(m)));
    }
    return out;
}

int default_jmax(const RingSpec& A, const std::vector<HomogPoly>& moduleGens, int imax)
{
    int dI = std::max(A.max_gen_degree(), 1);
    int dM = 1;
    for (auto& g : moduleGens)
        dM = std::max(dM, g.degree());
    return imax * dI + dM + 2;
}

namespace {

struct SliceIndex {
    std::vector<size_t> offset;
    size_t dim = 0;
};

SliceIndex slice_index(const Algebra& A, const std::vector<int>& degs, int j)
{
    SliceIndex s;
    s.offset.resize(degs.size());
    for (size_t t = 0; t < degs.size(); ++t) {
        s.offset[t] = s.dim;
        int d = j - degs[t];
        if (d >= 0)
            s.dim += static_cast<size_t>(A.dim_at(d));
    }
    return s;
}

std::vector<uint32_t> slice_var_mult(const Algebra& A, const std::vector<int>& degs, int j,
                                     int var, const std::vector<uint32_t>& v)
{
    SliceIndex src = slice_index(A, degs, j);
    SliceIndex dst = slice_index(A, degs, j + 1);
    std::vector<uint32_t> out(dst.dim, 0);
    for (size_t t = 0; t < degs.size(); ++t) {
        int d = j - degs[t];
        if (d < 0)
            continue;
        size_t n = static_cast<size_t>(A.dim_at(d));
        if (n == 0)
            continue;
        const MatrixFp& M = A.var_mult(var, d);
        for (size_t c = 0; c < n; ++c) {
            uint32_t x = v[src.offset[t] + c];
            if (x == 0)
                continue;
            for (size_t r = 0; r < M.rows(); ++r) {
                uint32_t a = M.at(r, c);
                if (a != 0)
                    out[dst.offset[t] + r] =
                        add_mod(out[dst.offset[t] + r], mul_mod(a, x, A.p()), A.p());
            }
        }
    }
    return out;
}

/* F_i in the resolution: generator degrees, target (F_{i-1}) degrees, and for
 * each generator its image, stored per target component (the component of
 * generator s against target t lives in A_{degs[s] - targetDegs[t]}). */
struct FreeModule {
    std::vector<int> degs;
    std::vector<int> targetDegs;
    std::vector<std::vector<std::vector<uint32_t>>> image;

    int max_deg() const
    {
        int m = 0;
        for (int d : degs)
            m = std::max(m, d);
        return m;
    }
};

// matrix of the differential F -> F_target restricted to degree j
MatrixFp differential_slice(const Algebra& A, const FreeModule& F, int j)
{
    SliceIndex src = slice_index(A, F.degs, j);
    SliceIndex dst = slice_index(A, F.targetDegs, j);
    MatrixFp M(A.p(), dst.dim, src.dim);
    if (dst.dim == 0)
        return M;
    for (size_t s = 0; s < F.degs.size(); ++s) {
        int ds = j - F.degs[s];
        if (ds < 0)
            continue;
        const DegreeBasis& basis = A.degree_basis(ds);
        for (size_t b = 0; b < basis.dim(); ++b) {
            size_t col = src.offset[s] + b;
            for (size_t t = 0; t < F.targetDegs.size(); ++t) {
                const std::vector<uint32_t>& comp = F.image[s][t];
                if (comp.empty())
                    continue;
                int compDeg = F.degs[s] - F.targetDegs[t];
                std::vector<uint32_t> prod = A.mono_mult(basis.reps[b], compDeg, comp);
                for (size_t r = 0; r < prod.size(); ++r)
                    if (prod[r] != 0)
                        M.set(dst.offset[t] + r, col, prod[r]);
            }
        }
    }
    return M;
}

} // namespace

BettiTable minimal_betti_table(const Algebra& A, const std::vector<HomogPoly>& moduleGens,
                               int imax, int jmax)
{
    const RingSpec& spec = A.spec();
    if (jmax < 0)
        jmax = default_jmax(spec, moduleGens, imax);
    BettiTable table;
    table.imax = imax;
    table.jmax = jmax;
    table.completeColumns.assign(static_cast<size_t>(imax) + 1, false);

    // M = 0 when the module ideal contains a unit
    for (auto& g : moduleGens)
        if (g.degree() == 0 && !g.is_zero()) {
            table.completeColumns.assign(static_cast<size_t>(imax) + 1, true);
            return table;
        }

    // socle bound when A is Artinian inside the tracked window (rigorous);
    // otherwise the generator-free margin policy
    std::optional<int> vanish = A.vanishing_degree(jmax);
    int socle = vanish ? *vanish - 1 : -1;
    int margin = std::max(2, spec.max_gen_degree());

    table.entries[{0, 0}] = 1;
    table.completeColumns[0] = true;

    FreeModule F; // F_{i-1}; starts as F_0 = A with no differential
    F.degs = {0};
    F.targetDegs = {};
    F.image = {{}};

    for (int i = 1; i <= imax; ++i) {
        FreeModule next;
        next.targetDegs = F.degs;
        int colMax = 0;
        std::vector<std::vector<uint32_t>> prevSyz; // basis of S_j at the previous degree
        for (int j = 0; j <= jmax; ++j) {
            SliceIndex cur = slice_index(A, F.degs, j);
            if (cur.dim == 0) {
                prevSyz.clear();
                continue;
            }
            Echelon span(A.p(), cur.dim);
            for (auto& w : prevSyz)
                for (int t = 0; t < spec.e; ++t) {
                    std::vector<uint32_t> img = slice_var_mult(A, F.degs, j - 1, t, w);
                    if (!img.empty())
                        span.insert(std::move(img));
                }
            std::vector<std::vector<uint32_t>> candidates;
            if (i == 1) {
                for (auto& g : moduleGens)
                    if (g.degree() == j)
                        candidates.push_back(A.class_of(g));
            } else {
                MatrixFp D = differential_slice(A, F, j);
                MatrixFp K = D.kernel_basis();
                for (size_t c = 0; c < K.cols(); ++c) {
                    std::vector<uint32_t> v(cur.dim);
                    for (size_t r = 0; r < cur.dim; ++r)
                        v[r] = K.at(r, c);
                    candidates.push_back(std::move(v));
                }
            }
            for (auto& v : candidates) {
                if (!span.insert(v))
                    continue;
                next.degs.push_back(j);
                std::vector<std::vector<uint32_t>> comps;
                for (size_t t = 0; t < F.degs.size(); ++t) {
                    int d = j - F.degs[t];
                    size_t n = d >= 0 ? static_cast<size_t>(A.dim_at(d)) : 0;
                    std::vector<uint32_t> comp(n, 0);
                    for (size_t c = 0; c < n; ++c)
                        comp[c] = v[cur.offset[t] + c];
                    comps.push_back(std::move(comp));
                }
                next.image.push_back(std::move(comps));
                ++table.entries[{i, j}];
                colMax = std::max(colMax, j);
                if (j == jmax)
                    table.truncationTight = true;
            }
            prevSyz.clear();
            for (auto& row : span.rows())
                prevSyz.push_back(row);
        }
        // certification
        bool prevOk = table.completeColumns[static_cast<size_t>(i - 1)];
        bool ok;
        if (i == 1 && F.degs.size() == 1 && F.degs[0] == 0) {
            int dM = 0;
            for (auto& g : moduleGens)
                dM = std::max(dM, g.degree());
            ok = dM <= jmax;
        } else if (socle >= 0) {
            ok = F.max_deg() + socle <= jmax;
        } else {
            ok = colMax + margin <= jmax;
        }
        table.completeColumns[static_cast<size_t>(i)] = prevOk && ok;
        F = std::move(next);
    }
    return table;
}

TruncatedPoincare poincare_truncated(const BettiTable& t)
{
    TruncatedPoincare out;
    out.imax = t.imax;
    out.jmax = t.jmax;
    out.complete = t.all_complete();
    for (auto& [k, v] : t.entries)
        out.poly.add_term(k.second, k.first, Int(v)); // y^j z^i
    return out;
}

BiPoly total_poincare(const BettiTable& t)
{
    BiPoly out;
    for (auto& [k, v] : t.entries)
        out.add_term(0, k.first, Int(v));
    return out;
}

BiPoly ideal_poincare(const BettiTable& cyclicTable)
{
    BiPoly out;
    for (auto& [k, v] : cyclicTable.entries) {
        if (k.first == 0)
            continue;
        out.add_term(k.second, k.first - 1, Int(v));
    }
    return out;
}

BettiTable polynomial_ring_table(const RingSpec& A, const std::vector<HomogPoly>& idealGens,
                                 int extraImax)
{
    if (!A.gens.empty())
        throw std::invalid_argument("polynomial_ring_table: base ring must be a polynomial ring");
    int imax = A.e + 1 + extraImax;
    int jmax = default_jmax(A, idealGens, std::min(imax, A.e + 1));
    for (int attempt = 0; attempt < 5; ++attempt) {
        Algebra alg(A);
        BettiTable t = minimal_betti_table(alg, idealGens, imax, jmax);
        bool emptyTail = true;
        for (auto& [k, v] : t.entries)
            if (k.first > A.e && v != 0)
                emptyTail = false;
        if (t.all_complete() && emptyTail)
            return t;
        jmax *= 2;
    }
    throw std::runtime_error("polynomial_ring_table: truncation too tight, no complete table");
}

bool is_koszul_truncated(const Algebra& A, int imax)
{
    if (imax < 2)
        throw std::invalid_argument("is_koszul_truncated: imax must be >= 2");
    int jmax = imax + std::max(2, A.spec().max_gen_degree());
    BettiTable t = minimal_betti_table(A, residue_field_gens(A.spec()), imax, jmax);
    for (auto& [k, v] : t.entries)
        if (k.first <= imax && k.second != k.first && v != 0)
            return false;
    return true;
}

bool is_golod_truncated(const Algebra& A, int imax, int jmax)
{
    const RingSpec& spec = A.spec();
    RingSpec poly(spec.p, spec.vars, {}, spec.name + "_poly");
    BettiTable bt = polynomial_ring_table(poly, spec.gens, 0);
    BiPoly pBI = ideal_poincare(bt);
    // (1 + yz)^e / (1 - z^2 * P^B_I)
    BiPoly den = BiPoly::one() - pBI.shifted(0, 2);
    RationalSeries golod(BiPoly::one_plus(Int(1), 1, 1).pow(spec.e), den);
    std::vector<BiPoly> coeff = expand(golod, imax);
    BettiTable t = minimal_betti_table(A, residue_field_gens(spec), imax, jmax);
    if (!t.all_complete())
        throw std::runtime_error("is_golod_truncated: truncation too tight for the oracle table");
    for (int i = 0; i <= imax; ++i) {
        BiPoly oracle;
        for (auto& [k, v] : t.entries)
            if (k.first == i)
                oracle.add_term(k.second, 0, Int(v));
        BiPoly predicted = coeff[static_cast<size_t>(i)];
        // compare through the tracked y-range only
        for (auto& [k, c] : predicted.terms())
            if (k.first <= jmax && oracle.coeff(k.first, 0) != c)
                return false;
        for (auto& [k, c] : oracle.terms())
            if (predicted.coeff(k.first, 0) != c)
                return false;
    }
    return true;
}

std::string BettiTable::triangle() const
{
    // Macaulay-style: row r = j - i, column i
    int maxI = 0, minR = 0, maxR = 0;
    for (auto& [k, v] : entries) {
        maxI = std::max(maxI, k.first);
        minR = std::min(minR, k.second - k.first);
        maxR = std::max(maxR, k.second - k.first);
    }
    std::ostringstream os;
    os << "       ";
    for (int i = 0; i <= maxI; ++i)
        os << " " << i << (i < 10 ? "    " : "   ");
    os << "\n";
    auto cell = [&](long long v) {
        std::string s = v == 0 ? "." : std::to_string(v);
        while (s.size() < 5)
            s += " ";
        return " " + s;
    };
    os << "total: ";
    for (int i = 0; i <= maxI; ++i)
        os << cell(total(i));
    os << "\n";
    for (int r = minR; r <= maxR; ++r) {
        std::string label = std::to_string(r) + ":";
        while (label.size() < 7)
            label += " ";
        os << label;
        for (int i = 0; i <= maxI; ++i)
            os << cell(at(i, i + r));
        os << "\n";
    }
    bool allc = all_complete();
    os << "columns complete: ";
    for (size_t i = 0; i < completeColumns.size(); ++i)
        os << (completeColumns[i] ? "+" : "?");
    if (!allc)
        os << "   (? = truncated at jmax " << jmax << ")";
    os << "\n";
    return os.str();
}

nlohmann::json BettiTable::to_json() const
{
    nlohmann::json j;
    j["imax"] = imax;
    j["jmax"] = jmax;
    nlohmann::json ent = nlohmann::json::array();
    for (auto& [k, v] : entries) {
        if (v == 0)
            continue;
        ent.push_back({{"i", k.first}, {"j", k.second}, {"count", v}});
    }
    j["entries"] = ent;
    j["completeColumns"] = completeColumns;
    j["truncationTight"] = truncationTight;
    return j;
}

} // namespace bettilab
