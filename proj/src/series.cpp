#include "bettilab/series.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

namespace bettilab {

void RationalSeries::normalize()
{
    BiPoly c0 = den_.z_coefficient(0);
    if (c0.is_zero())
        throw InvalidDenominator("denominator has zero constant term in z");
    if (c0.y_degree() > 0)
        throw InvalidDenominator("denominator constant term is not a unit");
    Int c = c0.coeff(0, 0);
    if (c == -1) {
        num_ = -num_;
        den_ = -den_;
    } else if (c != 1) {
        throw InvalidDenominator("denominator constant term must be +-1");
    }
    if (num_.is_zero()) {
        den_ = BiPoly::one();
        yOffset_ = 0;
    }
}

RationalSeries RationalSeries::operator+(const RationalSeries& o) const
{
    if (yOffset_ != o.yOffset_) {
        // fold the offsets into the numerators; requires non-negative results
        int base = std::min(yOffset_, o.yOffset_);
        RationalSeries a(num_.shifted(yOffset_ - base, 0), den_, base);
        RationalSeries b(o.num_.shifted(o.yOffset_ - base, 0), o.den_, base);
        return a + b;
    }
    return RationalSeries(num_ * o.den_ + o.num_ * den_, den_ * o.den_, yOffset_);
}

RationalSeries RationalSeries::operator-(const RationalSeries& o) const
{
    RationalSeries neg(-o.num_, o.den_, o.yOffset_);
    return *this + neg;
}

RationalSeries RationalSeries::operator*(const RationalSeries& o) const
{
    return RationalSeries(num_ * o.num_, den_ * o.den_, yOffset_ + o.yOffset_);
}

std::vector<BiPoly> expand(const RationalSeries& s, int orderZ)
{
    // c_i = num_i - sum_{k>=1} den_k * c_{i-k}, den_0 = 1
    std::vector<BiPoly> numc(static_cast<size_t>(orderZ) + 1), denc(static_cast<size_t>(orderZ) + 1);
    for (int k = 0; k <= orderZ; ++k) {
        numc[k] = s.num().z_coefficient(k);
        denc[k] = s.den().z_coefficient(k);
    }
    std::vector<BiPoly> c(static_cast<size_t>(orderZ) + 1);
    for (int i = 0; i <= orderZ; ++i) {
        BiPoly acc = numc[i];
        for (int k = 1; k <= i; ++k)
            if (!denc[k].is_zero() && !c[i - k].is_zero())
                acc = acc - denc[k] * c[i - k];
        c[i] = std::move(acc);
    }
    if (s.y_offset() != 0) {
        for (auto& p : c) {
            for (auto& [key, v] : p.terms())
                if (key.first + s.y_offset() < 0)
                    throw NegativeYExponent();
            p = p.shifted(s.y_offset(), 0);
        }
    }
    return c;
}

namespace {

struct ReducedForm {
    BiPoly num; // coprime to (1-z), (1+z) wherever the corresponding order > 0
    int cx;     // order of pole at +1 (>= 0)
    int gn;     // order of pole at -1 (>= 0)
};

ReducedForm reduce_univariate(const RationalSeries& s)
{
    if (!s.univariate())
        throw std::domain_error("series is not univariate in z");
    BiPoly num = s.num(), den = s.den();
    if (num.is_zero())
        return {num, 0, 0};
    int dplus = 0, dminus = 0;
    while (!den.is_zero() && root_multiplicity(den, 1) > 0) {
        den = divide_one_minus_rz(den, 1);
        ++dplus;
    }
    while (!den.is_zero() && root_multiplicity(den, -1) > 0) {
        den = divide_one_minus_rz(den, -1);
        ++dminus;
    }
    if (den.z_degree() > 0)
        throw NotPlusMinusOnePoles();
    // remaining constant is +-1 by the normalization invariant
    Int u = den.coeff(0, 0);
    if (u == -1)
        num = -num;
    int nplus = 0, nminus = 0;
    while (nplus < dplus && root_multiplicity(num, 1) > 0) {
        num = divide_one_minus_rz(num, 1);
        ++nplus;
    }
    while (nminus < dminus && root_multiplicity(num, -1) > 0) {
        num = divide_one_minus_rz(num, -1);
        ++nminus;
    }
    return {num, dplus - nplus, dminus - nminus};
}

} // namespace

std::pair<int, int> pole_orders(const RationalSeries& s)
{
    if (!s.univariate())
        throw std::domain_error("pole_orders: series is not univariate in z");
    if (s.is_zero())
        return {0, 0};
    BiPoly num = s.num(), den = s.den();
    int cx = root_multiplicity(den, 1) - root_multiplicity(num, 1);
    int gn = root_multiplicity(den, -1) - root_multiplicity(num, -1);
    return {cx < 0 ? 0 : cx, gn < 0 ? 0 : gn};
}

QuasiPolynomialPair betti_polynomials(const RationalSeries& s)
{
    QuasiPolynomialPair out;
    if (s.is_zero())
        return out; // cx = gn = 0, betaEven = betaOdd = 0, validFrom 0
    ReducedForm rf = reduce_univariate(s); // throws NotPlusMinusOnePoles
    out.cx = rf.cx;
    out.gn = rf.gn;
    // beta_i = A(i) + (-1)^i B(i), deg A <= cx-1, deg B <= gn-1,
    // exact for i > deg(num) - cx - gn
    int polyPartDeg = rf.num.z_degree() - rf.cx - rf.gn;
    out.validFrom = std::max(0, polyPartDeg + 1);
    int nA = rf.cx, nB = rf.gn;
    int unknowns = nA + nB;
    int checkExtra = 2 * unknowns + 4;
    int need = out.validFrom + unknowns + checkExtra;
    RationalSeries reduced(rf.num,
                           (BiPoly::one_plus(Int(-1), 0, 1).pow(rf.cx) *
                            BiPoly::one_plus(Int(1), 0, 1).pow(rf.gn)),
                           0);
    std::vector<BiPoly> cs = expand(reduced, need);
    auto coeff_at = [&](int i) { return cs[static_cast<size_t>(i)].coeff(0, 0); };

    if (unknowns > 0) {
        // exact rational solve: rows i = validFrom .. validFrom+unknowns-1
        int n = unknowns;
        std::vector<std::vector<Rat>> m(static_cast<size_t>(n), std::vector<Rat>(static_cast<size_t>(n) + 1, Rat(0)));
        for (int r = 0; r < n; ++r) {
            long i = out.validFrom + r;
            Rat ip = 1;
            for (int t = 0; t < nA; ++t) {
                m[r][static_cast<size_t>(t)] = ip;
                ip *= i;
            }
            Rat sign = (i % 2 == 0) ? 1 : -1;
            ip = sign;
            for (int t = 0; t < nB; ++t) {
                m[r][static_cast<size_t>(nA + t)] = ip;
                ip *= i;
            }
            m[r][static_cast<size_t>(n)] = Rat(coeff_at(static_cast<int>(i)));
        }
        // gaussian elimination over Q
        for (int col = 0, row = 0; col < n && row < n; ++col) {
            int piv = -1;
            for (int r = row; r < n; ++r)
                if (m[r][static_cast<size_t>(col)] != 0) {
                    piv = r;
                    break;
                }
            if (piv < 0)
                throw std::runtime_error("betti_polynomials: singular fitting system");
            std::swap(m[static_cast<size_t>(piv)], m[static_cast<size_t>(row)]);
            Rat d = m[row][static_cast<size_t>(col)];
            for (int cidx = col; cidx <= n; ++cidx)
                m[row][static_cast<size_t>(cidx)] /= d;
            for (int r = 0; r < n; ++r) {
                if (r == row)
                    continue;
                Rat f = m[r][static_cast<size_t>(col)];
                if (f == 0)
                    continue;
                for (int cidx = col; cidx <= n; ++cidx)
                    m[r][static_cast<size_t>(cidx)] -= f * m[row][static_cast<size_t>(cidx)];
            }
            ++row;
        }
        std::vector<Rat> A(static_cast<size_t>(nA)), B(static_cast<size_t>(nB));
        for (int t = 0; t < nA; ++t)
            A[static_cast<size_t>(t)] = m[static_cast<size_t>(t)][static_cast<size_t>(n)];
        for (int t = 0; t < nB; ++t)
            B[static_cast<size_t>(t)] = m[static_cast<size_t>(nA + t)][static_cast<size_t>(n)];
        out.betaEven.resize(static_cast<size_t>(std::max(nA, nB)), Rat(0));
        out.betaOdd.resize(static_cast<size_t>(std::max(nA, nB)), Rat(0));
        for (int t = 0; t < std::max(nA, nB); ++t) {
            Rat a = t < nA ? A[static_cast<size_t>(t)] : Rat(0);
            Rat b = t < nB ? B[static_cast<size_t>(t)] : Rat(0);
            out.betaEven[static_cast<size_t>(t)] = a + b;
            out.betaOdd[static_cast<size_t>(t)] = a - b;
        }
        while (!out.betaEven.empty() && out.betaEven.back() == 0)
            out.betaEven.pop_back();
        while (!out.betaOdd.empty() && out.betaOdd.back() == 0)
            out.betaOdd.pop_back();
    }
    // verify on the extra coefficients; fail loudly on mismatch
    for (int i = out.validFrom + unknowns; i <= need; ++i) {
        if (out.eval_at(i) != Rat(coeff_at(i)))
            throw std::runtime_error("betti_polynomials: verification mismatch at index " + std::to_string(i));
    }
    return out;
}

RationalSeries specialize_y(const RationalSeries& s)
{
    BiPoly num = s.num().substitute_y_one();
    BiPoly den = s.den().substitute_y_one();
    if (den.coeff(0, 0) == 0)
        throw DenominatorVanishes();
    return RationalSeries(std::move(num), std::move(den), 0);
}

namespace {

void append_terms_text(std::ostream& os, const BiPoly& p)
{
    if (p.is_zero()) {
        os << "0";
        return;
    }
    // sorted by (zExp, yExp)
    std::vector<std::pair<std::pair<int, int>, Int>> ts; // ((z,y), c)
    for (auto& [k, c] : p.terms())
        ts.push_back({{k.second, k.first}, c});
    std::sort(ts.begin(), ts.end(), [](auto& a, auto& b) { return a.first < b.first; });
    bool first = true;
    for (auto& [zy, c] : ts) {
        Int a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0)
                a = -a;
        }
        first = false;
        int ye = zy.second, ze = zy.first;
        bool wroteCoeff = false;
        if (a != 1 || (ye == 0 && ze == 0)) {
            os << a;
            wroteCoeff = true;
        }
        if (ye > 0) {
            if (wroteCoeff)
                os << "*";
            os << "y";
            if (ye > 1)
                os << "^" << ye;
            wroteCoeff = true;
        }
        if (ze > 0) {
            if (wroteCoeff)
                os << "*";
            os << "z";
            if (ze > 1)
                os << "^" << ze;
        }
    }
}

nlohmann::json poly_to_json(const BiPoly& p)
{
    nlohmann::json arr = nlohmann::json::array();
    std::vector<std::pair<std::pair<int, int>, Int>> ts;
    for (auto& [k, c] : p.terms())
        ts.push_back({{k.second, k.first}, c});
    std::sort(ts.begin(), ts.end(), [](auto& a, auto& b) { return a.first < b.first; });
    for (auto& [zy, c] : ts) {
        nlohmann::json t = nlohmann::json::array();
        t.push_back(zy.second); // yExp
        t.push_back(zy.first);  // zExp
        if (c >= std::numeric_limits<long long>::min() && c <= std::numeric_limits<long long>::max())
            t.push_back(static_cast<long long>(c));
        else
            t.push_back(c.str());
        arr.push_back(t);
    }
    return arr;
}

BiPoly poly_from_json(const nlohmann::json& j)
{
    BiPoly p;
    for (auto& t : j) {
        Int c;
        if (t.at(2).is_string())
            c = Int(t.at(2).get<std::string>());
        else
            c = Int(t.at(2).get<long long>());
        p.add_term(t.at(0).get<int>(), t.at(1).get<int>(), c);
    }
    return p;
}

} // namespace

std::string RationalSeries::to_text() const
{
    std::ostringstream os;
    bool pn = num_.terms().size() > 1, pd = den_.terms().size() > 1;
    if (pn)
        os << "(";
    append_terms_text(os, num_);
    if (pn)
        os << ")";
    os << " / ";
    if (pd)
        os << "(";
    append_terms_text(os, den_);
    if (pd)
        os << ")";
    if (yOffset_ != 0)
        os << " * y^" << yOffset_;
    return os.str();
}

nlohmann::json RationalSeries::to_json() const
{
    nlohmann::json j;
    j["num"] = poly_to_json(num_);
    j["den"] = poly_to_json(den_);
    j["yOffset"] = yOffset_;
    return j;
}

RationalSeries RationalSeries::from_json(const nlohmann::json& j)
{
    return RationalSeries(poly_from_json(j.at("num")), poly_from_json(j.at("den")),
                          j.value("yOffset", 0));
}

} // namespace bettilab
