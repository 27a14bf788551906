#include "bettilab/formulas.hpp"

namespace bettilab {

namespace {

BiPoly one_minus_z() { return BiPoly::one_plus(Int(-1), 0, 1); }
BiPoly one_plus_z() { return BiPoly::one_plus(Int(1), 0, 1); }
BiPoly one_plus_yz() { return BiPoly::one_plus(Int(1), 1, 1); }

// substitute t -> -yz into a univariate polynomial (t stored as z)
BiPoly sub_minus_yz(const BiPoly& p)
{
    BiPoly out;
    for (auto& [k, c] : p.terms()) {
        if (k.first != 0)
            throw std::domain_error("substitute: polynomial not univariate");
        int n = k.second;
        out.add_term(n, n, (n % 2 == 0) ? c : -c);
    }
    return out;
}

} // namespace

RationalSeries substitute_minus_yz(const RationalSeries& s)
{
    if (!s.univariate())
        throw std::domain_error("substitute_minus_yz: series not univariate");
    return RationalSeries(sub_minus_yz(s.num()), sub_minus_yz(s.den()));
}

RationalSeries tate_series(int dimR, int codimR)
{
    if (dimR < 0 || codimR < 0)
        throw BadParameters("tate_series: dim and codim must be non-negative");
    return RationalSeries(one_plus_z().pow(dimR), one_minus_z().pow(codimR));
}

RationalSeries graded_ci_pk(int e, const std::vector<int>& degrees)
{
    BiPoly den = BiPoly::one();
    for (int n : degrees) {
        if (n < 2)
            throw BadParameters("graded_ci_pk: relation degrees must be >= 2");
        den = den * BiPoly::one_plus(Int(-1), n, 2);
    }
    return RationalSeries(one_plus_yz().pow(e), den);
}

RationalSeries golod_pk(int e, const BiPoly& pBI)
{
    BiPoly den = BiPoly::one() - pBI.shifted(0, 2);
    return RationalSeries(one_plus_yz().pow(e), den);
}

RationalSeries golod_residue_series(int a, int c, int d, int e, const BiPoly& pQJ)
{
    if (a < 0 || c < 0)
        throw BadParameters("golod_residue_series: a and c must be non-negative");
    BiPoly num = one_plus_z().pow(a + 1) * one_minus_z().pow(a) + pQJ.shifted(0, 2);
    num.add_term(0, 0, Int(-1));
    if (!num.is_zero() && num.z_valuation() < 1)
        throw NumeratorNotDivisibleByZ();
    num = num.divided_by_z(1);
    BiPoly den = one_minus_z().pow(c);
    int pw = c - d + e;
    if (pw >= 0)
        den = den * one_plus_z().pow(pw);
    else
        num = num * one_plus_z().pow(-pw);
    // reduce the common (1-z) and (1+z) content
    if (!num.is_zero()) {
        int m1 = std::min(root_multiplicity(num, 1), root_multiplicity(den, 1));
        int m2 = std::min(root_multiplicity(num, -1), root_multiplicity(den, -1));
        for (int k = 0; k < m1; ++k) {
            num = divide_one_minus_rz(num, 1);
            den = divide_one_minus_rz(den, 1);
        }
        for (int k = 0; k < m2; ++k) {
            num = divide_one_minus_rz(num, -1);
            den = divide_one_minus_rz(den, -1);
        }
    }
    return RationalSeries(std::move(num), std::move(den));
}

BiPoly adequate_ideal_series(int s, int h, int e)
{
    if (h < 1 || h > e || s < 1)
        throw BadParameters("adequate_ideal_series: need 1 <= h <= e and s >= 1");
    BiPoly sum;
    for (int i = 0; i < s; ++i)
        sum.add_term(i, i, (i % 2 == 0 ? Int(1) : Int(-1)) * binomial(h - 1 + i, i));
    BiPoly num = BiPoly::one() - one_plus_yz().pow(h) * sum;
    // divide by (-z)^s
    BiPoly out = num.divided_by_z(s);
    if (s % 2 == 1)
        out = -out;
    return out;
}

BiPoly det_power_series(int s, int h, int e)
{
    if (h < 1 || h > e || s < 2)
        throw BadParameters("det_power_series: need 1 <= h <= e and s >= 2");
    // assemble with every term multiplied by z^{s-1}; divide at the end
    // term1: z^{s-1} / (-z)^{s-2} = (-1)^{s-2} z
    BiPoly acc = BiPoly::term((s - 2) % 2 == 0 ? Int(1) : Int(-1), 0, 1);
    int sgn = (s - 1) % 2 == 0 ? 1 : -1; // (-1)^{s-1}
    BiPoly sumH;
    for (int i = 0; i < s; ++i)
        sumH.add_term(0, i, (i % 2 == 0 ? Int(1) : Int(-1)) * binomial(h - 1 + i, i));
    acc = acc + one_plus_z().pow(h + 1) * sumH * BiPoly::constant(sgn);
    BiPoly sumE;
    for (int i = 0; i <= s; ++i)
        sumE.add_term(0, i, (i % 2 == 0 ? Int(1) : Int(-1)) * binomial(e - 1 + i, i));
    sumE.add_term(0, s, (s % 2 == 0 ? Int(-1) : Int(1)) * binomial(h - 1 + s, s));
    acc = acc - one_plus_z().pow(e) * sumE * BiPoly::constant(sgn);
    BiPoly out;
    try {
        out = acc.divided_by_z(s - 1);
    } catch (const std::domain_error&) {
        throw NotPolynomial();
    }
    if (out.coeff(0, 0) != 0 || out.coeff(0, 1) != 0)
        throw NotPolynomial();
    return out;
}

RationalSeries componentwise_linear_series(int e, const std::vector<ComponentData>& data)
{
    if (data.empty())
        return RationalSeries();
    // sum over j of (-z)^{-j} (Hprev(-yz) - Hcur(-yz) + n_{j-1} (-yz)^{j-1}),
    // all multiplied by (1+yz)^e; carried over a common z shift
    int shift = 0;
    for (auto& d : data)
        shift = std::max(shift, d.j);
    RationalSeries acc; // times z^{-shift}
    for (auto& d : data) {
        RationalSeries hp = substitute_minus_yz(d.hPrev);
        RationalSeries hc = substitute_minus_yz(d.hCur);
        RationalSeries diff = hp - hc;
        BiPoly nterm;
        if (d.nPrev != 0)
            nterm.add_term(d.j - 1, d.j - 1, (d.j - 1) % 2 == 0 ? Int(d.nPrev) : Int(-d.nPrev));
        RationalSeries inner = diff + RationalSeries::polynomial(nterm);
        int sgn = d.j % 2 == 0 ? 1 : -1; // (-z)^{-j} = (-1)^j z^{-j}
        BiPoly scale = BiPoly::term(Int(sgn), 0, shift - d.j);
        acc = acc + inner * RationalSeries::polynomial(scale);
    }
    BiPoly lead = BiPoly::one_plus(Int(1), 1, 1).pow(e);
    acc = acc * RationalSeries::polynomial(lead);
    // divide by z^shift: numerator must be divisible
    BiPoly num = acc.num();
    if (!num.is_zero() && num.z_valuation() < shift)
        throw NegativePowersRemain();
    return RationalSeries(num.is_zero() ? num : num.divided_by_z(shift), acc.den());
}

RationalSeries linear_ideal_series(int t, int e, const RationalSeries& hI)
{
    RationalSeries h = substitute_minus_yz(hI);
    BiPoly num = BiPoly::one_plus(Int(1), 1, 1).pow(e) * h.num();
    if (!num.is_zero() && num.z_valuation() < t)
        throw NegativePowersRemain();
    if (!num.is_zero())
        num = num.divided_by_z(t);
    if (t % 2 == 1)
        num = -num;
    return RationalSeries(std::move(num), h.den());
}

GringParams make_gring_params(int c, int d, int e, int a, int h)
{
    GringParams p;
    p.c = c;
    p.d = d;
    p.e = e;
    p.a = a;
    p.h = h;
    p.caseTag = (h == e) ? GringCase::HEqualsE : GringCase::HAtMostEMinus1;
    return p;
}

int gring_granularity(const GringParams& p)
{
    if (p.h < 1 || p.h > p.e || p.c > p.d || p.a < 0)
        throw BadParameters("gring_granularity: need 1 <= h <= e, c <= d, a >= 0");
    if (p.caseTag != ((p.h == p.e) ? GringCase::HEqualsE : GringCase::HAtMostEMinus1))
        throw BadParameters("gring_granularity: caseTag inconsistent with h and e");
    if (p.h == p.e) {
        if (p.a <= p.e - 2)
            return std::max(p.c - p.d + p.e - p.a - 1, 0);
        return 0;
    }
    if (p.a <= p.h - 1)
        return std::max(p.c - p.d + p.e - p.a - 1, 0);
    return std::max(p.c - p.d + p.e - p.h - 1, 0);
}

int granularity_bound(int c, int q)
{
    if (q < 0 || q > c)
        throw BadParameters("granularity_bound: need 0 <= q <= c");
    return std::max(c - q - 1, 0);
}

} // namespace bettilab
