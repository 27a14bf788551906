#include "bettilab/fp_matrix.hpp"

#include <algorithm>

namespace bettilab {

bool is_prime_u32(uint32_t p)
{
    if (p < 2)
        return false;
    if (p % 2 == 0)
        return p == 2;
    for (uint64_t d = 3; d * d <= p; d += 2)
        if (p % d == 0)
            return false;
    return true;
}

uint32_t inv_mod(uint32_t a, uint32_t p)
{
    // extended euclid; a != 0 mod p, p prime
    int64_t t = 0, newt = 1, r = p, newr = a % p;
    while (newr != 0) {
        int64_t q = r / newr;
        std::swap(t -= q * newt, newt);
        std::swap(r -= q * newr, newr);
    }
    if (r != 1)
        throw std::domain_error("inv_mod: not invertible");
    return static_cast<uint32_t>(t < 0 ? t + p : t);
}

MatrixFp::MatrixFp(uint32_t p, size_t rows, size_t cols)
    : p_(p), rows_(rows), cols_(cols), a_(rows * cols, 0)
{
    if (!is_prime_u32(p) || p >= (1u << 31))
        throw std::invalid_argument("MatrixFp: modulus must be a prime < 2^31");
}

namespace {

// in-place row echelon; returns pivot columns (of each kept row).
// partial pivoting by first nonzero entry in column order.
std::vector<size_t> eliminate(std::vector<uint32_t>& a, size_t rows, size_t cols, uint32_t p)
{
    std::vector<size_t> pivots;
    size_t row = 0;
    for (size_t col = 0; col < cols && row < rows; ++col) {
        size_t piv = row;
        while (piv < rows && a[piv * cols + col] == 0)
            ++piv;
        if (piv == rows)
            continue;
        if (piv != row)
            for (size_t c = col; c < cols; ++c)
                std::swap(a[piv * cols + c], a[row * cols + c]);
        uint32_t inv = inv_mod(a[row * cols + col], p);
        for (size_t c = col; c < cols; ++c)
            a[row * cols + c] = mul_mod(a[row * cols + c], inv, p);
        for (size_t r = 0; r < rows; ++r) {
            if (r == row)
                continue;
            uint32_t f = a[r * cols + col];
            if (f == 0)
                continue;
            for (size_t c = col; c < cols; ++c)
                a[r * cols + c] = sub_mod(a[r * cols + c], mul_mod(f, a[row * cols + c], p), p);
        }
        pivots.push_back(col);
        ++row;
    }
    return pivots;
}

} // namespace

size_t MatrixFp::rank() const
{
    std::vector<uint32_t> a = a_;
    return eliminate(a, rows_, cols_, p_).size();
}

MatrixFp MatrixFp::kernel_basis() const
{
    std::vector<uint32_t> a = a_;
    std::vector<size_t> pivots = eliminate(a, rows_, cols_, p_);
    std::vector<bool> isPivot(cols_, false);
    for (size_t c : pivots)
        isPivot[c] = true;
    size_t nullity = cols_ - pivots.size();
    MatrixFp K(p_, cols_, nullity);
    size_t kcol = 0;
    for (size_t f = 0; f < cols_; ++f) {
        if (isPivot[f])
            continue;
        K.set(f, kcol, 1);
        for (size_t r = 0; r < pivots.size(); ++r) {
            uint32_t v = a[r * cols_ + f];
            if (v != 0)
                K.set(pivots[r], kcol, p_ - v);
        }
        ++kcol;
    }
    return K;
}

MatrixFp MatrixFp::multiply(const MatrixFp& o) const
{
    if (cols_ != o.rows_ || p_ != o.p_)
        throw std::invalid_argument("MatrixFp::multiply: shape/modulus mismatch");
    MatrixFp r(p_, rows_, o.cols_);
    for (size_t i = 0; i < rows_; ++i)
        for (size_t k = 0; k < cols_; ++k) {
            uint32_t v = at(i, k);
            if (v == 0)
                continue;
            for (size_t j = 0; j < o.cols_; ++j) {
                uint64_t acc = r.at(i, j) + static_cast<uint64_t>(v) * o.at(k, j) % p_;
                r.set(i, j, static_cast<uint32_t>(acc % p_));
            }
        }
    return r;
}

bool MatrixFp::is_zero() const
{
    return std::all_of(a_.begin(), a_.end(), [](uint32_t v) { return v == 0; });
}

void Echelon::reduce(std::vector<uint32_t>& v) const
{
    for (size_t r = 0; r < rows_.size(); ++r) {
        uint32_t f = v[pivots_[r]];
        if (f == 0)
            continue;
        const std::vector<uint32_t>& row = rows_[r];
        for (size_t c = pivots_[r]; c < cols_; ++c)
            if (row[c] != 0)
                v[c] = sub_mod(v[c], mul_mod(f, row[c], p_), p_);
    }
}

bool Echelon::insert(std::vector<uint32_t> v)
{
    if (v.size() != cols_)
        throw std::invalid_argument("Echelon::insert: wrong length");
    reduce(v);
    size_t piv = cols_;
    for (size_t c = 0; c < cols_; ++c)
        if (v[c] != 0) {
            piv = c;
            break;
        }
    if (piv == cols_)
        return false;
    uint32_t inv = inv_mod(v[piv], p_);
    for (size_t c = piv; c < cols_; ++c)
        v[c] = mul_mod(v[c], inv, p_);
    // keep fully reduced: eliminate the new pivot from existing rows
    for (size_t r = 0; r < rows_.size(); ++r) {
        uint32_t f = rows_[r][piv];
        if (f == 0)
            continue;
        for (size_t c = piv; c < cols_; ++c)
            if (v[c] != 0)
                rows_[r][c] = sub_mod(rows_[r][c], mul_mod(f, v[c], p_), p_);
    }
    rows_.push_back(std::move(v));
    pivots_.push_back(piv);
    return true;
}

bool Echelon::contains(std::vector<uint32_t> v) const
{
    reduce(v);
    return std::all_of(v.begin(), v.end(), [](uint32_t x) { return x == 0; });
}

bool Echelon::is_pivot(size_t c) const
{
    return std::find(pivots_.begin(), pivots_.end(), c) != pivots_.end();
}

size_t span_union_rank(const Echelon& a, const Echelon& b)
{
    Echelon u(a.p(), a.cols());
    for (auto& r : a.rows())
        u.insert(r);
    for (auto& r : b.rows())
        u.insert(r);
    return u.rank();
}

} // namespace bettilab
