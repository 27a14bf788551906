#ifndef BETTILAB_FP_MATRIX_HPP
#define BETTILAB_FP_MATRIX_HPP

#include <cstdint>
#include <stdexcept>
#include <vector>

namespace bettilab {

constexpr uint32_t kDefaultPrime = 32003;

bool is_prime_u32(uint32_t p);

inline uint32_t add_mod(uint32_t a, uint32_t b, uint32_t p)
{
    uint32_t s = a + b;
    return s >= p ? s - p : s;
}
inline uint32_t sub_mod(uint32_t a, uint32_t b, uint32_t p) { return a >= b ? a - b : a + p - b; }
inline uint32_t mul_mod(uint32_t a, uint32_t b, uint32_t p)
{
    return static_cast<uint32_t>((static_cast<uint64_t>(a) * b) % p);
}
uint32_t inv_mod(uint32_t a, uint32_t p);

/* Dense row-major matrix over F_p, entries reduced to [0, p). */
class MatrixFp {
public:
    MatrixFp(uint32_t p, size_t rows, size_t cols);

    uint32_t p() const { return p_; }
    size_t rows() const { return rows_; }
    size_t cols() const { return cols_; }

    uint32_t at(size_t r, size_t c) const { return a_[r * cols_ + c]; }
    void set(size_t r, size_t c, uint32_t v) { a_[r * cols_ + c] = v % p_; }
    const uint32_t* row(size_t r) const { return a_.data() + r * cols_; }
    uint32_t* row(size_t r) { return a_.data() + r * cols_; }

    size_t rank() const;

    // columns form a basis of ker(*this) in reduced column echelon form,
    // free variables taken in increasing column order
    MatrixFp kernel_basis() const;

    MatrixFp multiply(const MatrixFp& o) const;
    bool is_zero() const;

private:
    uint32_t p_;
    size_t rows_, cols_;
    std::vector<uint32_t> a_;
};

/* Online row echelon form: rows are inserted one at a time and kept fully
 * reduced (pivot coefficient 1, pivot column eliminated from other rows).
 * This is the workhorse behind ranks, spans, reductions and intersections. */
class Echelon {
public:
    Echelon(uint32_t p, size_t cols) : p_(p), cols_(cols) {}

    // reduces v against the current rows; absorbs it and returns true
    // if it enlarges the span
    bool insert(std::vector<uint32_t> v);
    // reduce a vector against the span without inserting
    void reduce(std::vector<uint32_t>& v) const;
    bool contains(std::vector<uint32_t> v) const;

    size_t rank() const { return rows_.size(); }
    size_t cols() const { return cols_; }
    uint32_t p() const { return p_; }
    const std::vector<std::vector<uint32_t>>& rows() const { return rows_; }
    const std::vector<size_t>& pivots() const { return pivots_; }
    bool is_pivot(size_t c) const;

private:
    uint32_t p_;
    size_t cols_;
    std::vector<std::vector<uint32_t>> rows_; // reduced, pivot entry 1
    std::vector<size_t> pivots_;              // pivot column of each row
};

// rank of the union of two row spans (for intersection dimensions)
size_t span_union_rank(const Echelon& a, const Echelon& b);

} // namespace bettilab

#endif
