#include <doctest.h>

#include "bettilab/fp_matrix.hpp"
#include "bettilab/numeric.hpp"

#include <algorithm>

using namespace bettilab;

namespace {

MatrixFp from_rows(uint32_t p, std::vector<std::vector<uint32_t>> rows)
{
    MatrixFp m(p, rows.size(), rows.empty() ? 0 : rows[0].size());
    for (size_t r = 0; r < rows.size(); ++r)
        for (size_t c = 0; c < rows[r].size(); ++c)
            m.set(r, c, rows[r][c]);
    return m;
}

} // namespace

TEST_CASE("rank fixtures")
{
    CHECK(from_rows(101, {{1, 0}, {0, 1}}).rank() == 2);
    CHECK(from_rows(101, {{1, 2}, {2, 4}}).rank() == 1);
    // the elimination oracle on [[1,1],[1,p-1]] over F_3: second row reduces to (0,1)
    CHECK(from_rows(3, {{1, 1}, {1, 2}}).rank() == 2);
}

TEST_CASE("kernel fixtures")
{
    MatrixFp z = from_rows(101, {{0, 0, 0}, {0, 0, 0}});
    MatrixFp k = z.kernel_basis();
    CHECK(k.cols() == 3);
    for (size_t i = 0; i < 3; ++i)
        for (size_t j = 0; j < 3; ++j)
            CHECK(k.at(i, j) == (i == j ? 1u : 0u));

    MatrixFp a = from_rows(101, {{1, 1, 0}});
    CHECK(a.kernel_basis().cols() == 2);

    MatrixFp id = from_rows(101, {{1, 0}, {0, 1}});
    CHECK(id.kernel_basis().cols() == 0);
}

TEST_CASE("modulus must be prime")
{
    CHECK_THROWS(MatrixFp(91, 1, 1));
    CHECK_THROWS(MatrixFp(1, 1, 1));
    CHECK_NOTHROW(MatrixFp(2, 1, 1));
    CHECK_NOTHROW(MatrixFp(32003, 1, 1));
}

TEST_CASE("property: rank-nullity and exact kernels")
{
    for (uint32_t p : {101u, 32003u}) {
        SplitMix64 rng(1000 + p);
        for (int trial = 0; trial < 12; ++trial) {
            size_t rows = 1 + rng.next() % 200;
            size_t cols = 1 + rng.next() % 200;
            MatrixFp m(p, rows, cols);
            for (size_t r = 0; r < rows; ++r)
                for (size_t c = 0; c < cols; ++c)
                    if (rng.next() % 3 == 0)
                        m.set(r, c, rng.below(p));
            MatrixFp k = m.kernel_basis();
            CHECK(m.rank() + k.cols() == cols);
            if (k.cols() > 0)
                CHECK(m.multiply(k).is_zero());
        }
    }
}

TEST_CASE("property: rank is invariant under row shuffles")
{
    SplitMix64 rng(99);
    for (int trial = 0; trial < 10; ++trial) {
        size_t rows = 2 + rng.next() % 40;
        size_t cols = 2 + rng.next() % 40;
        MatrixFp m(32003, rows, cols);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c)
                m.set(r, c, rng.below(32003));
        std::vector<size_t> perm(rows);
        for (size_t i = 0; i < rows; ++i)
            perm[i] = i;
        for (size_t i = rows; i > 1; --i)
            std::swap(perm[i - 1], perm[rng.next() % i]);
        MatrixFp shuffled(32003, rows, cols);
        for (size_t r = 0; r < rows; ++r)
            for (size_t c = 0; c < cols; ++c)
                shuffled.set(r, c, m.at(perm[r], c));
        CHECK(m.rank() == shuffled.rank());
    }
}

TEST_CASE("echelon spans and membership")
{
    Echelon E(101, 4);
    CHECK(E.insert({1, 2, 3, 4}));
    CHECK(E.insert({0, 1, 1, 0}));
    CHECK_FALSE(E.insert({1, 3, 4, 4})); // sum of the two
    CHECK(E.rank() == 2);
    CHECK(E.contains({2, 4, 6, 8}));
    CHECK_FALSE(E.contains({0, 0, 1, 0}));
}
