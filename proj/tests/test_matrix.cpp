#include <catch_amalgamated.hpp>

#include <cstdint>
#include <limits>
#include <random>

#include "lambdacm/matrix.hpp"

using namespace lambdacm;

namespace {

// Cofactor expansion, exponential but independent of elimination.
mpq_class det_by_cofactors(const RationalMatrix& m) {
    const std::size_t n = m.rows();
    if (n == 0) {
        return 1;
    }
    mpq_class total = 0;
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<std::size_t> rows;
        std::vector<std::size_t> cols;
        for (std::size_t i = 1; i < n; ++i) {
            rows.push_back(i);
        }
        for (std::size_t k = 0; k < n; ++k) {
            if (k != j) {
                cols.push_back(k);
            }
        }
        const mpq_class term = m(0, j) * det_by_cofactors(m.submatrix(rows, cols));
        total += (j % 2 == 0) ? term : mpq_class(-term);
    }
    return total;
}

}  // namespace

TEST_CASE("determinant") {
    RationalMatrix m(2, 2);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 3;
    m(1, 1) = 4;
    CHECK(determinant(m) == -2);
    CHECK(determinant(RationalMatrix::identity(4)) == 1);
    CHECK(determinant(RationalMatrix(0, 0)) == 1);
    CHECK_THROWS_AS(determinant(RationalMatrix(2, 3)), std::invalid_argument);

    RationalMatrix swap(2, 2);
    swap(0, 1) = 1;
    swap(1, 0) = 1;
    CHECK(determinant(swap) == -1);
}

TEST_CASE("determinant matches cofactor expansion") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<int> draw(-4, 4);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 5);
        RationalMatrix m(n, n);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                m(i, j) = mpq_class(draw(rng), 1 + std::abs(draw(rng)));
                m(i, j).canonicalize();
            }
        }
        if (trial % 7 == 0 && n > 1) {
            for (std::size_t j = 0; j < n; ++j) {
                m(n - 1, j) = m(0, j) * 2;
            }
        }
        REQUIRE(determinant(m) == det_by_cofactors(m));
    }
}

TEST_CASE("rank") {
    IntMatrix m(3, 3);
    m(0, 0) = 1;
    m(0, 1) = 2;
    m(1, 0) = 2;
    m(1, 1) = 4;
    m(2, 2) = 5;
    CHECK(exact_rank(m) == 2);
    CHECK(rank_mod_p(m) == 2);
    CHECK(rank(RationalMatrix(3, 4)) == 0);

    // rank over Z/2 is smaller than over Q
    IntMatrix two(1, 1);
    two(0, 0) = 2;
    CHECK(rank_mod_p(two, 2) == 0);
    CHECK(exact_rank(two) == 1);
}

TEST_CASE("checked rank falls back on overflow") {
    const std::int64_t big = std::numeric_limits<std::int64_t>::max() / 2;
    IntMatrix m(3, 3);
    m(0, 0) = big;
    m(0, 1) = 1;
    m(1, 0) = 3;
    m(1, 1) = big;
    m(2, 2) = 7;
    CHECK_FALSE(rank_checked(m));
    CHECK(exact_rank(m) == 3);
}

TEST_CASE("product") {
    RationalMatrix a(2, 3);
    RationalMatrix b(3, 1);
    a(0, 0) = 1;
    a(1, 2) = mpq_class(1, 2);
    b(0, 0) = 4;
    b(2, 0) = 6;
    const RationalMatrix c = a * b;
    CHECK(c(0, 0) == 4);
    CHECK(c(1, 0) == 3);
    CHECK_THROWS_AS(a * a, std::invalid_argument);
}
