#include <doctest.h>

#include <random>

#include "faulhaber/determinant.hpp"
#include "oracles.hpp"

using namespace faulhaber;
using faulhaber::testing::cofactor_det;
using faulhaber::testing::random_matrix;
using faulhaber::testing::to_rows;

namespace {

IntMatrix identity(std::size_t n) {
    IntMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

const IntMatrix printed_b8 = {{1, 3, 0, 0, 0, 0, 0},     {2, 6, 4, 0, 0, 0, 0},     {3, 10, 10, 5, 0, 0, 0},
                              {4, 15, 20, 15, 6, 0, 0},  {5, 21, 35, 35, 21, 7, 0}, {6, 28, 56, 70, 56, 28, 8},
                              {7, 36, 84, 126, 126, 84, 36}};

}  // namespace

TEST_CASE("matrix construction") {
    CHECK_THROWS_AS(IntMatrix(0), ContractViolation);
    CHECK_THROWS_AS((IntMatrix{{1, 2}, {3}}), ContractViolation);
    IntMatrix m = {{1, 2}, {3, 4}};
    m.swap_rows(0, 1);
    CHECK(m == IntMatrix{{3, 4}, {1, 2}});
}

TEST_CASE("small determinants") {
    CHECK(det_exact(identity(5)) == 1);
    CHECK(det_exact(IntMatrix{{2, 1}, {3, 2}}) == 1);
    CHECK(det_exact(IntMatrix{{-4}}) == -4);
    CHECK(det_exact(IntMatrix{{0, 1}, {1, 0}}) == -1);
    CHECK(det_exact(IntMatrix{{0, 0}, {1, 0}}) == 0);
    CHECK(det_exact(IntMatrix{{0, 2, 1}, {0, 0, 3}, {5, 0, 0}}) == 30);
}

TEST_CASE("printed k = 8 matrix") {
    CHECK(cofactor_det(to_rows(printed_b8)) == -12096);
    CHECK(det_exact(printed_b8) == -12096);
}

TEST_CASE("fraction-free elimination matches cofactor expansion") {
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 500; ++trial) {
        const auto m = random_matrix(rng, dim(rng), -9, 9);
        CHECK(det_exact(m) == cofactor_det(to_rows(m)));
    }
    // Sparse matrices exercise the pivot search.
    for (int trial = 0; trial < 200; ++trial) {
        const auto m = random_matrix(rng, dim(rng) + 2, -1, 1);
        CHECK(det_exact(m) == cofactor_det(to_rows(m)));
    }
}

TEST_CASE("repeated rows and row swaps") {
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<std::size_t> dim(2, 6);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t n = dim(rng);
        std::uniform_int_distribution<std::size_t> row(0, n - 1);
        auto m = random_matrix(rng, n, -9, 9);
        const std::size_t a = row(rng);
        std::size_t b = row(rng);
        if (a == b) b = (a + 1) % n;

        auto swapped = m;
        swapped.swap_rows(a, b);
        CHECK(det_exact(swapped) == -det_exact(m));

        for (std::size_t c = 0; c < n; ++c) m(b, c) = m(a, c);
        CHECK(det_exact(m) == 0);
    }
}

TEST_CASE("order-k builder") {
    CHECK(build_matrix_order_k(1) == IntMatrix{{1}});
    CHECK(build_matrix_order_k(2) == IntMatrix{{2, 1}, {3, 2}});
    CHECK(build_matrix_order_k(3) == IntMatrix{{2, 0, 1}, {3, 3, 2}, {4, 6, 3}});
    CHECK(det_exact(build_matrix_order_k(3)) == 0);
    CHECK_THROWS_AS(build_matrix_order_k(0), DomainError);
}

TEST_CASE("order-(k-1) builder") {
    CHECK(build_matrix_order_k1(8) == printed_b8);
    CHECK(build_matrix_order_k1(2) == IntMatrix{{1}});
    CHECK(build_matrix_order_k1(3) == IntMatrix{{1, 3}, {2, 6}});
    CHECK_THROWS_AS(build_matrix_order_k1(1), DomainError);
    CHECK_THROWS_AS(build_matrix_order_k1(0), DomainError);
}

TEST_CASE("bernoulli numbers from determinants") {
    CHECK(bernoulli_from_det_k(1) == Rational(-1, 2));
    CHECK(bernoulli_from_det_k(2) == Rational(1, 6));
    CHECK(bernoulli_from_det_k(3) == 0);
    CHECK(bernoulli_from_det_k(4) == Rational(-1, 30));
    CHECK(bernoulli_from_det_k1(2) == Rational(1, 6));
    CHECK(bernoulli_from_det_k1(8) == Rational(-1, 30));
    CHECK(bernoulli_from_det_k1(20) == Rational(-174611, 330));
    CHECK_THROWS_AS(bernoulli_from_det_k1(1), DomainError);

    // Builder matrices against the cofactor oracle as well.
    for (unsigned long k = 2; k <= 8; ++k) {
        CHECK(det_exact(build_matrix_order_k(k)) == cofactor_det(to_rows(build_matrix_order_k(k))));
        CHECK(det_exact(build_matrix_order_k1(k)) == cofactor_det(to_rows(build_matrix_order_k1(k))));
    }
}
