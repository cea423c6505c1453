#include <doctest.h>

#include "support.hpp"

#include <arrecip/exact_linear.hpp>

#include <random>

using namespace arrecip;

namespace {

IntegerMatrix random_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, int bound) {
    std::uniform_int_distribution<int> entry(-bound, bound);
    IntegerMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m(i, j) = entry(rng);
    return m;
}

bool is_diagonal(const IntegerMatrix& d) {
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            if (i != j && d(i, j) != 0) return false;
    return true;
}

}  // namespace

TEST_SUITE("exact_linear") {

TEST_CASE("rref of small matrices") {
    auto id = rref(to_rational(IntegerMatrix{{1, 0}, {0, 1}}));
    CHECK(id.reduced == to_rational(IntegerMatrix{{1, 0}, {0, 1}}));
    CHECK(id.pivot_cols == std::vector<std::size_t>{0, 1});
    CHECK(id.rank == 2);

    auto col = rref(to_rational(IntegerMatrix{{1}, {2}}));
    CHECK(col.reduced == to_rational(IntegerMatrix{{1}, {0}}));
    CHECK(col.rank == 1);

    auto three = rref(to_rational(IntegerMatrix{{1, 0}, {0, 1}, {1, 1}}));
    CHECK(three.reduced == to_rational(IntegerMatrix{{1, 0}, {0, 1}, {0, 0}}));
    CHECK(three.rank == 2);
}

TEST_CASE("consistency of linear systems") {
    const IntegerMatrix m{{1}, {2}};
    const std::vector<Integer> good{1, 2}, bad{1, 1}, zero{0, 0};
    CHECK(is_consistent(m, good));
    CHECK_FALSE(is_consistent(m, bad));
    CHECK(is_consistent(m, zero));
    CHECK(is_consistent(IntegerMatrix{{0, 0}, {0, 0}}, zero));
    const std::vector<Integer> short_b{1};
    CHECK_THROWS_AS(is_consistent(m, short_b), std::invalid_argument);
}

TEST_CASE("solve agrees with is_consistent and satisfies the system") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 4) % 3;
        const IntegerMatrix m = random_matrix(rng, rows, cols, 2);
        const IntegerMatrix bm = random_matrix(rng, rows, 1, 3);
        const std::vector<Integer> b = bm.column(0);
        const Solution s = solve(m, b);
        CHECK(s.found == is_consistent(m, b));
        auto aug = testing::rows_of(m);
        for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i].get_si());
        CHECK(s.found == (testing::rank_of(aug) == testing::rank_of(testing::rows_of(m))));
        if (!s.found) continue;
        for (std::size_t i = 0; i < rows; ++i) {
            Rational v = 0;
            for (std::size_t j = 0; j < cols; ++j) v += Rational(m(i, j)) * s.x[j];
            CHECK(v == Rational(b[i]));
        }
    }
}

TEST_CASE("rank matches an independent elimination") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const IntegerMatrix m = random_matrix(rng, 1 + trial % 5, 1 + trial % 4, 2);
        CHECK(rank(m) == static_cast<std::size_t>(testing::rank_of(testing::rows_of(m))));
    }
}

TEST_CASE("smith normal form examples") {
    const IntegerMatrix diag{{1, 0}, {0, 6}};
    const SmithForm s = smith_normal_form(diag);
    CHECK(s.d == diag);
    CHECK(s.u == IntegerMatrix::identity(2));
    CHECK(s.v == IntegerMatrix::identity(2));

    CHECK(smith_normal_form(IntegerMatrix{{2}}).d == IntegerMatrix{{2}});
    CHECK(elementary_divisors(IntegerMatrix{{1}, {2}}) == std::vector<Integer>{1});
    CHECK(elementary_divisors(IntegerMatrix{{2, 4}, {6, 8}}) == std::vector<Integer>{2, 4});
}

TEST_CASE("smith normal form is a unimodular diagonalisation") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 150; ++trial) {
        const std::size_t rows = 1 + trial % 4, cols = 1 + (trial / 3) % 4;
        const IntegerMatrix m = random_matrix(rng, rows, cols, 4);
        const SmithForm s = smith_normal_form(m);
        CHECK(s.u * m * s.v == s.d);
        CHECK(is_diagonal(s.d));
        CHECK(abs(determinant(s.u)) == 1);
        CHECK(abs(determinant(s.v)) == 1);
        const std::size_t k = std::min(rows, cols);
        for (std::size_t i = 0; i < k; ++i) {
            CHECK(s.d(i, i) >= 0);
            if (i + 1 < k && s.d(i, i) != 0) CHECK(s.d(i + 1, i + 1) % s.d(i, i) == 0);
        }
    }
}

TEST_CASE("hermite normal form is canonical for the row lattice") {
    const IntegerMatrix a{{2, 4}, {1, 3}};
    const IntegerMatrix b{{1, 3}, {3, 7}};  // same lattice: row ops with det ±1
    CHECK(hermite_normal_form(a) == hermite_normal_form(b));
    CHECK(hermite_normal_form(IntegerMatrix{{0, 0}, {2, 2}}).rows() == 1);
}

TEST_CASE("determinant") {
    CHECK(determinant(IntegerMatrix{{2, 1}, {1, 3}}) == 5);
    CHECK(determinant(IntegerMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 0);
    CHECK(determinant(IntegerMatrix{{0, 1}, {1, 0}}) == -1);
}

TEST_CASE("saturated lattice bases") {
    const LatticeBasis line = saturated_lattice_basis(IntegerMatrix{{1}, {2}});
    CHECK(line.rank == 1);
    CHECK((line.basis == IntegerMatrix{{1}, {2}} || line.basis == IntegerMatrix{{-1}, {-2}}));

    const LatticeBasis full = saturated_lattice_basis(IntegerMatrix::identity(3));
    CHECK(full.rank == 3);
    CHECK(abs(determinant(full.basis)) == 1);

    // Λ = {(a, b, a+b)}: same lattice as the columns (1,0,1), (0,1,1)
    const LatticeBasis plane = saturated_lattice_basis(IntegerMatrix{{1, 0}, {0, 1}, {1, 1}});
    CHECK(plane.rank == 2);
    CHECK(hermite_normal_form(plane.basis.transposed()) == IntegerMatrix{{1, 0, 1}, {0, 1, 1}});
}

TEST_CASE("saturated bases are saturated and span the column space") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
        const IntegerMatrix a = random_matrix(rng, 2 + trial % 3, 1 + trial % 2, 3);
        const LatticeBasis l = saturated_lattice_basis(a);
        CHECK(l.rank == rank(a));
        if (l.rank == 0) continue;
        CHECK(is_saturated(l.basis));
        CHECK(elementary_divisors(l.basis) == std::vector<Integer>(l.rank, 1));
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const std::vector<Integer> col = a.column(j);
            CHECK(is_consistent(l.basis, col));
        }
    }
}

TEST_CASE("total unimodularity") {
    CHECK(is_totally_unimodular(IntegerMatrix::identity(3)));
    CHECK_FALSE(is_totally_unimodular(IntegerMatrix{{1}, {2}}));
    // rows x_i - x_j of the path 1-2-3-4
    CHECK(is_totally_unimodular(IntegerMatrix{{1, -1, 0, 0}, {0, 1, -1, 0}, {0, 0, 1, -1}}));
    CHECK_THROWS_AS(is_totally_unimodular(IntegerMatrix(13, 1)), GuardExceeded);
}

TEST_CASE("maximal minors") {
    auto minors = nonzero_maximal_minors(IntegerMatrix{{1}, {2}});
    std::sort(minors.begin(), minors.end());
    CHECK(minors == std::vector<Integer>{1, 2});
}

}
