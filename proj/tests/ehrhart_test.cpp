#include <doctest.h>

#include "support.hpp"

#include <arrecip/ehrhart.hpp>

#include <random>

using namespace arrecip;

namespace {

SubsetGeometry geometry(const IntegerMatrix& forms) { return SubsetGeometry(forms); }

IntegerMatrix random_forms(std::mt19937_64& rng, std::size_t n, std::size_t d) {
    std::uniform_int_distribution<int> entry(-3, 3);
    IntegerMatrix m(n, d);
    for (std::size_t i = 0; i < n; ++i) {
        do {
            for (std::size_t j = 0; j < d; ++j) m(i, j) = entry(rng);
        } while (m.is_zero_row(i));
    }
    return m;
}

}  // namespace

TEST_SUITE("ehrhart") {

TEST_CASE("counts on small slices") {
    const auto x = geometry(IntegerMatrix{{1}});
    const auto pair = geometry(IntegerMatrix{{1}, {2}});
    const auto square = geometry(IntegerMatrix::identity(2));
    CHECK(count_points(x, 5) == 11);
    CHECK(count_points(pair, 2) == 3);
    CHECK(count_points(pair, 3) == 3);
    CHECK(count_points(square, 1) == 9);
    CHECK(count_points(x, 0) == 1);
    CHECK_THROWS_AS(count_points(x, -1), std::invalid_argument);
}

TEST_CASE("brute force counts") {
    CHECK(count_points_bruteforce(geometry(IntegerMatrix{{1}, {2}}), 2) == testing::slice_count({{1}, {2}}, 2));
    CHECK(count_points_bruteforce(geometry(IntegerMatrix{{1}}), 0) == 1);
    const IntegerMatrix a2{{1, 0}, {0, 1}, {1, 1}};
    CHECK(count_points_bruteforce(geometry(a2), 1) == testing::slice_count(testing::rows_of(a2), 1));
    CHECK(count_points_bruteforce(geometry(a2), 1) == 7);
    CHECK_THROWS_AS(count_points_bruteforce(geometry(IntegerMatrix::identity(3)), 300), GuardExceeded);
}

TEST_CASE("interior counts") {
    CHECK(count_interior_points(geometry(IntegerMatrix{{1}}), 1) == 1);
    CHECK(count_interior_points(geometry(IntegerMatrix{{1}, {2}}), 3) == count_points(geometry(IntegerMatrix{{1}, {2}}), 2));
    CHECK(count_interior_points(geometry(IntegerMatrix::identity(2)), 2) == 9);
}

TEST_CASE("Ehrhart quasi-polynomials of small slices") {
    const QuasiPolynomial x = ehrhart_quasipoly(geometry(IntegerMatrix{{1}}));
    CHECK(x.period() == 1);
    CHECK(x.constituent(0) == Polynomial{1, 2});

    const QuasiPolynomial pair = ehrhart_quasipoly(geometry(IntegerMatrix{{1}, {2}}));
    CHECK(pair.period() == 2);
    CHECK(pair.constituent(0) == Polynomial{1, 1});
    CHECK(pair.constituent(1) == Polynomial{0, 1});

    // 2x = b is solvable over Q for every b, so the slice is the whole cube
    const QuasiPolynomial doubled = ehrhart_quasipoly(geometry(IntegerMatrix{{2}}));
    CHECK(doubled.period() == 1);
    for (std::int64_t m = 0; m <= 6; ++m) CHECK(doubled.evaluate(m) == testing::slice_count({{2}}, static_cast<int>(m)));
}

TEST_CASE("normalized volumes") {
    CHECK(normalized_volume(geometry(IntegerMatrix{{1}})) == 2);
    CHECK(normalized_volume(geometry(IntegerMatrix{{2}})) == 2);
    CHECK(normalized_volume(geometry(IntegerMatrix{{1}, {2}})) == 1);
    CHECK(normalized_volume(geometry(IntegerMatrix::identity(3))) == 8);
    CHECK(normalized_volume(geometry(IntegerMatrix{{1, 0}, {0, 1}, {1, 1}})) == 3);
}

TEST_CASE("Ehrhart reciprocity on small slices") {
    CHECK(verify_ehrhart_reciprocity(geometry(IntegerMatrix{{1}}), 6));
    CHECK(verify_ehrhart_reciprocity(geometry(IntegerMatrix{{1}, {2}}), 6));
    CHECK(verify_ehrhart_reciprocity(geometry(IntegerMatrix::identity(2)), 6));
    // a deliberately wrong quasi-polynomial is rejected
    CHECK_FALSE(verify_ehrhart_reciprocity(geometry(IntegerMatrix{{1}}), QuasiPolynomial(Polynomial{2, 2}), 3));
}

TEST_CASE("lattice identity depends only on the column space") {
    const auto a = lattice_identity(IntegerMatrix{{1, 0}, {0, 1}, {1, 1}});
    CHECK(a.rank == 2);
    CHECK(a.key == lattice_identity(IntegerMatrix{{2, 0}, {0, 2}, {2, 2}}).key);
    CHECK(a.key == lattice_identity(IntegerMatrix{{1, 1}, {0, 1}, {1, 2}}).key);
    // rows are coordinates of Z^n, so permuting them moves the lattice
    CHECK(a.key != lattice_identity(IntegerMatrix{{1, 1}, {0, 1}, {1, 0}}).key);
}

TEST_CASE("vertex denominators divide the minor bound") {
    CHECK(vertex_denominator(geometry(IntegerMatrix{{1}, {2}})) == 2);
    CHECK(vertex_denominator(geometry(IntegerMatrix::identity(2))) == 1);
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = geometry(random_forms(rng, 2 + trial % 3, 1 + trial % 3));
        CHECK(g.period_cap() % vertex_denominator(g) == 0);
    }
}

TEST_CASE("count table, depth-first counts and brute force agree") {
    std::mt19937_64 rng(29);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 4, d = 1 + (trial / 4) % 3;
        const IntegerMatrix forms = random_forms(rng, n, std::min(n, d));
        const auto g = geometry(forms);
        const auto rows = testing::rows_of(forms);
        const std::int64_t top = n <= 3 ? 4 : 3;
        const auto table = count_points_table(g, 12);
        for (std::int64_t m = 0; m <= 12; ++m) CHECK(Integer(static_cast<unsigned long>(table[m])) == count_points(g, m));
        for (std::int64_t m = 0; m <= top; ++m) {
            CHECK(count_points(g, m) == testing::slice_count(rows, static_cast<int>(m)));
            if (m >= 1) CHECK(count_interior_points(g, m) == testing::slice_count(rows, static_cast<int>(m), true));
        }
    }
}

TEST_CASE("fitted quasi-polynomials reproduce point counts") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 25; ++trial) {
        const std::size_t n = 2 + trial % 3, d = 1 + trial % 2;
        const auto g = geometry(random_forms(rng, n, d));
        const QuasiPolynomial f = ehrhart_quasipoly(g);
        CHECK(f.degree() == static_cast<int>(g.rank()));
        CHECK(g.period_cap() % f.period() == 0);
        for (std::int64_t m = 0; m <= 15; ++m) CHECK(f.evaluate(m) == Rational(count_points(g, m)));
        CHECK(verify_ehrhart_reciprocity(g, f, 5));
    }
}

TEST_CASE("fitting respects the work guard") {
    // rank 3 with vertex denominator 12771: the fit would need counts up to m = 51083
    const IntegerMatrix forms{{0, 2, 2}, {-2, -3, 2}, {0, 3, 3}, {1, 1, 3}, {2, -3, 3}};
    const auto g = geometry(forms);
    CHECK(vertex_denominator(g) == 12771);
    CHECK(count_points_table(g, 3).size() == 4);
    CHECK_THROWS_AS(ehrhart_quasipoly(g), GuardExceeded);
}

}
