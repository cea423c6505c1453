#include <doctest.h>

#include "support.hpp"

#include <arrecip/quasipoly.hpp>

#include <random>

using namespace arrecip;
using testing::periodic;

namespace {

// #{t in Z : |t| <= m, |2t| <= m}
long pair_count(std::int64_t m) {
    long c = 0;
    for (std::int64_t t = -m; t <= m; ++t)
        if (std::abs(2 * t) <= m) ++c;
    return c;
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
    std::int64_t q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

}  // namespace

TEST_SUITE("quasipoly") {

TEST_CASE("polynomial basics") {
    const Polynomial p{1, 2};
    CHECK(p.degree() == 1);
    CHECK(p(3) == 7);
    CHECK(Polynomial{}.degree() == -1);
    CHECK((Polynomial{1, 1} * Polynomial{-1, 1}) == Polynomial{-1, 0, 1});
    CHECK(Polynomial{1, 2}.compose_affine(-1, 0) == Polynomial{1, -2});
    CHECK(Polynomial{9, -6, 1}.to_string("q") == "q^2 - 6*q + 9");
    CHECK(interpolate({0, 1, 2}, {1, 9, 25}) == Polynomial{1, 4, 4});
    CHECK_THROWS_AS(interpolate({1, 1}, {0, 0}), std::invalid_argument);
}

TEST_CASE("evaluate") {
    CHECK(QuasiPolynomial::constant(7).evaluate(12) == 7);
    CHECK(QuasiPolynomial(Polynomial{1, 2}).evaluate(3) == 7);
    const auto regions = periodic({Polynomial{2, 3}, Polynomial{3, 3}});
    CHECK(regions.evaluate(2) == 8);
    CHECK(regions.evaluate(3) == 12);
    CHECK(regions.evaluate(-1) == 0);  // odd constituent at -1
    CHECK(regions.residue_of(-1) == 1);
}

TEST_CASE("fit from samples") {
    CHECK(equals(fit({{0, 1}, {1, 3}, {2, 5}, {3, 7}}, 1, 1), Polynomial{1, 2}));

    std::vector<Sample> pairs;
    for (std::int64_t m = 0; m < 6; ++m) pairs.push_back({m, Rational(pair_count(m))});
    const QuasiPolynomial f = fit(pairs, 2, 1);
    CHECK(f.period() == 2);
    CHECK(f.constituent(0) == Polynomial{1, 1});
    CHECK(f.constituent(1) == Polynomial{0, 1});

    const QuasiPolynomial sq = fit({{0, 1}, {1, 9}, {2, 25}}, 1, 2);
    CHECK(equals(sq, Polynomial{1, 4, 4}));

    CHECK_THROWS_AS(fit(pairs, 1, 1), FitError);
    CHECK_THROWS_AS(fit({{0, 1}}, 1, 1), FitError);
}

TEST_CASE("fit round trip on random quasi-polynomials") {
    std::mt19937_64 rng(17);
    std::uniform_int_distribution<int> coeff(-5, 5);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t period = 1 + trial % 4;
        const int degree = trial % 3;
        std::vector<Polynomial> parts;
        for (std::size_t j = 0; j < period; ++j) {
            std::vector<Rational> c(static_cast<std::size_t>(degree) + 1);
            for (auto& x : c) {
                x = Rational(coeff(rng), 1 + std::abs(coeff(rng)));
                x.canonicalize();
            }
            parts.emplace_back(c);
        }
        const QuasiPolynomial f(parts);
        std::vector<Sample> samples;
        for (std::int64_t m = -3; m < static_cast<std::int64_t>(period) * (degree + 2); ++m)
            samples.push_back({m, f.evaluate(m)});
        CHECK(equals(fit(samples, period, degree), f));
        const QuasiPolynomial g = minimal_period_fit([&](std::int64_t m) { return f.evaluate(m); }, degree, 8);
        CHECK(equals(g, f));
        CHECK(g.period() == f.reduced().period());
    }
}

TEST_CASE("minimal period search") {
    CHECK(minimal_period_fit([](std::int64_t m) { return Rational(2 * m + 1); }, 1, 6).period() == 1);
    CHECK(minimal_period_fit([](std::int64_t m) { return Rational(pair_count(m)); }, 1, 6).period() == 2);
    const auto third = minimal_period_fit([](std::int64_t m) { return Rational(floor_div(m, 3)); }, 1, 6);
    CHECK(third.period() == 3);
    for (std::int64_t m = -10; m <= 10; ++m) CHECK(third.evaluate(m) == floor_div(m, 3));
    CHECK_THROWS_AS(minimal_period_fit([](std::int64_t m) { return Rational(m * m); }, 1, 4), FitError);
}

TEST_CASE("candidate search with a trusted last period") {
    const std::int64_t offset[6] = {0, 5, 1, 4, 2, 3};
    auto value = [&](std::int64_t m) { return m + offset[((m % 6) + 6) % 6]; };
    std::int64_t highest = -1;
    auto oracle = [&](std::int64_t m) {
        highest = std::max(highest, m);
        return Rational(value(m));
    };
    const auto f = minimal_period_fit(oracle, 1, {1, 2, 3, 6}, {}, true);
    CHECK(f.period() == 6);
    CHECK(highest == 11);  // two samples per residue for the trusted candidate
    for (std::int64_t m = -13; m <= 13; ++m) CHECK(f.evaluate(m) == value(m));
}

TEST_CASE("divisors") {
    CHECK(divisors(1) == std::vector<std::uint64_t>{1});
    CHECK(divisors(12) == std::vector<std::uint64_t>{1, 2, 3, 4, 6, 12});
    CHECK(divisors(49) == std::vector<std::uint64_t>{1, 7, 49});
}

TEST_CASE("linear combinations reduce the period") {
    const QuasiPolynomial f = periodic({Polynomial{1, 1}, Polynomial{0, 1}});
    const QuasiPolynomial g = periodic({Polynomial{0, 1}, Polynomial{1, 1}});
    const QuasiPolynomial zero = linear_combine({{1, f}, {-1, f}});
    CHECK(zero.degree() == -1);
    CHECK(zero.period() == 1);
    const QuasiPolynomial sum = linear_combine({{1, f}, {1, g}});
    CHECK(sum.period() == 1);
    CHECK(sum.constituent(0) == Polynomial{1, 2});
    CHECK(equals(scale(Polynomial{1, 2}, 2), Polynomial{2, 4}));
}

TEST_CASE("precompose with m -> -m and m -> m-1") {
    const QuasiPolynomial odd_line(Polynomial{1, 2});
    CHECK(equals(precompose_affine(odd_line, -1, 0), Polynomial{1, -2}));

    const QuasiPolynomial f = periodic({Polynomial{1, 1}, Polynomial{0, 1}});
    const QuasiPolynomial shifted = precompose_affine(f, 1, -1);
    for (std::int64_t m = -8; m <= 8; ++m) CHECK(shifted.evaluate(m) == f.evaluate(m - 1));
    CHECK(shifted.evaluate(2) == 1);
    CHECK(shifted.evaluate(3) == 3);

    const QuasiPolynomial c = QuasiPolynomial::constant(5);
    CHECK(equals(precompose_affine(c, -1, 4), c));
}

TEST_CASE("pointwise equality") {
    CHECK(equals(periodic({Polynomial{1, 2}, Polynomial{1, 2}}), Polynomial{1, 2}));
    CHECK_FALSE(equals(Polynomial{1, 2}, Polynomial{-1, 2}));
    const QuasiPolynomial c0 = periodic({Polynomial{-1, -3}, Polynomial{-2, -3}});
    const QuasiPolynomial swapped = periodic({Polynomial{-2, -3}, Polynomial{-1, -3}});
    CHECK_FALSE(equals(c0, swapped));
}

TEST_CASE("lift and reduce") {
    const QuasiPolynomial f = periodic({Polynomial{1, 1}, Polynomial{0, 1}});
    const QuasiPolynomial lifted = f.lifted(6);
    CHECK(lifted.period() == 6);
    CHECK(equals(lifted, f));
    CHECK(lifted.reduced().period() == 2);
    CHECK(f.leading_coefficients(1) == std::vector<Rational>{1, 1});
}

}
