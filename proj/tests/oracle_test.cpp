#include <doctest.h>

#include "support.hpp"

#include <arrecip/catalog.hpp>
#include <arrecip/oracle.hpp>

#include <algorithm>
#include <random>

using namespace arrecip;

namespace {

ArrangementSpec a2() { return ArrangementSpec(2, IntegerMatrix{{1, 0}, {0, 1}, {1, 1}}); }

// #{x in F_p^d avoiding every α(x) = k}, with no library code involved
long naive_ff(const testing::Rows& forms, int m, long p) {
    const std::size_t d = forms[0].size();
    std::vector<long> x(d, 0);
    long count = 0;
    while (true) {
        bool ok = true;
        for (const auto& f : forms) {
            long v = 0;
            for (std::size_t j = 0; j < d; ++j) v += f[j] * x[j];
            for (int k = -m; k <= m && ok; ++k)
                if (((v - k) % p + p) % p == 0) ok = false;
            if (!ok) break;
        }
        if (ok) ++count;
        std::size_t j = 0;
        while (j < d && x[j] == p - 1) x[j++] = 0;
        if (j == d) break;
        ++x[j];
    }
    return count;
}

}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("hyperplane lists") {
    const auto doubled = build_hyperplanes(example_two_forms(), 0);
    REQUIRE(doubled.size() == 2);
    CHECK(doubled[0] == doubled[1]);
    CHECK(build_hyperplanes(coordinate_arrangement(2), 1).size() == 6);
    const auto points = build_hyperplanes(ArrangementSpec(1, IntegerMatrix{{1}}), 2);
    CHECK(points.size() == 5);
    for (const auto& h : points) CHECK(h.dimension() == 0);
}

TEST_CASE("intersection posets") {
    const IntersectionPoset chain(build_hyperplanes(example_two_forms(), 0), 1);
    CHECK(chain.size() == 2);
    CHECK(chain.mobius() == std::vector<Integer>{1, -1});

    const IntersectionPoset grid(build_hyperplanes(coordinate_arrangement(2), 1), 2);
    CHECK(grid.rank_sizes() == std::vector<std::size_t>{9, 6, 1});
    CHECK(grid.contains(0, 7));
}

TEST_CASE("Möbius and Whitney polynomials") {
    auto mobius_of = [](const ArrangementSpec& a, std::int64_t m) {
        return mobius_chi(IntersectionPoset(build_hyperplanes(a, m), a.dimension()));
    };
    CHECK(mobius_of(example_two_forms(), 0) == Polynomial{-1, 1});
    CHECK(mobius_of(coordinate_arrangement(2), 1) == Polynomial{9, -6, 1});
    CHECK(mobius_of(a2(), 0) == Polynomial{2, -3, 1});
    CHECK(mobius_of(ArrangementSpec(1, IntegerMatrix{{1}}), 0) == Polynomial{-1, 1});

    CHECK(whitney_chi(build_hyperplanes(example_two_forms(), 0), 1) == Polynomial{-1, 1});
    CHECK(whitney_chi(build_hyperplanes(coordinate_arrangement(2), 0), 2) == Polynomial{1, -2, 1});
    CHECK_THROWS_AS(whitney_chi(build_hyperplanes(coordinate_arrangement(2), 5), 2), GuardExceeded);
}

TEST_CASE("poset does not depend on hyperplane order") {
    std::mt19937_64 rng(41);
    for (const auto& a : {a2(), root_system('B', 2).arrangement(), example_two_forms()}) {
        auto hs = build_hyperplanes(a, 1);
        const Polynomial base = mobius_chi(IntersectionPoset(hs, a.dimension()));
        for (int k = 0; k < 5; ++k) {
            std::shuffle(hs.begin(), hs.end(), rng);
            CHECK(mobius_chi(IntersectionPoset(hs, a.dimension())) == base);
        }
    }
}

TEST_CASE("finite field counts") {
    CHECK(finite_field_count(coordinate_arrangement(1), 1, 11) == 8);
    CHECK(finite_field_count(example_two_forms(), 0, 5) == 4);
    CHECK(finite_field_count(coordinate_arrangement(2), 1, 11) == 64);
    CHECK(finite_field_count(a2(), 1, 13) == naive_ff({{1, 0}, {0, 1}, {1, 1}}, 1, 13));
    CHECK_THROWS_AS(finite_field_count(a2(), 1, 12), std::invalid_argument);
    CHECK(is_prime(101));
    CHECK_FALSE(is_prime(1));
}

TEST_CASE("engine agrees with the oracles") {
    for (const auto& name : {"ex1", "coord:2", "root:A2", "root:B2", "graph:C3"}) {
        const ArrangementSpec a = catalog_entry(name).spec;
        const CharQuasiPoly c = characteristic_quasipoly(a);
        for (std::int64_t m = 0; m <= 2; ++m) {
            const auto hs = build_hyperplanes(a, m);
            const Polynomial mob = mobius_chi(IntersectionPoset(hs, a.dimension()));
            CHECK(mob == c.at(m));
            if (hs.size() <= kWhitneyMaxHyperplanes) CHECK(whitney_chi(hs, a.dimension()) == mob);
            CHECK(compare_finite_field(a, c, m, 101).matches);
        }
    }
}

}
