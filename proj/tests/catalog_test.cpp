#include <doctest.h>

#include "support.hpp"

#include <arrecip/arrangement_file.hpp>
#include <arrecip/catalog.hpp>
#include <arrecip/exact_linear.hpp>

using namespace arrecip;

TEST_SUITE("catalog") {

TEST_CASE("toy families") {
    const ArrangementSpec ex = example_two_forms();
    CHECK(ex.size() == 2);
    CHECK(ex.dimension() == 1);
    CHECK(coordinate_arrangement(3).forms() == IntegerMatrix::identity(3));
}

TEST_CASE("root system tables") {
    const RootSystemData a2 = root_system('A', 2);
    CHECK(a2.positive_roots.rows() == 3);
    CHECK(a2.exponents == std::vector<int>{1, 2});
    CHECK(a2.coxeter_number == 3);
    CHECK(a2.weyl_order == 6);

    const RootSystemData b2 = root_system('B', 2);
    CHECK(b2.positive_roots.rows() == 4);
    CHECK(b2.exponents == std::vector<int>{1, 3});
    CHECK(b2.coxeter_number == 4);
    CHECK(b2.weyl_order == 8);

    const RootSystemData g2 = root_system('G', 2);
    CHECK(g2.positive_roots.rows() == 6);
    CHECK(g2.exponents == std::vector<int>{1, 5});
    CHECK(g2.coxeter_number == 6);
    CHECK(g2.weyl_order == 12);

    for (const auto& [t, r] : std::vector<std::pair<char, std::size_t>>{{'A', 3}, {'B', 3}, {'C', 3}, {'D', 4}}) {
        const RootSystemData s = root_system(t, r);
        // number of positive roots is d·h/2, and h - e_i permutes the exponents
        CHECK(2 * s.positive_roots.rows() == r * static_cast<std::size_t>(s.coxeter_number));
        std::vector<int> mirrored;
        for (auto e : s.exponents) mirrored.push_back(s.coxeter_number - e);
        std::sort(mirrored.begin(), mirrored.end());
        CHECK(mirrored == s.exponents);
        CHECK(rank(s.positive_roots) == r);
    }
    CHECK_THROWS_AS(root_system('E', 6), UnknownFamily);
    CHECK_FALSE(root_system('D', 3).isomorphism_note.empty());
}

TEST_CASE("product formula") {
    const CharQuasiPoly a2 = catalan_product_formula(root_system('A', 2));
    for (std::int64_t m = 0; m <= 4; ++m)
        for (long q = -4; q <= 4; ++q) CHECK(a2.at(m)(q) == testing::linear_product({{3, 1}, {3, 2}}, q, m));
    CHECK(a2.at(1) == Polynomial{20, -9, 1});
    const CharQuasiPoly b2 = catalan_product_formula(root_system('B', 2));
    for (std::int64_t m = 0; m <= 4; ++m)
        for (long q = -4; q <= 4; ++q) CHECK(b2.at(m)(q) == testing::linear_product({{4, 1}, {4, 3}}, q, m));

    CHECK(verify_product_formula(root_system('A', 2)));
    CHECK(verify_product_formula(root_system('B', 2)));
    CHECK(verify_product_formula(root_system('G', 2)));
}

TEST_CASE("Fuss-Catalan numbers") {
    const FussCatalan a2 = fuss_catalan(root_system('A', 2), 1);
    CHECK(a2.n == 5);
    CHECK(a2.n_plus == 2);
    CHECK(fuss_catalan(root_system('A', 3), 1).n == 14);
    CHECK(fuss_catalan(root_system('G', 2), 1).n == 8);
    CHECK(fuss_catalan(root_system('A', 1), 3).n == 4);
    CHECK(check_fuss_reciprocity(root_system('A', 1), 10));
    CHECK(check_fuss_reciprocity(root_system('A', 2), 10));
    CHECK(check_fuss_reciprocity(root_system('B', 2), 10));
}

TEST_CASE("graphs") {
    const SimpleGraph path(3, {{0, 1}, {1, 2}});
    CHECK(graphical_arrangement(path).rows() == 2);
    CHECK(rank(graphical_arrangement(path)) == 2);
    const SimpleGraph triangle = SimpleGraph::cycle(3);
    CHECK(graphical_arrangement(triangle).rows() == 3);
    CHECK(rank(graphical_arrangement(triangle)) == 2);
    CHECK(is_totally_unimodular(graphical_arrangement(triangle)));
    CHECK(rank(graphical_arrangement(SimpleGraph(2, {{0, 1}}))) == 1);
    CHECK(graphical_essential(SimpleGraph::complete(4)).dimension() == 3);

    CHECK(enumerate_connected_graphs(2).size() == 1);
    CHECK(enumerate_connected_graphs(3).size() == 4);
    CHECK(enumerate_connected_graphs(4).size() == 38);
    CHECK_THROWS_AS(enumerate_connected_graphs(7), GuardExceeded);
}

TEST_CASE("totally unimodular graphs have polynomial counts") {
    for (const auto& g : {SimpleGraph::cycle(3), SimpleGraph::path(3), SimpleGraph(4, {{0, 1}, {2, 3}})}) {
        const TuPolynomialityReport r = check_tu_polynomiality(g);
        CHECK(r.ok);
        CHECK(r.totally_unimodular);
        CHECK(r.all_periods_one);
        CHECK(r.region_degree == 2);
        CHECK(r.cycle_rank == 2);
    }
}

TEST_CASE("signed volume identity") {
    const CuriousIdentity one = verify_curious_identity(1);
    CHECK(one.lhs == 2);
    CHECK(one.rhs == 2);
    CHECK(one.equal);

    const CuriousIdentity two = verify_curious_identity(2);
    CHECK(two.lhs == 9);
    CHECK(two.equal);
    REQUIRE(two.terms.size() == 4);
    Rational positive = 0, negative = 0;
    for (const auto& t : two.terms) (t.sign > 0 ? positive : negative) += t.volume;
    CHECK(positive == 12);
    CHECK(negative == 3);
    CHECK_THROWS_AS(verify_curious_identity(4), GuardExceeded);
}

TEST_CASE("catalog names") {
    CHECK(catalog_entry("ex1").spec == example_two_forms());
    CHECK(catalog_entry("coord:3").spec == coordinate_arrangement(3));
    CHECK(catalog_entry("root:B2").root.has_value());
    CHECK(catalog_entry("graph:K4").graph->edges().size() == 6);
    CHECK(catalog_entry("graph:4:1-2,2-3,3-4").spec.dimension() == 3);
    CHECK_THROWS_AS(catalog_entry("root:Q2"), UnknownFamily);
    CHECK_THROWS_AS(catalog_entry("nothing"), UnknownFamily);
}

TEST_CASE("arrangement files round trip") {
    for (const auto& name : standard_catalog()) {
        const ArrangementSpec a = catalog_entry(name).spec;
        CHECK(parse_arrangement_text(emit_arrangement(a)) == a);
    }
    const ArrangementSpec parsed = parse_arrangement_text("# two forms\nd=1\n1\n2  # doubled\n\n");
    CHECK(parsed == example_two_forms());
}

TEST_CASE("arrangement file errors") {
    CHECK_THROWS_AS(parse_arrangement_text("1 0\n"), ParseError);
    CHECK_THROWS_AS(parse_arrangement_text("d=2\n1 0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_arrangement_text("d=2\n1 x\n"), ParseError);
    try {
        parse_arrangement_text("d=2\n1 0\n0 0\n");
        FAIL("zero form accepted");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_arrangement_text("d=2\n1 0\n2 0\n"), InvalidArrangement);
}

}
