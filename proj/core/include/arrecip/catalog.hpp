#pragma once

// Built-in arrangement families: the two one- and d-dimensional toy
// examples, root-system Catalan arrangements with their exponent data, and
// graphical arrangements.

#include "arrecip/charpoly.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace arrecip {

class UnknownFamily : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Forms x and 2x on Q.
ArrangementSpec example_two_forms();

/// The coordinate functions x_1, ..., x_d.
ArrangementSpec coordinate_arrangement(std::size_t d);

struct RootSystemData {
    char type = 'A';
    std::size_t rank = 0;
    IntegerMatrix positive_roots;  // one form per positive root
    std::vector<int> exponents;    // ascending
    int coxeter_number = 0;
    Integer weyl_order;
    /// Set when the label names a system isomorphic to another type (D3 = A3).
    std::string isomorphism_note;

    std::string label() const { return std::string(1, type) + std::to_string(rank); }
    ArrangementSpec arrangement() const;
};

/// Supported: A_d (d >= 1), B_d and C_d (d >= 2), D_d (d >= 3), G_2.
/// Throws UnknownFamily otherwise.
RootSystemData root_system(char type, std::size_t rank);

/// Π_i (q - m h - e_i), period 1.
CharQuasiPoly catalan_product_formula(const RootSystemData& rsd);

struct FussCatalan {
    Rational n;       // r_A(m) / |W|
    Rational n_plus;  // b_A(m) / |W|
};

/// Throws std::logic_error if either value is not an integer.
FussCatalan fuss_catalan(const RootSystemData& rsd, std::int64_t m);

/// (-1)^d N(Φ,-m) = N^+(Φ,m-1) as a polynomial identity and for m = 1..window.
bool check_fuss_reciprocity(const RootSystemData& rsd, std::int64_t window);

/// Engine χ of the root arrangement equals the product formula.
bool verify_product_formula(const RootSystemData& rsd, const CharPolyOptions& options = {});

/// Simple graph on vertices 0..vertex_count-1 (printed 1-based).
class SimpleGraph {
public:
    SimpleGraph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges);

    static SimpleGraph complete(std::size_t v);
    static SimpleGraph path(std::size_t v);
    static SimpleGraph cycle(std::size_t v);

    std::size_t vertex_count() const { return vertex_count_; }
    const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
    std::size_t component_count() const;
    bool is_connected() const { return component_count() == 1; }
    /// Rank of the cycle matroid: vertices minus components.
    std::size_t cycle_rank() const { return vertex_count_ - component_count(); }

    std::string to_string() const;

private:
    std::vector<std::size_t> component_labels() const;

    std::size_t vertex_count_;
    std::vector<std::pair<std::size_t, std::size_t>> edges_;
};

/// Forms x_i - x_j on Q^r, one per edge; rank is the cycle rank, so this is
/// generally not a spanning arrangement. Throws std::invalid_argument with no edges.
IntegerMatrix graphical_arrangement(const SimpleGraph& g);

/// The same arrangement restricted to its span: one vertex per component is
/// fixed at 0, leaving a spanning arrangement in dimension cycle_rank().
ArrangementSpec graphical_essential(const SimpleGraph& g);

inline constexpr std::size_t kMaxEnumeratedVertices = 6;

/// All connected simple graphs on labelled vertices; throws GuardExceeded
/// past kMaxEnumeratedVertices.
std::vector<SimpleGraph> enumerate_connected_graphs(std::size_t v);

struct CuriousTerm {
    SimpleGraph graph;
    Rational volume;
    int sign = 1;
};

struct CuriousIdentity {
    Integer lhs;   // (d+1)^d
    Rational rhs;  // Σ_G (-1)^{e(G)-d} vol(P_{F(G)})
    bool equal = false;
    std::vector<CuriousTerm> terms;
};

inline constexpr std::size_t kMaxCuriousDimension = 3;

/// Signed volumes of the spanning subsets of the type A_d root forms, indexed
/// by connected graphs on d+1 vertices. Throws GuardExceeded past
/// kMaxCuriousDimension unless forced.
CuriousIdentity verify_curious_identity(std::size_t d, bool force = false);

struct TuPolynomialityReport {
    bool totally_unimodular = false;
    bool all_periods_one = false;
    int region_degree = -1;
    std::size_t cycle_rank = 0;
    bool ok = false;
};

TuPolynomialityReport check_tu_polynomiality(const SimpleGraph& g, const CharPolyOptions& options = {});

struct CatalogEntry {
    std::string name;
    ArrangementSpec spec;
    std::optional<RootSystemData> root;
    std::optional<SimpleGraph> graph;
};

/// Resolves names such as "ex1", "coord:3", "root:B2", "graph:K4", "graph:P3",
/// "graph:C5" or an explicit edge list "graph:4:1-2,2-3,3-4". Throws
/// UnknownFamily for anything else.
CatalogEntry catalog_entry(const std::string& name);

/// Every named family exercised by the verification suites.
std::vector<std::string> standard_catalog();

}  // namespace arrecip
