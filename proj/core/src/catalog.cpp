#include "arrecip/catalog.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace arrecip {

ArrangementSpec example_two_forms() { return ArrangementSpec(1, IntegerMatrix{{1}, {2}}, "ex1"); }

ArrangementSpec coordinate_arrangement(std::size_t d) {
    if (d == 0) throw std::invalid_argument("coordinate_arrangement: d must be positive");
    return ArrangementSpec(d, IntegerMatrix::identity(d), "coord:" + std::to_string(d));
}

namespace {

Integer factorial(std::size_t n) {
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

// Rows e_i - e_j and e_i + e_j for i < j.
void append_pairs(std::vector<std::vector<Integer>>& rows, std::size_t d, bool with_sums) {
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = i + 1; j < d; ++j) {
            std::vector<Integer> diff(d, Integer(0));
            diff[i] = 1;
            diff[j] = -1;
            rows.push_back(diff);
            if (with_sums) {
                diff[j] = 1;
                rows.push_back(diff);
            }
        }
}

void append_axes(std::vector<std::vector<Integer>>& rows, std::size_t d, long scale) {
    for (std::size_t i = 0; i < d; ++i) {
        std::vector<Integer> axis(d, Integer(0));
        axis[i] = scale;
        rows.push_back(axis);
    }
}

}  // namespace

ArrangementSpec RootSystemData::arrangement() const { return ArrangementSpec(rank, positive_roots, "root:" + label()); }

RootSystemData root_system(char type, std::size_t rank) {
    RootSystemData rsd;
    rsd.type = type;
    rsd.rank = rank;
    std::vector<std::vector<Integer>> rows;
    const auto d = rank;
    switch (type) {
        case 'A':
            if (d < 1) break;
            append_axes(rows, d, 1);
            append_pairs(rows, d, false);
            for (std::size_t i = 1; i <= d; ++i) rsd.exponents.push_back(static_cast<int>(i));
            rsd.coxeter_number = static_cast<int>(d + 1);
            rsd.weyl_order = factorial(d + 1);
            break;
        case 'B':
        case 'C':
            if (d < 2) break;
            append_axes(rows, d, type == 'B' ? 1 : 2);
            append_pairs(rows, d, true);
            for (std::size_t i = 1; i <= d; ++i) rsd.exponents.push_back(static_cast<int>(2 * i - 1));
            rsd.coxeter_number = static_cast<int>(2 * d);
            rsd.weyl_order = factorial(d) << static_cast<mp_bitcnt_t>(d);
            break;
        case 'D':
            if (d < 3) break;
            append_pairs(rows, d, true);
            for (std::size_t i = 1; i + 1 <= d; ++i) rsd.exponents.push_back(static_cast<int>(2 * i - 1));
            rsd.exponents.push_back(static_cast<int>(d - 1));
            std::sort(rsd.exponents.begin(), rsd.exponents.end());
            rsd.coxeter_number = static_cast<int>(2 * d - 2);
            rsd.weyl_order = factorial(d) << static_cast<mp_bitcnt_t>(d - 1);
            if (d == 3) rsd.isomorphism_note = "D3 is isomorphic to A3";
            break;
        case 'G':
            if (d != 2) break;
            for (auto [a, b] : {std::pair{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}})
                rows.push_back({Integer(a), Integer(b)});
            rsd.exponents = {1, 5};
            rsd.coxeter_number = 6;
            rsd.weyl_order = 12;
            break;
        default:
            break;
    }
    if (rows.empty())
        throw UnknownFamily("unsupported root system " + std::string(1, type) + std::to_string(rank));
    rsd.positive_roots = IntegerMatrix::from_rows(rows, d);
    return rsd;
}

CharQuasiPoly catalan_product_formula(const RootSystemData& rsd) {
    // Coefficients of q^k as polynomials in m; start from the constant 1.
    std::vector<Polynomial> coeffs{Polynomial::constant(1)};
    for (int e : rsd.exponents) {
        const Polynomial shift{-e, -rsd.coxeter_number};  // -(h m + e)
        std::vector<Polynomial> next(coeffs.size() + 1);
        for (std::size_t k = 0; k < coeffs.size(); ++k) {
            next[k + 1] += coeffs[k];
            next[k] += coeffs[k] * shift;
        }
        coeffs = std::move(next);
    }
    CharQuasiPoly out;
    out.dimension = rsd.rank;
    for (const auto& c : coeffs) out.coefficients.emplace_back(c);
    return out;
}

namespace {

// Π_i (h m + e_i + offset) / |W| as a polynomial in m.
Polynomial fuss_polynomial(const RootSystemData& rsd, int offset) {
    Polynomial acc = Polynomial::constant(1);
    for (int e : rsd.exponents) acc = acc * Polynomial{e + offset, rsd.coxeter_number};
    return acc * (Rational(1) / Rational(rsd.weyl_order));
}

}  // namespace

FussCatalan fuss_catalan(const RootSystemData& rsd, std::int64_t m) {
    if (m < 0) throw std::invalid_argument("fuss_catalan: m must be nonnegative");
    const Rational x(static_cast<long>(m));
    FussCatalan out{fuss_polynomial(rsd, 1)(x), fuss_polynomial(rsd, -1)(x)};
    if (!is_integer(out.n) || !is_integer(out.n_plus))
        throw std::logic_error("Fuss-Catalan value is not an integer for " + rsd.label());
    return out;
}

bool check_fuss_reciprocity(const RootSystemData& rsd, std::int64_t window) {
    if (window < 1) throw std::invalid_argument("check_fuss_reciprocity: window must be positive");
    const Polynomial n = fuss_polynomial(rsd, 1);
    const Polynomial n_plus = fuss_polynomial(rsd, -1);
    const Rational sign = rsd.rank % 2 == 0 ? 1 : -1;
    if (n.compose_affine(-1, 0) * sign != n_plus.compose_affine(1, -1)) return false;
    for (std::int64_t m = 1; m <= window; ++m) {
        const Rational x(static_cast<long>(m));
        if (sign * n(-x) != n_plus(x - 1)) return false;
    }
    return true;
}

bool verify_product_formula(const RootSystemData& rsd, const CharPolyOptions& options) {
    const CharQuasiPoly engine = characteristic_quasipoly(rsd.arrangement(), options);
    const CharQuasiPoly formula = catalan_product_formula(rsd);
    if (engine.coefficients.size() != formula.coefficients.size()) return false;
    for (std::size_t i = 0; i < engine.coefficients.size(); ++i)
        if (!equals(engine.coefficients[i], formula.coefficients[i])) return false;
    return true;
}

SimpleGraph::SimpleGraph(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : vertex_count_(vertex_count) {
    for (auto [a, b] : edges) {
        if (a == b) throw std::invalid_argument("graph loops are not allowed");
        if (a >= vertex_count || b >= vertex_count) throw std::invalid_argument("edge endpoint out of range");
        edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("graph multi-edges are not allowed");
}

SimpleGraph SimpleGraph::complete(std::size_t v) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i < v; ++i)
        for (std::size_t j = i + 1; j < v; ++j) e.emplace_back(i, j);
    return SimpleGraph(v, std::move(e));
}

SimpleGraph SimpleGraph::path(std::size_t v) {
    std::vector<std::pair<std::size_t, std::size_t>> e;
    for (std::size_t i = 0; i + 1 < v; ++i) e.emplace_back(i, i + 1);
    return SimpleGraph(v, std::move(e));
}

SimpleGraph SimpleGraph::cycle(std::size_t v) {
    if (v < 3) throw std::invalid_argument("a simple cycle needs at least 3 vertices");
    auto e = path(v).edges();
    e.emplace_back(0, v - 1);
    return SimpleGraph(v, std::move(e));
}

std::vector<std::size_t> SimpleGraph::component_labels() const {
    std::vector<std::size_t> parent(vertex_count_);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : edges_) parent[find(a)] = find(b);
    std::vector<std::size_t> out(vertex_count_);
    for (std::size_t v = 0; v < vertex_count_; ++v) out[v] = find(v);
    return out;
}

std::size_t SimpleGraph::component_count() const {
    const auto labels = component_labels();
    std::size_t count = 0;
    for (std::size_t v = 0; v < vertex_count_; ++v) count += labels[v] == v;
    return count;
}

std::string SimpleGraph::to_string() const {
    std::ostringstream os;
    os << vertex_count_ << ':';
    for (std::size_t k = 0; k < edges_.size(); ++k) os << (k ? "," : "") << edges_[k].first + 1 << '-' << edges_[k].second + 1;
    return os.str();
}

IntegerMatrix graphical_arrangement(const SimpleGraph& g) {
    if (g.edges().empty()) throw std::invalid_argument("graphical arrangement needs at least one edge");
    IntegerMatrix out(g.edges().size(), g.vertex_count());
    for (std::size_t k = 0; k < g.edges().size(); ++k) {
        out(k, g.edges()[k].first) = 1;
        out(k, g.edges()[k].second) = -1;
    }
    return out;
}

ArrangementSpec graphical_essential(const SimpleGraph& g) {
    const IntegerMatrix full = graphical_arrangement(g);
    // Ground the highest-numbered vertex of each component.
    std::vector<std::size_t> parent(g.vertex_count());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (auto [a, b] : g.edges()) parent[find(a)] = find(b);
    std::vector<std::size_t> highest(g.vertex_count(), 0);
    for (std::size_t v = 0; v < g.vertex_count(); ++v) highest[find(v)] = std::max(highest[find(v)], v);
    std::vector<std::size_t> kept;
    for (std::size_t v = 0; v < g.vertex_count(); ++v)
        if (highest[find(v)] != v) kept.push_back(v);
    std::vector<std::size_t> all_rows(full.rows());
    std::iota(all_rows.begin(), all_rows.end(), 0);
    return ArrangementSpec(kept.size(), full.select(all_rows, kept), "graph:" + g.to_string());
}

std::vector<SimpleGraph> enumerate_connected_graphs(std::size_t v) {
    if (v > kMaxEnumeratedVertices)
        throw GuardExceeded("connected graph enumeration limited to " + std::to_string(kMaxEnumeratedVertices) + " vertices");
    const auto all = SimpleGraph::complete(v).edges();
    std::vector<SimpleGraph> out;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << all.size()); ++mask) {
        std::vector<std::pair<std::size_t, std::size_t>> e;
        for (std::size_t k = 0; k < all.size(); ++k)
            if (mask >> k & 1U) e.push_back(all[k]);
        SimpleGraph g(v, std::move(e));
        if (g.is_connected()) out.push_back(std::move(g));
    }
    return out;
}

CuriousIdentity verify_curious_identity(std::size_t d, bool force) {
    if (d == 0) throw std::invalid_argument("verify_curious_identity: d must be positive");
    if (!force && d > kMaxCuriousDimension)
        throw GuardExceeded("curious identity limited to d <= " + std::to_string(kMaxCuriousDimension));
    const RootSystemData a = root_system('A', d);
    // Vertex d plays the role of the grounded coordinate: edge {i, d} is the
    // form x_i and edge {i, j} with j < d is x_i - x_j.
    auto form_of = [d](std::size_t i, std::size_t j) {
        std::vector<Integer> row(d, Integer(0));
        row[i] = 1;
        if (j < d) row[j] = -1;
        return row;
    };
    CuriousIdentity out;
    mpz_ui_pow_ui(out.lhs.get_mpz_t(), static_cast<unsigned long>(d + 1), static_cast<unsigned long>(d));
    EhrhartCache cache;
    for (auto& g : enumerate_connected_graphs(d + 1)) {
        std::vector<std::vector<Integer>> rows;
        for (auto [i, j] : g.edges()) rows.push_back(form_of(i, j));
        const SubsetGeometry geom(IntegerMatrix::from_rows(rows, d));
        const Rational vol = normalized_volume(cache.get_or_compute(geom), d);
        const int sign = (g.edges().size() - d) % 2 == 0 ? 1 : -1;
        out.rhs += sign * vol;
        out.terms.push_back({std::move(g), vol, sign});
    }
    out.equal = Rational(out.lhs) == out.rhs;
    return out;
}

TuPolynomialityReport check_tu_polynomiality(const SimpleGraph& g, const CharPolyOptions& options) {
    TuPolynomialityReport report;
    const IntegerMatrix forms = graphical_arrangement(g);
    report.totally_unimodular = is_totally_unimodular(forms, options.force);
    report.cycle_rank = g.cycle_rank();
    EhrhartCache cache;
    const CharPolyComputation comp = compute_characteristic(forms, rank(forms), options, &cache);
    bool periods = true;
    for (const auto& f : cache.values()) periods = periods && f.period() == 1;
    for (const auto& c : comp.chi.coefficients) periods = periods && c.period() == 1;
    const QuasiPolynomial r = regions(comp.chi);
    periods = periods && r.period() == 1;
    report.all_periods_one = periods;
    report.region_degree = r.degree();
    report.ok = report.totally_unimodular && report.all_periods_one &&
                report.region_degree == static_cast<int>(report.cycle_rank);
    return report;
}

namespace {

std::size_t parse_count(const std::string& text, const std::string& name) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; }) ||
        text.size() > 3)
        throw UnknownFamily("unknown family: " + name);
    return static_cast<std::size_t>(std::stoul(text));
}

SimpleGraph parse_graph(const std::string& spec, const std::string& name) {
    if (spec.size() >= 2 && (spec[0] == 'K' || spec[0] == 'P' || spec[0] == 'C')) {
        const std::size_t v = parse_count(spec.substr(1), name);
        try {
            if (spec[0] == 'K') return SimpleGraph::complete(v);
            if (spec[0] == 'P') return SimpleGraph::path(v);
            return SimpleGraph::cycle(v);
        } catch (const std::invalid_argument&) {
            throw UnknownFamily("unknown family: " + name);
        }
    }
    const auto colon = spec.find(':');
    if (colon == std::string::npos) throw UnknownFamily("unknown family: " + name);
    const std::size_t v = parse_count(spec.substr(0, colon), name);
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    std::stringstream list(spec.substr(colon + 1));
    std::string item;
    while (std::getline(list, item, ',')) {
        const auto dash = item.find('-');
        if (dash == std::string::npos) throw UnknownFamily("unknown family: " + name);
        const std::size_t a = parse_count(item.substr(0, dash), name);
        const std::size_t b = parse_count(item.substr(dash + 1), name);
        if (a == 0 || b == 0) throw UnknownFamily("unknown family: " + name);
        edges.emplace_back(a - 1, b - 1);
    }
    try {
        return SimpleGraph(v, std::move(edges));
    } catch (const std::invalid_argument& e) {
        throw UnknownFamily("unknown family: " + name + " (" + e.what() + ")");
    }
}

}  // namespace

CatalogEntry catalog_entry(const std::string& name) {
    if (name == "ex1") return {name, example_two_forms(), std::nullopt, std::nullopt};
    if (name.rfind("coord:", 0) == 0) {
        const std::size_t d = parse_count(name.substr(6), name);
        if (d == 0) throw UnknownFamily("unknown family: " + name);
        return {name, coordinate_arrangement(d), std::nullopt, std::nullopt};
    }
    if (name.rfind("root:", 0) == 0 && name.size() >= 7) {
        const char type = name[5];
        const std::size_t rank = parse_count(name.substr(6), name);
        RootSystemData rsd = root_system(type, rank);
        ArrangementSpec spec = rsd.arrangement();
        return {name, std::move(spec), std::move(rsd), std::nullopt};
    }
    if (name.rfind("graph:", 0) == 0) {
        SimpleGraph g = parse_graph(name.substr(6), name);
        if (g.edges().empty()) throw UnknownFamily("graph family needs at least one edge: " + name);
        ArrangementSpec spec = graphical_essential(g);
        return {name, std::move(spec), std::nullopt, std::move(g)};
    }
    throw UnknownFamily("unknown family: " + name);
}

std::vector<std::string> standard_catalog() {
    return {"ex1",     "coord:1", "coord:2", "coord:3", "root:A1", "root:A2",  "root:A3",
            "root:B2", "root:C2", "root:B3", "root:G2", "graph:P3", "graph:C3", "graph:K4"};
}

}  // namespace arrecip
