#include "arrecip_cli/cli.hpp"

#include "arrecip_cli/format.hpp"
#include "arrecip_cli/random_arrangement.hpp"

#include <arrecip/arrangement_file.hpp>
#include <arrecip/catalog.hpp>
#include <arrecip/exact_linear.hpp>
#include <arrecip/oracle.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace arrecip::cli {

namespace {

struct Globals {
    bool json = false;
    bool force = false;
    unsigned threads = 1;
};

struct Outcome {
    Json document;
    std::string text;
    int code = kOk;
};

struct ValueFlags {
    std::optional<std::int64_t> m;
    bool symbolic = false;
};

struct RegionFlags {
    ValueFlags value;
    bool bounded = false;
};

struct VerifyFlags {
    std::string checks = "degrees,reciprocity,special,bounds,bounded,corollary1,ehrrec,signs";
    std::int64_t window = 10;
    std::string random;
};

struct OracleFlags {
    std::int64_t m = 0;
    std::string method = "mobius";
};

CharPolyOptions engine_options(const Globals& g) {
    CharPolyOptions options;
    options.force = g.force;
    options.threads = g.threads;
    if (g.force) options.max_forms = 64;
    return options;
}

ArrangementSpec load_input(const std::string& path) {
    if (path == "-") return parse_arrangement(std::cin, "stdin");
    return load_arrangement(path);
}

std::string describe(const ArrangementSpec& a) {
    std::ostringstream os;
    os << "# " << (a.label().empty() ? "arrangement" : a.label()) << ": d=" << a.dimension() << ", " << a.size()
       << " forms\n";
    return os.str();
}

void require_nonnegative(std::int64_t m) {
    if (m < 0) throw std::invalid_argument("--m must be nonnegative");
}

// charpoly

Outcome cmd_charpoly(const ArrangementSpec& a, const ValueFlags& flags, const Globals& g) {
    Outcome o;
    o.document["command"] = "charpoly";
    o.document["arrangement"] = arrangement_to_json(a);
    const CharQuasiPoly c = characteristic_quasipoly(a, engine_options(g));
    if (flags.m) {
        require_nonnegative(*flags.m);
        const Polynomial p = c.at(*flags.m);
        o.document["m"] = *flags.m;
        o.document["chi"] = polynomial_to_json(p);
        o.text = p.to_string("q") + "\n";
        return o;
    }
    std::ostringstream text;
    text << describe(a);
    Json coefficients = Json::array();
    for (std::size_t i = 0; i < c.coefficients.size(); ++i) {
        coefficients.push_back(quasipoly_to_json(c.coefficients[i]));
        text << "c_" << i << "(m):\n" << render_quasipoly(c.coefficients[i]);
    }
    o.document["period"] = c.period();
    o.document["coefficients"] = std::move(coefficients);
    o.text = text.str();
    return o;
}

// regions

Outcome cmd_regions(const ArrangementSpec& a, const RegionFlags& flags, const Globals& g) {
    constexpr std::int64_t kWindow = 10;
    Outcome o;
    o.document["command"] = flags.bounded ? "regions --bounded" : "regions";
    o.document["arrangement"] = arrangement_to_json(a);
    const CharQuasiPoly c = characteristic_quasipoly(a, engine_options(g));
    const QuasiPolynomial f = flags.bounded ? bounded_regions(c) : regions(c);
    const bool lower = check_region_lower_bound(c, kWindow);
    std::ostringstream text;
    if (flags.value.m) {
        require_nonnegative(*flags.value.m);
        const Rational v = f.evaluate(*flags.value.m);
        o.document["m"] = *flags.value.m;
        o.document["value"] = to_string(v);
        text << to_string(v) << '\n';
    } else {
        o.document[flags.bounded ? "bounded_regions" : "regions"] = quasipoly_to_json(f);
        o.document["degree"] = f.degree();
        text << describe(a) << (flags.bounded ? "b(m):\n" : "r(m):\n") << render_quasipoly(f);
        text << "degree " << f.degree() << ", period " << f.period() << '\n';
    }
    o.document["lower_bound"] = {{"window", kWindow}, {"holds", lower}};
    text << "lower bound r(m) >= (2m+2)^" << a.dimension() << " for m = 0.." << kWindow << ": "
         << (lower ? "holds" : "FAILS") << '\n';
    o.text = text.str();
    if (!lower) o.code = kCheckFailed;
    return o;
}

// verify

struct CheckResult {
    std::string name;
    std::optional<bool> passed;  // empty for report-only checks
    Json detail = Json::object();
    std::string text;
};

std::optional<std::int64_t> first_mismatch(const QuasiPolynomial& f, const QuasiPolynomial& g, std::int64_t window) {
    for (std::int64_t m = 1; m <= window; ++m)
        if (f.evaluate(m) != g.evaluate(m)) return m;
    return std::nullopt;
}

// Records both sides of a failed identity symbolically and at the first bad point.
void describe_identity(CheckResult& r, const std::string& lhs_name, const QuasiPolynomial& lhs,
                       const std::string& rhs_name, const QuasiPolynomial& rhs, std::int64_t window) {
    Json item;
    item["lhs"] = lhs_name;
    item["lhs_value"] = quasipoly_to_json(lhs);
    item["rhs"] = rhs_name;
    item["rhs_value"] = quasipoly_to_json(rhs);
    std::ostringstream os;
    os << "    " << lhs_name << ":\n" << render_quasipoly(lhs, "      ");
    os << "    " << rhs_name << ":\n" << render_quasipoly(rhs, "      ");
    if (const auto m = first_mismatch(lhs, rhs, window)) {
        item["first_mismatch"] = *m;
        os << "    at m = " << *m << ": " << to_string(lhs.evaluate(*m)) << " vs " << to_string(rhs.evaluate(*m))
           << '\n';
    } else {
        item["first_mismatch"] = nullptr;
    }
    if (!r.detail.contains("failures")) r.detail["failures"] = Json::array();
    r.detail["failures"].push_back(std::move(item));
    r.text += os.str();
}

int sign_power(std::size_t k) { return k % 2 == 0 ? 1 : -1; }

CheckResult check_degrees(const CharQuasiPoly& c) {
    CheckResult r{"degrees", check_degree_bounds(c), Json::object(), {}};
    Json degrees = Json::array();
    for (const auto& f : c.coefficients) degrees.push_back(f.degree());
    r.detail["coefficient_degrees"] = degrees;
    r.detail["region_degree"] = regions(c).degree();
    if (!*r.passed) r.text = "    degrees " + degrees.dump() + ", regions " + std::to_string(regions(c).degree()) + "\n";
    return r;
}

CheckResult check_reciprocity_detail(const CharQuasiPoly& c, std::int64_t window) {
    CheckResult r{"reciprocity", check_reciprocity(c), Json::object(), {}};
    if (*r.passed) return r;
    const std::size_t d = c.dimension;
    for (std::size_t i = 0; i <= d; ++i) {
        const QuasiPolynomial lhs = precompose_affine(c.coefficients[i], -1, 0);
        const QuasiPolynomial rhs = scale(precompose_affine(c.coefficients[i], 1, -1), sign_power(d - i));
        if (equals(lhs, rhs)) continue;
        const std::string idx = std::to_string(i);
        describe_identity(r, "c_" + idx + "(-m)", lhs, "(-1)^(d-" + idx + ") c_" + idx + "(m-1)", rhs, window);
    }
    return r;
}

CheckResult check_special_detail(const CharQuasiPoly& c) {
    CheckResult r{"special", check_special_reciprocity(c), Json::object(), {}};
    const Polynomial lhs = c.at(-1);
    const Polynomial rhs = c.at(0).compose_affine(-1, 0) * Rational(sign_power(c.dimension));
    r.detail["lhs"] = polynomial_to_json(lhs);
    r.detail["rhs"] = polynomial_to_json(rhs);
    if (!*r.passed)
        r.text = "    chi(q, -1) = " + lhs.to_string("q") + "\n    (-1)^d chi(-q, 0) = " + rhs.to_string("q") + "\n";
    return r;
}

CheckResult check_bounds_detail(const CharQuasiPoly& c, std::int64_t window) {
    CheckResult r{"bounds", check_region_lower_bound(c, window), Json::object(), {}};
    r.detail["window"] = window;
    if (!*r.passed) {
        const QuasiPolynomial reg = regions(c);
        for (std::int64_t m = 0; m <= window; ++m) {
            Integer floor_value = 1;
            for (std::size_t k = 0; k < c.dimension; ++k) floor_value *= 2 * m + 2;
            if (reg.evaluate(m) < floor_value) {
                r.detail["first_violation"] = m;
                r.text = "    r(" + std::to_string(m) + ") = " + to_string(reg.evaluate(m)) + " < " +
                         to_string(floor_value) + "\n";
                break;
            }
        }
    }
    return r;
}

CheckResult check_bounded_detail(const CharQuasiPoly& c, std::int64_t window) {
    CheckResult r{"bounded", check_bounded_reciprocity(c, window), Json::object(), {}};
    if (!*r.passed) {
        const QuasiPolynomial lhs = scale(precompose_affine(regions(c), -1, 0), sign_power(c.dimension));
        const QuasiPolynomial rhs = precompose_affine(bounded_regions(c), 1, -1);
        describe_identity(r, "(-1)^d r(-m)", lhs, "b(m-1)", rhs, window);
    }
    return r;
}

CheckResult check_corollary1_detail(const CharPolyComputation& comp, EhrhartCache& cache) {
    const LeadingTermReport report = leading_term_report(comp, cache);
    CheckResult r{"corollary1", report.equal, Json::object(), {}};
    r.detail["volume_sum"] = to_fraction_string(report.volume_sum);
    r.detail["region_leading"] = to_fraction_string(report.region_leading);
    if (!report.equal)
        r.text = "    signed volume sum " + to_string(report.volume_sum) + " vs leading coefficient " +
                 to_string(report.region_leading) + "\n";
    return r;
}

CheckResult check_ehrrec_detail(const CharPolyComputation& comp, EhrhartCache& cache, std::int64_t window) {
    CheckResult r{"ehrrec", true, Json::object(), {}};
    std::size_t checked = 0;
    Json failures = Json::array();
    for (const auto& cls : comp.classes) {
        if (cls.rank == 0) continue;
        const SubsetGeometry geometry(cls.representative);
        const QuasiPolynomial f = cache.get_or_compute(geometry);
        ++checked;
        if (!verify_ehrhart_reciprocity(geometry, f, window)) {
            r.passed = false;
            failures.push_back(cls.key);
            r.text += "    lattice " + cls.key + ":\n" + render_quasipoly(f, "      ");
        }
    }
    r.detail["lattices_checked"] = checked;
    r.detail["failures"] = std::move(failures);
    return r;
}

CheckResult check_signs_detail(const CharQuasiPoly& c, std::int64_t window) {
    const SignScanReport scan = sign_scan(c, window);
    CheckResult r{"signs", std::nullopt, Json::object(), {}};
    r.detail["values_alternate"] = scan.values_alternate;
    r.detail["coefficients_nonnegative"] = scan.coefficients_nonnegative;
    r.detail["negative_coefficient_indices"] = scan.negative_coefficient_indices;
    std::ostringstream os;
    os << "    values alternate in sign: " << (scan.values_alternate ? "yes" : "no");
    if (!scan.violations.empty())
        os << " (first at c_" << scan.violations.front().first << ", m = " << scan.violations.front().second << ")";
    os << "\n    signed constituent coefficients nonnegative: " << (scan.coefficients_nonnegative ? "yes" : "no");
    for (const auto i : scan.negative_coefficient_indices) os << " c_" << i;
    os << '\n';
    r.text = os.str();
    return r;
}

const std::vector<std::string>& known_checks() {
    static const std::vector<std::string> names{"degrees", "reciprocity", "special", "bounds",
                                                "bounded", "corollary1",  "ehrrec",  "signs"};
    return names;
}

std::vector<std::string> parse_checks(const std::string& list) {
    std::vector<std::string> out;
    std::istringstream in(list);
    std::string name;
    while (std::getline(in, name, ',')) {
        if (name.empty()) continue;
        if (name == "all") {
            out.insert(out.end(), known_checks().begin(), known_checks().end());
            continue;
        }
        if (std::find(known_checks().begin(), known_checks().end(), name) == known_checks().end())
            throw std::invalid_argument("unknown check '" + name + "'");
        out.push_back(name);
    }
    if (out.empty()) throw std::invalid_argument("no checks selected");
    return out;
}

std::vector<CheckResult> run_checks(const ArrangementSpec& a, const std::vector<std::string>& checks,
                                    std::int64_t window, const Globals& g) {
    EhrhartCache cache;
    const CharPolyComputation comp = compute_characteristic(a.forms(), a.dimension(), engine_options(g), &cache);
    const CharQuasiPoly& c = comp.chi;
    std::vector<CheckResult> results;
    for (const auto& name : checks) {
        if (name == "degrees") results.push_back(check_degrees(c));
        else if (name == "reciprocity") results.push_back(check_reciprocity_detail(c, window));
        else if (name == "special") results.push_back(check_special_detail(c));
        else if (name == "bounds") results.push_back(check_bounds_detail(c, window));
        else if (name == "bounded") results.push_back(check_bounded_detail(c, window));
        else if (name == "corollary1") results.push_back(check_corollary1_detail(comp, cache));
        else if (name == "ehrrec") results.push_back(check_ehrrec_detail(comp, cache, window));
        else if (name == "signs") results.push_back(check_signs_detail(c, window));
    }
    return results;
}

Outcome cmd_verify(const std::vector<ArrangementSpec>& arrangements, const VerifyFlags& flags, const Globals& g) {
    if (flags.window < 1) throw std::invalid_argument("--window must be positive");
    const std::vector<std::string> checks = parse_checks(flags.checks);
    Outcome o;
    o.document["command"] = "verify";
    o.document["window"] = flags.window;
    Json list = Json::array();
    std::ostringstream text;
    bool all_passed = true;
    for (const auto& a : arrangements) {
        Json entry;
        entry["arrangement"] = arrangement_to_json(a);
        Json results = Json::array();
        bool passed = true;
        text << describe(a);
        for (const auto& r : run_checks(a, checks, flags.window, g)) {
            Json item;
            item["check"] = r.name;
            item["passed"] = r.passed ? Json(*r.passed) : Json(nullptr);
            item["detail"] = r.detail;
            results.push_back(std::move(item));
            const char* verdict = !r.passed ? "report" : (*r.passed ? "pass" : "FAIL");
            text << "  " << r.name << ": " << verdict << '\n' << r.text;
            if (r.passed && !*r.passed) passed = false;
        }
        entry["checks"] = std::move(results);
        entry["passed"] = passed;
        list.push_back(std::move(entry));
        all_passed = all_passed && passed;
    }
    o.document["arrangements"] = std::move(list);
    o.document["passed"] = all_passed;
    text << (all_passed ? "all checks passed\n" : "some checks FAILED\n");
    o.text = text.str();
    if (!all_passed) o.code = kCheckFailed;
    return o;
}

// oracle

Outcome cmd_oracle(const ArrangementSpec& a, const OracleFlags& flags, const Globals& g) {
    require_nonnegative(flags.m);
    Outcome o;
    o.document["command"] = "oracle";
    o.document["arrangement"] = arrangement_to_json(a);
    o.document["m"] = flags.m;
    o.document["method"] = flags.method;
    const CharQuasiPoly c = characteristic_quasipoly(a, engine_options(g));
    const Polynomial engine = c.at(flags.m);
    o.document["engine"] = polynomial_to_json(engine);
    std::ostringstream text;
    text << "engine: " << engine.to_string("q") << '\n';

    if (flags.method.rfind("ff:", 0) == 0) {
        std::uint64_t p = 0;
        try {
            p = std::stoull(flags.method.substr(3));
        } catch (const std::exception&) {
            throw std::invalid_argument("bad prime in --method " + flags.method);
        }
        if (!is_prime(p)) throw std::invalid_argument(std::to_string(p) + " is not prime");
        const FiniteFieldReport report = compare_finite_field(a, c, flags.m, p);
        o.document["count"] = to_string(report.count);
        o.document["engine_value"] = to_string(report.engine_value);
        o.document["match"] = report.matches;
        text << "F_" << p << " count: " << to_string(report.count) << '\n';
        text << "chi(" << p << ", " << flags.m << ") = " << to_string(report.engine_value) << '\n';
        text << (report.matches ? "match" : "warning: mismatch (p may be too small for this arrangement)") << '\n';
        o.text = text.str();
        return o;
    }

    const auto hyperplanes = build_hyperplanes(a, flags.m);
    Polynomial oracle;
    if (flags.method == "mobius") {
        const IntersectionPoset poset(hyperplanes, a.dimension());
        oracle = mobius_chi(poset);
        o.document["flats"] = poset.size();
    } else if (flags.method == "whitney") {
        oracle = whitney_chi(hyperplanes, a.dimension(), g.force);
    } else {
        throw std::invalid_argument("unknown --method '" + flags.method + "' (mobius, whitney, ff:<p>)");
    }
    const bool match = oracle == engine;
    o.document["oracle"] = polynomial_to_json(oracle);
    o.document["match"] = match;
    text << flags.method << ": " << oracle.to_string("q") << '\n' << (match ? "match" : "MISMATCH") << '\n';
    o.text = text.str();
    if (!match) o.code = kCheckFailed;
    return o;
}

// catalog

struct CatalogFlags {
    std::string family;
    bool emit = false;
    std::string run;
    ValueFlags value;
    bool bounded = false;
    VerifyFlags verify;
    OracleFlags oracle;
};

Json root_json(const RootSystemData& rsd, bool product, bool fuss, const FussCatalan& n1) {
    Json j;
    j["type"] = rsd.label();
    j["exponents"] = rsd.exponents;
    j["coxeter_number"] = rsd.coxeter_number;
    j["weyl_order"] = to_string(rsd.weyl_order);
    if (!rsd.isomorphism_note.empty()) j["note"] = rsd.isomorphism_note;
    j["product_formula"] = product;
    j["fuss_reciprocity"] = fuss;
    j["fuss_catalan_1"] = {{"n", to_string(n1.n)}, {"n_plus", to_string(n1.n_plus)}};
    return j;
}

Outcome cmd_catalog(const CatalogFlags& flags, const Globals& g) {
    const CatalogEntry entry = catalog_entry(flags.family);
    Outcome o;
    o.document["command"] = "catalog";
    o.document["family"] = entry.name;
    std::ostringstream header;
    bool verdicts_ok = true;
    if (entry.root) {
        const RootSystemData& rsd = *entry.root;
        const bool product = verify_product_formula(rsd, engine_options(g));
        const bool fuss = check_fuss_reciprocity(rsd, 10);
        const FussCatalan n1 = fuss_catalan(rsd, 1);
        verdicts_ok = product && fuss;
        o.document["root_system"] = root_json(rsd, product, fuss, n1);
        header << "# root system " << rsd.label() << ": exponents";
        for (const int e : rsd.exponents) header << ' ' << e;
        header << ", h = " << rsd.coxeter_number << ", |W| = " << to_string(rsd.weyl_order) << '\n';
        if (!rsd.isomorphism_note.empty()) header << "# note: " << rsd.isomorphism_note << '\n';
        header << "# product formula chi = prod (q - m h - e_i): " << (product ? "true" : "FALSE") << '\n';
        header << "# Fuss-Catalan reciprocity (-1)^d N(-m) = N+(m-1): " << (fuss ? "true" : "FALSE") << '\n';
        header << "# N(1) = " << to_string(n1.n) << ", N+(1) = " << to_string(n1.n_plus) << '\n';
    }
    if (entry.graph) {
        const IntegerMatrix forms = graphical_arrangement(*entry.graph);
        const bool tu = is_totally_unimodular(forms, g.force);
        o.document["graph"] = {{"edges", entry.graph->to_string()},
                               {"cycle_rank", entry.graph->cycle_rank()},
                               {"totally_unimodular", tu}};
        header << "# graph " << entry.graph->to_string() << ": cycle rank " << entry.graph->cycle_rank()
               << ", totally unimodular: " << (tu ? "yes" : "no") << '\n';
    }

    if (flags.run.empty()) {
        const std::string file = emit_arrangement(entry.spec);
        o.document["file"] = file;
        o.text = header.str() + file;
    } else {
        Outcome sub;
        if (flags.run == "charpoly") {
            sub = cmd_charpoly(entry.spec, flags.value, g);
        } else if (flags.run == "regions") {
            sub = cmd_regions(entry.spec, RegionFlags{flags.value, flags.bounded}, g);
        } else if (flags.run == "verify") {
            sub = cmd_verify({entry.spec}, flags.verify, g);
        } else if (flags.run == "oracle") {
            sub = cmd_oracle(entry.spec, flags.oracle, g);
        } else {
            throw std::invalid_argument("--run expects charpoly, regions, verify or oracle");
        }
        o.document["run"] = std::move(sub.document);
        o.text = header.str() + sub.text;
        o.code = sub.code;
    }
    if (!verdicts_ok) o.code = kCheckFailed;
    return o;
}

// identity

Outcome cmd_identity(std::size_t d, const Globals& g) {
    const CuriousIdentity id = verify_curious_identity(d, g.force);
    Outcome o;
    o.document["command"] = "identity";
    o.document["d"] = d;
    o.document["lhs"] = to_string(id.lhs);
    Json terms = Json::array();
    std::ostringstream text;
    text << "lhs (d+1)^d = " << to_string(id.lhs) << '\n';
    for (const auto& t : id.terms) {
        terms.push_back({{"graph", t.graph.to_string()}, {"sign", t.sign}, {"volume", to_fraction_string(t.volume)}});
        text << "  " << (t.sign > 0 ? '+' : '-') << to_string(t.volume) << "  " << t.graph.to_string() << '\n';
    }
    o.document["terms"] = std::move(terms);
    o.document["rhs"] = to_fraction_string(id.rhs);
    o.document["equal"] = id.equal;
    text << "rhs over " << id.terms.size() << " connected graphs = " << to_string(id.rhs) << '\n';
    text << to_string(id.lhs) << (id.equal ? " = " : " != ") << to_string(id.rhs) << '\n';
    o.text = text.str();
    if (!id.equal) o.code = kCheckFailed;
    return o;
}

void add_value_flags(CLI::App* cmd, ValueFlags& flags) {
    auto* m = cmd->add_option("--m", flags.m, "Deformation parameter m >= 0");
    auto* s = cmd->add_flag("--symbolic", flags.symbolic, "Quasi-polynomials in m (default)");
    m->excludes(s);
}

void add_verify_flags(CLI::App* cmd, VerifyFlags& flags) {
    cmd->add_option("--checks", flags.checks,
                    "Comma list of degrees,reciprocity,special,bounds,bounded,corollary1,ehrrec,signs or all")
        ->capture_default_str();
    cmd->add_option("--window", flags.window, "Pointwise check window")->capture_default_str();
}

void add_oracle_flags(CLI::App* cmd, OracleFlags& flags) {
    cmd->add_option("--m", flags.m, "Deformation parameter m >= 0")->capture_default_str();
    cmd->add_option("--method", flags.method, "mobius, whitney or ff:<prime>")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Characteristic quasi-polynomials of deformed hyperplane arrangements", "arrecip"};
    app.require_subcommand(1);
    Globals g;
    g.threads = std::max(1u, std::thread::hardware_concurrency());
    app.add_flag("--json", g.json, "Machine-readable output");
    app.add_flag("--force", g.force, "Override size guards");
    app.add_option("--threads", g.threads, "Worker threads (default: available cores)")->check(CLI::PositiveNumber);

    std::string input;
    ValueFlags charpoly_flags;
    RegionFlags region_flags;
    VerifyFlags verify_flags;
    OracleFlags oracle_flags;
    CatalogFlags catalog_flags;
    bool curious = false;
    std::size_t identity_d = 0;

    auto* charpoly = app.add_subcommand("charpoly", "Coefficients c_i(m) of chi(q, m), or chi(q, m) at one m");
    charpoly->add_option("input", input, "Arrangement file ('-' for stdin)")->required();
    add_value_flags(charpoly, charpoly_flags);

    auto* regions_cmd = app.add_subcommand("regions", "Region count r(m), or bounded regions b(m)");
    regions_cmd->add_option("input", input, "Arrangement file ('-' for stdin)")->required();
    add_value_flags(regions_cmd, region_flags.value);
    regions_cmd->add_flag("--bounded", region_flags.bounded, "Bounded regions");

    auto* verify = app.add_subcommand("verify", "Check the reciprocity and degree identities");
    auto* verify_input = verify->add_option("input", input, "Arrangement file ('-' for stdin)");
    auto* random = verify->add_option("--random", verify_flags.random, "Random arrangements: n=..,d=..,seed=..[,count=..]");
    verify_input->excludes(random);
    add_verify_flags(verify, verify_flags);

    auto* oracle = app.add_subcommand("oracle", "Compare the engine with an independent chi(q) computation");
    oracle->add_option("input", input, "Arrangement file ('-' for stdin)")->required();
    add_oracle_flags(oracle, oracle_flags);

    auto* catalog = app.add_subcommand("catalog", "Built-in families: ex1, coord:N, root:TN, graph:...");
    catalog->add_option("--family", catalog_flags.family, "Family name")->required();
    auto* emit = catalog->add_flag("--emit", catalog_flags.emit, "Write the arrangement file (default)");
    auto* run_opt = catalog->add_option("--run", catalog_flags.run, "charpoly, regions, verify or oracle");
    emit->excludes(run_opt);
    catalog->add_option("--m", catalog_flags.value.m, "m for --run charpoly/regions/oracle");
    catalog->add_flag("--symbolic", catalog_flags.value.symbolic, "Symbolic output for --run");
    catalog->add_flag("--bounded", catalog_flags.bounded, "Bounded regions for --run regions");
    catalog->add_option("--method", catalog_flags.oracle.method, "Oracle method for --run oracle");
    add_verify_flags(catalog, catalog_flags.verify);

    auto* identity = app.add_subcommand("identity", "Volume identity over connected graphs");
    identity->add_flag("--curious", curious, "Type A volume identity (d+1)^d")->required();
    identity->add_option("--d", identity_d, "Dimension 1..3")->required()->check(CLI::PositiveNumber);

    app.fallthrough();

    std::vector<const char*> argv{"arrecip"};
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }

    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        if (charpoly->parsed()) {
            o = cmd_charpoly(load_input(input), charpoly_flags, g);
        } else if (regions_cmd->parsed()) {
            o = cmd_regions(load_input(input), region_flags, g);
        } else if (verify->parsed()) {
            std::vector<ArrangementSpec> arrangements;
            if (!verify_flags.random.empty()) arrangements = random_arrangements(parse_random_spec(verify_flags.random));
            else if (!input.empty()) arrangements.push_back(load_input(input));
            else throw std::invalid_argument("verify needs an input file or --random");
            o = cmd_verify(arrangements, verify_flags, g);
        } else if (oracle->parsed()) {
            o = cmd_oracle(load_input(input), oracle_flags, g);
        } else if (catalog->parsed()) {
            if (catalog_flags.value.m) catalog_flags.oracle.m = *catalog_flags.value.m;
            o = cmd_catalog(catalog_flags, g);
        } else if (identity->parsed()) {
            o = cmd_identity(identity_d, g);
        }
    } catch (const GuardExceeded& e) {
        err << "error: guard exceeded: " << e.what() << " (use --force to override)\n";
        return kGuardOrPrecondition;
    } catch (const InvalidArrangement& e) {
        err << "error: " << e.what() << '\n';
        return e.reason() == InvalidArrangement::Reason::rank_deficient ? kGuardOrPrecondition : kInputError;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kCheckFailed;
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();

    if (g.json) {
        Json doc;
        doc["document"] = std::move(o.document);
        doc["timings"] = {{"total_ms", ms}};
        out << doc.dump(2) << '\n';
    } else {
        out << o.text;
    }
    return o.code;
}

}  // namespace arrecip::cli
