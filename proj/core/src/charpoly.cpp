#include "arrecip/charpoly.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <numeric>
#include <thread>

namespace arrecip {

namespace {

Rational sign_of_power(std::size_t k) { return k % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

ArrangementSpec::ArrangementSpec(std::size_t dimension, IntegerMatrix forms, std::string label)
    : dimension_(dimension), forms_(std::move(forms)), label_(std::move(label)) {
    if (dimension_ == 0) throw InvalidArrangement(InvalidArrangement::Reason::dimension_mismatch, "dimension must be positive");
    if (forms_.cols() != dimension_)
        throw InvalidArrangement(InvalidArrangement::Reason::dimension_mismatch,
                                 "forms have " + std::to_string(forms_.cols()) + " columns, expected " +
                                     std::to_string(dimension_));
    for (std::size_t i = 0; i < forms_.rows(); ++i)
        if (forms_.is_zero_row(i))
            throw InvalidArrangement(InvalidArrangement::Reason::zero_form, "form " + std::to_string(i + 1) + " is zero");
    const std::size_t r = rank(forms_);
    if (r != dimension_)
        throw InvalidArrangement(InvalidArrangement::Reason::rank_deficient,
                                 "forms span a " + std::to_string(r) + "-dimensional space, expected " +
                                     std::to_string(dimension_));
}

Polynomial CharQuasiPoly::at(std::int64_t m) const {
    std::vector<Rational> coeffs;
    coeffs.reserve(coefficients.size());
    for (const auto& c : coefficients) coeffs.push_back(c.evaluate(m));
    return Polynomial(std::move(coeffs));
}

std::size_t CharQuasiPoly::period() const {
    std::size_t n = 1;
    for (const auto& c : coefficients) n = std::lcm(n, c.period());
    return n;
}

QuasiPolynomial EhrhartCache::get_or_compute(const SubsetGeometry& g, bool force) {
    {
        std::lock_guard lock(mutex_);
        auto it = entries_.find(g.lattice_key());
        if (it != entries_.end()) return it->second;
    }
    QuasiPolynomial computed = ehrhart_quasipoly(g, force);
    std::lock_guard lock(mutex_);
    return entries_.emplace(g.lattice_key(), std::move(computed)).first->second;
}

std::size_t EhrhartCache::size() const {
    std::lock_guard lock(mutex_);
    return entries_.size();
}

std::vector<QuasiPolynomial> EhrhartCache::values() const {
    std::lock_guard lock(mutex_);
    std::vector<QuasiPolynomial> out;
    out.reserve(entries_.size());
    for (const auto& [key, value] : entries_) out.push_back(value);
    return out;
}

namespace {

struct Tally {
    std::vector<LatticeClass> classes;
    std::map<std::string, std::size_t> index;

    void add(const LatticeClass& incoming) {
        auto it = index.find(incoming.key);
        if (it == index.end()) {
            index.emplace(incoming.key, classes.size());
            classes.push_back(incoming);
        } else {
            classes[it->second].signed_count += incoming.signed_count;
        }
    }
};

// Visits subsets in reflected Gray-code order for positions [begin, end).
Tally tally_range(const IntegerMatrix& forms, std::uint64_t begin, std::uint64_t end) {
    Tally tally;
    const std::size_t n = forms.rows();
    std::vector<std::size_t> rows;
    for (std::uint64_t pos = begin; pos < end; ++pos) {
        const std::uint64_t mask = pos ^ (pos >> 1);
        rows.clear();
        for (std::size_t i = 0; i < n; ++i)
            if (mask >> i & 1U) rows.push_back(i);
        IntegerMatrix subset = forms.select_rows(rows);
        LatticeIdentity id = lattice_identity(subset);
        LatticeClass entry;
        entry.rank = id.rank;
        entry.key = std::move(id.key);
        entry.representative = std::move(subset);
        entry.signed_count = rows.size() % 2 == 0 ? 1 : -1;
        tally.add(entry);
    }
    return tally;
}

template <typename Fn>
void parallel_for(std::size_t count, unsigned threads, Fn&& fn) {
    threads = std::max(1U, std::min<unsigned>(threads, static_cast<unsigned>(std::max<std::size_t>(count, 1))));
    if (threads == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i, 0U);
        return;
    }
    std::vector<std::thread> pool;
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&, t] {
            try {
                for (std::size_t i = t; i < count && !failed; i += threads) fn(i, t);
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
                failed = true;
            }
        });
    for (auto& th : pool) th.join();
    if (error) std::rethrow_exception(error);
}

}  // namespace

CharPolyComputation compute_characteristic(const IntegerMatrix& forms, std::size_t dimension,
                                           const CharPolyOptions& options, EhrhartCache* cache) {
    const std::size_t n = forms.rows();
    if (n > 62 || (!options.force && n > options.max_forms))
        throw GuardExceeded("subset enumeration limited to " + std::to_string(options.max_forms) + " forms, got " +
                            std::to_string(n) + " (use force to override)");
    EhrhartCache local_cache;
    EhrhartCache& ehr = cache ? *cache : local_cache;

    const std::uint64_t total = std::uint64_t{1} << n;
    const unsigned threads = std::max(1U, options.threads);
    const std::uint64_t chunk = (total + threads - 1) / threads;
    std::vector<Tally> partial(threads);
    parallel_for(threads, threads, [&](std::size_t t, unsigned) {
        const std::uint64_t begin = std::min(total, t * chunk);
        const std::uint64_t end = std::min(total, begin + chunk);
        partial[t] = tally_range(forms, begin, end);
    });
    Tally merged;
    for (const auto& part : partial)
        for (const auto& entry : part.classes) merged.add(entry);

    CharPolyComputation out;
    out.subsets = static_cast<std::size_t>(total);
    out.classes = std::move(merged.classes);

    std::vector<QuasiPolynomial> ehrhart(out.classes.size());
    parallel_for(out.classes.size(), threads, [&](std::size_t k, unsigned) {
        ehrhart[k] = ehr.get_or_compute(SubsetGeometry(out.classes[k].representative), options.force);
    });

    std::vector<std::vector<std::pair<Rational, QuasiPolynomial>>> terms(dimension + 1);
    for (std::size_t k = 0; k < out.classes.size(); ++k) {
        const auto& cls = out.classes[k];
        if (cls.rank > dimension) throw std::invalid_argument("subset rank exceeds the arrangement dimension");
        if (cls.signed_count == 0) continue;
        terms[dimension - cls.rank].emplace_back(Rational(cls.signed_count), ehrhart[k]);
    }
    out.chi.dimension = dimension;
    out.chi.coefficients.reserve(dimension + 1);
    for (const auto& t : terms) out.chi.coefficients.push_back(linear_combine(t));
    return out;
}

CharQuasiPoly characteristic_quasipoly(const ArrangementSpec& a, const CharPolyOptions& options) {
    return compute_characteristic(a.forms(), a.dimension(), options).chi;
}

CharQuasiPoly characteristic_quasipoly_span(const IntegerMatrix& forms, const CharPolyOptions& options) {
    return compute_characteristic(forms, rank(forms), options).chi;
}

Polynomial chi_at(const ArrangementSpec& a, std::int64_t m, const CharPolyOptions& options) {
    if (m < 0) throw std::invalid_argument("chi_at: m must be nonnegative");
    return characteristic_quasipoly(a, options).at(m);
}

QuasiPolynomial regions(const CharQuasiPoly& c) {
    std::vector<std::pair<Rational, QuasiPolynomial>> terms;
    for (std::size_t i = 0; i <= c.dimension; ++i) terms.emplace_back(sign_of_power(c.dimension - i), c.coefficients[i]);
    return linear_combine(terms);
}

QuasiPolynomial bounded_regions(const CharQuasiPoly& c) {
    std::vector<std::pair<Rational, QuasiPolynomial>> terms;
    for (std::size_t i = 0; i <= c.dimension; ++i) terms.emplace_back(sign_of_power(c.dimension), c.coefficients[i]);
    return linear_combine(terms);
}

bool check_reciprocity(const CharQuasiPoly& c) {
    for (std::size_t i = 0; i <= c.dimension; ++i) {
        const QuasiPolynomial lhs = precompose_affine(c.coefficients[i], -1, Integer(0));
        const QuasiPolynomial rhs = scale(precompose_affine(c.coefficients[i], 1, Integer(-1)), sign_of_power(c.dimension - i));
        if (!equals(lhs, rhs)) return false;
    }
    return true;
}

bool check_special_reciprocity(const CharQuasiPoly& c) {
    for (std::size_t i = 0; i <= c.dimension; ++i)
        if (c.coefficients[i].evaluate(-1) != sign_of_power(c.dimension - i) * c.coefficients[i].evaluate(0)) return false;
    return true;
}

bool check_special_reciprocity(const ArrangementSpec& a, const CharPolyOptions& options) {
    return check_special_reciprocity(characteristic_quasipoly(a, options));
}

bool check_degree_bounds(const CharQuasiPoly& c) {
    const auto d = static_cast<int>(c.dimension);
    if (c.coefficients.size() != c.dimension + 1) return false;
    for (int i = 0; i <= d; ++i)
        if (c.coefficients[static_cast<std::size_t>(i)].degree() > d - i) return false;
    if (c.coefficients[0].degree() != d) return false;
    if (regions(c).degree() != d) return false;
    return equals(c.coefficients[c.dimension], QuasiPolynomial::constant(1));
}

bool check_region_lower_bound(const CharQuasiPoly& c, std::int64_t window) {
    const QuasiPolynomial r = regions(c);
    for (std::int64_t m = 0; m <= window; ++m) {
        Integer bound;
        mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(2 * m + 2), static_cast<unsigned long>(c.dimension));
        if (r.evaluate(m) < Rational(bound)) return false;
    }
    return true;
}

bool check_bounded_reciprocity(const CharQuasiPoly& c, std::int64_t window) {
    const QuasiPolynomial r = regions(c);
    const QuasiPolynomial b = bounded_regions(c);
    const Rational sign = sign_of_power(c.dimension);
    if (!equals(scale(precompose_affine(r, -1, Integer(0)), sign), precompose_affine(b, 1, Integer(-1)))) return false;
    for (std::int64_t m = 1; m <= window; ++m)
        if (sign * r.evaluate(-m) != b.evaluate(m - 1)) return false;
    return true;
}

LeadingTermReport leading_term_report(const CharPolyComputation& computation, EhrhartCache& cache) {
    const std::size_t d = computation.chi.dimension;
    LeadingTermReport report;
    for (const auto& cls : computation.classes) {
        if (cls.rank != d || cls.signed_count == 0) continue;
        const SubsetGeometry g(cls.representative);
        const Rational vol = normalized_volume(cache.get_or_compute(g), d);
        // signed_count carries (-1)^{#F}; the target sign is (-1)^{#F-d}.
        report.volume_sum += Rational(cls.signed_count) * sign_of_power(d) * vol;
    }
    const QuasiPolynomial r = regions(computation.chi);
    const auto lead = r.leading_coefficients(static_cast<int>(d));
    report.region_leading = lead.front();
    const bool constant = std::all_of(lead.begin(), lead.end(), [&](const Rational& x) { return x == lead.front(); });
    report.equal = constant && report.volume_sum == report.region_leading;
    return report;
}

Rational corollary1_leading(const ArrangementSpec& a, const CharPolyOptions& options) {
    EhrhartCache cache;
    const CharPolyComputation comp = compute_characteristic(a.forms(), a.dimension(), options, &cache);
    const LeadingTermReport report = leading_term_report(comp, cache);
    if (!report.equal)
        throw std::logic_error("signed volume sum " + to_string(report.volume_sum) +
                               " differs from leading region coefficient " + to_string(report.region_leading));
    return report.volume_sum;
}

SignScanReport sign_scan(const CharQuasiPoly& c, std::int64_t window) {
    SignScanReport report;
    for (std::size_t i = 0; i <= c.dimension; ++i) {
        const Rational sign = sign_of_power(c.dimension - i);
        for (std::int64_t m = 0; m <= window; ++m) {
            if (sign * c.coefficients[i].evaluate(m) <= 0) {
                report.values_alternate = false;
                report.violations.emplace_back(i, m);
            }
        }
        bool negative = false;
        for (const auto& constituent : c.coefficients[i].constituents())
            for (const auto& coeff : constituent.coefficients())
                if (sign * coeff < 0) negative = true;
        if (negative) {
            report.coefficients_nonnegative = false;
            report.negative_coefficient_indices.push_back(i);
        }
    }
    return report;
}

}  // namespace arrecip
