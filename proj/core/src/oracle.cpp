#include "arrecip/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace arrecip {

AffineFlat AffineFlat::ambient(std::size_t d) {
    AffineFlat f;
    f.ambient_dim_ = d;
    f.equations_ = RationalMatrix(0, d + 1);
    return f;
}

AffineFlat AffineFlat::hyperplane(std::span<const Integer> form, const Integer& level) {
    AffineFlat f;
    f.ambient_dim_ = form.size();
    f.equations_ = RationalMatrix(1, form.size() + 1);
    std::size_t pivot = form.size();
    for (std::size_t j = 0; j < form.size(); ++j)
        if (form[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot == form.size()) throw std::invalid_argument("hyperplane of a zero form");
    const Rational inv = Rational(1) / Rational(form[pivot]);
    for (std::size_t j = 0; j < form.size(); ++j) f.equations_(0, j) = Rational(form[j]) * inv;
    f.equations_(0, form.size()) = Rational(level) * inv;
    f.pivots_ = {pivot};
    return f;
}

std::vector<Rational> AffineFlat::reduce(std::span<const Rational> row) const {
    std::vector<Rational> out(row.begin(), row.end());
    for (std::size_t k = 0; k < pivots_.size(); ++k) {
        const std::size_t p = pivots_[k];
        if (out[p] == 0) continue;
        const Rational factor = out[p];
        for (std::size_t j = 0; j <= ambient_dim_; ++j) out[j] -= factor * equations_(k, j);
    }
    return out;
}

bool AffineFlat::is_contained_in(const AffineFlat& other) const {
    for (std::size_t k = 0; k < other.equations_.rows(); ++k) {
        const auto r = reduce(other.equations_.row(k));
        if (std::any_of(r.begin(), r.end(), [](const Rational& x) { return x != 0; })) return false;
    }
    return true;
}

AffineFlat::Meet AffineFlat::intersect(const AffineFlat& hyperplane, AffineFlat& out) const {
    std::vector<Rational> r = reduce(hyperplane.equations_.row(0));
    std::size_t pivot = ambient_dim_;
    for (std::size_t j = 0; j < ambient_dim_; ++j)
        if (r[j] != 0) {
            pivot = j;
            break;
        }
    if (pivot == ambient_dim_) return r[ambient_dim_] == 0 ? Meet::same : Meet::empty;

    const Rational inv = Rational(1) / r[pivot];
    for (auto& x : r) x *= inv;

    const std::size_t rows = equations_.rows();
    out.ambient_dim_ = ambient_dim_;
    out.equations_ = RationalMatrix(rows + 1, ambient_dim_ + 1);
    out.pivots_.clear();
    std::size_t dst = 0;
    bool placed = false;
    auto emit = [&](std::span<const Rational> src, std::size_t p) {
        for (std::size_t j = 0; j <= ambient_dim_; ++j) out.equations_(dst, j) = src[j];
        out.pivots_.push_back(p);
        ++dst;
    };
    for (std::size_t k = 0; k < rows; ++k) {
        if (!placed && pivot < pivots_[k]) {
            emit(r, pivot);
            placed = true;
        }
        std::vector<Rational> row(equations_.row(k).begin(), equations_.row(k).end());
        if (row[pivot] != 0) {
            const Rational factor = row[pivot];
            for (std::size_t j = 0; j <= ambient_dim_; ++j) row[j] -= factor * r[j];
        }
        emit(row, pivots_[k]);
    }
    if (!placed) emit(r, pivot);
    return Meet::smaller;
}

std::string AffineFlat::key() const {
    std::ostringstream os;
    os << ambient_dim_ << '|';
    for (std::size_t i = 0; i < equations_.rows(); ++i) {
        for (std::size_t j = 0; j <= ambient_dim_; ++j) os << equations_(i, j) << ',';
        os << ';';
    }
    return os.str();
}

std::vector<AffineFlat> build_hyperplanes(const ArrangementSpec& a, std::int64_t m) {
    if (m < 0) throw std::invalid_argument("build_hyperplanes: m must be nonnegative");
    std::vector<AffineFlat> out;
    out.reserve(a.size() * static_cast<std::size_t>(2 * m + 1));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::int64_t k = -m; k <= m; ++k) out.push_back(AffineFlat::hyperplane(a.forms().row(i), Integer(static_cast<long>(k))));
    return out;
}

IntersectionPoset::IntersectionPoset(const std::vector<AffineFlat>& hyperplanes, std::size_t d) : d_(d) {
    std::vector<AffineFlat> found{AffineFlat::ambient(d)};
    std::map<std::string, std::size_t> seen{{found.front().key(), 0}};
    AffineFlat scratch;
    for (const auto& h : hyperplanes) {
        if (h.ambient_dim() != d) throw std::invalid_argument("hyperplane dimension mismatch");
        const std::size_t current = found.size();
        for (std::size_t i = 0; i < current; ++i) {
            if (found[i].intersect(h, scratch) != AffineFlat::Meet::smaller) continue;
            std::string k = scratch.key();
            if (seen.emplace(std::move(k), found.size()).second) found.push_back(scratch);
        }
    }
    std::stable_sort(found.begin(), found.end(),
                     [](const AffineFlat& a, const AffineFlat& b) { return a.dimension() > b.dimension(); });
    flats_ = std::move(found);

    const std::size_t words = (hyperplanes.size() + 63) / 64;
    incidence_.assign(flats_.size(), std::vector<std::uint64_t>(words, 0));
    for (std::size_t i = 0; i < flats_.size(); ++i)
        for (std::size_t h = 0; h < hyperplanes.size(); ++h)
            if (flats_[i].is_contained_in(hyperplanes[h])) incidence_[i][h / 64] |= std::uint64_t{1} << (h % 64);

    // μ(0̂) = 1, μ(x) = -Σ_{y < x} μ(y), with y < x meaning y ⊋ x.
    mobius_.assign(flats_.size(), Integer(0));
    mobius_[0] = 1;
    for (std::size_t x = 1; x < flats_.size(); ++x) {
        Integer sum = 0;
        for (std::size_t y = 0; y < x; ++y) {
            if (flats_[y].dimension() <= flats_[x].dimension()) break;
            if (contains(y, x)) sum += mobius_[y];
        }
        mobius_[x] = -sum;
    }
}

bool IntersectionPoset::contains(std::size_t upper, std::size_t lower) const {
    // Flats are intersections of the hyperplanes through them, so inclusion is
    // reverse inclusion of incidence sets.
    const auto& up = incidence_[upper];
    const auto& low = incidence_[lower];
    for (std::size_t w = 0; w < up.size(); ++w)
        if ((up[w] & ~low[w]) != 0) return false;
    return true;
}

std::vector<std::size_t> IntersectionPoset::rank_sizes() const {
    std::vector<std::size_t> out(d_ + 1, 0);
    for (const auto& f : flats_) ++out[f.dimension()];
    return out;
}

Polynomial mobius_chi(const IntersectionPoset& poset) {
    std::vector<Rational> coeffs(poset.flats().empty() ? 1 : poset.flats().front().ambient_dim() + 1, Rational(0));
    for (std::size_t i = 0; i < poset.size(); ++i) coeffs[poset.flats()[i].dimension()] += Rational(poset.mobius()[i]);
    return Polynomial(std::move(coeffs));
}

Polynomial whitney_chi(const std::vector<AffineFlat>& hyperplanes, std::size_t d, bool force) {
    if (!force && hyperplanes.size() > kWhitneyMaxHyperplanes)
        throw GuardExceeded("Whitney sum limited to " + std::to_string(kWhitneyMaxHyperplanes) + " hyperplanes, got " +
                            std::to_string(hyperplanes.size()) + " (use force to override)");
    std::vector<Integer> coeffs(d + 1, Integer(0));
    // Supersets of a subcollection with empty intersection are empty too.
    std::function<void(std::size_t, const AffineFlat&, bool)> visit = [&](std::size_t next, const AffineFlat& flat,
                                                                           bool odd) {
        coeffs[flat.dimension()] += odd ? -1 : 1;
        for (std::size_t j = next; j < hyperplanes.size(); ++j) {
            AffineFlat smaller;
            switch (flat.intersect(hyperplanes[j], smaller)) {
                case AffineFlat::Meet::empty:
                    break;
                case AffineFlat::Meet::same:
                    visit(j + 1, flat, !odd);
                    break;
                case AffineFlat::Meet::smaller:
                    visit(j + 1, smaller, !odd);
                    break;
            }
        }
    };
    visit(0, AffineFlat::ambient(d), false);
    std::vector<Rational> out;
    for (const auto& c : coeffs) out.emplace_back(c);
    return Polynomial(std::move(out));
}

bool is_prime(std::uint64_t p) {
    if (p < 2) return false;
    for (std::uint64_t k = 2; k * k <= p; ++k)
        if (p % k == 0) return false;
    return true;
}

Integer finite_field_count(const ArrangementSpec& a, std::int64_t m, std::uint64_t p, std::uint64_t budget) {
    if (!is_prime(p)) throw std::invalid_argument("finite_field_count: " + std::to_string(p) + " is not prime");
    if (m < 0) throw std::invalid_argument("finite_field_count: m must be nonnegative");
    const std::size_t d = a.dimension();
    std::uint64_t points = 1;
    for (std::size_t i = 0; i < d; ++i) {
        if (points > budget / p) throw GuardExceeded("finite field enumeration exceeds budget");
        points *= p;
    }
    const auto ip = static_cast<std::int64_t>(p);
    std::vector<char> forbidden(p, 0);
    for (std::int64_t k = -m; k <= m; ++k) forbidden[static_cast<std::size_t>(((k % ip) + ip) % ip)] = 1;

    std::vector<std::vector<std::int64_t>> forms(a.size(), std::vector<std::int64_t>(d));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) {
            Integer r;
            mpz_fdiv_r_ui(r.get_mpz_t(), a.forms()(i, j).get_mpz_t(), static_cast<unsigned long>(p));
            forms[i][j] = static_cast<std::int64_t>(r.get_ui());
        }

    std::vector<std::int64_t> x(d, 0);
    std::uint64_t good = 0;
    for (std::uint64_t idx = 0; idx < points; ++idx) {
        bool ok = true;
        for (std::size_t i = 0; i < forms.size() && ok; ++i) {
            std::int64_t v = 0;
            for (std::size_t j = 0; j < d; ++j) v = (v + forms[i][j] * x[j]) % ip;
            ok = !forbidden[static_cast<std::size_t>(v)];
        }
        if (ok) ++good;
        for (std::size_t j = 0; j < d; ++j) {
            if (++x[j] < ip) break;
            x[j] = 0;
        }
    }
    return Integer(static_cast<unsigned long>(good));
}

FiniteFieldReport compare_finite_field(const ArrangementSpec& a, const CharQuasiPoly& chi, std::int64_t m,
                                       std::uint64_t p) {
    FiniteFieldReport report;
    report.count = finite_field_count(a, m, p);
    report.engine_value = chi.at(m)(Rational(Integer(static_cast<unsigned long>(p))));
    report.matches = Rational(report.count) == report.engine_value;
    return report;
}

}  // namespace arrecip
