#include "arrecip/quasipoly.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>

namespace arrecip {

QuasiPolynomial::QuasiPolynomial() : constituents_(1) {}

QuasiPolynomial::QuasiPolynomial(const Polynomial& p) : constituents_{p} {}

QuasiPolynomial::QuasiPolynomial(std::vector<Polynomial> constituents) : constituents_(std::move(constituents)) {
    if (constituents_.empty()) throw std::invalid_argument("quasi-polynomial period must be at least 1");
}

int QuasiPolynomial::degree() const {
    int deg = -1;
    for (const auto& c : constituents_) deg = std::max(deg, c.degree());
    return deg;
}

std::size_t QuasiPolynomial::residue_of(const Integer& m) const {
    Integer r;
    mpz_fdiv_r_ui(r.get_mpz_t(), m.get_mpz_t(), static_cast<unsigned long>(period()));
    return static_cast<std::size_t>(r.get_ui());
}

Rational QuasiPolynomial::evaluate(const Integer& m) const { return constituents_[residue_of(m)](Rational(m)); }

QuasiPolynomial QuasiPolynomial::lifted(std::size_t period) const {
    if (period == 0 || period % this->period() != 0)
        throw std::invalid_argument("lift target must be a multiple of the period");
    std::vector<Polynomial> out(period);
    for (std::size_t j = 0; j < period; ++j) out[j] = constituents_[j % this->period()];
    return QuasiPolynomial(std::move(out));
}

QuasiPolynomial QuasiPolynomial::reduced() const {
    const std::size_t n = period();
    for (std::size_t p = 1; p < n; ++p) {
        if (n % p != 0) continue;
        bool ok = true;
        for (std::size_t j = p; j < n && ok; ++j) ok = constituents_[j] == constituents_[j % p];
        if (ok) return QuasiPolynomial(std::vector<Polynomial>(constituents_.begin(), constituents_.begin() + p));
    }
    return *this;
}

std::vector<Rational> QuasiPolynomial::leading_coefficients(int deg) const {
    std::vector<Rational> out;
    out.reserve(period());
    for (const auto& c : constituents_) out.push_back(deg < 0 ? Rational(0) : c.coefficient(static_cast<std::size_t>(deg)));
    return out;
}

bool equals(const QuasiPolynomial& f, const QuasiPolynomial& g) {
    const std::size_t n = std::lcm(f.period(), g.period());
    for (std::size_t j = 0; j < n; ++j)
        if (f.constituent(j % f.period()) != g.constituent(j % g.period())) return false;
    return true;
}

QuasiPolynomial linear_combine(const std::vector<std::pair<Rational, QuasiPolynomial>>& terms) {
    std::size_t n = 1;
    for (const auto& [c, f] : terms) n = std::lcm(n, f.period());
    std::vector<Polynomial> acc(n);
    for (const auto& [c, f] : terms) {
        if (c == 0) continue;
        for (std::size_t j = 0; j < n; ++j) acc[j] += f.constituent(j % f.period()) * c;
    }
    return QuasiPolynomial(std::move(acc)).reduced();
}

QuasiPolynomial scale(const QuasiPolynomial& f, const Rational& c) { return linear_combine({{c, f}}); }

QuasiPolynomial precompose_affine(const QuasiPolynomial& f, int a, const Integer& b) {
    if (a != 1 && a != -1) throw std::invalid_argument("precompose_affine: a must be +1 or -1");
    const std::size_t n = f.period();
    std::vector<Polynomial> out(n);
    for (std::size_t j = 0; j < n; ++j) {
        // m ≡ j  ⇒  a*m + b ≡ a*j + b (mod n)
        const Integer image = Integer(a) * Integer(static_cast<unsigned long>(j)) + b;
        out[j] = f.constituent(f.residue_of(image)).compose_affine(Rational(a), Rational(b));
    }
    return QuasiPolynomial(std::move(out));
}

QuasiPolynomial fit(const std::vector<Sample>& samples, std::size_t period, int degree_bound) {
    if (period == 0) throw std::invalid_argument("fit: period must be at least 1");
    if (degree_bound < 0) throw std::invalid_argument("fit: negative degree bound");
    const auto needed = static_cast<std::size_t>(degree_bound) + 1;
    const auto n = static_cast<std::int64_t>(period);

    std::vector<std::map<std::int64_t, Rational>> by_residue(period);
    for (const auto& s : samples) {
        auto& bucket = by_residue[static_cast<std::size_t>(((s.m % n) + n) % n)];
        auto [it, inserted] = bucket.emplace(s.m, s.value);
        if (!inserted && it->second != s.value)
            throw FitError("fit: conflicting values at m=" + std::to_string(s.m));
    }

    std::vector<Polynomial> constituents(period);
    for (std::size_t j = 0; j < period; ++j) {
        const auto& bucket = by_residue[j];
        if (bucket.size() < needed)
            throw FitError("fit: residue " + std::to_string(j) + " mod " + std::to_string(period) + " has " +
                           std::to_string(bucket.size()) + " samples, needs " + std::to_string(needed));
        std::vector<Rational> xs, ys;
        for (const auto& [m, v] : bucket) {
            if (xs.size() == needed) break;
            xs.emplace_back(static_cast<long>(m));
            ys.push_back(v);
        }
        constituents[j] = interpolate(xs, ys);
        for (const auto& [m, v] : bucket) {
            if (constituents[j](Rational(static_cast<long>(m))) != v)
                throw FitError("fit: sample at m=" + std::to_string(m) + " inconsistent with period " +
                               std::to_string(period) + ", degree <= " + std::to_string(degree_bound));
        }
    }
    return QuasiPolynomial(std::move(constituents));
}

QuasiPolynomial minimal_period_fit(const ValueOracle& oracle, int degree_bound, std::vector<std::size_t> candidates,
                                   const std::function<void(std::int64_t)>& prepare, bool last_is_period) {
    if (degree_bound < 0) throw std::invalid_argument("minimal_period_fit: negative degree bound");
    std::sort(candidates.begin(), candidates.end());
    std::map<std::int64_t, Rational> memo;
    auto value = [&](std::int64_t m) -> const Rational& {
        auto it = memo.find(m);
        if (it == memo.end()) it = memo.emplace(m, oracle(m)).first;
        return it->second;
    };
    const std::int64_t per_residue = degree_bound + 3;  // D+1 to interpolate, 2 held out
    for (const std::size_t period : candidates) {
        if (period == 0) continue;
        const auto n = static_cast<std::int64_t>(period);
        const std::int64_t count = (last_is_period && period == candidates.back() ? degree_bound + 1 : per_residue) * n;
        if (prepare) prepare(count - 1);
        std::vector<Sample> samples;
        samples.reserve(static_cast<std::size_t>(count));
        for (std::int64_t m = 0; m < count; ++m) samples.push_back({m, value(m)});
        try {
            return fit(samples, period, degree_bound);
        } catch (const FitError&) {
            continue;
        }
    }
    throw FitError("minimal_period_fit: no candidate period up to " +
                   std::to_string(candidates.empty() ? 0 : candidates.back()) + " fits with degree <= " +
                   std::to_string(degree_bound));
}

QuasiPolynomial minimal_period_fit(const ValueOracle& oracle, int degree_bound, std::size_t period_cap) {
    std::vector<std::size_t> candidates(period_cap);
    std::iota(candidates.begin(), candidates.end(), std::size_t{1});
    return minimal_period_fit(oracle, degree_bound, std::move(candidates));
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("divisors: n must be positive");
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t k = 1; k * k <= n; ++k) {
        if (n % k != 0) continue;
        small.push_back(k);
        if (k != n / k) large.push_back(n / k);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

}  // namespace arrecip
