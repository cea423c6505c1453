#pragma once

// Quasi-polynomials f: Z -> Q. Constituent j (0-based) governs every integer
// m with m mod N == j, where mod is the mathematical residue in {0..N-1}, so
// negative arguments are evaluated through the same constituents.

#include "arrecip/polynomial.hpp"
#include "arrecip/rational.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace arrecip {

class FitError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class QuasiPolynomial {
public:
    /// The zero function, period 1.
    QuasiPolynomial();
    /// Period-1 quasi-polynomial.
    QuasiPolynomial(const Polynomial& p);  // NOLINT(google-explicit-constructor)
    /// One polynomial per residue class; the vector length is the period.
    explicit QuasiPolynomial(std::vector<Polynomial> constituents);

    static QuasiPolynomial constant(const Rational& c) { return QuasiPolynomial(Polynomial::constant(c)); }

    std::size_t period() const { return constituents_.size(); }
    const Polynomial& constituent(std::size_t residue) const { return constituents_.at(residue); }
    const std::vector<Polynomial>& constituents() const { return constituents_; }

    /// Maximum constituent degree; -1 for the zero function.
    int degree() const;

    Rational evaluate(const Integer& m) const;
    Rational evaluate(std::int64_t m) const { return evaluate(Integer(static_cast<long>(m))); }

    /// Same function, period raised to a multiple of the current period.
    QuasiPolynomial lifted(std::size_t period) const;
    /// Same function at its minimal period.
    QuasiPolynomial reduced() const;

    /// Residue index for m under this period.
    std::size_t residue_of(const Integer& m) const;

    /// Leading coefficient (of m^degree) of each constituent, in residue order.
    std::vector<Rational> leading_coefficients(int deg) const;

private:
    std::vector<Polynomial> constituents_;
};

/// Pointwise equality on all of Z.
bool equals(const QuasiPolynomial& f, const QuasiPolynomial& g);

/// Sum of c_k * f_k, at the minimal period of the result.
QuasiPolynomial linear_combine(const std::vector<std::pair<Rational, QuasiPolynomial>>& terms);

QuasiPolynomial scale(const QuasiPolynomial& f, const Rational& c);

/// g(m) = f(a*m + b); a must be +1 or -1.
QuasiPolynomial precompose_affine(const QuasiPolynomial& f, int a, const Integer& b);

struct Sample {
    std::int64_t m;
    Rational value;
};

/// The unique period-N quasi-polynomial of degree <= degree_bound through the
/// samples. Throws FitError if a residue class has fewer than degree_bound+1
/// distinct arguments or if surplus samples disagree with the interpolant.
QuasiPolynomial fit(const std::vector<Sample>& samples, std::size_t period, int degree_bound);

using ValueOracle = std::function<Rational(std::int64_t)>;

/// Smallest period N <= period_cap for which fitting degree_bound+1 samples per
/// residue (at m = j, j+N, ...) also reproduces two further held-out samples
/// per residue. Throws FitError when no such period exists.
QuasiPolynomial minimal_period_fit(const ValueOracle& oracle, int degree_bound, std::size_t period_cap);

/// Same search restricted to `candidates`, tried in ascending order. Used when
/// the true period is known to divide a given number. `prepare`, if set, is
/// called with the largest argument a candidate needs before it is sampled.
/// With `last_is_period` the largest candidate is known to be a period and is
/// fit from degree_bound+1 samples per residue, without held-out checks.
QuasiPolynomial minimal_period_fit(const ValueOracle& oracle, int degree_bound, std::vector<std::size_t> candidates,
                                   const std::function<void(std::int64_t)>& prepare = {},
                                   bool last_is_period = false);

/// Positive divisors of n in ascending order.
std::vector<std::uint64_t> divisors(std::uint64_t n);

}  // namespace arrecip
