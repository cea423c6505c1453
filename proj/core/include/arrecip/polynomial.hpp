#pragma once

#include "arrecip/rational.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace arrecip {

/// Univariate polynomial with rational coefficients, stored in ascending
/// powers with trailing zeros trimmed (the zero polynomial has no terms).
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<Rational> ascending);
    Polynomial(std::initializer_list<long> ascending);

    static Polynomial constant(const Rational& c);
    /// The monomial x.
    static Polynomial variable();

    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Coefficient of x^k (zero past the stored range).
    Rational coefficient(std::size_t k) const;
    const std::vector<Rational>& coefficients() const { return coeffs_; }

    Rational operator()(const Rational& x) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial& operator*=(const Rational& scalar);

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
    friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
    friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
    friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
    friend bool operator==(const Polynomial& a, const Polynomial& b) = default;

    /// p(a*x + b).
    Polynomial compose_affine(const Rational& a, const Rational& b) const;

    /// Human rendering in descending powers, e.g. "q^2 - 6*q + 9".
    std::string to_string(std::string_view var) const;

private:
    void trim();
    std::vector<Rational> coeffs_;
};

/// Lagrange interpolation through distinct abscissae (Newton divided
/// differences). Throws std::invalid_argument on repeated abscissae.
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

}  // namespace arrecip
