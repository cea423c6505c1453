#pragma once

// Ground-truth characteristic polynomials of a concrete arrangement A^m,
// computed from the intersection poset (Möbius function), from the signed
// sum over subcollections, and by counting points over F_p.

#include "arrecip/charpoly.hpp"
#include "arrecip/exact_linear.hpp"
#include "arrecip/polynomial.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace arrecip {

/// Nonempty affine subspace of Q^d given by a consistent system in reduced row
/// echelon form; the representation is canonical, so equal flats compare equal.
class AffineFlat {
public:
    /// The whole space Q^d.
    static AffineFlat ambient(std::size_t d);
    /// {x : form·x = level}; the form must be nonzero.
    static AffineFlat hyperplane(std::span<const Integer> form, const Integer& level);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t codimension() const { return equations_.rows(); }
    std::size_t dimension() const { return ambient_dim_ - equations_.rows(); }

    /// Rows [a | b] meaning a·x = b, in RREF.
    const RationalMatrix& equations() const { return equations_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    /// True iff this flat lies inside `other`.
    bool is_contained_in(const AffineFlat& other) const;

    enum class Meet { empty, same, smaller };
    /// Intersection with a hyperplane-style single equation; `out` is set
    /// only when the result is a strictly smaller nonempty flat.
    Meet intersect(const AffineFlat& hyperplane, AffineFlat& out) const;

    std::string key() const;

    friend bool operator==(const AffineFlat& a, const AffineFlat& b) {
        return a.ambient_dim_ == b.ambient_dim_ && a.equations_ == b.equations_;
    }

private:
    // Reduces an augmented row against this flat's pivots.
    std::vector<Rational> reduce(std::span<const Rational> row) const;

    std::size_t ambient_dim_ = 0;
    RationalMatrix equations_;
    std::vector<std::size_t> pivots_;
};

/// Hyperplanes α(x) = k for every form α and k in [-m, m], listed form by form.
std::vector<AffineFlat> build_hyperplanes(const ArrangementSpec& a, std::int64_t m);

class IntersectionPoset {
public:
    /// All nonempty intersections of subcollections, built incrementally.
    IntersectionPoset(const std::vector<AffineFlat>& hyperplanes, std::size_t d);

    std::size_t size() const { return flats_.size(); }
    /// Flats sorted by decreasing dimension; index 0 is the ambient space.
    const std::vector<AffineFlat>& flats() const { return flats_; }
    const std::vector<Integer>& mobius() const { return mobius_; }

    /// True iff flat `upper` contains flat `lower` (upper <= lower in the poset).
    bool contains(std::size_t upper, std::size_t lower) const;

    /// Count of flats of each dimension 0..d.
    std::vector<std::size_t> rank_sizes() const;

private:
    std::size_t d_;
    std::vector<AffineFlat> flats_;
    std::vector<std::vector<std::uint64_t>> incidence_;  // hyperplanes containing each flat
    std::vector<Integer> mobius_;
};

/// Σ_x μ(x) q^{dim x}.
Polynomial mobius_chi(const IntersectionPoset& poset);

inline constexpr std::size_t kWhitneyMaxHyperplanes = 18;

/// Σ over subcollections G with nonempty intersection of (-1)^{#G} q^{dim ∩G}.
/// Throws GuardExceeded past kWhitneyMaxHyperplanes unless forced.
Polynomial whitney_chi(const std::vector<AffineFlat>& hyperplanes, std::size_t d, bool force = false);

inline constexpr std::uint64_t kFiniteFieldBudget = 100'000'000;

bool is_prime(std::uint64_t p);

/// #{x in F_p^d : α(x) ≢ k (mod p) for every form α and k in [-m, m]}.
/// Throws std::invalid_argument if p is not prime, GuardExceeded past budget.
Integer finite_field_count(const ArrangementSpec& a, std::int64_t m, std::uint64_t p,
                           std::uint64_t budget = kFiniteFieldBudget);

struct FiniteFieldReport {
    Integer count;
    Rational engine_value;  // χ_A(p, m) from the engine
    bool matches = false;   // a mismatch may only mean p is too small
};
FiniteFieldReport compare_finite_field(const ArrangementSpec& a, const CharQuasiPoly& chi, std::int64_t m,
                                       std::uint64_t p);

}  // namespace arrecip
