#pragma once

// Lattice-point counting for the polytope P_F = W_F ∩ [-1,1]^n, where W_F is
// the real span of the image of x ↦ (α_1(x), ..., α_n(x)) for a subset F of
// forms. The m-th dilate's lattice points are exactly the level vectors
// b ∈ [-m,m]^n for which the hyperplanes α_i(x) = b_i meet.

#include "arrecip/exact_linear.hpp"
#include "arrecip/quasipoly.hpp"

#include <cstdint>
#include <memory>
#include <string>

namespace arrecip {

namespace detail {
struct CountingPlan;
}

/// Default limit on (2m+1)^n for brute-force enumeration.
inline constexpr std::uint64_t kDefaultBruteForceBudget = 100'000'000;

/// Rank and canonical key (n plus Hermite basis) of the lattice Z^n ∩ W_F.
struct LatticeIdentity {
    std::size_t rank = 0;
    std::string key;
};
LatticeIdentity lattice_identity(const IntegerMatrix& forms);
std::string lattice_key(const LatticeBasis& lattice);

class SubsetGeometry {
public:
    /// Rows of `forms` are the linear forms of F, in a fixed order. A 0 x d
    /// matrix is the empty subset.
    explicit SubsetGeometry(IntegerMatrix forms);

    const IntegerMatrix& forms() const { return forms_; }
    const LatticeBasis& lattice() const { return lattice_; }
    std::size_t rank() const { return lattice_.rank; }
    std::size_t ambient_dim() const { return forms_.rows(); }

    /// lcm of |nonzero maximal minors| of the form matrix; bounds the
    /// denominators of the vertices of P_F and hence its Ehrhart period.
    const Integer& period_cap() const { return period_cap_; }

    /// Canonical text key of the lattice Z^n ∩ W_F (n plus its Hermite basis).
    const std::string& lattice_key() const { return lattice_key_; }

    const detail::CountingPlan& plan() const { return *plan_; }

private:
    IntegerMatrix forms_;
    LatticeBasis lattice_;
    Integer period_cap_;
    std::string lattice_key_;
    std::shared_ptr<const detail::CountingPlan> plan_;
};

/// lcm of the vertex denominators of P_F in lattice coordinates. It is an
/// Ehrhart period and divides period_cap().
Integer vertex_denominator(const SubsetGeometry& g);

/// #(lattice points of W_F in [-m,m]^n), by depth-first search over lattice
/// coordinates with Fourier–Motzkin bounds. Requires m >= 0.
Integer count_points(const SubsetGeometry& g, std::int64_t m);

/// #{b ∈ [-m,m]^n ∩ Z^n : the system α_i(x) = b_i is solvable}, by direct
/// enumeration. Throws GuardExceeded when (2m+1)^n exceeds `budget`.
Integer count_points_bruteforce(const SubsetGeometry& g, std::int64_t m,
                                std::uint64_t budget = kDefaultBruteForceBudget);

/// Lattice points of W_F in the open cube (-m,m)^n, counted with strict
/// inequalities. Requires m >= 1.
Integer count_interior_points(const SubsetGeometry& g, std::int64_t m);

/// count_points(g, m) for every m = 0..max_m in one sweep: each lattice
/// prefix contributes the sup-norm histogram of its last coordinate.
std::vector<std::uint64_t> count_points_table(const SubsetGeometry& g, std::int64_t max_m);

/// Limits on the count table ehrhart_quasipoly may build without forcing;
/// the sweep costs roughly max_m^(rank-1) prefix visits.
inline constexpr std::uint64_t kEhrhartWorkBudget = 400'000'000;
inline constexpr std::uint64_t kEhrhartMaxTable = 8'000'000;
/// Candidate periods up to this size are tested against a shared small table.
inline constexpr std::uint64_t kEhrhartSmallPeriod = 64;

/// i(P_F, m) as a quasi-polynomial of degree rank(g). The period is searched
/// over the divisors of vertex_denominator(g). Throws GuardExceeded when the
/// samples needed exceed kEhrhartWorkBudget, unless forced.
QuasiPolynomial ehrhart_quasipoly(const SubsetGeometry& g, bool force = false);

/// Leading Ehrhart coefficient, i.e. the volume of P_F relative to the lattice
/// of its span. Throws std::logic_error if the constituents disagree.
Rational normalized_volume(const SubsetGeometry& g);
Rational normalized_volume(const QuasiPolynomial& ehrhart, std::size_t rank);

/// Checks i(P,-m) = (-1)^rank i(P,m-1) as a quasi-polynomial identity, plus
/// pointwise agreement with the counters for m = 1..window.
bool verify_ehrhart_reciprocity(const SubsetGeometry& g, std::int64_t window);
bool verify_ehrhart_reciprocity(const SubsetGeometry& g, const QuasiPolynomial& ehrhart, std::int64_t window);

}  // namespace arrecip
