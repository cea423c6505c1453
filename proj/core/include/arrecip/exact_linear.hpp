#pragma once

// Exact integer and rational linear algebra: echelon forms, solvability,
// Smith and Hermite normal forms, saturated lattices, total unimodularity.

#include "arrecip/matrix.hpp"

#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

namespace arrecip {

/// Raised when an exponential routine would exceed its configured size limit.
class GuardExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct RrefResult {
    RationalMatrix reduced;
    std::vector<std::size_t> pivot_cols;
    std::size_t rank = 0;
};

/// Reduced row echelon form (pivots equal to 1, zero rows at the bottom).
RrefResult rref(RationalMatrix m);

std::size_t rank(const IntegerMatrix& m);
std::size_t rank(const RationalMatrix& m);

/// True iff m·x = b has a rational solution. Throws std::invalid_argument on a
/// size mismatch.
bool is_consistent(const IntegerMatrix& m, std::span<const Integer> b);

/// Rational solution of m·x = b by back-substitution on the RREF, with free
/// variables set to zero; empty optional-like result signalled by `found`.
struct Solution {
    bool found = false;
    std::vector<Rational> x;
};
Solution solve(const IntegerMatrix& m, std::span<const Integer> b);

/// d = u·m·v with u, v unimodular and d diagonal, d_1 | d_2 | ... and every
/// diagonal entry nonnegative.
struct SmithForm {
    IntegerMatrix u;
    IntegerMatrix d;
    IntegerMatrix v;
};
SmithForm smith_normal_form(const IntegerMatrix& m);

/// Nonzero diagonal entries of the Smith form.
std::vector<Integer> elementary_divisors(const IntegerMatrix& m);

/// Row-style Hermite normal form: upper echelon, positive pivots, entries
/// above each pivot reduced into [0, pivot). Zero rows are dropped, so the
/// result is a canonical basis of the row lattice.
IntegerMatrix hermite_normal_form(const IntegerMatrix& m);

/// Exact determinant of a square matrix (fraction-free Bareiss elimination).
Integer determinant(const IntegerMatrix& m);

/// Integer rows spanning {c : c^T m = 0} over Q, one row per dimension of the
/// left null space. Each row is primitive (content 1).
IntegerMatrix left_null_space(const IntegerMatrix& m);

/// Basis (as columns) of the integer kernel {x in Z^n : c·x = 0}; the
/// returned lattice is saturated.
IntegerMatrix integer_kernel(const IntegerMatrix& c);

/// Basis of the saturated lattice Z^n ∩ colspace_Q(A) for an n x d matrix A.
struct LatticeBasis {
    std::size_t ambient_dim = 0;
    std::size_t rank = 0;
    IntegerMatrix basis;  // ambient_dim x rank, columns are basis vectors
};
LatticeBasis saturated_lattice_basis(const IntegerMatrix& forms);

/// True iff the lattice generated by the basis columns equals its rational
/// span intersected with Z^n.
bool is_saturated(const IntegerMatrix& basis);

/// Size limit for brute-force minor enumeration.
inline constexpr std::size_t kTotallyUnimodularMaxDim = 12;

/// True iff every square minor lies in {-1, 0, 1}. Throws GuardExceeded when
/// either dimension exceeds kTotallyUnimodularMaxDim unless `force` is set.
bool is_totally_unimodular(const IntegerMatrix& m, bool force = false);

/// All nonzero r x r minors where r = rank(m), absolute values.
std::vector<Integer> nonzero_maximal_minors(const IntegerMatrix& m);

}  // namespace arrecip
