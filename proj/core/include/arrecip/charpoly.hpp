#pragma once

// The characteristic polynomial χ_A(q, m) of the deformed arrangement A^m,
// assembled from Ehrhart quasi-polynomials of the slices P_F:
//
//   c_i(m) = Σ_{F ⊆ A, rank F = d - i} (-1)^{#F} i(P_F, m)
//
// where F ranges over index subsets of the (multi)set of forms.

#include "arrecip/ehrhart.hpp"
#include "arrecip/polynomial.hpp"
#include "arrecip/quasipoly.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace arrecip {

/// Rejected arrangement input (zero form, wrong width, rank deficiency).
class InvalidArrangement : public std::invalid_argument {
public:
    enum class Reason { zero_form, dimension_mismatch, rank_deficient };
    InvalidArrangement(Reason reason, const std::string& what) : std::invalid_argument(what), reason_(reason) {}
    Reason reason() const { return reason_; }

private:
    Reason reason_;
};

/// A multiset of nonzero integer linear forms on Q^d that spans the dual space.
class ArrangementSpec {
public:
    ArrangementSpec(std::size_t dimension, IntegerMatrix forms, std::string label = {});

    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return forms_.rows(); }
    const IntegerMatrix& forms() const { return forms_; }
    const std::string& label() const { return label_; }

    friend bool operator==(const ArrangementSpec& a, const ArrangementSpec& b) {
        return a.dimension_ == b.dimension_ && a.forms_ == b.forms_;
    }

private:
    std::size_t dimension_;
    IntegerMatrix forms_;
    std::string label_;
};

/// χ_A(q, m) = Σ_i c_i(m) q^i.
struct CharQuasiPoly {
    std::size_t dimension = 0;
    std::vector<QuasiPolynomial> coefficients;  // c_0 .. c_d

    /// The polynomial in q obtained by evaluating every c_i at m.
    Polynomial at(std::int64_t m) const;
    /// Least common multiple of the coefficient periods.
    std::size_t period() const;
};

/// Ehrhart quasi-polynomials keyed by lattice. Safe for concurrent use;
/// racing threads may compute the same entry, the first insert wins.
class EhrhartCache {
public:
    QuasiPolynomial get_or_compute(const SubsetGeometry& g, bool force = false);
    std::size_t size() const;
    std::vector<QuasiPolynomial> values() const;

private:
    mutable std::mutex mutex_;
    std::map<std::string, QuasiPolynomial> entries_;
};

struct CharPolyOptions {
    std::size_t max_forms = 20;  // subset enumeration guard (2^n subsets)
    bool force = false;
    unsigned threads = 1;
};

/// Signed multiplicity of one lattice class among the subsets of a given rank.
struct LatticeClass {
    std::size_t rank = 0;
    std::string key;
    IntegerMatrix representative;  // forms of the first subset seen with this lattice
    Integer signed_count;          // Σ (-1)^{#F} over subsets F with this lattice
};

struct CharPolyComputation {
    CharQuasiPoly chi;
    std::vector<LatticeClass> classes;
    std::size_t subsets = 0;
};

/// Full computation over all 2^n subsets. `dimension` is the rank of the
/// span the result refers to. Throws GuardExceeded past the form budget.
CharPolyComputation compute_characteristic(const IntegerMatrix& forms, std::size_t dimension,
                                           const CharPolyOptions& options = {}, EhrhartCache* cache = nullptr);

CharQuasiPoly characteristic_quasipoly(const ArrangementSpec& a, const CharPolyOptions& options = {});

/// Same construction for forms that need not span Q^d: the result describes
/// the arrangement inside the span, of dimension rank(forms).
CharQuasiPoly characteristic_quasipoly_span(const IntegerMatrix& forms, const CharPolyOptions& options = {});

Polynomial chi_at(const ArrangementSpec& a, std::int64_t m, const CharPolyOptions& options = {});

/// r_A(m) = (-1)^d χ_A(-1, m).
QuasiPolynomial regions(const CharQuasiPoly& c);
/// b_A(m) = (-1)^d χ_A(1, m).
QuasiPolynomial bounded_regions(const CharQuasiPoly& c);

/// c_i(-m) = (-1)^{d-i} c_i(m-1) for every i.
bool check_reciprocity(const CharQuasiPoly& c);

/// χ_A(q, -1) = (-1)^d χ_A(-q, 0).
bool check_special_reciprocity(const CharQuasiPoly& c);
bool check_special_reciprocity(const ArrangementSpec& a, const CharPolyOptions& options = {});

/// deg c_i <= d-i, deg c_0 = d, deg r_A = d, c_d = 1.
bool check_degree_bounds(const CharQuasiPoly& c);

/// r_A(m) >= (2m+2)^d for 0 <= m <= window.
bool check_region_lower_bound(const CharQuasiPoly& c, std::int64_t window);

/// (-1)^d r_A(-m) = b_A(m-1) as quasi-polynomials and pointwise for m = 1..window.
bool check_bounded_reciprocity(const CharQuasiPoly& c, std::int64_t window);

struct LeadingTermReport {
    Rational volume_sum;       // Σ_{rank F = d} (-1)^{#F-d} vol(P_F)
    Rational region_leading;   // coefficient of m^d in r_A(m)
    bool equal = false;
};

/// Signed volume sum over full-rank subsets compared with the leading
/// coefficient of the region count.
LeadingTermReport leading_term_report(const CharPolyComputation& computation, EhrhartCache& cache);

/// The signed volume sum; throws std::logic_error if it differs from the
/// leading region coefficient.
Rational corollary1_leading(const ArrangementSpec& a, const CharPolyOptions& options = {});

struct SignScanReport {
    bool values_alternate = true;  // (-1)^{d-i} c_i(m) > 0 for all i, 0 <= m <= window
    std::vector<std::pair<std::size_t, std::int64_t>> violations;  // (i, m)
    bool coefficients_nonnegative = true;  // every constituent coefficient of (-1)^{d-i} c_i
    std::vector<std::size_t> negative_coefficient_indices;  // i with a negative constituent coefficient
};

/// Value signs are guaranteed; constituent coefficient signs are only reported.
SignScanReport sign_scan(const CharQuasiPoly& c, std::int64_t window);

}  // namespace arrecip
