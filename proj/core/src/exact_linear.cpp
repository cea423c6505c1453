#include "arrecip/exact_linear.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

namespace arrecip {

RationalMatrix to_rational(const IntegerMatrix& m) {
    RationalMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = Rational(m(i, j));
    return out;
}

std::vector<Integer> multiply(const IntegerMatrix& m, std::span<const Integer> v) {
    if (v.size() != m.cols()) throw std::invalid_argument("matrix-vector dimension mismatch");
    std::vector<Integer> out(m.rows(), Integer(0));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
    return out;
}

RrefResult rref(RationalMatrix m) {
    RrefResult result;
    std::size_t pivot_row = 0;
    for (std::size_t col = 0; col < m.cols() && pivot_row < m.rows(); ++col) {
        std::size_t found = pivot_row;
        while (found < m.rows() && m(found, col) == 0) ++found;
        if (found == m.rows()) continue;
        m.swap_rows(found, pivot_row);
        const Rational inv = 1 / m(pivot_row, col);
        for (std::size_t j = col; j < m.cols(); ++j) m(pivot_row, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == pivot_row || m(i, col) == 0) continue;
            const Rational factor = m(i, col);
            for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= factor * m(pivot_row, j);
        }
        result.pivot_cols.push_back(col);
        ++pivot_row;
    }
    result.rank = pivot_row;
    result.reduced = std::move(m);
    return result;
}

std::size_t rank(const RationalMatrix& m) { return rref(m).rank; }
std::size_t rank(const IntegerMatrix& m) { return rref(to_rational(m)).rank; }

namespace {

RationalMatrix augmented(const IntegerMatrix& m, std::span<const Integer> b) {
    if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length does not match row count");
    RationalMatrix aug(m.rows(), m.cols() + 1);
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = Rational(m(i, j));
        aug(i, m.cols()) = Rational(b[i]);
    }
    return aug;
}

}  // namespace

bool is_consistent(const IntegerMatrix& m, std::span<const Integer> b) {
    const RrefResult r = rref(augmented(m, b));
    // Inconsistent exactly when the augmented column carries a pivot.
    return r.pivot_cols.empty() || r.pivot_cols.back() != m.cols();
}

Solution solve(const IntegerMatrix& m, std::span<const Integer> b) {
    const RrefResult r = rref(augmented(m, b));
    Solution sol;
    if (!r.pivot_cols.empty() && r.pivot_cols.back() == m.cols()) return sol;
    sol.found = true;
    sol.x.assign(m.cols(), Rational(0));
    for (std::size_t k = 0; k < r.rank; ++k) sol.x[r.pivot_cols[k]] = r.reduced(k, m.cols());
    return sol;
}

namespace {

void add_row_multiple(IntegerMatrix& a, std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t j = 0; j < a.cols(); ++j) a(target, j) += factor * a(source, j);
}

void add_col_multiple(IntegerMatrix& a, std::size_t target, std::size_t source, const Integer& factor) {
    if (factor == 0) return;
    for (std::size_t i = 0; i < a.rows(); ++i) a(i, target) += factor * a(i, source);
}

Integer tdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_tdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

Integer fdiv(const Integer& a, const Integer& b) {
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

}  // namespace

SmithForm smith_normal_form(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    IntegerMatrix u = IntegerMatrix::identity(m.rows());
    IntegerMatrix v = IntegerMatrix::identity(m.cols());
    const std::size_t limit = std::min(m.rows(), m.cols());

    for (std::size_t t = 0; t < limit; ++t) {
        bool exhausted = false;
        for (;;) {
            std::size_t bi = 0, bj = 0;
            bool any = false;
            for (std::size_t i = t; i < a.rows(); ++i)
                for (std::size_t j = t; j < a.cols(); ++j) {
                    if (a(i, j) == 0) continue;
                    if (!any || abs(a(i, j)) < abs(a(bi, bj))) {
                        bi = i;
                        bj = j;
                        any = true;
                    }
                }
            if (!any) {
                exhausted = true;
                break;
            }
            a.swap_rows(t, bi);
            u.swap_rows(t, bi);
            a.swap_cols(t, bj);
            v.swap_cols(t, bj);

            bool clean = true;
            for (std::size_t i = t + 1; i < a.rows(); ++i) {
                if (a(i, t) == 0) continue;
                const Integer q = tdiv(a(i, t), a(t, t));
                add_row_multiple(a, i, t, -q);
                add_row_multiple(u, i, t, -q);
                if (a(i, t) != 0) clean = false;
            }
            for (std::size_t j = t + 1; j < a.cols(); ++j) {
                if (a(t, j) == 0) continue;
                const Integer q = tdiv(a(t, j), a(t, t));
                add_col_multiple(a, j, t, -q);
                add_col_multiple(v, j, t, -q);
                if (a(t, j) != 0) clean = false;
            }
            if (!clean) continue;

            // Divisibility chain: fold an offending row into row t and retry.
            bool divisible = true;
            for (std::size_t i = t + 1; i < a.rows() && divisible; ++i)
                for (std::size_t j = t + 1; j < a.cols(); ++j) {
                    if (a(i, j) % a(t, t) != 0) {
                        add_row_multiple(a, t, i, Integer(1));
                        add_row_multiple(u, t, i, Integer(1));
                        divisible = false;
                        break;
                    }
                }
            if (divisible) break;
        }
        if (exhausted) break;
        if (a(t, t) < 0) {
            for (std::size_t j = 0; j < a.cols(); ++j) a(t, j) = -a(t, j);
            for (std::size_t j = 0; j < u.cols(); ++j) u(t, j) = -u(t, j);
        }
    }
    return {std::move(u), std::move(a), std::move(v)};
}

std::vector<Integer> elementary_divisors(const IntegerMatrix& m) {
    const SmithForm s = smith_normal_form(m);
    std::vector<Integer> out;
    for (std::size_t t = 0; t < std::min(m.rows(), m.cols()); ++t)
        if (s.d(t, t) != 0) out.push_back(s.d(t, t));
    return out;
}

IntegerMatrix hermite_normal_form(const IntegerMatrix& m) {
    IntegerMatrix a = m;
    std::size_t row = 0;
    for (std::size_t col = 0; col < a.cols() && row < a.rows(); ++col) {
        for (;;) {
            std::size_t best = a.rows();
            for (std::size_t i = row; i < a.rows(); ++i) {
                if (a(i, col) == 0) continue;
                if (best == a.rows() || abs(a(i, col)) < abs(a(best, col))) best = i;
            }
            if (best == a.rows()) break;
            a.swap_rows(row, best);
            bool clean = true;
            for (std::size_t i = row + 1; i < a.rows(); ++i) {
                if (a(i, col) == 0) continue;
                add_row_multiple(a, i, row, -tdiv(a(i, col), a(row, col)));
                if (a(i, col) != 0) clean = false;
            }
            if (clean) break;
        }
        if (a(row, col) == 0) continue;
        if (a(row, col) < 0)
            for (std::size_t j = 0; j < a.cols(); ++j) a(row, j) = -a(row, j);
        for (std::size_t i = 0; i < row; ++i) add_row_multiple(a, i, row, -fdiv(a(i, col), a(row, col)));
        ++row;
    }
    IntegerMatrix out(row, a.cols());
    for (std::size_t i = 0; i < row; ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = a(i, j);
    return out;
}

Integer determinant(const IntegerMatrix& m) {
    if (m.rows() != m.cols()) throw std::invalid_argument("determinant of a non-square matrix");
    const std::size_t n = m.rows();
    if (n == 0) return Integer(1);
    IntegerMatrix a = m;
    Integer sign = 1;
    Integer prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a(k, k) == 0) {
            std::size_t swap_with = k + 1;
            while (swap_with < n && a(swap_with, k) == 0) ++swap_with;
            if (swap_with == n) return Integer(0);
            a.swap_rows(k, swap_with);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) {
                Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a(i, j) = std::move(t);
            }
        prev = a(k, k);
    }
    return sign * a(n - 1, n - 1);
}

IntegerMatrix left_null_space(const IntegerMatrix& m) {
    // Null space of m^T: one vector per free column of rref(m^T).
    const RrefResult r = rref(to_rational(m.transposed()));
    const std::size_t n = m.rows();
    std::vector<bool> is_pivot(n, false);
    for (std::size_t c : r.pivot_cols) is_pivot[c] = true;

    IntegerMatrix out(n - r.rank, n);
    std::size_t out_row = 0;
    for (std::size_t free = 0; free < n; ++free) {
        if (is_pivot[free]) continue;
        std::vector<Rational> vec(n, Rational(0));
        vec[free] = 1;
        for (std::size_t k = 0; k < r.rank; ++k) vec[r.pivot_cols[k]] = -r.reduced(k, free);
        Integer den = 1;
        for (const auto& x : vec) den = lcm(den, x.get_den());
        Integer content = 0;
        for (std::size_t j = 0; j < n; ++j) {
            Rational scaled = vec[j] * den;
            out(out_row, j) = scaled.get_num();
            content = gcd(content, out(out_row, j));
        }
        if (content > 1)
            for (std::size_t j = 0; j < n; ++j) mpz_divexact(out(out_row, j).get_mpz_t(), out(out_row, j).get_mpz_t(), content.get_mpz_t());
        ++out_row;
    }
    return out;
}

IntegerMatrix integer_kernel(const IntegerMatrix& c) {
    const std::size_t n = c.cols();
    if (c.rows() == 0) return IntegerMatrix::identity(n);
    const SmithForm s = smith_normal_form(c);
    std::size_t r = 0;
    while (r < std::min(c.rows(), n) && s.d(r, r) != 0) ++r;
    IntegerMatrix out(n, n - r);
    for (std::size_t k = r; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i) out(i, k - r) = s.v(i, k);
    return out;
}

LatticeBasis saturated_lattice_basis(const IntegerMatrix& forms) {
    LatticeBasis lb;
    lb.ambient_dim = forms.rows();
    lb.basis = integer_kernel(left_null_space(forms));
    lb.rank = lb.basis.cols();
    return lb;
}

bool is_saturated(const IntegerMatrix& basis) {
    const auto divisors = elementary_divisors(basis);
    if (divisors.size() != basis.cols()) return false;
    return std::all_of(divisors.begin(), divisors.end(), [](const Integer& x) { return x == 1; });
}

namespace {

// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic order;
// stops early when visit returns false.
bool for_each_combination(std::size_t n, std::size_t k, const std::function<bool(const std::vector<std::size_t>&)>& visit) {
    if (k > n) return true;
    std::vector<std::size_t> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
        if (!visit(idx)) return false;
        std::size_t pos = k;
        while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
        if (pos == 0) return true;
        ++idx[pos - 1];
        for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

bool is_totally_unimodular(const IntegerMatrix& m, bool force) {
    if (!force && (m.rows() > kTotallyUnimodularMaxDim || m.cols() > kTotallyUnimodularMaxDim))
        throw GuardExceeded("total unimodularity check limited to " + std::to_string(kTotallyUnimodularMaxDim) + "x" +
                            std::to_string(kTotallyUnimodularMaxDim) + " matrices (use force to override)");
    const std::size_t top = std::min(m.rows(), m.cols());
    for (std::size_t k = 1; k <= top; ++k) {
        bool ok = for_each_combination(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
            return for_each_combination(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
                const Integer det = determinant(m.select(rows, cols));
                return det >= -1 && det <= 1;
            });
        });
        if (!ok) return false;
    }
    return true;
}

std::vector<Integer> nonzero_maximal_minors(const IntegerMatrix& m) {
    const std::size_t r = rank(m);
    std::vector<Integer> out;
    if (r == 0) return out;
    for_each_combination(m.rows(), r, [&](const std::vector<std::size_t>& rows) {
        return for_each_combination(m.cols(), r, [&](const std::vector<std::size_t>& cols) {
            Integer det = determinant(m.select(rows, cols));
            if (det != 0) out.push_back(abs(det));
            return true;
        });
    });
    return out;
}

}  // namespace arrecip
