#include "arrecip/ehrhart.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

namespace arrecip {

namespace detail {

// a·u <= c·m over the lattice coordinates u.
struct Constraint {
    std::vector<std::int64_t> a;
    std::int64_t c = 0;
};

struct CountingPlan {
    std::size_t rank = 0;
    // levels[k] bounds u_k given u_0..u_{k-1}; only entries with a[k] != 0.
    std::vector<std::vector<Constraint>> levels;
    // The original 2n constraints ±B_i·u <= m.
    std::vector<Constraint> original;
    // Rows c with c·b = 0 exactly when b lies in W_F.
    std::vector<std::vector<std::int64_t>> certificate;
};

}  // namespace detail

namespace {

using detail::Constraint;
using detail::CountingPlan;
using i128 = __int128;

std::int64_t checked_narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN) throw std::overflow_error("coefficient overflow in Fourier-Motzkin elimination");
    return static_cast<std::int64_t>(v);
}

std::int64_t abs64(std::int64_t v) { return v < 0 ? -v : v; }

i128 floor_div(i128 num, i128 den) {
    i128 q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

i128 ceil_div(i128 num, i128 den) { return -floor_div(-num, den); }

std::int64_t floor_div64(std::int64_t num, std::int64_t den) {
    std::int64_t q = num / den;
    if ((num % den != 0) && ((num < 0) != (den < 0))) --q;
    return q;
}

std::int64_t ceil_div64(std::int64_t num, std::int64_t den) { return -floor_div64(-num, den); }

// Keeps, for each primitive direction, only the tightest bound c/g.
void insert_tightest(std::map<std::vector<std::int64_t>, Constraint>& pool, Constraint con) {
    std::int64_t g = 0;
    for (auto v : con.a) g = std::gcd(g, abs64(v));
    if (g == 0) return;  // 0 <= c*m with c >= 0: always true
    std::vector<std::int64_t> dir(con.a.size());
    for (std::size_t i = 0; i < dir.size(); ++i) dir[i] = con.a[i] / g;
    const std::int64_t cg = std::gcd(g, abs64(con.c));
    if (cg > 1) {
        for (auto& v : con.a) v /= cg;
        con.c /= cg;
        g /= cg;
    }
    auto it = pool.find(dir);
    if (it == pool.end()) {
        pool.emplace(std::move(dir), std::move(con));
        return;
    }
    // Compare c/g against the stored ratio.
    std::int64_t g_old = 0;
    for (auto v : it->second.a) g_old = std::gcd(g_old, abs64(v));
    if (static_cast<i128>(con.c) * g_old < static_cast<i128>(it->second.c) * g) it->second = std::move(con);
}

std::vector<Constraint> eliminate_last(const std::vector<Constraint>& cons, std::size_t var) {
    std::vector<const Constraint*> pos, neg;
    std::map<std::vector<std::int64_t>, Constraint> pool;
    for (const auto& con : cons) {
        if (con.a[var] > 0) pos.push_back(&con);
        else if (con.a[var] < 0) neg.push_back(&con);
        else insert_tightest(pool, con);
    }
    for (const Constraint* p : pos)
        for (const Constraint* q : neg) {
            const std::int64_t alpha = p->a[var];
            const std::int64_t beta = -q->a[var];
            Constraint combined;
            combined.a.resize(var + 1);
            for (std::size_t i = 0; i <= var; ++i)
                combined.a[i] = checked_narrow(static_cast<i128>(beta) * p->a[i] + static_cast<i128>(alpha) * q->a[i]);
            combined.c = checked_narrow(static_cast<i128>(beta) * p->c + static_cast<i128>(alpha) * q->c);
            insert_tightest(pool, std::move(combined));
        }
    std::vector<Constraint> out;
    out.reserve(pool.size());
    for (auto& [dir, con] : pool) out.push_back(std::move(con));
    return out;
}

std::shared_ptr<const CountingPlan> build_plan(const LatticeBasis& lattice, const IntegerMatrix& forms) {
    auto plan = std::make_shared<CountingPlan>();
    const std::size_t r = lattice.rank;
    const std::size_t n = lattice.ambient_dim;
    plan->rank = r;
    for (std::size_t i = 0; i < n; ++i) {
        Constraint up, down;
        up.a.resize(r);
        down.a.resize(r);
        for (std::size_t k = 0; k < r; ++k) {
            up.a[k] = to_int64(lattice.basis(i, k));
            down.a[k] = -up.a[k];
        }
        up.c = down.c = 1;
        plan->original.push_back(up);
        plan->original.push_back(down);
    }
    plan->levels.resize(r);
    std::vector<Constraint> current = plan->original;
    for (std::size_t k = r; k-- > 0;) {
        for (const auto& con : current)
            if (con.a[k] != 0) {
                Constraint trimmed = con;
                trimmed.a.resize(k + 1);
                plan->levels[k].push_back(std::move(trimmed));
            }
        if (k > 0) {
            std::vector<Constraint> next = eliminate_last(current, k);
            for (auto& con : next) con.a.resize(k);
            current = std::move(next);
        }
    }
    const IntegerMatrix cert = left_null_space(forms);
    for (std::size_t i = 0; i < cert.rows(); ++i) {
        std::vector<std::int64_t> row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = to_int64(cert(i, j));
        plan->certificate.push_back(std::move(row));
    }
    return plan;
}

// Counts u ∈ Z^r satisfying the plan at dilation m. Intermediate levels use
// the projected closed bounds; the last level applies the original
// constraints, strictly when `strict` is set.
std::uint64_t count_dfs(const CountingPlan& plan, std::int64_t m, bool strict) {
    const std::size_t r = plan.rank;
    if (r == 0) return 1;
    std::vector<std::int64_t> u(r, 0);
    std::uint64_t total = 0;

    auto partial = [&](const Constraint& con, std::size_t k) {
        i128 rhs = static_cast<i128>(con.c) * m;
        for (std::size_t i = 0; i < k; ++i) rhs -= static_cast<i128>(con.a[i]) * u[i];
        return rhs;
    };

    std::function<void(std::size_t)> descend = [&](std::size_t k) {
        i128 lo = INT64_MIN, hi = INT64_MAX;
        const bool last = k + 1 == r;
        if (last && strict) {
            for (const auto& con : plan.original) {
                const i128 rhs = partial(con, k);
                const std::int64_t ak = con.a[k];
                if (ak > 0) hi = std::min(hi, ceil_div(rhs, ak) - 1);
                else if (ak < 0) lo = std::max(lo, floor_div(rhs, ak) + 1);
                else if (rhs <= 0) return;
            }
        } else {
            for (const auto& con : plan.levels[k]) {
                const i128 rhs = partial(con, k);
                const std::int64_t ak = con.a[k];
                if (ak > 0) hi = std::min(hi, floor_div(rhs, ak));
                else lo = std::max(lo, ceil_div(rhs, ak));
            }
        }
        if (lo > hi) return;
        if (last) {
            total += static_cast<std::uint64_t>(hi - lo + 1);
            return;
        }
        for (i128 v = lo; v <= hi; ++v) {
            u[k] = static_cast<std::int64_t>(v);
            descend(k + 1);
        }
    };
    descend(0);
    return total;
}

// Sup-norm histogram of the last lattice coordinate for every prefix of
// points in the dilation max_m. Along the last coordinate t the norm is the
// upper envelope of the lines c + b t, so each envelope segment adds an
// arithmetic progression of values.
class NormHistogram {
public:
    NormHistogram(std::int64_t max_m, const std::vector<std::int64_t>& steps)
        : max_m_(max_m), flat_(static_cast<std::size_t>(max_m) + 1, 0) {
        for (const auto step : steps) strided_.emplace_back(step, std::vector<std::int64_t>(flat_.size(), 0));
    }

    void add_constant(std::int64_t value, std::int64_t count) { flat_[static_cast<std::size_t>(value)] += count; }

    // Values start, start + step, ..., count terms, each with multiplicity weight.
    void add_progression(std::size_t stride, std::int64_t start, std::int64_t count, std::int64_t weight) {
        auto& [step, diff] = strided_[stride];
        diff[static_cast<std::size_t>(start)] += weight;
        const std::int64_t end = start + step * count;
        if (end <= max_m_) diff[static_cast<std::size_t>(end)] -= weight;
    }

    std::vector<std::uint64_t> cumulative() const {
        std::vector<std::int64_t> hist = flat_;
        for (const auto& [step, diff] : strided_) {
            std::vector<std::int64_t> run(diff);
            const auto st = static_cast<std::size_t>(step);
            for (std::size_t v = st; v < run.size(); ++v) run[v] += run[v - st];
            for (std::size_t v = 0; v < run.size(); ++v) hist[v] += run[v];
        }
        std::vector<std::uint64_t> out(hist.size());
        std::uint64_t total = 0;
        for (std::size_t v = 0; v < hist.size(); ++v) {
            total += static_cast<std::uint64_t>(hist[v]);
            out[v] = total;
        }
        return out;
    }

private:
    std::int64_t max_m_;
    std::vector<std::int64_t> flat_;
    std::vector<std::pair<std::int64_t, std::vector<std::int64_t>>> strided_;
};

// The original constraints grouped by their coefficient of the last
// coordinate; only the largest intercept of each group matters.
struct SlopeGroups {
    std::vector<std::int64_t> slopes;   // distinct nonzero, ascending
    std::vector<std::size_t> stride;    // index of |slope| in the histogram steps
    std::vector<std::int64_t> steps;    // distinct |slope|
    std::vector<int> group_of;          // per original constraint; -1 for slope 0
};

SlopeGroups group_slopes(const CountingPlan& plan) {
    SlopeGroups g;
    const std::size_t last = plan.rank - 1;
    for (const auto& con : plan.original)
        if (con.a[last] != 0) g.slopes.push_back(con.a[last]);
    std::sort(g.slopes.begin(), g.slopes.end());
    g.slopes.erase(std::unique(g.slopes.begin(), g.slopes.end()), g.slopes.end());
    for (const auto b : g.slopes) {
        const std::int64_t step = abs64(b);
        auto it = std::find(g.steps.begin(), g.steps.end(), step);
        if (it == g.steps.end()) it = g.steps.insert(g.steps.end(), step);
        g.stride.push_back(static_cast<std::size_t>(it - g.steps.begin()));
    }
    for (const auto& con : plan.original) {
        const auto it = std::find(g.slopes.begin(), g.slopes.end(), con.a[last]);
        g.group_of.push_back(con.a[last] == 0 ? -1 : static_cast<int>(it - g.slopes.begin()));
    }
    return g;
}

class FiberCounter {
public:
    FiberCounter(const CountingPlan& plan, std::int64_t max_m)
        : plan_(plan), groups_(group_slopes(plan)), max_m_(max_m), hist_(max_m, groups_.steps),
          best_(groups_.slopes.size()) {
        hull_.reserve(groups_.slopes.size());
    }

    // Adds the fiber over one prefix; `intercepts` holds a_j·u restricted to
    // the prefix coordinates for every original constraint j.
    void add(const std::vector<std::int64_t>& intercepts, std::int64_t weight) {
        std::int64_t floor_value = 0;
        std::fill(best_.begin(), best_.end(), INT64_MIN);
        for (std::size_t j = 0; j < intercepts.size(); ++j) {
            const int grp = groups_.group_of[j];
            if (grp < 0) floor_value = std::max(floor_value, intercepts[j]);
            else best_[static_cast<std::size_t>(grp)] = std::max(best_[static_cast<std::size_t>(grp)], intercepts[j]);
        }
        if (floor_value > max_m_) return;

        // Range of t with every line <= max_m.
        std::int64_t lo = INT64_MIN, hi = INT64_MAX;
        for (std::size_t k = 0; k < best_.size(); ++k) {
            const std::int64_t b = groups_.slopes[k];
            const std::int64_t rhs = max_m_ - best_[k];
            if (b > 0) hi = std::min(hi, floor_div64(rhs, b));
            else lo = std::max(lo, ceil_div64(rhs, b));
        }
        if (lo > hi) return;

        // Upper envelope, slopes ascending.
        hull_.clear();
        for (std::size_t k = 0; k < best_.size(); ++k) {
            while (hull_.size() >= 2 && redundant(hull_[hull_.size() - 2], hull_.back(), k)) hull_.pop_back();
            hull_.push_back(k);
        }
        std::int64_t t = lo;
        for (std::size_t h = 0; h < hull_.size() && t <= hi; ++h) {
            std::int64_t end = hi;
            if (h + 1 < hull_.size()) {
                const std::size_t a = hull_[h], b = hull_[h + 1];
                end = std::min(end, floor_div64(best_[a] - best_[b], groups_.slopes[b] - groups_.slopes[a]));
            }
            if (end < t) continue;
            segment(hull_[h], t, end, floor_value, weight);
            t = end + 1;
        }
    }

    std::vector<std::uint64_t> cumulative() const { return hist_.cumulative(); }

private:
    // Line j is never strictly above both i (smaller slope) and k (larger).
    bool redundant(std::size_t i, std::size_t j, std::size_t k) const {
        const i128 ci = best_[i], cj = best_[j], ck = best_[k];
        const i128 bi = groups_.slopes[i], bj = groups_.slopes[j], bk = groups_.slopes[k];
        return (ci - ck) * (bj - bi) <= (ci - cj) * (bk - bi);
    }

    void segment(std::size_t k, std::int64_t t, std::int64_t end, std::int64_t floor_value, std::int64_t weight) {
        const std::int64_t c = best_[k];
        const std::int64_t b = groups_.slopes[k];
        const std::size_t stride = groups_.stride[k];
        if (b > 0) {
            const std::int64_t t0 = std::clamp(ceil_div64(floor_value - c, b), t, end + 1);
            if (t0 > t) hist_.add_constant(floor_value, (t0 - t) * weight);
            if (end >= t0) hist_.add_progression(stride, c + b * t0, end - t0 + 1, weight);
        } else {
            const std::int64_t t1 = std::clamp(floor_div64(c - floor_value, -b), t - 1, end);
            if (t1 >= t) hist_.add_progression(stride, c + b * t1, t1 - t + 1, weight);
            if (end > t1) hist_.add_constant(floor_value, (end - t1) * weight);
        }
    }

    const CountingPlan& plan_;
    SlopeGroups groups_;
    std::int64_t max_m_;
    NormHistogram hist_;
    std::vector<std::int64_t> best_;
    std::vector<std::size_t> hull_;
};

std::vector<std::uint64_t> count_table(const CountingPlan& plan, std::int64_t max_m) {
    const std::size_t r = plan.rank;
    if (r == 0) return std::vector<std::uint64_t>(static_cast<std::size_t>(max_m) + 1, 1);
    FiberCounter fibers(plan, max_m);
    const std::size_t n = plan.original.size();
    std::vector<std::int64_t> intercepts(n, 0);
    if (r == 1) {
        fibers.add(intercepts, 1);
        return fibers.cumulative();
    }

    // Prefixes u_0..u_{r-2}. The polytope is centrally symmetric, so only
    // prefixes whose first nonzero coordinate is positive are visited, with
    // weight 2; the zero prefix has weight 1.
    std::vector<std::int64_t> u(r - 1, 0);
    std::function<void(std::size_t, bool)> descend = [&](std::size_t k, bool on_axis) {
        i128 lo = INT64_MIN, hi = INT64_MAX;
        for (const auto& con : plan.levels[k]) {
            i128 rhs = static_cast<i128>(con.c) * max_m;
            for (std::size_t i = 0; i < k; ++i) rhs -= static_cast<i128>(con.a[i]) * u[i];
            if (con.a[k] > 0) hi = std::min(hi, floor_div(rhs, con.a[k]));
            else lo = std::max(lo, ceil_div(rhs, con.a[k]));
        }
        if (on_axis) lo = std::max<i128>(lo, 0);
        if (lo > hi) return;
        if (k + 2 < r) {
            for (i128 v = lo; v <= hi; ++v) {
                u[k] = static_cast<std::int64_t>(v);
                descend(k + 1, on_axis && v == 0);
            }
            return;
        }
        // Last prefix coordinate: update intercepts incrementally.
        for (std::size_t j = 0; j < n; ++j) {
            i128 s = 0;
            for (std::size_t i = 0; i < k; ++i) s += static_cast<i128>(plan.original[j].a[i]) * u[i];
            s += static_cast<i128>(plan.original[j].a[k]) * lo;
            intercepts[j] = checked_narrow(s);
        }
        for (i128 v = lo; v <= hi; ++v) {
            fibers.add(intercepts, on_axis && v == 0 ? 1 : 2);
            for (std::size_t j = 0; j < n; ++j) intercepts[j] += plan.original[j].a[k];
        }
    };
    descend(0, true);
    return fibers.cumulative();
}

IntegerMatrix square_rows(const IntegerMatrix& basis, const std::vector<std::size_t>& rows) {
    const std::size_t r = basis.cols();
    IntegerMatrix out(r, r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t k = 0; k < r; ++k) out(i, k) = basis(rows[i], k);
    return out;
}

// lcm of the denominators, in lattice coordinates, of the vertices of
// {y : |B y|_inf <= 1}. Vertices come from r tight rows with signs.
Integer vertex_denominator_lcm(const LatticeBasis& lattice) {
    const std::size_t r = lattice.rank;
    const std::size_t n = lattice.ambient_dim;
    const IntegerMatrix& b = lattice.basis;
    Integer out = 1;
    if (r == 0) return out;
    std::vector<std::size_t> rows(r);
    std::iota(rows.begin(), rows.end(), 0);
    while (true) {
        const IntegerMatrix sq = square_rows(b, rows);
        const Integer det = determinant(sq);
        if (det != 0) {
            const Integer ad = abs(det);
            // adj(k, j) = det of sq with column k replaced by e_j
            std::vector<std::vector<Integer>> adj(r, std::vector<Integer>(r));
            for (std::size_t k = 0; k < r; ++k)
                for (std::size_t j = 0; j < r; ++j) {
                    IntegerMatrix t = sq;
                    for (std::size_t i = 0; i < r; ++i) t(i, k) = i == j ? 1 : 0;
                    adj[k][j] = determinant(t);
                }
            std::vector<Integer> num(r);
            for (std::uint64_t signs = 0; signs < (std::uint64_t{1} << r); ++signs) {
                for (std::size_t k = 0; k < r; ++k) {
                    num[k] = 0;
                    for (std::size_t j = 0; j < r; ++j) num[k] += (signs >> j & 1) ? -adj[k][j] : adj[k][j];
                }
                bool feasible = true;
                for (std::size_t i = 0; i < n && feasible; ++i) {
                    Integer v = 0;
                    for (std::size_t k = 0; k < r; ++k) v += b(i, k) * num[k];
                    feasible = abs(v) <= ad;
                }
                if (!feasible) continue;
                for (std::size_t k = 0; k < r; ++k) out = lcm(out, Integer(ad / gcd(ad, num[k])));
            }
        }
        std::size_t i = r;
        while (i > 0 && rows[i - 1] == n - r + i - 1) --i;
        if (i == 0) break;
        ++rows[i - 1];
        for (std::size_t j = i; j < r; ++j) rows[j] = rows[j - 1] + 1;
    }
    return out;
}

Integer from_u64(std::uint64_t v) {
    Integer out;
    mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
    return out;
}

}  // namespace

std::string lattice_key(const LatticeBasis& lattice) {
    std::ostringstream os;
    os << lattice.ambient_dim << ':' << lattice.rank << ':' << hermite_normal_form(lattice.basis.transposed());
    return os.str();
}

LatticeIdentity lattice_identity(const IntegerMatrix& forms) {
    const LatticeBasis lattice = saturated_lattice_basis(forms);
    return {lattice.rank, lattice_key(lattice)};
}

SubsetGeometry::SubsetGeometry(IntegerMatrix forms) : forms_(std::move(forms)) {
    lattice_ = saturated_lattice_basis(forms_);
    period_cap_ = 1;
    for (const auto& minor : nonzero_maximal_minors(forms_)) period_cap_ = lcm(period_cap_, minor);
    lattice_key_ = arrecip::lattice_key(lattice_);
    plan_ = build_plan(lattice_, forms_);
}

Integer vertex_denominator(const SubsetGeometry& g) {
    Integer out = vertex_denominator_lcm(g.lattice());
    if (g.period_cap() % out != 0) throw std::logic_error("vertex denominators do not divide the minor bound");
    return out;
}

Integer count_points(const SubsetGeometry& g, std::int64_t m) {
    if (m < 0) throw std::invalid_argument("count_points: m must be nonnegative");
    return from_u64(count_dfs(g.plan(), m, false));
}

Integer count_interior_points(const SubsetGeometry& g, std::int64_t m) {
    if (m < 1) throw std::invalid_argument("count_interior_points: m must be positive");
    return from_u64(count_dfs(g.plan(), m, true));
}

Integer count_points_bruteforce(const SubsetGeometry& g, std::int64_t m, std::uint64_t budget) {
    if (m < 0) throw std::invalid_argument("count_points_bruteforce: m must be nonnegative");
    const std::size_t n = g.ambient_dim();
    const auto side = static_cast<std::uint64_t>(2 * m + 1);
    std::uint64_t volume = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (volume > budget / side) throw GuardExceeded("brute-force cube exceeds enumeration budget");
        volume *= side;
    }
    if (volume > budget) throw GuardExceeded("brute-force cube exceeds enumeration budget");
    if (n == 0) return Integer(1);

    const auto& cert = g.plan().certificate;
    const std::size_t k = cert.size();
    std::vector<std::int64_t> b(n, -m);
    std::vector<i128> s(k, 0);
    for (std::size_t row = 0; row < k; ++row)
        for (std::size_t j = 0; j < n; ++j) s[row] += static_cast<i128>(cert[row][j]) * b[j];

    std::uint64_t hits = 0;
    for (;;) {
        bool zero = true;
        for (std::size_t row = 0; row < k && zero; ++row) zero = s[row] == 0;
        if (zero) ++hits;
        std::size_t j = 0;
        while (j < n && b[j] == m) {
            b[j] = -m;
            for (std::size_t row = 0; row < k; ++row) s[row] -= static_cast<i128>(2 * m) * cert[row][j];
            ++j;
        }
        if (j == n) break;
        ++b[j];
        for (std::size_t row = 0; row < k; ++row) s[row] += cert[row][j];
    }
    return from_u64(hits);
}

std::vector<std::uint64_t> count_points_table(const SubsetGeometry& g, std::int64_t max_m) {
    if (max_m < 0) throw std::invalid_argument("count_points_table: max_m must be nonnegative");
    return count_table(g.plan(), max_m);
}

QuasiPolynomial ehrhart_quasipoly(const SubsetGeometry& g, bool force) {
    const auto deg = static_cast<int>(g.rank());
    const Integer bound = vertex_denominator(g);
    if (!bound.fits_ulong_p()) throw GuardExceeded("Ehrhart period bound " + to_string(bound) + " too large");
    const std::uint64_t cap = bound.get_ui();
    const std::int64_t per_residue = deg + 3;
    // The bound is a proven period, so it needs deg+1 samples per residue;
    // a proper divisor d <= cap/2 needs (deg+3)d, which is no more.
    const std::uint64_t full = static_cast<std::uint64_t>(deg + 1) * cap;

    auto work = [&](std::uint64_t max_m) {
        long double w = 1;
        for (int k = 1; k < std::max(deg, 2); ++k) w *= static_cast<long double>(max_m) + 1;
        return w;
    };
    // Small candidates share one small table; past that the table for the
    // full bound is built once.
    std::vector<std::uint64_t> table;
    auto ensure = [&](std::int64_t m) {
        if (m < static_cast<std::int64_t>(table.size())) return;
        const std::uint64_t small = static_cast<std::uint64_t>(per_residue) * kEhrhartSmallPeriod;
        const std::uint64_t want = static_cast<std::uint64_t>(m) + 1;
        if (want > full) throw std::logic_error("Ehrhart fitting sampled past the period bound");
        const std::uint64_t size = want <= small ? std::min(full, small) : full;
        if (!force && (work(size) > static_cast<long double>(kEhrhartWorkBudget) || size > kEhrhartMaxTable))
            throw GuardExceeded("Ehrhart fitting needs point counts up to m = " + std::to_string(size - 1) +
                                " (period bound " + std::to_string(cap) + ")");
        table = count_points_table(g, static_cast<std::int64_t>(size) - 1);
    };
    const auto oracle = [&](std::int64_t m) {
        ensure(m);
        return Rational(Integer(static_cast<unsigned long>(table[static_cast<std::size_t>(m)])));
    };
    std::vector<std::size_t> candidates;
    for (const auto d : divisors(cap)) candidates.push_back(static_cast<std::size_t>(d));
    QuasiPolynomial f = minimal_period_fit(oracle, deg, std::move(candidates), ensure, true);
    if (f.degree() != deg) throw std::logic_error("Ehrhart quasi-polynomial degree differs from the subset rank");
    return f;
}

Rational normalized_volume(const QuasiPolynomial& ehrhart, std::size_t rank) {
    const auto lead = ehrhart.leading_coefficients(static_cast<int>(rank));
    for (const auto& c : lead)
        if (c != lead.front()) throw std::logic_error("leading Ehrhart coefficient varies across residues");
    return lead.front();
}

Rational normalized_volume(const SubsetGeometry& g) { return normalized_volume(ehrhart_quasipoly(g), g.rank()); }

bool verify_ehrhart_reciprocity(const SubsetGeometry& g, const QuasiPolynomial& f, std::int64_t window) {
    if (window < 1) throw std::invalid_argument("verify_ehrhart_reciprocity: window must be positive");
    const Rational sign = g.rank() % 2 == 0 ? 1 : -1;
    const QuasiPolynomial lhs = precompose_affine(f, -1, Integer(0));
    const QuasiPolynomial rhs = scale(precompose_affine(f, 1, Integer(-1)), sign);
    if (!equals(lhs, rhs)) return false;
    for (std::int64_t m = 1; m <= window; ++m) {
        if (f.evaluate(m) != Rational(count_points(g, m))) return false;
        if (f.evaluate(-m) != sign * Rational(count_interior_points(g, m))) return false;
    }
    return true;
}

bool verify_ehrhart_reciprocity(const SubsetGeometry& g, std::int64_t window) {
    return verify_ehrhart_reciprocity(g, ehrhart_quasipoly(g), window);
}

}  // namespace arrecip
