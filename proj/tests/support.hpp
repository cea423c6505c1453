#pragma once
// Small independent references used by the tests. They work on machine
// integers and share no code with the library.

#include <arrecip/charpoly.hpp>
#include <arrecip/quasipoly.hpp>

#include <cstdint>
#include <cstdlib>
#include <functional>
#include <vector>

namespace testing {

using Rows = std::vector<std::vector<long>>;

// Rank by fraction-free elimination on 128-bit integers; fine for the tiny
// entries used here.
inline int rank_of(Rows a) {
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::vector<std::vector<__int128>> m(rows, std::vector<__int128>(cols));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) m[i][j] = a[i][j];
    int r = 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
        std::size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const __int128 f = m[i][c], g = m[r][c];
            for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] * g - m[r][j] * f;
            __int128 content = 0;
            for (std::size_t j = c; j < cols; ++j) {
                __int128 v = m[i][j] < 0 ? -m[i][j] : m[i][j];
                while (v) { __int128 t = content % v; content = v; v = t; }
            }
            if (content > 1)
                for (std::size_t j = c; j < cols; ++j) m[i][j] /= content;
        }
        ++r;
    }
    return r;
}

inline Rows rows_of(const arrecip::IntegerMatrix& m) {
    Rows out(m.rows(), std::vector<long>(m.cols()));
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) out[i][j] = m(i, j).get_si();
    return out;
}

// #{b in [-m,m]^n : A x = b solvable over Q}, by rank comparison.
inline long slice_count(const Rows& forms, int m, bool open = false) {
    const std::size_t n = forms.size();
    const int base = rank_of(forms);
    const int lo = open ? -m + 1 : -m, hi = open ? m - 1 : m;
    if (lo > hi) return 0;
    std::vector<long> b(n, lo);
    long count = 0;
    while (true) {
        Rows aug = forms;
        for (std::size_t i = 0; i < n; ++i) aug[i].push_back(b[i]);
        if (rank_of(aug) == base) ++count;
        std::size_t k = 0;
        while (k < n && b[k] == hi) b[k++] = lo;
        if (k == n) break;
        ++b[k];
    }
    return count;
}

inline arrecip::QuasiPolynomial periodic(std::vector<arrecip::Polynomial> parts) {
    return arrecip::QuasiPolynomial(std::move(parts));
}

// Π_i (q - a_i m - b_i) evaluated at integer q, m.
inline long linear_product(const std::vector<std::pair<long, long>>& factors, long q, long m) {
    long out = 1;
    for (const auto& [a, b] : factors) out *= q - a * m - b;
    return out;
}

}  // namespace testing
