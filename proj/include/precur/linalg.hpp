#pragma once

#include "precur/rational.hpp"

#include <optional>
#include <stdexcept>
#include <vector>

namespace precur {

/// Solves the square system A*x = b exactly over Q by Gaussian elimination.
/// Returns nullopt when A is singular.
inline std::optional<std::vector<Rational>> solve_linear_system(
    std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    const size_t n = a.size();
    for (auto& row : a)
        if (row.size() != n) throw std::invalid_argument("solve_linear_system: not square");
    for (size_t col = 0; col < n; ++col) {
        size_t piv = col;
        while (piv < n && a[piv][col] == 0) ++piv;
        if (piv == n) return std::nullopt;
        std::swap(a[piv], a[col]);
        std::swap(b[piv], b[col]);
        for (size_t r = col + 1; r < n; ++r) {
            if (a[r][col] == 0) continue;
            Rational f = a[r][col] / a[col][col];
            for (size_t c = col; c < n; ++c) a[r][c] -= f * a[col][c];
            b[r] -= f * b[col];
        }
    }
    std::vector<Rational> x(n, Rational(0));
    for (size_t i = n; i-- > 0;) {
        Rational acc = b[i];
        for (size_t c = i + 1; c < n; ++c) acc -= a[i][c] * x[c];
        x[i] = acc / a[i][i];
    }
    return x;
}

/// One nonzero kernel vector of the (possibly rectangular) integer matrix A,
/// found by fraction-free (Bareiss) forward elimination followed by rational
/// back-substitution; the result is cleared to coprime integers.
/// Returns nullopt when the kernel is trivial.
inline std::optional<std::vector<Int>> integer_kernel_vector(std::vector<std::vector<Int>> a) {
    if (a.empty()) return std::nullopt;
    const size_t rows = a.size(), cols = a[0].size();
    std::vector<size_t> pivot_col;      // pivot column of echelon row i
    Int prev_pivot = 1;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t piv = r;
        while (piv < rows && a[piv][c] == 0) ++piv;
        if (piv == rows) continue;
        std::swap(a[piv], a[r]);
        for (size_t i = r + 1; i < rows; ++i) {
            for (size_t j = c + 1; j < cols; ++j)
                a[i][j] = (a[i][j] * a[r][c] - a[r][j] * a[i][c]) / prev_pivot;
            a[i][c] = 0;
        }
        prev_pivot = a[r][c];
        pivot_col.push_back(c);
        ++r;
    }
    if (pivot_col.size() == cols) return std::nullopt;
    // first free column
    size_t free_col = 0;
    {
        std::vector<bool> is_pivot(cols, false);
        for (size_t c : pivot_col) is_pivot[c] = true;
        while (free_col < cols && is_pivot[free_col]) ++free_col;
    }
    std::vector<Rational> x(cols, Rational(0));
    x[free_col] = 1;
    for (size_t i = pivot_col.size(); i-- > 0;) {
        size_t c = pivot_col[i];
        Rational acc(0);
        for (size_t j = c + 1; j < cols; ++j)
            if (x[j] != 0) acc -= Rational(a[i][j]) * x[j];
        x[c] = acc / Rational(a[i][c]);
    }
    Int lcm = 1;
    for (const auto& v : x) lcm = boost::multiprecision::lcm(lcm, denom(v));
    std::vector<Int> out(cols);
    Int g = 0;
    for (size_t j = 0; j < cols; ++j) {
        out[j] = numer(x[j]) * (lcm / denom(x[j]));
        g = boost::multiprecision::gcd(g, out[j]);
    }
    if (g > 1)
        for (auto& v : out) v /= g;
    return out;
}

} // namespace precur
