#pragma once

#include <cstdlib>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "gtl/rational.hpp"

namespace gtl {

using IntMatrix = std::vector<std::vector<BigInt>>;

namespace detail {

inline BigInt lcm_big(const BigInt& a, const BigInt& b) {
    return a / boost::multiprecision::gcd(a, b) * b;
}

// Fraction-free forward elimination (Bareiss). Returns the rank and, for
// square input, leaves the determinant (up to the row-swap sign) in the
// last pivot.
inline std::pair<int, BigInt> bareiss(IntMatrix& m) {
    const std::size_t rows = m.size();
    const std::size_t cols = rows ? m[0].size() : 0;
    BigInt prev = 1;
    int sign = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        if (pivot != r) {
            std::swap(m[pivot], m[r]);
            sign = -sign;
        }
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
            m[i][c] = 0;
        }
        prev = m[r][c];
        ++r;
    }
    return {static_cast<int>(r), sign * prev};
}

}  // namespace detail

// Rank of a rational matrix; each row is scaled to integers first.
inline int exact_rank(const std::vector<std::vector<Rational>>& rows) {
    IntMatrix m;
    m.reserve(rows.size());
    for (const auto& row : rows) {
        BigInt den = 1;
        for (const auto& x : row) den = detail::lcm_big(den, x.denominator());
        std::vector<BigInt> irow;
        irow.reserve(row.size());
        for (const auto& x : row) irow.push_back(x.numerator() * (den / x.denominator()));
        m.push_back(std::move(irow));
    }
    return detail::bareiss(m).first;
}

inline BigInt integer_determinant(IntMatrix m) {
    const std::size_t n = m.size();
    for (const auto& row : m)
        if (row.size() != n) throw std::invalid_argument("integer_determinant: matrix is not square");
    if (n == 0) return 1;
    auto [rank, det] = detail::bareiss(m);
    return rank == static_cast<int>(n) ? det : BigInt(0);
}

// Solves m x = b exactly over Q; nullopt when m is singular.
inline std::optional<std::vector<Rational>> solve_exact(const std::vector<std::vector<Rational>>& m,
                                                        const std::vector<Rational>& b) {
    const std::size_t n = m.size();
    std::vector<std::vector<Rational>> a = m;
    for (std::size_t i = 0; i < n; ++i) {
        if (a[i].size() != n) throw std::invalid_argument("solve_exact: matrix is not square");
        a[i].push_back(b.at(i));
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c].is_zero()) ++p;
        if (p == n) return std::nullopt;
        std::swap(a[p], a[c]);
        for (std::size_t i = 0; i < n; ++i) {
            if (i == c || a[i][c].is_zero()) continue;
            const Rational f = a[i][c] / a[c][c];
            for (std::size_t j = c; j <= n; ++j) a[i][j] -= f * a[c][j];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = a[i][n] / a[i][i];
    return x;
}

}  // namespace gtl
