#pragma once

#include "arthur/rational.hpp"

#include <optional>
#include <vector>

namespace arthur::detail {

using RationalMatrix = std::vector<std::vector<Rational>>; // row-major

/// Solves A x = b exactly. Returns nullopt when the system is inconsistent
/// or the columns of A are dependent (the solution would not be unique).
inline std::optional<std::vector<Rational>> solve_unique(RationalMatrix a, std::vector<Rational> b)
{
    const auto rows = a.size();
    const auto cols = rows == 0 ? 0 : a.front().size();
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            return std::nullopt;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            auto factor = a[i][c] / a[r][c];
            for (std::size_t k = c; k < cols; ++k)
                a[i][k] -= factor * a[r][k];
            b[i] -= factor * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    if (r < cols)
        return std::nullopt;
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0)
            return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < r; ++i)
        x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return x;
}

/// Some solution of A x = b (free variables set to zero), or nullopt when
/// the system is inconsistent.
inline std::optional<std::vector<Rational>> solve_particular(RationalMatrix a, std::vector<Rational> b)
{
    const auto rows = a.size();
    const auto cols = rows == 0 ? 0 : a.front().size();
    std::size_t r = 0;
    std::vector<std::size_t> pivot_col;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        std::swap(b[p], b[r]);
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r || a[i][c] == 0)
                continue;
            auto factor = a[i][c] / a[r][c];
            for (std::size_t k = c; k < cols; ++k)
                a[i][k] -= factor * a[r][k];
            b[i] -= factor * b[r];
        }
        pivot_col.push_back(c);
        ++r;
    }
    for (std::size_t i = r; i < rows; ++i)
        if (b[i] != 0)
            return std::nullopt;
    std::vector<Rational> x(cols);
    for (std::size_t i = 0; i < r; ++i)
        x[pivot_col[i]] = b[i] / a[i][pivot_col[i]];
    return x;
}

/// Rank of a set of integer vectors given as rows.
inline std::size_t rank_of(RationalMatrix a)
{
    const auto rows = a.size();
    const auto cols = rows == 0 ? 0 : a.front().size();
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[r]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            if (a[i][c] == 0)
                continue;
            auto factor = a[i][c] / a[r][c];
            for (std::size_t k = c; k < cols; ++k)
                a[i][k] -= factor * a[r][k];
        }
        ++r;
    }
    return r;
}

} // namespace arthur::detail
