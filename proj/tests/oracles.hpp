#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's algorithms; only its value types (Rational, Root, RootDatum's
// Cartan matrix as input data) are reused.

#include "arthur/nilpotent.hpp"
#include "arthur/rational.hpp"
#include "arthur/root_datum.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <vector>

namespace oracle {

using arthur::Family;
using arthur::Rational;
using Mat = arthur::IntMatrix;
using RMat = std::vector<std::vector<Rational>>;

inline RMat to_rational(const Mat& m)
{
    RMat r(static_cast<std::size_t>(m.rows()), std::vector<Rational>(static_cast<std::size_t>(m.cols())));
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            r[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
    return r;
}

// Row echelon rank.
inline int rank(RMat a)
{
    int r = 0;
    const std::size_t rows = a.size(), cols = rows ? a[0].size() : 0;
    for (std::size_t c = 0; c < cols && static_cast<std::size_t>(r) < rows; ++c) {
        std::size_t p = static_cast<std::size_t>(r);
        while (p < rows && a[p][c] == 0)
            ++p;
        if (p == rows)
            continue;
        std::swap(a[p], a[static_cast<std::size_t>(r)]);
        const auto& piv = a[static_cast<std::size_t>(r)];
        for (std::size_t i = static_cast<std::size_t>(r) + 1; i < rows; ++i) {
            if (a[i][c] == 0)
                continue;
            Rational f = a[i][c] / piv[c];
            for (std::size_t k = c; k < cols; ++k)
                a[i][k] -= f * piv[k];
        }
        ++r;
    }
    return r;
}

inline std::vector<std::int64_t> diagonal(const Mat& m)
{
    std::vector<std::int64_t> d;
    for (Eigen::Index i = 0; i < m.rows(); ++i)
        d.push_back(m(i, i));
    return d;
}

inline Mat bracket(const Mat& x, const Mat& y) { return x * y - y * x; }

// Jordan type of a nilpotent matrix from the ranks of its powers: the number
// of blocks of size >= k is rank(e^{k-1}) - rank(e^k).
inline std::vector<int> jordan_type(const Mat& e)
{
    const auto n = static_cast<int>(e.rows());
    std::vector<int> ranks{n};
    Mat pw = Mat::Identity(n, n);
    for (int k = 1; k <= n; ++k) {
        pw = pw * e;
        ranks.push_back(rank(to_rational(pw)));
    }
    std::vector<int> at_least; // at_least[k-1] = #blocks of size >= k
    for (int k = 1; k <= n; ++k)
        at_least.push_back(ranks[static_cast<std::size_t>(k - 1)] - ranks[static_cast<std::size_t>(k)]);
    std::vector<int> parts;
    for (int k = 1; k <= n; ++k) {
        int exact = at_least[static_cast<std::size_t>(k - 1)] - (k < n ? at_least[static_cast<std::size_t>(k)] : 0);
        for (int i = 0; i < exact; ++i)
            parts.push_back(k);
    }
    std::sort(parts.rbegin(), parts.rend());
    return parts;
}

inline int dimension(Family f, int rank)
{
    switch (f) {
    case Family::A: return rank + 1;
    case Family::B: return 2 * rank + 1;
    default: return 2 * rank;
    }
}

// Standard form in the defining representation: antidiagonal, with the
// second half negated in type C. Empty for type A.
inline Mat standard_form(Family f, int rank)
{
    if (f == Family::A)
        return {};
    const int n = dimension(f, rank);
    Mat j = Mat::Zero(n, n);
    for (int p = 0; p < n; ++p)
        j(p, n - 1 - p) = (f == Family::C && p >= rank) ? -1 : 1;
    return j;
}

// Simple roots as functionals on the diagonal (x_0, ..., x_{N-1}) of a Cartan
// element, in the position order e_0..e_{n-1} [, 0], -e_{n-1}..-e_0.
inline std::vector<int> diagram_of_diagonal(Family f, int rank, const std::vector<std::int64_t>& x)
{
    std::vector<int> out;
    for (int i = 0; i + 1 < rank; ++i)
        out.push_back(static_cast<int>(x[static_cast<std::size_t>(i)] - x[static_cast<std::size_t>(i + 1)]));
    const auto last = x[static_cast<std::size_t>(rank - 1)];
    switch (f) {
    case Family::A: out.push_back(static_cast<int>(last - x[static_cast<std::size_t>(rank)])); break;
    case Family::B: out.push_back(static_cast<int>(last)); break;
    case Family::C: out.push_back(static_cast<int>(2 * last)); break;
    case Family::D: out.push_back(static_cast<int>(x[static_cast<std::size_t>(rank - 2)] + last)); break;
    default: break;
    }
    return out;
}

// Multiset of weight-string values m-1, m-3, ..., 1-m over all parts.
inline std::vector<std::int64_t> weight_strings(const std::vector<int>& parts)
{
    std::vector<std::int64_t> w;
    for (int m : parts)
        for (int k = m - 1; k >= 1 - m; k -= 2)
            w.push_back(k);
    std::sort(w.rbegin(), w.rend());
    return w;
}

// Every partition of n (weakly decreasing).
inline void partitions(int n, int max_part, std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int k = std::min(n, max_part); k >= 1; --k) {
        cur.push_back(k);
        partitions(n - k, k, cur, out);
        cur.pop_back();
    }
}

inline std::vector<std::vector<int>> partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    partitions(n, n, cur, out);
    return out;
}

// Parity rule written out directly from the orbit classification.
inline bool classical_orbit_partition(Family f, int rank, const std::vector<int>& parts)
{
    int total = 0;
    for (int m : parts)
        total += m;
    if (total != dimension(f, rank))
        return false;
    if (f == Family::A)
        return true;
    const bool restrict_even = f != Family::C; // B, D: even parts; C: odd parts
    for (int m : parts) {
        if ((m % 2 == 0) != restrict_even)
            continue;
        if (std::count(parts.begin(), parts.end(), m) % 2 != 0)
            return false;
    }
    return true;
}

// Weyl orbit of an evaluation vector by breadth-first search, using the
// reflection formula v'_i = v_i - C(i,j) v_j written out here.
inline std::set<std::vector<Rational>> weyl_orbit(const arthur::RootDatum& d, const std::vector<Rational>& v)
{
    std::set<std::vector<Rational>> seen{v};
    std::vector<std::vector<Rational>> todo{v};
    while (!todo.empty()) {
        auto cur = todo.back();
        todo.pop_back();
        for (int j = 0; j < d.rank(); ++j) {
            auto next = cur;
            for (int i = 0; i < d.rank(); ++i)
                next[static_cast<std::size_t>(i)] -= Rational(d.cartan(i, j)) * cur[static_cast<std::size_t>(j)];
            if (seen.insert(next).second)
                todo.push_back(next);
        }
    }
    return seen;
}

} // namespace oracle
