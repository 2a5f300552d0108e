#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <set>
#include <string>
#include <vector>

#include "errors.hpp"
#include "nmatrix.hpp"
#include "partition.hpp"
#include "plane_partition.hpp"
#include "word.hpp"

namespace ppmat {

/// Phi: PP(inf, n, m) -> n x m N-matrices, d_{il} = |{ j : pi_{ij} = l > pi_{i+1,j} }|.
inline NMatrix phi(const PlanePartition& pp, int n, int m) {
    detail::require(n >= 1 && m >= 1, "phi needs n, m >= 1");
    detail::require_domain(pp.num_rows() <= n && pp.max_entry() <= m, "out of domain PP(inf,n,m)");
    NMatrix d(n, m);
    for (const Cell& c : descent_set(pp)) {
        const int l = pp.at(c);
        d.set(c.i, l, d.at(c.i, l) + 1);
    }
    return d;
}

namespace detail {

inline int column_length(const PlanePartition::Rows& rows, int j) {
    int len = 0;
    while (len < static_cast<int>(rows.size()) && static_cast<int>(rows[static_cast<std::size_t>(len)].size()) >= j)
        ++len;
    return len;
}

/// In-place "add value in row i": fill the leftmost column shorter than i
/// down to depth i with `value`.
inline void insert_in_row(PlanePartition::Rows& rows, int value, int i) {
    require(value >= 1 && i >= 1, "insertion needs a positive value and row");
    const int width = rows.empty() ? 0 : static_cast<int>(rows.front().size());
    int j = 1;
    while (j <= width && column_length(rows, j) >= i) ++j;
    const int len = j <= width ? column_length(rows, j) : 0;

    auto entry = [&](int r, int c) { return rows[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c - 1)]; };
    if (len >= 1 && entry(len, j) < value) throw DomainError("invalid insertion");
    if (j > 1)
        for (int r = len + 1; r <= i; ++r)
            if (entry(r, j - 1) < value) throw DomainError("invalid insertion");

    if (static_cast<int>(rows.size()) < i) rows.resize(static_cast<std::size_t>(i));
    for (int r = len + 1; r <= i; ++r) rows[static_cast<std::size_t>(r - 1)].push_back(value);
}

}  // namespace detail

/// Adds `value` in row i of pp: the leftmost column of length < i is
/// extended with copies of `value` until it has length i. Throws
/// DomainError("invalid insertion") if the result would not be a plane
/// partition.
inline PlanePartition add_entry_in_row(const PlanePartition& pp, int value, int i) {
    auto rows = pp.rows();
    detail::insert_in_row(rows, value, i);
    return PlanePartition(std::move(rows));
}

/// Phi^{-1}: columns l = m..1, rows i = n..1, d_{il} single insertions each.
inline PlanePartition phi_inverse(const NMatrix& d) {
    PlanePartition::Rows rows;
    for (int l = d.cols(); l >= 1; --l)
        for (int i = d.rows(); i >= 1; --i)
            for (int rep = 0; rep < d.at(i, l); ++rep) detail::insert_in_row(rows, l, i);
    return PlanePartition(std::move(rows));
}

/// Maximum total weight of a down-right path (steps (i,j)->(i+1,j) or
/// (i,j)->(i,j+1)) from `start` to `end`, both inclusive.
inline std::int64_t max_downright_path_weight(const NMatrix& d, Cell start, Cell end) {
    detail::require(start.i >= 1 && start.j >= 1 && end.i <= d.rows() && end.j <= d.cols(),
                    "path endpoints outside the matrix");
    detail::require_domain(start.i <= end.i && start.j <= end.j, "empty path set");
    const int h = end.i - start.i + 1;
    const int w = end.j - start.j + 1;
    std::vector<std::int64_t> best(static_cast<std::size_t>(w), 0);
    for (int r = 0; r < h; ++r) {
        for (int c = 0; c < w; ++c) {
            std::int64_t from = std::numeric_limits<std::int64_t>::min();
            if (r == 0 && c == 0) from = 0;
            if (r > 0) from = std::max(from, best[static_cast<std::size_t>(c)]);
            if (c > 0) from = std::max(from, best[static_cast<std::size_t>(c - 1)]);
            best[static_cast<std::size_t>(c)] = from + d.at(start.i + r, start.j + c);
        }
    }
    return best.back();
}

/// D(w): the m x n 0/1 matrix with d_{w_i, i} = 1.
inline NMatrix word_to_matrix(const Word& w) {
    NMatrix d(w.alphabet_size(), w.length());
    for (int i = 1; i <= w.length(); ++i) d.set(w[i], i, 1);
    return d;
}

inline PlanePartition word_to_strict_tableau(const Word& w) { return phi_inverse(word_to_matrix(w)); }

/// Each of 1..n occurs in pp, and each value occupies exactly one column.
inline bool is_strict_tableau(const PlanePartition& pp, int n) {
    if (n < 0) return false;
    std::vector<int> column_of(static_cast<std::size_t>(n) + 1, 0);
    for (int i = 1; i <= pp.num_rows(); ++i) {
        for (int j = 1; j <= pp.row_length(i); ++j) {
            const int v = pp.at(i, j);
            if (v > n) return false;
            auto& col = column_of[static_cast<std::size_t>(v)];
            if (col != 0 && col != j) return false;
            col = j;
        }
    }
    for (int v = 1; v <= n; ++v)
        if (column_of[static_cast<std::size_t>(v)] == 0) return false;
    return true;
}

/// Inverse of word_to_strict_tableau: w_v is the deepest row holding v.
inline Word strict_tableau_to_word(const PlanePartition& pp, int m) {
    const int n = pp.max_entry();
    detail::require_domain(is_strict_tableau(pp, n) && pp.num_rows() <= m, "not a strict tableau");
    std::vector<int> letters(static_cast<std::size_t>(n), 0);
    for (int i = 1; i <= pp.num_rows(); ++i)
        for (int j = 1; j <= pp.row_length(i); ++j) letters[static_cast<std::size_t>(pp.at(i, j) - 1)] = i;
    return Word(std::move(letters), m);
}

/// L_i(w): longest weakly increasing subsequence of w that only uses the
/// letters m-i+1, ..., m.
inline int lis_tail(const Word& w, int i) {
    const int m = w.alphabet_size();
    detail::require(i >= 1 && i <= m, "lis_tail index must lie in [1, m]");
    const int low = m - i + 1;
    // best[a - low]: longest admissible subsequence seen so far ending in letter a
    std::vector<int> best(static_cast<std::size_t>(i), 0);
    for (int a : w.letters()) {
        if (a < low) continue;
        int prefix = 0;
        for (int b = low; b <= a; ++b) prefix = std::max(prefix, best[static_cast<std::size_t>(b - low)]);
        best[static_cast<std::size_t>(a - low)] = prefix + 1;
    }
    return best.empty() ? 0 : *std::max_element(best.begin(), best.end());
}

/// (L_m(w), ..., L_1(w)) with zeros dropped.
inline Partition greene_shape(const Word& w) {
    std::vector<int> parts;
    for (int i = w.alphabet_size(); i >= 1; --i) parts.push_back(lis_tail(w, i));
    return Partition(std::move(parts));
}

}  // namespace ppmat
