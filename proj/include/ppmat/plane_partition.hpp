#pragma once

#include <algorithm>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "partition.hpp"

namespace ppmat {

/// A plane partition, stored canonically: only positive entries, rows
/// weakly decreasing, columns weakly decreasing, row lengths forming a
/// partition. Absent cells read as 0. All indexing is 1-based.
class PlanePartition {
public:
    using Rows = std::vector<std::vector<int>>;

    PlanePartition() = default;

    /// Accepts any array with trailing zeros; the stored value is the
    /// zero-trimmed form. Throws InvalidArgument on negative entries or
    /// broken monotonicity.
    explicit PlanePartition(Rows rows) : rows_(std::move(rows)) {
        for (auto& row : rows_) {
            for (int v : row) detail::require(v >= 0, "plane partition entries must be nonnegative");
            for (std::size_t j = 1; j < row.size(); ++j)
                detail::require(row[j - 1] >= row[j], "plane partition rows must be weakly decreasing");
            while (!row.empty() && row.back() == 0) row.pop_back();
        }
        while (!rows_.empty() && rows_.back().empty()) rows_.pop_back();
        for (std::size_t i = 1; i < rows_.size(); ++i) {
            const auto& above = rows_[i - 1];
            const auto& row = rows_[i];
            detail::require(!row.empty() && row.size() <= above.size(),
                            "plane partition shape must be a partition");
            for (std::size_t j = 0; j < row.size(); ++j)
                detail::require(above[j] >= row[j], "plane partition columns must be weakly decreasing");
        }
    }

    PlanePartition(std::initializer_list<std::initializer_list<int>> rows)
        : PlanePartition(to_rows(rows)) {}

    const Rows& rows() const noexcept { return rows_; }
    bool empty() const noexcept { return rows_.empty(); }
    int num_rows() const noexcept { return static_cast<int>(rows_.size()); }

    int row_length(int i) const noexcept {
        return (i >= 1 && i <= num_rows()) ? static_cast<int>(rows_[static_cast<std::size_t>(i - 1)].size()) : 0;
    }

    /// Number of cells in column j.
    int column_length(int j) const noexcept {
        int len = 0;
        while (len < num_rows() && row_length(len + 1) >= j) ++len;
        return j >= 1 ? len : 0;
    }

    /// pi_{ij}; 0 outside the shape.
    int at(int i, int j) const noexcept {
        if (i < 1 || j < 1 || i > num_rows()) return 0;
        const auto& row = rows_[static_cast<std::size_t>(i - 1)];
        return j <= static_cast<int>(row.size()) ? row[static_cast<std::size_t>(j - 1)] : 0;
    }

    int at(Cell c) const noexcept { return at(c.i, c.j); }

    int max_entry() const noexcept { return empty() ? 0 : rows_[0][0]; }

    std::string to_string() const {
        std::string s = "[";
        for (std::size_t i = 0; i < rows_.size(); ++i) {
            if (i) s += ',';
            s += '[';
            for (std::size_t j = 0; j < rows_[i].size(); ++j) {
                if (j) s += ',';
                s += std::to_string(rows_[i][j]);
            }
            s += ']';
        }
        return s + "]";
    }

    friend auto operator<=>(const PlanePartition&, const PlanePartition&) = default;

private:
    static Rows to_rows(std::initializer_list<std::initializer_list<int>> rows) {
        Rows out;
        for (const auto& r : rows) out.emplace_back(r);
        return out;
    }

    Rows rows_;
};

// ---------------------------------------------------------------------------
// Statistics. All are pure functions of the value.
// ---------------------------------------------------------------------------

inline Partition shape(const PlanePartition& pp) {
    std::vector<int> lengths;
    lengths.reserve(pp.rows().size());
    for (const auto& row : pp.rows()) lengths.push_back(static_cast<int>(row.size()));
    return Partition(std::move(lengths));
}

inline std::int64_t volume(const PlanePartition& pp) {
    std::int64_t total = 0;
    for (const auto& row : pp.rows())
        for (int v : row) total += v;
    return total;
}

inline std::int64_t trace(const PlanePartition& pp) {
    std::int64_t total = 0;
    for (int i = 1; i <= pp.num_rows(); ++i) total += pp.at(i, i);
    return total;
}

inline bool is_descent(const PlanePartition& pp, int i, int j) {
    const int v = pp.at(i, j);
    return v > 0 && v > pp.at(i + 1, j);
}

/// Des(pi): cells strictly larger than the cell below, in row-major order.
inline std::vector<Cell> descent_set(const PlanePartition& pp) {
    std::vector<Cell> out;
    for (int i = 1; i <= pp.num_rows(); ++i)
        for (int j = 1; j <= pp.row_length(i); ++j)
            if (is_descent(pp, i, j)) out.push_back({i, j});
    return out;
}

inline std::int64_t des(const PlanePartition& pp) {
    return static_cast<std::int64_t>(descent_set(pp).size());
}

/// Key (i, l) -> sorted column indices j with pi_{ij} = l > pi_{i+1,j}.
/// Only nonempty level sets are present.
using DescentLevelSets = std::map<std::pair<int, int>, std::vector<int>>;

inline DescentLevelSets descent_level_sets(const PlanePartition& pp) {
    DescentLevelSets out;
    for (const Cell& c : descent_set(pp)) out[{c.i, pp.at(c)}].push_back(c.j);
    return out;
}

/// |pi|_uh: sum over descent cells of pi_{ij} + i - 1.
inline std::int64_t up_hook_volume(const PlanePartition& pp) {
    std::int64_t total = 0;
    for (const Cell& c : descent_set(pp)) total += pp.at(c) + c.i - 1;
    return total;
}

/// |pi|_c: sum of the entries sitting on descent cells.
inline std::int64_t corner_volume(const PlanePartition& pp) {
    std::int64_t total = 0;
    for (const Cell& c : descent_set(pp)) total += pp.at(c);
    return total;
}

/// c_v(pi) for v = 1..m: number of columns containing the value v.
inline std::vector<int> column_counts(const PlanePartition& pp, int m) {
    detail::require(m >= 1, "column_counts needs m >= 1");
    detail::require_domain(pp.max_entry() <= m, "value out of range");
    std::vector<int> counts(static_cast<std::size_t>(m), 0);
    const int width = pp.row_length(1);
    for (int j = 1; j <= width; ++j) {
        const int h = pp.column_length(j);
        for (int i = 1; i <= h; ++i)
            if (i == 1 || pp.at(i, j) != pp.at(i - 1, j)) ++counts[static_cast<std::size_t>(pp.at(i, j) - 1)];
    }
    return counts;
}

/// d_i(pi): number of descent cells in row i, one entry per row.
inline std::vector<int> row_descent_counts(const PlanePartition& pp) {
    std::vector<int> counts(static_cast<std::size_t>(pp.num_rows()), 0);
    for (const Cell& c : descent_set(pp)) ++counts[static_cast<std::size_t>(c.i - 1)];
    return counts;
}

/// Entrywise sum; absent cells read 0.
inline PlanePartition add(const PlanePartition& a, const PlanePartition& b) {
    const int rows = std::max(a.num_rows(), b.num_rows());
    PlanePartition::Rows out(static_cast<std::size_t>(rows));
    for (int i = 1; i <= rows; ++i) {
        const int len = std::max(a.row_length(i), b.row_length(i));
        auto& row = out[static_cast<std::size_t>(i - 1)];
        row.reserve(static_cast<std::size_t>(len));
        for (int j = 1; j <= len; ++j) row.push_back(a.at(i, j) + b.at(i, j));
    }
    return PlanePartition(std::move(out));
}

inline PlanePartition scale(int k, const PlanePartition& pp) {
    detail::require(k >= 1, "scale factor must be positive");
    PlanePartition::Rows out = pp.rows();
    for (auto& row : out)
        for (int& v : row) v *= k;
    return PlanePartition(std::move(out));
}

/// pi in PP(k, n, m): first row <= k, first column <= n, max entry <= m.
inline bool fits_box(const PlanePartition& pp, int k, int n, int m) {
    return pp.row_length(1) <= k && pp.num_rows() <= n && pp.max_entry() <= m;
}

/// pi in PP'(k, n, m): shape exactly (k^n), max entry <= m.
inline bool exact_base(const PlanePartition& pp, int k, int n, int m) {
    if (k == 0 || n == 0) return pp.empty();
    if (pp.num_rows() != n || pp.max_entry() > m) return false;
    for (const auto& row : pp.rows())
        if (static_cast<int>(row.size()) != k) return false;
    return true;
}

}  // namespace ppmat
