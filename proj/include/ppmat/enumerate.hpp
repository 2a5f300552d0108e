#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "bijection.hpp"
#include "errors.hpp"
#include "nmatrix.hpp"
#include "partition.hpp"
#include "plane_partition.hpp"
#include "word.hpp"

// Exhaustive generators. Each family comes as a visitor `for_each_*(..., f)`
// that calls f once per object, plus a `gen_*` convenience that collects
// them. Visit order is lexicographic in the canonical encoding (row vectors
// for plane partitions, row-major data for matrices, letters for words).

namespace ppmat {

/// The (k, n, m) triple of PP(k, n, m); k may be unbounded.
struct BoxSpec {
    std::optional<int> k;  // nullopt: unbounded row length
    int n = 1;
    int m = 1;

    static BoxSpec bounded(int k, int n, int m) { return validated({k, n, m}); }
    static BoxSpec unbounded(int n, int m) { return validated({std::nullopt, n, m}); }

    bool is_bounded() const noexcept { return k.has_value(); }

private:
    static BoxSpec validated(BoxSpec b) {
        detail::require(b.n >= 1 && b.m >= 1, "box needs n, m >= 1");
        detail::require(!b.k || *b.k >= 1, "box needs k >= 1 or unbounded");
        return b;
    }
};

// ---------------------------------------------------------------------------
// Partitions
// ---------------------------------------------------------------------------

namespace detail {

template <class F>
void partitions_rec(std::vector<int>& parts, int max_part, int rows_left, F& f) {
    f(Partition(parts));
    if (rows_left == 0) return;
    for (int p = 1; p <= max_part; ++p) {
        parts.push_back(p);
        partitions_rec(parts, p, rows_left - 1, f);
        parts.pop_back();
    }
}

}  // namespace detail

/// All lambda with lambda_1 <= k and length <= n; C(k+n, n) of them.
template <class F>
void for_each_partition_in_box(int k, int n, F&& f) {
    detail::require(k >= 0 && n >= 0, "partition box sides must be nonnegative");
    std::vector<int> parts;
    detail::partitions_rec(parts, k, n, f);
}

inline std::vector<Partition> gen_partitions_in_box(int k, int n) {
    std::vector<Partition> out;
    for_each_partition_in_box(k, n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

// ---------------------------------------------------------------------------
// Plane partitions
// ---------------------------------------------------------------------------

/// Constraints for the row-by-row plane partition generator.
struct PPSearch {
    int max_entry = 1;
    int max_rows = 1;
    int max_cols = 1;
    std::optional<Partition> fixed_shape;      // every row length pinned
    bool column_strict = false;                // pi_{ij} > pi_{i+1,j}
    std::optional<std::int64_t> max_volume;    // prune on running volume
};

namespace detail {

template <class F>
class PPWalker {
public:
    PPWalker(const PPSearch& s, F& f) : s_(s), f_(f) {}

    void run() {
        // place() holds references into rows_ across recursion
        rows_.reserve(static_cast<std::size_t>(s_.max_rows) + 1);
        next_row(1);
    }

private:
    int lo(int i) const {
        if (s_.fixed_shape) return s_.fixed_shape->part(i);
        return 1;
    }

    int hi(int i) const {
        if (s_.fixed_shape) return s_.fixed_shape->part(i);
        if (i == 1) return s_.max_cols;
        return static_cast<int>(rows_[static_cast<std::size_t>(i - 2)].size());
    }

    bool may_stop_after(int completed_rows) const {
        if (s_.fixed_shape) return completed_rows == s_.fixed_shape->length();
        return true;
    }

    void next_row(int i) {
        if (may_stop_after(i - 1)) f_(PlanePartition(rows_));
        if (i > s_.max_rows) return;
        if (s_.fixed_shape && i > s_.fixed_shape->length()) return;
        if (hi(i) < 1) return;
        rows_.emplace_back();
        place(i, 1);
        rows_.pop_back();
    }

    void place(int i, int j) {
        if (j - 1 >= 1 && j - 1 >= lo(i)) next_row(i + 1);
        if (j > hi(i)) return;
        auto& row = rows_[static_cast<std::size_t>(i - 1)];
        int upper = s_.max_entry;
        if (j > 1) upper = std::min(upper, row[static_cast<std::size_t>(j - 2)]);
        if (i > 1) {
            const int above = rows_[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 1)];
            upper = std::min(upper, s_.column_strict ? above - 1 : above);
        }
        if (s_.max_volume) upper = static_cast<int>(std::min<std::int64_t>(upper, *s_.max_volume - volume_));
        for (int v = 1; v <= upper; ++v) {
            row.push_back(v);
            volume_ += v;
            place(i, j + 1);
            volume_ -= v;
            row.pop_back();
        }
    }

    const PPSearch& s_;
    F& f_;
    PlanePartition::Rows rows_;
    std::int64_t volume_ = 0;
};

}  // namespace detail

template <class F>
void for_each_pp(const PPSearch& search, F&& f) {
    detail::require(search.max_entry >= 0 && search.max_rows >= 0 && search.max_cols >= 0,
                    "plane partition search bounds must be nonnegative");
    detail::PPWalker<std::remove_reference_t<F>> walker(search, f);
    walker.run();
}

/// PP(k, n, m).
template <class F>
void for_each_pp_box(int k, int n, int m, F&& f) {
    PPSearch s;
    s.max_entry = m;
    s.max_rows = n;
    s.max_cols = k;
    for_each_pp(s, f);
}

/// All plane partitions of volume <= max_volume (they all fit in the
/// max_volume^3 box).
template <class F>
void for_each_pp_volume_at_most(int max_volume, F&& f) {
    const int v = std::max(max_volume, 0);
    PPSearch s;
    s.max_entry = s.max_rows = s.max_cols = v;
    s.max_volume = max_volume;
    for_each_pp(s, f);
}

inline std::vector<PlanePartition> gen_pp_box(int k, int n, int m) {
    std::vector<PlanePartition> out;
    for_each_pp_box(k, n, m, [&](const PlanePartition& p) { out.push_back(p); });
    return out;
}

inline PPSearch shape_search(const Partition& lambda, int m, bool column_strict) {
    PPSearch s;
    s.max_entry = m;
    s.max_rows = lambda.length();
    s.max_cols = lambda.first();
    s.fixed_shape = lambda;
    s.column_strict = column_strict;
    return s;
}

/// All plane partitions of shape lambda with entries in [1, m].
inline std::vector<PlanePartition> gen_pp_shape(const Partition& lambda, int m) {
    std::vector<PlanePartition> out;
    for_each_pp(shape_search(lambda, m, false), [&](const PlanePartition& p) { out.push_back(p); });
    return out;
}

/// PP'(k, n, m): base shape exactly the k x n rectangle (every cell of (k^n) filled).
inline std::vector<PlanePartition> gen_pp_exact(int k, int n, int m) {
    detail::require(k >= 0 && n >= 0 && m >= 0, "box dimensions must be nonnegative");
    if (k == 0 || n == 0) return {PlanePartition()};
    return gen_pp_shape(Partition::rectangle(k, n), m);
}

/// Column-strict fillings of lambda with entries in [1, m].
inline std::vector<PlanePartition> gen_column_strict(const Partition& lambda, int m) {
    std::vector<PlanePartition> out;
    for_each_pp(shape_search(lambda, m, true), [&](const PlanePartition& p) { out.push_back(p); });
    return out;
}

// ---------------------------------------------------------------------------
// Strict tableaux
// ---------------------------------------------------------------------------

namespace detail {

template <class F>
class StrictTableauWalker {
public:
    StrictTableauWalker(const Partition& shape, int n, F& f)
        : shape_(shape), n_(n), f_(f), column_of_(static_cast<std::size_t>(n) + 1, 0),
          uses_(static_cast<std::size_t>(n) + 1, 0) {
        for (int i = 1; i <= shape.length(); ++i) rows_.emplace_back();
    }

    void run() {
        cells_left_ = shape_.size();
        visit(1, 1);
    }

private:
    void visit(int i, int j) {
        if (i > shape_.length()) {
            if (distinct_used_ == n_) f_(PlanePartition(rows_));
            return;
        }
        if (j > shape_.part(i)) {
            visit(i + 1, 1);
            return;
        }
        if (n_ - distinct_used_ > cells_left_) return;
        auto& row = rows_[static_cast<std::size_t>(i - 1)];
        int upper = n_;
        if (j > 1) upper = std::min(upper, row[static_cast<std::size_t>(j - 2)]);
        if (i > 1) upper = std::min(upper, rows_[static_cast<std::size_t>(i - 2)][static_cast<std::size_t>(j - 1)]);
        for (int v = 1; v <= upper; ++v) {
            auto& col = column_of_[static_cast<std::size_t>(v)];
            if (col != 0 && col != j) continue;
            const bool fresh = col == 0;
            col = j;
            ++uses_[static_cast<std::size_t>(v)];
            if (fresh) ++distinct_used_;
            --cells_left_;
            row.push_back(v);
            visit(i, j + 1);
            row.pop_back();
            ++cells_left_;
            if (fresh) --distinct_used_;
            if (--uses_[static_cast<std::size_t>(v)] == 0) col = 0;
        }
    }

    const Partition& shape_;
    int n_;
    F& f_;
    PlanePartition::Rows rows_;
    std::vector<int> column_of_;
    std::vector<int> uses_;
    int distinct_used_ = 0;
    std::int64_t cells_left_ = 0;
};

}  // namespace detail

/// ST(lambda, n): plane partitions of shape lambda filled with exactly
/// {1..n}, each value confined to a single column.
template <class F>
void for_each_strict_tableau(const Partition& lambda, int n, F&& f) {
    if (n < 0) return;
    if (lambda.empty()) {
        if (n == 0) f(PlanePartition{});
        return;
    }
    if (lambda.first() > n || n > lambda.size()) return;
    detail::StrictTableauWalker<std::remove_reference_t<F>> walker(lambda, n, f);
    walker.run();
}

inline std::vector<PlanePartition> gen_strict_tableaux(const Partition& lambda, int n) {
    std::vector<PlanePartition> out;
    for_each_strict_tableau(lambda, n, [&](const PlanePartition& p) { out.push_back(p); });
    return out;
}

/// f_lambda(n) = |ST(lambda, n)|.
inline std::int64_t count_strict_tableaux(const Partition& lambda, int n) {
    std::int64_t count = 0;
    for_each_strict_tableau(lambda, n, [&](const PlanePartition&) { ++count; });
    return count;
}

// ---------------------------------------------------------------------------
// Matrices and words
// ---------------------------------------------------------------------------

/// Finite window on n x m N-matrices: sum_{i,l} d_{il} * weight(i,l) <= budget.
class MatrixBound {
public:
    static MatrixBound total_at_most(std::int64_t budget) {
        return MatrixBound(budget, [](int, int) { return std::int64_t{1}; });
    }

    static MatrixBound weighted_at_most(std::int64_t budget, std::function<std::int64_t(int, int)> weight) {
        return MatrixBound(budget, std::move(weight));
    }

    std::int64_t budget() const noexcept { return budget_; }
    std::int64_t weight(int i, int l) const { return weight_(i, l); }

private:
    MatrixBound(std::int64_t budget, std::function<std::int64_t(int, int)> weight)
        : budget_(budget), weight_(std::move(weight)) {}

    std::int64_t budget_;
    std::function<std::int64_t(int, int)> weight_;
};

template <class F>
void for_each_matrix(int n, int m, const MatrixBound& bound, F&& f) {
    detail::require(n >= 0 && m >= 0, "matrix dimensions must be nonnegative");
    std::vector<std::int64_t> weights;
    for (int i = 1; i <= n; ++i)
        for (int l = 1; l <= m; ++l) {
            const auto w = bound.weight(i, l);
            detail::require(w >= 1, "matrix weights must be positive");
            weights.push_back(w);
        }
    if (bound.budget() < 0) return;
    NMatrix d(n, m);
    const int cells = n * m;
    std::function<void(int, std::int64_t)> rec = [&](int cell, std::int64_t left) {
        if (cell == cells) {
            f(static_cast<const NMatrix&>(d));
            return;
        }
        const int i = cell / m + 1;
        const int l = cell % m + 1;
        const auto w = weights[static_cast<std::size_t>(cell)];
        for (std::int64_t v = 0; v * w <= left; ++v) {
            d.set(i, l, static_cast<int>(v));
            rec(cell + 1, left - v * w);
        }
        d.set(i, l, 0);
    };
    rec(0, bound.budget());
}

inline std::vector<NMatrix> gen_matrices(int n, int m, const MatrixBound& bound) {
    std::vector<NMatrix> out;
    for_each_matrix(n, m, bound, [&](const NMatrix& d) { out.push_back(d); });
    return out;
}

/// All m^n words of length n over [m].
template <class F>
void for_each_word(int n, int m, F&& f) {
    detail::require(n >= 0 && m >= 1, "words need n >= 0, m >= 1");
    std::vector<int> letters(static_cast<std::size_t>(n), 1);
    while (true) {
        f(Word(letters, m));
        int pos = n - 1;
        while (pos >= 0 && letters[static_cast<std::size_t>(pos)] == m) letters[static_cast<std::size_t>(pos--)] = 1;
        if (pos < 0) return;
        ++letters[static_cast<std::size_t>(pos)];
    }
}

inline std::vector<Word> gen_words(int n, int m) {
    std::vector<Word> out;
    for_each_word(n, m, [&](const Word& w) { out.push_back(w); });
    return out;
}

// ---------------------------------------------------------------------------
// Exact counters
// ---------------------------------------------------------------------------

namespace detail {

/// Calls f(mu) for every mu with outer/mu a horizontal strip of the given
/// size (size < 0: any size) and inner ⊆ mu.
template <class F>
void for_each_strip_removal(const Partition& outer, const Partition& inner, std::int64_t size, F&& f) {
    const int len = outer.length();
    std::vector<int> mu(static_cast<std::size_t>(len), 0);
    std::function<void(int, std::int64_t)> rec = [&](int i, std::int64_t removed) {
        if (i > len) {
            if (size < 0 || removed == size) f(Partition(mu));
            return;
        }
        const int top = outer.part(i);
        const int bottom = std::max(outer.part(i + 1), inner.part(i));
        for (int v = top; v >= bottom; --v) {
            const std::int64_t r = removed + (top - v);
            if (size >= 0 && r > size) break;
            mu[static_cast<std::size_t>(i - 1)] = v;
            rec(i + 1, r);
        }
    };
    rec(1, 0);
}

}  // namespace detail

/// K_{lambda,alpha}: column-strict fillings of lambda with content alpha,
/// counted as chains of horizontal strips.
inline std::int64_t kostka(const Partition& lambda, const Composition& alpha) {
    for (int a : alpha) detail::require(a >= 0, "composition parts must be nonnegative");
    if (weight(alpha) != lambda.size()) return 0;
    std::map<Partition, std::int64_t> layer{{lambda, 1}};
    for (auto it = alpha.rbegin(); it != alpha.rend(); ++it) {
        std::map<Partition, std::int64_t> next;
        for (const auto& [shape_now, ways] : layer)
            detail::for_each_strip_removal(shape_now, Partition{}, *it,
                                           [&](const Partition& mu) { next[mu] += ways; });
        layer = std::move(next);
    }
    const auto it = layer.find(Partition{});
    return it == layer.end() ? 0 : it->second;
}

/// s_{outer/inner}(1^n): column-strict fillings of the skew shape with
/// entries in [1, n].
inline std::int64_t skew_schur_ones(const Partition& outer, const Partition& inner, int n) {
    detail::require(inner.contained_in(outer), "inner partition not contained in outer");
    detail::require(n >= 0, "skew_schur_ones needs n >= 0");
    std::map<Partition, std::int64_t> layer{{outer, 1}};
    for (int step = 0; step < n; ++step) {
        std::map<Partition, std::int64_t> next;
        for (const auto& [shape_now, ways] : layer)
            detail::for_each_strip_removal(shape_now, inner, -1, [&](const Partition& mu) { next[mu] += ways; });
        layer = std::move(next);
    }
    const auto it = layer.find(inner);
    return it == layer.end() ? 0 : it->second;
}

/// Every weak composition of `total` into `parts` parts, lexicographic.
template <class F>
void for_each_composition(int total, int parts, F&& f) {
    detail::require(total >= 0 && parts >= 0, "composition needs nonnegative total and parts");
    Composition c(static_cast<std::size_t>(parts), 0);
    std::function<void(int, int)> rec = [&](int pos, int left) {
        if (pos == parts - 1) {
            c[static_cast<std::size_t>(pos)] = left;
            f(static_cast<const Composition&>(c));
            return;
        }
        for (int v = 0; v <= left; ++v) {
            c[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, left - v);
        }
    };
    if (parts == 0) {
        if (total == 0) f(static_cast<const Composition&>(c));
        return;
    }
    rec(0, total);
}

/// Every alpha in N^m with |alpha| <= max_weight.
inline std::vector<Composition> compositions_up_to(int max_weight, int m) {
    std::vector<Composition> out;
    for (int w = 0; w <= max_weight; ++w) for_each_composition(w, m, [&](const Composition& c) { out.push_back(c); });
    return out;
}

/// alpha -> D_alpha(k, n, m) for every alpha that occurs in PP(k, n, m).
inline std::map<Composition, std::int64_t> d_alpha_table(int k, int n, int m) {
    std::map<Composition, std::int64_t> table;
    for_each_pp_box(k, n, m, [&](const PlanePartition& p) { ++table[column_counts(p, m)]; });
    return table;
}

/// D_alpha(k, n, m): plane partitions in the box whose value v occupies
/// exactly alpha_v columns. Unbounded k is counted through Phi: matrices
/// whose column l sums to alpha_l.
inline std::int64_t count_D_alpha(const BoxSpec& box, const Composition& alpha) {
    detail::require(static_cast<int>(alpha.size()) == box.m, "alpha must have length m");
    for (int a : alpha) detail::require(a >= 0, "composition parts must be nonnegative");
    if (box.is_bounded()) {
        std::int64_t count = 0;
        for_each_pp_box(*box.k, box.n, box.m, [&](const PlanePartition& p) {
            if (column_counts(p, box.m) == alpha) ++count;
        });
        return count;
    }
    // each matrix column l is a weak composition of alpha_l into n rows
    std::int64_t count = 0;
    NMatrix d(box.n, box.m);
    std::function<void(int)> rec = [&](int l) {
        if (l > box.m) {
            const PlanePartition p = phi_inverse(d);
            if (column_counts(p, box.m) != alpha) throw std::logic_error("Phi does not transport column counts");
            ++count;
            return;
        }
        for_each_composition(alpha[static_cast<std::size_t>(l - 1)], box.n, [&](const Composition& col) {
            for (int i = 1; i <= box.n; ++i) d.set(i, l, col[static_cast<std::size_t>(i - 1)]);
            rec(l + 1);
        });
    };
    rec(1);
    return count;
}

}  // namespace ppmat
