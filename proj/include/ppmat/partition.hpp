#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <numeric>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ppmat {

/// A cell (i, j) of a Young diagram, 1-based: i is the row, j the column.
struct Cell {
    int i = 1;
    int j = 1;

    friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// An integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition is allowed.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        // trailing zeros are accepted and dropped; anything else must be positive
        while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            detail::require(parts_[i] >= 1, "partition parts must be positive");
            if (i > 0)
                detail::require(parts_[i - 1] >= parts_[i],
                                "partition parts must be weakly decreasing");
        }
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// (k^n): n parts all equal to k. Empty when k == 0 or n == 0.
    static Partition rectangle(int k, int n) {
        detail::require(k >= 0 && n >= 0, "rectangle sides must be nonnegative");
        if (k == 0) return {};
        return Partition(std::vector<int>(static_cast<std::size_t>(n), k));
    }

    const std::vector<int>& parts() const noexcept { return parts_; }
    int length() const noexcept { return static_cast<int>(parts_.size()); }
    bool empty() const noexcept { return parts_.empty(); }

    std::int64_t size() const noexcept {
        return std::accumulate(parts_.begin(), parts_.end(), std::int64_t{0});
    }

    /// 1-based part lookup; parts beyond the length read as 0.
    int part(int i) const noexcept {
        return (i >= 1 && i <= length()) ? parts_[static_cast<std::size_t>(i - 1)] : 0;
    }

    int first() const noexcept { return part(1); }

    Partition conjugate() const {
        std::vector<int> conj(static_cast<std::size_t>(first()), 0);
        for (int p : parts_)
            for (int j = 0; j < p; ++j) ++conj[static_cast<std::size_t>(j)];
        return Partition(std::move(conj));
    }

    /// Young-diagram containment: this ⊆ other.
    bool contained_in(const Partition& other) const noexcept {
        if (length() > other.length()) return false;
        for (int i = 1; i <= length(); ++i)
            if (part(i) > other.part(i)) return false;
        return true;
    }

    bool fits_in_box(int k, int n) const noexcept { return first() <= k && length() <= n; }

    std::string to_string() const {
        std::string s = "(";
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i) s += ',';
            s += std::to_string(parts_[i]);
        }
        return s + ")";
    }

    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// A weak composition alpha in N^m (zeros allowed, fixed length).
using Composition = std::vector<int>;

inline std::int64_t weight(const Composition& alpha) {
    return std::accumulate(alpha.begin(), alpha.end(), std::int64_t{0});
}

/// beta ⪰ alpha: every prefix sum of beta is at least the matching prefix sum of alpha.
inline bool dominates(const Composition& beta, const Composition& alpha) {
    detail::require(beta.size() == alpha.size(), "dominance needs equal-length compositions");
    std::int64_t sb = 0, sa = 0;
    for (std::size_t i = 0; i < beta.size(); ++i) {
        sb += beta[i];
        sa += alpha[i];
        if (sb < sa) return false;
    }
    return true;
}

}  // namespace ppmat
