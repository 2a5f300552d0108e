#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "errors.hpp"

namespace ppmat {

/// A dense rectangular matrix of nonnegative integers. Dimensions are part
/// of the value: a 2x2 zero matrix differs from a 3x3 zero matrix.
/// Indexing is 1-based (row i, column l).
class NMatrix {
public:
    NMatrix() = default;

    NMatrix(int rows, int cols) : rows_(rows), cols_(cols) {
        detail::require(rows >= 0 && cols >= 0, "matrix dimensions must be nonnegative");
        data_.assign(static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols), 0);
    }

    NMatrix(int rows, int cols, const std::vector<std::vector<int>>& data) : NMatrix(rows, cols) {
        detail::require(static_cast<int>(data.size()) == rows, "matrix data has wrong number of rows");
        for (int i = 1; i <= rows; ++i) {
            const auto& row = data[static_cast<std::size_t>(i - 1)];
            detail::require(static_cast<int>(row.size()) == cols, "matrix data has ragged rows");
            for (int l = 1; l <= cols; ++l) set(i, l, row[static_cast<std::size_t>(l - 1)]);
        }
    }

    /// Dimensions taken from a non-ragged literal.
    static NMatrix from_rows(const std::vector<std::vector<int>>& data) {
        const int rows = static_cast<int>(data.size());
        const int cols = rows ? static_cast<int>(data.front().size()) : 0;
        return NMatrix(rows, cols, data);
    }

    int rows() const noexcept { return rows_; }
    int cols() const noexcept { return cols_; }

    int at(int i, int l) const {
        check_index(i, l);
        return data_[index(i, l)];
    }

    void set(int i, int l, int value) {
        check_index(i, l);
        detail::require(value >= 0, "matrix entries must be nonnegative");
        data_[index(i, l)] = value;
    }

    std::int64_t total() const noexcept {
        std::int64_t s = 0;
        for (int v : data_) s += v;
        return s;
    }

    std::vector<int> row_sums() const {
        std::vector<int> out(static_cast<std::size_t>(rows_), 0);
        for (int i = 1; i <= rows_; ++i)
            for (int l = 1; l <= cols_; ++l) out[static_cast<std::size_t>(i - 1)] += at(i, l);
        return out;
    }

    std::vector<int> col_sums() const {
        std::vector<int> out(static_cast<std::size_t>(cols_), 0);
        for (int i = 1; i <= rows_; ++i)
            for (int l = 1; l <= cols_; ++l) out[static_cast<std::size_t>(l - 1)] += at(i, l);
        return out;
    }

    std::vector<std::vector<int>> to_rows() const {
        std::vector<std::vector<int>> out(static_cast<std::size_t>(rows_));
        for (int i = 1; i <= rows_; ++i)
            for (int l = 1; l <= cols_; ++l) out[static_cast<std::size_t>(i - 1)].push_back(at(i, l));
        return out;
    }

    std::string to_string() const {
        std::string s = "[";
        for (int i = 1; i <= rows_; ++i) {
            if (i > 1) s += ',';
            s += '[';
            for (int l = 1; l <= cols_; ++l) {
                if (l > 1) s += ',';
                s += std::to_string(at(i, l));
            }
            s += ']';
        }
        return s + "]";
    }

    friend bool operator==(const NMatrix&, const NMatrix&) = default;

private:
    std::size_t index(int i, int l) const noexcept {
        return static_cast<std::size_t>(i - 1) * static_cast<std::size_t>(cols_) + static_cast<std::size_t>(l - 1);
    }

    void check_index(int i, int l) const {
        detail::require(i >= 1 && i <= rows_ && l >= 1 && l <= cols_, "matrix index out of range");
    }

    int rows_ = 0;
    int cols_ = 0;
    std::vector<int> data_;
};

}  // namespace ppmat
