#pragma once

#include "simplexsum/scalar.hpp"

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace simplexsum {

/// Dense square matrix over one scalar realization, column-major storage.
template <Scalar S>
class SquareMatrix {
public:
    explicit SquareMatrix(std::size_t order) : order_(order), data_(order * order, S(0)) {
        if (order == 0) {
            throw std::invalid_argument("matrix order must be at least 1");
        }
    }

    static SquareMatrix from_columns(const std::vector<std::vector<S>>& columns) {
        SquareMatrix m(columns.size());
        for (std::size_t c = 0; c < columns.size(); ++c) {
            if (columns[c].size() != columns.size()) {
                throw std::invalid_argument("column length does not match matrix order");
            }
            for (std::size_t r = 0; r < columns.size(); ++r) {
                m.at(r, c) = columns[c][r];
            }
        }
        return m;
    }

    std::size_t order() const { return order_; }

    S& at(std::size_t row, std::size_t col) { return data_[col * order_ + row]; }
    const S& at(std::size_t row, std::size_t col) const { return data_[col * order_ + row]; }

    std::vector<S> column(std::size_t col) const {
        std::vector<S> out(order_);
        for (std::size_t r = 0; r < order_; ++r) out[r] = at(r, col);
        return out;
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t c = 0; c < order_; ++c) std::swap(at(a, c), at(b, c));
    }

    void swap_columns(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t r = 0; r < order_; ++r) std::swap(at(r, a), at(r, b));
    }

    /// The (order-1) x (order-1) matrix with row `row` and column `col` removed.
    SquareMatrix minor_matrix(std::size_t row, std::size_t col) const {
        if (order_ == 1) {
            throw std::invalid_argument("order-1 matrix has no minor");
        }
        SquareMatrix m(order_ - 1);
        for (std::size_t c = 0, mc = 0; c < order_; ++c) {
            if (c == col) continue;
            for (std::size_t r = 0, mr = 0; r < order_; ++r) {
                if (r == row) continue;
                m.at(mr++, mc) = at(r, c);
            }
            ++mc;
        }
        return m;
    }

    friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
        return a.order_ == b.order_ && a.data_ == b.data_;
    }

private:
    std::size_t order_;
    std::vector<S> data_;
};

} // namespace simplexsum
