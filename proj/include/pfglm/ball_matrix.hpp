#pragma once

#include "pfglm/ball.hpp"

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace pfglm {

using BallVector = std::vector<Ball>;

/// Dense row-major matrix of balls over a single ring.
class BallMatrix {
public:
    BallMatrix() = default;
    /// rows x cols of exact zeros.
    BallMatrix(const Ring& ring, std::size_t rows, std::size_t cols);

    /// Identity whose entries carry absolute precision `prec` (exact when
    /// prec is infinite).
    static BallMatrix identity(const Ring& ring, std::size_t n, Prec prec = kInfinity);
    static BallMatrix from_columns(const Ring& ring, std::size_t rows, const std::vector<BallVector>& columns);

    const Ring* ring() const noexcept { return ring_; }
    std::size_t rows() const noexcept { return rows_; }
    std::size_t cols() const noexcept { return cols_; }

    Ball& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
    const Ball& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

    std::span<Ball> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
    std::span<const Ball> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
    BallVector column(std::size_t j) const;
    void set_column(std::size_t j, std::span<const Ball> v);

    /// Appends a column (rows() entries).
    void append_column(std::span<const Ball> v);
    /// Grows to (rows+dr) x (cols+dc), new entries exact zero except a
    /// diagonal `fill` on the new square block.
    void grow(std::size_t dr, std::size_t dc, const Ball& diagonal_fill);

    /// Minimum absolute precision over all entries.
    Prec min_prec() const;
    /// True iff every entry is indistinguishable from zero.
    bool is_zero() const;

    std::string to_string() const;

private:
    const Ring* ring_ = nullptr;
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Ball> data_;
};

BallMatrix operator-(const BallMatrix& a, const BallMatrix& b);

/// Product with an exact zero or exact one skipped when it cannot change the sum.
BallMatrix operator*(const BallMatrix& a, const BallMatrix& b);
BallVector operator*(const BallMatrix& a, std::span<const Ball> v);

}  // namespace pfglm
