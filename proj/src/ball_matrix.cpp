#include "pfglm/ball_matrix.hpp"

#include "pfglm/errors.hpp"
#include "pfglm/kernels.hpp"

#include <algorithm>
#include <sstream>

namespace pfglm {

BallMatrix::BallMatrix(const Ring& ring, std::size_t rows, std::size_t cols)
    : ring_(&ring), rows_(rows), cols_(cols), data_(rows * cols, Ball::zero(ring, kInfinity)) {}

BallMatrix BallMatrix::identity(const Ring& ring, std::size_t n, Prec prec) {
    BallMatrix m(ring, n, n);
    const Ball one = Ball::from_integer(ring, 1, prec);
    const Ball zero = Ball::zero(ring, prec);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = i == j ? one : zero;
    return m;
}

BallMatrix BallMatrix::from_columns(const Ring& ring, std::size_t rows, const std::vector<BallVector>& columns) {
    BallMatrix m(ring, rows, columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) m.set_column(j, columns[j]);
    return m;
}

BallVector BallMatrix::column(std::size_t j) const {
    BallVector v;
    v.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) v.push_back((*this)(i, j));
    return v;
}

void BallMatrix::set_column(std::size_t j, std::span<const Ball> v) {
    if (v.size() != rows_) throw DimensionMismatch("column length does not match row count");
    for (std::size_t i = 0; i < rows_; ++i) (*this)(i, j) = v[i];
}

void BallMatrix::append_column(std::span<const Ball> v) {
    grow(0, 1, Ball::zero(*ring_, kInfinity));
    set_column(cols_ - 1, v);
}

void BallMatrix::grow(std::size_t dr, std::size_t dc, const Ball& diagonal_fill) {
    std::vector<Ball> next((rows_ + dr) * (cols_ + dc), Ball::zero(*ring_, kInfinity));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) next[i * (cols_ + dc) + j] = std::move(data_[i * cols_ + j]);
    for (std::size_t k = 0; k < std::min(dr, dc); ++k) next[(rows_ + k) * (cols_ + dc) + cols_ + k] = diagonal_fill;
    data_ = std::move(next);
    rows_ += dr;
    cols_ += dc;
}

Prec BallMatrix::min_prec() const {
    Prec m = kInfinity;
    for (const auto& b : data_) m = std::min(m, b.abs_prec());
    return m;
}

bool BallMatrix::is_zero() const {
    return std::all_of(data_.begin(), data_.end(), [](const Ball& b) { return b.is_zero(); });
}

std::string BallMatrix::to_string() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < rows_; ++i) {
        os << "[";
        for (std::size_t j = 0; j < cols_; ++j) os << (j ? ", " : "") << (*this)(i, j);
        os << "]\n";
    }
    return os.str();
}

BallMatrix operator-(const BallMatrix& a, const BallMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix difference shape mismatch");
    BallMatrix r(*a.ring(), a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j) - b(i, j);
    return r;
}

BallMatrix operator*(const BallMatrix& a, const BallMatrix& b) { return kernels::matmul(a, b); }

BallVector operator*(const BallMatrix& a, std::span<const Ball> v) { return kernels::matvec(a, v); }

}  // namespace pfglm
