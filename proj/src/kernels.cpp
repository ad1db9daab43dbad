#include "pfglm/kernels.hpp"

#include "pfglm/errors.hpp"
#include "pfglm/field_ops.hpp"

#include <omp.h>

namespace pfglm::kernels {

namespace {

void check_product(const BallMatrix& a, std::size_t inner) {
    if (a.cols() != inner) throw DimensionMismatch("inner dimensions differ in product");
}

Ball row_times_column(const BallMatrix& a, std::size_t i, const BallMatrix& b, std::size_t j) {
    Ball acc = Ball::zero(*a.ring(), kInfinity);
    for (std::size_t k = 0; k < a.cols(); ++k) {
        const Ball& x = a(i, k);
        const Ball& y = b(k, j);
        if (x.is_exact_zero() || y.is_exact_zero()) continue;
        acc += x * y;
    }
    return acc;
}

}  // namespace

Ball dot(std::span<const Ball> a, std::span<const Ball> b) {
    if (a.size() != b.size()) throw DimensionMismatch("dot product length mismatch");
    Ball acc;
    for (std::size_t k = 0; k < a.size(); ++k) {
        if (a[k].is_exact_zero() || b[k].is_exact_zero()) continue;
        acc += a[k] * b[k];
    }
    return acc;
}

BallMatrix matmul_serial(const BallMatrix& a, const BallMatrix& b) {
    check_product(a, b.rows());
    BallMatrix c(*a.ring(), a.rows(), b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = row_times_column(a, i, b, j);
    return c;
}

BallMatrix matmul_parallel(const BallMatrix& a, const BallMatrix& b) {
    check_product(a, b.rows());
    BallMatrix c(*a.ring(), a.rows(), b.cols());
    const auto n = static_cast<std::ptrdiff_t>(a.rows());
    field_ops::Counts workers;
    const int caller = omp_get_thread_num();
#pragma omp parallel
    {
        const field_ops::Scope scope;
#pragma omp for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < b.cols(); ++j)
                c(static_cast<std::size_t>(i), j) = row_times_column(a, static_cast<std::size_t>(i), b, j);
        if (omp_get_thread_num() != caller) {
#pragma omp critical
            workers += scope.elapsed();
        }
    }
    field_ops::local() += workers;
    return c;
}

BallVector matvec_serial(const BallMatrix& a, std::span<const Ball> v) {
    check_product(a, v.size());
    BallVector out;
    out.reserve(a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Ball acc = Ball::zero(*a.ring(), kInfinity);
        const auto row = a.row(i);
        for (std::size_t k = 0; k < v.size(); ++k) {
            if (row[k].is_exact_zero() || v[k].is_exact_zero()) continue;
            acc += row[k] * v[k];
        }
        out.push_back(std::move(acc));
    }
    return out;
}

BallVector matvec_parallel(const BallMatrix& a, std::span<const Ball> v) {
    check_product(a, v.size());
    BallVector out(a.rows(), Ball::zero(*a.ring(), kInfinity));
    const auto n = static_cast<std::ptrdiff_t>(a.rows());
    field_ops::Counts workers;
    const int caller = omp_get_thread_num();
#pragma omp parallel
    {
        const field_ops::Scope scope;
#pragma omp for schedule(static)
        for (std::ptrdiff_t i = 0; i < n; ++i) {
            const auto row = a.row(static_cast<std::size_t>(i));
            Ball acc = Ball::zero(*a.ring(), kInfinity);
            for (std::size_t k = 0; k < v.size(); ++k) {
                if (row[k].is_exact_zero() || v[k].is_exact_zero()) continue;
                acc += row[k] * v[k];
            }
            out[static_cast<std::size_t>(i)] = std::move(acc);
        }
        if (omp_get_thread_num() != caller) {
#pragma omp critical
            workers += scope.elapsed();
        }
    }
    field_ops::local() += workers;
    return out;
}

BallMatrix matmul(const BallMatrix& a, const BallMatrix& b) {
    if (a.rows() >= kParallelThreshold && !omp_in_parallel()) return matmul_parallel(a, b);
    return matmul_serial(a, b);
}

BallVector matvec(const BallMatrix& a, std::span<const Ball> v) {
    if (a.rows() >= kParallelThreshold && !omp_in_parallel()) return matvec_parallel(a, v);
    return matvec_serial(a, v);
}

}  // namespace pfglm::kernels
