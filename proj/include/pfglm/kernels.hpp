#pragma once

#include "pfglm/ball_matrix.hpp"

#include <span>

// Data-parallel matrix kernels. Each kernel has a serial reference and an
// OpenMP version producing identical entries; the dispatching entry points
// pick one by size. Field-operation tallies from worker threads are folded
// back into the calling thread's tally.
namespace pfglm::kernels {

BallMatrix matmul_serial(const BallMatrix& a, const BallMatrix& b);
BallMatrix matmul_parallel(const BallMatrix& a, const BallMatrix& b);

BallVector matvec_serial(const BallMatrix& a, std::span<const Ball> v);
BallVector matvec_parallel(const BallMatrix& a, std::span<const Ball> v);

/// Row count at or above which the dispatchers go parallel.
inline constexpr std::size_t kParallelThreshold = 48;

BallMatrix matmul(const BallMatrix& a, const BallMatrix& b);
BallVector matvec(const BallMatrix& a, std::span<const Ball> v);

/// Inner product sum_k a[k] * b[k], skipping exact zeros.
Ball dot(std::span<const Ball> a, std::span<const Ball> b);

}  // namespace pfglm::kernels
