#pragma once

#include "pfglm/ball_matrix.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace pfglm {

/// P * M * Q = Delta with P, Q invertible over Z_p and Delta diagonal up to
/// precision.
///
/// Transforms are accumulated from elementary operations whose multipliers
/// are exact lifts of the computed quotients, so the approximate phase loses
/// nothing on P and Q: their entries carry `transform_prec`, which is at
/// least the input's absolute precision. All uncertainty of the input lives
/// in Delta. Refinement (snf_precise) moves the residual off-diagonal
/// uncertainty of Delta into the transforms and makes Delta exact.
struct SnfFactorization {
    BallMatrix P;
    BallMatrix P_inv;
    BallMatrix Q;
    BallMatrix Q_inv;
    BallMatrix Delta;
    /// Non-decreasing; Unknown entries (rank not certified) come last and
    /// carry a lower bound.
    std::vector<Valuation> diag_valuations;
    bool refined = false;
    bool has_inverses = false;
    /// Cumulative count of elementary row and column operations (scalings
    /// and axpys; swaps are free).
    std::uint64_t op_count = 0;
    /// Precision at which P and Q are held during the approximate phase.
    Prec transform_prec = kInfinity;

    std::size_t rows() const noexcept { return Delta.rows(); }
    std::size_t cols() const noexcept { return Delta.cols(); }
    bool full_rank_certified() const noexcept;
};

/// Largest finite absolute or relative precision among M's entries; the
/// transform precision that makes products P * column lossless.
Prec default_transform_prec(const BallMatrix& M);

SnfFactorization snf_approximate(const BallMatrix& M, bool with_inverses = true);
SnfFactorization snf_approximate(const BallMatrix& M, bool with_inverses, Prec transform_prec);

/// Turns an approximate SNF of a full-rank matrix into an exact Smith form.
/// Throws RankNotCertified if some diagonal valuation is unknown.
SnfFactorization snf_precise(const SnfFactorization& f);

/// Largest invariant-factor valuation. Throws RankNotCertified.
Prec condition_number(const SnfFactorization& f);

/// Solves M X = Y for square invertible M.
BallVector solve_square(const BallMatrix& M, std::span<const Ball> Y);

/// Solves M X = Y for full-column-rank M (rows >= cols) assuming Y lies in
/// the image of M. Throws MembershipViolated if a discarded coordinate is
/// significant.
BallVector solve_in_image(const BallMatrix& M, std::span<const Ball> Y);

/// Same, from an existing factorization of M (approximate or refined). An
/// approximate factorization is refined on the right-hand side only, which
/// costs O(rows * cols) instead of refining the transforms.
BallVector solve_in_image(const SnfFactorization& f, std::span<const Ball> Y);

/// Approximate SNF of [M | v] from an approximate SNF (with inverses) of M.
SnfFactorization snf_update(const SnfFactorization& f, std::span<const Ball> v);
void snf_update_in_place(SnfFactorization& f, std::span<const Ball> v);

}  // namespace pfglm
