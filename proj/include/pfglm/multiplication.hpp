#pragma once

#include "pfglm/ball_matrix.hpp"
#include "pfglm/groebner.hpp"

#include <vector>

namespace pfglm {

/// T[i] is multiplication by x_(i+1) on A/I in the staircase basis: column k
/// holds the normal form of x_(i+1) * staircase[k].
struct MultiplicationMatrices {
    std::vector<BallMatrix> T;

    std::size_t nvars() const noexcept { return T.size(); }
};

/// Builds every T_i by walking x_i * staircase in increasing order: standard
/// products give unit columns, leading monomials give negated tails, other
/// border monomials u reuse T_j * NF(u / x_j) for the smallest x_j with u / x_j
/// outside the staircase.
MultiplicationMatrices multiplication_matrices(const GroebnerBasis& G);

/// Coordinates of a polynomial supported on the staircase.
BallVector staircase_coordinates(const GroebnerBasis& G, const OrderedPoly& f);

}  // namespace pfglm
