#pragma once

#include "pfglm/groebner.hpp"
#include "pfglm/loss_report.hpp"
#include "pfglm/snf.hpp"

#include <optional>
#include <vector>

namespace pfglm {

/// For every minimal generator x^a divisible by x_n and every k < n,
/// (x_k / x_n) * x^a lies in the monomial ideal.
bool is_semi_stable(const std::vector<Monomial>& leading_monomials);

struct ShapeInputs {
    /// Multiplication by x_n in the staircase basis.
    BallMatrix T_n;
    /// Normal forms of x_1 .. x_(n-1).
    std::vector<BallVector> y;
};

/// Copies T_n and the normal forms of the variables out of a grevlex basis
/// without arithmetic. Throws NotSemiStable.
ShapeInputs read_shape_inputs(const GroebnerBasis& G);

struct ShapeRun {
    std::optional<GroebnerBasis> basis;
    std::optional<Prec> cond;
    LossReport report;
};

/// Lex basis (x_1 - h_1(x_n), ..., x_(n-1) - h_(n-1)(x_n), h_n(x_n)) from a
/// grevlex basis of a semi-stable ideal in shape position. Throws
/// NotSemiStable and NotShapePosition; insufficient precision is recorded
/// in the run.
ShapeRun fglm_shape_run(const GroebnerBasis& G);

/// Same, throwing InsufficientPrecision on failure.
GroebnerBasis fglm_shape_from_grevlex(const GroebnerBasis& G);

}  // namespace pfglm
