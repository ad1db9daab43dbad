#pragma once

#include "pfglm/groebner.hpp"
#include "pfglm/loss_report.hpp"
#include "pfglm/multiplication.hpp"
#include "pfglm/snf.hpp"

#include <optional>
#include <vector>

namespace pfglm {

/// A pending candidate x_(i+1) * B2[j].
struct Candidate {
    Monomial monomial;
    std::size_t j = 0;
    std::size_t i = 0;
};

/// Loop state of the change of ordering.
struct FglmState {
    OrderTag order2;
    std::vector<Monomial> B2;
    /// Input-order normal forms of B2, as columns.
    std::vector<BallVector> v;
    /// Sorted by order2 then (j, i), one entry per monomial.
    std::vector<Candidate> L;
    SnfFactorization snf;
    std::vector<OrderedPoly> G2;

    std::size_t s() const noexcept { return B2.size(); }
};

struct UpdateStep {
    std::size_t cols_after = 0;
    std::uint64_t op_delta = 0;
};

struct FglmRun {
    /// The converted basis; empty when the final cardinality check failed.
    std::optional<GroebnerBasis> basis;
    /// Accepted monomials in acceptance order.
    std::vector<Monomial> B2;
    std::vector<UpdateStep> updates;
    /// Largest invariant-factor valuation of the final normal-form matrix.
    std::optional<Prec> cond;
    LossReport report;
};

/// Converts a reduced basis of a zero-dimensional ideal to `order2`, never
/// throwing on insufficient precision (the run records the failure).
FglmRun fglm_run(const GroebnerBasis& G, OrderTag order2);

/// Same, throwing InsufficientPrecision when the run fails.
GroebnerBasis fglm_change_order(const GroebnerBasis& G, OrderTag order2);

/// Precision held by the transforms for a run on these matrices.
Prec fglm_transform_prec(const MultiplicationMatrices& mm);

}  // namespace pfglm
