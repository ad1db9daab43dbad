#pragma once

#include "pfglm/exact_poly.hpp"
#include "pfglm/groebner.hpp"

#include <vector>

namespace pfglm {

enum class FixtureMethod {
    /// Exact rational Buchberger, then truncation.
    buchberger,
    /// Row reduction of the degree <= D Macaulay matrix in Q_p from exact
    /// integer inputs; valid when the leading forms are a regular sequence.
    macaulay,
    /// buchberger for homogeneous inputs, macaulay otherwise.
    automatic,
};

/// Hilbert function values h_0, h_1, ... of a regular sequence of forms of
/// the given degrees in as many variables (coefficients of
/// prod (1 - t^d) / (1 - t)^n).
std::vector<std::uint64_t> regular_sequence_hilbert(const std::vector<unsigned>& degrees);

/// The exact reduced grevlex basis of <F> with every coefficient truncated
/// to absolute precision N. The Macaulay method works in Q_p at increasing
/// working precision until every coefficient is certified to precision N;
/// it throws NotZeroDimensional when the rank of the Macaulay matrix is
/// below that of a regular sequence. Other failures are those of
/// exact_buchberger.
GroebnerBasis truncated_grevlex_basis(const std::vector<ExactPoly>& F, const Ring& ring, Prec N,
                                      FixtureMethod method = FixtureMethod::automatic);

}  // namespace pfglm
