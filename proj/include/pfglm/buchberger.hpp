#pragma once

#include "pfglm/exact_poly.hpp"

#include <cstdint>
#include <vector>

namespace pfglm {

struct BuchbergerOptions {
    /// Pairs whose lcm exceeds this total degree raise DegreeBlowup; 0 picks
    /// three times the Macaulay bound of the input.
    std::uint64_t degree_cutoff = 0;
};

/// Reduced Gröbner basis over the rationals, monic. The unit ideal gives
/// {1}. Throws DegreeBlowup past the cutoff and NotZeroDimensional when the
/// resulting staircase is infinite.
std::vector<ExactPoly> exact_buchberger(const std::vector<ExactPoly>& F, OrderTag order,
                                        const BuchbergerOptions& options = {});

/// Sum of (deg f - 1) over the inputs, plus one.
std::uint64_t macaulay_bound(const std::vector<ExactPoly>& F);

}  // namespace pfglm
