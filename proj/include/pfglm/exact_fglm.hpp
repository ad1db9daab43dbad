#pragma once

#include "pfglm/exact_poly.hpp"

#include <vector>

namespace pfglm {

/// Change of ordering over the rationals with exact Gaussian elimination.
/// G must be the reduced basis of a zero-dimensional ideal for order1.
std::vector<ExactPoly> exact_fglm(const std::vector<ExactPoly>& G, OrderTag order1, OrderTag order2);

}  // namespace pfglm
