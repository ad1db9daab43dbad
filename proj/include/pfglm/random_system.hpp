#pragma once

#include "pfglm/exact_poly.hpp"
#include "pfglm/ordered_poly.hpp"

#include <cstdint>
#include <vector>

namespace pfglm {

struct ExperimentSpec {
    std::vector<unsigned> degrees;
    bool affine = false;
    unsigned long prime = 2;
    Prec prec = 150;
    std::size_t trials = 20;
    std::uint64_t seed = 0;

    std::size_t nvars() const noexcept { return degrees.size(); }
    /// sum (d_i - 1) + 1
    std::uint64_t macaulay_bound() const noexcept;
};

/// Monomials of total degree exactly d (or at most d), decreasing for grevlex.
std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d, bool up_to);

/// Dense polynomials of the given degrees with coefficients uniform in
/// [0, p^N), deterministic in (seed, trial). Homogeneous unless affine.
std::vector<OrderedPoly> random_system(const ExperimentSpec& spec, std::uint64_t trial = 0);

/// The same system with the coefficients as exact integers.
std::vector<ExactPoly> random_system_exact(const ExperimentSpec& spec, std::uint64_t trial = 0);

}  // namespace pfglm
