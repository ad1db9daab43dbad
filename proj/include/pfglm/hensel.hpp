#pragma once

#include "pfglm/groebner.hpp"

#include <gmpxx.h>

#include <vector>

namespace pfglm {

/// A residue root of h_n at which h_n' vanishes; not lifted.
struct SingularRoot {
    mpz_class residue;
    unsigned multiplicity = 0;
};

struct LiftedRoots {
    /// One point per lifted root, coordinates x_1 .. x_n.
    std::vector<std::vector<Ball>> points;
    /// One notice per singular root counted with multiplicity.
    std::vector<SingularRoot> singular;
};

/// Lifts every simple residue root of h_n from a lex shape basis
/// (x_i - h_i(x_n), h_n(x_n)) to precision min(target_prec, coefficient
/// precision) and evaluates the h_i there.
LiftedRoots hensel_lift_roots(const GroebnerBasis& shape_basis, Prec target_prec);

/// Distinct roots in [0, p) of an integer polynomial (coefficients in
/// increasing degree) modulo p, with multiplicities.
std::vector<std::pair<mpz_class, unsigned>> roots_mod_p(const std::vector<mpz_class>& coeffs, const mpz_class& p);

}  // namespace pfglm
