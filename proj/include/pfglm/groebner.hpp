#pragma once

#include "pfglm/ordered_poly.hpp"

#include <vector>

namespace pfglm {

/// A reduced Gröbner basis of a zero-dimensional ideal at finite precision.
struct GroebnerBasis {
    const Ring* ring = nullptr;
    std::size_t nvars = 0;
    OrderTag order;
    /// Sorted by increasing leading monomial.
    std::vector<OrderedPoly> polys;
    /// Standard monomials, increasing.
    std::vector<Monomial> staircase;
    /// Smallest valuation of a significant non-leading coefficient; 0 when
    /// there is none.
    Prec beta = 0;
    std::vector<std::string> names;

    std::size_t delta() const noexcept { return staircase.size(); }
    std::vector<Monomial> leading_monomials() const;
    /// Minimum coefficient precision (including pruned zeros).
    Prec min_prec() const;
    /// Index of the element with leading monomial m, or npos.
    std::size_t index_of_leading(const Monomial& m) const;
    /// Index in the staircase, or npos.
    std::size_t staircase_index(const Monomial& m) const;

    static constexpr std::size_t npos = static_cast<std::size_t>(-1);

    /// Validates and packages `polys` (given for `order`). Leading
    /// coefficients equal to 1 are made exact. Throws NotReducedBasis when a
    /// leading coefficient is not 1 or a term is divisible by a leading
    /// monomial of another element, NotZeroDimensional when the staircase is
    /// infinite.
    static GroebnerBasis from_polys(std::vector<OrderedPoly> polys, OrderTag order,
                                    std::vector<std::string> names = {});
};

/// Remainder of multivariate division of f by G (for G.order).
OrderedPoly normal_form(const GroebnerBasis& G, const OrderedPoly& f);

/// Leading coefficients equal to 1, tails reduced, and every S-polynomial
/// reducing to a polynomial with no significant digit, all at the given
/// precision.
bool is_reduced_groebner(const std::vector<OrderedPoly>& G, OrderTag order);

/// Smallest valuation of a significant non-leading coefficient (0 if none).
Prec basis_beta(const std::vector<OrderedPoly>& polys);

}  // namespace pfglm
