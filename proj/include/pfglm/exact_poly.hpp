#pragma once

#include "pfglm/monomial.hpp"
#include "pfglm/ordered_poly.hpp"

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace pfglm {

/// Polynomial with exact rational coefficients, leading term first.
class ExactPoly {
public:
    using Terms = std::map<Monomial, mpq_class, MonomialGreater>;

    ExactPoly() : terms_(MonomialGreater{}) {}
    ExactPoly(std::size_t nvars, OrderTag order) : nvars_(nvars), order_(order), terms_(MonomialGreater{order}) {}

    std::size_t nvars() const noexcept { return nvars_; }
    OrderTag order() const noexcept { return order_; }
    const Terms& terms() const noexcept { return terms_; }
    bool is_zero() const noexcept { return terms_.empty(); }
    std::size_t size() const noexcept { return terms_.size(); }

    const Monomial& leading_monomial() const { return terms_.begin()->first; }
    const mpq_class& leading_coefficient() const { return terms_.begin()->second; }
    mpq_class coefficient(const Monomial& m) const;

    void add_term(const Monomial& m, const mpq_class& c);
    void erase(const Monomial& m) { terms_.erase(m); }
    ExactPoly reordered(OrderTag order) const;
    /// Divides by the leading coefficient.
    void make_monic();

    void add_multiple(const mpq_class& c, const Monomial& m, const ExactPoly& other);
    friend bool operator==(const ExactPoly& a, const ExactPoly& b) { return a.terms_ == b.terms_; }

    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::size_t nvars_ = 0;
    OrderTag order_;
    Terms terms_;
};

/// Exact rational representatives of the coefficients; inexact units are
/// taken in the balanced residue range.
ExactPoly lift_exact(const OrderedPoly& f);
/// The coefficients as balls at absolute precision `prec` (kInfinity keeps
/// them exact, which requires p-power denominators).
OrderedPoly embed(const ExactPoly& f, const Ring& ring, Prec prec);

/// Remainder of f by a reduced basis G (monic, same ordering).
ExactPoly exact_normal_form(const std::vector<ExactPoly>& G, const ExactPoly& f);

/// Staircase of an exact basis.
std::vector<Monomial> exact_staircase(const std::vector<ExactPoly>& G);

}  // namespace pfglm
