#pragma once

#include "pfglm/ball.hpp"
#include "pfglm/monomial.hpp"

#include <map>
#include <string>
#include <vector>

namespace pfglm {

/// Sparse polynomial over Ball coefficients, terms kept in decreasing order
/// for a fixed monomial ordering (begin() is the leading term).
///
/// Terms whose coefficient becomes indistinguishable from zero are dropped;
/// the smallest precision of a dropped coefficient is kept in zero_prec() so
/// the missing terms still count as "0 + O(p^zero_prec)".
class OrderedPoly {
public:
    using Terms = std::map<Monomial, Ball, MonomialGreater>;

    OrderedPoly() : terms_(MonomialGreater{}) {}
    OrderedPoly(const Ring& ring, std::size_t nvars, OrderTag order);

    const Ring* ring() const noexcept { return ring_; }
    std::size_t nvars() const noexcept { return nvars_; }
    OrderTag order() const noexcept { return order_; }
    const Terms& terms() const noexcept { return terms_; }
    std::size_t size() const noexcept { return terms_.size(); }
    bool is_zero() const noexcept { return terms_.empty(); }

    /// Precision of the pruned (implicit zero) coefficients; kInfinity if none.
    Prec zero_prec() const noexcept { return zero_prec_; }
    void note_zero_prec(Prec p) { zero_prec_ = std::min(zero_prec_, p); }
    /// Minimum absolute precision over stored coefficients and zero_prec().
    Prec min_prec() const;

    const Monomial& leading_monomial() const;
    const Ball& leading_coefficient() const;
    /// The coefficient of m (an exact zero if absent).
    Ball coefficient(const Monomial& m) const;

    /// Adds c * m, pruning the term if the sum has no significant digit.
    void add_term(const Monomial& m, const Ball& c);
    /// Replaces the coefficient of m (pruning as in add_term).
    void set_term(const Monomial& m, const Ball& c);
    void erase(const Monomial& m) { terms_.erase(m); }

    /// Same polynomial with terms re-sorted for another ordering.
    OrderedPoly reordered(OrderTag order) const;

    OrderedPoly& operator+=(const OrderedPoly& other);
    OrderedPoly& operator-=(const OrderedPoly& other);
    /// this += c * m * other
    void add_multiple(const Ball& c, const Monomial& m, const OrderedPoly& other);
    OrderedPoly operator-() const;

    /// Value at a point (one Ball per variable).
    Ball evaluate(const std::vector<Ball>& point) const;

    /// Sum of `c*x^a*...` terms, leading term first.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    const Ring* ring_ = nullptr;
    std::size_t nvars_ = 0;
    OrderTag order_;
    Terms terms_;
    Prec zero_prec_ = kInfinity;
};

OrderedPoly operator+(OrderedPoly a, const OrderedPoly& b);
OrderedPoly operator-(OrderedPoly a, const OrderedPoly& b);

/// Default variable names x1..xn.
std::vector<std::string> default_variable_names(std::size_t n);

}  // namespace pfglm
