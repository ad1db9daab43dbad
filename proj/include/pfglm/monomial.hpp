#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace pfglm {

enum class OrderKind { lex, grevlex, deglex };

/// A monomial ordering with variables ranked x1 > x2 > ... > xn.
struct OrderTag {
    OrderKind kind = OrderKind::grevlex;

    friend bool operator==(const OrderTag&, const OrderTag&) = default;
};

std::string to_string(OrderTag order);
/// "lex", "grevlex" or "deglex". Throws std::invalid_argument otherwise.
OrderTag parse_order(const std::string& name);

/// x^u for an exponent vector u.
class Monomial {
public:
    using Exponent = std::uint32_t;

    Monomial() = default;
    explicit Monomial(std::size_t nvars) : e_(nvars, 0) {}
    explicit Monomial(std::vector<Exponent> e) : e_(std::move(e)) {}
    static Monomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const noexcept { return e_.size(); }
    Exponent operator[](std::size_t i) const { return e_[i]; }
    Exponent& operator[](std::size_t i) { return e_[i]; }
    const std::vector<Exponent>& exponents() const noexcept { return e_; }
    std::uint64_t degree() const noexcept;
    bool is_one() const noexcept;

    /// True iff this monomial divides `other`.
    bool divides(const Monomial& other) const;
    /// other / this; requires divides(other).
    Monomial quotient_of(const Monomial& other) const;
    Monomial lcm(const Monomial& other) const;
    Monomial times_variable(std::size_t i) const;

    friend Monomial operator*(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial&, const Monomial&) = default;
    /// Plain lexicographic comparison of exponent vectors (for containers).
    friend auto operator<=>(const Monomial&, const Monomial&) = default;

    /// `x^2*y` style, with `1` for the constant monomial.
    std::string to_string(const std::vector<std::string>& names) const;

private:
    std::vector<Exponent> e_;
};

/// Total order comparison. Throws DimensionMismatch on differing lengths.
std::strong_ordering compare_monomials(OrderTag order, const Monomial& u, const Monomial& v);

/// Strict "less" functor for a fixed ordering.
struct MonomialLess {
    OrderTag order;
    bool operator()(const Monomial& a, const Monomial& b) const { return compare_monomials(order, a, b) < 0; }
};

/// Strict "greater" functor: containers keyed by it iterate leading term first.
struct MonomialGreater {
    OrderTag order;
    bool operator()(const Monomial& a, const Monomial& b) const { return compare_monomials(order, a, b) > 0; }
};

/// True iff some element of `generators` divides `m`.
bool in_monomial_ideal(const std::vector<Monomial>& generators, const Monomial& m);

/// Monomials outside the ideal spanned by `leading_monomials`, sorted
/// increasingly for `order`. Throws NotZeroDimensional when some variable has
/// no pure power among the generators.
std::vector<Monomial> staircase(const std::vector<Monomial>& leading_monomials, OrderTag order);

}  // namespace pfglm
