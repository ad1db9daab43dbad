#pragma once

#include "pfglm/ring.hpp"

#include <gmpxx.h>

#include <iosfwd>
#include <string>

namespace pfglm {

/// Valuation of a ball: either known exactly, or only bounded below (the ball
/// is indistinguishable from zero at its precision).
struct Valuation {
    bool known = false;
    Prec value = kInfinity;  // the valuation, or its lower bound

    friend bool operator==(const Valuation&, const Valuation&) = default;
};

/// An element of Q_p known modulo p^N.
///
/// Stored as unit * p^val + O(p^abs_prec) with the unit coprime to p and
/// reduced into [0, p^(abs_prec - val)). A ball with no significant digit
/// stores unit 0 and val == abs_prec. Exact scalars (abs_prec infinite) keep
/// an unreduced signed unit.
class Ball {
public:
    /// Exact zero with no ring attached; combines with any ring.
    Ball() = default;

    static Ball exact(const Ring& ring, const mpz_class& n);
    static Ball exact(const Ring& ring, long n) { return exact(ring, mpz_class(n)); }
    /// Exact p^v (v may be negative).
    static Ball uniformizer_power(const Ring& ring, Prec v);
    static Ball from_integer(const Ring& ring, const mpz_class& n, Prec prec);
    /// The rational q as an element of Q_p at absolute precision `prec`.
    /// With prec == kInfinity the denominator must be a power of p.
    static Ball from_rational(const Ring& ring, const mpq_class& q, Prec prec);
    static Ball zero(const Ring& ring, Prec prec);
    /// unit * p^val + O(p^prec), normalized.
    static Ball from_parts(const Ring& ring, mpz_class unit, Prec val, Prec prec);

    const Ring* ring() const noexcept { return ring_; }
    Prec abs_prec() const noexcept { return prec_; }
    bool is_exact() const noexcept { return is_infinite(prec_); }

    /// True iff the stored value is 0 modulo p^abs_prec.
    bool is_zero() const noexcept { return unit_ == 0; }
    bool is_exact_zero() const noexcept { return unit_ == 0 && is_exact(); }

    Valuation valuation() const noexcept { return {unit_ != 0, val_}; }
    /// The valuation when known, otherwise abs_prec.
    Prec valuation_lower_bound() const noexcept { return val_; }
    /// abs_prec - val for a ball with a significant digit.
    Prec relative_prec() const noexcept { return is_exact() ? kInfinity : prec_ - val_; }

    const mpz_class& unit() const noexcept { return unit_; }

    /// The exact scalar equal to this ball's stored representative.
    Ball lifted() const;
    /// Same value, precision lowered to min(abs_prec, prec).
    Ball with_prec(Prec prec) const;
    /// This ball times the exact p^k.
    Ball shifted(Prec k) const;
    /// The stored representative as a rational number.
    mpq_class to_rational() const;
    bool is_one() const;

    Ball operator-() const;
    Ball inverse() const;

    friend Ball operator+(const Ball& a, const Ball& b);
    friend Ball operator-(const Ball& a, const Ball& b);
    friend Ball operator*(const Ball& a, const Ball& b);
    friend Ball operator/(const Ball& a, const Ball& b) { return a * b.inverse(); }
    Ball& operator+=(const Ball& b) { return *this = *this + b; }
    Ball& operator-=(const Ball& b) { return *this = *this - b; }
    Ball& operator*=(const Ball& b) { return *this = *this * b; }

    /// Canonical equality: same ring, same precision, same reduced value.
    friend bool operator==(const Ball& a, const Ball& b);

    /// `c + O(p^N)`, `u/p^k + O(p^N)` for negative valuation, bare `c` when exact.
    std::string to_string() const;

private:
    Ball(const Ring* ring, mpz_class unit, Prec val, Prec prec)
        : ring_(ring), unit_(std::move(unit)), val_(val), prec_(prec) {}

    static Ball normalized(const Ring* ring, mpz_class unit, Prec val, Prec prec);

    const Ring* ring_ = nullptr;
    mpz_class unit_{0};
    Prec val_ = kInfinity;
    Prec prec_ = kInfinity;
};

inline Ball ball_add(const Ball& a, const Ball& b) { return a + b; }
inline Ball ball_mul(const Ball& a, const Ball& b) { return a * b; }
inline Ball ball_inv(const Ball& a) { return a.inverse(); }
inline Valuation valuation(const Ball& a) { return a.valuation(); }
inline bool is_indistinguishable_from_zero(const Ball& a) { return a.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Ball& b);

}  // namespace pfglm
