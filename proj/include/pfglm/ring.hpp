#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

namespace pfglm {

/// Absolute precisions and valuations. Values at or above kInfinity are
/// treated as +infinity (exact scalars).
using Prec = std::int64_t;
inline constexpr Prec kInfinity = std::numeric_limits<Prec>::max() / 4;

constexpr bool is_infinite(Prec p) noexcept { return p >= kInfinity; }

/// Saturating sum that keeps infinity absorbing.
constexpr Prec prec_add(Prec a, Prec b) noexcept {
    if (is_infinite(a) || is_infinite(b)) return kInfinity;
    return a + b;
}

/// The p-adic field Q_p with uniformizer p.
///
/// Rings are interned: `Ring::of(p)` always returns the same object for a
/// given prime, and the object lives for the whole program. Balls hold a
/// plain pointer to their ring.
class Ring {
public:
    /// Returns the interned ring for `p`. Throws InvalidPrime if `p` fails a
    /// probabilistic primality test.
    static const Ring& of(const mpz_class& p);
    static const Ring& of(unsigned long p) { return of(mpz_class(p)); }

    const mpz_class& prime() const noexcept { return p_; }

    /// p^k for k >= 0.
    mpz_class pow(Prec k) const;

    /// Relative precision given to the inverse of an exact scalar whose unit
    /// part is not +-1 (such an inverse has no finite representation).
    Prec exact_inverse_precision() const noexcept { return 1024; }

    std::string to_string() const { return p_.get_str(); }

    Ring(const Ring&) = delete;
    Ring& operator=(const Ring&) = delete;

private:
    explicit Ring(mpz_class p);

    mpz_class p_;
    std::vector<mpz_class> powers_;
};

}  // namespace pfglm
