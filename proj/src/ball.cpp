#include "pfglm/ball.hpp"

#include "pfglm/errors.hpp"
#include "pfglm/field_ops.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

namespace pfglm {

namespace field_ops {
Counts& local() noexcept {
    thread_local Counts counts;
    return counts;
}
}  // namespace field_ops

namespace {

const Ring* pick_ring(const Ball& a, const Ball& b) {
    const Ring* r = a.ring() ? a.ring() : b.ring();
    if (a.ring() && b.ring() && a.ring() != b.ring()) throw DimensionMismatch("balls from different rings");
    return r;
}

// Removes every factor p from `u` and returns how many were removed.
Prec strip_uniformizer(mpz_class& u, const mpz_class& p) {
    if (u == 0) return 0;
    if (p == 2) {
        const auto k = mpz_scan1(u.get_mpz_t(), 0);
        if (k) mpz_tdiv_q_2exp(u.get_mpz_t(), u.get_mpz_t(), k);
        return static_cast<Prec>(k);
    }
    return static_cast<Prec>(mpz_remove(u.get_mpz_t(), u.get_mpz_t(), p.get_mpz_t()));
}

}  // namespace

Ball Ball::normalized(const Ring* ring, mpz_class unit, Prec val, Prec prec) {
    if (is_infinite(prec)) {
        if (unit == 0) return Ball(ring, 0, kInfinity, kInfinity);
        val += strip_uniformizer(unit, ring->prime());
        return Ball(ring, std::move(unit), val, kInfinity);
    }
    if (unit == 0 || val >= prec) return Ball(ring, 0, prec, prec);
    val += strip_uniformizer(unit, ring->prime());
    if (val >= prec) return Ball(ring, 0, prec, prec);
    const Prec rel = prec - val;
    if (ring->prime() == 2) {
        mpz_fdiv_r_2exp(unit.get_mpz_t(), unit.get_mpz_t(), static_cast<mp_bitcnt_t>(rel));
    } else {
        mpz_fdiv_r(unit.get_mpz_t(), unit.get_mpz_t(), ring->pow(rel).get_mpz_t());
    }
    return Ball(ring, std::move(unit), val, prec);
}

Ball Ball::exact(const Ring& ring, const mpz_class& n) { return normalized(&ring, n, 0, kInfinity); }

Ball Ball::uniformizer_power(const Ring& ring, Prec v) { return Ball(&ring, 1, v, kInfinity); }

Ball Ball::from_integer(const Ring& ring, const mpz_class& n, Prec prec) { return normalized(&ring, n, 0, prec); }

Ball Ball::from_parts(const Ring& ring, mpz_class unit, Prec val, Prec prec) {
    return normalized(&ring, std::move(unit), val, prec);
}

Ball Ball::zero(const Ring& ring, Prec prec) {
    if (is_infinite(prec)) return Ball(&ring, 0, kInfinity, kInfinity);
    return Ball(&ring, 0, prec, prec);
}

Ball Ball::from_rational(const Ring& ring, const mpq_class& q, Prec prec) {
    if (q == 0) return zero(ring, prec);
    mpz_class num = q.get_num();
    mpz_class den = q.get_den();
    const mpz_class& p = ring.prime();
    const Prec vn = strip_uniformizer(num, p);
    const Prec vd = strip_uniformizer(den, p);
    const Prec val = vn - vd;
    if (is_infinite(prec)) {
        if (den != 1) throw ZeroDivision("exact rational with a denominator prime to p: " + q.get_str());
        return Ball(&ring, std::move(num), val, kInfinity);
    }
    if (val >= prec) return zero(ring, prec);
    const mpz_class modulus = ring.pow(prec - val);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t());
    return normalized(&ring, num * inv, val, prec);
}

Ball Ball::lifted() const {
    if (unit_ == 0) return Ball(ring_, 0, kInfinity, kInfinity);
    return Ball(ring_, unit_, val_, kInfinity);
}

Ball Ball::with_prec(Prec prec) const {
    if (prec >= prec_) return *this;
    return normalized(ring_, unit_, unit_ == 0 ? prec : val_, prec);
}

Ball Ball::shifted(Prec k) const {
    if (is_exact_zero()) return *this;
    if (unit_ == 0) return Ball(ring_, 0, prec_add(prec_, k), prec_add(prec_, k));
    return Ball(ring_, unit_, val_ + k, prec_add(prec_, k));
}

mpq_class Ball::to_rational() const {
    if (unit_ == 0) return 0;
    if (val_ >= 0) return mpq_class(unit_ * ring_->pow(val_));
    mpq_class r(unit_, ring_->pow(-val_));
    r.canonicalize();
    return r;
}

bool Ball::is_one() const { return unit_ == 1 && val_ == 0; }

Ball Ball::operator-() const {
    if (unit_ == 0) return *this;
    if (is_exact()) return Ball(ring_, -unit_, val_, prec_);
    return normalized(ring_, -unit_, val_, prec_);
}

Ball Ball::inverse() const {
    ++field_ops::local().inv;
    if (unit_ == 0) throw ZeroDivision("inverse of a ball indistinguishable from zero: " + to_string());
    Prec rel = relative_prec();
    if (is_exact()) {
        if (unit_ == 1 || unit_ == -1) return Ball(ring_, unit_, -val_, kInfinity);
        rel = ring_->exact_inverse_precision();
    }
    const mpz_class modulus = ring_->pow(rel);
    mpz_class inv;
    mpz_invert(inv.get_mpz_t(), unit_.get_mpz_t(), modulus.get_mpz_t());
    return normalized(ring_, std::move(inv), -val_, rel - val_);
}

Ball operator+(const Ball& a, const Ball& b) {
    ++field_ops::local().add;
    if (a.is_exact_zero()) return b.ring_ ? b : Ball(a.ring_, 0, kInfinity, kInfinity);
    if (b.is_exact_zero()) return a;
    const Ring* ring = pick_ring(a, b);
    const Prec prec = std::min(a.prec_, b.prec_);
    const bool a_sig = a.unit_ != 0 && a.val_ < prec;
    const bool b_sig = b.unit_ != 0 && b.val_ < prec;
    if (!a_sig && !b_sig) return Ball(ring, 0, prec, prec);
    if (!a_sig) return b.with_prec(prec);
    if (!b_sig) return a.with_prec(prec);
    const Prec v = std::min(a.val_, b.val_);
    mpz_class u;
    if (a.val_ == b.val_) {
        u = a.unit_ + b.unit_;
    } else if (a.val_ < b.val_) {
        u = a.unit_ + b.unit_ * ring->pow(b.val_ - v);
    } else {
        u = a.unit_ * ring->pow(a.val_ - v) + b.unit_;
    }
    return Ball::normalized(ring, std::move(u), v, prec);
}

Ball operator-(const Ball& a, const Ball& b) { return a + (-b); }

Ball operator*(const Ball& a, const Ball& b) {
    ++field_ops::local().mul;
    const Ring* ring = pick_ring(a, b);
    if (a.is_exact_zero() || b.is_exact_zero()) return Ball(ring, 0, kInfinity, kInfinity);
    const Prec prec = std::min(prec_add(a.prec_, b.val_), prec_add(b.prec_, a.val_));
    if (a.unit_ == 0 || b.unit_ == 0) return Ball(ring, 0, prec, prec);
    if (a.unit_ == 1 && is_infinite(prec)) return Ball(ring, b.unit_, a.val_ + b.val_, prec);
    return Ball::normalized(ring, a.unit_ * b.unit_, a.val_ + b.val_, prec);
}

bool operator==(const Ball& a, const Ball& b) {
    if (a.is_exact_zero() && b.is_exact_zero()) return true;
    return a.ring_ == b.ring_ && a.prec_ == b.prec_ && a.val_ == b.val_ && a.unit_ == b.unit_;
}

std::string Ball::to_string() const {
    std::ostringstream os;
    const std::string p = ring_ ? ring_->to_string() : "p";
    if (unit_ == 0) {
        os << 0;
    } else if (val_ >= 0) {
        os << mpz_class(unit_ * ring_->pow(val_)).get_str();
    } else {
        os << unit_.get_str() << "/" << p << "^" << -val_;
    }
    if (!is_exact()) os << " + O(" << p << "^" << prec_ << ")";
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Ball& b) { return os << b.to_string(); }

}  // namespace pfglm
