#include "pfglm/hensel.hpp"

#include "pfglm/errors.hpp"

#include <algorithm>

namespace pfglm {

namespace {

// Dense polynomials over F_p, coefficients in increasing degree.
using Fp = std::vector<mpz_class>;

void trim(Fp& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Fp reduce(Fp a, const mpz_class& p) {
    for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), p.get_mpz_t());
    trim(a);
    return a;
}

mpz_class inverse_mod(const mpz_class& a, const mpz_class& p) {
    mpz_class r;
    mpz_invert(r.get_mpz_t(), a.get_mpz_t(), p.get_mpz_t());
    return r;
}

// Remainder of a by b (b nonzero).
Fp rem(Fp a, const Fp& b, const mpz_class& p) {
    const mpz_class lead_inv = inverse_mod(b.back(), p);
    while (a.size() >= b.size()) {
        const mpz_class c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = (a[shift + k] - c * b[k]) % p;
        a = reduce(std::move(a), p);
    }
    return a;
}

Fp quo(Fp a, const Fp& b, const mpz_class& p) {
    const mpz_class lead_inv = inverse_mod(b.back(), p);
    Fp q(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, mpz_class(0));
    while (a.size() >= b.size()) {
        const mpz_class c = a.back() * lead_inv % p;
        const std::size_t shift = a.size() - b.size();
        q[shift] = c;
        for (std::size_t k = 0; k < b.size(); ++k) a[shift + k] = (a[shift + k] - c * b[k]) % p;
        a = reduce(std::move(a), p);
    }
    return reduce(std::move(q), p);
}

Fp mul(const Fp& a, const Fp& b, const mpz_class& p) {
    if (a.empty() || b.empty()) return {};
    Fp r(a.size() + b.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    return reduce(std::move(r), p);
}

Fp gcd(Fp a, Fp b, const mpz_class& p) {
    while (!b.empty()) {
        Fp r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty()) {
        const mpz_class inv = inverse_mod(a.back(), p);
        for (auto& c : a) c = c * inv % p;
    }
    return a;
}

// base^e mod f.
Fp powmod(Fp base, mpz_class e, const Fp& f, const mpz_class& p) {
    Fp result{1};
    base = rem(std::move(base), f, p);
    while (e > 0) {
        if (mpz_odd_p(e.get_mpz_t())) result = rem(mul(result, base, p), f, p);
        base = rem(mul(base, base, p), f, p);
        e >>= 1;
    }
    return result;
}

mpz_class eval(const Fp& a, const mpz_class& x, const mpz_class& p) {
    mpz_class r = 0;
    for (std::size_t k = a.size(); k-- > 0;) r = (r * x + a[k]) % p;
    if (r < 0) r += p;
    return r;
}

// Roots of a squarefree product of distinct linear factors.
void split(const Fp& f, const mpz_class& p, gmp_randclass& rng, std::vector<mpz_class>& out) {
    if (f.size() <= 1) return;
    if (f.size() == 2) {
        mpz_class r = -f[0] * inverse_mod(f[1], p) % p;
        if (r < 0) r += p;
        out.push_back(r);
        return;
    }
    for (;;) {
        const mpz_class a = rng.get_z_range(p);
        Fp g = powmod(Fp{a, 1}, (p - 1) / 2, f, p);
        if (g.empty()) g = {mpz_class(-1)};
        else g[0] -= 1;
        g = reduce(std::move(g), p);
        Fp d = gcd(f, g, p);
        if (d.size() > 1 && d.size() < f.size()) {
            split(d, p, rng, out);
            split(quo(f, d, p), p, rng, out);
            return;
        }
    }
}

// Evaluates the polynomial with Ball coefficients (increasing degree) at x.
Ball horner(const std::vector<Ball>& c, const Ball& x) {
    Ball r = c.back();
    for (std::size_t k = c.size() - 1; k-- > 0;) r = r * x + c[k];
    return r;
}

}  // namespace

std::vector<std::pair<mpz_class, unsigned>> roots_mod_p(const std::vector<mpz_class>& coeffs, const mpz_class& p) {
    const Fp f = reduce(coeffs, p);
    std::vector<mpz_class> roots;
    if (f.size() <= 1) return {};
    if (p < 4096) {
        for (mpz_class x = 0; x < p; ++x)
            if (eval(f, x, p) == 0) roots.push_back(x);
    } else {
        // gcd(f, y^p - y) is the product of the distinct linear factors.
        Fp yp = powmod(Fp{0, 1}, p, f, p);
        if (yp.size() < 2) yp.resize(2, mpz_class(0));
        yp[1] -= 1;
        gmp_randclass rng(gmp_randinit_default);
        rng.seed(12345);
        split(gcd(f, reduce(std::move(yp), p), p), p, rng, roots);
        std::sort(roots.begin(), roots.end());
    }
    std::vector<std::pair<mpz_class, unsigned>> out;
    for (const auto& r : roots) {
        unsigned mult = 0;
        Fp g = f;
        const Fp lin{mpz_class(-r), 1};
        while (g.size() > 1 && eval(g, r, p) == 0) {
            g = quo(g, reduce(lin, p), p);
            ++mult;
        }
        out.emplace_back(r, mult);
    }
    return out;
}

LiftedRoots hensel_lift_roots(const GroebnerBasis& shape_basis, Prec target_prec) {
    const GroebnerBasis& G = shape_basis;
    const std::size_t n = G.nvars;
    const Ring& ring = *G.ring;
    const mpz_class& p = ring.prime();

    const OrderedPoly* hn = nullptr;
    std::vector<const OrderedPoly*> xi(n, nullptr);
    for (const auto& g : G.polys) {
        const Monomial& lm = g.leading_monomial();
        bool pure_last = true;
        for (std::size_t k = 0; k + 1 < n; ++k)
            if (lm[k] != 0) pure_last = false;
        if (pure_last) {
            hn = &g;
            continue;
        }
        for (std::size_t k = 0; k + 1 < n; ++k)
            if (lm == Monomial::variable(n, k)) xi[k] = &g;
    }
    if (!hn) throw NotShapePosition("no univariate polynomial in the last variable");
    for (std::size_t k = 0; k + 1 < n; ++k)
        if (!xi[k]) throw NotShapePosition("variable " + G.names[k] + " is not solved for");

    const std::size_t deg = hn->leading_monomial()[n - 1];
    std::vector<Ball> h(deg + 1, Ball::zero(ring, hn->zero_prec()));
    for (const auto& [m, c] : hn->terms()) h[m[n - 1]] = c;
    Prec minval = 0;
    for (const auto& c : h)
        if (!c.is_zero()) minval = std::min(minval, c.valuation().value);
    for (auto& c : h) c = c.shifted(-minval);
    std::vector<Ball> dh;
    for (std::size_t k = 1; k <= deg; ++k) dh.push_back(h[k] * Ball::exact(ring, static_cast<long>(k)));

    Prec avail = target_prec;
    for (const auto& c : h) avail = std::min(avail, c.abs_prec());

    std::vector<mpz_class> residue;
    for (const auto& c : h) {
        if (c.is_zero() || c.valuation().value > 0) residue.push_back(0);
        else residue.push_back(c.lifted().to_rational().get_num());
    }

    LiftedRoots out;
    for (const auto& [r, mult] : roots_mod_p(residue, p)) {
        if (mult > 1) {
            for (unsigned k = 0; k < mult; ++k) out.singular.push_back({r, mult});
            continue;
        }
        mpz_class x = r;
        for (Prec reached = 1; reached < avail;) {
            const Ball xb = Ball::exact(ring, x);
            const Ball hx = horner(h, xb);
            if (hx.is_zero() || hx.valuation().value >= avail) break;
            const Ball step = (hx * horner(dh, xb).inverse()).lifted();
            x = (xb - step).to_rational().get_num();
            mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), ring.pow(avail).get_mpz_t());
            reached *= 2;
        }
        std::vector<Ball> point(n);
        point[n - 1] = Ball::from_integer(ring, x, avail);
        for (std::size_t k = 0; k + 1 < n; ++k) {
            Ball v = Ball::zero(ring, xi[k]->zero_prec());
            for (const auto& [m, c] : xi[k]->terms()) {
                if (m == Monomial::variable(n, k)) continue;
                Ball t = -c;
                for (Monomial::Exponent e = 0; e < m[n - 1]; ++e) t *= point[n - 1];
                v += t;
            }
            point[k] = v.with_prec(target_prec);
        }
        out.points.push_back(std::move(point));
    }
    return out;
}

}  // namespace pfglm
