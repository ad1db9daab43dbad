#include "support.hpp"

#include "pfglm/buchberger.hpp"
#include "pfglm/exact_fglm.hpp"
#include "pfglm/random_system.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace testing {

Prec pval(const mpz_class& n, const mpz_class& p) {
    mpz_class m = abs(n);
    Prec v = 0;
    while (m % p == 0) {
        m /= p;
        ++v;
    }
    return v;
}

namespace {

mpz_class bareiss_det(IntMatrix a) {
    const std::size_t n = a.size();
    mpz_class prev = 1;
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t r = k + 1;
            while (r < n && a[r][k] == 0) ++r;
            if (r == n) return 0;
            std::swap(a[k], a[r]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
        prev = a[k][k];
    }
    return sign * a[n - 1][n - 1];
}

void subsets(std::size_t n, std::size_t k, std::vector<std::vector<std::size_t>>& out) {
    std::vector<std::size_t> s(k);
    std::iota(s.begin(), s.end(), 0);
    while (true) {
        out.push_back(s);
        std::size_t i = k;
        while (i > 0 && s[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++s[i - 1];
        for (std::size_t j = i; j < k; ++j) s[j] = s[j - 1] + 1;
    }
}

}  // namespace

std::vector<std::optional<Prec>> elementary_divisor_valuations(const IntMatrix& M, const mpz_class& p) {
    const std::size_t rows = M.size(), cols = rows ? M[0].size() : 0;
    const std::size_t r = std::min(rows, cols);
    std::vector<std::optional<Prec>> out(r);
    Prec prev = 0;
    for (std::size_t k = 1; k <= r; ++k) {
        std::vector<std::vector<std::size_t>> rs, cs;
        subsets(rows, k, rs);
        subsets(cols, k, cs);
        std::optional<Prec> best;
        for (const auto& ri : rs)
            for (const auto& ci : cs) {
                IntMatrix sub(k, std::vector<mpz_class>(k));
                for (std::size_t a = 0; a < k; ++a)
                    for (std::size_t b = 0; b < k; ++b) sub[a][b] = M[ri[a]][ci[b]];
                const mpz_class d = bareiss_det(sub);
                if (d == 0) continue;
                const Prec v = pval(d, p);
                if (!best || v < *best) best = v;
            }
        if (!best) break;
        out[k - 1] = *best - prev;
        prev = *best;
    }
    return out;
}

IntMatrix random_padic_matrix(std::mt19937_64& rng, std::size_t rows, std::size_t cols, unsigned long p,
                              unsigned vmax) {
    std::uniform_int_distribution<unsigned> vdist(0, vmax);
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), p, 8);
    IntMatrix M(rows, std::vector<mpz_class>(cols));
    for (auto& row : M)
        for (auto& e : row) {
            mpz_class u;
            do {
                u = mpz_class(static_cast<unsigned long>(rng() % bound.get_ui()));
            } while (u % p == 0);
            mpz_class pv;
            mpz_ui_pow_ui(pv.get_mpz_t(), p, vdist(rng));
            e = (rng() % 2 ? 1 : -1) * u * pv;
        }
    return M;
}

BallMatrix to_balls(const IntMatrix& M, const Ring& ring, Prec prec) {
    BallMatrix B(ring, M.size(), M.empty() ? 0 : M[0].size());
    for (std::size_t i = 0; i < B.rows(); ++i)
        for (std::size_t j = 0; j < B.cols(); ++j) B(i, j) = Ball::from_integer(ring, M[i][j], prec);
    return B;
}

bool congruent(const Ball& a, const mpq_class& q) {
    if (a.is_exact()) return a.to_rational() == q;
    return Ball::from_rational(*a.ring(), q, a.abs_prec()) == a;
}

bool congruent(const OrderedPoly& f, const ExactPoly& g, std::string* why) {
    std::set<Monomial> support;
    for (const auto& [m, c] : f.terms()) support.insert(m);
    for (const auto& [m, c] : g.terms()) support.insert(m);
    for (const auto& m : support) {
        const mpq_class q = g.coefficient(m);
        const auto it = f.terms().find(m);
        bool ok;
        if (it != f.terms().end()) {
            ok = congruent(it->second, q);
        } else if (is_infinite(f.zero_prec())) {
            ok = q == 0;
        } else {
            ok = congruent(Ball::zero(*f.ring(), f.zero_prec()), q);
        }
        if (!ok) {
            if (why)
                *why = "coefficient of " + m.to_string(default_variable_names(f.nvars())) + ": " +
                       (it != f.terms().end() ? it->second.to_string() : "pruned") + " vs " + q.get_str();
            return false;
        }
    }
    return true;
}

bool congruent(const GroebnerBasis& G, const std::vector<ExactPoly>& exact, std::string* why) {
    if (G.polys.size() != exact.size()) {
        if (why) *why = "different sizes";
        return false;
    }
    std::vector<ExactPoly> e = exact;
    for (auto& g : e) g = g.reordered(G.order);
    std::sort(e.begin(), e.end(), [&](const ExactPoly& a, const ExactPoly& b) {
        return compare_monomials(G.order, a.leading_monomial(), b.leading_monomial()) < 0;
    });
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (G.polys[i].leading_monomial() != e[i].leading_monomial()) {
            if (why) *why = "leading monomials differ";
            return false;
        }
        if (!congruent(G.polys[i], e[i], why)) return false;
    }
    return true;
}

bool agree(const OrderedPoly& f, const OrderedPoly& g) {
    std::set<Monomial> support;
    for (const auto& [m, c] : f.terms()) support.insert(m);
    for (const auto& [m, c] : g.terms()) support.insert(m);
    for (const auto& m : support) {
        const auto fi = f.terms().find(m);
        const auto gi = g.terms().find(m);
        const Ball a = fi != f.terms().end() ? fi->second : Ball::zero(*f.ring(), f.zero_prec());
        const Ball b = gi != g.terms().end() ? gi->second : Ball::zero(*g.ring(), g.zero_prec());
        if (!(a - b).is_zero()) return false;
    }
    return true;
}

bool indistinguishable(const BallMatrix& a, const BallMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    return (a - b).is_zero();
}

GroebnerBasis truncate(const std::vector<ExactPoly>& G, const Ring& ring, Prec N, OrderTag order) {
    std::vector<OrderedPoly> polys;
    for (const auto& g : G) polys.push_back(embed(g.reordered(order), ring, N));
    return GroebnerBasis::from_polys(std::move(polys), order);
}

ExactPoly exact_poly(std::size_t nvars, OrderTag order,
                     const std::vector<std::pair<std::vector<unsigned>, long>>& terms) {
    ExactPoly f(nvars, order);
    for (const auto& [e, c] : terms) f.add_term(Monomial(std::vector<Monomial::Exponent>(e.begin(), e.end())), c);
    return f;
}

std::vector<ExactPoly> points_lex_basis(const std::vector<std::vector<long>>& points) {
    const std::size_t n = points.front().size();
    const std::size_t delta = points.size();
    const OrderTag lex{OrderKind::lex};
    // Univariate polynomials in the last variable as coefficient vectors.
    using Uni = std::vector<mpq_class>;
    auto mul_linear = [](const Uni& f, const mpq_class& a) {
        Uni g(f.size() + 1, 0);
        for (std::size_t k = 0; k < f.size(); ++k) {
            g[k + 1] += f[k];
            g[k] -= a * f[k];
        }
        return g;
    };
    auto to_poly = [&](const Uni& f, ExactPoly& out, const mpq_class& sign) {
        for (std::size_t k = 0; k < f.size(); ++k) {
            if (f[k] == 0) continue;
            Monomial m(n);
            m[n - 1] = static_cast<Monomial::Exponent>(k);
            out.add_term(m, sign * f[k]);
        }
    };
    std::vector<ExactPoly> out;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        Uni h(delta, 0);
        for (std::size_t k = 0; k < delta; ++k) {
            Uni basis{1};
            mpq_class denom = 1;
            for (std::size_t j = 0; j < delta; ++j) {
                if (j == k) continue;
                basis = mul_linear(basis, points[j][n - 1]);
                denom *= points[k][n - 1] - points[j][n - 1];
            }
            for (std::size_t t = 0; t < basis.size(); ++t) h[t] += basis[t] * points[k][i] / denom;
        }
        ExactPoly g(n, lex);
        g.add_term(Monomial::variable(n, i), 1);
        to_poly(h, g, -1);
        out.push_back(std::move(g));
    }
    Uni hn{1};
    for (const auto& pt : points) hn = mul_linear(hn, pt[n - 1]);
    ExactPoly g(n, lex);
    to_poly(hn, g, 1);
    out.push_back(std::move(g));
    return out;
}

std::vector<std::vector<long>> random_points(std::mt19937_64& rng, std::size_t n, std::size_t count, long range) {
    std::uniform_int_distribution<long> dist(-range, range);
    std::set<long> last;
    std::vector<std::vector<long>> pts;
    while (pts.size() < count) {
        std::vector<long> pt(n);
        for (auto& c : pt) c = dist(rng);
        if (!last.insert(pt.back()).second) continue;
        pts.push_back(pt);
    }
    return pts;
}

Fixture random_system_fixture(const std::vector<unsigned>& degrees, bool affine, unsigned long p, Prec coeff_prec,
                              std::uint64_t seed) {
    ExperimentSpec spec;
    spec.degrees = degrees;
    spec.affine = affine;
    spec.prime = p;
    spec.prec = coeff_prec;
    spec.seed = seed;
    Fixture fx;
    fx.name = std::string(affine ? "affine" : "homogeneous") + " d=[";
    for (std::size_t i = 0; i < degrees.size(); ++i) fx.name += (i ? "," : "") + std::to_string(degrees[i]);
    fx.name += "] p=" + std::to_string(p) + " seed=" + std::to_string(seed);
    fx.prime = p;
    fx.nvars = degrees.size();
    fx.grevlex = exact_buchberger(random_system_exact(spec), OrderTag{OrderKind::grevlex});
    return fx;
}

Fixture points_fixture(std::mt19937_64& rng, std::size_t n, std::size_t count, unsigned long p, long range) {
    Fixture fx;
    fx.points = random_points(rng, n, count, range);
    fx.name = "points n=" + std::to_string(n) + " delta=" + std::to_string(count) + " p=" + std::to_string(p);
    fx.prime = p;
    fx.nvars = n;
    fx.grevlex = exact_fglm(points_lex_basis(fx.points), OrderTag{OrderKind::lex}, OrderTag{OrderKind::grevlex});
    return fx;
}

}  // namespace testing
