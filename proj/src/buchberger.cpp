#include "pfglm/buchberger.hpp"

#include "pfglm/errors.hpp"

#include <algorithm>
#include <set>

namespace pfglm {

namespace {

struct Term {
    Monomial m;
    mpz_class c;
};

// Primitive integer polynomial, terms in decreasing order.
struct IPoly {
    std::vector<Term> terms;
    std::uint64_t sugar = 0;

    bool zero() const { return terms.empty(); }
    const Monomial& lm() const { return terms.front().m; }
    const mpz_class& lc() const { return terms.front().c; }
};

struct Context {
    OrderTag order;

    bool greater(const Monomial& a, const Monomial& b) const { return compare_monomials(order, a, b) > 0; }

    void make_primitive(IPoly& f) const {
        if (f.zero()) return;
        mpz_class g = 0;
        for (const auto& t : f.terms) {
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.c.get_mpz_t());
            if (g == 1) break;
        }
        if (f.lc() < 0) g = -g;
        if (g != 1)
            for (auto& t : f.terms) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), g.get_mpz_t());
    }

    // a * f - b * m * g, dropping the cancelled term.
    IPoly combine(const mpz_class& a, const IPoly& f, const mpz_class& b, const Monomial& m, const IPoly& g) const {
        IPoly r;
        r.terms.reserve(f.terms.size() + g.terms.size());
        std::size_t i = 0;
        std::size_t j = 0;
        while (i < f.terms.size() || j < g.terms.size()) {
            if (j == g.terms.size()) {
                r.terms.push_back({f.terms[i].m, a * f.terms[i].c});
                ++i;
                continue;
            }
            Monomial gm = m * g.terms[j].m;
            if (i == f.terms.size() || greater(gm, f.terms[i].m)) {
                r.terms.push_back({std::move(gm), -b * g.terms[j].c});
                ++j;
            } else if (gm == f.terms[i].m) {
                mpz_class c = a * f.terms[i].c - b * g.terms[j].c;
                if (c != 0) r.terms.push_back({f.terms[i].m, std::move(c)});
                ++i;
                ++j;
            } else {
                r.terms.push_back({f.terms[i].m, a * f.terms[i].c});
                ++i;
            }
        }
        return r;
    }

    // Reduction of f by the reducers; only the leading term when !full.
    IPoly reduce(IPoly f, const std::vector<const IPoly*>& reducers, bool full = true) const {
        std::size_t pos = 0;
        while (pos < f.terms.size()) {
            if (!full && pos > 0) break;
            const Monomial& m = f.terms[pos].m;
            const IPoly* g = nullptr;
            for (const IPoly* r : reducers)
                if (r->lm().divides(m)) {
                    g = r;
                    break;
                }
            if (!g) {
                ++pos;
                continue;
            }
            mpz_class h;
            mpz_gcd(h.get_mpz_t(), g->lc().get_mpz_t(), f.terms[pos].c.get_mpz_t());
            const mpz_class a = g->lc() / h;
            const mpz_class b = f.terms[pos].c / h;
            const Monomial q = g->lm().quotient_of(m);
            f.sugar = std::max(f.sugar, g->sugar + q.degree());
            f = combine(a, f, b, q, *g);
            make_primitive(f);
        }
        return f;
    }
};

struct Pair {
    std::size_t i;
    std::size_t j;
    Monomial lcm;
    std::uint64_t sugar;
};

IPoly to_ipoly(const ExactPoly& f, OrderTag order) {
    IPoly r;
    mpz_class den = 1;
    for (const auto& [m, c] : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    const ExactPoly g = f.order() == order ? f : f.reordered(order);
    for (const auto& [m, c] : g.terms()) r.terms.push_back({m, mpz_class(c * den)});
    for (const auto& t : r.terms) r.sugar = std::max(r.sugar, t.m.degree());
    return r;
}

ExactPoly to_exact(const IPoly& f, std::size_t nvars, OrderTag order) {
    ExactPoly r(nvars, order);
    for (const auto& t : f.terms) r.add_term(t.m, mpq_class(t.c));
    r.make_monic();
    return r;
}

}  // namespace

std::uint64_t macaulay_bound(const std::vector<ExactPoly>& F) {
    std::uint64_t d = 1;
    for (const auto& f : F) {
        std::uint64_t deg = 0;
        for (const auto& [m, c] : f.terms()) deg = std::max(deg, m.degree());
        d += deg > 0 ? deg - 1 : 0;
    }
    return d;
}

std::vector<ExactPoly> exact_buchberger(const std::vector<ExactPoly>& F, OrderTag order, const BuchbergerOptions& options) {
    if (F.empty()) throw NotZeroDimensional("no generators");
    const std::size_t n = F.front().nvars();
    const std::uint64_t cutoff = options.degree_cutoff ? options.degree_cutoff : 3 * macaulay_bound(F);
    const Context ctx{order};

    std::vector<IPoly> polys;
    std::vector<bool> active;
    std::vector<Pair> pairs;

    auto reducers = [&]() {
        std::vector<const IPoly*> r;
        for (std::size_t k = 0; k < polys.size(); ++k)
            if (active[k]) r.push_back(&polys[k]);
        return r;
    };

    auto unit_ideal = [&]() {
        ExactPoly one(n, order);
        one.add_term(Monomial(n), 1);
        return std::vector<ExactPoly>{one};
    };

    // Gebauer-Moeller update with the new element h = polys.back().
    auto update = [&]() {
        const std::size_t h = polys.size() - 1;
        const Monomial& lh = polys[h].lm();
        std::vector<Pair> C;
        for (std::size_t g = 0; g < h; ++g)
            if (active[g]) {
                Monomial l = lh.lcm(polys[g].lm());
                const std::uint64_t sugar = std::max(polys[h].sugar + lh.quotient_of(l).degree(),
                                                      polys[g].sugar + polys[g].lm().quotient_of(l).degree());
                C.push_back({g, h, std::move(l), sugar});
            }
        auto coprime = [&](const Pair& p) { return p.lcm == polys[p.i].lm() * polys[p.j].lm(); };
        std::vector<Pair> D;
        for (std::size_t a = 0; a < C.size(); ++a) {
            bool keep = coprime(C[a]);
            if (!keep) {
                keep = true;
                for (std::size_t b = a + 1; b < C.size() && keep; ++b)
                    if (C[b].lcm.divides(C[a].lcm)) keep = false;
                for (std::size_t b = 0; b < D.size() && keep; ++b)
                    if (D[b].lcm.divides(C[a].lcm)) keep = false;
            }
            if (keep) D.push_back(C[a]);
        }
        std::vector<Pair> kept;
        for (auto& p : pairs) {
            const bool drop = lh.divides(p.lcm) && lh.lcm(polys[p.i].lm()) != p.lcm && lh.lcm(polys[p.j].lm()) != p.lcm;
            if (!drop) kept.push_back(std::move(p));
        }
        for (auto& p : D)
            if (!coprime(p)) kept.push_back(std::move(p));
        pairs = std::move(kept);
        for (std::size_t g = 0; g < h; ++g)
            if (active[g] && lh.divides(polys[g].lm())) active[g] = false;
    };

    auto add = [&](IPoly f) -> bool {
        ctx.make_primitive(f);
        if (f.lm().is_one()) return false;
        polys.push_back(std::move(f));
        active.push_back(true);
        update();
        return true;
    };

    {
        std::vector<IPoly> input;
        for (const auto& f : F) {
            IPoly p = to_ipoly(f, order);
            if (!p.zero()) input.push_back(std::move(p));
        }
        if (input.empty()) throw NotZeroDimensional("all generators are zero");
        for (auto& f : input) {
            IPoly r = ctx.reduce(std::move(f), reducers());
            if (r.zero()) continue;
            if (!add(std::move(r))) return unit_ideal();
        }
    }

    while (!pairs.empty()) {
        auto best = std::min_element(pairs.begin(), pairs.end(), [&](const Pair& a, const Pair& b) {
            if (a.sugar != b.sugar) return a.sugar < b.sugar;
            return compare_monomials(order, a.lcm, b.lcm) < 0;
        });
        Pair p = std::move(*best);
        pairs.erase(best);
        if (p.lcm.degree() > cutoff) throw DegreeBlowup("pair degree " + std::to_string(p.lcm.degree()) + " exceeds cutoff");
        const IPoly& f = polys[p.i];
        const IPoly& g = polys[p.j];
        mpz_class h;
        mpz_gcd(h.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
        IPoly fs;
        const Monomial qf = f.lm().quotient_of(p.lcm);
        for (const auto& t : f.terms) fs.terms.push_back({qf * t.m, mpz_class(g.lc() / h * t.c)});
        fs.sugar = p.sugar;
        IPoly s = ctx.combine(1, fs, f.lc() / h, g.lm().quotient_of(p.lcm), g);
        s.sugar = p.sugar;
        IPoly r = ctx.reduce(std::move(s), reducers(), false);
        if (r.zero()) continue;
        if (!add(std::move(r))) return unit_ideal();
    }

    // Minimal basis, then inter-reduce tails.
    std::vector<IPoly> minimal;
    for (std::size_t k = 0; k < polys.size(); ++k)
        if (active[k]) minimal.push_back(polys[k]);
    std::sort(minimal.begin(), minimal.end(),
              [&](const IPoly& a, const IPoly& b) { return compare_monomials(order, a.lm(), b.lm()) < 0; });
    std::vector<ExactPoly> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<const IPoly*> others;
        for (std::size_t o = 0; o < minimal.size(); ++o)
            if (o != k) others.push_back(&minimal[o]);
        out.push_back(to_exact(ctx.reduce(minimal[k], others), n, order));
    }
    exact_staircase(out);
    return out;
}

}  // namespace pfglm
