#include "pfglm/groebner.hpp"

#include "pfglm/errors.hpp"

#include <algorithm>

namespace pfglm {

namespace {

// Division with remainder; divisors are monic with distinct leading monomials.
OrderedPoly reduce(const std::vector<OrderedPoly>& divisors, const OrderedPoly& f, OrderTag order) {
    OrderedPoly work = f.order() == order ? f : f.reordered(order);
    OrderedPoly rem(*f.ring(), f.nvars(), order);
    rem.note_zero_prec(work.zero_prec());
    while (!work.is_zero()) {
        auto it = work.terms().begin();
        const Monomial m = it->first;
        const Ball c = it->second;
        const OrderedPoly* g = nullptr;
        for (const auto& d : divisors)
            if (d.leading_monomial().divides(m)) {
                g = &d;
                break;
            }
        if (!g) {
            rem.set_term(m, c);
            work.erase(m);
            continue;
        }
        const Monomial q = g->leading_monomial().quotient_of(m);
        work.erase(m);
        auto tail = g->terms().begin();
        for (++tail; tail != g->terms().end(); ++tail) work.add_term(q * tail->first, -c * tail->second);
        if (!is_infinite(g->zero_prec())) work.note_zero_prec(prec_add(g->zero_prec(), c.valuation_lower_bound()));
        // The leading coefficient is 1 up to its precision.
        if (!g->leading_coefficient().is_exact())
            work.note_zero_prec(prec_add(g->leading_coefficient().abs_prec(), c.valuation_lower_bound()));
    }
    rem.note_zero_prec(work.zero_prec());
    return rem;
}

}  // namespace

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
    std::vector<Monomial> lms;
    for (const auto& g : polys) lms.push_back(g.leading_monomial());
    return lms;
}

Prec GroebnerBasis::min_prec() const {
    Prec m = kInfinity;
    for (const auto& g : polys) m = std::min(m, g.min_prec());
    return m;
}

std::size_t GroebnerBasis::index_of_leading(const Monomial& m) const {
    for (std::size_t k = 0; k < polys.size(); ++k)
        if (polys[k].leading_monomial() == m) return k;
    return npos;
}

std::size_t GroebnerBasis::staircase_index(const Monomial& m) const {
    auto it = std::lower_bound(staircase.begin(), staircase.end(), m, MonomialLess{order});
    if (it == staircase.end() || *it != m) return npos;
    return static_cast<std::size_t>(it - staircase.begin());
}

Prec basis_beta(const std::vector<OrderedPoly>& polys) {
    Prec beta = kInfinity;
    for (const auto& g : polys) {
        if (g.is_zero()) continue;
        auto it = g.terms().begin();
        for (++it; it != g.terms().end(); ++it) beta = std::min(beta, it->second.valuation().value);
    }
    return is_infinite(beta) ? 0 : beta;
}

GroebnerBasis GroebnerBasis::from_polys(std::vector<OrderedPoly> polys, OrderTag order, std::vector<std::string> names) {
    if (polys.empty()) throw NotZeroDimensional("empty basis");
    GroebnerBasis G;
    G.ring = polys.front().ring();
    G.nvars = polys.front().nvars();
    G.order = order;
    G.names = names.empty() ? default_variable_names(G.nvars) : std::move(names);
    for (auto& g : polys) {
        if (g.ring() != G.ring || g.nvars() != G.nvars) throw DimensionMismatch("basis elements over different rings");
        if (g.order() != order) g = g.reordered(order);
        if (g.is_zero()) throw NotReducedBasis("zero polynomial in basis");
        const Ball& lc = g.leading_coefficient();
        if (!lc.is_one()) throw NotReducedBasis("leading coefficient is not 1: " + lc.to_string());
        if (!lc.is_exact()) g.set_term(g.leading_monomial(), Ball::exact(*G.ring, 1));
    }
    std::sort(polys.begin(), polys.end(), [&](const OrderedPoly& a, const OrderedPoly& b) {
        return compare_monomials(order, a.leading_monomial(), b.leading_monomial()) < 0;
    });
    for (std::size_t a = 0; a < polys.size(); ++a)
        for (std::size_t b = 0; b < polys.size(); ++b) {
            const Monomial& lm = polys[b].leading_monomial();
            for (const auto& [m, c] : polys[a].terms()) {
                if (a == b && m == lm) continue;
                if (lm.divides(m)) throw NotReducedBasis("a term is divisible by a leading monomial");
            }
        }
    G.polys = std::move(polys);
    G.staircase = pfglm::staircase(G.leading_monomials(), order);
    G.beta = basis_beta(G.polys);
    return G;
}

OrderedPoly normal_form(const GroebnerBasis& G, const OrderedPoly& f) { return reduce(G.polys, f, G.order); }

bool is_reduced_groebner(const std::vector<OrderedPoly>& G, OrderTag order) {
    std::vector<OrderedPoly> polys;
    for (const auto& g : G) {
        if (g.is_zero()) return false;
        polys.push_back(g.order() == order ? g : g.reordered(order));
        if (!polys.back().leading_coefficient().is_one()) return false;
    }
    for (std::size_t a = 0; a < polys.size(); ++a)
        for (std::size_t b = 0; b < polys.size(); ++b) {
            const Monomial& lm = polys[b].leading_monomial();
            for (const auto& [m, c] : polys[a].terms()) {
                if (a == b && m == lm) continue;
                if (lm.divides(m)) return false;
            }
        }
    for (std::size_t a = 0; a < polys.size(); ++a)
        for (std::size_t b = a + 1; b < polys.size(); ++b) {
            const Monomial& la = polys[a].leading_monomial();
            const Monomial& lb = polys[b].leading_monomial();
            const Monomial l = la.lcm(lb);
            if (l == la * lb) continue;
            const Ring& ring = *polys[a].ring();
            OrderedPoly s(ring, polys[a].nvars(), order);
            s.add_multiple(Ball::exact(ring, 1), la.quotient_of(l), polys[a]);
            s.add_multiple(Ball::exact(ring, -1), lb.quotient_of(l), polys[b]);
            s.erase(l);
            if (!reduce(polys, s, order).is_zero()) return false;
        }
    return true;
}

}  // namespace pfglm
