#include "pfglm/exact_poly.hpp"

#include "pfglm/errors.hpp"

#include <sstream>

namespace pfglm {

mpq_class ExactPoly::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? mpq_class(0) : it->second;
}

void ExactPoly::add_term(const Monomial& m, const mpq_class& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

ExactPoly ExactPoly::reordered(OrderTag order) const {
    ExactPoly r(nvars_, order);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, c);
    return r;
}

void ExactPoly::make_monic() {
    if (terms_.empty()) return;
    const mpq_class lc = terms_.begin()->second;
    for (auto& [m, c] : terms_) c /= lc;
}

void ExactPoly::add_multiple(const mpq_class& c, const Monomial& m, const ExactPoly& other) {
    for (const auto& [mo, co] : other.terms_) add_term(m * mo, c * co);
}

std::string ExactPoly::to_string(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const mpq_class a = abs(c);
        if (m.is_one()) os << a.get_str();
        else if (a == 1) os << m.to_string(names);
        else os << a.get_str() << '*' << m.to_string(names);
    }
    return os.str();
}

ExactPoly lift_exact(const OrderedPoly& f) {
    ExactPoly r(f.nvars(), f.order());
    for (const auto& [m, c] : f.terms()) {
        if (c.is_exact() || c.is_zero()) {
            r.add_term(m, c.to_rational());
            continue;
        }
        // balanced residue, so -1 + O(p^k) lifts to -1
        const mpz_class mod = c.ring()->pow(c.relative_prec());
        mpz_class u = c.unit();
        if (2 * u > mod) u -= mod;
        const Prec v = c.valuation_lower_bound();
        mpq_class q = v >= 0 ? mpq_class(u * c.ring()->pow(v)) : mpq_class(u, c.ring()->pow(-v));
        q.canonicalize();
        r.add_term(m, q);
    }
    return r;
}

OrderedPoly embed(const ExactPoly& f, const Ring& ring, Prec prec) {
    OrderedPoly r(ring, f.nvars(), f.order());
    for (const auto& [m, c] : f.terms()) r.set_term(m, Ball::from_rational(ring, c, prec));
    return r;
}

ExactPoly exact_normal_form(const std::vector<ExactPoly>& G, const ExactPoly& f) {
    ExactPoly work = f;
    ExactPoly rem(f.nvars(), f.order());
    while (!work.is_zero()) {
        const Monomial m = work.leading_monomial();
        const mpq_class c = work.leading_coefficient();
        const ExactPoly* g = nullptr;
        for (const auto& d : G)
            if (d.leading_monomial().divides(m)) {
                g = &d;
                break;
            }
        work.erase(m);
        if (!g) {
            rem.add_term(m, c);
            continue;
        }
        const Monomial q = g->leading_monomial().quotient_of(m);
        const mpq_class k = c / g->leading_coefficient();
        auto it = g->terms().begin();
        for (++it; it != g->terms().end(); ++it) work.add_term(q * it->first, -k * it->second);
    }
    return rem;
}

std::vector<Monomial> exact_staircase(const std::vector<ExactPoly>& G) {
    if (G.empty()) throw NotZeroDimensional("empty basis");
    std::vector<Monomial> lms;
    for (const auto& g : G) lms.push_back(g.leading_monomial());
    return staircase(lms, G.front().order());
}

}  // namespace pfglm
