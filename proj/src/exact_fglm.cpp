#include "pfglm/exact_fglm.hpp"

#include "pfglm/errors.hpp"

#include <algorithm>

namespace pfglm {

namespace {

using QVector = std::vector<mpq_class>;

// Echelon form of the accepted normal forms; each row remembers which
// combination of accepted monomials produced it.
struct Echelon {
    std::vector<QVector> rows;
    std::vector<QVector> combos;
    std::vector<std::size_t> pivots;

    // Reduces v (with combination c) against the rows; returns true if v
    // became zero, leaving the combination in c.
    bool reduce(QVector& v, QVector& c) const {
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const mpq_class f = v[pivots[r]];
            if (f == 0) continue;
            for (std::size_t k = 0; k < v.size(); ++k)
                if (rows[r][k] != 0) v[k] -= f * rows[r][k];
            for (std::size_t k = 0; k < combos[r].size(); ++k)
                if (combos[r][k] != 0) c[k] -= f * combos[r][k];
        }
        return std::all_of(v.begin(), v.end(), [](const mpq_class& x) { return x == 0; });
    }

    void add(QVector v, QVector c) {
        std::size_t p = 0;
        while (v[p] == 0) ++p;
        const mpq_class inv = 1 / v[p];
        for (auto& x : v) x *= inv;
        for (auto& x : c) x *= inv;
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const mpq_class f = rows[r][p];
            if (f == 0) continue;
            for (std::size_t k = 0; k < v.size(); ++k) rows[r][k] -= f * v[k];
            combos[r].resize(c.size(), 0);
            for (std::size_t k = 0; k < c.size(); ++k) combos[r][k] -= f * c[k];
        }
        rows.push_back(std::move(v));
        combos.push_back(std::move(c));
        pivots.push_back(p);
    }
};

}  // namespace

std::vector<ExactPoly> exact_fglm(const std::vector<ExactPoly>& G0, OrderTag order1, OrderTag order2) {
    if (G0.empty()) throw NotZeroDimensional("empty basis");
    const std::size_t n = G0.front().nvars();
    std::vector<ExactPoly> G;
    for (const auto& g : G0) G.push_back(g.order() == order1 ? g : g.reordered(order1));
    const std::vector<Monomial> stairs = exact_staircase(G);
    const std::size_t delta = stairs.size();

    auto nf_vector = [&](const Monomial& m) {
        ExactPoly f(n, order1);
        f.add_term(m, 1);
        const ExactPoly r = exact_normal_form(G, f);
        QVector v(delta, 0);
        for (const auto& [mo, c] : r.terms()) {
            const auto it = std::lower_bound(stairs.begin(), stairs.end(), mo, MonomialLess{order1});
            v[static_cast<std::size_t>(it - stairs.begin())] = c;
        }
        return v;
    };

    std::vector<Monomial> B2;
    std::vector<ExactPoly> G2;
    Echelon ech;
    std::vector<Monomial> L{Monomial(n)};
    const MonomialLess less{order2};
    while (!L.empty()) {
        const Monomial m = L.front();
        L.erase(L.begin());
        QVector v = nf_vector(m);
        QVector c(B2.size(), 0);
        if (ech.reduce(v, c)) {
            ExactPoly g(n, order2);
            g.add_term(m, 1);
            for (std::size_t k = 0; k < B2.size(); ++k) g.add_term(B2[k], c[k]);
            G2.push_back(std::move(g));
            std::erase_if(L, [&](const Monomial& u) { return m.divides(u); });
            continue;
        }
        c.push_back(1);
        ech.add(std::move(v), std::move(c));
        B2.push_back(m);
        for (std::size_t i = 0; i < n; ++i) {
            Monomial u = m.times_variable(i);
            if (std::any_of(G2.begin(), G2.end(), [&](const ExactPoly& g) { return g.leading_monomial().divides(u); }))
                continue;
            auto it = std::lower_bound(L.begin(), L.end(), u, less);
            if (it == L.end() || *it != u) L.insert(it, std::move(u));
        }
    }
    if (B2.size() != delta) throw Error("exact change of ordering lost the staircase");
    std::sort(G2.begin(), G2.end(), [&](const ExactPoly& a, const ExactPoly& b) {
        return compare_monomials(order2, a.leading_monomial(), b.leading_monomial()) < 0;
    });
    return G2;
}

}  // namespace pfglm
