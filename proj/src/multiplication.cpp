#include "pfglm/multiplication.hpp"

#include "pfglm/errors.hpp"
#include "pfglm/kernels.hpp"

#include <algorithm>

namespace pfglm {

namespace {

// A staircase element eps and variable l with x_l * eps == u, if any.
bool split_standard(const GroebnerBasis& G, const Monomial& u, std::size_t& l, std::size_t& eps) {
    for (std::size_t i = 0; i < G.nvars; ++i) {
        if (u[i] == 0) continue;
        Monomial q = u;
        --q[i];
        const std::size_t k = G.staircase_index(q);
        if (k != GroebnerBasis::npos) {
            l = i;
            eps = k;
            return true;
        }
    }
    return false;
}

}  // namespace

BallVector staircase_coordinates(const GroebnerBasis& G, const OrderedPoly& f) {
    BallVector v(G.delta(), Ball::zero(*G.ring, kInfinity));
    if (!is_infinite(f.zero_prec()))
        for (auto& x : v) x = Ball::zero(*G.ring, f.zero_prec());
    for (const auto& [m, c] : f.terms()) {
        const std::size_t k = G.staircase_index(m);
        if (k == GroebnerBasis::npos) throw DimensionMismatch("polynomial is not supported on the staircase");
        v[k] = c;
    }
    return v;
}

MultiplicationMatrices multiplication_matrices(const GroebnerBasis& G) {
    const std::size_t n = G.nvars;
    const std::size_t delta = G.delta();
    const Ring& ring = *G.ring;
    MultiplicationMatrices mm;
    mm.T.assign(n, BallMatrix(ring, delta, delta));

    std::vector<Monomial> border;
    for (std::size_t i = 0; i < n; ++i)
        for (const auto& eps : G.staircase) border.push_back(eps.times_variable(i));
    std::sort(border.begin(), border.end(), MonomialLess{G.order});
    border.erase(std::unique(border.begin(), border.end()), border.end());

    const Ball one = Ball::exact(ring, 1);
    for (const auto& u : border) {
        BallVector col;
        const std::size_t su = G.staircase_index(u);
        if (su != GroebnerBasis::npos) {
            col.assign(delta, Ball::zero(ring, kInfinity));
            col[su] = one;
        } else if (const std::size_t g = G.index_of_leading(u); g != GroebnerBasis::npos) {
            OrderedPoly tail = -G.polys[g];
            tail.erase(u);
            col = staircase_coordinates(G, tail);
        } else {
            std::size_t j = n;
            for (std::size_t k = n; k-- > 0;) {
                if (u[k] == 0) continue;
                Monomial v = u;
                --v[k];
                if (G.staircase_index(v) == GroebnerBasis::npos) {
                    j = k;
                    break;
                }
            }
            if (j == n) throw NotReducedBasis("border monomial with no non-standard quotient");
            Monomial v = u;
            --v[j];
            std::size_t l = 0;
            std::size_t eps = 0;
            if (!split_standard(G, v, l, eps)) throw NotReducedBasis("border monomial not reachable from the staircase");
            col = kernels::matvec(mm.T[j], mm.T[l].column(eps));
        }
        for (std::size_t i = 0; i < n; ++i) {
            if (u[i] == 0) continue;
            Monomial q = u;
            --q[i];
            const std::size_t k = G.staircase_index(q);
            if (k != GroebnerBasis::npos) mm.T[i].set_column(k, col);
        }
    }
    return mm;
}

}  // namespace pfglm
