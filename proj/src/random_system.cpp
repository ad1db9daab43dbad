#include "pfglm/random_system.hpp"

#include <algorithm>

namespace pfglm {

std::uint64_t ExperimentSpec::macaulay_bound() const noexcept {
    std::uint64_t d = 1;
    for (auto x : degrees) d += x > 0 ? x - 1 : 0;
    return d;
}

std::vector<Monomial> monomials_of_degree(std::size_t nvars, unsigned d, bool up_to) {
    std::vector<Monomial> out;
    Monomial m(nvars);
    auto rec = [&](auto&& self, std::size_t i, unsigned left) -> void {
        if (i + 1 == nvars) {
            for (unsigned k = up_to ? 0 : left; k <= left; ++k) {
                m[i] = k;
                out.push_back(m);
            }
            m[i] = 0;
            return;
        }
        for (unsigned k = 0; k <= left; ++k) {
            m[i] = k;
            self(self, i + 1, left - k);
        }
        m[i] = 0;
    };
    if (nvars > 0) rec(rec, 0, d);
    std::sort(out.begin(), out.end(), MonomialGreater{OrderTag{OrderKind::grevlex}});
    return out;
}

std::vector<ExactPoly> random_system_exact(const ExperimentSpec& spec, std::uint64_t trial) {
    const std::size_t n = spec.nvars();
    gmp_randclass rng(gmp_randinit_mt);
    // One stream per (seed, trial) so trials can run in any order.
    rng.seed(mpz_class(std::to_string(spec.seed)) * mpz_class("18446744073709551616") + mpz_class(std::to_string(trial)));
    mpz_class bound;
    mpz_ui_pow_ui(bound.get_mpz_t(), spec.prime, static_cast<unsigned long>(spec.prec));
    const OrderTag grevlex{OrderKind::grevlex};
    std::vector<ExactPoly> out;
    for (unsigned d : spec.degrees) {
        ExactPoly f(n, grevlex);
        for (const auto& m : monomials_of_degree(n, d, spec.affine)) f.add_term(m, mpq_class(rng.get_z_range(bound)));
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<OrderedPoly> random_system(const ExperimentSpec& spec, std::uint64_t trial) {
    const Ring& ring = Ring::of(spec.prime);
    std::vector<OrderedPoly> out;
    for (const auto& f : random_system_exact(spec, trial)) {
        OrderedPoly g(ring, f.nvars(), f.order());
        for (const auto& [m, c] : f.terms()) g.set_term(m, Ball::from_integer(ring, c.get_num(), spec.prec));
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace pfglm
