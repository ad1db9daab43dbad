#include "pfglm/shape.hpp"

#include "pfglm/errors.hpp"
#include "pfglm/field_ops.hpp"
#include "pfglm/kernels.hpp"
#include "pfglm/multiplication.hpp"

namespace pfglm {

namespace {

BallVector unit_vector(const Ring& ring, std::size_t n, std::size_t k) {
    BallVector v(n, Ball::zero(ring, kInfinity));
    v[k] = Ball::exact(ring, 1);
    return v;
}

// Normal form of a monomial that is standard or a leading monomial.
BallVector read_normal_form(const GroebnerBasis& G, const Monomial& u) {
    if (const std::size_t k = G.staircase_index(u); k != GroebnerBasis::npos) return unit_vector(*G.ring, G.delta(), k);
    const std::size_t g = G.index_of_leading(u);
    if (g == GroebnerBasis::npos) throw NotSemiStable("normal form of " + u.to_string(G.names) + " cannot be read off the basis");
    OrderedPoly tail = -G.polys[g];
    tail.erase(u);
    return staircase_coordinates(G, tail);
}

// True iff the columns of M past the certified rank are structurally zero.
bool structurally_deficient(const SnfFactorization& f) {
    std::size_t t = 0;
    while (t < f.diag_valuations.size() && f.diag_valuations[t].known) ++t;
    for (std::size_t i = t; i < f.rows(); ++i)
        for (std::size_t j = t; j < f.cols(); ++j)
            if (!f.Delta(i, j).is_exact_zero()) return false;
    return true;
}

}  // namespace

bool is_semi_stable(const std::vector<Monomial>& leading_monomials) {
    if (leading_monomials.empty()) return true;
    const std::size_t n = leading_monomials.front().nvars();
    for (const auto& a : leading_monomials) {
        if (a[n - 1] == 0) continue;
        bool minimal = true;
        for (const auto& b : leading_monomials)
            if (b != a && b.divides(a)) minimal = false;
        if (!minimal) continue;
        for (std::size_t k = 0; k + 1 < n; ++k) {
            Monomial m = a;
            --m[n - 1];
            ++m[k];
            if (!in_monomial_ideal(leading_monomials, m)) return false;
        }
    }
    return true;
}

ShapeInputs read_shape_inputs(const GroebnerBasis& G) {
    if (G.order.kind != OrderKind::grevlex) throw NotSemiStable("the shape path reads a grevlex basis");
    if (!is_semi_stable(G.leading_monomials())) throw NotSemiStable("leading monomials are not semi-stable for the last variable");
    const std::size_t n = G.nvars;
    const std::size_t delta = G.delta();
    ShapeInputs in{BallMatrix(*G.ring, delta, delta), {}};
    for (std::size_t k = 0; k < delta; ++k) in.T_n.set_column(k, read_normal_form(G, G.staircase[k].times_variable(n - 1)));
    for (std::size_t i = 0; i + 1 < n; ++i) in.y.push_back(read_normal_form(G, Monomial::variable(n, i)));
    return in;
}

ShapeRun fglm_shape_run(const GroebnerBasis& G) {
    const std::size_t n = G.nvars;
    const std::size_t delta = G.delta();
    if (delta == 0) throw NotZeroDimensional("the ideal contains 1, there is nothing to convert");
    const Ring& ring = *G.ring;
    ShapeRun run;
    std::vector<PhaseOps> phases;

    field_ops::Scope read_scope;
    const ShapeInputs in = read_shape_inputs(G);
    phases.push_back({"read_inputs", read_scope.elapsed()});

    field_ops::Scope krylov_scope;
    std::vector<BallVector> z{unit_vector(ring, delta, 0)};
    for (std::size_t k = 1; k <= delta; ++k) z.push_back(kernels::matvec(in.T_n, z.back()));
    const BallMatrix M = BallMatrix::from_columns(ring, delta, std::vector<BallVector>(z.begin(), z.end() - 1));
    phases.push_back({"krylov", krylov_scope.elapsed()});

    field_ops::Scope snf_scope;
    const SnfFactorization approx = snf_approximate(M, false);
    std::string failure;
    if (!approx.full_rank_certified()) {
        if (structurally_deficient(approx)) throw NotShapePosition("powers of the last variable do not span the quotient");
        failure = "not enough precision: rank of the Krylov matrix not certified";
        phases.push_back({"snf", snf_scope.elapsed()});
        run.report = precision_loss_report(G, nullptr, std::nullopt, Pipeline::shape, std::move(phases), failure);
        return run;
    }
    const SnfFactorization f = snf_precise(approx);
    run.cond = condition_number(f);
    phases.push_back({"snf", snf_scope.elapsed()});

    field_ops::Scope solve_scope;
    auto power = [&](std::size_t k) {
        Monomial m(n);
        m[n - 1] = static_cast<Monomial::Exponent>(k);
        return m;
    };
    std::vector<OrderedPoly> out;
    const OrderTag lex{OrderKind::lex};
    try {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const BallVector U = solve_in_image(f, in.y[i]);
            OrderedPoly g(ring, n, lex);
            g.set_term(Monomial::variable(n, i), Ball::exact(ring, 1));
            for (std::size_t k = 0; k < delta; ++k) g.set_term(power(k), -U[k]);
            out.push_back(std::move(g));
        }
        const BallVector U = solve_in_image(f, z[delta]);
        OrderedPoly h(ring, n, lex);
        h.set_term(power(delta), Ball::exact(ring, 1));
        for (std::size_t k = 0; k < delta; ++k) h.set_term(power(k), -U[k]);
        out.push_back(std::move(h));
    } catch (const MembershipViolated& e) {
        failure = std::string("not enough precision: ") + e.what();
    }
    phases.push_back({"solve", solve_scope.elapsed()});

    if (failure.empty()) run.basis = GroebnerBasis::from_polys(std::move(out), lex, G.names);
    run.report = precision_loss_report(G, run.basis ? &*run.basis : nullptr, run.cond, Pipeline::shape,
                                       std::move(phases), failure);
    return run;
}

GroebnerBasis fglm_shape_from_grevlex(const GroebnerBasis& G) {
    ShapeRun run = fglm_shape_run(G);
    if (!run.basis) throw InsufficientPrecision(run.report.failure);
    return std::move(*run.basis);
}

}  // namespace pfglm
