#include "pfglm/fglm.hpp"

#include "pfglm/errors.hpp"
#include "pfglm/field_ops.hpp"
#include "pfglm/kernels.hpp"

#include <algorithm>
#include <limits>

namespace pfglm {

namespace {

void insert_candidate(std::vector<Candidate>& L, Candidate c, OrderTag order) {
    auto less = [&](const Candidate& a, const Candidate& b) {
        const auto cmp = compare_monomials(order, a.monomial, b.monomial);
        if (cmp != 0) return cmp < 0;
        return std::tie(a.j, a.i) < std::tie(b.j, b.i);
    };
    auto it = std::lower_bound(L.begin(), L.end(), c, less);
    if (it != L.end() && it->monomial == c.monomial) return;
    if (it != L.begin() && std::prev(it)->monomial == c.monomial) return;
    L.insert(it, std::move(c));
}

void prune(std::vector<Candidate>& L, const Monomial& lm) {
    std::erase_if(L, [&](const Candidate& c) { return lm.divides(c.monomial); });
}

void run_loop(FglmState& st, const MultiplicationMatrices& mm, std::vector<UpdateStep>& updates) {
    const Ring& ring = *st.snf.Delta.ring();
    const std::size_t n = mm.nvars();
    const std::size_t delta = st.snf.rows();
    while (!st.L.empty()) {
        const Candidate c = st.L.front();
        st.L.erase(st.L.begin());
        const BallVector w = kernels::matvec(mm.T[c.i], st.v[c.j]);
        const std::size_t s = st.s();
        const BallVector lambda = kernels::matvec(st.snf.P, w);
        bool dependent = true;
        for (std::size_t k = s; k < delta; ++k)
            if (!lambda[k].is_zero()) {
                dependent = false;
                break;
            }
        if (dependent) {
            const BallVector W = solve_in_image(st.snf, w);
            OrderedPoly g(ring, n, st.order2);
            g.set_term(c.monomial, Ball::exact(ring, 1));
            for (std::size_t l = 0; l < s; ++l) g.set_term(st.B2[l], -W[l]);
            prune(st.L, c.monomial);
            st.G2.push_back(std::move(g));
        } else {
            st.B2.push_back(c.monomial);
            st.v.push_back(w);
            for (std::size_t l = 0; l < n; ++l) insert_candidate(st.L, {c.monomial.times_variable(l), s, l}, st.order2);
            for (const auto& g : st.G2) prune(st.L, g.leading_monomial());
            const std::uint64_t before = st.snf.op_count;
            snf_update_in_place(st.snf, w);
            updates.push_back({st.snf.cols(), st.snf.op_count - before});
        }
    }
}

}  // namespace

Prec fglm_transform_prec(const MultiplicationMatrices& mm) {
    Prec nmax = std::numeric_limits<Prec>::min();
    Prec minval = 0;
    std::size_t delta = 0;
    for (const auto& T : mm.T) {
        delta = T.rows();
        for (std::size_t i = 0; i < T.rows(); ++i)
            for (std::size_t j = 0; j < T.cols(); ++j) {
                const Ball& x = T(i, j);
                if (!x.is_exact()) nmax = std::max(nmax, x.abs_prec());
                if (!x.is_zero()) minval = std::min(minval, x.valuation().value);
            }
    }
    if (nmax == std::numeric_limits<Prec>::min()) return kInfinity;
    return std::max<Prec>(1, nmax + static_cast<Prec>(delta) * -minval);
}

FglmRun fglm_run(const GroebnerBasis& G, OrderTag order2) {
    const std::size_t n = G.nvars;
    const std::size_t delta = G.delta();
    if (delta == 0) throw NotZeroDimensional("the ideal contains 1, there is nothing to convert");
    const Ring& ring = *G.ring;
    FglmRun run;
    std::vector<PhaseOps> phases;

    field_ops::Scope mult_scope;
    const MultiplicationMatrices mm = multiplication_matrices(G);
    phases.push_back({"multiplication_matrices", mult_scope.elapsed()});

    field_ops::Scope loop_scope;
    FglmState st;
    st.order2 = order2;
    const Monomial one(n);
    BallVector e1(delta, Ball::zero(ring, kInfinity));
    e1[0] = Ball::exact(ring, 1);
    st.B2.push_back(one);
    st.v.push_back(e1);
    st.snf = snf_approximate(BallMatrix::from_columns(ring, delta, st.v), true, fglm_transform_prec(mm));
    for (std::size_t i = 0; i < n; ++i) insert_candidate(st.L, {one.times_variable(i), 0, i}, order2);

    std::string failure;
    try {
        run_loop(st, mm, run.updates);
    } catch (const RankNotCertified& e) {
        failure = std::string("not enough precision: ") + e.what();
    } catch (const MembershipViolated& e) {
        failure = std::string("not enough precision: ") + e.what();
    }
    phases.push_back({"change_of_basis", loop_scope.elapsed()});

    run.B2 = st.B2;
    if (st.snf.full_rank_certified()) run.cond = condition_number(st.snf);
    if (failure.empty() && st.B2.size() == delta) {
        try {
            run.basis = GroebnerBasis::from_polys(std::move(st.G2), order2, G.names);
        } catch (const Error& e) {
            failure = std::string("output is not a reduced basis: ") + e.what();
        }
    } else if (failure.empty()) {
        failure = "not enough precision: found " + std::to_string(st.B2.size()) + " of " + std::to_string(delta) +
                  " standard monomials";
    }
    run.report = precision_loss_report(G, run.basis ? &*run.basis : nullptr, run.cond, Pipeline::general,
                                       std::move(phases), failure);
    return run;
}

GroebnerBasis fglm_change_order(const GroebnerBasis& G, OrderTag order2) {
    FglmRun run = fglm_run(G, order2);
    if (!run.basis) throw InsufficientPrecision(run.report.failure);
    return std::move(*run.basis);
}

}  // namespace pfglm
