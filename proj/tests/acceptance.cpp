// Runs the acceptance criteria and prints one PASS/FAIL line per criterion.
// Exit status is the number of failed criteria.

#include "support.hpp"

#include "pfglm/errors.hpp"
#include "pfglm/exact_fglm.hpp"
#include "pfglm/fglm.hpp"
#include "pfglm/fixture_basis.hpp"
#include "pfglm/hensel.hpp"
#include "pfglm/multiplication.hpp"
#include "pfglm/random_system.hpp"
#include "pfglm/shape.hpp"
#include "pfglm/stats.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>

using namespace pfglm;
using namespace testing;

namespace {

constexpr Prec kN = 150;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// ---------------------------------------------------------------- SNF corpus

struct SnfCase {
    unsigned long p;
    IntMatrix M;
};

constexpr Prec kSnfPrec = 40;

std::vector<SnfCase> snf_corpus() {
    std::mt19937_64 rng(20240601);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    std::vector<SnfCase> out;
    for (int i = 0; i < 200; ++i) {
        const unsigned long p = i % 2 ? 5 : 2;
        const std::size_t r = dim(rng), c = dim(rng);
        out.push_back({p, random_padic_matrix(rng, r, c, p, 3)});
    }
    return out;
}

Outcome criterion1() {
    const auto corpus = snf_corpus();
    const auto t0 = std::chrono::steady_clock::now();
    int matched = 0;
    std::string first_bad;
    for (const auto& [p, Mi] : corpus) {
        const Ring& ring = Ring::of(p);
        const auto expected = elementary_divisor_valuations(Mi, mpz_class(p));
        SnfFactorization f = snf_approximate(to_balls(Mi, ring, kSnfPrec));
        if (f.full_rank_certified()) f = snf_precise(f);
        bool ok = f.diag_valuations.size() == expected.size();
        for (std::size_t k = 0; ok && k < expected.size(); ++k) {
            const auto& v = f.diag_valuations[k];
            ok = expected[k] ? (v.known && v.value == *expected[k]) : !v.known;
        }
        if (ok) ++matched;
        else if (first_bad.empty()) first_bad = " first mismatch " + std::to_string(Mi.size()) + "x" + std::to_string(Mi[0].size());
    }
    const double secs = seconds_since(t0);
    std::ostringstream os;
    os << matched << "/200 matched the integer oracle in " << secs << " s" << first_bad;
    return {matched == 200 && secs < 10, os.str()};
}

Outcome criterion2() {
    const auto corpus = snf_corpus();
    std::mt19937_64 rng(77);
    std::size_t checked = 0, solves = 0, violations = 0;
    for (const auto& [p, Mi] : corpus) {
        const Ring& ring = Ring::of(p);
        const BallMatrix M = to_balls(Mi, ring, kSnfPrec);
        const SnfFactorization a = snf_approximate(M);
        if (!a.full_rank_certified()) continue;
        const SnfFactorization f = snf_precise(a);
        const Prec cond = condition_number(f);
        ++checked;
        for (const BallMatrix* T : {&f.P, &f.Q})
            for (std::size_t i = 0; i < T->rows(); ++i)
                for (std::size_t j = 0; j < T->cols(); ++j)
                    if ((*T)(i, j).abs_prec() < kSnfPrec - cond) ++violations;
        if (!indistinguishable(f.P * M * f.Q, f.Delta)) ++violations;
        if (Mi.size() < Mi[0].size()) continue;
        // Round trip Y = M X0.
        const std::size_t cols = Mi[0].size();
        std::vector<mpz_class> X0(cols);
        for (auto& x : X0) x = static_cast<long>(rng() % 1000) - 500;
        BallVector Y(Mi.size());
        for (std::size_t i = 0; i < Mi.size(); ++i) {
            mpz_class s = 0;
            for (std::size_t j = 0; j < cols; ++j) s += Mi[i][j] * X0[j];
            Y[i] = Ball::from_integer(ring, s, kSnfPrec);
        }
        std::vector<BallVector> answers{solve_in_image(M, Y)};
        if (Mi.size() == cols) answers.push_back(solve_square(M, Y));
        for (const auto& X : answers) {
            ++solves;
            for (std::size_t j = 0; j < cols; ++j)
                if (X[j].abs_prec() < kSnfPrec - 2 * cond || !congruent(X[j], mpq_class(X0[j]))) ++violations;
        }
    }
    std::ostringstream os;
    os << checked << " factorizations, " << solves << " solves, " << violations << " violations";
    return {violations == 0 && checked > 0 && solves > 0, os.str()};
}

Outcome criterion3() {
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<std::size_t> rows_dist(2, 8);
    const unsigned long primes[] = {2, 3, 5};
    std::size_t events = 0, violations = 0, attempts = 0;
    while (events < 500 && attempts < 5000) {
        ++attempts;
        const unsigned long p = primes[attempts % 3];
        const Ring& ring = Ring::of(p);
        const std::size_t r = rows_dist(rng);
        const std::size_t c = 1 + rng() % (r - 1);
        const BallMatrix M = to_balls(random_padic_matrix(rng, r, c, p, 3), ring, 60);
        const SnfFactorization f = snf_approximate(M);
        if (!f.full_rank_certified()) continue;
        const BallMatrix v = to_balls(random_padic_matrix(rng, r, 1, p, 4), ring, 60);
        const SnfFactorization g = snf_update(f, v.column(0));
        if (!g.full_rank_certified()) continue;
        ++events;
        if (condition_number(f) > condition_number(g)) ++violations;
    }
    std::ostringstream os;
    os << events << " append events, " << violations << " decreases";
    return {events == 500 && violations == 0, os.str()};
}

Outcome criterion4() {
    std::mt19937_64 rng(4242);
    std::uniform_int_distribution<std::size_t> delta_dist(2, 10);
    std::size_t steps = 0, mismatches = 0, over_budget = 0;
    std::uint64_t worst_ratio_num = 0, worst_ratio_den = 1;
    for (int b = 0; b < 30; ++b) {
        const unsigned long p = b % 2 ? 5 : 2;
        const Ring& ring = Ring::of(p);
        const std::size_t delta = delta_dist(rng);
        const BallMatrix full = to_balls(random_padic_matrix(rng, delta, delta, p, 3), ring, 80);
        BallMatrix M = BallMatrix::from_columns(ring, delta, {full.column(0)});
        SnfFactorization f = snf_approximate(M);
        for (std::size_t s = 2; s <= delta; ++s) {
            const BallVector v = full.column(s - 1);
            const std::uint64_t before = f.op_count;
            snf_update_in_place(f, v);
            M.append_column(v);
            ++steps;
            if (f.diag_valuations != snf_approximate(M).diag_valuations) ++mismatches;
            const std::uint64_t used = f.op_count - before;
            if (used > s * delta) ++over_budget;
            if (used * worst_ratio_den > worst_ratio_num * (s * delta)) {
                worst_ratio_num = used;
                worst_ratio_den = s * delta;
            }
        }
    }
    std::ostringstream os;
    os << steps << " updates, " << mismatches << " valuation mismatches, " << over_budget
       << " over s*delta (worst " << worst_ratio_num << "/" << worst_ratio_den << ")";
    return {mismatches == 0 && over_budget == 0, os.str()};
}

// ---------------------------------------------------------- FGLM fixtures

std::vector<Fixture> conversion_fixtures() {
    const std::vector<std::pair<std::vector<unsigned>, bool>> shapes = {
        {{2}, true},       {{5}, true},       {{10}, true},   {{2, 2}, false}, {{2, 2}, true},
        {{2, 3}, false},   {{2, 3}, true},    {{2, 4}, true}, {{2, 5}, false}, {{3, 3}, false},
        {{3, 3}, true},    {{1, 2, 2}, true}, {{2, 2, 2}, false}, {{2, 2, 2}, true}, {{1, 3, 3}, true},
        {{1, 2, 3}, false}, {{1, 2, 5}, true}, {{1, 1, 7}, true},
    };
    std::vector<Fixture> out;
    std::mt19937_64 rng(555);
    for (unsigned long p : {2UL, 65519UL}) {
        std::uint64_t seed = 100;
        for (const auto& [d, affine] : shapes) out.push_back(random_system_fixture(d, affine, p, 20, seed++));
        for (std::size_t k = 0; k < 7; ++k) out.push_back(points_fixture(rng, 2 + k % 2, 3 + k, p));
    }
    return out;
}

struct ConversionResult {
    std::size_t runs = 0, successes = 0, mismatches = 0, bad_failures = 0, bound_violations = 0;
    std::string first_problem;
};

const ConversionResult& conversion_results() {
    static const ConversionResult result = [] {
        ConversionResult r;
        for (const auto& fx : conversion_fixtures()) {
            const Ring& ring = Ring::of(fx.prime);
            const GroebnerBasis G = truncate(fx.grevlex, ring, kN, OrderTag{OrderKind::grevlex});
            for (OrderKind kind : {OrderKind::lex, OrderKind::deglex}) {
                const OrderTag target{kind};
                ++r.runs;
                const FglmRun run = fglm_run(G, target);
                if (!run.basis) {
                    if (!(run.cond && *run.cond > kN)) {
                        ++r.bad_failures;
                        if (r.first_problem.empty()) r.first_problem = fx.name + ": " + run.report.failure;
                    }
                    continue;
                }
                ++r.successes;
                std::string why;
                const auto exact = exact_fglm(fx.grevlex, OrderTag{OrderKind::grevlex}, target);
                if (!congruent(*run.basis, exact, &why)) {
                    ++r.mismatches;
                    if (r.first_problem.empty()) r.first_problem = fx.name + " to " + to_string(target) + ": " + why;
                }
                if (run.report.bound_violated()) ++r.bound_violations;
            }
        }
        return r;
    }();
    return result;
}

Outcome criterion5() {
    const auto& r = conversion_results();
    std::ostringstream os;
    os << r.runs << " runs on " << r.runs / 2 << " systems, " << r.successes << " successes, " << r.mismatches
       << " oracle mismatches, " << r.bad_failures << " unexplained failures";
    if (!r.first_problem.empty()) os << " (" << r.first_problem << ")";
    return {r.mismatches == 0 && r.bad_failures == 0 && r.successes > 0, os.str()};
}

Outcome criterion6() {
    const auto& r = conversion_results();
    std::ostringstream os;
    os << r.bound_violations << " bound violations over " << r.successes << " successful runs";
    return {r.bound_violations == 0 && r.successes > 0, os.str()};
}

Outcome criterion7() {
    auto run = [](std::vector<unsigned> d, bool affine, unsigned long p) {
        ExperimentSpec spec;
        spec.degrees = std::move(d);
        spec.affine = affine;
        spec.prime = p;
        spec.prec = kN;
        spec.trials = 20;
        spec.seed = 1;
        return loss_statistics(spec, Pipeline::general);
    };
    const auto t0 = std::chrono::steady_clock::now();
    const LossStats hom2 = run({3, 3, 3}, false, 2);
    const LossStats aff2 = run({3, 3, 3}, true, 2);
    const LossStats hom_big = run({3, 3, 3}, false, 65519);
    const double secs = seconds_since(t0);
    auto row = [](const char* name, const LossStats& s) {
        std::ostringstream os;
        os << name << " max " << s.max_loss << " mean " << s.mean_loss << " fail (" << s.generation_failures << ","
           << s.fglm_failures << ")";
        return os.str();
    };
    const bool ok = hom2.mean_loss <= 10 && hom2.max_loss <= 40 && hom2.fglm_failures == 0 &&
                    hom2.generation_failures == 0 && hom_big.mean_loss == 0 && hom_big.max_loss == 0 &&
                    hom_big.successes == 20 && aff2.mean_loss > hom2.mean_loss;
    std::ostringstream os;
    os << row("hom p=2", hom2) << "; " << row("aff p=2", aff2) << "; " << row("hom p=65519", hom_big) << "; "
       << secs << " s";
    return {ok, os.str()};
}

// ------------------------------------------------------------ shape fixtures

struct ShapeFixture {
    Fixture fx;
    GroebnerBasis G;
};

std::vector<ShapeFixture> shape_fixtures() {
    std::vector<ShapeFixture> out;
    std::mt19937_64 rng(8080);
    const unsigned long primes[] = {65519, 5, 2, 101};
    std::size_t k = 0;
    while (out.size() < 14) {
        const unsigned long p = primes[k % 4];
        Fixture fx = points_fixture(rng, 2 + k % 2, 3 + k % 8, p);
        ++k;
        GroebnerBasis G = truncate(fx.grevlex, Ring::of(p), kN, OrderTag{OrderKind::grevlex});
        if (!is_semi_stable(G.leading_monomials())) continue;
        out.push_back({std::move(fx), std::move(G)});
    }
    const std::vector<std::vector<unsigned>> shapes = {{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {1, 2, 3}, {2, 4}};
    for (std::size_t i = 0; i < shapes.size(); ++i) {
        ExperimentSpec spec;
        spec.degrees = shapes[i];
        spec.affine = true;
        spec.prime = i % 2 ? 65519 : 7;
        spec.prec = kN;
        spec.seed = 900 + i;
        Fixture fx;
        fx.name = "affine random system " + std::to_string(i);
        fx.prime = spec.prime;
        fx.nvars = spec.nvars();
        GroebnerBasis G = truncated_grevlex_basis(random_system_exact(spec), Ring::of(spec.prime), kN);
        out.push_back({std::move(fx), std::move(G)});
    }
    return out;
}

struct ShapeResults {
    std::size_t fixtures = 0, disagreements = 0, failures = 0;
    std::vector<std::pair<const ShapeFixture*, GroebnerBasis>> outputs;
    std::string first_problem;
};

const std::vector<ShapeFixture>& cached_shape_fixtures() {
    static const std::vector<ShapeFixture> fixtures = shape_fixtures();
    return fixtures;
}

double mean_ops(std::size_t n, std::size_t delta, bool shape) {
    std::mt19937_64 rng(1000 + delta * 7 + n);
    double total = 0;
    const int reps = 5;
    for (int i = 0; i < reps; ++i) {
        const Fixture fx = points_fixture(rng, n, delta, 65519);
        const GroebnerBasis G = truncate(fx.grevlex, Ring::of(65519), kN, OrderTag{OrderKind::grevlex});
        total += static_cast<double>(shape ? fglm_shape_run(G).report.total_ops()
                                           : fglm_run(G, OrderTag{OrderKind::lex}).report.total_ops());
    }
    return total / reps;
}

Outcome criterion8() {
    ShapeResults r;
    for (const auto& sf : cached_shape_fixtures()) {
        ++r.fixtures;
        const ShapeRun shape = fglm_shape_run(sf.G);
        const FglmRun general = fglm_run(sf.G, OrderTag{OrderKind::lex});
        if (!shape.basis || !general.basis) {
            ++r.failures;
            if (r.first_problem.empty()) r.first_problem = sf.fx.name + ": " + shape.report.failure + general.report.failure;
            continue;
        }
        bool same = shape.basis->leading_monomials() == general.basis->leading_monomials();
        for (std::size_t i = 0; same && i < shape.basis->polys.size(); ++i)
            same = agree(shape.basis->polys[i], general.basis->polys[i]);
        if (!same) {
            ++r.disagreements;
            if (r.first_problem.empty()) r.first_problem = sf.fx.name + " disagrees";
        }
    }
    // Growth of the shape path's count when delta doubles, over the same
    // delta pairs at n = 2 and n = 3.
    std::ostringstream os;
    os << r.fixtures << " fixtures, " << r.disagreements << " disagreements, " << r.failures
       << " failures; op growth on doubling delta:";
    double worst = 0;
    for (std::size_t n : {2, 3})
        for (std::size_t delta : {4, 8}) {
            const double g = mean_ops(n, 2 * delta, true) / mean_ops(n, delta, true);
            worst = std::max(worst, g);
            os << " n=" << n << " " << delta << "->" << 2 * delta << " " << g;
        }
    if (!r.first_problem.empty()) os << " (" << r.first_problem << ")";
    return {r.fixtures == 20 && r.disagreements == 0 && r.failures == 0 && worst <= 10, os.str()};
}

Outcome criterion9() {
    const double a = mean_ops(3, 4, false), b = mean_ops(3, 8, false);
    std::ostringstream os;
    os << "general pipeline ops n=3: delta=4 " << a << ", delta=8 " << b << ", factor " << b / a;
    return {b / a <= 10, os.str()};
}

Outcome criterion10() {
    std::size_t points = 0, violations = 0, singular = 0, wrong = 0;
    for (const auto& sf : cached_shape_fixtures()) {
        const ShapeRun shape = fglm_shape_run(sf.G);
        if (!shape.basis) continue;
        const LiftedRoots roots = hensel_lift_roots(*shape.basis, kInfinity);
        singular += roots.singular.size();
        for (const auto& pt : roots.points) {
            ++points;
            for (const auto& g : sf.G.polys)
                if (!g.evaluate(pt).is_zero()) ++violations;
            if (!sf.fx.points.empty()) {
                bool found = false;
                for (const auto& known : sf.fx.points) {
                    bool eq = true;
                    for (std::size_t i = 0; eq && i < known.size(); ++i) eq = congruent(pt[i], mpq_class(known[i]));
                    found = found || eq;
                }
                if (!found) ++wrong;
            }
        }
    }
    std::ostringstream os;
    os << points << " lifted points, " << violations << " nonzero residuals, " << wrong
       << " not among the known points, " << singular << " singular notices";
    return {points > 0 && violations == 0 && wrong == 0, os.str()};
}

std::size_t commutation_violations(const GroebnerBasis& G, std::size_t& checks) {
    const MultiplicationMatrices mm = multiplication_matrices(G);
    std::size_t bad = 0;
    for (std::size_t i = 0; i < mm.nvars(); ++i)
        for (std::size_t j = i + 1; j < mm.nvars(); ++j) {
            ++checks;
            if (!indistinguishable(mm.T[i] * mm.T[j], mm.T[j] * mm.T[i])) ++bad;
        }
    for (std::size_t i = 0; i < mm.nvars(); ++i)
        for (std::size_t k = 0; k < G.delta(); ++k) {
            ++checks;
            OrderedPoly f(*G.ring, G.nvars, G.order);
            f.add_term(G.staircase[k].times_variable(i), Ball::exact(*G.ring, 1));
            const BallVector expected = staircase_coordinates(G, normal_form(G, f));
            const BallVector column = mm.T[i].column(k);
            for (std::size_t r = 0; r < G.delta(); ++r)
                if (!(column[r] - expected[r]).is_zero()) {
                    ++bad;
                    break;
                }
        }
    return bad;
}

Outcome criterion11() {
    std::size_t fixtures = 0, checks = 0, bad = 0;
    for (const auto& fx : conversion_fixtures()) {
        ++fixtures;
        bad += commutation_violations(truncate(fx.grevlex, Ring::of(fx.prime), kN, OrderTag{OrderKind::grevlex}), checks);
    }
    for (const auto& sf : cached_shape_fixtures()) {
        ++fixtures;
        bad += commutation_violations(sf.G, checks);
    }
    std::ostringstream os;
    os << fixtures << " fixtures, " << checks << " checks, " << bad << " violations";
    return {bad == 0, os.str()};
}

}  // namespace

int main() {
    const std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
        {1, criterion1}, {2, criterion2}, {3, criterion3},  {4, criterion4},   {5, criterion5},   {6, criterion6},
        {7, criterion7}, {8, criterion8}, {9, criterion9}, {10, criterion10}, {11, criterion11},
    };
    int failed = 0;
    for (const auto& [id, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << "criterion " << id << ": " << (o.pass ? "PASS" : "FAIL") << " - " << o.detail << std::endl;
    }
    return failed;
}
