#include "support.hpp"

#include "pfglm/buchberger.hpp"
#include "pfglm/errors.hpp"
#include "pfglm/exact_fglm.hpp"
#include "pfglm/fixture_basis.hpp"
#include "pfglm/random_system.hpp"
#include "pfglm/stats.hpp"

#include <doctest.h>
#include <json.hpp>

#include <sstream>

using namespace pfglm;
using namespace testing;

namespace {

const OrderTag kLex{OrderKind::lex};
const OrderTag kGrevlex{OrderKind::grevlex};

}  // namespace

TEST_CASE("buchberger examples") {
    const auto lin = exact_buchberger({exact_poly(2, kLex, {{{1, 0}, 1}, {{0, 1}, 1}}),
                                       exact_poly(2, kLex, {{{1, 0}, 1}, {{0, 1}, -1}})},
                                      kLex);
    CHECK(lin == std::vector<ExactPoly>{exact_poly(2, kLex, {{{0, 1}, 1}}), exact_poly(2, kLex, {{{1, 0}, 1}})});

    const auto unit = exact_buchberger({exact_poly(2, kLex, {{{0, 0}, 1}})}, kLex);
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].leading_monomial().is_one());

    const std::vector<ExactPoly> swap{exact_poly(2, kGrevlex, {{{2, 0}, 1}, {{0, 1}, -1}}),
                                      exact_poly(2, kGrevlex, {{{0, 2}, 1}, {{1, 0}, -1}})};
    auto same = exact_buchberger(swap, kGrevlex);
    std::sort(same.begin(), same.end(), [](const ExactPoly& a, const ExactPoly& b) {
        return a.leading_monomial() > b.leading_monomial();
    });
    CHECK(same == swap);
    CHECK_THROWS_AS(exact_buchberger({exact_poly(2, kLex, {{{1, 1}, 1}})}, kLex), NotZeroDimensional);
    CHECK(macaulay_bound(swap) == 3);
}

TEST_CASE("exact change of ordering examples") {
    const std::vector<ExactPoly> pt{exact_poly(2, kGrevlex, {{{1, 0}, 1}, {{0, 0}, -4}}),
                                    exact_poly(2, kGrevlex, {{{0, 1}, 1}, {{0, 0}, 9}})};
    const auto lex = exact_fglm(pt, kGrevlex, kLex);
    REQUIRE(lex.size() == 2);
    for (std::size_t i = 0; i < 2; ++i) CHECK(lex[i] == pt[1 - i].reordered(kLex));

    const std::vector<ExactPoly> three{exact_poly(2, kGrevlex, {{{1, 0}, 1}, {{0, 1}, -1}, {{0, 0}, 1}}),
                                       exact_poly(2, kGrevlex, {{{0, 3}, 1}, {{0, 2}, -9}, {{0, 1}, 26}, {{0, 0}, -24}})};
    const auto from_points = exact_fglm(points_lex_basis({{1, 2}, {2, 3}, {3, 4}}), kLex, kGrevlex);
    CHECK(from_points.size() == 2);
    for (const auto& g : three) CHECK(std::find(from_points.begin(), from_points.end(), g) != from_points.end());
}

TEST_CASE("two exact paths give the same basis") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        ExperimentSpec spec;
        spec.degrees = seed % 2 ? std::vector<unsigned>{2, 2} : std::vector<unsigned>{1, 2, 2};
        spec.affine = seed % 3 != 0;
        spec.prime = 5;
        spec.prec = 3;
        spec.seed = seed;
        const auto F = random_system_exact(spec);
        const auto grevlex = exact_buchberger(F, kGrevlex);
        const auto lex = exact_buchberger(F, kLex);
        auto converted = exact_fglm(grevlex, kGrevlex, kLex);
        auto by_lm = [](const ExactPoly& a, const ExactPoly& b) { return a.leading_monomial() < b.leading_monomial(); };
        std::sort(converted.begin(), converted.end(), by_lm);
        auto direct = lex;
        std::sort(direct.begin(), direct.end(), by_lm);
        CHECK(converted == direct);
        std::vector<OrderedPoly> embedded;
        for (const auto& g : grevlex) embedded.push_back(embed(g, Ring::of(5), 300));
        CHECK(is_reduced_groebner(embedded, kGrevlex));
    }
}

TEST_CASE("random systems") {
    ExperimentSpec uni;
    uni.degrees = {2};
    uni.affine = true;
    uni.prime = 5;
    uni.prec = 10;
    uni.seed = 1;
    const auto f = random_system(uni);
    REQUIRE(f.size() == 1);
    CHECK(f[0].size() <= 3);
    CHECK(f[0].leading_monomial() == Monomial(std::vector<Monomial::Exponent>{2}));
    for (const auto& [m, c] : f[0].terms()) {
        CHECK(c.abs_prec() == 10);
        CHECK(c.to_rational() >= 0);
        CHECK(c.to_rational() < 9765625);
    }
    uni.affine = false;
    CHECK(random_system(uni)[0].size() == 1);

    ExperimentSpec cubic;
    cubic.degrees = {3, 3, 3};
    cubic.prime = 2;
    cubic.prec = 150;
    cubic.seed = 7;
    const auto sys = random_system(cubic, 4);
    REQUIRE(sys.size() == 3);
    for (const auto& g : sys) {
        CHECK(g.size() == 10);
        for (const auto& [m, c] : g.terms()) CHECK(m.degree() == 3);
    }
    const auto again = random_system(cubic, 4);
    for (std::size_t i = 0; i < 3; ++i) CHECK(agree(sys[i], again[i]));
    CHECK_FALSE(agree(sys[0], random_system(cubic, 5)[0]));
}

TEST_CASE("regular sequence Hilbert series") {
    CHECK(regular_sequence_hilbert({2, 2}) == std::vector<std::uint64_t>{1, 2, 1});
    const auto h = regular_sequence_hilbert({3, 3, 3});
    CHECK(std::accumulate(h.begin(), h.end(), std::uint64_t{0}) == 27);
    CHECK(h.size() == 7);
}

TEST_CASE("both fixture generators give the same truncated basis") {
    const Ring& r = Ring::of(5);
    for (const auto& [degrees, affine] : std::vector<std::pair<std::vector<unsigned>, bool>>{
             {{2, 2}, true}, {{2, 3}, true}, {{2, 2, 2}, false}, {{1, 2, 2}, true}}) {
        ExperimentSpec spec;
        spec.degrees = degrees;
        spec.affine = affine;
        spec.prime = 5;
        spec.prec = 30;
        spec.seed = 3;
        const auto F = random_system_exact(spec);
        const GroebnerBasis a = truncated_grevlex_basis(F, r, 30, FixtureMethod::buchberger);
        const GroebnerBasis b = truncated_grevlex_basis(F, r, 30, FixtureMethod::macaulay);
        REQUIRE(a.polys.size() == b.polys.size());
        for (std::size_t i = 0; i < a.polys.size(); ++i) {
            CHECK(a.polys[i].leading_monomial() == b.polys[i].leading_monomial());
            CHECK(agree(a.polys[i], b.polys[i]));
            CHECK(b.polys[i].min_prec() >= 30);
        }
    }
    const std::vector<ExactPoly> degenerate{exact_poly(2, kGrevlex, {{{1, 0}, 1}}), exact_poly(2, kGrevlex, {{{1, 0}, 2}})};
    CHECK_THROWS_AS(truncated_grevlex_basis(degenerate, r, 20, FixtureMethod::macaulay), NotZeroDimensional);
}

TEST_CASE("statistics on linear systems lose nothing") {
    ExperimentSpec spec;
    spec.degrees = {1, 1};
    spec.affine = true;
    spec.prime = 2;
    spec.prec = 40;
    spec.trials = 5;
    spec.seed = 2;
    const LossStats s = loss_statistics(spec, Pipeline::general);
    CHECK(s.successes == 5);
    CHECK(s.max_loss == 0);
    CHECK(s.mean_loss == 0);
}

TEST_CASE("parallel and serial statistics agree") {
    ExperimentSpec spec;
    spec.degrees = {2, 2};
    spec.affine = true;
    spec.prime = 2;
    spec.prec = 60;
    spec.trials = 6;
    spec.seed = 4;
    for (Pipeline pl : {Pipeline::general, Pipeline::shape}) {
        const LossStats a = loss_statistics(spec, pl);
        const LossStats b = loss_statistics_serial(spec, pl);
        CHECK(a.max_loss == b.max_loss);
        CHECK(a.mean_loss == b.mean_loss);
        CHECK(a.fglm_failures == b.fglm_failures);
        REQUIRE(a.trials.size() == b.trials.size());
        for (std::size_t i = 0; i < a.trials.size(); ++i) {
            CHECK(a.trials[i].converted == b.trials[i].converted);
            if (a.trials[i].report && b.trials[i].report)
                CHECK(a.trials[i].report->to_json() == b.trials[i].report->to_json());
        }
        const std::string table = format_table(spec, a);
        CHECK(table.find("mean") != std::string::npos);
        std::istringstream log(trial_log(spec, pl, a));
        int lines = 0;
        for (std::string line; std::getline(log, line); ++lines) CHECK(nlohmann::json::accept(line));
        CHECK(lines == 6);
    }
}
