#include "pfglm/stats.hpp"

#include "pfglm/errors.hpp"
#include "pfglm/fglm.hpp"
#include "pfglm/shape.hpp"

#include <json.hpp>
#include <omp.h>

#include <chrono>
#include <iomanip>
#include <sstream>

namespace pfglm {

namespace {

LossStats aggregate(std::vector<TrialRecord> trials) {
    LossStats s;
    Prec total = 0;
    for (const auto& t : trials) {
        if (!t.generated) {
            ++s.generation_failures;
        } else if (!t.converted) {
            ++s.fglm_failures;
        } else {
            ++s.successes;
            s.max_loss = std::max(s.max_loss, t.report->observed_loss);
            total += t.report->observed_loss;
            if (t.report->bound_violated()) ++s.bound_violations;
        }
    }
    s.mean_loss = s.successes ? static_cast<double>(total) / static_cast<double>(s.successes) : 0.0;
    s.trials = std::move(trials);
    return s;
}

}  // namespace

TrialRecord run_trial(const ExperimentSpec& spec, Pipeline pipeline, std::uint64_t index, FixtureMethod fixture) {
    const auto start = std::chrono::steady_clock::now();
    TrialRecord rec;
    rec.index = index;
    const Ring& ring = Ring::of(spec.prime);
    std::optional<GroebnerBasis> G;
    try {
        G = truncated_grevlex_basis(random_system_exact(spec, index), ring, spec.prec, fixture);
        rec.generated = true;
    } catch (const Error& e) {
        rec.error = e.what();
    }
    if (G) {
        try {
            if (pipeline == Pipeline::general) {
                FglmRun run = fglm_run(*G, OrderTag{OrderKind::lex});
                rec.converted = run.basis.has_value();
                rec.report = std::move(run.report);
            } else {
                ShapeRun run = fglm_shape_run(*G);
                rec.converted = run.basis.has_value();
                rec.report = std::move(run.report);
            }
            if (!rec.converted) rec.error = rec.report->failure;
        } catch (const Error& e) {
            rec.error = e.what();
        }
    }
    rec.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return rec;
}

LossStats loss_statistics_serial(const ExperimentSpec& spec, Pipeline pipeline, const StatsOptions& options) {
    std::vector<TrialRecord> trials;
    for (std::uint64_t k = 0; k < spec.trials; ++k) trials.push_back(run_trial(spec, pipeline, k, options.fixture));
    return aggregate(std::move(trials));
}

LossStats loss_statistics(const ExperimentSpec& spec, Pipeline pipeline, const StatsOptions& options) {
    std::vector<TrialRecord> trials(spec.trials);
    Ring::of(spec.prime);
    const int threads = options.threads > 0 ? options.threads : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(threads)
    for (std::int64_t k = 0; k < static_cast<std::int64_t>(spec.trials); ++k)
        trials[static_cast<std::size_t>(k)] = run_trial(spec, pipeline, static_cast<std::uint64_t>(k), options.fixture);
    return aggregate(std::move(trials));
}

std::string format_table(const ExperimentSpec& spec, const LossStats& stats) {
    std::ostringstream d;
    d << '[';
    for (std::size_t k = 0; k < spec.degrees.size(); ++k) d << (k ? "," : "") << spec.degrees[k];
    d << ']';
    std::ostringstream os;
    os << std::left << std::setw(12) << "d" << std::setw(8) << "trials" << std::setw(6) << "aff." << std::setw(8) << "p"
       << std::setw(5) << "D" << std::setw(6) << "max" << std::setw(8) << "mean" << "fail\n";
    std::ostringstream mean;
    mean << std::fixed << std::setprecision(1) << stats.mean_loss;
    os << std::left << std::setw(12) << d.str() << std::setw(8) << spec.trials << std::setw(6)
       << (spec.affine ? "yes" : "no") << std::setw(8) << spec.prime << std::setw(5) << spec.macaulay_bound()
       << std::setw(6) << stats.max_loss << std::setw(8) << mean.str() << '(' << stats.generation_failures << ','
       << stats.fglm_failures << ")\n";
    return os.str();
}

std::string trial_log(const ExperimentSpec& spec, Pipeline pipeline, const LossStats& stats) {
    std::ostringstream os;
    for (const auto& t : stats.trials) {
        nlohmann::json j;
        j["trial"] = t.index;
        j["degrees"] = spec.degrees;
        j["affine"] = spec.affine;
        j["p"] = spec.prime;
        j["N"] = spec.prec;
        j["seed"] = spec.seed;
        j["pipeline"] = to_string(pipeline);
        j["generated"] = t.generated;
        j["converted"] = t.converted;
        if (!t.error.empty()) j["error"] = t.error;
        if (t.report) {
            j["observed_loss"] = t.report->observed_loss;
            j["predicted_loss"] = t.report->predicted_loss();
            j["cond"] = t.report->cond_observed ? nlohmann::json(*t.report->cond_observed) : nlohmann::json(nullptr);
            j["beta"] = t.report->beta;
            j["delta"] = t.report->delta;
            j["field_ops"] = t.report->total_ops();
        }
        j["seconds"] = t.seconds;
        os << j.dump() << '\n';
    }
    return os.str();
}

}  // namespace pfglm
