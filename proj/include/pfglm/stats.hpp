#pragma once

#include "pfglm/fixture_basis.hpp"
#include "pfglm/loss_report.hpp"
#include "pfglm/random_system.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pfglm {

struct TrialRecord {
    std::uint64_t index = 0;
    bool generated = false;
    bool converted = false;
    std::string error;
    std::optional<LossReport> report;
    double seconds = 0;
};

struct LossStats {
    Prec max_loss = 0;
    double mean_loss = 0;
    /// Failures to produce an input basis, then failures of the conversion.
    std::size_t generation_failures = 0;
    std::size_t fglm_failures = 0;
    std::size_t successes = 0;
    std::size_t bound_violations = 0;
    std::vector<TrialRecord> trials;
};

struct StatsOptions {
    FixtureMethod fixture = FixtureMethod::automatic;
    /// 0 uses the OpenMP default.
    int threads = 0;
};

/// Runs spec.trials independent trials (in parallel), each converting a
/// truncated exact grevlex basis of a random system to lex.
LossStats loss_statistics(const ExperimentSpec& spec, Pipeline pipeline, const StatsOptions& options = {});

/// Serial reference of loss_statistics; identical records.
LossStats loss_statistics_serial(const ExperimentSpec& spec, Pipeline pipeline, const StatsOptions& options = {});

/// One trial.
TrialRecord run_trial(const ExperimentSpec& spec, Pipeline pipeline, std::uint64_t index, FixtureMethod fixture);

/// Header plus one row: d, trials, aff., p, D, max, mean, fail.
std::string format_table(const ExperimentSpec& spec, const LossStats& stats);

/// One JSON object per trial, newline separated.
std::string trial_log(const ExperimentSpec& spec, Pipeline pipeline, const LossStats& stats);

}  // namespace pfglm
