#pragma once

#include "pfglm/field_ops.hpp"
#include "pfglm/groebner.hpp"

#include <optional>
#include <string>
#include <vector>

namespace pfglm {

enum class Pipeline { general, shape };

std::string to_string(Pipeline p);

struct PhaseOps {
    std::string phase;
    field_ops::Counts counts;
};

/// Observed against predicted precision loss for one conversion run.
///
/// Predicted losses use beta_minus = min(beta, 0). The raw_* fields keep the
/// output precision exactly as the two competing published statements give it
/// (with the signed beta), for inspection only.
struct LossReport {
    Pipeline pipeline = Pipeline::general;
    bool success = false;
    std::string failure;

    Prec N_in = 0;
    Prec beta = 0;
    Prec beta_minus = 0;
    std::size_t delta = 0;
    std::size_t n = 0;
    std::optional<Prec> cond_observed;

    Prec predicted_loss_general = 0;
    Prec predicted_loss_shape = 0;
    Prec observed_loss = 0;
    Prec gamma = 0;

    Prec raw_general_plus = 0;   // N + n^2 (delta+1)^2 beta - 2 cond
    Prec raw_general_minus = 0;  // N - n^2 (delta+1)^2 beta - 2 cond
    Prec raw_shape_plus = 0;     // N + beta delta - 2 cond
    Prec raw_shape_minus = 0;    // N - 2 cond + delta beta

    std::vector<PhaseOps> op_counts;

    Prec predicted_loss() const noexcept {
        return pipeline == Pipeline::general ? predicted_loss_general : predicted_loss_shape;
    }
    bool bound_violated() const noexcept { return success && observed_loss > predicted_loss(); }
    std::uint64_t total_ops() const noexcept;

    /// JSON object.
    std::string to_json() const;
};

/// Fills every field from the run's input, output (null on failure) and the
/// realized condition number.
LossReport precision_loss_report(const GroebnerBasis& input, const GroebnerBasis* output, std::optional<Prec> cond,
                                 Pipeline pipeline, std::vector<PhaseOps> op_counts, std::string failure = {});

/// Condition number of the matrix whose columns are the input-order normal
/// forms of the monomials of B2. Throws RankNotCertified.
Prec compute_change_condition(const GroebnerBasis& G, const std::vector<Monomial>& B2);

}  // namespace pfglm
