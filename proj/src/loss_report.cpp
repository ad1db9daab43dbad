#include "pfglm/loss_report.hpp"

#include "pfglm/multiplication.hpp"
#include "pfglm/snf.hpp"

#include <json.hpp>

namespace pfglm {

std::string to_string(Pipeline p) { return p == Pipeline::general ? "general" : "shape"; }

std::uint64_t LossReport::total_ops() const noexcept {
    std::uint64_t t = 0;
    for (const auto& p : op_counts) t += p.counts.total();
    return t;
}

std::string LossReport::to_json() const {
    nlohmann::json j;
    j["pipeline"] = to_string(pipeline);
    j["success"] = success;
    if (!failure.empty()) j["failure"] = failure;
    j["N_in"] = N_in;
    j["beta"] = beta;
    j["beta_minus"] = beta_minus;
    j["delta"] = delta;
    j["n"] = n;
    if (cond_observed) j["cond_observed"] = *cond_observed;
    else j["cond_observed"] = nullptr;
    j["predicted_loss_general"] = predicted_loss_general;
    j["predicted_loss_shape"] = predicted_loss_shape;
    j["observed_loss"] = observed_loss;
    j["gamma"] = gamma;
    j["raw_output_prec"] = {{"general_plus_beta", raw_general_plus},
                            {"general_minus_beta", raw_general_minus},
                            {"shape_plus_beta", raw_shape_plus},
                            {"shape_minus_2cond", raw_shape_minus}};
    j["bound_violated"] = bound_violated();
    nlohmann::json ops = nlohmann::json::object();
    for (const auto& p : op_counts)
        ops[p.phase] = {{"add", p.counts.add}, {"mul", p.counts.mul}, {"inv", p.counts.inv}};
    j["op_counts"] = ops;
    return j.dump(2);
}

LossReport precision_loss_report(const GroebnerBasis& input, const GroebnerBasis* output, std::optional<Prec> cond,
                                 Pipeline pipeline, std::vector<PhaseOps> op_counts, std::string failure) {
    LossReport r;
    r.pipeline = pipeline;
    r.success = output != nullptr;
    r.failure = std::move(failure);
    const Prec in = input.min_prec();
    r.N_in = is_infinite(in) ? 0 : in;
    r.beta = input.beta;
    r.beta_minus = std::min<Prec>(input.beta, 0);
    r.delta = input.delta();
    r.n = input.nvars;
    r.cond_observed = cond;
    const Prec c = cond.value_or(0);
    const Prec d = static_cast<Prec>(r.delta);
    const Prec n = static_cast<Prec>(r.n);
    const Prec k = n * n * (d + 1) * (d + 1);
    r.predicted_loss_general = k * -r.beta_minus + 2 * c;
    r.predicted_loss_shape = d * -r.beta_minus + 2 * c;
    r.gamma = -d * r.beta_minus + 2 * c;
    r.raw_general_plus = r.N_in + k * r.beta - 2 * c;
    r.raw_general_minus = r.N_in - k * r.beta - 2 * c;
    r.raw_shape_plus = r.N_in + r.beta * d - 2 * c;
    r.raw_shape_minus = r.N_in - 2 * c + d * r.beta;
    if (output && !is_infinite(in)) {
        const Prec out = output->min_prec();
        r.observed_loss = is_infinite(out) ? 0 : std::max<Prec>(0, in - out);
    }
    r.op_counts = std::move(op_counts);
    return r;
}

Prec compute_change_condition(const GroebnerBasis& G, const std::vector<Monomial>& B2) {
    std::vector<BallVector> cols;
    for (const auto& m : B2) {
        OrderedPoly f(*G.ring, G.nvars, G.order);
        f.set_term(m, Ball::exact(*G.ring, 1));
        cols.push_back(staircase_coordinates(G, normal_form(G, f)));
    }
    const BallMatrix M = BallMatrix::from_columns(*G.ring, G.delta(), cols);
    return condition_number(snf_approximate(M, false));
}

}  // namespace pfglm
