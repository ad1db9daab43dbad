#include "pfglm/errors.hpp"
#include "pfglm/exact_poly.hpp"
#include "pfglm/fglm.hpp"
#include "pfglm/fixture_basis.hpp"
#include "pfglm/hensel.hpp"
#include "pfglm/shape.hpp"
#include "pfglm/snf.hpp"
#include "pfglm/stats.hpp"
#include "pfglm/text_format.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace pfglm;

namespace {

enum Exit { kOk = 0, kPrecision = 2, kInput = 3, kHypothesis = 4 };

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_report(const std::string& path, const LossReport& r) {
    if (path.empty()) {
        std::cerr << r.to_json() << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << r.to_json() << '\n';
}

// The file as a reduced basis in its own ordering, or else the truncated
// grevlex basis of the ideal it generates.
GroebnerBasis load_basis(const SystemFile& sys) {
    try {
        return GroebnerBasis::from_polys(sys.polys, sys.order, sys.vars);
    } catch (const NotReducedBasis&) {
    }
    if (!sys.prec) throw std::runtime_error("input is not a reduced basis; a prec line is needed to compute one");
    std::vector<ExactPoly> F;
    for (const auto& f : sys.polys) F.push_back(lift_exact(f));
    GroebnerBasis G = truncated_grevlex_basis(F, *sys.ring, *sys.prec);
    G.names = sys.vars;
    return G;
}

GroebnerBasis as_grevlex(const GroebnerBasis& G) {
    if (G.order.kind == OrderKind::grevlex) return G;
    return fglm_change_order(G, OrderTag{OrderKind::grevlex});
}

int cmd_convert(const std::string& in, const std::string& to, bool shape, const std::string& report) {
    const SystemFile sys = parse_system(read_file(in));
    const GroebnerBasis G = load_basis(sys);
    const OrderTag target = parse_order(to);
    if (shape) {
        if (target.kind != OrderKind::lex) throw std::runtime_error("--shape produces a lex basis");
        const ShapeRun run = fglm_shape_run(as_grevlex(G));
        write_report(report, run.report);
        if (!run.basis) throw InsufficientPrecision(run.report.failure);
        std::cout << emit_basis(*run.basis);
        return kOk;
    }
    const FglmRun run = fglm_run(G, target);
    write_report(report, run.report);
    if (!run.basis) throw InsufficientPrecision(run.report.failure);
    GroebnerBasis out = *run.basis;
    out.names = sys.vars;
    std::cout << emit_basis(out);
    return kOk;
}

std::string valuation_text(const Valuation& v) {
    return v.known ? std::to_string(v.value) : ">=" + std::to_string(v.value);
}

int cmd_snf(const std::string& path, bool precise, const std::string& prime, std::optional<Prec> prec) {
    const Ring* ring = prime.empty() ? nullptr : &Ring::of(mpz_class(prime));
    const BallMatrix M = parse_matrix(read_file(path), ring, prec);
    SnfFactorization f = snf_approximate(M);
    if (precise) f = snf_precise(f);
    std::cout << "diag_valuations";
    for (const auto& v : f.diag_valuations) std::cout << ' ' << valuation_text(v);
    std::cout << "\nop_count " << f.op_count << '\n';
    if (f.full_rank_certified()) std::cout << "cond " << condition_number(f) << '\n';
    std::cout << "P\n" << f.P.to_string() << "\nDelta\n" << f.Delta.to_string() << "\nQ\n" << f.Q.to_string() << '\n';
    return kOk;
}

int cmd_solve(const std::string& in, std::optional<Prec> target, const std::string& report) {
    const SystemFile sys = parse_system(read_file(in));
    const GroebnerBasis G = as_grevlex(load_basis(sys));
    const ShapeRun run = fglm_shape_run(G);
    write_report(report, run.report);
    if (!run.basis) throw InsufficientPrecision(run.report.failure);
    GroebnerBasis lex = *run.basis;
    lex.names = sys.vars;
    std::cout << emit_basis(lex);
    const LiftedRoots roots = hensel_lift_roots(lex, target.value_or(kInfinity));
    for (const auto& pt : roots.points) {
        std::cout << "point";
        for (std::size_t i = 0; i < pt.size(); ++i) std::cout << ' ' << sys.vars[i] << '=' << pt[i].to_string();
        std::cout << '\n';
    }
    for (const auto& s : roots.singular)
        std::cerr << "singular root " << s.residue.get_str() << " mod " << G.ring->to_string() << " (multiplicity "
                  << s.multiplicity << "), not lifted\n";
    return kOk;
}

int cmd_stats(const std::vector<unsigned>& degrees, unsigned long prime, Prec prec, std::size_t trials,
              std::uint64_t seed, bool affine, const std::string& pipeline, const std::string& log, int threads) {
    ExperimentSpec spec;
    spec.degrees = degrees;
    spec.affine = affine;
    spec.prime = prime;
    spec.prec = prec;
    spec.trials = trials;
    spec.seed = seed;
    const Pipeline pl = pipeline == "shape" ? Pipeline::shape : Pipeline::general;
    StatsOptions options;
    options.threads = threads;
    const LossStats stats = loss_statistics(spec, pl, options);
    std::cout << format_table(spec, stats);
    if (!log.empty()) {
        std::ofstream out(log);
        if (!out) throw std::runtime_error("cannot write " + log);
        out << trial_log(spec, pl, stats);
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Change of monomial ordering for Groebner bases over p-adic fields"};
    app.require_subcommand(1);

    std::string in, to = "lex", report, matrix, prime, pipeline = "general", log;
    bool shape = false, precise = false, affine = false;
    std::optional<Prec> prec, target;
    std::vector<unsigned> degrees;
    unsigned long stats_prime = 2;
    Prec stats_prec = 150;
    std::size_t trials = 20;
    std::uint64_t seed = 0;
    int threads = 0;

    auto* convert = app.add_subcommand("convert", "convert a basis to another ordering");
    convert->add_option("--in", in, "system file")->required()->check(CLI::ExistingFile);
    convert->add_option("--to", to, "target ordering")->check(CLI::IsMember({"lex", "grevlex", "deglex"}));
    convert->add_flag("--shape", shape, "use the shape-position path (grevlex input, lex output)");
    convert->add_option("--report", report, "write the loss report here instead of stderr");

    auto* snf = app.add_subcommand("snf", "Smith normal form of a matrix");
    snf->add_option("--matrix", matrix, "matrix file")->required()->check(CLI::ExistingFile);
    snf->add_flag("--precise", precise, "refine to an exact Smith form");
    snf->add_option("--prime", prime, "prime when the file has no p line");
    snf->add_option("--prec", prec, "default entry precision");

    auto* solve = app.add_subcommand("solve", "solve a system in shape position");
    solve->add_option("--in", in, "system file")->required()->check(CLI::ExistingFile);
    solve->add_option("--lift-prec", target, "precision to lift roots to");
    solve->add_option("--report", report, "write the loss report here instead of stderr");

    auto* stats = app.add_subcommand("stats", "precision-loss statistics on random systems");
    stats->add_option("--degrees", degrees, "degrees of the equations")->required()->delimiter(',');
    stats->add_option("--prime", stats_prime, "prime");
    stats->add_option("--prec", stats_prec, "input precision");
    stats->add_option("--trials", trials, "number of trials");
    stats->add_option("--seed", seed, "seed");
    stats->add_flag("--affine", affine, "non-homogeneous systems");
    stats->add_option("--pipeline", pipeline, "conversion pipeline")->check(CLI::IsMember({"general", "shape"}));
    stats->add_option("--log", log, "per-trial JSON lines");
    stats->add_option("--threads", threads, "worker threads (0: default)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInput;
    }

    try {
        if (*convert) return cmd_convert(in, to, shape, report);
        if (*snf) return cmd_snf(matrix, precise, prime, prec);
        if (*solve) return cmd_solve(in, target, report);
        return cmd_stats(degrees, stats_prime, stats_prec, trials, seed, affine, pipeline, log, threads);
    } catch (const InsufficientPrecision& e) {
        std::cerr << "insufficient precision: " << e.what() << '\n';
        return kPrecision;
    } catch (const NotSemiStable& e) {
        std::cerr << "not semi-stable: " << e.what() << '\n';
        return kHypothesis;
    } catch (const NotShapePosition& e) {
        std::cerr << "not in shape position: " << e.what() << '\n';
        return kHypothesis;
    } catch (const NotZeroDimensional& e) {
        std::cerr << "not zero-dimensional: " << e.what() << '\n';
        return kHypothesis;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInput;
    }
}
