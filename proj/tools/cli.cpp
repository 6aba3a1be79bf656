#include "cli.hpp"

#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <thread>

#include <CLI11.hpp>

#include "bestprox/certifiers.hpp"
#include "bestprox/error.hpp"
#include "bestprox/gallery.hpp"
#include "bestprox/problem_io.hpp"
#include "bestprox/proximity.hpp"
#include "bestprox/report_io.hpp"
#include "bestprox/solver.hpp"

namespace bestprox::cli {

namespace {

constexpr std::uint64_t kEnumerationGuard = 100'000'000;

struct CommonFlags {
    std::string problem;
    std::string f;
    std::optional<double> tau;
    std::optional<double> tol_eq;
    std::optional<double> tol_conv;
    std::string emit = "text";
    bool force_large = false;
    unsigned threads = 0;
};

struct GalleryFlags {
    std::string name;
    std::string out;
    double a = 1.0;
    double b = 3.0;
    std::size_t n = 8;
    std::vector<double> sample;
    std::vector<double> extra;
    std::vector<double> base = {0.0, 1.0, 2.0};
    std::vector<std::size_t> phi_prime = {1, 1, 1};
    std::vector<std::size_t> psi_prime = {0, 1, 2};
};

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_tau) {
    cmd->add_option("--problem", flags.problem, "Problem file (a trailing .yaml may be omitted)")->required();
    cmd->add_option("--f", flags.f, "F function: f1, f2, f3 or f4 (default: the file's, else f1)")
        ->check(CLI::IsMember({"f1", "f2", "f3", "f4"}));
    if (with_tau) cmd->add_option("--tau", flags.tau, "Check this tau instead of only maximizing");
    cmd->add_option("--tol-eq", flags.tol_eq, "Attainment tolerance");
    cmd->add_option("--tol-conv", flags.tol_conv, "Convergence tolerance");
    cmd->add_option("--emit", flags.emit, "Output format")->check(CLI::IsMember({"text", "structured"}));
    cmd->add_flag("--force-large", flags.force_large, "Allow enumerations above 1e8 combinations");
    cmd->add_option("--threads", flags.threads, "Worker threads (0: hardware concurrency)");
}

std::filesystem::path resolve_problem_path(const std::string& name) {
    std::filesystem::path p(name);
    if (std::filesystem::exists(p)) return p;
    std::filesystem::path with_ext(name + ".yaml");
    if (std::filesystem::exists(with_ext)) return with_ext;
    return p;  // load_problem reports the failure
}

struct Loaded {
    ProblemDocument doc;
    FFunction f;
    CertifyOptions certify;
    EmitFormat format;
};

Loaded load(const CommonFlags& flags) {
    auto doc = load_problem(resolve_problem_path(flags.problem));
    if (flags.tol_eq || flags.tol_conv) {
        Tolerances tol = doc.problem.tolerances();
        if (flags.tol_eq) tol.eq = *flags.tol_eq;
        if (flags.tol_conv) tol.conv = *flags.tol_conv;
        doc.problem = doc.problem.with_tolerances(tol);
    }
    FFunction f = !flags.f.empty() ? FFunction::from_name(flags.f) : doc.f.value_or(FFunction::log());
    CertifyOptions certify;
    certify.tau = flags.tau;
    certify.max_combinations = flags.force_large ? 0 : kEnumerationGuard;
    certify.threads = flags.threads ? flags.threads : std::max(1u, std::thread::hardware_concurrency());
    certify.discretized = doc.problem.discretized();
    return {std::move(doc), std::move(f), certify, parse_emit_format(flags.emit)};
}

void emit_header(std::ostream& out, const Loaded& in) {
    if (in.format != EmitFormat::Text) return;
    const auto& p = in.doc.problem;
    out << "problem: " << (in.doc.name.empty() ? "(unnamed)" : in.doc.name) << '\n';
    out << "points: " << p.space().size() << ", |S1| = " << p.s1().size() << ", |S2| = " << p.s2().size() << '\n';
    out << "d(S1,S2) = " << gallery::format_number(p.set_distance()) << '\n';
    if (p.discretized()) out << "discretized instance\n";
    out << '\n';
}

int run_check(const CommonFlags& flags, std::ostream& out) {
    const auto in = load(flags);
    const auto& problem = in.doc.problem;
    const auto& space = problem.space();
    emit_header(out, in);

    const auto commuting = certify_proximal_commutativity(problem);
    const auto weak = certify_f_weak_domination(problem, in.f, in.certify);
    const auto strong = certify_f_domination(problem, in.f, in.certify);
    out << emit_report(space, commuting, in.format);
    out << emit_report(space, weak, in.format);
    out << emit_report(space, strong, in.format);
    if (problem.is_self_map_instance()) {
        out << emit_report(space, certify_f_weak_domination_selfmap(space, problem.phi(), problem.psi(), in.f, in.certify),
                           in.format);
        out << emit_report(space, certify_f_weak_contraction(space, problem.phi(), in.f, in.certify), in.format);
    }
    return commuting.holds && weak.holds ? kSuccess : kNegative;
}

int run_solve(const CommonFlags& flags, const std::string& x0, std::size_t max_iter, std::ostream& out) {
    const auto in = load(flags);
    const auto& problem = in.doc.problem;
    const auto& space = problem.space();
    emit_header(out, in);

    SolveOptions options;
    options.max_iter = max_iter;
    options.certify = in.certify;
    if (!x0.empty()) options.x0 = space.index_of(x0);
    const auto trace = solve(problem, in.f, options);

    if (trace.hypotheses) {
        out << emit_hypotheses(space, *trace.hypotheses, in.format);
        if (!trace.hypotheses->all_hold()) {
            const auto& h = *trace.hypotheses;
            if (!h.commuting.holds) out << emit_report(space, h.commuting, in.format);
            if (!h.weak_domination.holds) out << emit_report(space, h.weak_domination, in.format);
        }
    }
    out << emit_trace(space, trace, in.format);
    const bool ok = trace.result && trace.oracle_agrees && !trace.alarm;
    return ok ? kSuccess : kNegative;
}

int run_oracle(const CommonFlags& flags, std::ostream& out) {
    const auto in = load(flags);
    const auto points = brute_force_cbpp(in.doc.problem);
    out << emit_points(in.doc.problem.space(), "common best proximity points", points, in.format);
    return points.empty() ? kNegative : kSuccess;
}

int run_gallery(const GalleryFlags& g, std::ostream& out) {
    std::optional<ProximityProblem> problem;
    std::string name = g.name;
    if (g.name == "circle") {
        problem = gallery::build_circle(g.a, g.b, g.n);
    } else if (g.name == "cartesian") {
        std::vector<gallery::BasePoint> base;
        for (double v : g.base) base.push_back({gallery::format_number(v), v});
        problem = gallery::build_cartesian(base, g.phi_prime, g.psi_prime);
    } else if (g.name == "ex22") {
        if (!g.sample.empty()) {
            problem = gallery::build_ex22_sample(g.sample);
        } else {
            problem = gallery::build_ex22(g.extra);
        }
    } else {
        const auto sample = g.sample.empty() ? gallery::reciprocal_default_sample() : g.sample;
        problem = gallery::build_reciprocal(sample).as_problem();
    }

    const std::string text = write_problem(*problem, name);
    const std::string path = g.out.empty() ? name + ".yaml" : g.out;
    if (path == "-") {
        out << text;
        return kSuccess;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    file << text;
    if (!file.flush()) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
    out << "wrote " << path << '\n';
    return kSuccess;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Common best proximity points of finite proximity problems", "bestprox"};
    app.require_subcommand(1);

    CommonFlags check_flags, solve_flags, oracle_flags;
    std::string x0;
    std::size_t max_iter = 10000;
    GalleryFlags gallery_flags;

    auto* check = app.add_subcommand("check", "Emit all certification reports for a problem");
    add_common(check, check_flags, true);

    auto* solve_cmd = app.add_subcommand("solve", "Check hypotheses, iterate, and report the result");
    add_common(solve_cmd, solve_flags, true);
    solve_cmd->add_option("--x0", x0, "Start point label (default: least core point)");
    solve_cmd->add_option("--max-iter", max_iter, "Iteration limit");

    auto* oracle = app.add_subcommand("oracle", "Full scan for common best proximity points");
    add_common(oracle, oracle_flags, false);

    auto* gal = app.add_subcommand("gallery", "Write a built-in instance to a problem file");
    gal->add_option("name", gallery_flags.name, "Instance")
        ->required()
        ->check(CLI::IsMember({"circle", "cartesian", "ex22", "reciprocal"}));
    gal->add_option("--out", gallery_flags.out, "Output path (default: <name>.yaml, '-' for stdout)");
    gal->add_option("--a", gallery_flags.a, "circle: inner radius");
    gal->add_option("--b", gallery_flags.b, "circle: outer radius");
    gal->add_option("--n", gallery_flags.n, "circle: sample count (even, >= 4)");
    gal->add_option("--sample", gallery_flags.sample, "ex22 / reciprocal: full sample")->delimiter(',');
    gal->add_option("--extra", gallery_flags.extra, "ex22: samples added to the default")->delimiter(',');
    gal->add_option("--base", gallery_flags.base, "cartesian: base values")->delimiter(',');
    gal->add_option("--phi-prime", gallery_flags.phi_prime, "cartesian: phi' as base indices")->delimiter(',');
    gal->add_option("--psi-prime", gallery_flags.psi_prime, "cartesian: psi' as base indices")->delimiter(',');

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kSuccess : kInputError;
    }

    try {
        if (*check) return run_check(check_flags, out);
        if (*solve_cmd) return run_solve(solve_flags, x0, max_iter, out);
        if (*oracle) return run_oracle(oracle_flags, out);
        return run_gallery(gallery_flags, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }
}

}  // namespace bestprox::cli
