#include "bestprox/solver.hpp"

#include <algorithm>
#include <sstream>

#include "bestprox/error.hpp"

namespace bestprox {

std::string_view to_string(Outcome o) noexcept {
    switch (o) {
    case Outcome::ConvergedTo: return "converged-to";
    case Outcome::CoincidenceFound: return "coincidence-found";
    case Outcome::Stalled: return "stalled";
    case Outcome::HypothesisViolated: return "hypothesis-violated";
    }
    return "unknown";
}

std::string_view to_string(IterationMode m) noexcept {
    return m == IterationMode::Xi ? "xi" : "psi-preimage";
}

HypothesisReport check_hypotheses(const ProximityProblem& problem, const FFunction& f,
                                  const CertifyOptions& options) {
    HypothesisReport h;
    h.cores = proximal_cores(problem);
    const auto& core1 = h.cores.core1;
    const auto& phi = problem.phi();
    const auto& psi = problem.psi();

    std::vector<bool> psi_image(problem.space().size(), false);
    for (PointId x : core1.members()) psi_image[psi(x)] = true;

    for (PointId x : core1.members()) {
        if (h.phi_core_in_core2 && !h.cores.core2.contains(phi(x))) {
            h.phi_core_in_core2 = false;
            h.core2_witness = x;
        }
        if (h.phi_core_in_psi_core && !psi_image[phi(x)]) {
            h.phi_core_in_psi_core = false;
            h.image_witness = x;
        }
    }
    h.commuting = certify_proximal_commutativity(problem);
    h.weak_domination = certify_f_weak_domination(problem, f, options);
    return h;
}

bool psi_injective_on_core(const ProximityProblem& problem, const PointSet& core1) {
    std::vector<bool> hit(problem.space().size(), false);
    for (PointId x : core1.members()) {
        const PointId y = problem.psi()(x);
        if (hit[y]) return false;
        hit[y] = true;
    }
    return true;
}

namespace {

std::string describe(const ProximityProblem& problem, PointId p) { return problem.space().label(p); }

}  // namespace

SolverTrace generate_sequence(const ProximityProblem& problem, PointId x0, std::size_t max_iter,
                              IterationMode mode) {
    const auto cores = proximal_cores(problem);
    const auto& core1 = cores.core1;
    if (!core1.contains(x0)) throw Error(ErrorCode::InvalidArgument, "x0 must lie in the proximal core S1^0");

    const std::size_t n = problem.space().size();
    const auto& phi = problem.phi();
    const auto& psi = problem.psi();

    // xi = (psi|core)^{-1} o phi, tabulated up front
    std::vector<PointId> psi_inverse;
    if (mode == IterationMode::Xi) {
        if (!psi_injective_on_core(problem, core1)) {
            throw Error(ErrorCode::InvalidArgument, "xi iteration needs psi injective on S1^0");
        }
        psi_inverse.assign(n, kNoPoint);
        for (PointId x : core1.members()) psi_inverse[psi(x)] = x;
    }

    auto next_state = [&](PointId x) -> PointId {
        const PointId target = phi(x);
        if (mode == IterationMode::Xi) {
            if (psi_inverse[target] == kNoPoint) {
                throw Error(ErrorCode::NoPreimage, "phi(" + describe(problem, x) + ") has no psi-preimage in S1^0");
            }
            return psi_inverse[target];
        }
        for (PointId y : core1.members()) {
            if (psi(y) == target) return y;
        }
        throw Error(ErrorCode::NoPreimage, "phi(" + describe(problem, x) + ") has no psi-preimage in S1^0");
    };

    SolverTrace trace;
    trace.mode = mode;
    std::vector<std::size_t> first_seen(n, static_cast<std::size_t>(-1));
    PointId x = x0;
    for (std::size_t step = 0;; ++step) {
        auto a = least_attainer(problem, core1, phi(x));
        if (!a) {
            throw Error(ErrorCode::NoAttainment,
                        "no point of S1^0 attains d(S1,S2) against phi(" + describe(problem, x) + ")");
        }
        trace.x_seq.push_back(x);
        trace.a_seq.push_back(*a);
        if (step >= 1) {
            const PointId prev = trace.a_seq[step - 1];
            const double gap = problem.space()(prev, *a);
            trace.gaps.push_back(gap);
            if (prev == *a) {
                trace.outcome = Outcome::CoincidenceFound;
                trace.result = *a;
                return trace;
            }
            if (gap < problem.tol_conv()) {
                trace.outcome = Outcome::ConvergedTo;
                trace.result = *a;
                return trace;
            }
        }
        if (first_seen[x] != static_cast<std::size_t>(-1)) {
            trace.outcome = Outcome::Stalled;
            trace.cycle_length = step - first_seen[x];
            trace.notes.push_back("state repeated with period " + std::to_string(trace.cycle_length) +
                                  "; the sequence cycles without converging");
            return trace;
        }
        first_seen[x] = step;
        if (step >= max_iter) {
            trace.outcome = Outcome::Stalled;
            trace.iteration_limit = true;
            trace.notes.push_back("iteration limit reached");
            return trace;
        }
        x = next_state(x);
    }
}

std::vector<AuditSlack> per_step_inequality_audit(const SolverTrace& trace, const ProximityProblem& problem,
                                                  const FFunction& f, double tau) {
    const auto& a = trace.a_seq;
    if (a.size() < 3 || a[0] == a[1] || a[1] == a[2]) {
        throw Error(ErrorCode::InsufficientTrace, "audit needs three distinct consecutive iterates a0, a1, a2");
    }
    const auto& space = problem.space();
    const double base = f(space(a[0], a[1]));
    std::vector<AuditSlack> out;
    for (std::size_t i = 1; i + 1 < a.size(); ++i) {
        if (a[i] == a[i + 1]) continue;
        out.push_back({i, f(space(a[i], a[i + 1])) - (base - static_cast<double>(i) * tau)});
    }
    return out;
}

PointId coincidence_to_cbpp(const ProximityProblem& problem, PointId x, const FFunction& f) {
    if (!problem.s1().contains(x)) throw Error(ErrorCode::UnknownPoint, "point is not in S1");
    const auto& space = problem.space();
    if (problem.phi()(x) != problem.psi()(x)) {
        throw Error(ErrorCode::NotCoincidence, "phi(" + space.label(x) + ") != psi(" + space.label(x) + ")");
    }
    const auto cores = proximal_cores(problem);
    auto a = least_attainer(problem, cores.core1, problem.phi()(x));
    if (!a) throw Error(ErrorCode::NoAttainment, "no core point attains d(S1,S2) against phi(" + space.label(x) + ")");

    if (!is_common_best_proximity_point(problem, *a)) {
        throw Error(ErrorCode::VerificationFailed,
                    "attainer " + space.label(*a) + " is not a common best proximity point");
    }
    const auto oracle = brute_force_cbpp(problem);
    if (oracle.size() != 1 || oracle.front() != *a) {
        std::ostringstream os;
        os << "full scan found " << oracle.size() << " common best proximity point(s), expected only "
           << space.label(*a);
        for (PointId other : oracle) {
            if (other == *a) continue;
            // two distinct points give tau + F(d) <= F(M_d(a,b,a,b)) = F(d)
            const double d = space(*a, other);
            os << "; pair (" << space.label(*a) << ", " << space.label(other) << ") has slack "
               << f(md(space, *a, other, *a, other)) - f(d);
            break;
        }
        throw Error(ErrorCode::VerificationFailed, os.str());
    }
    return *a;
}

SolverTrace solve(const ProximityProblem& problem, const FFunction& f, const SolveOptions& options) {
    auto hypotheses = check_hypotheses(problem, f, options.certify);
    const auto oracle = brute_force_cbpp(problem);
    if (!hypotheses.all_hold()) {
        SolverTrace trace;
        trace.outcome = Outcome::HypothesisViolated;
        trace.oracle = oracle;
        trace.oracle_agrees = true;  // nothing was claimed
        trace.hypotheses = std::move(hypotheses);
        return trace;
    }

    const auto& core1 = hypotheses.cores.core1;
    const PointId x0 = options.x0.value_or(core1.members().front());
    SolverTrace trace = generate_sequence(problem, x0, options.max_iter, IterationMode::PsiPreimage);

    if (options.run_xi_mode && psi_injective_on_core(problem, core1)) {
        const auto xi = generate_sequence(problem, x0, options.max_iter, IterationMode::Xi);
        trace.xi_agrees = xi.x_seq == trace.x_seq && xi.a_seq == trace.a_seq && xi.outcome == trace.outcome;
        if (!*trace.xi_agrees) {
            trace.alarm = true;
            trace.notes.push_back("xi iteration disagrees with psi-preimage iteration");
        }
    }

    if (trace.result && (trace.outcome == Outcome::CoincidenceFound || trace.outcome == Outcome::ConvergedTo)) {
        if (problem.phi()(*trace.result) == problem.psi()(*trace.result)) {
            trace.result = coincidence_to_cbpp(problem, *trace.result, f);
        } else {
            trace.notes.push_back("limit point " + problem.space().label(*trace.result) +
                                  " is not a coincidence point");
        }
    }

    const auto& tau = hypotheses.weak_domination.tau_max;
    if (tau.is_finite() && tau.value > 0.0) {
        const auto& a = trace.a_seq;
        if (a.size() >= 3 && a[0] != a[1] && a[1] != a[2]) {
            for (const auto& s : per_step_inequality_audit(trace, problem, f, tau.value)) {
                trace.diagnostics.push_back(s.slack);
                if (s.slack > 0.0) {
                    trace.alarm = true;
                    trace.notes.push_back("audit slack positive at step " + std::to_string(s.step));
                }
            }
        }
    }

    trace.oracle = oracle;
    trace.oracle_agrees = trace.result ? (oracle.size() == 1 && oracle.front() == *trace.result) : oracle.empty();
    if (!trace.oracle_agrees) {
        trace.alarm = true;
        trace.notes.push_back("result disagrees with the full-scan oracle");
    }
    trace.hypotheses = std::move(hypotheses);
    return trace;
}

std::vector<PointId> fixed_points(const PointMap& phi) {
    std::vector<PointId> out;
    for (PointId x = 0; x < phi.universe(); ++x) {
        if (phi.defined(x) && phi(x) == x) out.push_back(x);
    }
    return out;
}

SolverTrace wardowski_fixed_point(const FiniteMetricSpace& space, const PointMap& phi, const FFunction& f,
                                  PointId x0, std::size_t max_iter, const CertifyOptions& options) {
    if (x0 >= space.size()) throw Error(ErrorCode::UnknownPoint, "x0 outside the space");
    SolverTrace trace;
    trace.certification = certify_f_weak_contraction(space, phi, f, options);
    trace.oracle = fixed_points(phi);
    if (!trace.certification->holds) {
        trace.outcome = Outcome::HypothesisViolated;
        trace.oracle_agrees = true;
        return trace;
    }

    std::vector<std::size_t> first_seen(space.size(), static_cast<std::size_t>(-1));
    PointId x = x0;
    for (std::size_t step = 0;; ++step) {
        trace.x_seq.push_back(x);
        trace.a_seq.push_back(x);
        if (step >= 1) {
            const PointId prev = trace.x_seq[step - 1];
            trace.gaps.push_back(space(prev, x));
            if (prev == x) {
                trace.outcome = Outcome::ConvergedTo;
                trace.result = x;
                break;
            }
        }
        if (first_seen[x] != static_cast<std::size_t>(-1)) {
            trace.outcome = Outcome::Stalled;
            trace.cycle_length = step - first_seen[x];
            trace.alarm = true;
            trace.notes.push_back("certified contraction produced a cycle");
            break;
        }
        first_seen[x] = step;
        if (step >= max_iter) {
            trace.outcome = Outcome::Stalled;
            trace.iteration_limit = true;
            trace.notes.push_back("iteration limit reached");
            break;
        }
        x = phi(x);
    }
    trace.oracle_agrees = trace.result && trace.oracle.size() == 1 && trace.oracle.front() == *trace.result;
    if (trace.result && !trace.oracle_agrees) {
        trace.alarm = true;
        trace.notes.push_back("fixed point is not unique under full scan");
    }
    return trace;
}

}  // namespace bestprox
