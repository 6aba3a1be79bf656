#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "bestprox/certifiers.hpp"
#include "bestprox/f_function.hpp"
#include "bestprox/problem.hpp"
#include "bestprox/proximity.hpp"

namespace bestprox {

enum class Outcome { ConvergedTo, CoincidenceFound, Stalled, HypothesisViolated };
std::string_view to_string(Outcome o) noexcept;

enum class IterationMode {
    PsiPreimage,  // x_{i+1} = least core point with psi x_{i+1} = phi x_i
    Xi,           // x_{i+1} = (psi restricted to the core)^{-1}(phi x_i); needs injectivity
};
std::string_view to_string(IterationMode m) noexcept;

/// Preconditions of the existence theorem, each with a witness on failure.
/// Closedness and continuity of the restricted maps hold automatically on a
/// finite space and are always reported as satisfied.
struct HypothesisReport {
    ProximalCores cores;
    bool core_nonempty = true;
    bool phi_core_in_core2 = true;          // phi(S1^0) subset of S2^0
    std::optional<PointId> core2_witness;   // x in S1^0 with phi x outside S2^0
    bool phi_core_in_psi_core = true;       // phi(S1^0) subset of psi(S1^0)
    std::optional<PointId> image_witness;   // x in S1^0 with phi x outside psi(S1^0)
    CertificationReport commuting;
    CertificationReport weak_domination;
    bool closed_continuous_finite = true;

    bool all_hold() const noexcept {
        return core_nonempty && phi_core_in_core2 && phi_core_in_psi_core && commuting.holds &&
               weak_domination.holds;
    }
};

HypothesisReport check_hypotheses(const ProximityProblem& problem, const FFunction& f,
                                  const CertifyOptions& options = {});

struct SolverTrace {
    std::vector<PointId> x_seq;
    std::vector<PointId> a_seq;
    std::vector<double> gaps;  // d(a_i, a_{i+1})
    Outcome outcome = Outcome::Stalled;
    std::optional<PointId> result;
    std::vector<double> diagnostics;  // per-step inequality audit slacks
    IterationMode mode = IterationMode::PsiPreimage;

    std::size_t cycle_length = 0;  // nonzero when stalled on a repeated state
    bool iteration_limit = false;  // stalled because max_iter was reached
    bool alarm = false;            // an internal-consistency check failed
    std::vector<std::string> notes;

    std::optional<HypothesisReport> hypotheses;
    std::optional<CertificationReport> certification;
    std::vector<PointId> oracle;  // full-scan answer the result is checked against
    bool oracle_agrees = false;
    std::optional<bool> xi_agrees;  // set when both iteration modes ran
};

/// The constructive sequence: a_i is the least core point attaining
/// d(S1,S2) against phi x_i, and x_{i+1} the least psi-preimage of phi x_i.
/// Stops at the first a_i = a_{i+1} (coincidence), at a gap below tol_conv
/// (converged), on a repeated state (stalled, cycle), or after max_iter steps.
///
/// Throws Error{NoPreimage} when phi x_i has no psi-preimage in the core and
/// Error{NoAttainment} when it has no attainer. Error{InvalidArgument} if x0 is
/// outside S1^0 or Xi mode is requested for a non-injective psi.
SolverTrace generate_sequence(const ProximityProblem& problem, PointId x0, std::size_t max_iter,
                              IterationMode mode = IterationMode::PsiPreimage);

struct AuditSlack {
    std::size_t step;  // i
    double slack;      // F(d(a_i,a_{i+1})) - [F(d(a_0,a_1)) - i tau]
};

/// Requires a_0 != a_1 != a_2; throws Error{InsufficientTrace} otherwise.
/// Under certified weak domination every slack is <= 0.
std::vector<AuditSlack> per_step_inequality_audit(const SolverTrace& trace, const ProximityProblem& problem,
                                                  const FFunction& f, double tau);

/// Upgrades a coincidence point x (phi x = psi x) to the common best proximity
/// point: the least core point attaining d(S1,S2) against phi x, verified
/// against the full scan. Throws Error{NotCoincidence} or
/// Error{VerificationFailed}.
PointId coincidence_to_cbpp(const ProximityProblem& problem, PointId x, const FFunction& f);

bool psi_injective_on_core(const ProximityProblem& problem, const PointSet& core1);

struct SolveOptions {
    std::optional<PointId> x0;  // default: least core point
    std::size_t max_iter = 10000;
    CertifyOptions certify;
    bool run_xi_mode = true;  // cross-check with the xi iteration when psi|core is injective
};

/// Hypothesis check, sequence generation, coincidence upgrade, audit and
/// oracle cross-check in one pipeline.
SolverTrace solve(const ProximityProblem& problem, const FFunction& f, const SolveOptions& options = {});

/// Picard iteration x_{i+1} = phi x_i for a certified F-weak contraction.
/// Returns outcome HypothesisViolated (with the failing report) when the
/// certificate does not hold.
SolverTrace wardowski_fixed_point(const FiniteMetricSpace& space, const PointMap& phi, const FFunction& f,
                                  PointId x0, std::size_t max_iter = 10000, const CertifyOptions& options = {});

/// Full scan of { x : phi x = x }.
std::vector<PointId> fixed_points(const PointMap& phi);

}  // namespace bestprox
