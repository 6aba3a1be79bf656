#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "bestprox/problem.hpp"

namespace bestprox {

/// d(S1,S2): the minimum of d over S1 x S2.
double set_distance(const ProximityProblem& problem);

struct ProximalCores {
    PointSet core1;  // S1^0
    PointSet core2;  // S2^0
};

/// Points of S1 (resp. S2) taking part in some pair that attains d(S1,S2)
/// within tol_eq. Throws Error{EmptyCore} rather than returning an empty core.
ProximalCores proximal_cores(const ProximityProblem& problem);

struct CommutingWitness {
    PointId a;
    PointId b;
    PointId x;
};

struct CommutingVerdict {
    bool holds = true;
    std::optional<CommutingWitness> witness;  // first violating (a,b,x) in scan order
};

/// [d(a,phi x) = d(b,psi x) = d(S1,S2)] => phi b = psi a, for all a,b,x in S1.
CommutingVerdict check_proximal_commutativity(const ProximityProblem& problem);

/// Throws Error{UnknownPoint} if x is not in S1.
bool is_common_best_proximity_point(const ProximityProblem& problem, PointId x);
bool is_common_best_proximity_point(const ProximityProblem& problem, std::string_view label);

/// Full scan over S1; the ground-truth set the solver is checked against.
std::vector<PointId> brute_force_cbpp(const ProximityProblem& problem);

/// Least a in S1^0 attaining d(a, target) = d(S1,S2), if any.
std::optional<PointId> least_attainer(const ProximityProblem& problem, const PointSet& core1, PointId target);

}  // namespace bestprox
