#include "bestprox/proximity.hpp"

#include "bestprox/error.hpp"

namespace bestprox {

double set_distance(const ProximityProblem& problem) {
    return min_cross_distance(problem.space(), problem.s1(), problem.s2());
}

ProximalCores proximal_cores(const ProximityProblem& problem) {
    const std::size_t n = problem.space().size();
    std::vector<bool> in2(n, false);
    std::vector<PointId> core1;
    for (PointId p : problem.s1().members()) {
        bool attained = false;
        for (PointId q : problem.s2().members()) {
            if (problem.attains(p, q)) {
                attained = true;
                in2[q] = true;
            }
        }
        if (attained) core1.push_back(p);
    }
    std::vector<PointId> core2;
    for (PointId q : problem.s2().members()) {
        if (in2[q]) core2.push_back(q);
    }
    if (core1.empty() || core2.empty()) {
        throw Error(ErrorCode::EmptyCore, "no pair in S1 x S2 attains d(S1,S2) within tol_eq");
    }
    return {PointSet(n, std::move(core1)), PointSet(n, std::move(core2))};
}

CommutingVerdict check_proximal_commutativity(const ProximityProblem& problem) {
    const auto s1 = problem.s1().members();
    const auto& phi = problem.phi();
    const auto& psi = problem.psi();
    for (PointId a : s1) {
        for (PointId b : s1) {
            if (phi(b) == psi(a)) continue;
            for (PointId x : s1) {
                if (problem.attains(a, phi(x)) && problem.attains(b, psi(x))) {
                    return {false, CommutingWitness{a, b, x}};
                }
            }
        }
    }
    return {true, std::nullopt};
}

bool is_common_best_proximity_point(const ProximityProblem& problem, PointId x) {
    if (!problem.s1().contains(x)) throw Error(ErrorCode::UnknownPoint, "point is not in S1");
    return problem.attains(x, problem.phi()(x)) && problem.attains(x, problem.psi()(x));
}

bool is_common_best_proximity_point(const ProximityProblem& problem, std::string_view label) {
    auto p = problem.space().find(label);
    if (!p) throw Error(ErrorCode::UnknownPoint, "unknown point '" + std::string(label) + "'");
    return is_common_best_proximity_point(problem, *p);
}

std::vector<PointId> brute_force_cbpp(const ProximityProblem& problem) {
    std::vector<PointId> out;
    for (PointId x : problem.s1().members()) {
        if (is_common_best_proximity_point(problem, x)) out.push_back(x);
    }
    return out;
}

std::optional<PointId> least_attainer(const ProximityProblem& problem, const PointSet& core1, PointId target) {
    for (PointId a : core1.members()) {
        if (problem.attains(a, target)) return a;
    }
    return std::nullopt;
}

}  // namespace bestprox
