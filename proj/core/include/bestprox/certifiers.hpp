#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "bestprox/f_function.hpp"
#include "bestprox/problem.hpp"
#include "bestprox/proximity.hpp"

namespace bestprox {

enum class Condition { ProximalCommuting, FDominates, FWeaklyDominates, FWeakContraction };

std::string_view to_string(Condition c) noexcept;

/// The six points of one instance of the domination antecedent, plus the
/// inequality sides evaluated on it. For the self-map certifiers a1 = phi x1,
/// a2 = phi x2 and b1, b2 are psi x1, psi x2 (or x1, x2 for contractions).
struct DominationWitness {
    PointId a1 = kNoPoint;
    PointId a2 = kNoPoint;
    PointId b1 = kNoPoint;
    PointId b2 = kNoPoint;
    PointId x1 = kNoPoint;
    PointId x2 = kNoPoint;
    double lhs = 0.0;    // F(d(a1,a2))
    double rhs = 0.0;    // F(comparator); -inf when the comparator is zero
    double slack = 0.0;  // rhs - lhs
};

enum class ViolationKind {
    NonPositiveSlack,       // tau + lhs <= rhs fails for every tau > 0
    ZeroComparator,         // M_d = 0 on an admissible tuple
    EqualComparatorPoints,  // b1 = b2 under F-domination
    BelowRequestedTau,      // slack < the user-supplied tau
    NotCommuting,           // proximal commutativity counterexample
};

std::string_view to_string(ViolationKind k) noexcept;

/// Supremum of admissible margins: the minimum slack over admissible tuples,
/// or one of the two degenerate states.
struct TauMax {
    enum class State { Finite, Unbounded, Vacuous };
    State state = State::Vacuous;
    double value = 0.0;

    static TauMax finite(double v) { return {State::Finite, v}; }
    static TauMax unbounded() { return {State::Unbounded, 0.0}; }
    static TauMax vacuous() { return {State::Vacuous, 0.0}; }

    bool is_finite() const noexcept { return state == State::Finite; }
    bool admits_positive_tau() const noexcept { return state != State::Finite || value > 0.0; }
};

struct CertificationReport {
    Condition condition = Condition::FWeaklyDominates;
    bool holds = false;
    TauMax tau_max;
    std::optional<double> tau_checked;  // set when a user tau was checked
    std::optional<DominationWitness> binding_witness;
    std::optional<DominationWitness> violation;
    std::optional<ViolationKind> violation_kind;
    std::optional<CommutingWitness> commuting_witness;
    std::string f_name;
    bool self_map = false;
    bool discretized = false;
    std::uint64_t admissible = 0;  // number of tuples satisfying the antecedent
};

struct CertifyOptions {
    /// Check this tau instead of only maximizing. Must be positive.
    std::optional<double> tau;
    /// Refuse enumerations larger than this (0 disables the guard).
    std::uint64_t max_combinations = 0;
    /// Worker threads; results are merged by least witness so they do not
    /// depend on this value.
    unsigned threads = 1;
    /// Tags self-map reports (the problem carries its own flag).
    bool discretized = false;
};

/// max{ d(b1,b2), d(a2,b2), d(a1,b1), (d(a2,b1) + d(a1,b2)) / 2 }.
double md(const FiniteMetricSpace& space, PointId a1, PointId a2, PointId b1, PointId b2);
/// Label form; throws Error{UnknownPoint}.
double md(const FiniteMetricSpace& space, std::string_view a1, std::string_view a2, std::string_view b1,
          std::string_view b2);

struct Sextuple {
    PointId a1, a2, b1, b2, x1, x2;
};

/// Upper bound on tuples the sextuple certifiers visit after the antecedent
/// pre-filter: (sum over x of |A(x)| * |B(x)|)^2.
std::uint64_t sextuple_enumeration_size(const ProximityProblem& problem);

/// Visits every (a1,a2,b1,b2,x1,x2) in S1^6 with a1 != a2, d(a_k, phi x_k) and
/// d(b_k, psi x_k) all equal to d(S1,S2) within tol_eq.
void for_each_admissible_sextuple(const ProximityProblem& problem,
                                  const std::function<void(const Sextuple&)>& visit);

CertificationReport certify_proximal_commutativity(const ProximityProblem& problem);

/// psi F-weakly dominates phi proximally (comparator M_d(a1,a2,b1,b2)).
CertificationReport certify_f_weak_domination(const ProximityProblem& problem, const FFunction& f,
                                              const CertifyOptions& options = {});

/// psi F-dominates phi proximally (comparator d(b1,b2), b1 != b2 required).
CertificationReport certify_f_domination(const ProximityProblem& problem, const FFunction& f,
                                         const CertifyOptions& options = {});

/// phi is an F-weak contraction on the whole space.
CertificationReport certify_f_weak_contraction(const FiniteMetricSpace& space, const PointMap& phi,
                                               const FFunction& f, const CertifyOptions& options = {});

/// psi F-weakly dominates phi, both self-maps of the space.
CertificationReport certify_f_weak_domination_selfmap(const FiniteMetricSpace& space, const PointMap& phi,
                                                      const PointMap& psi, const FFunction& f,
                                                      const CertifyOptions& options = {});

}  // namespace bestprox
