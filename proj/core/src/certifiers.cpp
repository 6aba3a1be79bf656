#include "bestprox/certifiers.hpp"

#include <algorithm>
#include <limits>
#include <thread>
#include <vector>

#include "bestprox/error.hpp"

namespace bestprox {

std::string_view to_string(Condition c) noexcept {
    switch (c) {
    case Condition::ProximalCommuting: return "proximal-commuting";
    case Condition::FDominates: return "f-dominates";
    case Condition::FWeaklyDominates: return "f-weakly-dominates";
    case Condition::FWeakContraction: return "f-weak-contraction";
    }
    return "unknown";
}

std::string_view to_string(ViolationKind k) noexcept {
    switch (k) {
    case ViolationKind::NonPositiveSlack: return "non-positive-slack";
    case ViolationKind::ZeroComparator: return "zero-comparator";
    case ViolationKind::EqualComparatorPoints: return "equal-comparator-points";
    case ViolationKind::BelowRequestedTau: return "below-requested-tau";
    case ViolationKind::NotCommuting: return "not-commuting";
    }
    return "unknown";
}

double md(const FiniteMetricSpace& space, PointId a1, PointId a2, PointId b1, PointId b2) {
    return std::max({space(b1, b2), space(a2, b2), space(a1, b1), (space(a2, b1) + space(a1, b2)) / 2.0});
}

double md(const FiniteMetricSpace& space, std::string_view a1, std::string_view a2, std::string_view b1,
          std::string_view b2) {
    return md(space, space.index_of(a1), space.index_of(a2), space.index_of(b1), space.index_of(b2));
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

using ScanKey = std::array<PointId, 6>;

struct Candidate {
    ScanKey key;
    DominationWitness witness;
    std::optional<ViolationKind> degenerate;  // zero comparator or b1 == b2
};

/// Running min-slack / least-violation state for one partition of the scan.
/// Ties are broken by the scan key so merging partitions is order-free.
struct Accumulator {
    std::optional<double> tau;
    std::uint64_t admissible = 0;
    std::optional<Candidate> binding;
    std::optional<Candidate> violation;
    std::optional<ViolationKind> violation_kind;

    void offer(const Candidate& c) {
        ++admissible;
        const double slack = c.witness.slack;
        if (!binding || slack < binding->witness.slack ||
            (slack == binding->witness.slack && c.key < binding->key)) {
            binding = c;
        }
        std::optional<ViolationKind> kind = c.degenerate;
        if (!kind && !(slack > 0.0)) kind = ViolationKind::NonPositiveSlack;
        if (!kind && tau && !(slack >= *tau)) kind = ViolationKind::BelowRequestedTau;
        if (kind && (!violation || c.key < violation->key)) {
            violation = c;
            violation_kind = kind;
        }
    }

    void merge(const Accumulator& other) {
        admissible += other.admissible;
        if (other.binding) {
            const auto& b = *other.binding;
            if (!binding || b.witness.slack < binding->witness.slack ||
                (b.witness.slack == binding->witness.slack && b.key < binding->key)) {
                binding = b;
            }
        }
        if (other.violation && (!violation || other.violation->key < violation->key)) {
            violation = other.violation;
            violation_kind = other.violation_kind;
        }
    }
};

CertificationReport finish(const Accumulator& acc, Condition condition, const FFunction& f, bool self_map,
                           bool discretized) {
    CertificationReport r;
    r.condition = condition;
    r.f_name = std::string(f.name());
    r.self_map = self_map;
    r.discretized = discretized;
    r.admissible = acc.admissible;
    r.tau_checked = acc.tau;
    if (!acc.binding) {
        r.holds = true;
        r.tau_max = TauMax::vacuous();
        return r;
    }
    r.tau_max = TauMax::finite(acc.binding->witness.slack);
    r.holds = !acc.violation.has_value();
    if (r.holds) {
        r.binding_witness = acc.binding->witness;
    } else {
        r.violation = acc.violation->witness;
        r.violation_kind = acc.violation_kind;
    }
    return r;
}

void validate_tau(const CertifyOptions& options) {
    if (options.tau && !(*options.tau > 0.0)) throw Error(ErrorCode::InvalidArgument, "tau must be positive");
}

/// Runs body(worker_index, accumulator) on `threads` workers and merges.
template <typename Body>
Accumulator run_partitioned(const CertifyOptions& options, std::size_t work_items, Body body) {
    const unsigned threads =
        std::max(1u, std::min<unsigned>(options.threads, static_cast<unsigned>(std::max<std::size_t>(work_items, 1))));
    std::vector<Accumulator> parts(threads);
    for (auto& p : parts) p.tau = options.tau;
    if (threads == 1) {
        body(0u, 1u, parts[0]);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back([&, t] { body(t, threads, parts[t]); });
        }
        for (auto& th : pool) th.join();
    }
    Accumulator total;
    total.tau = options.tau;
    for (const auto& p : parts) total.merge(p);
    return total;
}

/// Antecedent pre-filter: attainers[x] lists a in S1 with d(a, map x) = d(S1,S2).
std::vector<std::vector<PointId>> attainer_lists(const ProximityProblem& problem, const PointMap& map) {
    std::vector<std::vector<PointId>> out(problem.space().size());
    for (PointId x : problem.s1().members()) {
        for (PointId a : problem.s1().members()) {
            if (problem.attains(a, map(x))) out[x].push_back(a);
        }
    }
    return out;
}

enum class Comparator { Md, PairDistance };

CertificationReport certify_sextuples(const ProximityProblem& problem, const FFunction& f,
                                      const CertifyOptions& options, Comparator comparator) {
    validate_tau(options);
    proximal_cores(problem);  // EmptyCore
    if (options.max_combinations != 0) {
        const auto size = sextuple_enumeration_size(problem);
        if (size > options.max_combinations) {
            throw Error(ErrorCode::EnumerationTooLarge,
                        "filtered enumeration has " + std::to_string(size) + " combinations (limit " +
                            std::to_string(options.max_combinations) + ")");
        }
    }
    const auto& space = problem.space();
    const auto a_lists = attainer_lists(problem, problem.phi());
    const auto b_lists = attainer_lists(problem, problem.psi());
    const auto s1 = problem.s1().members();

    auto acc = run_partitioned(options, s1.size(), [&](unsigned part, unsigned parts, Accumulator& local) {
        for (std::size_t i = part; i < s1.size(); i += parts) {
            const PointId x1 = s1[i];
            for (PointId x2 : s1) {
                for (PointId a1 : a_lists[x1]) {
                    for (PointId a2 : a_lists[x2]) {
                        if (a1 == a2) continue;
                        const double lhs = f(space(a1, a2));
                        for (PointId b1 : b_lists[x1]) {
                            for (PointId b2 : b_lists[x2]) {
                                Candidate c{{a1, a2, b1, b2, x1, x2}, {a1, a2, b1, b2, x1, x2, lhs, 0.0, 0.0}, {}};
                                const double comp =
                                    comparator == Comparator::Md ? md(space, a1, a2, b1, b2) : space(b1, b2);
                                if (comp > 0.0) {
                                    c.witness.rhs = f(comp);
                                } else {
                                    c.witness.rhs = kNegInf;
                                    c.degenerate = comparator == Comparator::Md
                                                       ? ViolationKind::ZeroComparator
                                                       : ViolationKind::EqualComparatorPoints;
                                }
                                c.witness.slack = c.witness.rhs - c.witness.lhs;
                                local.offer(c);
                            }
                        }
                    }
                }
            }
        }
    });
    return finish(acc, comparator == Comparator::Md ? Condition::FWeaklyDominates : Condition::FDominates, f,
                  false, problem.discretized());
}

void require_total(const FiniteMetricSpace& space, const PointMap& map, const char* name) {
    if (map.universe() != space.size() || !map.is_total()) {
        throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be a total self-map of the space");
    }
}

/// Pair scan shared by the contraction and self-map domination certifiers;
/// `comparator_points` yields (b1, b2) for a pair (x1, x2).
template <typename ComparatorPoints>
CertificationReport certify_pairs(const FiniteMetricSpace& space, const PointMap& phi, const FFunction& f,
                                  const CertifyOptions& options, Condition condition, bool self_map,
                                  ComparatorPoints comparator_points) {
    validate_tau(options);
    const std::size_t n = space.size();
    auto acc = run_partitioned(options, n, [&](unsigned part, unsigned parts, Accumulator& local) {
        for (PointId x1 = part; x1 < n; x1 += parts) {
            for (PointId x2 = 0; x2 < n; ++x2) {
                const PointId a1 = phi(x1);
                const PointId a2 = phi(x2);
                if (a1 == a2) continue;
                const auto [b1, b2] = comparator_points(x1, x2);
                Candidate c{{x1, x2, 0, 0, 0, 0}, {a1, a2, b1, b2, x1, x2, f(space(a1, a2)), 0.0, 0.0}, {}};
                const double comp = md(space, a1, a2, b1, b2);
                if (comp > 0.0) {
                    c.witness.rhs = f(comp);
                } else {
                    c.witness.rhs = kNegInf;
                    c.degenerate = ViolationKind::ZeroComparator;
                }
                c.witness.slack = c.witness.rhs - c.witness.lhs;
                local.offer(c);
            }
        }
    });
    return finish(acc, condition, f, self_map, options.discretized);
}

}  // namespace

std::uint64_t sextuple_enumeration_size(const ProximityProblem& problem) {
    std::uint64_t per_x = 0;
    for (PointId x : problem.s1().members()) {
        std::uint64_t a = 0, b = 0;
        for (PointId p : problem.s1().members()) {
            a += problem.attains(p, problem.phi()(x)) ? 1 : 0;
            b += problem.attains(p, problem.psi()(x)) ? 1 : 0;
        }
        per_x += a * b;
    }
    if (per_x > std::numeric_limits<std::uint32_t>::max()) return std::numeric_limits<std::uint64_t>::max();
    return per_x * per_x;
}

void for_each_admissible_sextuple(const ProximityProblem& problem,
                                  const std::function<void(const Sextuple&)>& visit) {
    const auto a_lists = attainer_lists(problem, problem.phi());
    const auto b_lists = attainer_lists(problem, problem.psi());
    for (PointId x1 : problem.s1().members()) {
        for (PointId x2 : problem.s1().members()) {
            for (PointId a1 : a_lists[x1]) {
                for (PointId a2 : a_lists[x2]) {
                    if (a1 == a2) continue;
                    for (PointId b1 : b_lists[x1]) {
                        for (PointId b2 : b_lists[x2]) visit({a1, a2, b1, b2, x1, x2});
                    }
                }
            }
        }
    }
}

CertificationReport certify_proximal_commutativity(const ProximityProblem& problem) {
    const auto verdict = check_proximal_commutativity(problem);
    CertificationReport r;
    r.condition = Condition::ProximalCommuting;
    r.holds = verdict.holds;
    r.discretized = problem.discretized();
    // no margin is involved: a commuting pair admits every tau
    r.tau_max = verdict.holds ? TauMax::unbounded() : TauMax::finite(0.0);
    r.commuting_witness = verdict.witness;
    if (!verdict.holds) r.violation_kind = ViolationKind::NotCommuting;
    return r;
}

CertificationReport certify_f_weak_domination(const ProximityProblem& problem, const FFunction& f,
                                              const CertifyOptions& options) {
    return certify_sextuples(problem, f, options, Comparator::Md);
}

CertificationReport certify_f_domination(const ProximityProblem& problem, const FFunction& f,
                                         const CertifyOptions& options) {
    return certify_sextuples(problem, f, options, Comparator::PairDistance);
}

CertificationReport certify_f_weak_contraction(const FiniteMetricSpace& space, const PointMap& phi,
                                               const FFunction& f, const CertifyOptions& options) {
    require_total(space, phi, "phi");
    return certify_pairs(space, phi, f, options, Condition::FWeakContraction, true,
                         [](PointId x1, PointId x2) { return std::pair{x1, x2}; });
}

CertificationReport certify_f_weak_domination_selfmap(const FiniteMetricSpace& space, const PointMap& phi,
                                                      const PointMap& psi, const FFunction& f,
                                                      const CertifyOptions& options) {
    require_total(space, phi, "phi");
    require_total(space, psi, "psi");
    return certify_pairs(space, phi, f, options, Condition::FWeaklyDominates, true,
                         [&psi](PointId x1, PointId x2) { return std::pair{psi(x1), psi(x2)}; });
}

}  // namespace bestprox
