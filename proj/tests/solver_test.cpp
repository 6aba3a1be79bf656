#include <gtest/gtest.h>

#include <functional>
#include <numeric>

#include "bestprox/error.hpp"
#include "bestprox/gallery.hpp"
#include "bestprox/solver.hpp"
#include "test_support.hpp"

using namespace bestprox;
using bestprox::proptest::Rng;

namespace {

ErrorCode code_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error thrown";
    return ErrorCode::ParseError;
}

FiniteMetricSpace line(const std::vector<std::string>& labels, const std::vector<double>& xs) {
    std::vector<std::vector<double>> coords;
    for (double x : xs) coords.push_back({x});
    return FiniteMetricSpace::from_coordinates(labels, coords);
}

PointMap on(std::size_t n, std::initializer_list<std::pair<PointId, PointId>> entries) {
    PointMap m(n);
    for (auto [from, to] : entries) m.set(from, to);
    return m;
}

// A, B in S1 on the bottom row, C, D in S2 above them; phi = const C, psi = const D.
ProximityProblem image_outside_psi_image() {
    auto s = FiniteMetricSpace::from_coordinates({"A", "B", "C", "D"}, {{0, 0}, {1, 0}, {0, 1}, {1, 1}});
    return ProximityProblem(s, {PointSet(4, {0, 1}), PointSet(4, {2, 3})},
                            {on(4, {{0, 2}, {1, 2}}), on(4, {{0, 3}, {1, 3}})});
}

std::pair<FiniteMetricSpace, PointMap> alternating_halving() {
    auto space = line({"0", "1", "-2", "4", "-8", "16"}, {0, 1, -2, 4, -8, 16});
    return {space, PointMap::total({0, 0, 1, 2, 3, 4})};
}

}  // namespace

TEST(CheckHypotheses, Ex22AllHold) {
    const auto h = check_hypotheses(gallery::build_ex22(), FFunction::log());
    EXPECT_TRUE(h.core_nonempty);
    EXPECT_TRUE(h.phi_core_in_core2);
    EXPECT_TRUE(h.phi_core_in_psi_core);
    EXPECT_TRUE(h.commuting.holds);
    EXPECT_TRUE(h.weak_domination.holds);
    EXPECT_TRUE(h.closed_continuous_finite);
    EXPECT_TRUE(h.all_hold());
}

TEST(CheckHypotheses, CircleFailsOnlyDomination) {
    const auto h = check_hypotheses(gallery::build_circle(1, 3, 8), FFunction::log());
    EXPECT_TRUE(h.core_nonempty);
    EXPECT_TRUE(h.phi_core_in_core2);
    EXPECT_TRUE(h.phi_core_in_psi_core);
    EXPECT_TRUE(h.commuting.holds);
    EXPECT_FALSE(h.weak_domination.holds);
    EXPECT_FALSE(h.all_hold());
}

TEST(CheckHypotheses, ImageOutsidePsiImage) {
    const auto p = image_outside_psi_image();
    const auto h = check_hypotheses(p, FFunction::log());
    EXPECT_TRUE(h.phi_core_in_core2);
    EXPECT_FALSE(h.phi_core_in_psi_core);
    ASSERT_TRUE(h.image_witness);
    EXPECT_EQ(p.space().label(*h.image_witness), "A");
    EXPECT_EQ(p.space().label(p.phi()(*h.image_witness)), "C");
}

TEST(CheckHypotheses, ImageOutsideCore2) {
    auto s = line({"A", "C", "D"}, {0, 1, 5});
    ProximityProblem p(s, {PointSet(3, {0}), PointSet(3, {1, 2})}, {on(3, {{0, 2}}), on(3, {{0, 1}})});
    const auto h = check_hypotheses(p, FFunction::log());
    EXPECT_FALSE(h.phi_core_in_core2);
    ASSERT_TRUE(h.core2_witness);
    EXPECT_EQ(*h.core2_witness, 0u);
    EXPECT_EQ(code_of([&] { generate_sequence(p, 0, 10); }), ErrorCode::NoAttainment);
}

TEST(GenerateSequence, Ex22FromMinusOneOne) {
    const auto p = gallery::build_ex22();
    const auto& s = p.space();
    const auto t = generate_sequence(p, s.index_of("(-1,1)"), 100);
    EXPECT_EQ(t.outcome, Outcome::CoincidenceFound);
    ASSERT_TRUE(t.result);
    EXPECT_EQ(s.label(*t.result), "(-1,5)");
    EXPECT_LE(t.x_seq.size(), 3u);
    // hand trace: phi(-1,1) = (1,5), a0 = (-1,5), x1 = (-1,5), a1 = (-1,5)
    ASSERT_EQ(t.x_seq.size(), 2u);
    EXPECT_EQ(s.label(t.a_seq[0]), "(-1,5)");
    EXPECT_EQ(s.label(t.x_seq[1]), "(-1,5)");
    EXPECT_EQ(s.label(t.a_seq[1]), "(-1,5)");
    EXPECT_EQ(t.gaps, std::vector<double>{0.0});
}

TEST(GenerateSequence, ConstantSequence) {
    auto s = line({"a", "b", "c"}, {0, 1, 3});
    const auto all = PointSet::all(3);
    ProximityProblem p(s, {all, all}, {PointMap::identity(3), PointMap::identity(3)});
    for (PointId x0 = 0; x0 < 3; ++x0) {
        const auto t = generate_sequence(p, x0, 10);
        EXPECT_EQ(t.outcome, Outcome::CoincidenceFound);
        for (PointId x : t.x_seq) EXPECT_EQ(x, x0);
        EXPECT_EQ(t.result, x0);
    }
}

TEST(GenerateSequence, CircleStallsInTwoCycle) {
    const auto p = gallery::build_circle(1, 3, 8);
    for (PointId x0 : p.s1().members()) {
        const auto t = generate_sequence(p, x0, 100);
        EXPECT_EQ(t.outcome, Outcome::Stalled);
        EXPECT_EQ(t.cycle_length, 2u);
        EXPECT_FALSE(t.result);
        EXPECT_EQ(t.a_seq.size(), t.x_seq.size());
        EXPECT_EQ(t.gaps.size() + 1, t.a_seq.size());
    }
}

TEST(GenerateSequence, Errors) {
    const auto p = gallery::build_ex22();
    EXPECT_EQ(code_of([&] { generate_sequence(p, p.space().index_of("(1,5)"), 10); }), ErrorCode::InvalidArgument);
    const auto bad = image_outside_psi_image();
    EXPECT_EQ(code_of([&] { generate_sequence(bad, 0, 10); }), ErrorCode::NoPreimage);
    const auto circle = gallery::build_circle(1, 3, 8);
    EXPECT_NO_THROW(generate_sequence(circle, 0, 10, IterationMode::Xi));
    // constant psi is not injective on a two-point core
    auto s = line({"A", "B", "C"}, {0, 2, 1});
    ProximityProblem flat(s, {PointSet(3, {0, 1}), PointSet(3, {2})},
                          {on(3, {{0, 2}, {1, 2}}), on(3, {{0, 2}, {1, 2}})});
    EXPECT_EQ(code_of([&] { generate_sequence(flat, 0, 10, IterationMode::Xi); }), ErrorCode::InvalidArgument);
}

TEST(GenerateSequence, IterationLimit) {
    const auto p = gallery::build_circle(1, 3, 8);
    const auto t = generate_sequence(p, 0, 1);
    EXPECT_EQ(t.outcome, Outcome::Stalled);
    EXPECT_TRUE(t.iteration_limit);
}

TEST(InequalityAudit, CircleCycleWithForcedTau) {
    const auto p = gallery::build_circle(1, 3, 8);
    const auto t = generate_sequence(p, 0, 100);
    ASSERT_GE(t.a_seq.size(), 3u);
    const auto slacks = per_step_inequality_audit(t, p, FFunction::log(), 0.1);
    ASSERT_FALSE(slacks.empty());
    for (const auto& s : slacks) {
        EXPECT_GT(s.slack, 0.0);
        EXPECT_NEAR(s.slack, 0.1 * static_cast<double>(s.step), 1e-12);
    }
}

TEST(InequalityAudit, ShortTraceIsRejected) {
    const auto p = gallery::build_ex22();
    const auto t = generate_sequence(p, p.space().index_of("(-1,1)"), 100);
    EXPECT_EQ(code_of([&] { per_step_inequality_audit(t, p, FFunction::log(), 0.5); }),
              ErrorCode::InsufficientTrace);
}

TEST(CoincidenceToCbpp, Examples) {
    const auto p = gallery::build_ex22();
    const auto& s = p.space();
    EXPECT_EQ(s.label(coincidence_to_cbpp(p, s.index_of("(-1,5)"), FFunction::log())), "(-1,5)");
    EXPECT_EQ(code_of([&] { coincidence_to_cbpp(p, s.index_of("(-1,-1)"), FFunction::log()); }),
              ErrorCode::NotCoincidence);

    auto line3 = line({"a", "b", "c"}, {0, 1, 3});
    const auto all = PointSet::all(3);
    const auto to_b = PointMap::total({1, 1, 1});
    ProximityProblem same(line3, {all, all}, {to_b, to_b});
    EXPECT_EQ(coincidence_to_cbpp(same, 1, FFunction::log()), 1u);
}

TEST(CoincidenceToCbpp, AttainerDiffersFromCoincidencePoint) {
    // S1 = {A, B}, S2 = {C, D, E}; phi = psi = const C. B is a coincidence point
    // whose image C is attained only by A.
    auto s = line({"A", "B", "C", "D", "E"}, {0, 5, 1, 7, 20});
    const auto to_c = on(5, {{0, 2}, {1, 2}});
    ProximityProblem p(s, {PointSet(5, {0, 1}), PointSet(5, {2, 3, 4})}, {to_c, to_c});
    EXPECT_EQ(coincidence_to_cbpp(p, 1, FFunction::log()), 0u);
    EXPECT_EQ(brute_force_cbpp(p), std::vector<PointId>{0});
}

TEST(CoincidenceToCbpp, VerificationFailure) {
    // B is a coincidence point (phi B = psi B = C) but its attainer A is not a
    // best proximity point of phi
    auto s = line({"A", "B", "C", "D"}, {0, 3, 1, 4});
    ProximityProblem p(s, {PointSet(4, {0, 1}), PointSet(4, {2, 3})},
                       {on(4, {{0, 3}, {1, 2}}), on(4, {{0, 2}, {1, 2}})});
    EXPECT_EQ(code_of([&] { coincidence_to_cbpp(p, 1, FFunction::log()); }), ErrorCode::VerificationFailed);
}

TEST(Solve, Ex22) {
    const auto p = gallery::build_ex22();
    const auto t = solve(p, FFunction::log());
    ASSERT_TRUE(t.result);
    EXPECT_EQ(p.space().label(*t.result), "(-1,5)");
    EXPECT_TRUE(t.oracle_agrees);
    EXPECT_FALSE(t.alarm);
    ASSERT_TRUE(t.xi_agrees);
    EXPECT_TRUE(*t.xi_agrees);
    ASSERT_TRUE(t.hypotheses);
    EXPECT_TRUE(t.hypotheses->all_hold());
    for (const auto& f : proptest::canonical_fs()) {
        const auto tf = solve(p, f);
        EXPECT_EQ(tf.result, t.result) << f.name();
    }
}

TEST(Solve, CircleIsHypothesisViolated) {
    const auto t = solve(gallery::build_circle(1, 3, 8), FFunction::log());
    EXPECT_EQ(t.outcome, Outcome::HypothesisViolated);
    EXPECT_FALSE(t.result);
    ASSERT_TRUE(t.hypotheses);
    EXPECT_FALSE(t.hypotheses->weak_domination.holds);
}

TEST(Solve, ReciprocalIsHypothesisViolated) {
    const auto p = gallery::build_reciprocal(gallery::reciprocal_default_sample()).as_problem();
    const auto t = solve(p, FFunction::log());
    EXPECT_EQ(t.outcome, Outcome::HypothesisViolated);
    EXPECT_TRUE(t.oracle.empty());
}

TEST(WardowskiFixedPoint, Examples) {
    const auto [space, phi] = alternating_halving();
    for (PointId x0 = 0; x0 < space.size(); ++x0) {
        const auto t = wardowski_fixed_point(space, phi, FFunction::log(), x0);
        EXPECT_EQ(t.outcome, Outcome::ConvergedTo);
        ASSERT_TRUE(t.result);
        EXPECT_EQ(space.label(*t.result), "0");
        EXPECT_TRUE(t.oracle_agrees);
        // orbit 16 -> -8 -> 4 -> -2 -> 1 -> 0 -> 0
        EXPECT_LE(t.x_seq.size(), 7u);
    }

    const auto constant = PointMap::total({3, 3, 3, 3, 3, 3});
    for (PointId x0 = 0; x0 < space.size(); ++x0) {
        const auto t = wardowski_fixed_point(space, constant, FFunction::log(), x0);
        ASSERT_TRUE(t.result);
        EXPECT_EQ(*t.result, 3u);
        EXPECT_LE(t.x_seq.size(), 3u);
    }

    FiniteMetricSpace two({"a", "b"}, {0, 1, 1, 0});
    const auto id = wardowski_fixed_point(two, PointMap::identity(2), FFunction::log(), 0);
    EXPECT_EQ(id.outcome, Outcome::HypothesisViolated);
    ASSERT_TRUE(id.certification);
    EXPECT_FALSE(id.certification->holds);
}

TEST(FixedPoints, FullScan) {
    EXPECT_EQ(fixed_points(PointMap::total({0, 0, 2, 2})), (std::vector<PointId>{0, 2}));
    EXPECT_TRUE(fixed_points(PointMap::total({1, 0})).empty());
}

TEST(SolverProperty, CertifiedInstances) {
    Rng rng(1301);
    int certified = 0;
    int audited = 0;
    for (int trial = 0; trial < 600; ++trial) {
        const auto p = trial % 2 ? proptest::random_contracting_lift(rng) : proptest::random_problem(rng);
        const auto f = proptest::canonical_fs()[trial % 4];
        const auto t = solve(p, f);
        if (t.outcome == Outcome::HypothesisViolated) continue;
        ++certified;
        ASSERT_TRUE(t.result) << "trial " << trial;
        EXPECT_FALSE(t.alarm) << "trial " << trial;
        // oracle equivalence
        EXPECT_EQ(t.oracle, std::vector<PointId>{*t.result});
        // sequence relation phi a_i = psi a_{i+1}
        for (std::size_t i = 0; i + 1 < t.a_seq.size(); ++i) {
            EXPECT_EQ(p.phi()(t.a_seq[i]), p.psi()(t.a_seq[i + 1])) << "trial " << trial << " step " << i;
        }
        // gaps non-increasing from step 1
        for (std::size_t i = 1; i < t.gaps.size(); ++i) EXPECT_LE(t.gaps[i], t.gaps[i - 1]);
        for (double slack : t.diagnostics) EXPECT_LE(slack, 0.0);
        audited += !t.diagnostics.empty();
        if (t.xi_agrees) {
            EXPECT_TRUE(*t.xi_agrees);
        }
        // result independent of the start point
        for (PointId x0 : t.hypotheses->cores.core1.members()) {
            SolveOptions opt;
            opt.x0 = x0;
            EXPECT_EQ(solve(p, f, opt).result, t.result);
        }
    }
    EXPECT_GT(certified, 100);
    EXPECT_GT(audited, 5);
}

TEST(SolverProperty, XiAgreesWithPreimageWhenInjective) {
    Rng rng(1302);
    int compared = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto p = proptest::random_problem(rng);
        const auto cores = proximal_cores(p);
        if (!psi_injective_on_core(p, cores.core1)) continue;
        for (PointId x0 : cores.core1.members()) {
            std::optional<SolverTrace> a, b;
            try {
                a = generate_sequence(p, x0, 50, IterationMode::PsiPreimage);
            } catch (const Error&) {
            }
            try {
                b = generate_sequence(p, x0, 50, IterationMode::Xi);
            } catch (const Error&) {
            }
            ASSERT_EQ(a.has_value(), b.has_value());
            if (!a) continue;
            ++compared;
            EXPECT_EQ(a->x_seq, b->x_seq);
            EXPECT_EQ(a->a_seq, b->a_seq);
            EXPECT_EQ(a->outcome, b->outcome);
        }
    }
    EXPECT_GT(compared, 50);
}

TEST(SolverProperty, WardowskiStartIndependence) {
    Rng rng(1303);
    int certified = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto [space, phi] = proptest::random_contracting_self_map(rng);
        const auto f = proptest::canonical_fs()[trial % 4];
        if (!certify_f_weak_contraction(space, phi, f).holds) continue;
        ++certified;
        const auto fixed = fixed_points(phi);
        ASSERT_EQ(fixed.size(), 1u) << "trial " << trial;
        for (PointId x0 = 0; x0 < space.size(); ++x0) {
            const auto t = wardowski_fixed_point(space, phi, f, x0);
            EXPECT_EQ(t.outcome, Outcome::ConvergedTo);
            EXPECT_EQ(t.result, fixed.front());
            EXPECT_FALSE(t.alarm);
        }
    }
    EXPECT_GT(certified, 100);
}
