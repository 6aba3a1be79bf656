// Runs the nine acceptance criteria and prints one PASS/FAIL line for each.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>

#include "bestprox/certifiers.hpp"
#include "bestprox/error.hpp"
#include "bestprox/gallery.hpp"
#include "bestprox/problem_io.hpp"
#include "bestprox/proximity.hpp"
#include "bestprox/solver.hpp"
#include "test_support.hpp"

using namespace bestprox;
using proptest::Rng;

namespace {

struct Check {
    bool ok = true;
    std::ostringstream detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) detail << what;
        ok = ok && cond;
    }
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string label_or_none(const FiniteMetricSpace& space, std::optional<PointId> p) {
    return p ? space.label(*p) : std::string("none");
}

Check ex22_end_to_end() {
    Check c;
    const auto start = Clock::now();
    const auto built = gallery::build_ex22();
    const auto doc = parse_problem(write_problem(built, "ex22"), "ex22.yaml");
    const auto& p = doc.problem;
    const auto t = solve(p, FFunction::log());
    const double elapsed = seconds_since(start);
    c.expect(label_or_none(p.space(), t.result) == "(-1,5)", "result " + label_or_none(p.space(), t.result));
    c.expect(std::abs(p.set_distance() - 2.0) <= 1e-12, "d(S1,S2) = " + gallery::format_number(p.set_distance()));
    c.expect(t.oracle_agrees && t.oracle.size() == 1, "oracle disagrees");
    c.expect(!t.alarm, "alarm raised");
    c.expect(elapsed < 1.0, "took " + std::to_string(elapsed) + " s");
    c.detail << (c.ok ? "result (-1,5), d(S1,S2) = 2, oracle agrees" : "");
    return c;
}

Check ex22_certification() {
    Check c;
    const auto start = Clock::now();
    const auto p = gallery::build_ex22();
    const auto weak = certify_f_weak_domination(p, FFunction::log());
    c.expect(weak.holds, "weak domination fails");
    c.expect(weak.tau_max.is_finite() && weak.tau_max.value >= std::numbers::ln2 - 1e-12, "tau_max below ln 2");
    double worst = 0.0;
    for_each_admissible_sextuple(p, [&](const Sextuple& s) {
        worst = std::max(worst, p.space()(s.a1, s.a2) / md(p.space(), s.a1, s.a2, s.b1, s.b2));
    });
    c.expect(worst <= 0.5 + 1e-12, "ratio " + gallery::format_number(worst));
    const auto strong = certify_f_domination(p, FFunction::log());
    c.expect(!strong.holds && strong.violation.has_value(), "domination does not fail");
    if (strong.violation) {
        const auto& v = *strong.violation;
        const auto& s = p.space();
        const std::set<std::string> as{s.label(v.a1), s.label(v.a2)};
        const std::set<std::string> bs{s.label(v.b1), s.label(v.b2)};
        c.expect(as == std::set<std::string>{"(-1,3)", "(-1,5)"}, "witness a1,a2 not at 3,5");
        c.expect(bs == std::set<std::string>{"(-1,-1)", "(-1,1)"}, "witness b1,b2 not at -1,1");
    }
    const double elapsed = seconds_since(start);
    c.expect(elapsed < 5.0, "took " + std::to_string(elapsed) + " s");
    if (c.ok) {
        c.detail << "tau_max = " << gallery::format_number(weak.tau_max.value) << ", max ratio "
                 << gallery::format_number(worst) << ", domination witness at 3,5 / -1,1";
    }
    return c;
}

Check circle_negative_control() {
    Check c;
    const auto start = Clock::now();
    const auto p = gallery::build_circle(1, 3, 8);
    c.expect(certify_proximal_commutativity(p).holds, "not proximally commuting");
    for (const auto& f : proptest::canonical_fs()) {
        const auto r = certify_f_weak_domination(p, f);
        c.expect(!r.holds && r.violation.has_value(), std::string(f.name()) + " holds");
        if (r.violation) {
            c.expect(r.violation->a1 == r.violation->b2 && r.violation->a2 == r.violation->b1,
                     std::string(f.name()) + " witness is not antipodal");
        }
    }
    c.expect(solve(p, FFunction::log()).outcome == Outcome::HypothesisViolated, "solve not hypothesis-violated");
    const double elapsed = seconds_since(start);
    c.expect(elapsed < 5.0, "took " + std::to_string(elapsed) + " s");
    if (c.ok) c.detail << "commuting, weak domination fails for f1..f4 antipodally, hypothesis-violated";
    return c;
}

Check reciprocal_counterexample() {
    Check c;
    const auto pair = gallery::build_reciprocal(gallery::reciprocal_default_sample());
    const auto f = FFunction::log();
    const auto r = certify_f_weak_domination_selfmap(pair.space, pair.phi, pair.psi, f);
    c.expect(!r.holds && r.violation.has_value(), "self-map domination holds");
    if (r.violation) {
        c.expect(pair.space.label(r.violation->x1) == "0" && pair.space.label(r.violation->x2) == "1",
                 "witness pair not (0,1)");
        c.expect(r.violation->slack == 0.0 && r.violation->lhs == f(2.0) && r.violation->rhs == f(2.0),
                 "witness is not F(2) against F(2)");
    }
    c.expect(brute_force_cbpp(pair.as_problem()).empty(), "common best proximity point found");
    if (c.ok) c.detail << "witness (0,1) with slack 0, no common best proximity point";
    return c;
}

Check hierarchy() {
    Check c;
    Rng rng(5005);
    int instances = 0, strong_holds = 0, violations = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto p = trial % 3 ? proptest::random_problem(rng) : proptest::random_contracting_lift(rng);
        if (p.space().size() > 8) continue;
        ++instances;
        const auto f = proptest::canonical_fs()[trial % 4];
        const auto strong = certify_f_domination(p, f);
        if (!strong.holds) continue;
        ++strong_holds;
        const auto weak = certify_f_weak_domination(p, f);
        bool ok = weak.holds;
        if (strong.tau_max.is_finite()) {
            ok = ok && weak.tau_max.is_finite() && weak.tau_max.value >= strong.tau_max.value - 1e-12;
        }
        violations += !ok;
    }
    c.expect(instances >= 200, "only " + std::to_string(instances) + " instances");
    c.expect(violations == 0, std::to_string(violations) + " violations");
    c.detail << (c.ok ? "" : "; ") << instances << " instances, " << strong_holds << " with domination, "
             << violations << " violations";
    return c;
}

Check identity_reduction() {
    Check c;
    Rng rng(6006);
    int instances = 0, mismatches = 0;
    for (int trial = 0; trial < 200; ++trial) {
        FiniteMetricSpace space({"p"}, {0.0});
        PointMap phi(1);
        if (trial % 2) {
            const std::size_t n = proptest::uniform(rng, 1, 7);
            space = proptest::random_metric(rng, n);
            phi = proptest::random_self_map(rng, n);
        } else {
            std::tie(space, phi) = proptest::random_contracting_self_map(rng);
        }
        ++instances;
        const auto f = proptest::canonical_fs()[trial % 4];
        const auto dom = certify_f_weak_domination_selfmap(space, phi, PointMap::identity(space.size()), f);
        const auto con = certify_f_weak_contraction(space, phi, f);
        bool same = dom.holds == con.holds && dom.tau_max.state == con.tau_max.state;
        if (same && dom.tau_max.is_finite()) same = std::abs(dom.tau_max.value - con.tau_max.value) <= 1e-12;
        mismatches += !same;
    }
    c.expect(instances >= 100, "only " + std::to_string(instances) + " instances");
    c.expect(mismatches == 0, std::to_string(mismatches) + " mismatches");
    c.detail << (c.ok ? "" : "; ") << instances << " instances, " << mismatches << " mismatches";
    return c;
}

Check wardowski() {
    Check c;
    Rng rng(7007);
    int certified = 0, failures = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const auto [space, phi] = proptest::random_contracting_self_map(rng);
        const auto f = proptest::canonical_fs()[trial % 4];
        if (!certify_f_weak_contraction(space, phi, f).holds) continue;
        ++certified;
        const auto fixed = fixed_points(phi);
        bool ok = fixed.size() == 1;
        for (PointId x0 = 0; ok && x0 < space.size(); ++x0) {
            const auto t = wardowski_fixed_point(space, phi, f, x0);
            ok = t.outcome == Outcome::ConvergedTo && t.result == fixed.front() && !t.alarm;
        }
        failures += !ok;
    }
    c.expect(certified > 0, "no certified instances");
    c.expect(failures == 0, std::to_string(failures) + " failures");
    c.detail << (c.ok ? "" : "; ") << certified << " certified contractions, " << failures << " failures";
    return c;
}

Check solver_audit() {
    Check c;
    Rng rng(8008);
    int runs = 0, audited = 0, failures = 0;
    double worst = -std::numeric_limits<double>::infinity();
    for (int trial = 0; trial < 600; ++trial) {
        const auto p = trial % 2 ? proptest::random_contracting_lift(rng) : proptest::random_problem(rng);
        const auto f = proptest::canonical_fs()[trial % 4];
        const auto cores = proximal_cores(p);
        for (PointId x0 : cores.core1.members()) {
            SolveOptions opt;
            opt.x0 = x0;
            const auto t = solve(p, f, opt);
            if (t.outcome != Outcome::ConvergedTo && t.outcome != Outcome::CoincidenceFound) continue;
            ++runs;
            bool ok = true;
            for (double s : t.diagnostics) {
                ok = ok && s <= 0.0;
                worst = std::max(worst, s);
            }
            for (std::size_t i = 1; i < t.gaps.size(); ++i) ok = ok && t.gaps[i] <= t.gaps[i - 1];
            audited += !t.diagnostics.empty();
            failures += !ok;
        }
    }
    c.expect(runs > 0 && audited > 0, "no audited converged runs");
    c.expect(failures == 0, std::to_string(failures) + " failing runs");
    c.detail << (c.ok ? "" : "; ") << runs << " converged runs, " << audited << " with audit steps, worst slack "
             << (audited ? gallery::format_number(worst) : std::string("n/a"));
    return c;
}

Check metric_axioms() {
    Check c;
    Rng rng(9009);
    int rejected = 0;
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t n = proptest::uniform(rng, 3, 8);
        const auto space = proptest::random_metric(rng, n);
        std::vector<double> t(space.table().begin(), space.table().end());
        const PointId p = proptest::uniform(rng, 0, n - 1);
        PointId q = proptest::uniform(rng, 0, n - 2);
        if (q >= p) ++q;
        PointId r = kNoPoint;
        do {
            r = proptest::uniform(rng, 0, n - 1);
        } while (r == p || r == q);
        const double factor = std::uniform_real_distribution<double>(1e-9, 2.0)(rng);
        t[p * n + q] = t[q * n + p] = (t[p * n + r] + t[r * n + q]) * (1.0 + factor);
        try {
            FiniteMetricSpace(std::vector<std::string>(space.labels().begin(), space.labels().end()), t);
        } catch (const Error& e) {
            rejected += e.code() == ErrorCode::InvalidMetric;
        }
    }
    c.expect(rejected == 500, std::to_string(500 - rejected) + " violations accepted");

    std::uniform_real_distribution<double> radius(1e-3, 1e3);
    std::uniform_real_distribution<double> value(-1e3, 1e3);
    int built = 0;
    for (int trial = 0; trial < 1000; ++trial) {
        try {
            switch (trial % 3) {
                case 0: {
                    double a = radius(rng), b = radius(rng);
                    if (a == b) b = a * 2;
                    if (a > b) std::swap(a, b);
                    gallery::build_circle(a, b, 2 * proptest::uniform(rng, 2, 16));
                    break;
                }
                case 1: {
                    const std::size_t m = proptest::uniform(rng, 1, 8);
                    std::set<double> values;
                    while (values.size() < m) values.insert(value(rng));
                    std::vector<gallery::BasePoint> base;
                    for (double v : values) base.push_back({gallery::format_number(v), v});
                    std::vector<std::size_t> phi(m), psi(m);
                    for (auto& v : phi) v = proptest::uniform(rng, 0, m - 1);
                    for (auto& v : psi) v = proptest::uniform(rng, 0, m - 1);
                    gallery::build_cartesian(base, phi, psi);
                    break;
                }
                default: {
                    std::vector<double> extra;
                    const std::size_t k = proptest::uniform(rng, 0, 6);
                    for (std::size_t i = 0; i < k; ++i) {
                        double v = value(rng);
                        if (std::abs(v) < 1) v = v < 0 ? -1 : 1;
                        extra.push_back(v);
                    }
                    gallery::build_ex22(extra);
                    break;
                }
            }
            ++built;
        } catch (const Error& e) {
            c.expect(false, std::string("builder rejected: ") + e.what());
        }
    }
    c.expect(built == 1000, "builders rejected " + std::to_string(1000 - built) + " parameterizations");
    c.detail << (c.ok ? "" : "; ") << rejected << "/500 injected violations rejected, " << built
             << "/1000 gallery builds accepted";
    return c;
}

}  // namespace

int main() {
    const std::pair<const char*, std::function<Check()>> criteria[] = {
        {"ex22 end-to-end", ex22_end_to_end},
        {"ex22 certification", ex22_certification},
        {"circle negative control", circle_negative_control},
        {"reciprocal counterexample", reciprocal_counterexample},
        {"domination hierarchy", hierarchy},
        {"identity reduction", identity_reduction},
        {"Picard fixed point", wardowski},
        {"solver audit", solver_audit},
        {"metric axioms", metric_axioms},
    };
    int failed = 0;
    int index = 0;
    for (const auto& [name, run] : criteria) {
        ++index;
        const auto start = Clock::now();
        Check c;
        try {
            c = run();
        } catch (const std::exception& e) {
            c.ok = false;
            c.detail << "exception: " << e.what();
        }
        std::printf("%s criterion %d (%s): %s [%.3f s]\n", c.ok ? "PASS" : "FAIL", index, name,
                    c.detail.str().c_str(), seconds_since(start));
        failed += !c.ok;
    }
    return failed == 0 ? 0 : 1;
}
