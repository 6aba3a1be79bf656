#include "bestprox/report_io.hpp"

#include <cmath>
#include <sstream>

#include <json.hpp>

#include "bestprox/error.hpp"
#include "bestprox/gallery.hpp"

namespace bestprox {

using nlohmann::ordered_json;
using gallery::format_number;

namespace {

ordered_json real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    return v;
}

std::string label_or_dash(const FiniteMetricSpace& space, PointId p) {
    return p == kNoPoint ? "-" : space.label(p);
}

ordered_json tau_json(const TauMax& t) {
    switch (t.state) {
        case TauMax::State::Finite: return real(t.value);
        case TauMax::State::Unbounded: return "unbounded";
        case TauMax::State::Vacuous: return "vacuous";
    }
    return nullptr;
}

std::string tau_text(const TauMax& t) {
    switch (t.state) {
        case TauMax::State::Finite: return format_number(t.value);
        case TauMax::State::Unbounded: return "unbounded";
        case TauMax::State::Vacuous: return "vacuous";
    }
    return "?";
}

ordered_json witness_json(const FiniteMetricSpace& space, const DominationWitness& w) {
    ordered_json j;
    for (auto [key, p] : {std::pair{"a1", w.a1}, {"a2", w.a2}, {"b1", w.b1}, {"b2", w.b2}, {"x1", w.x1},
                          {"x2", w.x2}}) {
        j[key] = p == kNoPoint ? ordered_json(nullptr) : ordered_json(space.label(p));
    }
    return j;
}

std::string witness_text(const FiniteMetricSpace& space, const DominationWitness& w) {
    std::ostringstream os;
    os << "a1=" << label_or_dash(space, w.a1) << " a2=" << label_or_dash(space, w.a2)
       << " b1=" << label_or_dash(space, w.b1) << " b2=" << label_or_dash(space, w.b2)
       << " x1=" << label_or_dash(space, w.x1) << " x2=" << label_or_dash(space, w.x2) << " lhs=" << format_number(w.lhs)
       << " rhs=" << format_number(w.rhs) << " slack=" << format_number(w.slack);
    return os.str();
}

ordered_json report_json(const FiniteMetricSpace& space, const CertificationReport& r) {
    ordered_json j;
    j["condition"] = std::string(to_string(r.condition));
    j["holds"] = r.holds;
    j["tau_max"] = tau_json(r.tau_max);
    j["tau_checked"] = r.tau_checked ? real(*r.tau_checked) : ordered_json(nullptr);
    const DominationWitness* w = r.violation ? &*r.violation : (r.binding_witness ? &*r.binding_witness : nullptr);
    if (r.commuting_witness) {
        const auto& c = *r.commuting_witness;
        j["witness"] = {{"a", space.label(c.a)}, {"b", space.label(c.b)}, {"x", space.label(c.x)}};
        j["lhs"] = nullptr;
        j["rhs"] = nullptr;
        j["slack"] = nullptr;
    } else if (w) {
        j["witness"] = witness_json(space, *w);
        j["lhs"] = real(w->lhs);
        j["rhs"] = real(w->rhs);
        j["slack"] = real(w->slack);
    } else {
        j["witness"] = nullptr;
        j["lhs"] = nullptr;
        j["rhs"] = nullptr;
        j["slack"] = nullptr;
    }
    j["witness_role"] = r.violation || r.commuting_witness ? "violation" : (w ? "binding" : "none");
    j["violation_kind"] =
        r.violation_kind ? ordered_json(std::string(to_string(*r.violation_kind))) : ordered_json(nullptr);
    j["f"] = r.f_name.empty() ? ordered_json(nullptr) : ordered_json(r.f_name);
    j["self_map"] = r.self_map;
    j["discretized"] = r.discretized;
    j["admissible"] = r.admissible;
    return j;
}

std::string report_text(const FiniteMetricSpace& space, const CertificationReport& r) {
    std::ostringstream os;
    os << to_string(r.condition) << ": " << (r.holds ? "holds" : "fails");
    if (!r.f_name.empty()) os << " (F=" << r.f_name << ")";
    os << "\n  tau_max: " << tau_text(r.tau_max) << '\n';
    if (r.tau_checked) os << "  tau checked: " << format_number(*r.tau_checked) << '\n';
    if (r.condition != Condition::ProximalCommuting) os << "  admissible tuples: " << r.admissible << '\n';
    if (r.commuting_witness) {
        const auto& c = *r.commuting_witness;
        os << "  counterexample: a=" << space.label(c.a) << " b=" << space.label(c.b) << " x=" << space.label(c.x)
           << '\n';
    }
    if (r.violation) {
        os << "  violation";
        if (r.violation_kind) os << " (" << to_string(*r.violation_kind) << ")";
        os << ": " << witness_text(space, *r.violation) << '\n';
    } else if (r.binding_witness) {
        os << "  binding: " << witness_text(space, *r.binding_witness) << '\n';
    }
    if (r.self_map) os << "  self-map instance\n";
    if (r.discretized) os << "  discretized instance\n";
    return os.str();
}

}  // namespace

EmitFormat parse_emit_format(std::string_view name) {
    if (name == "text") return EmitFormat::Text;
    if (name == "structured") return EmitFormat::Structured;
    throw Error(ErrorCode::InvalidArgument, "unknown emit format '" + std::string(name) + "'");
}

std::string emit_report(const FiniteMetricSpace& space, const CertificationReport& report, EmitFormat format) {
    if (format == EmitFormat::Text) return report_text(space, report);
    return report_json(space, report).dump() + '\n';
}

std::string emit_hypotheses(const FiniteMetricSpace& space, const HypothesisReport& h, EmitFormat format) {
    auto labels = [&](const PointSet& s) {
        std::vector<std::string> out;
        for (PointId p : s.members()) out.push_back(space.label(p));
        return out;
    };
    if (format == EmitFormat::Structured) {
        ordered_json j;
        j["report"] = "hypotheses";
        j["core1"] = labels(h.cores.core1);
        j["core2"] = labels(h.cores.core2);
        j["core_nonempty"] = h.core_nonempty;
        j["phi_core_in_core2"] = h.phi_core_in_core2;
        j["core2_witness"] = h.core2_witness ? ordered_json(space.label(*h.core2_witness)) : ordered_json(nullptr);
        j["phi_core_in_psi_core"] = h.phi_core_in_psi_core;
        j["image_witness"] = h.image_witness ? ordered_json(space.label(*h.image_witness)) : ordered_json(nullptr);
        j["commuting"] = h.commuting.holds;
        j["weak_domination"] = h.weak_domination.holds;
        j["closed_continuous"] = h.closed_continuous_finite;
        j["all_hold"] = h.all_hold();
        return j.dump() + '\n';
    }
    std::ostringstream os;
    auto join = [](const std::vector<std::string>& v) {
        std::string s;
        for (const auto& x : v) s += (s.empty() ? "" : ", ") + x;
        return "{" + s + "}";
    };
    auto yes = [](bool b) { return b ? "yes" : "no"; };
    os << "hypotheses:\n";
    os << "  S1^0 = " << join(labels(h.cores.core1)) << '\n';
    os << "  S2^0 = " << join(labels(h.cores.core2)) << '\n';
    os << "  phi(S1^0) in S2^0: " << yes(h.phi_core_in_core2);
    if (h.core2_witness) os << " (fails at " << space.label(*h.core2_witness) << ")";
    os << "\n  phi(S1^0) in psi(S1^0): " << yes(h.phi_core_in_psi_core);
    if (h.image_witness) os << " (fails at " << space.label(*h.image_witness) << ")";
    os << "\n  proximally commuting: " << yes(h.commuting.holds) << '\n';
    os << "  F-weakly dominating: " << yes(h.weak_domination.holds) << '\n';
    os << "  closed and continuous (finite space): " << yes(h.closed_continuous_finite) << '\n';
    return os.str();
}

std::string emit_trace(const FiniteMetricSpace& space, const SolverTrace& t, EmitFormat format) {
    if (format == EmitFormat::Structured) {
        ordered_json j;
        j["report"] = "trace";
        j["mode"] = std::string(to_string(t.mode));
        j["outcome"] = std::string(to_string(t.outcome));
        j["result"] = t.result ? ordered_json(space.label(*t.result)) : ordered_json(nullptr);
        ordered_json xs = ordered_json::array(), as = ordered_json::array(), gaps = ordered_json::array(),
                     audit = ordered_json::array();
        for (PointId p : t.x_seq) xs.push_back(space.label(p));
        for (PointId p : t.a_seq) as.push_back(space.label(p));
        for (double g : t.gaps) gaps.push_back(real(g));
        for (double s : t.diagnostics) audit.push_back(real(s));
        j["x_seq"] = xs;
        j["a_seq"] = as;
        j["gaps"] = gaps;
        j["diagnostics"] = audit;
        j["cycle_length"] = t.cycle_length;
        j["iteration_limit"] = t.iteration_limit;
        j["alarm"] = t.alarm;
        ordered_json oracle = ordered_json::array();
        for (PointId p : t.oracle) oracle.push_back(space.label(p));
        j["oracle"] = oracle;
        j["oracle_agrees"] = t.oracle_agrees;
        j["xi_agrees"] = t.xi_agrees ? ordered_json(*t.xi_agrees) : ordered_json(nullptr);
        j["notes"] = t.notes;
        return j.dump() + '\n';
    }
    std::ostringstream os;
    if (!t.x_seq.empty()) {
        os << "trace (" << to_string(t.mode) << "):\n";
        os << "  i  x_i  a_i  gap  audit\n";
    }
    for (std::size_t i = 0; i < t.x_seq.size(); ++i) {
        os << "  " << i << "  " << space.label(t.x_seq[i]) << "  " << space.label(t.a_seq[i]) << "  "
           << (i < t.gaps.size() ? format_number(t.gaps[i]) : "-") << "  ";
        // audit slack i refers to step i >= 1
        os << (i >= 1 && i - 1 < t.diagnostics.size() ? format_number(t.diagnostics[i - 1]) : "-") << '\n';
    }
    os << "outcome: " << to_string(t.outcome) << '\n';
    if (t.result) os << "result: " << space.label(*t.result) << '\n';
    if (t.cycle_length) os << "cycle length: " << t.cycle_length << '\n';
    if (t.iteration_limit) os << "iteration limit reached\n";
    if (t.alarm) os << "ALARM: internal consistency check failed\n";
    if (!t.oracle.empty() || t.outcome != Outcome::HypothesisViolated) {
        os << "oracle:";
        for (PointId p : t.oracle) os << ' ' << space.label(p);
        if (t.oracle.empty()) os << " (none)";
        os << (t.oracle_agrees ? " (agrees)" : " (disagrees)") << '\n';
    }
    if (t.xi_agrees) os << "xi iteration agrees: " << (*t.xi_agrees ? "yes" : "no") << '\n';
    for (const auto& n : t.notes) os << "note: " << n << '\n';
    return os.str();
}

std::string emit_points(const FiniteMetricSpace& space, std::string_view kind, const std::vector<PointId>& points,
                        EmitFormat format) {
    if (format == EmitFormat::Structured) {
        ordered_json j;
        j["report"] = std::string(kind);
        ordered_json list = ordered_json::array();
        for (PointId p : points) list.push_back(space.label(p));
        j["points"] = list;
        return j.dump() + '\n';
    }
    std::ostringstream os;
    os << kind << ':';
    for (PointId p : points) os << ' ' << space.label(p);
    if (points.empty()) os << " (none)";
    os << '\n';
    return os.str();
}

}  // namespace bestprox
