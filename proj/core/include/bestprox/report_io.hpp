#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "bestprox/certifiers.hpp"
#include "bestprox/problem.hpp"
#include "bestprox/solver.hpp"

namespace bestprox {

enum class EmitFormat { Text, Structured };

/// Parses "text" or "structured"; throws Error{InvalidArgument}.
EmitFormat parse_emit_format(std::string_view name);

/// One report. Structured output is a single JSON object on one line with
/// the fields condition, holds, tau_max, tau_checked, witness, lhs, rhs,
/// slack, violation_kind, f, self_map, discretized, admissible. tau_max is a
/// number or one of "unbounded" / "vacuous"; non-finite reals are written as
/// the strings "inf" / "-inf". Witness points are labels.
std::string emit_report(const FiniteMetricSpace& space, const CertificationReport& report, EmitFormat format);

/// Hypothesis summary of the existence theorem, one line per hypothesis in
/// text form or a single "hypotheses" object in structured form.
std::string emit_hypotheses(const FiniteMetricSpace& space, const HypothesisReport& report, EmitFormat format);

/// Step lines (i, x_i, a_i, gap, audit slack) followed by the outcome. The
/// structured form is a "trace" object with parallel arrays.
std::string emit_trace(const FiniteMetricSpace& space, const SolverTrace& trace, EmitFormat format);

/// The list of common best proximity points (or fixed points).
std::string emit_points(const FiniteMetricSpace& space, std::string_view kind, const std::vector<PointId>& points,
                        EmitFormat format);

}  // namespace bestprox
