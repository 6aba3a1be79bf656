#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>

#include "bestprox/f_function.hpp"
#include "bestprox/problem.hpp"

namespace bestprox {

/// A parsed problem file.
///
/// The format is a single YAML document:
///
///     name: ex22                      # optional
///     discretized: true               # optional, default false
///     points: ["A", "B", "C"]         # labels, with `distances` below, or
///     # points: [{label: A, at: [0, 0]}, ...]   coordinate tuples (Euclidean)
///     distances:                      # row k lists d(p_k, p_0..p_{k-1})
///       - [1]
///       - [2, 1]
///     s1: ["A"]
///     s2: ["B", "C"]
///     phi: {"A": "B"}
///     psi: {"A": "C"}
///     tol_eq: 0                       # optional, default 0
///     tol_conv: 1e-12                 # optional, default 1e-12
///     f: f1                           # optional: f1..f4 or [[alpha, F(alpha)], ...]
///
/// Decimal literals are converted with correct rounding to the nearest double.
struct ProblemDocument {
    std::string name;
    ProximityProblem problem;
    std::optional<FFunction> f;
};

/// Throws ParseError anchored at the offending line for syntax errors and for
/// any violated type invariant.
ProblemDocument parse_problem(std::string_view text, const std::string& source = "<input>");
ProblemDocument load_problem(const std::filesystem::path& path);

/// Deterministic serialization using the explicit distance-table form.
/// parse_problem(write_problem(p)) reproduces p exactly.
std::string write_problem(const ProximityProblem& problem, std::string_view name,
                          const std::optional<FFunction>& f = std::nullopt);

}  // namespace bestprox
