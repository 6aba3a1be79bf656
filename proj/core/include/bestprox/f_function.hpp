#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

namespace bestprox {

enum class FKind { Log, LogPlusLinear, NegInvSqrt, LogQuadratic, CustomTable };

/// Member of the Wardowski class: F strictly increasing on (0, inf), F -> -inf
/// exactly as its argument -> 0, and alpha^k F(alpha) -> 0 for some k in (0,1).
///
/// The four canonical kinds satisfy all three conditions analytically. A custom
/// table is a finite sample; only monotonicity can be enforced on it, and its
/// k exponent is advisory.
class FFunction {
public:
    struct Sample {
        double alpha;
        double value;
    };

    static FFunction log();              // ln a
    static FFunction log_plus_linear();  // ln a + a
    static FFunction neg_inv_sqrt();     // -1/sqrt(a)
    static FFunction log_quadratic();    // ln(a^2 + a)

    /// Table with strictly increasing positive abscissae and strictly
    /// increasing ordinates. Throws Error{InvalidArgument} otherwise.
    static FFunction custom(std::vector<Sample> table, double k = 0.5);
    /// Same, but ordinates are not checked; for experiments with validate_f1.
    static FFunction custom_unchecked(std::vector<Sample> table, double k = 0.5);

    /// "f1".."f4" for the canonical kinds. Throws Error{InvalidArgument}.
    static FFunction from_name(std::string_view name);

    FFunction with_exponent(double k) const;

    FKind kind() const noexcept { return kind_; }
    double k_exponent() const noexcept { return k_; }
    /// "f1".."f4" or "custom".
    std::string_view name() const noexcept;
    std::span<const Sample> table() const noexcept { return table_; }

    /// Throws Error{NonPositiveArgument} for alpha <= 0 and
    /// Error{UnsampledPoint} when a custom table has no entry at alpha.
    double operator()(double alpha) const;

private:
    FFunction(FKind kind, double k) : kind_(kind), k_(k) {}

    FKind kind_;
    double k_;
    std::vector<Sample> table_;
};

inline double eval(const FFunction& f, double alpha) { return f(alpha); }

struct F1Verdict {
    bool holds = true;
    /// First consecutive grid pair (alpha, beta) with F(alpha) >= F(beta).
    std::optional<std::pair<double, double>> witness;
};

/// Strict increase of F across consecutive points of an ascending positive grid.
F1Verdict validate_f1(const FFunction& f, std::span<const double> grid);

struct ProbeOptions {
    double floor = -1e3;
};

/// Finite-sample evidence for the two asymptotic conditions. A diagnostic,
/// never a proof.
struct ProbeRecord {
    std::vector<double> alphas;
    std::vector<double> values;    // F(alpha_i)
    std::vector<double> weighted;  // alpha_i^k F(alpha_i)
    bool decreasing = false;       // F(alpha_i) strictly decreasing along the probe
    /// Lower limit of F projected from the last two decrements; -inf when the
    /// decrements do not shrink.
    double projected_limit = 0.0;
    bool unbounded = false;          // last value or projected limit at or below floor
    bool weighted_vanishing = false; // |alpha^k F| decreasing over the last three terms
    bool consistent = false;
};

/// Requires at least five strictly decreasing positive alphas.
ProbeRecord probe_f2_f3(const FFunction& f, std::span<const double> alphas, ProbeOptions options = {});

}  // namespace bestprox
