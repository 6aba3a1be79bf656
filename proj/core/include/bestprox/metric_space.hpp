#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace bestprox {

/// Index of a point in its space's point list. Point-list order is the scan
/// order used by every checker, so "lexicographically least" means least id.
using PointId = std::size_t;
inline constexpr PointId kNoPoint = std::numeric_limits<PointId>::max();

/// Relative allowance used by the triangle-inequality check. Tables derived
/// from coordinates carry rounding in the last ulp on collinear triples.
inline constexpr double kTriangleSlack = 8.0 * std::numeric_limits<double>::epsilon();

enum class MetricAxiom { NonNegative, ZeroDiagonal, Symmetric, Separation, Triangle };

struct MetricViolation {
    MetricAxiom axiom;
    PointId p = kNoPoint;
    PointId q = kNoPoint;
    PointId r = kNoPoint;  // only for Triangle
};

/// Scans a row-major n*n table for the first axiom violation, in (p,q,r)
/// index order. Returns nullopt for a valid metric.
std::optional<MetricViolation> find_metric_violation(std::span<const double> table, std::size_t n);

/// Labeled finite point set with an exact pairwise distance table.
///
/// All four metric axioms are verified over every triple at construction
/// (O(n^3)); a violation throws Error{InvalidMetric}. Immutable afterwards.
class FiniteMetricSpace {
public:
    FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> table);

    /// Euclidean distances between coordinate tuples of a common dimension.
    static FiniteMetricSpace from_coordinates(std::vector<std::string> labels,
                                              const std::vector<std::vector<double>>& coords);

    /// rows[k-1] holds d(p_k, p_0..p_{k-1}) for k = 1..n-1.
    static FiniteMetricSpace from_lower_triangle(std::vector<std::string> labels,
                                                 const std::vector<std::vector<double>>& rows);

    std::size_t size() const noexcept { return labels_.size(); }

    double operator()(PointId p, PointId q) const noexcept { return table_[p * size() + q]; }
    double distance(PointId p, PointId q) const;

    const std::string& label(PointId p) const;
    std::span<const std::string> labels() const noexcept { return labels_; }
    std::span<const double> table() const noexcept { return table_; }

    std::optional<PointId> find(std::string_view label) const;
    /// Throws Error{UnknownPoint} when the label is absent.
    PointId index_of(std::string_view label) const;

    /// Space whose point k is this space's point order[k].
    FiniteMetricSpace permuted(std::span<const PointId> order) const;

    bool operator==(const FiniteMetricSpace& other) const {
        return labels_ == other.labels_ && table_ == other.table_;
    }

private:
    std::vector<std::string> labels_;
    std::vector<double> table_;
    std::unordered_map<std::string, PointId> index_;
};

std::string_view to_string(MetricAxiom axiom) noexcept;

}  // namespace bestprox
