#include "bestprox/metric_space.hpp"

#include <cmath>
#include <sstream>

#include "bestprox/error.hpp"

namespace bestprox {

namespace {

// hypot keeps axis-aligned differences exact (hypot(0, d) == |d|)
double euclidean(const std::vector<double>& u, const std::vector<double>& v) {
    if (u.size() == 1) return std::abs(u[0] - v[0]);
    if (u.size() == 2) return std::hypot(u[0] - v[0], u[1] - v[1]);
    double sum = 0.0;
    for (std::size_t k = 0; k < u.size(); ++k) {
        const double diff = u[k] - v[k];
        sum += diff * diff;
    }
    return std::sqrt(sum);
}

}  // namespace

std::string_view to_string(MetricAxiom axiom) noexcept {
    switch (axiom) {
    case MetricAxiom::NonNegative: return "non-negativity";
    case MetricAxiom::ZeroDiagonal: return "zero self-distance";
    case MetricAxiom::Symmetric: return "symmetry";
    case MetricAxiom::Separation: return "separation";
    case MetricAxiom::Triangle: return "triangle inequality";
    }
    return "unknown";
}

std::optional<MetricViolation> find_metric_violation(std::span<const double> table, std::size_t n) {
    auto d = [&](PointId p, PointId q) { return table[p * n + q]; };
    for (PointId p = 0; p < n; ++p) {
        for (PointId q = 0; q < n; ++q) {
            const double v = d(p, q);
            if (!std::isfinite(v) || v < 0.0) return MetricViolation{MetricAxiom::NonNegative, p, q};
        }
    }
    for (PointId p = 0; p < n; ++p) {
        if (d(p, p) != 0.0) return MetricViolation{MetricAxiom::ZeroDiagonal, p, p};
    }
    for (PointId p = 0; p < n; ++p) {
        for (PointId q = p + 1; q < n; ++q) {
            if (d(p, q) != d(q, p)) return MetricViolation{MetricAxiom::Symmetric, p, q};
            if (d(p, q) == 0.0) return MetricViolation{MetricAxiom::Separation, p, q};
        }
    }
    for (PointId p = 0; p < n; ++p) {
        for (PointId q = 0; q < n; ++q) {
            for (PointId r = 0; r < n; ++r) {
                const double direct = d(p, r);
                const double detour = d(p, q) + d(q, r);
                if (direct - detour > kTriangleSlack * direct) {
                    return MetricViolation{MetricAxiom::Triangle, p, q, r};
                }
            }
        }
    }
    return std::nullopt;
}

FiniteMetricSpace::FiniteMetricSpace(std::vector<std::string> labels, std::vector<double> table)
    : labels_(std::move(labels)), table_(std::move(table)) {
    const std::size_t n = labels_.size();
    if (n == 0) throw Error(ErrorCode::InvalidMetric, "metric space must contain at least one point");
    if (table_.size() != n * n) {
        throw Error(ErrorCode::InvalidMetric, "distance table has " + std::to_string(table_.size()) +
                                                  " entries, expected " + std::to_string(n * n));
    }
    index_.reserve(n);
    for (PointId p = 0; p < n; ++p) {
        if (labels_[p].empty()) throw Error(ErrorCode::InvalidMetric, "empty point label");
        if (!index_.emplace(labels_[p], p).second) {
            throw Error(ErrorCode::InvalidMetric, "duplicate point label '" + labels_[p] + "'");
        }
    }
    if (auto bad = find_metric_violation(table_, n)) {
        std::ostringstream os;
        os << to_string(bad->axiom) << " violated at (" << labels_[bad->p] << ", " << labels_[bad->q];
        if (bad->axiom == MetricAxiom::Triangle) {
            os << ", " << labels_[bad->r] << "): d=" << (*this)(bad->p, bad->r) << " > "
               << (*this)(bad->p, bad->q) << " + " << (*this)(bad->q, bad->r);
        } else {
            os << "): d=" << (*this)(bad->p, bad->q);
        }
        throw Error(ErrorCode::InvalidMetric, os.str());
    }
}

FiniteMetricSpace FiniteMetricSpace::from_coordinates(std::vector<std::string> labels,
                                                      const std::vector<std::vector<double>>& coords) {
    const std::size_t n = labels.size();
    if (coords.size() != n) throw Error(ErrorCode::InvalidMetric, "one coordinate tuple per label required");
    const std::size_t dim = n == 0 ? 0 : coords.front().size();
    for (const auto& c : coords) {
        if (c.size() != dim || dim == 0) {
            throw Error(ErrorCode::InvalidMetric, "coordinate tuples must share a positive dimension");
        }
    }
    std::vector<double> table(n * n, 0.0);
    for (PointId p = 0; p < n; ++p) {
        for (PointId q = p + 1; q < n; ++q) {
            const double v = euclidean(coords[p], coords[q]);
            table[p * n + q] = v;
            table[q * n + p] = v;
        }
    }
    return FiniteMetricSpace(std::move(labels), std::move(table));
}

FiniteMetricSpace FiniteMetricSpace::from_lower_triangle(std::vector<std::string> labels,
                                                         const std::vector<std::vector<double>>& rows) {
    const std::size_t n = labels.size();
    if (n == 0 || rows.size() != n - 1) {
        throw Error(ErrorCode::InvalidMetric, "lower-triangular table needs one row per point after the first");
    }
    std::vector<double> table(n * n, 0.0);
    for (std::size_t k = 1; k < n; ++k) {
        if (rows[k - 1].size() != k) {
            throw Error(ErrorCode::InvalidMetric, "row " + std::to_string(k) + " must have " +
                                                      std::to_string(k) + " entries");
        }
        for (std::size_t j = 0; j < k; ++j) {
            table[k * n + j] = rows[k - 1][j];
            table[j * n + k] = rows[k - 1][j];
        }
    }
    return FiniteMetricSpace(std::move(labels), std::move(table));
}

double FiniteMetricSpace::distance(PointId p, PointId q) const {
    if (p >= size() || q >= size()) throw Error(ErrorCode::UnknownPoint, "point index out of range");
    return (*this)(p, q);
}

const std::string& FiniteMetricSpace::label(PointId p) const {
    if (p >= size()) throw Error(ErrorCode::UnknownPoint, "point index out of range");
    return labels_[p];
}

std::optional<PointId> FiniteMetricSpace::find(std::string_view label) const {
    auto it = index_.find(std::string(label));
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

PointId FiniteMetricSpace::index_of(std::string_view label) const {
    if (auto p = find(label)) return *p;
    throw Error(ErrorCode::UnknownPoint, "unknown point '" + std::string(label) + "'");
}

FiniteMetricSpace FiniteMetricSpace::permuted(std::span<const PointId> order) const {
    const std::size_t n = size();
    if (order.size() != n) throw Error(ErrorCode::InvalidArgument, "permutation size mismatch");
    std::vector<std::string> labels(n);
    std::vector<double> table(n * n);
    for (PointId i = 0; i < n; ++i) {
        labels[i] = label(order[i]);
        for (PointId j = 0; j < n; ++j) table[i * n + j] = (*this)(order[i], order[j]);
    }
    return FiniteMetricSpace(std::move(labels), std::move(table));
}

}  // namespace bestprox
