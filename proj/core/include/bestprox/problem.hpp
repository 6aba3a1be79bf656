#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "bestprox/metric_space.hpp"

namespace bestprox {

/// Subset of a space's points, kept sorted in point-list order.
class PointSet {
public:
    PointSet() = default;
    /// Throws Error{InvalidProblem} on out-of-range or duplicate members.
    PointSet(std::size_t universe, std::vector<PointId> members);

    static PointSet all(std::size_t universe);

    bool contains(PointId p) const noexcept { return p < mask_.size() && mask_[p]; }
    std::span<const PointId> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    std::size_t universe() const noexcept { return mask_.size(); }

    bool operator==(const PointSet&) const = default;

private:
    std::vector<PointId> members_;
    std::vector<bool> mask_;
};

/// Lookup table from point ids to point ids; entries may be undefined.
class PointMap {
public:
    PointMap() = default;
    explicit PointMap(std::size_t universe) : images_(universe, kNoPoint) {}

    /// Total map: images[p] is the image of p.
    static PointMap total(std::vector<PointId> images);
    static PointMap identity(std::size_t universe);

    void set(PointId from, PointId to);
    bool defined(PointId p) const noexcept { return p < images_.size() && images_[p] != kNoPoint; }
    /// Throws Error{UnknownPoint} when p is outside the domain.
    PointId at(PointId p) const;
    PointId operator()(PointId p) const noexcept { return images_[p]; }

    std::size_t universe() const noexcept { return images_.size(); }
    bool is_total() const noexcept;
    std::span<const PointId> images() const noexcept { return images_; }

    bool operator==(const PointMap&) const = default;

private:
    std::vector<PointId> images_;
};

struct SubsetPair {
    PointSet s1;
    PointSet s2;
};

struct MappingPair {
    PointMap phi;
    PointMap psi;
};

struct Tolerances {
    double eq = 0.0;     // |d - d(S1,S2)| <= eq counts as attaining the set distance
    double conv = 1e-12; // iteration stops once consecutive gaps fall below this
};

/// min over S1 x S2 of d(p, q).
double min_cross_distance(const FiniteMetricSpace& space, const PointSet& s1, const PointSet& s2);

/// Least positive |d(p,q) - d(S1,S2)| over S1 x S2; nullopt when every pair attains.
std::optional<double> least_nonzero_gap(const FiniteMetricSpace& space, const PointSet& s1,
                                        const PointSet& s2);

/// Largest tolerance not exceeding `requested` that keeps attainment classes
/// separated (half the least nonzero gap).
double separated_tolerance(const FiniteMetricSpace& space, const PointSet& s1, const PointSet& s2,
                           double requested);

/// A pair of mappings phi, psi: S1 -> S2 on a finite metric space.
///
/// Construction enforces: S1, S2 nonempty; phi and psi defined exactly on S1
/// with images in S2; tol.eq >= 0; tol.conv > 0; and tol.eq strictly below
/// the least nonzero attainment gap, so the tolerance can never merge a
/// non-attaining pair into the attaining class.
class ProximityProblem {
public:
    ProximityProblem(FiniteMetricSpace space, SubsetPair sets, MappingPair maps, Tolerances tol = {},
                     bool discretized = false);

    const FiniteMetricSpace& space() const noexcept { return space_; }
    const PointSet& s1() const noexcept { return sets_.s1; }
    const PointSet& s2() const noexcept { return sets_.s2; }
    const PointMap& phi() const noexcept { return maps_.phi; }
    const PointMap& psi() const noexcept { return maps_.psi; }
    double tol_eq() const noexcept { return tol_.eq; }
    double tol_conv() const noexcept { return tol_.conv; }
    const Tolerances& tolerances() const noexcept { return tol_; }
    bool discretized() const noexcept { return discretized_; }

    /// d(S1, S2), computed once at construction.
    double set_distance() const noexcept { return set_distance_; }

    /// |d(p,q) - d(S1,S2)| <= tol_eq.
    bool attains(PointId p, PointId q) const noexcept {
        const double gap = space_(p, q) - set_distance_;
        return (gap < 0 ? -gap : gap) <= tol_.eq;
    }

    /// S1 == S2 == every point of the space (the fixed-point setting).
    bool is_self_map_instance() const noexcept;

    /// Same problem over a relabeled point order (order[k] becomes point k).
    ProximityProblem permuted(std::span<const PointId> order) const;

    ProximityProblem with_tolerances(Tolerances tol) const;

private:
    FiniteMetricSpace space_;
    SubsetPair sets_;
    MappingPair maps_;
    Tolerances tol_;
    bool discretized_;
    double set_distance_ = 0.0;
};

}  // namespace bestprox
