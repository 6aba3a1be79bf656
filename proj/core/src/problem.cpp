#include "bestprox/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "bestprox/error.hpp"

namespace bestprox {

PointSet::PointSet(std::size_t universe, std::vector<PointId> members)
    : members_(std::move(members)), mask_(universe, false) {
    for (PointId p : members_) {
        if (p >= universe) throw Error(ErrorCode::InvalidProblem, "subset member outside the space");
        if (mask_[p]) throw Error(ErrorCode::InvalidProblem, "duplicate subset member");
        mask_[p] = true;
    }
    std::sort(members_.begin(), members_.end());
}

PointSet PointSet::all(std::size_t universe) {
    std::vector<PointId> members(universe);
    for (PointId p = 0; p < universe; ++p) members[p] = p;
    return PointSet(universe, std::move(members));
}

PointMap PointMap::total(std::vector<PointId> images) {
    PointMap m;
    for (PointId img : images) {
        if (img >= images.size()) throw Error(ErrorCode::InvalidProblem, "map image outside the space");
    }
    m.images_ = std::move(images);
    return m;
}

PointMap PointMap::identity(std::size_t universe) {
    PointMap m(universe);
    for (PointId p = 0; p < universe; ++p) m.images_[p] = p;
    return m;
}

void PointMap::set(PointId from, PointId to) {
    if (from >= images_.size() || to >= images_.size()) {
        throw Error(ErrorCode::InvalidProblem, "map entry outside the space");
    }
    images_[from] = to;
}

PointId PointMap::at(PointId p) const {
    if (!defined(p)) throw Error(ErrorCode::UnknownPoint, "point outside the map's domain");
    return images_[p];
}

bool PointMap::is_total() const noexcept {
    return std::none_of(images_.begin(), images_.end(), [](PointId p) { return p == kNoPoint; });
}

double min_cross_distance(const FiniteMetricSpace& space, const PointSet& s1, const PointSet& s2) {
    double best = std::numeric_limits<double>::infinity();
    for (PointId p : s1.members()) {
        for (PointId q : s2.members()) best = std::min(best, space(p, q));
    }
    return best;
}

std::optional<double> least_nonzero_gap(const FiniteMetricSpace& space, const PointSet& s1,
                                        const PointSet& s2) {
    const double dmin = min_cross_distance(space, s1, s2);
    std::optional<double> least;
    for (PointId p : s1.members()) {
        for (PointId q : s2.members()) {
            const double gap = space(p, q) - dmin;
            if (gap > 0.0 && (!least || gap < *least)) least = gap;
        }
    }
    return least;
}

double separated_tolerance(const FiniteMetricSpace& space, const PointSet& s1, const PointSet& s2,
                           double requested) {
    if (auto gap = least_nonzero_gap(space, s1, s2)) return std::min(requested, *gap / 2.0);
    return requested;
}

namespace {

void check_map(const PointMap& map, const char* name, const PointSet& s1, const PointSet& s2,
               std::size_t universe) {
    if (map.universe() != universe) {
        throw Error(ErrorCode::InvalidProblem, std::string(name) + " is over a different point universe");
    }
    for (PointId p = 0; p < universe; ++p) {
        if (s1.contains(p) != map.defined(p)) {
            throw Error(ErrorCode::InvalidProblem,
                        std::string(name) + " must be defined exactly on S1 (point #" + std::to_string(p) + ")");
        }
        if (map.defined(p) && !s2.contains(map(p))) {
            throw Error(ErrorCode::InvalidProblem,
                        std::string(name) + " maps point #" + std::to_string(p) + " outside S2");
        }
    }
}

}  // namespace

ProximityProblem::ProximityProblem(FiniteMetricSpace space, SubsetPair sets, MappingPair maps,
                                   Tolerances tol, bool discretized)
    : space_(std::move(space)), sets_(std::move(sets)), maps_(std::move(maps)), tol_(tol),
      discretized_(discretized) {
    const std::size_t n = space_.size();
    if (sets_.s1.universe() != n || sets_.s2.universe() != n) {
        throw Error(ErrorCode::InvalidProblem, "subsets are over a different point universe");
    }
    if (sets_.s1.empty() || sets_.s2.empty()) throw Error(ErrorCode::InvalidProblem, "S1 and S2 must be nonempty");
    check_map(maps_.phi, "phi", sets_.s1, sets_.s2, n);
    check_map(maps_.psi, "psi", sets_.s1, sets_.s2, n);
    if (!(tol_.eq >= 0.0) || !std::isfinite(tol_.eq)) {
        throw Error(ErrorCode::InvalidProblem, "tol_eq must be a finite non-negative number");
    }
    if (!(tol_.conv > 0.0) || !std::isfinite(tol_.conv)) {
        throw Error(ErrorCode::InvalidProblem, "tol_conv must be a finite positive number");
    }
    set_distance_ = min_cross_distance(space_, sets_.s1, sets_.s2);
    if (auto gap = least_nonzero_gap(space_, sets_.s1, sets_.s2); gap && !(tol_.eq < *gap)) {
        throw Error(ErrorCode::InvalidProblem, "tol_eq must be below the least nonzero attainment gap (" +
                                                   std::to_string(*gap) + ")");
    }
}

bool ProximityProblem::is_self_map_instance() const noexcept {
    return sets_.s1.size() == space_.size() && sets_.s2.size() == space_.size();
}

ProximityProblem ProximityProblem::permuted(std::span<const PointId> order) const {
    const std::size_t n = space_.size();
    std::vector<PointId> position(n, kNoPoint);
    for (PointId k = 0; k < order.size(); ++k) {
        if (order[k] >= n || position[order[k]] != kNoPoint) {
            throw Error(ErrorCode::InvalidArgument, "order is not a permutation");
        }
        position[order[k]] = k;
    }
    auto remap_set = [&](const PointSet& s) {
        std::vector<PointId> members;
        for (PointId p : s.members()) members.push_back(position[p]);
        return PointSet(n, std::move(members));
    };
    auto remap_map = [&](const PointMap& m) {
        PointMap out(n);
        for (PointId p = 0; p < n; ++p) {
            if (m.defined(p)) out.set(position[p], position[m(p)]);
        }
        return out;
    };
    return ProximityProblem(space_.permuted(order), {remap_set(sets_.s1), remap_set(sets_.s2)},
                            {remap_map(maps_.phi), remap_map(maps_.psi)}, tol_, discretized_);
}

ProximityProblem ProximityProblem::with_tolerances(Tolerances tol) const {
    return ProximityProblem(space_, sets_, maps_, tol, discretized_);
}

}  // namespace bestprox
