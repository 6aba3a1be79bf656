#include "bestprox/gallery.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>
#include <sstream>

#include "bestprox/error.hpp"

namespace bestprox::gallery {

std::string format_number(double v) {
    if (v == 0.0) return "0";
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

ProximityProblem build_circle(double a, double b, std::size_t n) {
    if (!(a > 0.0 && a < b) || !std::isfinite(b)) {
        throw Error(ErrorCode::InvalidArgument, "circle needs radii 0 < a < b");
    }
    if (n < 4 || n % 2 != 0) throw Error(ErrorCode::InvalidArgument, "circle needs an even sample count n >= 4");

    const std::size_t half = n / 2;
    // chord[r][k]: distance between radius class r (0: a-a, 1: a-b, 2: b-b) at angular offset k <= n/2
    auto chord = [&](double r1, double r2, std::size_t k) {
        if (k == 0) return std::abs(r2 - r1);
        if (k == half) return r1 + r2;
        const double angle = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
        return std::sqrt(r1 * r1 + r2 * r2 - 2.0 * r1 * r2 * std::cos(angle));
    };
    std::vector<std::array<double, 3>> by_offset(half + 1);
    for (std::size_t k = 0; k <= half; ++k) by_offset[k] = {chord(a, a, k), chord(a, b, k), chord(b, b, k)};

    const std::size_t total = 2 * n;
    std::vector<std::string> labels(total);
    for (std::size_t j = 0; j < n; ++j) {
        labels[j] = "z" + std::to_string(j);
        labels[n + j] = "w" + std::to_string(j);
    }
    std::vector<double> table(total * total, 0.0);
    for (std::size_t p = 0; p < total; ++p) {
        for (std::size_t q = 0; q < total; ++q) {
            if (p == q) continue;
            const std::size_t jp = p % n, jq = q % n;
            const std::size_t diff = jp > jq ? jp - jq : jq - jp;
            const std::size_t k = std::min(diff, n - diff);
            const std::size_t cls = (p < n ? 0 : 1) + (q < n ? 0 : 1);
            table[p * total + q] = by_offset[k][cls];
        }
    }
    FiniteMetricSpace space(std::move(labels), std::move(table));

    std::vector<PointId> inner(n), outer(n);
    PointMap phi(total), psi(total);
    for (std::size_t j = 0; j < n; ++j) {
        inner[j] = j;
        outer[j] = n + j;
        phi.set(j, n + j);
        psi.set(j, n + (j + half) % n);
    }
    PointSet s1(total, std::move(inner)), s2(total, std::move(outer));
    const double tol = separated_tolerance(space, s1, s2, 1e-9 * b);
    return ProximityProblem(std::move(space), {std::move(s1), std::move(s2)}, {std::move(phi), std::move(psi)},
                            {tol, 1e-12}, true);
}

ProximityProblem build_cartesian(std::span<const BasePoint> base, std::span<const std::size_t> phi_prime,
                                 std::span<const std::size_t> psi_prime) {
    const std::size_t m = base.size();
    if (m == 0) throw Error(ErrorCode::InvalidArgument, "cartesian base must be nonempty");
    if (phi_prime.size() != m || psi_prime.size() != m) {
        throw Error(ErrorCode::InvalidArgument, "base maps must be total on the base points");
    }
    for (std::size_t i = 0; i < m; ++i) {
        if (phi_prime[i] >= m || psi_prime[i] >= m) {
            throw Error(ErrorCode::InvalidArgument, "base map image outside the base points");
        }
        if (!std::isfinite(base[i].value)) throw Error(ErrorCode::InvalidArgument, "base values must be finite");
    }
    const std::size_t total = 2 * m;
    std::vector<std::string> labels(total);
    for (std::size_t i = 0; i < m; ++i) {
        labels[i] = "(-1," + base[i].label + ")";
        labels[m + i] = "(1," + base[i].label + ")";
    }
    std::vector<double> table(total * total, 0.0);
    for (std::size_t p = 0; p < total; ++p) {
        for (std::size_t q = 0; q < total; ++q) {
            if (p == q) continue;
            const double du = (p < m) == (q < m) ? 0.0 : 2.0;
            table[p * total + q] = std::hypot(du, std::abs(base[p % m].value - base[q % m].value));
        }
    }
    FiniteMetricSpace space(std::move(labels), std::move(table));

    std::vector<PointId> lower(m), upper(m);
    PointMap phi(total), psi(total);
    for (std::size_t i = 0; i < m; ++i) {
        lower[i] = i;
        upper[i] = m + i;
        phi.set(i, m + phi_prime[i]);
        psi.set(i, m + psi_prime[i]);
    }
    PointSet s1(total, std::move(lower)), s2(total, std::move(upper));
    const double dmin = min_cross_distance(space, s1, s2);
    const double tol = separated_tolerance(space, s1, s2, 1e-9 * std::max(1.0, dmin));
    return ProximityProblem(std::move(space), {std::move(s1), std::move(s2)}, {std::move(phi), std::move(psi)},
                            {tol, 1e-12}, true);
}

std::vector<double> ex22_default_sample() { return {-1.0, 1.0, 3.0, 5.0}; }

ProximityProblem build_ex22_sample(std::vector<double> sample) {
    for (double x : sample) {
        if (!std::isfinite(x) || std::abs(x) < 1.0) {
            throw Error(ErrorCode::InvalidArgument, "ex22 sample points must satisfy |x| >= 1, got " + format_number(x));
        }
    }
    std::sort(sample.begin(), sample.end());
    sample.erase(std::unique(sample.begin(), sample.end()), sample.end());
    auto has = [&](double v) { return std::binary_search(sample.begin(), sample.end(), v); };
    std::vector<std::string> missing;
    if (!has(3.0)) missing.push_back("3");
    if (!has(5.0)) missing.push_back("5");
    if (!missing.empty()) {
        std::string list;
        for (const auto& s : missing) list += (list.empty() ? "" : ", ") + s;
        throw Error(ErrorCode::SampleMissingImages, "ex22 sample lacks phi' images: " + list);
    }

    std::vector<BasePoint> base;
    std::vector<std::size_t> phi_prime, psi_prime;
    const auto idx = [&](double v) {
        return static_cast<std::size_t>(std::lower_bound(sample.begin(), sample.end(), v) - sample.begin());
    };
    for (std::size_t i = 0; i < sample.size(); ++i) {
        base.push_back({format_number(sample[i]), sample[i]});
        phi_prime.push_back(sample[i] <= -1.0 ? idx(3.0) : idx(5.0));
        psi_prime.push_back(i);
    }
    return build_cartesian(base, phi_prime, psi_prime);
}

ProximityProblem build_ex22(std::span<const double> extra_samples) {
    auto sample = ex22_default_sample();
    sample.insert(sample.end(), extra_samples.begin(), extra_samples.end());
    return build_ex22_sample(std::move(sample));
}

ProximityProblem SelfMapPair::as_problem(Tolerances tol) const {
    const std::size_t n = space.size();
    return ProximityProblem(space, {PointSet::all(n), PointSet::all(n)}, {phi, psi}, tol, discretized);
}

std::vector<double> reciprocal_default_sample() { return {0.0, 1.0, -1.0}; }

SelfMapPair build_reciprocal(std::span<const double> sample) {
    std::vector<double> points(sample.begin(), sample.end());
    {
        std::set<double> distinct;
        for (double x : points) {
            if (!std::isfinite(x)) throw Error(ErrorCode::InvalidArgument, "reciprocal sample must be finite");
            if (!distinct.insert(x).second) {
                throw Error(ErrorCode::InvalidArgument, "duplicate sample point " + format_number(x));
            }
        }
        if (!distinct.contains(0.0) || !distinct.contains(1.0)) {
            throw Error(ErrorCode::InvalidArgument, "reciprocal sample must contain 0 and 1");
        }
    }
    auto phi_of = [](double x) { return x == 0.0 ? 1.0 : -1.0 / x; };
    auto psi_of = [](double x) { return x == 0.0 ? 1.0 : -1.0 / (x * x * x); };
    auto find = [&](double v) -> std::optional<PointId> {
        auto it = std::find(points.begin(), points.end(), v);
        if (it == points.end()) return std::nullopt;
        return static_cast<PointId>(it - points.begin());
    };

    std::set<double> missing;
    for (double x : points) {
        if (!find(phi_of(x))) missing.insert(phi_of(x));
        if (!find(psi_of(x))) missing.insert(psi_of(x));
    }
    if (!missing.empty()) {
        std::string list;
        for (double v : missing) list += (list.empty() ? "" : ", ") + format_number(v);
        throw Error(ErrorCode::SampleNotClosed, "sample is not closed under the maps; missing images: " + list);
    }

    std::vector<std::string> labels;
    std::vector<std::vector<double>> coords;
    for (double x : points) {
        labels.push_back(format_number(x));
        coords.push_back({x});
    }
    FiniteMetricSpace space = FiniteMetricSpace::from_coordinates(std::move(labels), coords);
    const std::size_t n = points.size();
    PointMap phi(n), psi(n);
    for (PointId p = 0; p < n; ++p) {
        phi.set(p, *find(phi_of(points[p])));
        psi.set(p, *find(psi_of(points[p])));
    }
    return {std::move(space), std::move(phi), std::move(psi), true};
}

}  // namespace bestprox::gallery
