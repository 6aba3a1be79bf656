#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "bestprox/problem.hpp"

namespace bestprox::gallery {

/// Shortest decimal that parses back to the same double ("-0.5", "3", "1e-09").
std::string format_number(double v);

/// Two concentric circles of radii a < b sampled at the same n angles
/// 2*pi*j/n. phi z is the outer point on z's own ray, psi z the outer point on
/// the opposite ray. Distances depend only on the radii and the angular index
/// difference, so symmetric pairs carry bit-identical distances.
/// Requires 0 < a < b and n >= 4 even.
ProximityProblem build_circle(double a, double b, std::size_t n);

struct BasePoint {
    std::string label;
    double value;
};

/// {-1, 1} x base under d'((u,v),(t,w)) = sqrt(|u-t|^2 + |v-w|^2).
/// S1 is the -1 slice, S2 the 1 slice; phi(-1,x) = (1, phi' x), likewise psi.
/// phi_prime[i] / psi_prime[i] are indices into base.
ProximityProblem build_cartesian(std::span<const BasePoint> base, std::span<const std::size_t> phi_prime,
                                 std::span<const std::size_t> psi_prime);

/// {-1, 1, 3, 5}
std::vector<double> ex22_default_sample();

/// Cartesian lift of phi' x = 3 (x <= -1), 5 (x >= 1) and psi' = identity over
/// the given sample of {|x| >= 1}. Throws Error{SampleMissingImages} if 3 or 5
/// is absent and Error{InvalidArgument} for |x| < 1.
ProximityProblem build_ex22_sample(std::vector<double> sample);

/// Default sample joined with extra_samples.
ProximityProblem build_ex22(std::span<const double> extra_samples = {});

/// Self-map pair on a finite space (S1 = S2 = the whole space).
struct SelfMapPair {
    FiniteMetricSpace space;
    PointMap phi;
    PointMap psi;
    bool discretized = true;

    ProximityProblem as_problem(Tolerances tol = {}) const;
};

/// {0, 1, -1}: the only finite sample containing 0 and 1 that is closed under
/// x -> -1/x^3.
std::vector<double> reciprocal_default_sample();

/// phi x = -1/x, psi x = -1/x^3 (both 1 at 0) tabulated on the sample.
/// Throws Error{SampleNotClosed} listing images missing from the sample.
SelfMapPair build_reciprocal(std::span<const double> sample);

}  // namespace bestprox::gallery
