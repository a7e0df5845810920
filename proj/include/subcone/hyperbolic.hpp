#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "subcone/discrete_function.hpp"
#include "subcone/signed_log.hpp"

namespace subcone {

/// Point of the hyperbolic plane in non-Euclidean polar coordinates: rho is
/// the hyperbolic distance to the disk centre, phi the polar angle. When phi
/// is too small for a native float, log_phi carries it exactly in sign/log
/// form (phi is then the underflowed value, typically 0).
struct PolarPoint {
    Real rho = 0;
    Real phi = 0;
    std::optional<SignedLog> log_phi;

    static PolarPoint from_angle(Real rho, Real phi);
    static PolarPoint from_log_angle(Real rho, SignedLog log_phi);

    /// The angle as a signed log, from log_phi when present.
    SignedLog angle() const;
};

/// Intermediate quantities of the closed-form distance:
/// d = ln((1 + A) / (1 - A)), A^2 = 1 - 8 / D,
/// D = (2 - beta^2)(t + 1/t)^2 + beta^2 (s + 1/s)^2,
/// beta^2 = 1 - cos(dphi), s^2 = e^{rho1 + rho2}, t^2 = e^{rho1 - rho2}.
struct HyperbolicTerms {
    Real beta2 = 0;
    Real log_beta2 = 0;
    Real log_t2 = 0;
    Real log_s2 = 0;
    Real log_denom = 0;
    Real a = 0;
};

/// rho1 + rho2 above which the direct path refuses (e^{rho1+rho2} must stay finite).
inline constexpr Real kDirectPathLimit = 600;

/// Euclidean radius of a point at hyperbolic distance rho from the centre,
/// (e^rho - 1) / (e^rho + 1) = tanh(rho / 2).
Real rho_to_r(Real rho);

/// Disk point for polar coordinates.
std::complex<Real> to_disk(const PolarPoint& p);

/// Distance in the Poincare disk between two points given as complex numbers,
/// ln((|1 - x1 conj(x2)| + |x1 - x2|) / (|1 - x1 conj(x2)| - |x1 - x2|)).
/// Throws DomainError for points on or outside the unit circle.
Real disk_distance(std::complex<Real> x1, std::complex<Real> x2);

/// Closed-form polar distance evaluated in native floating point.
/// Throws DomainError when rho1 + rho2 exceeds kDirectPathLimit.
Real polar_distance(const PolarPoint& p1, const PolarPoint& p2);

/// All terms of the closed form, evaluated in log space.
HyperbolicTerms hyperbolic_terms(Real rho1, Real rho2, const SignedLog& delta_phi);

/// Same distance evaluated entirely from logarithms; valid for radii far
/// beyond the native exponent range and for angle gaps that underflow.
Real polar_distance_logdomain(Real rho1, Real rho2, const SignedLog& delta_phi);
Real polar_distance_logdomain(const PolarPoint& p1, const PolarPoint& p2);

/// Strictly decreasing positive scales eps_1 > eps_2 > ... > 0.
class EpsilonSchedule {
public:
    EpsilonSchedule() = default;
    /// Throws InvariantError unless strictly decreasing and positive.
    explicit EpsilonSchedule(std::vector<Real> values);

    /// 2^-first, 2^-(first+1), ..., 2^-last.
    static EpsilonSchedule dyadic(int first, int last);

    std::size_t size() const { return values_.size(); }
    Real operator[](std::size_t i) const { return values_[i]; }
    const std::vector<Real>& values() const { return values_; }

private:
    std::vector<Real> values_;
};

/// Witness point (rho / eps, sum_k a_k exp(-s_k / eps)) of a discrete function.
PolarPoint witness_point(const DiscreteFunction& g, Real eps);

/// Witness points of two discrete functions together with their angle gap,
/// assembled term by term from the exact coefficient differences so the
/// leading term at the segregation time survives.
struct WitnessPair {
    PolarPoint first;
    PolarPoint second;
    SignedLog delta_phi;
};

WitnessPair witness_pair(const DiscreteFunction& g1, const DiscreteFunction& g2, Real eps);

/// eps times the hyperbolic distance between the two witness points.
Real scaled_witness_distance(const DiscreteFunction& g1, const DiscreteFunction& g2, Real eps);

/// |eps * d_X(witnesses) - d_D(g1, g2)|.
Real asymptotic_error(const DiscreteFunction& g1, const DiscreteFunction& g2, Real eps);

}  // namespace subcone
