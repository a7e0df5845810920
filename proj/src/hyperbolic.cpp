#include "subcone/hyperbolic.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "subcone/core_tree.hpp"
#include "subcone/errors.hpp"

namespace subcone {

namespace {

constexpr Real kNegInf = -std::numeric_limits<Real>::infinity();
constexpr Real kLn2 = std::numbers::ln2_v<Real>;
constexpr Real kTwoPi = 2 * std::numbers::pi_v<Real>;
// exp of anything below this underflows past the smallest long double normal.
const Real kLogMinNormal = std::log(std::numeric_limits<Real>::min());

void require_finite_rho(Real rho)
{
    if (!(rho >= 0) || !std::isfinite(rho)) {
        throw DomainError("polar radius must be finite and non-negative");
    }
}

// d = ln((1+A)/(1-A)) from log A^2 and log D; 1 - A^2 = 8 / D.
Real distance_from_a(Real a, Real log_denom)
{
    if (a < Real(0.5)) {
        return 2 * std::atanh(a);
    }
    return (log_denom - 3 * kLn2) + 2 * std::log1p(a);
}

// log(1 - cos x) and log(1 + cos x) for an angle given in signed log form.
struct AngleLogs {
    Real beta2;
    Real log_beta2;
    Real log_two_minus_beta2;
};

AngleLogs angle_logs(const SignedLog& delta)
{
    if (delta.is_zero()) {
        return {0, kNegInf, kLn2};
    }
    if (delta.log_abs < kLogMinNormal) {
        // 1 - cos x = x^2/2 (1 - x^2/12 + ...); the correction is below e^{2 log|x|}.
        const Real log_beta2 = 2 * delta.log_abs - kLn2;
        return {std::exp(log_beta2), log_beta2, kLn2};
    }
    if (delta.log_abs > std::log(std::numeric_limits<Real>::max())) {
        throw DomainError("angle gap too large to reduce");
    }
    const Real x = std::remainder(delta.value(), kTwoPi);
    const Real half_sin = std::fabs(std::sin(x / 2));
    const Real half_cos = std::fabs(std::cos(x / 2));
    const Real log_beta2 = half_sin == 0 ? kNegInf : kLn2 + 2 * std::log(half_sin);
    const Real log_rest = half_cos == 0 ? kNegInf : kLn2 + 2 * std::log(half_cos);
    return {2 * half_sin * half_sin, log_beta2, log_rest};
}

}  // namespace

PolarPoint PolarPoint::from_angle(Real rho, Real phi)
{
    require_finite_rho(rho);
    if (!std::isfinite(phi)) {
        throw DomainError("polar angle must be finite");
    }
    return {rho, phi, std::nullopt};
}

PolarPoint PolarPoint::from_log_angle(Real rho, SignedLog log_phi)
{
    require_finite_rho(rho);
    return {rho, log_phi.value(), log_phi};
}

SignedLog PolarPoint::angle() const { return log_phi ? *log_phi : SignedLog::from_value(phi); }

Real rho_to_r(Real rho)
{
    require_finite_rho(rho);
    return std::tanh(rho / 2);
}

std::complex<Real> to_disk(const PolarPoint& p) { return std::polar(rho_to_r(p.rho), p.phi); }

Real disk_distance(std::complex<Real> x1, std::complex<Real> x2)
{
    const Real r1 = std::abs(x1);
    const Real r2 = std::abs(x2);
    if (!(r1 < 1) || !(r2 < 1)) {
        throw DomainError("disk point on or outside the unit circle");
    }
    const Real num = std::abs(Real(1) - x1 * std::conj(x2));
    const Real gap = std::abs(x1 - x2);
    // (num + gap) / (num - gap) = 1 + 2 gap (num + gap) / (num^2 - gap^2)
    // and num^2 - gap^2 = (1 - |x1|^2)(1 - |x2|^2).
    const Real conformal = (1 - r1) * (1 + r1) * (1 - r2) * (1 + r2);
    return std::log1p(2 * gap * (num + gap) / conformal);
}

Real polar_distance(const PolarPoint& p1, const PolarPoint& p2)
{
    require_finite_rho(p1.rho);
    require_finite_rho(p2.rho);
    if (p1.rho + p2.rho > kDirectPathLimit) {
        throw DomainError("radii sum beyond the direct-path range; use polar_distance_logdomain");
    }
    const Real dphi = p1.phi - p2.phi;
    const Real half_sin = std::sin(dphi / 2);
    const Real beta2 = 2 * half_sin * half_sin;
    const Real t = std::exp((p1.rho - p2.rho) / 2);
    const Real s = std::exp((p1.rho + p2.rho) / 2);
    const Real denom = (2 - beta2) * (t + 1 / t) * (t + 1 / t) + beta2 * (s + 1 / s) * (s + 1 / s);
    const Real half_gap = std::sinh((p1.rho - p2.rho) / 2);
    const Real excess = 8 * half_gap * half_gap + 4 * beta2 * std::sinh(p1.rho) * std::sinh(p2.rho);
    const Real a = std::sqrt(excess / denom);
    return distance_from_a(a, std::log(denom));
}

HyperbolicTerms hyperbolic_terms(Real rho1, Real rho2, const SignedLog& delta_phi)
{
    require_finite_rho(rho1);
    require_finite_rho(rho2);
    const AngleLogs ang = angle_logs(delta_phi);
    const Real gap = std::fabs(rho1 - rho2);
    const Real sum = rho1 + rho2;

    HyperbolicTerms out;
    out.beta2 = ang.beta2;
    out.log_beta2 = ang.log_beta2;
    out.log_t2 = rho1 - rho2;
    out.log_s2 = sum;
    // log (t + 1/t)^2 = log 4 + 2 log cosh(gap/2), likewise for s.
    const Real log_t_term = 2 * kLn2 + 2 * log_cosh(gap / 2);
    const Real log_s_term = 2 * kLn2 + 2 * log_cosh(sum / 2);
    out.log_denom = log_add_exp(ang.log_two_minus_beta2 + log_t_term, ang.log_beta2 + log_s_term);
    // D - 8 = 8 sinh^2(gap/2) + 4 beta^2 sinh(rho1) sinh(rho2)
    const Real log_excess = log_add_exp(3 * kLn2 + 2 * log_sinh(gap / 2),
                                        ang.log_beta2 == kNegInf
                                            ? kNegInf
                                            : 2 * kLn2 + ang.log_beta2 + log_sinh(rho1) + log_sinh(rho2));
    if (log_excess == kNegInf) {
        out.a = 0;
    } else {
        out.a = std::exp(std::min(Real(0), log_excess - out.log_denom) / 2);
    }
    return out;
}

Real polar_distance_logdomain(Real rho1, Real rho2, const SignedLog& delta_phi)
{
    const HyperbolicTerms terms = hyperbolic_terms(rho1, rho2, delta_phi);
    return distance_from_a(terms.a, terms.log_denom);
}

Real polar_distance_logdomain(const PolarPoint& p1, const PolarPoint& p2)
{
    const SignedLog a1 = p1.angle();
    const SignedLog a2 = p2.angle();
    const SignedLog both[] = {a1, a2.negated()};
    return polar_distance_logdomain(p1.rho, p2.rho, signed_log_sum(both));
}

EpsilonSchedule::EpsilonSchedule(std::vector<Real> values) : values_(std::move(values))
{
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (!(values_[i] > 0) || !std::isfinite(values_[i])) {
            throw InvariantError("epsilon " + std::to_string(i) + " is not a positive finite number");
        }
        if (i > 0 && !(values_[i] < values_[i - 1])) {
            throw InvariantError("epsilon schedule not strictly decreasing at position " + std::to_string(i));
        }
    }
}

EpsilonSchedule EpsilonSchedule::dyadic(int first, int last)
{
    std::vector<Real> v;
    for (int k = first; k <= last; ++k) {
        v.push_back(std::ldexp(Real(1), -k));
    }
    return EpsilonSchedule(std::move(v));
}

namespace {

SignedLog support_term(const Rational& coeff, const Rational& time, Real eps)
{
    const Real c = coeff.to_long_double();
    return SignedLog::from_log(coeff.sign(), std::log(std::fabs(c)) - time.to_long_double() / eps);
}

void require_positive_eps(Real eps)
{
    if (!(eps > 0) || !std::isfinite(eps)) {
        throw DomainError("epsilon must be positive and finite");
    }
}

}  // namespace

PolarPoint witness_point(const DiscreteFunction& g, Real eps)
{
    require_positive_eps(eps);
    std::vector<SignedLog> terms;
    terms.reserve(g.support().size());
    for (const auto& p : g.support()) {
        terms.push_back(support_term(p.a, p.t, eps));
    }
    return PolarPoint::from_log_angle(g.rho().to_long_double() / eps, signed_log_sum(terms));
}

WitnessPair witness_pair(const DiscreteFunction& g1, const DiscreteFunction& g2, Real eps)
{
    WitnessPair out{witness_point(g1, eps), witness_point(g2, eps), SignedLog::zero()};
    const auto& a = g1.support();
    const auto& b = g2.support();
    std::vector<SignedLog> terms;
    std::size_t i = 0;
    std::size_t j = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i].t < b[j].t)) {
            terms.push_back(support_term(a[i].a, a[i].t, eps));
            ++i;
        } else if (i == a.size() || b[j].t < a[i].t) {
            terms.push_back(support_term(-b[j].a, b[j].t, eps));
            ++j;
        } else {
            const Rational c = a[i].a - b[j].a;
            if (!c.is_zero()) {
                terms.push_back(support_term(c, a[i].t, eps));
            }
            ++i;
            ++j;
        }
    }
    out.delta_phi = signed_log_sum(terms);
    return out;
}

Real scaled_witness_distance(const DiscreteFunction& g1, const DiscreteFunction& g2, Real eps)
{
    const WitnessPair w = witness_pair(g1, g2, eps);
    return eps * polar_distance_logdomain(w.first.rho, w.second.rho, w.delta_phi);
}

Real asymptotic_error(const DiscreteFunction& g1, const DiscreteFunction& g2, Real eps)
{
    return std::fabs(scaled_witness_distance(g1, g2, eps) - distance_discrete(g1, g2).to_long_double());
}

}  // namespace subcone
