#include <doctest.h>

#include <cmath>
#include <numbers>

#include <boost/multiprecision/mpfr.hpp>

#include "helpers.hpp"
#include "subcone/core_tree.hpp"
#include "subcone/errors.hpp"
#include "subcone/hyperbolic.hpp"
#include "subcone/sampling.hpp"
#include "subcone/signed_log.hpp"

using namespace subcone;
using subcone::test::q;
using Big = boost::multiprecision::mpfr_float;

namespace {

Big big(const Rational& r)
{
    Big x;
    mpfr_set_q(x.backend().data(), r.raw().get_mpq_t(), MPFR_RNDN);
    return x;
}

// Hyperbolic law of cosines, cosh d = cosh(r1 - r2) + 2 sinh r1 sinh r2 sin^2(dphi/2).
Big law_of_cosines(const Big& rho1, const Big& rho2, const Big& dphi)
{
    using boost::multiprecision::acosh;
    using boost::multiprecision::cosh;
    using boost::multiprecision::sin;
    using boost::multiprecision::sinh;
    const Big h = sin(dphi / 2);
    return acosh(cosh(rho1 - rho2) + 2 * sinh(rho1) * sinh(rho2) * h * h);
}

Big witness_angle(const DiscreteFunction& g, const Big& eps)
{
    Big phi = 0;
    for (const auto& p : g.support()) {
        phi += big(p.a) * boost::multiprecision::exp(-big(p.t) / eps);
    }
    return phi;
}

Real rel(Real a, Real b) { return std::fabs(a - b) / std::max<Real>(std::fabs(b), 1e-300L); }

}  // namespace

TEST_CASE("signed log arithmetic")
{
    const std::vector<SignedLog> terms = {SignedLog::from_value(3), SignedLog::from_value(-5),
                                          SignedLog::from_value(0.5L)};
    CHECK(signed_log_sum(terms).value() == doctest::Approx(-1.5));
    const std::vector<SignedLog> cancel = {SignedLog::from_value(2), SignedLog::from_value(-2)};
    CHECK(signed_log_sum(cancel).is_zero());
    const std::vector<SignedLog> tiny = {SignedLog::from_log(1, -5000), SignedLog::from_log(-1, -5001)};
    CHECK(signed_log_sum(tiny).log_abs == doctest::Approx(-5000 + std::log1p(-std::exp(-1.0L))));
    CHECK(log_cosh(2000) == doctest::Approx(2000 - std::numbers::ln2));
    CHECK(log_sinh(1e-30L) == doctest::Approx(std::log(1e-30L)));
    CHECK(log_add_exp(-INFINITY, 3) == 3);
}

TEST_CASE("rho to r")
{
    CHECK(rho_to_r(0) == 0);
    CHECK(rho_to_r(std::log(3.0L)) == doctest::Approx(0.5L).epsilon(1e-18));
    CHECK(rho_to_r(40) < 1);
    CHECK_THROWS_AS(rho_to_r(-1), DomainError);
}

TEST_CASE("disk distance closed forms")
{
    const Real r = 0.75L;
    CHECK(disk_distance({r, 0}, {r, 0}) == 0);
    CHECK(rel(disk_distance({0, 0}, {0, r}), std::log((1 + r) / (1 - r))) < 1e-15L);
    CHECK(rel(disk_distance({r, 0}, {-r, 0}), 2 * std::log((1 + r) / (1 - r))) < 1e-15L);
}

TEST_CASE("polar distance")
{
    const auto p = PolarPoint::from_angle(3, 1);
    CHECK(polar_distance(p, p) == 0);
    CHECK(rel(polar_distance(PolarPoint::from_angle(2, 0.5L), PolarPoint::from_angle(7, 0.5L)), 5) < 1e-15L);
    CHECK_THROWS_AS(polar_distance(PolarPoint::from_angle(400, 0), PolarPoint::from_angle(400, 1)), DomainError);
    CHECK(polar_distance_logdomain(PolarPoint::from_angle(1e4L, 0), PolarPoint::from_angle(1e4L, 0)) == 0);
    CHECK(std::fabs(polar_distance_logdomain(PolarPoint::from_angle(1e4L, 0), PolarPoint::from_angle(3e3L, 0)) -
                    7e3L) < 1e-9L);
}

TEST_CASE("polar and disk distances against a high-precision oracle")
{
    Big::default_precision(60);
    sampling::Rng rng(3);
    for (int trial = 0; trial < 300; ++trial) {
        const Real rho1 = sampling::positive_rational(rng, 12, 16).to_long_double();
        const Real rho2 = sampling::positive_rational(rng, 12, 16).to_long_double();
        const Real dphi = sampling::rational(rng, 6, 64).to_long_double();
        const auto p1 = PolarPoint::from_angle(rho1, 0.25L);
        const auto p2 = PolarPoint::from_angle(rho2, 0.25L + dphi);
        const Real want = static_cast<Real>(law_of_cosines(Big(rho1), Big(rho2), Big(p2.phi) - Big(p1.phi)));
        CHECK(rel(polar_distance(p1, p2), want) < 1e-14L);
        CHECK(rel(polar_distance_logdomain(p1, p2), want) < 1e-13L);
        CHECK(rel(disk_distance(to_disk(p1), to_disk(p2)), want) < 1e-12L);
    }
}

TEST_CASE("witness distances against a high-precision oracle")
{
    Big::default_precision(4000);
    sampling::Rng rng(4);
    for (int trial = 0; trial < 12; ++trial) {
        const auto [g1, g2] = sampling::discrete_pair(rng);
        for (int k : {4, 7, 10}) {
            const Real eps = std::ldexp(Real(1), -k);
            const Big beps = boost::multiprecision::ldexp(Big(1), -k);
            const Big d = law_of_cosines(big(g1.rho()) / beps, big(g2.rho()) / beps,
                                         witness_angle(g1, beps) - witness_angle(g2, beps));
            const Real want = static_cast<Real>(d * beps);
            const Real got = scaled_witness_distance(g1, g2, eps);
            CHECK(std::fabs(got - want) <= 1e-12L * std::max<Real>(1, want));
        }
    }
}

TEST_CASE("witness points")
{
    const auto z = witness_point(DiscreteFunction(q(2), {}), 0.5L);
    CHECK(z.rho == 4);
    CHECK(z.angle().is_zero());
    const auto w = witness_point(DiscreteFunction(q(2), {{q(1), q(1)}}), 0.5L);
    CHECK(w.rho == 4);
    CHECK(rel(w.angle().value(), std::exp(-2.0L)) < 1e-18L);
    CHECK_THROWS_AS(witness_point(DiscreteFunction(q(2), {}), 0), DomainError);
}

TEST_CASE("asymptotic error")
{
    const DiscreteFunction g(q(2), {{q(1), q(3)}});
    CHECK(asymptotic_error(g, g, 1e-3L) == 0);
    CHECK(asymptotic_error(DiscreteFunction(q(1), {}), DiscreteFunction(q(5, 2), {}), 1e-3L) <= 1e-9L);
    const DiscreteFunction h(q(3), {{q(1), q(-1)}});
    Real prev = INFINITY;
    for (int k = 4; k <= 20; ++k) {
        const Real e = asymptotic_error(g, h, std::ldexp(Real(1), -k));
        CHECK(e <= prev);
        prev = e;
    }
    CHECK(prev < 1e-4L);
}

TEST_CASE("epsilon schedules")
{
    CHECK(EpsilonSchedule::dyadic(2, 4).values() == std::vector<Real>{0.25L, 0.125L, 0.0625L});
    CHECK_THROWS_AS(EpsilonSchedule({0.1L, 0.2L}), InvariantError);
    CHECK_THROWS_AS(EpsilonSchedule({0.0L}), InvariantError);
}
