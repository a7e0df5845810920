#include "subcone/signed_log.hpp"

#include <algorithm>
#include <numbers>
#include <stdexcept>

namespace subcone {

namespace {
constexpr Real kNegInf = -std::numeric_limits<Real>::infinity();
constexpr Real kLn2 = std::numbers::ln2_v<Real>;
}  // namespace

SignedLog SignedLog::from_value(Real x)
{
    if (x == 0) {
        return zero();
    }
    return {x < 0 ? -1 : 1, std::log(std::fabs(x))};
}

SignedLog SignedLog::from_log(int sign, Real log_abs)
{
    if (sign == 0 || log_abs == kNegInf) {
        return zero();
    }
    if (std::isnan(log_abs) || log_abs == std::numeric_limits<Real>::infinity()) {
        throw std::domain_error("signed log magnitude must be finite");
    }
    return {sign < 0 ? -1 : 1, log_abs};
}

Real SignedLog::value() const { return sign == 0 ? Real(0) : static_cast<Real>(sign) * std::exp(log_abs); }

Real log_add_exp(Real a, Real b)
{
    if (a == kNegInf) {
        return b;
    }
    if (b == kNegInf) {
        return a;
    }
    const Real hi = std::max(a, b);
    const Real lo = std::min(a, b);
    return hi + std::log1p(std::exp(lo - hi));
}

SignedLog signed_log_sum(std::span<const SignedLog> terms)
{
    Real top = kNegInf;
    for (const auto& t : terms) {
        if (!t.is_zero()) {
            top = std::max(top, t.log_abs);
        }
    }
    if (top == kNegInf) {
        return SignedLog::zero();
    }
    Real acc = 0;
    for (const auto& t : terms) {
        if (!t.is_zero()) {
            acc += static_cast<Real>(t.sign) * std::exp(t.log_abs - top);
        }
    }
    if (acc == 0) {
        return SignedLog::zero();
    }
    return {acc < 0 ? -1 : 1, top + std::log(std::fabs(acc))};
}

Real log_cosh(Real x)
{
    x = std::fabs(x);
    return x + std::log1p(std::exp(-2 * x)) - kLn2;
}

Real log_sinh(Real x)
{
    if (x < 0) {
        throw std::domain_error("log_sinh of a negative argument");
    }
    if (x == 0) {
        return kNegInf;
    }
    if (x < 1) {
        return std::log(std::sinh(x));
    }
    return x + std::log1p(-std::exp(-2 * x)) - kLn2;
}

}  // namespace subcone
