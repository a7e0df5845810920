#pragma once

#include <cmath>
#include <limits>
#include <span>

namespace subcone {

using Real = long double;

/// A real number carried as sign * exp(log_abs). Zero is sign 0 with
/// log_abs = -inf. Keeps magnitudes like exp(-10^6) that underflow any
/// native float.
struct SignedLog {
    int sign = 0;
    Real log_abs = -std::numeric_limits<Real>::infinity();

    static SignedLog zero() { return {}; }
    static SignedLog from_value(Real x);
    static SignedLog from_log(int sign, Real log_abs);

    bool is_zero() const { return sign == 0; }
    /// Native value; underflows to +-0 or overflows to +-inf when out of range.
    Real value() const;
    SignedLog negated() const { return {-sign, log_abs}; }
};

/// log(exp(a) + exp(b)), either argument may be -inf.
Real log_add_exp(Real a, Real b);

/// Sum of signed terms evaluated relative to the largest magnitude.
SignedLog signed_log_sum(std::span<const SignedLog> terms);

/// log(cosh x) without overflow.
Real log_cosh(Real x);

/// log(sinh x) for x >= 0 without overflow; -inf at 0.
Real log_sinh(Real x);

}  // namespace subcone
