#pragma once

#include <vector>

#include "subcone/rational.hpp"

namespace subcone {

struct SupportPoint {
    Rational t;
    Rational a;

    friend bool operator==(const SupportPoint&, const SupportPoint&) = default;
};

/// Element of the discrete space D: a function on [0, rho) that vanishes
/// everywhere except at finitely many interior times.
class DiscreteFunction {
public:
    DiscreteFunction() = default;

    /// Support must be strictly increasing in t with 0 < t < rho and a != 0.
    /// Throws InvariantError naming the offending support index.
    DiscreteFunction(Rational rho, std::vector<SupportPoint> support);

    const Rational& rho() const { return rho_; }
    const std::vector<SupportPoint>& support() const { return support_; }

    /// Value at t in [0, rho); zero off the support.
    Rational value_at(const Rational& t) const;

    friend bool operator==(const DiscreteFunction&, const DiscreteFunction&) = default;

private:
    Rational rho_;
    std::vector<SupportPoint> support_;
};

}  // namespace subcone
