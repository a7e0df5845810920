#pragma once

#include <cstddef>
#include <vector>

#include "subcone/rational.hpp"

namespace subcone {

struct Breakpoint {
    Rational t;
    Rational v;

    friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

/// Continuous piecewise-linear function f : [0, rho] -> Q with f(0) = 0.
///
/// Stored as its breakpoint sequence. The constructor validates the
/// invariants (first point (0,0), strictly increasing times) and merges
/// collinear interior breakpoints, so two PLFunctions compare equal exactly
/// when they are the same function on the same domain.
class PLFunction {
public:
    /// The zero element: the single point (0,0), rho = 0.
    PLFunction();

    /// Throws InvariantError naming the offending breakpoint index.
    explicit PLFunction(std::vector<Breakpoint> breakpoints);

    static PLFunction zero(const Rational& length = Rational(0));
    static PLFunction linear(const Rational& slope, const Rational& length);

    const std::vector<Breakpoint>& breakpoints() const { return points_; }
    const Rational& rho() const { return points_.back().t; }
    std::size_t segment_count() const { return points_.size() - 1; }

    /// Exact linear interpolation. Throws DomainError when t is outside [0, rho].
    Rational evaluate(const Rational& t) const;

    /// Slope of the first segment; rho must be positive.
    Rational first_slope() const;

    /// Restriction to [0, length], 0 <= length <= rho.
    PLFunction restricted(const Rational& length) const;

    /// Continues the function linearly with the given slope up to new_length >= rho.
    PLFunction extended(const Rational& slope, const Rational& new_length) const;

    /// f(t) + slope * t on the same domain.
    PLFunction plus_linear(const Rational& slope) const;

    /// t -> f(start + t) - f(start) on [0, rho - start].
    PLFunction tail_from(const Rational& start) const;

    /// Appends g after the end: the result is f on [0, rho] and
    /// f(rho) + g(t - rho) on [rho, rho + rho_g].
    PLFunction concatenated(const PLFunction& g) const;

    friend bool operator==(const PLFunction&, const PLFunction&) = default;

private:
    std::size_t segment_index(const Rational& t) const;

    std::vector<Breakpoint> points_;
};

}  // namespace subcone
