#include "subcone/pl_function.hpp"

#include <algorithm>
#include <string>

#include "subcone/errors.hpp"

namespace subcone {

namespace {

// Drops interior breakpoints whose adjacent segments have equal slope.
std::vector<Breakpoint> merge_collinear(std::vector<Breakpoint> in)
{
    std::vector<Breakpoint> out;
    out.reserve(in.size());
    for (auto& p : in) {
        while (out.size() >= 2) {
            const Breakpoint& a = out[out.size() - 2];
            const Breakpoint& b = out.back();
            if ((b.v - a.v) * (p.t - b.t) != (p.v - b.v) * (b.t - a.t)) {
                break;
            }
            out.pop_back();
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

PLFunction::PLFunction() : points_{Breakpoint{Rational(0), Rational(0)}} {}

PLFunction::PLFunction(std::vector<Breakpoint> breakpoints)
{
    if (breakpoints.empty()) {
        throw InvariantError("PL function needs at least the breakpoint (0,0)");
    }
    if (!breakpoints.front().t.is_zero() || !breakpoints.front().v.is_zero()) {
        throw InvariantError("breakpoint 0 must be (0,0), got (" + breakpoints.front().t.str() + "," +
                             breakpoints.front().v.str() + ")");
    }
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
        if (!(breakpoints[i - 1].t < breakpoints[i].t)) {
            throw InvariantError("breakpoint " + std::to_string(i) + ": time " + breakpoints[i].t.str() +
                                 " does not strictly exceed " + breakpoints[i - 1].t.str());
        }
    }
    points_ = merge_collinear(std::move(breakpoints));
}

PLFunction PLFunction::zero(const Rational& length) { return linear(Rational(0), length); }

PLFunction PLFunction::linear(const Rational& slope, const Rational& length)
{
    if (length.sign() < 0) {
        throw DomainError("negative domain length " + length.str());
    }
    if (length.is_zero()) {
        return PLFunction();
    }
    return PLFunction({{Rational(0), Rational(0)}, {length, slope * length}});
}

std::size_t PLFunction::segment_index(const Rational& t) const
{
    // first breakpoint with time >= t, then step back to the segment start
    auto it = std::lower_bound(points_.begin(), points_.end(), t,
                               [](const Breakpoint& p, const Rational& x) { return p.t < x; });
    const auto idx = static_cast<std::size_t>(it - points_.begin());
    return idx == 0 ? 0 : idx - 1;
}

Rational PLFunction::evaluate(const Rational& t) const
{
    if (t.sign() < 0 || rho() < t) {
        throw DomainError("evaluation time " + t.str() + " outside [0, " + rho().str() + "]");
    }
    if (points_.size() == 1) {
        return Rational(0);
    }
    const std::size_t i = segment_index(t);
    const Breakpoint& a = points_[i];
    const Breakpoint& b = points_[i + 1];
    if (t == b.t) {
        return b.v;
    }
    return a.v + (b.v - a.v) * (t - a.t) / (b.t - a.t);
}

Rational PLFunction::first_slope() const
{
    if (points_.size() < 2) {
        throw DomainError("first slope of a function with empty domain");
    }
    return (points_[1].v - points_[0].v) / (points_[1].t - points_[0].t);
}

PLFunction PLFunction::restricted(const Rational& length) const
{
    if (length.sign() < 0 || rho() < length) {
        throw DomainError("restriction length " + length.str() + " outside [0, " + rho().str() + "]");
    }
    if (length.is_zero()) {
        return PLFunction();
    }
    std::vector<Breakpoint> out;
    for (const auto& p : points_) {
        if (!(p.t < length)) {
            break;
        }
        out.push_back(p);
    }
    out.push_back({length, evaluate(length)});
    return PLFunction(std::move(out));
}

PLFunction PLFunction::extended(const Rational& slope, const Rational& new_length) const
{
    if (new_length < rho()) {
        throw DomainError("extension length " + new_length.str() + " shorter than " + rho().str());
    }
    if (new_length == rho()) {
        return *this;
    }
    std::vector<Breakpoint> out = points_;
    out.push_back({new_length, points_.back().v + slope * (new_length - rho())});
    return PLFunction(std::move(out));
}

PLFunction PLFunction::plus_linear(const Rational& slope) const
{
    std::vector<Breakpoint> out = points_;
    for (auto& p : out) {
        p.v += slope * p.t;
    }
    return PLFunction(std::move(out));
}

PLFunction PLFunction::tail_from(const Rational& start) const
{
    const Rational base = evaluate(start);
    std::vector<Breakpoint> out{{Rational(0), Rational(0)}};
    for (const auto& p : points_) {
        if (start < p.t) {
            out.push_back({p.t - start, p.v - base});
        }
    }
    return PLFunction(std::move(out));
}

PLFunction PLFunction::concatenated(const PLFunction& g) const
{
    std::vector<Breakpoint> out = points_;
    const Rational t0 = rho();
    const Rational v0 = points_.back().v;
    for (std::size_t i = 1; i < g.points_.size(); ++i) {
        out.push_back({t0 + g.points_[i].t, v0 + g.points_[i].v});
    }
    return PLFunction(std::move(out));
}

}  // namespace subcone
