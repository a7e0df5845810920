#include "subcone/core_tree.hpp"

#include <algorithm>
#include <vector>

#include "subcone/errors.hpp"

namespace subcone {

std::string_view to_string(Relation r)
{
    switch (r) {
    case Relation::identical:
        return "identical";
    case Relation::first_extends_second:
        return "first-extends-second";
    case Relation::second_extends_first:
        return "second-extends-first";
    case Relation::branch:
        return "branch";
    }
    return "?";
}

namespace {

SegregationResult classify(Rational s, const Rational& rho1, const Rational& rho2)
{
    const Rational m = min(rho1, rho2);
    if (s < m) {
        return {std::move(s), Relation::branch};
    }
    if (rho1 == rho2) {
        return {std::move(s), Relation::identical};
    }
    return {std::move(s), rho1 < rho2 ? Relation::second_extends_first : Relation::first_extends_second};
}

}  // namespace

SegregationResult segregation_moment(const PLFunction& f1, const PLFunction& f2)
{
    const Rational m = min(f1.rho(), f2.rho());

    std::vector<Rational> nodes;
    nodes.reserve(f1.breakpoints().size() + f2.breakpoints().size() + 1);
    for (const auto* f : {&f1, &f2}) {
        for (const auto& p : f->breakpoints()) {
            if (p.t.sign() > 0 && p.t < m) {
                nodes.push_back(p.t);
            }
        }
    }
    nodes.push_back(m);
    std::sort(nodes.begin(), nodes.end());
    nodes.erase(std::unique(nodes.begin(), nodes.end()), nodes.end());

    Rational agreed(0);
    for (const auto& t : nodes) {
        if (t.is_zero()) {
            continue;
        }
        if (f1.evaluate(t) != f2.evaluate(t)) {
            return classify(agreed, f1.rho(), f2.rho());
        }
        agreed = t;
    }
    return classify(m, f1.rho(), f2.rho());
}

Rational distance(const PLFunction& f1, const PLFunction& f2)
{
    const Rational s = segregation_moment(f1, f2).s;
    return (f1.rho() - s) + (f2.rho() - s);
}

SegregationResult segregation_moment(const DiscreteFunction& g1, const DiscreteFunction& g2)
{
    const Rational m = min(g1.rho(), g2.rho());
    const auto& a = g1.support();
    const auto& b = g2.support();
    std::size_t i = 0;
    std::size_t j = 0;
    // Supports are sorted; the first time present in one support but not the
    // other, or present in both with different values, is where they part.
    while (i < a.size() || j < b.size()) {
        const Rational* t = nullptr;
        if (j == b.size() || (i < a.size() && a[i].t < b[j].t)) {
            t = &a[i].t;
        } else if (i == a.size() || b[j].t < a[i].t) {
            t = &b[j].t;
        } else if (a[i].a != b[j].a) {
            t = &a[i].t;
        } else {
            ++i;
            ++j;
            continue;
        }
        return classify(min(*t, m), g1.rho(), g2.rho());
    }
    return classify(m, g1.rho(), g2.rho());
}

Rational distance_discrete(const DiscreteFunction& g1, const DiscreteFunction& g2)
{
    const Rational s = segregation_moment(g1, g2).s;
    return (g1.rho() - s) + (g2.rho() - s);
}

PLFunction geodesic_point(const PLFunction& f1, const PLFunction& f2, const Rational& x)
{
    const Rational s = segregation_moment(f1, f2).s;
    const Rational d = (f1.rho() - s) + (f2.rho() - s);
    if (x.sign() < 0 || d < x) {
        throw DomainError("geodesic parameter " + x.str() + " outside [0, " + d.str() + "]");
    }
    if (!(f1.rho() - s < x)) {
        return f1.restricted(f1.rho() - x);
    }
    return f2.restricted(x + s + s - f1.rho());
}

Rational four_point_defect(const PLFunction& f1, const PLFunction& f2, const PLFunction& f3,
                           const PLFunction& f4)
{
    return distance(f1, f2) + distance(f3, f4) -
           max(distance(f1, f3) + distance(f2, f4), distance(f1, f4) + distance(f2, f3));
}

std::array<Rational, 3> four_point_defects(const PLFunction& f1, const PLFunction& f2, const PLFunction& f3,
                                           const PLFunction& f4)
{
    const Rational p12 = distance(f1, f2) + distance(f3, f4);
    const Rational p13 = distance(f1, f3) + distance(f2, f4);
    const Rational p14 = distance(f1, f4) + distance(f2, f3);
    return {p12 - max(p13, p14), p13 - max(p12, p14), p14 - max(p12, p13)};
}

}  // namespace subcone
