#include <doctest.h>

#include "helpers.hpp"
#include "subcone/core_tree.hpp"
#include "subcone/discrete_function.hpp"
#include "subcone/errors.hpp"
#include "subcone/sampling.hpp"

using namespace subcone;
using subcone::test::pl;
using subcone::test::q;

namespace {

// Segregation recovered by sampling both functions on a fine grid.
bool dense_oracle_agrees(const PLFunction& f1, const PLFunction& f2, const Rational& s)
{
    const Rational step = q(1, 240);
    for (Rational t = 0; t <= s; t += step) {
        if (f1.evaluate(t) != f2.evaluate(t)) {
            return false;
        }
    }
    if (f1.evaluate(s) != f2.evaluate(s)) {
        return false;
    }
    const Rational common = min(f1.rho(), f2.rho());
    if (s == common) {
        return true;
    }
    const Rational probe = s + Rational::pow2(-20);
    return probe <= common && f1.evaluate(probe) != f2.evaluate(probe);
}

}  // namespace

TEST_CASE("segregation moment examples")
{
    const auto r = segregation_moment(PLFunction::linear(q(1), q(2)), PLFunction::linear(q(2), q(3)));
    CHECK(r.s == q(0));
    CHECK(r.relation == Relation::branch);

    const auto f = pl({{q(0), q(0)}, {q(1), q(1)}, {q(2), q(2)}});
    const auto g = pl({{q(0), q(0)}, {q(1), q(1)}, {q(2), q(0)}});
    CHECK(segregation_moment(f, f).s == q(2));
    CHECK(segregation_moment(f, f).relation == Relation::identical);
    CHECK(segregation_moment(f, g).s == q(1));
    CHECK(segregation_moment(f, g).relation == Relation::branch);
    CHECK(dense_oracle_agrees(f, g, q(1)));

    const auto short_f = PLFunction::linear(q(1), q(1));
    const auto long_f = PLFunction::linear(q(1), q(3));
    CHECK(segregation_moment(short_f, long_f).relation == Relation::second_extends_first);
    CHECK(segregation_moment(long_f, short_f).relation == Relation::first_extends_second);
}

TEST_CASE("distance examples")
{
    CHECK(distance(PLFunction::linear(q(1), q(2)), PLFunction::linear(q(2), q(3))) == q(5));
    CHECK(distance(PLFunction::linear(q(1), q(1)), PLFunction::linear(q(1), q(3))) == q(2));
    CHECK(distance(PLFunction(), PLFunction()) == q(0));
}

TEST_CASE("segregation matches the dense-sampling oracle on random families")
{
    sampling::Rng rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const auto fs = sampling::pl_family(rng, 4);
        for (std::size_t i = 0; i < fs.size(); ++i) {
            for (std::size_t j = 0; j < fs.size(); ++j) {
                CHECK(dense_oracle_agrees(fs[i], fs[j], segregation_moment(fs[i], fs[j]).s));
            }
        }
    }
}

TEST_CASE("discrete distance examples")
{
    const DiscreteFunction g1(q(2), {{q(1), q(1)}});
    const DiscreteFunction g2(q(2), {{q(1), q(1)}, {q(3, 2), q(1)}});
    CHECK(distance_discrete(g1, g1) == q(0));
    CHECK(segregation_moment(g1, g2).s == q(3, 2));
    CHECK(distance_discrete(g1, g2) == q(1));
    CHECK(distance_discrete(DiscreteFunction(q(1), {}), DiscreteFunction(q(3), {})) == q(2));
    CHECK_THROWS_AS(DiscreteFunction(q(2), {{q(2), q(1)}}), InvariantError);
    CHECK_THROWS_AS(DiscreteFunction(q(2), {{q(1), q(0)}}), InvariantError);
    CHECK_THROWS_AS(DiscreteFunction(q(2), {{q(1), q(1)}, {q(1, 2), q(1)}}), InvariantError);
}

TEST_CASE("geodesic points")
{
    const auto f1 = PLFunction::linear(q(1), q(2));
    const auto f2 = pl({{q(0), q(0)}, {q(1), q(1)}, {q(2), q(0)}});
    CHECK(geodesic_point(f1, f2, q(0)) == f1);
    CHECK(geodesic_point(f1, f2, distance(f1, f2)) == f2);
    const auto mid = geodesic_point(f1, f2, q(1));
    CHECK(mid == f1.restricted(q(1)));
    CHECK(distance(mid, f1) == q(1));
    CHECK(distance(mid, f2) == q(1));
    CHECK_THROWS_AS(geodesic_point(f1, f2, q(3)), DomainError);
    CHECK_THROWS_AS(geodesic_point(f1, f2, q(-1)), DomainError);
}

TEST_CASE("four-point defects")
{
    const auto f = PLFunction::linear(q(1), q(2));
    const auto g = PLFunction::linear(q(-1), q(3));
    CHECK(four_point_defect(f, f, f, f) == q(0));
    const auto d = four_point_defects(f, f, g, g);
    CHECK(d[0] == -2 * distance(f, g));
}
