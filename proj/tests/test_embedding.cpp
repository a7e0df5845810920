#include <doctest.h>

#include "helpers.hpp"
#include "subcone/core_tree.hpp"
#include "subcone/embedding.hpp"
#include "subcone/errors.hpp"
#include "subcone/sampling.hpp"

using namespace subcone;
using subcone::test::pl;
using subcone::test::q;

namespace {

TreeMetric matrix(std::vector<std::vector<std::int64_t>> rows)
{
    std::vector<std::vector<Rational>> out;
    for (const auto& r : rows) {
        out.emplace_back(r.begin(), r.end());
    }
    return TreeMetric(std::move(out));
}

}  // namespace

TEST_CASE("tree metric validation")
{
    CHECK_FALSE(check_tree_metric(matrix({{0, 5}, {5, 0}})));
    CHECK_FALSE(check_tree_metric(matrix({{0, 2, 2, 2}, {2, 0, 2, 2}, {2, 2, 0, 2}, {2, 2, 2, 0}})));
    const auto bad = check_tree_metric(matrix({{0, 1, 2, 1}, {1, 0, 1, 2}, {2, 1, 0, 1}, {1, 2, 1, 0}}));
    REQUIRE(bad);
    CHECK(bad->kind == TreeMetricViolation::Kind::four_point);
    CHECK(bad->indices == std::array<std::size_t, 4>{0, 1, 2, 3});
    CHECK(check_tree_metric(matrix({{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}))->kind == TreeMetricViolation::Kind::triangle);
    CHECK_THROWS_AS(matrix({{0, 1}, {2, 0}}), InvariantError);
    CHECK_THROWS_AS(matrix({{0, 0}, {0, 0}}), InvariantError);
    CHECK_THROWS_AS(matrix({{1}}), InvariantError);
}

TEST_CASE("branch abscissa")
{
    CHECK(branch_abscissa(q(2), q(3), q(3)) == q(1));
    CHECK(branch_abscissa(q(1), q(1), q(2)) == q(0));
    CHECK(branch_abscissa(q(7, 3), q(7, 3), q(0)) == q(7, 3));
    CHECK_THROWS_AS(branch_abscissa(q(1), q(1), q(5)), DomainError);
}

TEST_CASE("slope schedule")
{
    CHECK(SlopeSchedule().slope(3) == q(3));
    CHECK_THROWS_AS(SlopeSchedule({q(1), q(1)}), InvariantError);
    CHECK(SlopeSchedule({q(1, 2), q(5)}).slope(2) == q(5));
}

TEST_CASE("brushing examples")
{
    const auto one = brush(matrix({{0}}));
    REQUIRE(one.size() == 1);
    CHECK(one[0] == PLFunction());

    const auto fs = brush(matrix({{0, 2, 3}, {2, 0, 3}, {3, 3, 0}}), SlopeSchedule({q(1), q(2)}));
    CHECK(fs[0] == PLFunction());
    CHECK(fs[1] == PLFunction::linear(q(1), q(2)));
    CHECK(fs[2] == pl({{q(0), q(0)}, {q(1), q(1)}, {q(3), q(5)}}));
    CHECK(distance(fs[1], fs[2]) == q(3));

    CHECK_THROWS_AS(brush(matrix({{0, 1, 2, 1}, {1, 0, 1, 2}, {2, 1, 0, 1}, {1, 2, 1, 0}})), InvariantError);
}

TEST_CASE("brushing reproduces random tree metrics")
{
    sampling::Rng rng(5);
    for (int trial = 0; trial < 10; ++trial) {
        const TreeMetric a = sampling::tree_metric(rng, 2 + sampling::uniform_index(rng, 30));
        CHECK(verify_embedding(a, brush(a)) == q(0));
    }
}

TEST_CASE("verify_embedding reports a domain perturbation")
{
    const TreeMetric a = matrix({{0, 2, 3}, {2, 0, 3}, {3, 3, 0}});
    auto fs = brush(a);
    fs[2] = fs[2].extended(q(9), fs[2].rho() + q(1, 7));
    CHECK(verify_embedding(a, fs) == q(1, 7));
}

TEST_CASE("discrete inclusion")
{
    CHECK(embed_discrete(DiscreteFunction(q(1), {})) == PLFunction::zero(q(1)));
    CHECK(embed_discrete(DiscreteFunction(q(2), {{q(1), q(1)}})) == pl({{q(0), q(0)}, {q(1), q(0)}, {q(2), q(1)}}));
    CHECK(embed_discrete(DiscreteFunction(q(3), {{q(1), q(2)}, {q(2), q(-1)}})) ==
          pl({{q(0), q(0)}, {q(1), q(0)}, {q(2), q(2)}, {q(3), q(3)}}));
    sampling::Rng rng(8);
    for (int trial = 0; trial < 100; ++trial) {
        const auto [g1, g2] = sampling::discrete_pair(rng);
        CHECK(distance(embed_discrete(g1), embed_discrete(g2)) == distance_discrete(g1, g2));
    }
}
