#include <doctest.h>

#include "helpers.hpp"
#include "subcone/core_tree.hpp"
#include "subcone/embedding.hpp"
#include "subcone/errors.hpp"
#include "subcone/sampling.hpp"
#include "subcone/verification.hpp"

using namespace subcone;
using subcone::test::pl;
using subcone::test::q;

TEST_CASE("sample windows and plans")
{
    CHECK(sample_window(1) == q(1, 4));
    CHECK(sample_window(3) == q(1, 16));
    const std::vector<PLFunction> two = {PLFunction::linear(q(1), q(2)),
                                         pl({{q(0), q(0)}, {q(1), q(1)}, {q(2), q(0)}})};
    const auto plan = make_sample_plan(two, 1);
    REQUIRE(plan.pairs.size() == 1);
    CHECK(plan.pairs[0].segregation == q(1));
    CHECK(plan.pairs[0].time == q(9, 8));
    CHECK(plan.times == std::vector<Rational>{q(9, 8)});

    const std::vector<PLFunction> one = {PLFunction::linear(q(1), q(2))};
    CHECK(make_sample_plan(one, 1).pairs.empty());

    const std::vector<PLFunction> ext = {PLFunction::linear(q(1), q(1)), PLFunction::linear(q(1), q(3))};
    const auto e = make_sample_plan(ext, 2).pairs.at(0);
    CHECK(e.segregation < e.time);
    CHECK(e.time < e.segregation + sample_window(2));

    const std::vector<PLFunction> same = {two[0], two[0]};
    CHECK_THROWS_AS(make_sample_plan(same, 1), DomainError);
    CHECK_THROWS_AS(make_sample_plan(two, 0), DomainError);
}

TEST_CASE("discretize")
{
    SamplePlan plan;
    CHECK(discretize(PLFunction::linear(q(1), q(2)), plan) == DiscreteFunction(q(2), {}));
    plan.times = {q(1, 2), q(3, 2), q(3)};
    CHECK(discretize(PLFunction::linear(q(1), q(2)), plan) ==
          DiscreteFunction(q(2), {{q(1, 2), q(1, 2)}, {q(3, 2), q(3, 2)}}));
    plan.times = {q(1, 2), q(3, 2)};
    const auto tent = pl({{q(0), q(0)}, {q(1, 2), q(0)}, {q(2), q(3)}});
    CHECK(discretize(tent, plan) == DiscreteFunction(q(2), {{q(3, 2), q(2)}}));
}

TEST_CASE("discretization law for two functions")
{
    sampling::Rng rng(31);
    for (int trial = 0; trial < 100; ++trial) {
        const auto fs = sampling::distinct_pl_family(rng, 2);
        for (unsigned n = 1; n <= 4; ++n) {
            const auto plan = make_sample_plan(fs, n);
            const auto& p = plan.pairs.at(0);
            const Rational dd = distance_discrete(discretize(fs[0], plan), discretize(fs[1], plan));
            const Rational ds = distance(fs[0], fs[1]);
            if (p.time < min(fs[0].rho(), fs[1].rho())) {
                CHECK(ds - dd == 2 * (p.time - p.segregation));
            } else {
                CHECK(ds - dd <= 2 * (p.time - p.segregation));
            }
        }
    }
}

TEST_CASE("discretization error stays within the stage window")
{
    sampling::Rng rng(32);
    for (int trial = 0; trial < 40; ++trial) {
        const auto fs = sampling::distinct_pl_family(rng, 5);
        for (unsigned n = 1; n <= 6; ++n) {
            const auto plan = make_sample_plan(fs, n);
            std::vector<DiscreteFunction> gs;
            for (const auto& f : fs) {
                gs.push_back(discretize(f, plan));
            }
            for (const auto& p : plan.pairs) {
                const Rational gap = distance(fs[p.first], fs[p.second]) - distance_discrete(gs[p.first], gs[p.second]);
                CHECK(gap.sign() >= 0);
                CHECK(gap < 2 * sample_window(n));
            }
        }
    }
}

TEST_CASE("run_stage")
{
    const auto sched = EpsilonSchedule::dyadic(1, 64);
    const std::vector<PLFunction> one = {PLFunction::linear(q(1), q(2))};
    const auto vac = run_stage(one, 1, sched);
    CHECK(vac.pairs.empty());
    CHECK(vac.within_bound());

    const std::vector<PLFunction> two = {PLFunction::linear(q(1), q(2)),
                                         pl({{q(0), q(0)}, {q(1), q(1)}, {q(2), q(0)}})};
    const auto rec = run_stage(two, 1, sched);
    CHECK(rec.bound == 1);
    CHECK(rec.max_error() < 1);

    const auto recs = run_all_stages(two, 6, sched);
    REQUIRE(recs.size() == 6);
    for (std::size_t i = 1; i < recs.size(); ++i) {
        CHECK(recs[i].eps < recs[i - 1].eps);
        CHECK(recs[i].within_bound());
    }
    CHECK_THROWS_AS(run_stage(two, 8, EpsilonSchedule({0.5L})), VerificationError);
}

TEST_CASE("run_all_stages on brushed triples")
{
    sampling::Rng rng(33);
    const auto sched = EpsilonSchedule::dyadic(1, 80);
    for (int trial = 0; trial < 5; ++trial) {
        const auto fs = brush(sampling::tree_metric(rng, 3));
        for (const auto& rec : run_all_stages(fs, 8, sched)) {
            CHECK(rec.within_bound());
        }
    }
}

TEST_CASE("convergence report")
{
    const DiscreteFunction g1(q(2), {{q(1), q(1)}});
    const DiscreteFunction g2(q(3), {{q(1), q(1)}, {q(3, 2), q(-1)}});
    const auto report = convergence_report(g1, g2, EpsilonSchedule::dyadic(4, 20));
    REQUIRE(report.rows.size() == 17);
    CHECK(report.rows.back().target == doctest::Approx(2));
    CHECK(report.nonincreasing_after(4, 1e-12L));
    const auto order = report.fitted_order(4, 1e-11L);
    REQUIRE(order);
    CHECK(*order > 0.8L);

    const auto flat = convergence_report(g1, g1, EpsilonSchedule::dyadic(4, 8));
    for (const auto& r : flat.rows) {
        CHECK(r.error == 0);
    }
    CHECK_FALSE(flat.fitted_order(0, 1e-11L));
}

TEST_CASE("cauchy chains")
{
    const auto zig = CauchySpec::zigzag();
    CHECK(zig.rho(3) == q(7, 8));
    CHECK(zig.limit_rho() == q(1));
    CHECK(cauchy_distances(zig, 4, 4) == q(0));
    for (unsigned k = 0; k <= 12; ++k) {
        for (unsigned m = k + 1; m <= 12; ++m) {
            CHECK(cauchy_distances(zig, k, m) == Rational::pow2(-static_cast<int>(k)) - Rational::pow2(-static_cast<int>(m)));
        }
    }
    const auto down = PLFunction::linear(q(-1), q(1, 2));
    const CauchySpec a(down, q(1), q(1));
    const CauchySpec b(down, q(1), q(2));
    CHECK(limit_distance(zig, zig) == q(0));
    CHECK(limit_distance(zig, a) == q(5, 2));
    CHECK(limit_distance(a, b) == q(2));
    CHECK_THROWS_AS(CauchySpec(down, q(0), q(1)), InvariantError);
    CHECK_THROWS_AS(CauchySpec(down, q(1), q(0)), InvariantError);
}

TEST_CASE("completion witnesses")
{
    const auto sched = EpsilonSchedule::dyadic(1, 64);
    const std::vector<CauchySpec> same = {CauchySpec::zigzag(), CauchySpec::zigzag()};
    const auto rec = completion_witness(same, 1, sched);
    for (const auto& p : rec.pairs) {
        CHECK(p.target == q(0));
        CHECK(p.err_vs_target == 0);
    }

    const auto down = PLFunction::linear(q(-1), q(1, 2));
    const std::vector<CauchySpec> chains = {CauchySpec::zigzag(), CauchySpec(down, q(1), q(1)),
                                            CauchySpec(down, q(1), q(2))};
    const auto recs = run_completion(chains, 6, sched);
    REQUIRE(recs.size() == 6);
    CHECK(recs[0].bound == 1);
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(recs[i].within_bound());
        if (i > 0) {
            CHECK(recs[i].eps < recs[i - 1].eps / 2);
        }
    }
}
