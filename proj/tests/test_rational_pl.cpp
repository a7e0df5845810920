#include <doctest.h>

#include <cmath>

#include "helpers.hpp"
#include "subcone/errors.hpp"

using namespace subcone;
using subcone::test::pl;
using subcone::test::q;

TEST_CASE("rational parsing and formatting")
{
    CHECK(Rational::parse("6/4") == q(3, 2));
    CHECK(Rational::parse("-7") == q(-7));
    CHECK(Rational::parse("0/5").is_zero());
    CHECK(q(3, 2).str() == "3/2");
    CHECK(q(-4, 2).str() == "-2");
    CHECK_THROWS_AS(Rational::parse("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse("x"), std::invalid_argument);
    CHECK_THROWS_AS(Rational::parse(""), std::invalid_argument);
    CHECK(Rational::pow2(-3) == q(1, 8));
    CHECK(Rational::pow2(4) == q(16));
}

TEST_CASE("rational to long double keeps a 64-bit mantissa")
{
    CHECK(q(1, 3).to_long_double() == doctest::Approx(1.0L / 3.0L).epsilon(1e-18));
    CHECK(Rational::pow2(-1000).to_long_double() == std::ldexp(1.0L, -1000));
    CHECK(q(-5, 4).to_long_double() == -1.25L);
}

TEST_CASE("pl function validation")
{
    CHECK_THROWS_AS(PLFunction(std::vector<Breakpoint>{}), InvariantError);
    CHECK_THROWS_AS(pl({{q(1), q(0)}, {q(2), q(1)}}), InvariantError);
    CHECK_THROWS_AS(pl({{q(0), q(1)}}), InvariantError);
    CHECK_THROWS_AS(pl({{q(0), q(0)}, {q(1), q(1)}, {q(1), q(2)}}), InvariantError);
}

TEST_CASE("collinear breakpoints merge")
{
    const auto f = pl({{q(0), q(0)}, {q(1), q(1)}, {q(2), q(2)}, {q(3), q(2)}});
    CHECK(f.segment_count() == 2);
    CHECK(f == pl({{q(0), q(0)}, {q(2), q(2)}, {q(3), q(2)}}));
    CHECK(PLFunction::zero(q(3)).segment_count() == 1);
    CHECK(PLFunction().rho().is_zero());
}

TEST_CASE("evaluate")
{
    CHECK(PLFunction::linear(q(2), q(3)).evaluate(q(0)).is_zero());
    CHECK(PLFunction::linear(q(2), q(3)).evaluate(q(1, 2)) == q(1));
    CHECK(pl({{q(0), q(0)}, {q(1), q(1)}, {q(2), q(0)}}).evaluate(q(3, 2)) == q(1, 2));
    CHECK_THROWS_AS(PLFunction::linear(q(1), q(1)).evaluate(q(2)), DomainError);
    CHECK_THROWS_AS(PLFunction::linear(q(1), q(1)).evaluate(q(-1)), DomainError);
}

TEST_CASE("restrict, extend, tail, concatenate")
{
    const auto f = pl({{q(0), q(0)}, {q(1), q(1)}, {q(3), q(-1)}});
    CHECK(f.restricted(q(0)) == PLFunction());
    CHECK(f.restricted(q(2)) == pl({{q(0), q(0)}, {q(1), q(1)}, {q(2), q(0)}}));
    CHECK(f.restricted(q(1)).extended(q(-1), q(3)) == f);
    CHECK(f.extended(q(5), q(3)) == f);
    CHECK_THROWS_AS(f.extended(q(1), q(2)), DomainError);
    CHECK(f.tail_from(q(1)) == PLFunction::linear(q(-1), q(2)));
    CHECK(f.tail_from(q(3)) == PLFunction());
    CHECK(f.restricted(q(1)).concatenated(f.tail_from(q(1))) == f);
    CHECK(f.plus_linear(q(1)) == pl({{q(0), q(0)}, {q(1), q(2)}, {q(3), q(2)}}));
    CHECK(f.first_slope() == q(1));
    CHECK_THROWS_AS(PLFunction().first_slope(), DomainError);
}
