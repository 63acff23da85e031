#include "helpers.hpp"

#include "ofl/error.hpp"
#include "ofl/oracle.hpp"
#include "ofl/sampling.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace ofl;
using namespace ofl::test;

namespace {

// Floating slack when comparing a floating grid value against an exact one.
constexpr double kGridSlack = 1e-9;

}  // namespace

TEST_CASE("path social welfare oracle examples") {
  const OracleResult tight = oracle_sw_path(tightness_instance());
  CHECK(tight.exact());
  CHECK(*tight.value.exact == 2);
  CHECK(tight.solution == on_line({"1", "0"}));
  CHECK(*tight.zero_one_value->exact == 2);

  const Instance calm = path(2, {agent("0.3", {}), agent("0.9", {}), agent("0.5", {})});
  CHECK(*oracle_sw_path(calm).value.exact == R("0.7") + R("0.9") + R("0.5"));

  const Instance centre = path(1, {agent("0.5", {1})});
  CHECK(*oracle_sw_path(centre).value.exact == R("1/2"));
}

TEST_CASE("exact oracles dominate their grid cross-checks") {
  std::mt19937_64 rng(131);
  for (SpaceKind space : {SpaceKind::Path, SpaceKind::Cycle}) {
    InstanceShape shape;
    shape.space = space;
    shape.max_agents = 4;
    shape.max_facilities = 2;
    for (int t = 0; t < 60; ++t) {
      const Instance inst = sample_instance(rng, shape);
      const OracleResult sw = oracle_sw(inst);
      REQUIRE(sw.exact());
      REQUIRE(sw.grid_check_value.has_value());
      CHECK(*sw.grid_check_value <= sw.value.exact->to_double() + kGridSlack);
      CHECK(*social_welfare(inst, sw.solution).exact == *sw.value.exact);
      const OracleResult mw = oracle_mw(inst);
      CHECK(min_welfare(inst, mw.solution) == Length::exact(*mw.value.exact));
      if (mw.grid_check_value) CHECK(*mw.grid_check_value <= mw.value.exact->to_double() + kGridSlack);
    }
  }
}

TEST_CASE("the path optimum is attained in {0,1}^k for k <= 3") {
  std::mt19937_64 rng(137);
  InstanceShape shape;
  for (int t = 0; t < 60; ++t) {
    const Instance inst = sample_instance(rng, shape);
    const OracleResult r = oracle_sw_path(inst);
    CHECK(*r.zero_one_value->exact == *r.value.exact);
  }
}

TEST_CASE("beyond the exact range the oracle reports a grid bound") {
  OracleOptions opts;
  opts.exact_k_max = 1;
  const OracleResult r = oracle_sw_path(tightness_instance(), opts);
  CHECK_FALSE(r.exact());
  CHECK(r.value.value <= 2.0 + kGridSlack);
  CHECK(r.upper >= 2.0 - kGridSlack);
}

TEST_CASE("single-facility min welfare oracle examples") {
  const OracleResult p = oracle_mw_single(path(1, {agent("0.2", {1}), agent("0.8", {1})}));
  CHECK(*p.value.exact == R("0.3"));
  CHECK(p.solution == on_line({"0.5"}));
  const OracleResult c = oracle_mw_single(cycle(1, {agent("0.25", {1}), agent("0.75", {1})}));
  CHECK(*c.value.exact == R("0.25"));
  CHECK_THROWS_AS(oracle_mw_single(tightness_instance()), PreconditionError);
}

TEST_CASE("square min welfare grid oracle") {
  const Instance centre = square(1, {agent2("0.5", "0.5", {1})});
  const OracleResult r = oracle_mw_square_grid(centre, Rational(1, 100));
  CHECK(r.value.value >= std::sqrt(0.5) - std::sqrt(2.0) / 100);
  CHECK(r.upper >= std::sqrt(0.5));
  const Instance corner = square(1, {agent2("0", "0", {1})});
  const OracleResult c = oracle_mw_square_grid(corner, Rational(1, 400));
  CHECK(c.value.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  const Instance calm = square(1, {agent2("0.25", "0.5", {})});
  CHECK(oracle_mw_square_grid(calm, Rational(1, 50)).value.value ==
        doctest::Approx(std::sqrt(0.8125)).epsilon(1e-12));
}

TEST_CASE("multi-facility min welfare is the min over projections") {
  const Instance two = path(2, {agent("0.2", {1}), agent("0.8", {2}), agent("0.5", {})});
  const OracleResult r = oracle_mw_multi(two);
  // F1 goes to 1, F2 to 0: welfare 0.8, 0.8 and the indifferent 0.5.
  CHECK(*r.value.exact == R("0.5"));
  CHECK(*oracle_mw(path(2, {agent("0.2", {1}), agent("0.8", {2})})).value.exact == R("0.8"));
}

TEST_CASE("square social welfare bounds") {
  const Instance one = square(1, {agent2("0", "0", {1})});
  const OracleResult r = oracle_sw_square(one);
  CHECK(r.value.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(r.upper >= r.value.value);
}

TEST_CASE("one-maxian endpoint property") {
  const MaxianResult a = one_maxian({R("0"), R("1")}, 0, 1);
  CHECK(a.value == 1);
  CHECK(a.endpoint == 0);
  const MaxianResult b = one_maxian({R("0.2"), R("0.2"), R("0.2")}, R("0.2"), R("0.7"));
  CHECK(b.endpoint == R("0.7"));
  CHECK(b.value == R("1.5"));
  CHECK_THROWS_AS(one_maxian({}, 0, 1), InvalidInput);
  CHECK_THROWS_AS(one_maxian({R("2")}, 0, 1), InvalidInput);

  std::mt19937_64 rng(139);
  for (int t = 0; t < 300; ++t) {
    std::vector<Rational> pts;
    const long n = uniform_between(rng, 1, 8);
    for (long i = 0; i < n; ++i) pts.emplace_back(uniform_between(rng, 0, 64), 64);
    const MaxianResult m = one_maxian(pts, 0, 1);
    for (long s = 0; s <= 256; ++s) CHECK(total_distance(pts, Rational(s, 256)) <= m.value);
  }
}
