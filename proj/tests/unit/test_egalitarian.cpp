#include "helpers.hpp"

#include "ofl/egalitarian.hpp"
#include "ofl/error.hpp"
#include "ofl/oracle.hpp"
#include "ofl/sampling.hpp"

#include <doctest.h>

#include <random>

using namespace ofl;
using namespace ofl::test;

namespace {

Solution at(std::string_view x, std::string_view y) { return Solution{{Point(R(x), R(y))}}; }

std::size_t count_kind(const std::vector<SquareCandidate>& cs, CandidateKind kind) {
  std::size_t n = 0;
  for (const auto& c : cs) n += c.kind == kind;
  return n;
}

}  // namespace

TEST_CASE("single projection") {
  const Instance p = single_projection(tightness_instance(), 1);
  CHECK(p.k() == 1);
  CHECK(p.agent(0).dislikes.empty());
  CHECK(p.agent(1).dislikes == dislike({1}));
  const Instance none = single_projection(path(2, {agent("0.1", {1}), agent("0.4", {1})}), 1);
  CHECK(indiff(none).size() == 2);
  const Instance all = single_projection(path(2, {agent("0.1", {2}), agent("0.4", {1, 2})}), 1);
  CHECK(haters(all, 0).size() == 2);
}

TEST_CASE("parallel combinator") {
  const Instance one = path(1, {agent("0.3", {1}), agent("0.6", {1})});
  CHECK(parallel(path_gap_mechanism, one) == path_gap_mechanism(one));
  const Instance same = path(2, {agent("0.3", {1, 2}), agent("0.6", {1, 2})});
  const Solution s = parallel(path_gap_mechanism, same);
  CHECK(s.placements[0] == s.placements[1]);
  CHECK(path_gap_parallel(path(2, {agent("0.2", {1}), agent("0.8", {2})})) == on_line({"1", "0"}));
}

TEST_CASE("path gap analysis") {
  const GapAnalysis g = analyze_path_gaps({R("0.8"), R("0.2")});
  CHECK(g.d1 == R("0.2"));
  CHECK(g.d2 == R("0.3"));
  CHECK(g.d3 == R("0.2"));
  CHECK(g.m == R("0.5"));
  CHECK(g.s == 0);
  const GapAnalysis tie = analyze_path_gaps({R("0.1"), R("0.3"), R("0.5")});
  CHECK(tie.s == 0);
  CHECK(tie.m == R("0.2"));
  CHECK_THROWS_AS(analyze_path_gaps({R("0.5")}), PreconditionError);
}

TEST_CASE("path gap mechanism examples") {
  CHECK(path_gap_mechanism(path(1, {agent("0.4", {})})) == on_line({"0"}));
  CHECK(path_gap_mechanism(path(1, {agent("0.3", {1})})) == on_line({"1"}));
  const Instance two = path(1, {agent("0.2", {1}), agent("0.8", {1})});
  CHECK(path_gap_mechanism(two) == on_line({"0.5"}));
  CHECK(min_welfare(two, on_line({"0.5"})) == Length::exact(R("0.3")));
  CHECK(path_gap_mechanism(path(1, {agent("0.6", {1}), agent("0.7", {1})})) == on_line({"0"}));
  CHECK_THROWS_AS(path_gap_mechanism(tightness_instance()), PreconditionError);
}

TEST_CASE("cycle gap mechanism examples") {
  CHECK(cycle_gap_mechanism(cycle(1, {agent("0.25", {1})})) == on_line({"0.75"}));
  CHECK(cycle_gap_mechanism(cycle(1, {agent("0.25", {1}), agent("0.75", {1})})) == on_line({"0.5"}));
  CHECK(cycle_gap_mechanism(cycle(1, {agent("0.25", {})})) == on_line({"0"}));
  // The widest gap wraps past 0: from 0.6 to 0.1.
  CHECK(cycle_gap_mechanism(cycle(1, {agent("0.1", {1}), agent("0.4", {1}), agent("0.6", {1})})) ==
        on_line({"0.85"}));
  CHECK(cycle_gap_mechanism(cycle(1, {agent("0.7", {1}), agent("0.9", {1})})) == on_line({"0.3"}));
}

TEST_CASE("square candidates") {
  const auto one = square_candidates({Point(R("0.3"), R("0.6"))});
  CHECK(one.size() == 4);
  CHECK(count_kind(one, CandidateKind::Corner) == 4);

  const auto two = square_candidates({Point(R("0.2"), R("0.3")), Point(R("0.7"), R("0.6"))});
  CHECK(count_kind(two, CandidateKind::Corner) == 4);
  CHECK(count_kind(two, CandidateKind::BisectorBoundary) <= 2);
  CHECK(count_kind(two, CandidateKind::BisectorBoundary) >= 1);
  CHECK(count_kind(two, CandidateKind::Circumcenter) == 0);

  const auto three =
      square_candidates({Point(R("0.2"), R("0.3")), Point(R("0.7"), R("0.6")), Point(R("0.4"), R("0.9"))});
  CHECK(count_kind(three, CandidateKind::Circumcenter) <= 1);
  for (const auto& c : three) {
    CHECK(c.point.x() >= 0);
    CHECK(c.point.x() <= 1);
    CHECK(c.point.y() >= 0);
    CHECK(c.point.y() <= 1);
  }
  CHECK_THROWS_AS(square_candidates({}), PreconditionError);
}

TEST_CASE("general position") {
  CHECK(in_general_position({Point(R("0.1"), R("0.2")), Point(R("0.5"), R("0.9")), Point(R("0.8"), R("0.1"))}));
  CHECK_FALSE(in_general_position({Point(R("0"), R("0")), Point(R("0.5"), R("0.5")), Point(R("1"), R("1"))}));
  CHECK_FALSE(in_general_position({Point(R("0"), R("0")), Point(R("0"), R("0"))}));
  CHECK_FALSE(in_general_position(
      {Point(R("0"), R("0")), Point(R("1"), R("0")), Point(R("0"), R("1")), Point(R("1"), R("1"))}));
}

TEST_CASE("square empty circle examples") {
  CHECK(square_empty_circle_mechanism(square(1, {agent2("0.5", "0.5", {1})})) == at("0", "0"));
  CHECK(square_empty_circle_mechanism(square(1, {agent2("0.25", "0.25", {1})})) == at("1", "1"));
  CHECK(square_empty_circle_mechanism(square(1, {agent2("0.25", "0.25", {})})) == at("0", "0"));
}

TEST_CASE("gap mechanisms reach the exact optimum") {
  std::mt19937_64 rng(83);
  for (SpaceKind space : {SpaceKind::Path, SpaceKind::Cycle}) {
    InstanceShape shape;
    shape.space = space;
    shape.max_agents = 10;
    shape.max_facilities = 1;
    const Mechanism mech = space == SpaceKind::Path ? Mechanism(path_gap_mechanism) : Mechanism(cycle_gap_mechanism);
    for (int t = 0; t < 300; ++t) {
      const Instance inst = sample_instance(rng, shape);
      CHECK(min_welfare(inst, mech(inst)) == Length::exact(*oracle_mw_single(inst).value.exact));
    }
  }
}

TEST_CASE("single-facility mechanisms avoid hater locations when they can") {
  std::mt19937_64 rng(89);
  for (SpaceKind space : {SpaceKind::Path, SpaceKind::Cycle, SpaceKind::Square}) {
    InstanceShape shape;
    shape.space = space;
    shape.max_facilities = 1;
    shape.general_position = space == SpaceKind::Square;
    const Mechanism mech = space == SpaceKind::Path    ? Mechanism(path_gap_mechanism)
                           : space == SpaceKind::Cycle ? Mechanism(cycle_gap_mechanism)
                                                       : Mechanism(square_empty_circle_mechanism);
    for (int t = 0; t < 200; ++t) {
      const Instance inst = sample_instance(rng, shape);
      const Point y = mech(inst).placements[0];
      for (std::size_t i : haters(inst, 0)) CHECK(inst.agent(i).location != y);
    }
  }
}

TEST_CASE("report-independent variants") {
  for (std::size_t n = 1; n <= 12; ++n) {
    std::vector<Agent> line, ring;
    for (std::size_t i = 0; i < n; ++i) {
      line.push_back({Point(Rational(static_cast<long>(i), static_cast<long>(n - 1 == 0 ? 1 : n - 1))), {}});
      ring.push_back({Point(Rational(static_cast<long>(i), static_cast<long>(n))), {}});
    }
    const Instance p(SpaceKind::Path, 2, line), c(SpaceKind::Cycle, 2, ring);
    const Length pw = min_welfare(p.with_reports(std::vector<FacilitySet>(n, FacilitySet::all(2))), path_gap_uniform(p));
    const Length cw =
        min_welfare(c.with_reports(std::vector<FacilitySet>(n, FacilitySet::all(2))), cycle_gap_uniform(c));
    CHECK(pw >= Length::exact(Rational(1, 2 * static_cast<long>(n + 1))));
    CHECK(cw >= Length::exact(Rational(1, 2 * static_cast<long>(n))));
  }
  std::mt19937_64 rng(97);
  for (SpaceKind space : {SpaceKind::Path, SpaceKind::Cycle}) {
    InstanceShape shape;
    shape.space = space;
    shape.max_facilities = 1;
    shape.dislike_odds = 64;
    for (int t = 0; t < 100; ++t) {
      const Instance inst = sample_instance(rng, shape);
      if (space == SpaceKind::Path) {
        CHECK(path_gap_uniform(inst) == path_gap_mechanism(inst));
      } else {
        CHECK(cycle_gap_uniform(inst) == cycle_gap_mechanism(inst));
      }
    }
  }
}

TEST_CASE("parallel placements depend only on each facility's haters") {
  std::mt19937_64 rng(101);
  InstanceShape shape;
  shape.max_facilities = 3;
  for (int t = 0; t < 100; ++t) {
    const Instance inst = sample_instance(rng, shape);
    const Solution s = path_gap_parallel(inst);
    for (int j = 0; j < inst.k(); ++j) {
      CHECK(s.placements[static_cast<std::size_t>(j)] == path_gap_mechanism(single_projection(inst, j)).placements[0]);
    }
  }
}
