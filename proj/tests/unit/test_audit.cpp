#include "helpers.hpp"

#include "ofl/audit.hpp"
#include "ofl/egalitarian.hpp"
#include "ofl/error.hpp"
#include "ofl/sampling.hpp"
#include "ofl/utilitarian.hpp"
#include "ofl/voting.hpp"

#include <doctest.h>

#include <random>

using namespace ofl;
using namespace ofl::test;

namespace {

/// Deliberately manipulable: builds F1 at the leftmost reported hater.
Solution leftmost_hater(const Instance& inst) {
  const auto h = haters(inst, 0);
  if (h.empty()) return on_line({"1"});
  Rational best = inst.agent(h.front()).location.x();
  for (std::size_t i : h) best = std::min(best, inst.agent(i).location.x());
  return Solution{{Point(best)}};
}

void check_replays(const Mechanism& mech, const Instance& truth, Property p, const ManipulationWitness& w) {
  const ManipulationWitness again = evaluate_deviation(mech, truth, w.coalition, w.reports);
  CHECK(violates(p, again));
  CHECK(again.welfare_after == w.welfare_after);
  bool differs = false;
  for (std::size_t t = 0; t < w.coalition.size(); ++t) differs |= truth.agent(w.coalition[t]).dislikes != w.reports[t];
  CHECK(differs);
}

}  // namespace

TEST_CASE("property names") {
  CHECK(parse_property("wgsp") == Property::WGSP);
  CHECK_FALSE(parse_property("gsp").has_value());
  CHECK(to_string(Property::SGSP) == "sgsp");
  CHECK(parse_objective("mw") == Objective::MW);
}

TEST_CASE("the SP falsifier finds a planted violation") {
  std::mt19937_64 rng(151);
  InstanceShape shape;
  shape.max_facilities = 1;
  shape.min_agents = 2;
  shape.max_agents = 4;
  int found = 0;
  for (int t = 0; t < 200; ++t) {
    const Instance inst = sample_instance(rng, shape);
    if (auto w = check_sp(leftmost_hater, inst)) {
      ++found;
      check_replays(leftmost_hater, inst, Property::SP, *w);
      AuditCaps singles;
      singles.max_coalition = 1;
      CHECK(check_wgsp(leftmost_hater, inst, singles).has_value());
    }
  }
  CHECK(found > 0);
  // The hater at 0 hides its dislike and F1 moves from 0 to 1.
  const Instance planted = path(1, {agent("0", {1}), agent("0.5", {})});
  const auto w = check_sp(leftmost_hater, planted);
  REQUIRE(w.has_value());
  CHECK(w->coalition == std::vector<std::size_t>{0});
  CHECK(w->reports == std::vector<FacilitySet>{FacilitySet()});
}

TEST_CASE("SP falsifier finds nothing on the gap mechanism") {
  std::mt19937_64 rng(157);
  InstanceShape shape;
  shape.max_facilities = 1;
  for (int t = 0; t < 200; ++t) {
    const Instance inst = sample_instance(rng, shape);
    CHECK_FALSE(check_sp(path_gap_mechanism, inst).has_value());
  }
}

TEST_CASE("all-indifferent instances admit no manipulation") {
  const Instance calm = path(2, {agent("0.1", {}), agent("0.6", {}), agent("0.9", {})});
  CHECK_FALSE(check_sp(path_gap_parallel, calm).has_value());
}

TEST_CASE("report-independent mechanisms admit no witness") {
  std::mt19937_64 rng(163);
  InstanceShape shape;
  shape.max_agents = 4;
  shape.max_facilities = 2;
  for (int t = 0; t < 30; ++t) {
    const Instance inst = sample_instance(rng, shape);
    for (Property p : {Property::SP, Property::WGSP, Property::SGSP}) {
      CHECK_FALSE(find_manipulation(path_endpoint_mechanism, inst, p).has_value());
    }
  }
}

TEST_CASE("violation predicates") {
  ManipulationWitness w;
  w.coalition = {0, 1};
  w.reports = {FacilitySet(), FacilitySet()};
  w.welfare_before = {Length::exact(1), Length::exact(1)};
  w.welfare_after = {Length::exact(2), Length::exact(1)};
  CHECK(violates(Property::SGSP, w));
  CHECK_FALSE(violates(Property::WGSP, w));
  w.welfare_after = {Length::exact(2), Length::exact(2)};
  CHECK(violates(Property::WGSP, w));
  w.welfare_after = {Length::exact(2), Length::exact(0)};
  CHECK_FALSE(violates(Property::SGSP, w));
}

TEST_CASE("caps raise resource limits") {
  std::vector<Agent> many(7, agent("0.5", {1}));
  const Instance big = path(1, many);
  CHECK_THROWS_AS(check_sp(path_gap_mechanism, big), ResourceLimit);
  AuditCaps tiny;
  tiny.max_evaluations = 3;
  CHECK_THROWS_AS(check_wgsp(path_gap_mechanism, path(1, {agent("0.1", {1}), agent("0.7", {1})}), tiny),
                  ResourceLimit);
}

TEST_CASE("weighted approval voting is not SGSP") {
  std::vector<voting::Voter> voters;
  for (voting::CandidateSet t : {1U, 3U, 3U, 2U, 2U}) voters.push_back({t, Rational(1), Rational(0)});
  const voting::VotingInstance truth(2, voters);
  const VotingRule rule = [](const voting::VotingInstance& v) { return voting::elect(v); };

  const VotingDeviation stated = evaluate_voting_deviation(rule, truth, {0, 1, 2}, {1, 1, 1});
  CHECK(stated.witness.winner_before == 1);
  CHECK(stated.witness.winner_after == 0);
  CHECK(stated.gain == std::vector<int>{1, 0, 0});
  CHECK(violates(Property::SGSP, stated));
  CHECK_FALSE(violates(Property::WGSP, stated));

  const auto w = find_voting_manipulation(rule, truth, Property::SGSP);
  REQUIRE(w.has_value());
  CHECK(w->coalition == std::vector<std::size_t>{0, 1});
  CHECK(w->reports == std::vector<voting::CandidateSet>{1, 1});
  CHECK(violates(Property::SGSP, evaluate_voting_deviation(rule, truth, w->coalition, w->reports)));
  CHECK_FALSE(find_voting_manipulation(rule, truth, Property::WGSP).has_value());

  // Ties to c2 rule out every two-voter witness.
  const VotingRule c2_first = [](const voting::VotingInstance& v) { return voting::elect(v, {1, 0}); };
  const auto exact = find_voting_manipulation(c2_first, truth, Property::SGSP);
  REQUIRE(exact.has_value());
  CHECK(exact->coalition == std::vector<std::size_t>{0, 1, 2});
  CHECK(exact->reports == std::vector<voting::CandidateSet>{1, 1, 1});
}

TEST_CASE("utilitarian lower-bound construction") {
  for (int n : {2, 4}) {
    const UtilitarianLowerBound lb = utilitarian_lower_bound(n);
    CHECK(lb.truthful.n() == static_cast<std::size_t>(3 * n));
    CHECK(*oracle_sw_path(lb.u_lies).value.exact == Rational(5 * n, 2) - 1);
    CHECK(*oracle_sw_path(lb.v_lies).value.exact == Rational(5 * n, 2) - 1);
  }
  CHECK(*social_welfare(utilitarian_lower_bound(4).u_lies, on_line({"1/2"})).exact == R("11/2"));
  CHECK_THROWS_AS(utilitarian_lower_bound(1), InvalidInput);
}

TEST_CASE("egalitarian lower-bound construction") {
  for (int q : {2, 4}) {
    const EgalitarianLowerBound lb = egalitarian_lower_bound(q);
    CHECK(lb.truthful.n() == static_cast<std::size_t>(q * q + 4));
    CHECK(*oracle_mw(lb.truthful).value.exact == R("1/4"));
    CHECK(*oracle_mw(lb.lies).value.exact == Rational(1, 2 * q));
  }
  CHECK_THROWS_AS(egalitarian_lower_bound(3), InvalidInput);
  CHECK_THROWS_AS(egalitarian_lower_bound(0), InvalidInput);
}

TEST_CASE("ratio audit of the endpoint mechanism hits 2 on the tightness instance") {
  const RatioSample s = measure_ratio(path_endpoint_mechanism, Objective::SW, tightness_instance());
  REQUIRE(s.ratio.has_value());
  CHECK(*s.ratio == Rational(2));

  const InstanceSampler sampler = [](std::mt19937_64& rng) {
    if (uniform_below(rng, 10) == 0) return tightness_instance();
    InstanceShape shape;
    return sample_instance(rng, shape);
  };
  const RatioAuditReport report = ratio_audit(path_endpoint_mechanism, Objective::SW, sampler, 100, 3);
  CHECK(report.trials == 100);
  REQUIRE(report.worst.ratio.has_value());
  CHECK(*report.worst.ratio == Rational(2));
}

TEST_CASE("the parallel gap mechanism is exactly egalitarian") {
  InstanceShape shape;
  const InstanceSampler sampler = [shape](std::mt19937_64& rng) { return sample_instance(rng, shape); };
  const RatioAuditReport report = ratio_audit(path_gap_parallel, Objective::MW, sampler, 200, 5);
  REQUIRE(report.worst.ratio.has_value());
  CHECK(*report.worst.ratio == Rational(1));
}
