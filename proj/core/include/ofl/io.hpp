#pragma once

#include "ofl/audit.hpp"
#include "ofl/core.hpp"
#include "ofl/fivethirds.hpp"
#include "ofl/oracle.hpp"
#include "ofl/voting.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

/// JSON documents for instances, voting profiles, distributions and results.
/// Numbers are read from "p/q" strings, decimal strings or JSON numbers, all
/// converted exactly; they are always written as "p/q" strings. Parse
/// failures raise ParseError whose field() is a JSON pointer.
namespace ofl::io {

/// {"space": "path"|"cycle"|"square", "k": K,
///  "agents": [{"x": NUM | [NUM, NUM], "dislikes": [1-based indices]}]}
Instance parse_instance(std::string_view text);
std::string instance_to_json(const Instance& inst);

/// {"candidates": C, "voters": [{"top": [1-based], "w_plus": NUM, "w_minus": NUM}],
///  "tie_order": [1-based permutation]}  (tie_order optional)
struct VotingFile {
  voting::VotingInstance instance;
  /// 0-based; empty means ascending.
  std::vector<int> tie_order;
};
VotingFile parse_voting(std::string_view text);
std::string voting_to_json(const VotingFile& file);

/// {"pairs": [{"x": NUM, "gamma": NUM}]}
Distribution parse_distribution(std::string_view text);
std::string distribution_to_json(const Distribution& d);

/// Result of running a mechanism: name, instance, placements, per-agent
/// welfare, social and min welfare, and the beta report for mech4.
std::string result_to_json(std::string_view mechanism, const Instance& inst, const Solution& y,
                           const BetaReport* beta = nullptr);

/// A result document read back. Welfare values keep their stored text.
struct LoadedResult {
  std::string mechanism;
  Instance instance;
  Solution solution;
  std::vector<std::string> agent_welfare;
  std::string social_welfare;
  std::string min_welfare;
};
LoadedResult parse_result(std::string_view text);

/// Text written for a length or an aggregate: "p/q" when exact, otherwise
/// the canonical floating form.
std::string length_text(const Length& l);
std::string measure_text(const Measure& m);

std::string beta_report_to_json(const BetaReport& r);
std::string oracle_result_to_json(const OracleResult& r);
/// Coalition members are written 1-based.
std::string witness_to_json(const ManipulationWitness& w, const Instance& truth, Property p);
std::string voting_witness_to_json(const VotingWitness& w, Property p);
std::string ratio_sample_to_json(const RatioSample& s, std::string_view mechanism, Objective objective);

}  // namespace ofl::io
