#pragma once

#include "ofl/core.hpp"
#include "ofl/oracle.hpp"
#include "ofl/ratio.hpp"
#include "ofl/voting.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string_view>
#include <vector>

namespace ofl {

enum class Property { SP, WGSP, SGSP };

std::string_view to_string(Property p);
std::optional<Property> parse_property(std::string_view name);

/// Enumeration limits for the manipulation searches. Exceeding one raises
/// ResourceLimit rather than silently truncating the search.
struct AuditCaps {
  std::size_t max_agents = 6;
  int max_facilities = 3;
  /// Largest coalition tried; 0 means every size up to n.
  std::size_t max_coalition = 0;
  std::uint64_t max_evaluations = 20'000'000;
};

/// A coalition, its joint report and the members' true welfare before and
/// after. Agent indices are 0-based.
struct ManipulationWitness {
  std::vector<std::size_t> coalition;
  std::vector<FacilitySet> reports;
  std::vector<Length> welfare_before;
  std::vector<Length> welfare_after;
  Solution truthful_outcome;
  Solution manipulated_outcome;
};

/// Outcome of one concrete deviation: members' true welfare under the
/// truthful and the manipulated profile.
ManipulationWitness evaluate_deviation(const Mechanism& mech, const Instance& truth,
                                       const std::vector<std::size_t>& coalition,
                                       const std::vector<FacilitySet>& reports);

/// True if the deviation violates the property: for SP a single member
/// strictly gains; for WGSP every member strictly gains; for SGSP some
/// member strictly gains and none loses.
bool violates(Property p, const ManipulationWitness& w);

/// First violation in the order: coalitions by size, then lexicographically;
/// joint reports lexicographically (first member most significant, each
/// member's sets in increasing bit order), skipping the all-truthful report.
/// SP searches singletons only.
std::optional<ManipulationWitness> find_manipulation(const Mechanism& mech, const Instance& truth,
                                                     Property p, const AuditCaps& caps = {});

std::optional<ManipulationWitness> check_sp(const Mechanism& mech, const Instance& truth,
                                            const AuditCaps& caps = {});
std::optional<ManipulationWitness> check_wgsp(const Mechanism& mech, const Instance& truth,
                                              const AuditCaps& caps = {});
std::optional<ManipulationWitness> check_sgsp(const Mechanism& mech, const Instance& truth,
                                              const AuditCaps& caps = {});

// ---------------------------------------------------------------------------
// Voting

using VotingRule = std::function<int(const voting::VotingInstance&)>;

/// Coalition deviation in a voting instance. A voter gains when the winner
/// moves from outside to inside its true top tier and loses on the reverse.
struct VotingWitness {
  std::vector<std::size_t> coalition;
  std::vector<voting::CandidateSet> reports;
  int winner_before = 0;
  int winner_after = 0;
};

struct VotingDeviation {
  VotingWitness witness;
  std::vector<int> gain;  // per member: +1 gains, 0 indifferent, -1 loses
};

VotingDeviation evaluate_voting_deviation(const VotingRule& rule, const voting::VotingInstance& truth,
                                          const std::vector<std::size_t>& coalition,
                                          const std::vector<voting::CandidateSet>& reports);

bool violates(Property p, const VotingDeviation& d);

/// Same enumeration order as find_manipulation; reports range over every
/// subset of the candidates.
std::optional<VotingWitness> find_voting_manipulation(const VotingRule& rule,
                                                      const voting::VotingInstance& truth, Property p,
                                                      const AuditCaps& caps = {});

// ---------------------------------------------------------------------------
// Ratio audits

enum class Objective { SW, MW };

std::string_view to_string(Objective o);
std::optional<Objective> parse_objective(std::string_view name);

/// Mechanism value against the oracle on one instance. The true
/// optimum-to-mechanism ratio lies in [ratio_lower, ratio_upper]; the two
/// coincide (and `ratio` is set) when the oracle is exact on a rational
/// objective.
struct RatioSample {
  std::size_t trial = 0;
  std::optional<Instance> instance;
  Solution solution;
  Measure mechanism_value;
  OracleResult oracle;
  std::optional<Ratio> ratio;
  double ratio_lower = 0.0;
  double ratio_upper = 0.0;
};

RatioSample measure_ratio(const Mechanism& mech, Objective objective, const Instance& inst,
                          const OracleOptions& opts = {});

using InstanceSampler = std::function<Instance(std::mt19937_64&)>;

struct RatioAuditReport {
  std::size_t trials = 0;
  /// Sample with the largest certified (lower) ratio.
  RatioSample worst;
  /// Largest upper ratio over all samples.
  double max_ratio_upper = 0.0;
};

/// Evaluates `trials` sampled instances, drawn in order from one generator
/// seeded with `seed`.
RatioAuditReport ratio_audit(const Mechanism& mech, Objective objective, const InstanceSampler& sampler,
                             std::size_t trials, std::uint64_t seed, const OracleOptions& opts = {});

// ---------------------------------------------------------------------------
// Lower-bound constructions

/// 3n single-facility path agents: one at 0 and one at 1 disliking F1, n at
/// 1/2 disliking F1, n-1 indifferent at 0 (set U) and n-1 indifferent at 1
/// (set V). `truthful` has every agent truthful; in `u_lies` U reports {F1};
/// in `v_lies` V reports {F1}.
struct UtilitarianLowerBound {
  Instance truthful;
  Instance u_lies;
  Instance v_lies;
};

/// Throws InvalidInput for n < 2.
UtilitarianLowerBound utilitarian_lower_bound(int n);

/// Two-facility path agents at i/q^2 for 0 < i < q^2, i != q^2/2 (agent i),
/// plus two agents each at 0, 1/2 and 1 (one disliking F1, one F2). Agents
/// below 1/2 dislike F2 and agents above dislike F1. In `lies`, agents
/// q, q+1, ... below 1/2 report F1, F2, F1, ... and agents q^2-q, q^2-q-1,
/// ... above 1/2 report F2, F1, F2, .... Agent i sits at index i-1 below 1/2
/// and i-2 above; the
/// six anchors follow in the order 0/F1, 0/F2, 1/2/F1, 1/2/F2, 1/F1, 1/F2.
struct EgalitarianLowerBound {
  Instance truthful;
  Instance lies;
};

/// Throws InvalidInput unless q is even and >= 2.
EgalitarianLowerBound egalitarian_lower_bound(int q);

}  // namespace ofl
