#pragma once

#include "ofl/rational.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace ofl::voting {

/// Top-tier candidate set of one voter (bit c is candidate c+1).
using CandidateSet = std::uint64_t;

struct Voter {
  CandidateSet top_tier = 0;
  Rational w_plus;
  Rational w_minus;
};

/// Dichotomous voting instance: voters with (reported) top tiers and public
/// weights w+ >= w- >= 0.
class VotingInstance {
 public:
  VotingInstance(int candidates, std::vector<Voter> voters);

  int candidates() const noexcept { return candidates_; }
  std::size_t voter_count() const noexcept { return voters_.size(); }
  const std::vector<Voter>& voters() const noexcept { return voters_; }

  VotingInstance with_top_tiers(const std::vector<CandidateSet>& tiers) const;
  std::vector<CandidateSet> top_tiers() const;

 private:
  int candidates_;
  std::vector<Voter> voters_;
};

/// Approval of candidate c (0-based): sum over voters of w+ if c is in the
/// voter's top tier and w- otherwise.
Rational approval(const VotingInstance& vi, int c);

/// Candidate with the highest approval. Ties go to the candidate appearing
/// first in tie_order (a permutation of 0..candidates-1); an empty tie_order
/// means ascending index.
int elect(const VotingInstance& vi, const std::vector<int>& tie_order = {});

}  // namespace ofl::voting
