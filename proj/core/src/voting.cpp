#include "ofl/voting.hpp"

#include "ofl/error.hpp"

#include <algorithm>
#include <string>

namespace ofl::voting {

VotingInstance::VotingInstance(int candidates, std::vector<Voter> voters)
    : candidates_(candidates), voters_(std::move(voters)) {
  if (candidates_ < 1 || candidates_ > 64) throw InvalidInput("candidate count must be in [1, 64]");
  if (voters_.empty()) throw InvalidInput("voting instance needs at least one voter");
  const CandidateSet allowed =
      candidates_ == 64 ? ~CandidateSet{0} : (CandidateSet{1} << candidates_) - 1;
  for (std::size_t i = 0; i < voters_.size(); ++i) {
    const auto& v = voters_[i];
    if ((v.top_tier & ~allowed) != 0) {
      throw InvalidInput("voter " + std::to_string(i + 1) + " approves an unknown candidate");
    }
    if (v.w_minus.sign() < 0 || v.w_plus < v.w_minus) {
      throw InvalidInput("voter " + std::to_string(i + 1) + " violates w+ >= w- >= 0");
    }
  }
}

VotingInstance VotingInstance::with_top_tiers(const std::vector<CandidateSet>& tiers) const {
  if (tiers.size() != voters_.size()) throw InvalidInput("tier profile has wrong length");
  auto v = voters_;
  for (std::size_t i = 0; i < v.size(); ++i) v[i].top_tier = tiers[i];
  return VotingInstance(candidates_, std::move(v));
}

std::vector<CandidateSet> VotingInstance::top_tiers() const {
  std::vector<CandidateSet> t;
  t.reserve(voters_.size());
  for (const auto& v : voters_) t.push_back(v.top_tier);
  return t;
}

Rational approval(const VotingInstance& vi, int c) {
  if (c < 0 || c >= vi.candidates()) throw InvalidInput("candidate index out of range");
  Rational total;
  for (const auto& v : vi.voters()) total += ((v.top_tier >> c) & 1U) ? v.w_plus : v.w_minus;
  return total;
}

int elect(const VotingInstance& vi, const std::vector<int>& tie_order) {
  std::vector<int> order = tie_order;
  if (order.empty()) {
    order.resize(static_cast<std::size_t>(vi.candidates()));
    for (int c = 0; c < vi.candidates(); ++c) order[static_cast<std::size_t>(c)] = c;
  } else {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (int c = 0; c < vi.candidates(); ++c) {
      if (sorted.size() != static_cast<std::size_t>(vi.candidates()) ||
          sorted[static_cast<std::size_t>(c)] != c) {
        throw InvalidInput("tie_order must be a permutation of the candidates");
      }
    }
  }
  int winner = order.front();
  Rational best = approval(vi, winner);
  for (std::size_t r = 1; r < order.size(); ++r) {
    Rational a = approval(vi, order[r]);
    if (a > best) {
      best = std::move(a);
      winner = order[r];
    }
  }
  return winner;
}

}  // namespace ofl::voting
