#include "helpers.hpp"

#include "ofl/sampling.hpp"
#include "ofl/voting.hpp"

#include <doctest.h>

#include <random>

using namespace ofl;
using namespace ofl::voting;

namespace {

constexpr CandidateSet c1 = 1, c2 = 2;

VotingInstance five_voters(const std::vector<CandidateSet>& tiers) {
  std::vector<Voter> voters;
  for (CandidateSet t : tiers) voters.push_back({t, Rational(1), Rational(0)});
  return VotingInstance(2, voters);
}

}  // namespace

TEST_CASE("five-voter example") {
  const VotingInstance truthful = five_voters({c1, c1 | c2, c1 | c2, c2, c2});
  CHECK(approval(truthful, 0) == 3);
  CHECK(approval(truthful, 1) == 4);
  CHECK(elect(truthful) == 1);

  const VotingInstance manipulated = five_voters({c1, c1, c1, c2, c2});
  CHECK(approval(manipulated, 0) == 3);
  CHECK(approval(manipulated, 1) == 2);
  CHECK(elect(manipulated) == 0);
}

TEST_CASE("approval corner cases") {
  const VotingInstance everyone(3, {{7, Rational(2), Rational(1)}, {7, Rational(1, 2), Rational(0)}});
  for (int c = 0; c < 3; ++c) CHECK(approval(everyone, c) == Rational(5, 2));
  const VotingInstance zero(3, {{1, Rational(0), Rational(0)}, {6, Rational(0), Rational(0)}});
  for (int c = 0; c < 3; ++c) CHECK(approval(zero, c) == 0);
}

TEST_CASE("ties follow the tie order") {
  const VotingInstance tie(3, {{1, Rational(1), Rational(0)}, {4, Rational(1), Rational(0)}});
  CHECK(elect(tie) == 0);
  CHECK(elect(tie, {2, 1, 0}) == 2);
  CHECK(elect(tie, {1, 2, 0}) == 2);
}

TEST_CASE("weights must satisfy w+ >= w- >= 0") {
  CHECK_THROWS(VotingInstance(2, {{1, Rational(0), Rational(1)}}));
  CHECK_THROWS(VotingInstance(2, {{1, Rational(1), Rational(-1)}}));
  CHECK_THROWS(VotingInstance(2, {{4, Rational(1), Rational(0)}}));
}

TEST_CASE("the winner is invariant under weight scaling and neutral voters") {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 500; ++t) {
    const VotingInstance vi = sample_voting(rng, 4, 3);
    const int winner = elect(vi);
    const Rational scale(static_cast<long>(uniform_between(rng, 1, 9)), static_cast<long>(uniform_between(rng, 1, 9)));
    std::vector<Voter> scaled = vi.voters();
    for (auto& v : scaled) {
      v.w_plus *= scale;
      v.w_minus *= scale;
    }
    CHECK(elect(VotingInstance(vi.candidates(), scaled)) == winner);

    std::vector<Voter> extended = vi.voters();
    const Rational w(static_cast<long>(uniform_between(rng, 0, 5)));
    extended.push_back({uniform_below(rng, std::uint64_t{1} << vi.candidates()), w, w});
    CHECK(elect(VotingInstance(vi.candidates(), extended)) == winner);
  }
}
