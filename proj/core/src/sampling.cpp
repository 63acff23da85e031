#include "ofl/sampling.hpp"

#include "ofl/egalitarian.hpp"
#include "ofl/error.hpp"

#include <algorithm>
#include <limits>
#include <set>

namespace ofl {

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw InvalidInput("uniform_below needs a positive bound");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  while (true) {
    const std::uint64_t v = rng();
    if (v < limit) return v % bound;
  }
}

long uniform_between(std::mt19937_64& rng, long lo, long hi) {
  if (lo > hi) throw InvalidInput("uniform_between needs lo <= hi");
  return lo + static_cast<long>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

namespace {

Rational grid_coordinate(std::mt19937_64& rng, long d, bool half_open) {
  return Rational(uniform_between(rng, 0, half_open ? d - 1 : d), d);
}

}  // namespace

Instance sample_instance(std::mt19937_64& rng, const InstanceShape& shape) {
  if (shape.min_agents < 1 || shape.min_agents > shape.max_agents) throw InvalidInput("bad agent range");
  if (shape.min_facilities < 1 || shape.min_facilities > shape.max_facilities ||
      shape.max_facilities > FacilitySet::kMaxFacilities) {
    throw InvalidInput("bad facility range");
  }
  if (shape.max_denominator < 1) throw InvalidInput("max_denominator must be positive");

  const auto n = static_cast<std::size_t>(
      uniform_between(rng, static_cast<long>(shape.min_agents), static_cast<long>(shape.max_agents)));
  const int k = static_cast<int>(uniform_between(rng, shape.min_facilities, shape.max_facilities));
  const bool cycle = shape.space == SpaceKind::Cycle;

  while (true) {
    const long d = uniform_between(rng, cycle ? 2 : 1, std::max(shape.max_denominator, cycle ? 2L : 1L));
    std::vector<Agent> agents;
    agents.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
      Agent a;
      if (shape.space == SpaceKind::Square) {
        Rational x = grid_coordinate(rng, d, false);
        a.location = Point(std::move(x), grid_coordinate(rng, d, false));
      } else {
        a.location = Point(grid_coordinate(rng, d, cycle));
      }
      for (int j = 0; j < k; ++j) {
        if (uniform_below(rng, 64) < static_cast<std::uint64_t>(shape.dislike_odds)) a.dislikes.insert(j);
      }
      agents.push_back(std::move(a));
    }
    if (shape.space == SpaceKind::Square && shape.general_position) {
      std::vector<Point> pts;
      for (const auto& a : agents) pts.push_back(a.location);
      if (!in_general_position(pts)) continue;
    }
    return Instance(shape.space, k, std::move(agents));
  }
}

Distribution sample_distribution(std::mt19937_64& rng, std::size_t max_size, long max_denominator) {
  if (max_denominator < 1) throw InvalidInput("max_denominator must be positive");
  const long d = uniform_between(rng, 1, max_denominator);
  const auto slots = static_cast<std::size_t>(2 * d + 1);
  const std::size_t size = static_cast<std::size_t>(
      uniform_between(rng, 0, static_cast<long>(std::min(max_size, slots))));
  std::set<long> used;
  std::vector<WeightedPoint> pairs;
  while (pairs.size() < size) {
    const long t = uniform_between(rng, -d, d);
    if (!used.insert(t).second) continue;
    pairs.push_back({Rational(t, d), Rational(uniform_between(rng, 1, 8), uniform_between(rng, 1, 4))});
  }
  return Distribution(std::move(pairs));
}

voting::VotingInstance sample_voting(std::mt19937_64& rng, std::size_t max_voters, int max_candidates) {
  if (max_voters < 1 || max_candidates < 1) throw InvalidInput("bad voting instance range");
  const auto m = static_cast<std::size_t>(uniform_between(rng, 1, static_cast<long>(max_voters)));
  const int c = static_cast<int>(uniform_between(rng, 1, max_candidates));
  std::vector<voting::Voter> voters;
  for (std::size_t i = 0; i < m; ++i) {
    voting::Voter v;
    v.top_tier = uniform_below(rng, std::uint64_t{1} << c);
    switch (uniform_below(rng, 3)) {
      case 0: v.w_plus = 0; v.w_minus = 0; break;
      case 1: v.w_plus = 1; v.w_minus = 0; break;
      default: v.w_plus = 1; v.w_minus = 1; break;
    }
    voters.push_back(std::move(v));
  }
  return voting::VotingInstance(c, std::move(voters));
}

}  // namespace ofl
