#pragma once

#include "ofl/core.hpp"
#include "ofl/fivethirds.hpp"
#include "ofl/voting.hpp"

#include <cstdint>
#include <random>

namespace ofl {

/// Uniform integer in [0, bound) by rejection, so sequences depend only on
/// the mt19937_64 stream and not on the standard library.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);
/// Uniform integer in [lo, hi].
long uniform_between(std::mt19937_64& rng, long lo, long hi);

struct InstanceShape {
  SpaceKind space = SpaceKind::Path;
  std::size_t min_agents = 1;
  std::size_t max_agents = 6;
  int min_facilities = 1;
  int max_facilities = 3;
  /// Coordinates are t / d with d drawn from [1, max_denominator].
  long max_denominator = 64;
  /// Square only: redraw until all agent locations are in general position.
  bool general_position = false;
  /// Probability numerator (out of 64) that an agent dislikes each facility;
  /// 32 makes every aversion set equally likely.
  int dislike_odds = 32;
};

/// Random instance with rational coordinates on a per-instance grid.
Instance sample_instance(std::mt19937_64& rng, const InstanceShape& shape);

/// Random distribution with 0..max_size pairs at distinct t / d in [-1, 1]
/// (d <= max_denominator) and masses u / v with u in [1, 8], v in [1, 4].
Distribution sample_distribution(std::mt19937_64& rng, std::size_t max_size, long max_denominator = 64);

/// Random voting instance: voters and candidates in the given ranges, 0/1
/// weight pairs with w+ >= w-, uniformly random top tiers.
voting::VotingInstance sample_voting(std::mt19937_64& rng, std::size_t max_voters, int max_candidates);

}  // namespace ofl
