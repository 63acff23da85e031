#include "ofl/utilitarian.hpp"

#include "ofl/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace ofl {

namespace {

void require_space(const Instance& inst, SpaceKind space, const char* who) {
  if (inst.space() != space) {
    throw InvalidInput(std::string(who) + " requires a " + std::string(to_string(space)) +
                       " instance");
  }
}

}  // namespace

Solution binary_welfare_maximizer(const Instance& inst, int k_cap) {
  require_space(inst, SpaceKind::Path, "binary_welfare_maximizer");
  const int k = inst.k();
  if (k > k_cap) {
    throw ResourceLimit("binary_welfare_maximizer: k = " + std::to_string(k) +
                        " exceeds the cap of " + std::to_string(k_cap));
  }

  // Per agent: welfare when all disliked facilities sit at 1, all at 0, or mixed.
  struct Row {
    std::uint64_t dislikes;
    Rational all_ones, all_zeros, mixed, constant;
  };
  std::vector<Row> rows;
  rows.reserve(inst.n());
  for (const auto& a : inst.agents()) {
    const Rational& x = a.location.x();
    Rational right = Rational(1) - x;
    Row r{a.dislikes.bits(), right, x, std::min(x, right), {}};
    if (a.dislikes.empty()) r.constant = std::max(x, right);
    rows.push_back(std::move(r));
  }

  // Vector v encodes y_j = bit (k-1-j), so numeric order is lexicographic order.
  const std::uint64_t count = std::uint64_t{1} << k;
  std::uint64_t best_v = 0;
  Rational best;
  Rational total;
  for (std::uint64_t v = 0; v < count; ++v) {
    std::uint64_t ones = 0;
    for (int j = 0; j < k; ++j) {
      if ((v >> (k - 1 - j)) & 1U) ones |= std::uint64_t{1} << j;
    }
    total = 0;
    for (const auto& r : rows) {
      if (r.dislikes == 0) {
        total += r.constant;
      } else if ((r.dislikes & ones) == r.dislikes) {
        total += r.all_ones;
      } else if ((r.dislikes & ones) == 0) {
        total += r.all_zeros;
      } else {
        total += r.mixed;
      }
    }
    if (v == 0 || total > best) {
      best = total;
      best_v = v;
    }
  }

  Solution y;
  y.placements.reserve(static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j) y.placements.emplace_back(Rational(static_cast<long>((best_v >> (k - 1 - j)) & 1U)));
  return y;
}

Solution path_endpoint_mechanism(const Instance& inst) {
  require_space(inst, SpaceKind::Path, "path_endpoint_mechanism");
  Rational left, right;
  for (const auto& a : inst.agents()) {
    left += a.location.x();
    right += Rational(1) - a.location.x();
  }
  return uniform_solution(inst.k(), Point(left >= right ? Rational(0) : Rational(1)));
}

Solution cycle_endpoint_mechanism(const Instance& inst) {
  require_space(inst, SpaceKind::Cycle, "cycle_endpoint_mechanism");
  const Point zero(Rational(0)), half(Rational(1, 2));
  Rational to_zero, to_half;
  for (const auto& a : inst.agents()) {
    to_zero += *distance(SpaceKind::Cycle, a.location, zero).exact_value();
    to_half += *distance(SpaceKind::Cycle, a.location, half).exact_value();
  }
  return uniform_solution(inst.k(), to_zero >= to_half ? zero : half);
}

Solution square_corner_mechanism(const Instance& inst) {
  require_space(inst, SpaceKind::Square, "square_corner_mechanism");
  const std::array<Point, 4> corners = {
      Point(Rational(0), Rational(0)), Point(Rational(0), Rational(1)),
      Point(Rational(1), Rational(0)), Point(Rational(1), Rational(1))};

  std::array<double, 4> sums{};
  std::array<long double, 4> precise{};
  std::array<std::vector<Rational>, 4> squares;
  for (std::size_t c = 0; c < corners.size(); ++c) {
    for (const auto& a : inst.agents()) {
      const Length d = distance(SpaceKind::Square, a.location, corners[c]);
      const Rational sq = d.squared();
      sums[c] += d.value();
      precise[c] += std::sqrt(static_cast<long double>(sq.to_double()));
      squares[c].push_back(sq);
    }
    std::sort(squares[c].begin(), squares[c].end());
  }

  constexpr double kTolerance = 1e-12;
  // > 0 if corner a beats corner b, 0 on a tie.
  auto compare = [&](std::size_t a, std::size_t b) -> int {
    if (std::abs(sums[a] - sums[b]) > kTolerance) return sums[a] > sums[b] ? 1 : -1;
    if (squares[a] == squares[b]) return 0;
    if (precise[a] == precise[b]) return 0;
    return precise[a] > precise[b] ? 1 : -1;
  };

  std::size_t best = 0;
  for (std::size_t c = 1; c < corners.size(); ++c) {
    if (compare(c, best) > 0) best = c;
  }
  return uniform_solution(inst.k(), corners[best]);
}

}  // namespace ofl
