#pragma once

#include "ofl/rational.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ofl {

enum class SpaceKind { Path, Cycle, Square };

std::string_view to_string(SpaceKind kind);
std::optional<SpaceKind> parse_space(std::string_view name);
int dimension(SpaceKind kind);

/// A location on the path, the cycle (both 1-D) or in the unit square (2-D).
class Point {
 public:
  Point() = default;
  explicit Point(Rational x) : c_{std::move(x), Rational()}, dim_(1) {}
  Point(Rational x, Rational y) : c_{std::move(x), std::move(y)}, dim_(2) {}

  int dimension() const noexcept { return dim_; }
  const Rational& x() const noexcept { return c_[0]; }
  /// Second coordinate; only meaningful for 2-D points.
  const Rational& y() const noexcept { return c_[1]; }

  std::string str() const;

  friend bool operator==(const Point&, const Point&) = default;
  /// Lexicographic on (x, y); the tie-break order used by the square mechanisms.
  friend std::strong_ordering operator<=>(const Point& a, const Point& b) {
    if (auto c = a.dim_ <=> b.dim_; c != 0) return c;
    if (auto c = a.c_[0] <=> b.c_[0]; c != 0) return c;
    return a.c_[1] <=> b.c_[1];
  }

 private:
  std::array<Rational, 2> c_{};
  int dim_ = 1;
};

bool valid_point(SpaceKind space, const Point& p);

/// A nonnegative length. On the path and cycle it is carried exactly; in the
/// square only its square is exact, and value() is the floating root.
/// Ordering is exact in both cases.
class Length {
 public:
  Length() = default;
  static Length exact(Rational value);
  static Length from_squared(Rational squared);

  bool is_exact() const noexcept { return !squared_form_; }
  /// The exact value, if representable.
  std::optional<Rational> exact_value() const;
  Rational squared() const;
  double value() const;

  friend bool operator==(const Length& a, const Length& b) { return compare(a, b) == 0; }
  friend std::strong_ordering operator<=>(const Length& a, const Length& b) {
    const int c = compare(a, b);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  std::string str() const;

 private:
  static int compare(const Length& a, const Length& b);

  Rational magnitude_;
  bool squared_form_ = false;
};

/// A sum of lengths: exact when every term is exact, floating otherwise.
struct Measure {
  std::optional<Rational> exact;
  double value = 0.0;

  Measure& operator+=(const Length& term);
  std::string str() const;
};

/// Bit set of facility indices (bit j is facility F_{j+1}).
class FacilitySet {
 public:
  static constexpr int kMaxFacilities = 64;

  constexpr FacilitySet() = default;
  constexpr explicit FacilitySet(std::uint64_t bits) : bits_(bits) {}
  static FacilitySet all(int k);
  static FacilitySet single(int j) { return FacilitySet(std::uint64_t{1} << j); }

  constexpr std::uint64_t bits() const noexcept { return bits_; }
  bool contains(int j) const noexcept { return (bits_ >> j) & 1U; }
  bool empty() const noexcept { return bits_ == 0; }
  int size() const noexcept;
  void insert(int j) { bits_ |= std::uint64_t{1} << j; }

  friend constexpr bool operator==(FacilitySet, FacilitySet) = default;
  friend constexpr auto operator<=>(FacilitySet a, FacilitySet b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

struct Agent {
  Point location;
  FacilitySet dislikes;
};

/// A DOFL instance: space, facility count k and the agents' locations and
/// (true or reported) aversion sets. Immutable after construction.
class Instance {
 public:
  /// Throws InvalidInput if n == 0, k is outside [1, 64], a location is
  /// invalid for the space or a dislike index is >= k.
  Instance(SpaceKind space, int k, std::vector<Agent> agents);

  SpaceKind space() const noexcept { return space_; }
  int k() const noexcept { return k_; }
  std::size_t n() const noexcept { return agents_.size(); }
  const std::vector<Agent>& agents() const noexcept { return agents_; }
  const Agent& agent(std::size_t i) const { return agents_.at(i); }

  /// Same locations, aversion profile replaced.
  Instance with_reports(std::span<const FacilitySet> reports) const;
  Instance with_report(std::size_t i, FacilitySet report) const;
  std::vector<FacilitySet> reports() const;

 private:
  SpaceKind space_;
  int k_;
  std::vector<Agent> agents_;
};

struct Solution {
  std::vector<Point> placements;

  friend bool operator==(const Solution&, const Solution&) = default;
  std::string str() const;
};

/// Path: |p - q|. Cycle: shorter arc. Square: Euclidean (exact squared).
/// Throws InvalidInput on a dimension mismatch.
Length distance(SpaceKind space, const Point& p, const Point& q);

/// Largest distance from p to any point of the space: max(x, 1 - x) on the
/// path, 1/2 on the cycle, the farthest corner in the square.
Length farthest_distance(SpaceKind space, const Point& p);

Length agent_welfare(const Instance& inst, std::size_t i, const Solution& y);
Measure social_welfare(const Instance& inst, const Solution& y);
Length min_welfare(const Instance& inst, const Solution& y);

/// Agents that dislike facility j (0-based).
std::vector<std::size_t> haters(const Instance& inst, int j);
/// Agents with an empty aversion set.
std::vector<std::size_t> indiff(const Instance& inst);

/// Throws InvalidInput unless y has k placements valid for the space.
void validate_solution(const Instance& inst, const Solution& y);

/// All k facilities at one point.
Solution uniform_solution(int k, const Point& p);

/// A deterministic map from a reported instance to a placement.
using Mechanism = std::function<Solution(const Instance&)>;

}  // namespace ofl
