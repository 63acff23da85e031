#pragma once

#include "ofl/core.hpp"
#include "ofl/ratio.hpp"

#include <cstddef>
#include <vector>

namespace ofl {

/// One support point of a Distribution: gamma > 0 agents (possibly a
/// fractional amount) at x in [-1, 1].
struct WeightedPoint {
  Rational x;
  Rational gamma;

  friend bool operator==(const WeightedPoint&, const WeightedPoint&) = default;
};

/// Weighted point set on [-1, 1] with pairwise distinct locations, kept
/// sorted by location.
class Distribution {
 public:
  Distribution() = default;
  /// Throws InvalidInput on x outside [-1, 1], gamma <= 0 or repeated x.
  explicit Distribution(std::vector<WeightedPoint> pairs);

  const std::vector<WeightedPoint>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  bool empty() const noexcept { return pairs_.empty(); }

  /// Mass at x, or 0.
  Rational gamma_at(const Rational& x) const;

  Distribution below_zero() const;
  Distribution at_zero() const;
  Distribution above_zero() const;
  /// The k pairs with the smallest (resp. largest) locations.
  Distribution prefix(std::size_t k) const;
  Distribution suffix(std::size_t k) const;

  /// True if every pair (x, g') of other has a pair (x, g) here with g >= g'.
  bool dominates(const Distribution& other) const;
  /// Either side of zero is empty.
  bool trivial() const;
  /// One or two pairs on each side of zero.
  bool special() const;

  std::string str() const;

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  std::vector<WeightedPoint> pairs_;
};

/// Total mass (Gamma).
Rational weight(const Distribution& d);
/// Mass-weighted location sum (h).
Rational wsum(const Distribution& d);

/// Total welfare when the mass in `indifferent` (dominated by d) does not
/// care about the facility and the rest dislikes it, with the facility at y:
///   sum |y - x| (gamma - gamma') + (1 + |x|) gamma'.
/// Throws InvalidInput if d does not dominate `indifferent` or y is outside
/// [-1, 1].
Rational phi(const Distribution& d, const Distribution& indifferent, const Rational& y);

/// phi(y_alt) / phi(y).
Ratio psi(const Distribution& d, const Distribution& indifferent, const Rational& y,
          const Rational& y_alt);

/// A worst-case ratio together with the adversary's preference split and
/// relocation attaining it.
struct BetaValue {
  Ratio value;
  Distribution indifferent;
  int relocation = 0;  // -1 or +1
};

struct EndpointBetas {
  BetaValue at_minus1;
  BetaValue at_plus1;
};

/// Worst-case ratios for a facility at -1 and at +1, in closed form:
///   beta(-1) = (Gamma - h + 2 h(D>0)) / (Gamma + h),
///   beta(+1) = (Gamma + h - 2 h(D<0)) / (Gamma - h).
/// Both are 1 for the empty distribution.
EndpointBetas beta_endpoints(const Distribution& d);

/// Worst-case ratio for a facility at 0: the best prefix of D<0 against a
/// relocation to -1 or the best suffix of D>0 against a relocation to +1,
/// scanned with running sums. Ties keep the earlier candidate (prefixes
/// before suffixes, shorter first). 1 for the empty distribution.
BetaValue beta_zero(const Distribution& d);

struct BetaReport {
  BetaValue minus1;
  BetaValue zero;
  BetaValue plus1;
  /// Least of {-1, 0, +1} minimizing beta.
  int chosen = -1;

  const BetaValue& at(int y) const;
};

BetaReport beta_report(const Distribution& d);

/// Brute-force worst-case ratio for a facility at y in {-1, 0, 1}. Every
/// pair independently gets gamma' = (j / gamma_grid) gamma, j = 0..gamma_grid,
/// and the relocation ranges over {-1, +1} plus, if y_grid > 0, the interior
/// points -1 + 2t / y_grid. Throws ResourceLimit once more than
/// max_evaluations splits would be visited.
Ratio brute_beta(const Distribution& d, int y, int gamma_grid = 1, int y_grid = 0,
                 std::size_t max_evaluations = std::size_t{1} << 22);

/// The prefix of D<0 (resp. suffix of D>0) that beta_zero maximizes, using
/// the least length among ties.
Distribution worst_prefix(const Distribution& d);
Distribution worst_suffix(const Distribution& d);

/// A special distribution with the same beta at -1, 0 and +1: the blocks
/// worst prefix, rest of D<0, D=0, rest of D>0 and worst suffix are each
/// collapsed to one pair at their centroid. Throws PreconditionError for a
/// trivial distribution.
Distribution specialize(const Distribution& d);

/// Agents of a single-facility path instance on [-1, 1] via x -> 2x - 1,
/// co-located agents merged (gamma = agent count). Reports are ignored.
Distribution distribution_of(const Instance& inst);

/// Single facility on the path at 0, 1/2 or 1, whichever of -1, 0, +1 has
/// the least worst-case ratio for distribution_of(inst). SGSP; 5/3-efficient.
/// Throws PreconditionError unless k = 1.
Solution five_thirds_mechanism(const Instance& inst);

}  // namespace ofl
