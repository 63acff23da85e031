#pragma once

#include "ofl/core.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace ofl {

enum class OracleMethod { ExactCandidates, ZeroOneEnum, Grid };

std::string_view to_string(OracleMethod m);

struct OracleOptions {
  /// Grid step for path and cycle scans.
  Rational grid_step{1, 200};
  /// Grid step for single-facility scans in the square.
  Rational square_grid_step{1, 400};
  /// Largest k solved exactly by arrangement enumeration (path and cycle SW).
  int exact_k_max = 3;
  /// Cross-check exact answers against a floating grid scan.
  bool grid_check = true;
  /// Grids with more points are coarsened to the finest 1/m that fits.
  std::size_t max_grid_points = 250000;
};

/// Best placement found for one objective and a certified upper bound on the
/// optimum. For exact methods upper == value.
struct OracleResult {
  OracleMethod method = OracleMethod::ExactCandidates;
  Solution solution;
  /// Objective at `solution`; exact on the path and the cycle.
  Measure value;
  /// The optimum is at most this.
  double upper = 0.0;
  /// Grid resolution actually used (1/m), if a grid was scanned.
  std::optional<Rational> grid_step;
  /// Best value over {0,1}^k (path SW only).
  std::optional<Measure> zero_one_value;
  /// Best value of the floating cross-check grid, if one ran.
  std::optional<double> grid_check_value;

  bool exact() const noexcept { return method != OracleMethod::Grid; }
};

/// Max social welfare on the path. Exact for k <= exact_k_max: SW is linear
/// on every cell of the arrangement cut out by y_j = 0, 1, x_i, y_j = y_l and
/// y_j + y_l = 2 x_i, so some arrangement vertex is optimal and all of them
/// are enumerated. Larger k falls back to a grid with additive bound n k step.
OracleResult oracle_sw_path(const Instance& inst, const OracleOptions& opts = {});

/// Max social welfare on the cycle; same method with the breakpoints
/// x_i +- 1/2 and the ties y_j - y_l in {-1, 0, 1}, y_j + y_l in 2 x_i + {-1, 0, 1}.
OracleResult oracle_sw_cycle(const Instance& inst, const OracleOptions& opts = {});

/// Max social welfare in the square by grid scan (step square_grid_step for
/// k = 1, coarsened to fit max_grid_points otherwise). The upper bound is
/// the smaller of value + n step and the sum of farthest-corner distances.
OracleResult oracle_sw_square(const Instance& inst, const OracleOptions& opts = {});

OracleResult oracle_sw(const Instance& inst, const OracleOptions& opts = {});

/// Exact max-min welfare for k = 1 on the path (candidates 0, 1, hater
/// locations, midpoints of hater pairs) or the cycle (0, antipodes, both
/// midpoints of every hater pair). Throws PreconditionError unless k = 1 and
/// the space is the path or cycle.
OracleResult oracle_mw_single(const Instance& inst, const OracleOptions& opts = {});

/// Max-min welfare in the square for k = 1 by grid scan of the given step;
/// the optimum is at most value + step * sqrt(2).
OracleResult oracle_mw_square_grid(const Instance& inst, const Rational& step = Rational(1, 400));

/// Max-min welfare for any k: the best single-facility answer for every
/// projection, combined by min with the indifferent agents' constants.
OracleResult oracle_mw_multi(const Instance& inst, const OracleOptions& opts = {});

OracleResult oracle_mw(const Instance& inst, const OracleOptions& opts = {});

struct MaxianResult {
  Rational endpoint;
  Rational value;
};

/// max over z in {a, b} of sum |z - z_i| (a wins ties). Throws InvalidInput
/// on an empty list, a > b, or a point outside [a, b].
MaxianResult one_maxian(const std::vector<Rational>& points, const Rational& a, const Rational& b);

/// sum |z - z_i|.
Rational total_distance(const std::vector<Rational>& points, const Rational& z);

}  // namespace ofl
