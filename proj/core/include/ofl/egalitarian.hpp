#pragma once

#include "ofl/core.hpp"

#include <cstddef>
#include <vector>

namespace ofl {

/// Single-facility instance for facility j (0-based): same locations, agent i
/// dislikes the one facility iff it dislikes F_j in inst.
Instance single_projection(const Instance& inst, int j);

/// Runs a single-facility mechanism on every projection; y_j is its output on
/// single_projection(inst, j). Preserves SP and egalitarian optimality.
Solution parallel(const Mechanism& single, const Instance& inst);

/// Interval structure of the sorted hater locations on the path (at least two
/// haters): distance of the leftmost hater from 0 (d1), half the leftmost
/// largest gap between consecutive haters (d2), distance of the rightmost
/// hater from 1 (d3), the gap midpoint m and the gap's left index s.
struct GapAnalysis {
  Rational d1, d2, d3, m;
  std::size_t s = 0;
};

/// Throws PreconditionError for fewer than two locations.
GapAnalysis analyze_path_gaps(std::vector<Rational> hater_locations);

/// Path, k = 1. Egalitarian and SP. No haters: 0. One hater: 0 if d1 >= d3,
/// else 1. Otherwise 0 if d1 >= d2 and d1 >= d3, m if d2 >= d3, else 1.
Solution path_gap_mechanism(const Instance& inst);

/// Cycle, k = 1. Egalitarian and SP. No haters: 0. One hater: its antipode.
/// Otherwise the midpoint of the largest clockwise gap between consecutive
/// haters (smallest gap index on ties, haters sorted by coordinate).
Solution cycle_gap_mechanism(const Instance& inst);

enum class CandidateKind { Corner, BisectorBoundary, Circumcenter };

struct SquareCandidate {
  Point point;
  CandidateKind kind;
};

/// Every point where the min distance to the haters can peak inside the
/// square: the corners, intersections of pairwise perpendicular bisectors
/// with the boundary, and circumcenters of non-collinear triples lying in
/// the square. A superset of the Voronoi candidates, all with exact rational
/// coordinates. Repeated hater locations are merged. Throws
/// PreconditionError on an empty list.
std::vector<SquareCandidate> square_candidates(const std::vector<Point>& hater_locations);

/// No repeated locations, no three collinear, no four cocircular.
bool in_general_position(const std::vector<Point>& locations);

/// Square, k = 1. Egalitarian; SP for haters in general position. No
/// haters: (0, 0). Otherwise the candidate maximizing the min squared
/// distance to the haters, ties going to ascending x, then ascending y.
/// Inputs outside general position get a best-effort answer.
Solution square_empty_circle_mechanism(const Instance& inst);

/// Egalitarian multi-facility mechanisms: parallel() over the above.
Solution path_gap_parallel(const Instance& inst);
Solution cycle_gap_parallel(const Instance& inst);
Solution square_empty_circle_parallel(const Instance& inst);

/// Report-independent variants: every agent treated as disliking a single
/// facility, all k facilities built at the point the single-facility rule
/// picks. SGSP; min welfare >= 1/(2(n+1)) on the path and >= 1/(2n) on the
/// cycle.
Solution path_gap_uniform(const Instance& inst);
Solution cycle_gap_uniform(const Instance& inst);

}  // namespace ofl
