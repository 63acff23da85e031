#pragma once

#include "ofl/core.hpp"

namespace ofl {

/// Default cap on k for the 2^k scan of binary_welfare_maximizer.
inline constexpr int kDefaultBinaryScanCap = 20;

/// Path. Among all placements in {0,1}^k, the lexicographically least one
/// (0 < 1, first coordinate most significant) maximizing social welfare.
/// WGSP for every k; efficient for k <= 3. Throws ResourceLimit if k > cap.
Solution binary_welfare_maximizer(const Instance& inst, int k_cap = kDefaultBinaryScanCap);

/// Path. Every facility at 0 if sum x_i >= sum (1 - x_i), otherwise at 1.
/// Ignores the reports, hence SGSP; 2-efficient.
Solution path_endpoint_mechanism(const Instance& inst);

/// Cycle. Every facility at 0 if sum d(x_i, 0) >= sum d(x_i, 1/2), otherwise
/// at 1/2. SGSP; 2-efficient.
Solution cycle_endpoint_mechanism(const Instance& inst);

/// Square. Every facility at the corner with the largest total distance to
/// the agents, ties going to the lexicographically least corner. SGSP;
/// 2-efficient.
///
/// Corner sums are sums of square roots. They are compared in double
/// precision; sums within 1e-12 of each other are declared tied when the
/// two corners see the same multiset of squared distances, and otherwise
/// re-compared in extended precision.
Solution square_corner_mechanism(const Instance& inst);

}  // namespace ofl
