#pragma once

#include "ofl/core.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace ofl {

/// A named facility-location mechanism and the inputs it accepts.
struct MechanismInfo {
  std::string name;
  SpaceKind space;
  /// Accepts only k = 1.
  bool single_facility;
  Mechanism run;
  std::string summary;
};

/// Every facility-location mechanism, in name order mech2 .. mech12 with the
/// report-independent variants mech8s and mech10s.
const std::vector<MechanismInfo>& mechanism_registry();

/// nullptr for an unknown name.
const MechanismInfo* find_mechanism(std::string_view name);

/// "mech2 (path), mech3 (path), ..." for usage messages.
std::string valid_mechanism_pairs();

/// Runs a mechanism by name after checking it accepts the instance. Throws
/// InvalidInput naming the valid mechanism/space pairs otherwise.
Solution run_mechanism(std::string_view name, const Instance& inst);

/// Throws InvalidInput unless the mechanism accepts the instance's space and k.
void check_compatible(const MechanismInfo& info, const Instance& inst);

}  // namespace ofl
