#include "ofl/mechanisms.hpp"

#include "ofl/egalitarian.hpp"
#include "ofl/error.hpp"
#include "ofl/fivethirds.hpp"
#include "ofl/utilitarian.hpp"

namespace ofl {

const std::vector<MechanismInfo>& mechanism_registry() {
  static const std::vector<MechanismInfo> registry = {
      {"mech2", SpaceKind::Path, false, [](const Instance& i) { return binary_welfare_maximizer(i); },
       "best placement in {0,1}^k by social welfare (WGSP)"},
      {"mech3", SpaceKind::Path, false, path_endpoint_mechanism, "all facilities at the heavier endpoint (SGSP, 2-efficient)"},
      {"mech4", SpaceKind::Path, true, five_thirds_mechanism, "least worst-case ratio among 0, 1/2, 1 (SGSP, 5/3-efficient)"},
      {"mech5", SpaceKind::Cycle, false, cycle_endpoint_mechanism, "all facilities at 0 or 1/2 (SGSP, 2-efficient)"},
      {"mech6", SpaceKind::Square, false, square_corner_mechanism, "all facilities at the farthest-sum corner (SGSP, 2-efficient)"},
      {"mech7", SpaceKind::Path, true, path_gap_mechanism, "largest-gap rule (SP, egalitarian)"},
      {"mech8", SpaceKind::Path, false, path_gap_parallel, "largest-gap rule per facility (SP, egalitarian)"},
      {"mech8s", SpaceKind::Path, false, path_gap_uniform, "report-independent largest-gap rule (SGSP)"},
      {"mech9", SpaceKind::Cycle, true, cycle_gap_mechanism, "largest circular gap (SP, egalitarian)"},
      {"mech10", SpaceKind::Cycle, false, cycle_gap_parallel, "largest circular gap per facility (SP, egalitarian)"},
      {"mech10s", SpaceKind::Cycle, false, cycle_gap_uniform, "report-independent largest circular gap (SGSP)"},
      {"mech11", SpaceKind::Square, true, square_empty_circle_mechanism, "largest empty circle (SP, egalitarian)"},
      {"mech12", SpaceKind::Square, false, square_empty_circle_parallel, "largest empty circle per facility (SP, egalitarian)"},
  };
  return registry;
}

const MechanismInfo* find_mechanism(std::string_view name) {
  for (const auto& m : mechanism_registry()) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

std::string valid_mechanism_pairs() {
  std::string s;
  for (const auto& m : mechanism_registry()) {
    if (!s.empty()) s += ", ";
    s += m.name + " (" + std::string(to_string(m.space)) + (m.single_facility ? ", k = 1)" : ")");
  }
  return s;
}

void check_compatible(const MechanismInfo& info, const Instance& inst) {
  if (info.space != inst.space() || (info.single_facility && inst.k() != 1)) {
    throw InvalidInput(info.name + " does not accept a " + std::string(to_string(inst.space())) +
                       " instance with k = " + std::to_string(inst.k()) +
                       "; valid pairs: " + valid_mechanism_pairs());
  }
}

Solution run_mechanism(std::string_view name, const Instance& inst) {
  const MechanismInfo* info = find_mechanism(name);
  if (!info) {
    throw InvalidInput("unknown mechanism '" + std::string(name) + "'; valid pairs: " + valid_mechanism_pairs());
  }
  check_compatible(*info, inst);
  return info->run(inst);
}

}  // namespace ofl
