#pragma once

#include "ofl/core.hpp"
#include "ofl/rational.hpp"

#include <initializer_list>
#include <string_view>
#include <vector>

namespace ofl::test {

inline Rational R(std::string_view text) { return Rational::parse(text); }

/// Dislikes are 1-based, as in instance files.
inline FacilitySet dislike(std::initializer_list<int> facilities) {
  FacilitySet s;
  for (int f : facilities) s.insert(f - 1);
  return s;
}

inline Agent agent(std::string_view x, std::initializer_list<int> facilities) {
  return {Point(R(x)), dislike(facilities)};
}

inline Agent agent2(std::string_view x, std::string_view y, std::initializer_list<int> facilities) {
  return {Point(R(x), R(y)), dislike(facilities)};
}

inline Solution on_line(std::initializer_list<std::string_view> ys) {
  Solution s;
  for (auto y : ys) s.placements.emplace_back(R(y));
  return s;
}

inline Instance path(int k, std::vector<Agent> agents) { return Instance(SpaceKind::Path, k, std::move(agents)); }
inline Instance cycle(int k, std::vector<Agent> agents) { return Instance(SpaceKind::Cycle, k, std::move(agents)); }
inline Instance square(int k, std::vector<Agent> agents) { return Instance(SpaceKind::Square, k, std::move(agents)); }

/// The two-agent tightness instance: agent at 0 dislikes F1, agent at 1 dislikes F2.
inline Instance tightness_instance() { return path(2, {agent("0", {1}), agent("1", {2})}); }

/// Every aversion profile of the instance, in increasing mixed-radix order.
template <typename F>
void for_each_profile(const Instance& inst, F&& f) {
  const std::uint64_t per = std::uint64_t{1} << inst.k();
  std::vector<FacilitySet> reports(inst.n());
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < inst.n(); ++i) total *= per;
  for (std::uint64_t code = 0; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < inst.n(); ++i) {
      reports[i] = FacilitySet(c % per);
      c /= per;
    }
    f(inst.with_reports(reports));
  }
}

}  // namespace ofl::test
