#include "ofl/audit.hpp"

#include "ofl/error.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace ofl {

std::string_view to_string(Property p) {
  switch (p) {
    case Property::SP: return "sp";
    case Property::WGSP: return "wgsp";
    case Property::SGSP: return "sgsp";
  }
  return "?";
}

std::optional<Property> parse_property(std::string_view name) {
  if (name == "sp") return Property::SP;
  if (name == "wgsp") return Property::WGSP;
  if (name == "sgsp") return Property::SGSP;
  return std::nullopt;
}

std::string_view to_string(Objective o) { return o == Objective::SW ? "sw" : "mw"; }

std::optional<Objective> parse_objective(std::string_view name) {
  if (name == "sw") return Objective::SW;
  if (name == "mw") return Objective::MW;
  return std::nullopt;
}

namespace {

// Gains of the members: +1 strictly better, 0 equal, -1 strictly worse.
bool violates_gains(Property p, const std::vector<int>& gain) {
  const bool any_gain = std::any_of(gain.begin(), gain.end(), [](int g) { return g > 0; });
  const bool any_loss = std::any_of(gain.begin(), gain.end(), [](int g) { return g < 0; });
  const bool all_gain = std::all_of(gain.begin(), gain.end(), [](int g) { return g > 0; });
  switch (p) {
    case Property::SP: return gain.size() == 1 && gain.front() > 0;
    case Property::WGSP: return !gain.empty() && all_gain;
    case Property::SGSP: return any_gain && !any_loss;
  }
  return false;
}

void check_coalition(const std::vector<std::size_t>& coalition, std::size_t n, std::size_t reports) {
  if (coalition.empty()) throw InvalidInput("coalition must be nonempty");
  if (coalition.size() != reports) throw InvalidInput("one report per coalition member is required");
  for (std::size_t t = 0; t < coalition.size(); ++t) {
    if (coalition[t] >= n) throw InvalidInput("coalition member out of range");
    if (t > 0 && coalition[t] <= coalition[t - 1]) {
      throw InvalidInput("coalition members must be strictly increasing");
    }
  }
}

// Visits coalitions of each size in [1, max_size] in size-then-lex order
// until visit returns true.
template <typename Visit>
bool for_each_coalition(std::size_t n, std::size_t max_size, Visit&& visit) {
  for (std::size_t s = 1; s <= std::min(max_size, n); ++s) {
    std::vector<std::size_t> c(s);
    for (std::size_t i = 0; i < s; ++i) c[i] = i;
    while (true) {
      if (visit(c)) return true;
      std::size_t i = s;
      while (i > 0 && c[i - 1] == n - s + (i - 1)) --i;
      if (i == 0) break;
      ++c[i - 1];
      for (std::size_t t = i; t < s; ++t) c[t] = c[t - 1] + 1;
    }
  }
  return false;
}

// Visits joint reports (digits in [0, base)) lexicographically, first member
// most significant, skipping `truthful`, until visit returns true.
template <typename Visit>
bool for_each_joint_report(const std::vector<std::uint64_t>& truthful, std::uint64_t base, Visit&& visit) {
  const std::size_t s = truthful.size();
  std::vector<std::uint64_t> r(s, 0);
  while (true) {
    if (r != truthful && visit(r)) return true;
    std::size_t i = s;
    while (i > 0 && r[i - 1] + 1 == base) r[--i] = 0;
    if (i == 0) return false;
    ++r[i - 1];
  }
}

std::size_t coalition_limit(const AuditCaps& caps, Property p, std::size_t n) {
  if (p == Property::SP) return 1;
  return caps.max_coalition == 0 ? n : caps.max_coalition;
}

}  // namespace

ManipulationWitness evaluate_deviation(const Mechanism& mech, const Instance& truth,
                                       const std::vector<std::size_t>& coalition,
                                       const std::vector<FacilitySet>& reports) {
  check_coalition(coalition, truth.n(), reports.size());
  auto profile = truth.reports();
  for (std::size_t t = 0; t < coalition.size(); ++t) profile[coalition[t]] = reports[t];

  ManipulationWitness w;
  w.coalition = coalition;
  w.reports = reports;
  w.truthful_outcome = mech(truth);
  w.manipulated_outcome = mech(truth.with_reports(profile));
  for (std::size_t i : coalition) {
    w.welfare_before.push_back(agent_welfare(truth, i, w.truthful_outcome));
    w.welfare_after.push_back(agent_welfare(truth, i, w.manipulated_outcome));
  }
  return w;
}

bool violates(Property p, const ManipulationWitness& w) {
  std::vector<int> gain;
  for (std::size_t t = 0; t < w.coalition.size(); ++t) {
    const auto c = w.welfare_after[t] <=> w.welfare_before[t];
    gain.push_back(c > 0 ? 1 : (c < 0 ? -1 : 0));
  }
  return violates_gains(p, gain);
}

std::optional<ManipulationWitness> find_manipulation(const Mechanism& mech, const Instance& truth,
                                                     Property p, const AuditCaps& caps) {
  const std::size_t n = truth.n();
  const int k = truth.k();
  if (n > caps.max_agents) {
    throw ResourceLimit("audit: n = " + std::to_string(n) + " exceeds the agent cap of " +
                        std::to_string(caps.max_agents));
  }
  if (k > caps.max_facilities) {
    throw ResourceLimit("audit: k = " + std::to_string(k) + " exceeds the facility cap of " +
                        std::to_string(caps.max_facilities));
  }

  const Solution truthful_outcome = mech(truth);
  std::vector<Length> before;
  for (std::size_t i = 0; i < n; ++i) before.push_back(agent_welfare(truth, i, truthful_outcome));

  const auto truthful_profile = truth.reports();
  const std::uint64_t base = std::uint64_t{1} << k;
  std::uint64_t evaluations = 0;
  std::optional<ManipulationWitness> found;

  for_each_coalition(n, coalition_limit(caps, p, n), [&](const std::vector<std::size_t>& c) {
    std::vector<std::uint64_t> truthful(c.size());
    for (std::size_t t = 0; t < c.size(); ++t) truthful[t] = truthful_profile[c[t]].bits();
    return for_each_joint_report(truthful, base, [&](const std::vector<std::uint64_t>& r) {
      if (++evaluations > caps.max_evaluations) {
        throw ResourceLimit("audit: more than " + std::to_string(caps.max_evaluations) +
                            " mechanism evaluations");
      }
      auto profile = truthful_profile;
      for (std::size_t t = 0; t < c.size(); ++t) profile[c[t]] = FacilitySet(r[t]);
      const Solution out = mech(truth.with_reports(profile));
      std::vector<int> gain(c.size());
      for (std::size_t t = 0; t < c.size(); ++t) {
        const auto cmp = agent_welfare(truth, c[t], out) <=> before[c[t]];
        gain[t] = cmp > 0 ? 1 : (cmp < 0 ? -1 : 0);
        if (p != Property::SGSP && gain[t] <= 0) return false;
        if (p == Property::SGSP && gain[t] < 0) return false;
      }
      if (!violates_gains(p, gain)) return false;
      std::vector<FacilitySet> reports;
      for (auto bits : r) reports.emplace_back(bits);
      found = evaluate_deviation(mech, truth, c, reports);
      return true;
    });
  });
  return found;
}

std::optional<ManipulationWitness> check_sp(const Mechanism& mech, const Instance& truth,
                                            const AuditCaps& caps) {
  return find_manipulation(mech, truth, Property::SP, caps);
}

std::optional<ManipulationWitness> check_wgsp(const Mechanism& mech, const Instance& truth,
                                              const AuditCaps& caps) {
  return find_manipulation(mech, truth, Property::WGSP, caps);
}

std::optional<ManipulationWitness> check_sgsp(const Mechanism& mech, const Instance& truth,
                                              const AuditCaps& caps) {
  return find_manipulation(mech, truth, Property::SGSP, caps);
}

// ---------------------------------------------------------------------------

VotingDeviation evaluate_voting_deviation(const VotingRule& rule, const voting::VotingInstance& truth,
                                          const std::vector<std::size_t>& coalition,
                                          const std::vector<voting::CandidateSet>& reports) {
  check_coalition(coalition, truth.voter_count(), reports.size());
  auto tiers = truth.top_tiers();
  for (std::size_t t = 0; t < coalition.size(); ++t) tiers[coalition[t]] = reports[t];

  VotingDeviation d;
  d.witness.coalition = coalition;
  d.witness.reports = reports;
  d.witness.winner_before = rule(truth);
  d.witness.winner_after = rule(truth.with_top_tiers(tiers));
  for (std::size_t i : coalition) {
    const auto top = truth.voters()[i].top_tier;
    const int before = static_cast<int>((top >> d.witness.winner_before) & 1U);
    const int after = static_cast<int>((top >> d.witness.winner_after) & 1U);
    d.gain.push_back(after - before);
  }
  return d;
}

bool violates(Property p, const VotingDeviation& d) { return violates_gains(p, d.gain); }

std::optional<VotingWitness> find_voting_manipulation(const VotingRule& rule,
                                                      const voting::VotingInstance& truth, Property p,
                                                      const AuditCaps& caps) {
  const std::size_t m = truth.voter_count();
  const int c = truth.candidates();
  if (m > caps.max_agents) {
    throw ResourceLimit("audit: " + std::to_string(m) + " voters exceed the cap of " +
                        std::to_string(caps.max_agents));
  }
  if (c > caps.max_facilities) {
    throw ResourceLimit("audit: " + std::to_string(c) + " candidates exceed the cap of " +
                        std::to_string(caps.max_facilities));
  }
  const auto truthful_tiers = truth.top_tiers();
  const std::uint64_t base = std::uint64_t{1} << c;
  std::uint64_t evaluations = 0;
  std::optional<VotingWitness> found;

  for_each_coalition(m, coalition_limit(caps, p, m), [&](const std::vector<std::size_t>& coal) {
    std::vector<std::uint64_t> truthful(coal.size());
    for (std::size_t t = 0; t < coal.size(); ++t) truthful[t] = truthful_tiers[coal[t]];
    return for_each_joint_report(truthful, base, [&](const std::vector<std::uint64_t>& r) {
      if (++evaluations > caps.max_evaluations) {
        throw ResourceLimit("audit: more than " + std::to_string(caps.max_evaluations) +
                            " rule evaluations");
      }
      const std::vector<voting::CandidateSet> reports(r.begin(), r.end());
      VotingDeviation d = evaluate_voting_deviation(rule, truth, coal, reports);
      if (!violates(p, d)) return false;
      found = std::move(d.witness);
      return true;
    });
  });
  return found;
}

// ---------------------------------------------------------------------------

RatioSample measure_ratio(const Mechanism& mech, Objective objective, const Instance& inst,
                          const OracleOptions& opts) {
  RatioSample s;
  s.instance = inst;
  s.solution = mech(inst);
  if (objective == Objective::SW) {
    s.mechanism_value = social_welfare(inst, s.solution);
    s.oracle = oracle_sw(inst, opts);
  } else {
    Measure m{Rational(0), 0.0};
    m += min_welfare(inst, s.solution);
    s.mechanism_value = m;
    s.oracle = oracle_mw(inst, opts);
  }
  const double mv = s.mechanism_value.value;
  auto divide = [&](double num) {
    if (mv > 0.0) return num / mv;
    return num > 0.0 ? std::numeric_limits<double>::infinity() : 1.0;
  };
  s.ratio_lower = divide(s.oracle.value.value);
  s.ratio_upper = divide(s.oracle.upper);
  if (s.oracle.exact() && s.oracle.value.exact && s.mechanism_value.exact) {
    s.ratio = Ratio::of(*s.oracle.value.exact, *s.mechanism_value.exact);
    s.ratio_lower = s.ratio_upper = s.ratio->to_double();
  }
  return s;
}

RatioAuditReport ratio_audit(const Mechanism& mech, Objective objective, const InstanceSampler& sampler,
                             std::size_t trials, std::uint64_t seed, const OracleOptions& opts) {
  std::mt19937_64 rng(seed);
  RatioAuditReport report;
  for (std::size_t t = 0; t < trials; ++t) {
    RatioSample s = measure_ratio(mech, objective, sampler(rng), opts);
    s.trial = t;
    report.max_ratio_upper = std::max(report.max_ratio_upper, s.ratio_upper);
    if (t == 0 || s.ratio_lower > report.worst.ratio_lower) report.worst = std::move(s);
    ++report.trials;
  }
  return report;
}

// ---------------------------------------------------------------------------

UtilitarianLowerBound utilitarian_lower_bound(int n) {
  if (n < 2) throw InvalidInput("the utilitarian construction needs n >= 2");
  const Point left(Rational(0)), mid(Rational(1, 2)), right(Rational(1));
  const FacilitySet f1 = FacilitySet::single(0), none;

  auto build = [&](FacilitySet u_report, FacilitySet v_report) {
    std::vector<Agent> agents;
    agents.push_back({left, f1});
    agents.push_back({right, f1});
    for (int i = 0; i < n; ++i) agents.push_back({mid, f1});
    for (int i = 0; i < n - 1; ++i) agents.push_back({left, u_report});
    for (int i = 0; i < n - 1; ++i) agents.push_back({right, v_report});
    return Instance(SpaceKind::Path, 1, std::move(agents));
  };
  return {build(none, none), build(f1, none), build(none, f1)};
}

EgalitarianLowerBound egalitarian_lower_bound(int q) {
  if (q < 2 || q % 2 != 0) throw InvalidInput("the egalitarian construction needs an even q >= 2");
  const long q2 = static_cast<long>(q) * q;
  const FacilitySet f1 = FacilitySet::single(0), f2 = FacilitySet::single(1);

  std::vector<Agent> truth;
  std::vector<Agent> lies;
  for (long i = 1; i < q2; ++i) {
    if (2 * i == q2) continue;
    const Point at(Rational(i, q2));
    const bool lower = 2 * i < q2;
    const FacilitySet real = lower ? f2 : f1;
    FacilitySet reported = real;
    if (lower && i >= q) {
      reported = (i - q) % 2 == 0 ? f1 : f2;
    } else if (!lower && i <= q2 - q) {
      reported = (q2 - q - i) % 2 == 0 ? f2 : f1;
    }
    truth.push_back({at, real});
    lies.push_back({at, reported});
  }
  for (const Rational& x : {Rational(0), Rational(1, 2), Rational(1)}) {
    for (const FacilitySet f : {f1, f2}) {
      truth.push_back({Point(x), f});
      lies.push_back({Point(x), f});
    }
  }
  return {Instance(SpaceKind::Path, 2, std::move(truth)), Instance(SpaceKind::Path, 2, std::move(lies))};
}

}  // namespace ofl
