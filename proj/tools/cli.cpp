#include "cli.hpp"

#include "ofl/audit.hpp"
#include "ofl/egalitarian.hpp"
#include "ofl/error.hpp"
#include "ofl/fivethirds.hpp"
#include "ofl/io.hpp"
#include "ofl/mechanisms.hpp"
#include "ofl/oracle.hpp"
#include "ofl/sampling.hpp"
#include "ofl/voting.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>

namespace ofl::cli {

namespace {

using nlohmann::json;

struct Options {
  std::string mechanism;
  std::string instance;
  std::string out;
  std::uint64_t seed = 0;
  std::size_t trials = 100;
  std::string grid_step;
  std::size_t coalition_cap = 0;
  std::size_t max_agents = 0;
  std::string objective;
  std::string property;
  bool ratio = false;
  int n = 0;
  int q = 0;
  std::vector<std::string> mechanisms;
};

class Usage : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open file");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const Options& o, std::ostream& out, const std::string& text) {
  if (o.out.empty()) {
    out << text << '\n';
    return;
  }
  std::ofstream f(o.out, std::ios::binary);
  if (!f) throw Usage("cannot write '" + o.out + "'");
  f << text << '\n';
}

json as_json(const std::string& text) { return json::parse(text); }

std::string dump(const json& j) { return j.dump(2); }

std::string fixed(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

const MechanismInfo& mechanism_named(const std::string& name) {
  const MechanismInfo* info = find_mechanism(name);
  if (!info) {
    throw Usage("unknown mechanism '" + name + "'; valid pairs: mech1 (voting), " + valid_mechanism_pairs());
  }
  return *info;
}

OracleOptions oracle_options(const Options& o) {
  OracleOptions opts;
  if (!o.grid_step.empty()) {
    Rational step;
    try {
      step = Rational::parse(o.grid_step);
    } catch (const Error& e) {
      throw Usage(std::string("--grid-step: ") + e.what());
    }
    if (step.sign() <= 0 || step > Rational(1)) throw Usage("--grid-step must lie in (0, 1]");
    opts.grid_step = step;
    opts.square_grid_step = step;
  }
  return opts;
}

AuditCaps audit_caps(const Options& o) {
  AuditCaps caps;
  caps.max_coalition = o.coalition_cap;
  if (o.max_agents > 0) caps.max_agents = o.max_agents;
  return caps;
}

/// Random instances for audits and benches of one mechanism.
InstanceShape shape_for(const MechanismInfo& info) {
  InstanceShape shape;
  shape.space = info.space;
  shape.max_agents = 5;
  shape.max_facilities = info.single_facility ? 1 : 2;
  shape.general_position = info.space == SpaceKind::Square;
  return shape;
}

Objective default_objective(const MechanismInfo& info) {
  static const std::vector<std::string> utilitarian = {"mech2", "mech3", "mech4", "mech5", "mech6"};
  return std::find(utilitarian.begin(), utilitarian.end(), info.name) != utilitarian.end() ? Objective::SW
                                                                                           : Objective::MW;
}

Objective objective_of(const Options& o, const MechanismInfo& info) {
  if (o.objective.empty()) return default_objective(info);
  auto obj = parse_objective(o.objective);
  if (!obj) throw Usage("--objective must be sw or mw");
  return *obj;
}

void warn_degenerate(const MechanismInfo& info, const Instance& inst, std::ostream& err) {
  if (info.name != "mech11" && info.name != "mech12") return;
  for (int j = 0; j < inst.k(); ++j) {
    std::vector<Point> pts;
    for (std::size_t i : haters(inst, j)) pts.push_back(inst.agent(i).location);
    if (!in_general_position(pts)) {
      err << "warning: haters of F" << j + 1
          << " are not in general position; the result is best effort\n";
    }
  }
}

// ---------------------------------------------------------------------------

int cmd_solve(const Options& o, std::ostream& out, std::ostream& err) {
  if (o.mechanism == "mech1") throw Usage("mech1 runs on voting files; use the vote subcommand");
  const MechanismInfo& info = mechanism_named(o.mechanism);
  const Instance inst = io::parse_instance(read_file(o.instance));
  check_compatible(info, inst);
  warn_degenerate(info, inst, err);
  const Solution y = info.run(inst);
  if (info.name == "mech4") {
    const BetaReport report = beta_report(distribution_of(inst));
    emit(o, out, io::result_to_json(info.name, inst, y, &report));
  } else {
    emit(o, out, io::result_to_json(info.name, inst, y));
  }
  return kSuccess;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const Instance inst = io::parse_instance(read_file(o.instance));
  auto obj = parse_objective(o.objective);
  if (!obj) throw Usage("--objective must be sw or mw");
  const OracleOptions opts = oracle_options(o);
  const OracleResult r = *obj == Objective::SW ? oracle_sw(inst, opts) : oracle_mw(inst, opts);
  json doc = {{"objective", std::string(to_string(*obj))}, {"instance", as_json(io::instance_to_json(inst))}};
  doc["oracle"] = as_json(io::oracle_result_to_json(r));
  emit(o, out, dump(doc));
  return kSuccess;
}

int audit_voting(const Options& o, Property p, std::ostream& out) {
  const AuditCaps caps = audit_caps(o);
  auto run_one = [&](const voting::VotingInstance& vi, const std::vector<int>& order) {
    const VotingRule rule = [order](const voting::VotingInstance& v) { return voting::elect(v, order); };
    return find_voting_manipulation(rule, vi, p, caps);
  };
  json doc = {{"mechanism", "mech1"}, {"property", std::string(to_string(p))}};
  bool found = false;
  if (!o.instance.empty()) {
    const io::VotingFile file = io::parse_voting(read_file(o.instance));
    const auto w = run_one(file.instance, file.tie_order);
    found = w.has_value();
    doc["witness"] = w ? as_json(io::voting_witness_to_json(*w, p)) : json(nullptr);
  } else {
    std::mt19937_64 rng(o.seed);
    std::size_t violations = 0;
    json first = nullptr;
    for (std::size_t t = 0; t < o.trials; ++t) {
      const voting::VotingInstance vi = sample_voting(rng, 3, 4);
      if (auto w = run_one(vi, {})) {
        if (violations++ == 0) {
          first = as_json(io::voting_witness_to_json(*w, p));
          first["trial"] = t;
          first["instance"] = as_json(io::voting_to_json({vi, {}}));
        }
      }
    }
    found = violations > 0;
    doc["seed"] = o.seed;
    doc["trials"] = o.trials;
    doc["violations"] = violations;
    doc["first_witness"] = first;
  }
  emit(o, out, dump(doc));
  return found ? kWitnessFound : kSuccess;
}

int audit_property(const Options& o, std::ostream& out) {
  auto p = parse_property(o.property);
  if (!p) throw Usage("--property must be sp, wgsp or sgsp");
  if (o.mechanism == "mech1") return audit_voting(o, *p, out);
  const MechanismInfo& info = mechanism_named(o.mechanism);
  const AuditCaps caps = audit_caps(o);
  json doc = {{"mechanism", info.name}, {"property", std::string(to_string(*p))}};
  bool found = false;
  if (!o.instance.empty()) {
    const Instance inst = io::parse_instance(read_file(o.instance));
    check_compatible(info, inst);
    const auto w = find_manipulation(info.run, inst, *p, caps);
    found = w.has_value();
    doc["witness"] = w ? as_json(io::witness_to_json(*w, inst, *p)) : json(nullptr);
  } else {
    std::mt19937_64 rng(o.seed);
    const InstanceShape shape = shape_for(info);
    std::size_t violations = 0;
    json first = nullptr;
    for (std::size_t t = 0; t < o.trials; ++t) {
      const Instance inst = sample_instance(rng, shape);
      if (auto w = find_manipulation(info.run, inst, *p, caps)) {
        if (violations++ == 0) {
          first = as_json(io::witness_to_json(*w, inst, *p));
          first["trial"] = t;
          first["instance"] = as_json(io::instance_to_json(inst));
        }
      }
    }
    found = violations > 0;
    doc["seed"] = o.seed;
    doc["trials"] = o.trials;
    doc["violations"] = violations;
    doc["first_witness"] = first;
  }
  emit(o, out, dump(doc));
  return found ? kWitnessFound : kSuccess;
}

int audit_ratio(const Options& o, std::ostream& out) {
  const MechanismInfo& info = mechanism_named(o.mechanism);
  const Objective obj = objective_of(o, info);
  const OracleOptions opts = oracle_options(o);
  json doc;
  if (!o.instance.empty()) {
    const Instance inst = io::parse_instance(read_file(o.instance));
    check_compatible(info, inst);
    RatioSample s = measure_ratio(info.run, obj, inst, opts);
    s.instance = inst;
    doc = as_json(io::ratio_sample_to_json(s, info.name, obj));
  } else {
    const InstanceShape shape = shape_for(info);
    const InstanceSampler sampler = [shape](std::mt19937_64& rng) { return sample_instance(rng, shape); };
    const RatioAuditReport report = ratio_audit(info.run, obj, sampler, o.trials, o.seed, opts);
    doc = {{"seed", o.seed}, {"trials", report.trials}, {"max_ratio_upper", report.max_ratio_upper}};
    doc["worst"] = as_json(io::ratio_sample_to_json(report.worst, info.name, obj));
  }
  emit(o, out, dump(doc));
  return kSuccess;
}

int cmd_audit(const Options& o, std::ostream& out) {
  if (o.ratio == !o.property.empty()) throw Usage("audit needs exactly one of --property or --ratio");
  return o.ratio ? audit_ratio(o, out) : audit_property(o, out);
}

int cmd_lowerbound_utilitarian(const Options& o, std::ostream& out) {
  const UtilitarianLowerBound lb = utilitarian_lower_bound(o.n);
  const OracleOptions opts = oracle_options(o);
  const OracleResult opt_u = oracle_sw_path(lb.u_lies, opts);
  const OracleResult opt_v = oracle_sw_path(lb.v_lies, opts);
  const Rational bound = Rational(5) / 3 - Rational(2, 3 * static_cast<long>(o.n));
  json forced = json::array();
  bool holds = true;
  for (const Rational& y : {Rational(0), Rational(1, 2), Rational(1)}) {
    const Solution s = uniform_solution(1, Point(y));
    const Ratio ru = Ratio::of(*opt_u.value.exact, *social_welfare(lb.u_lies, s).exact);
    const Ratio rv = Ratio::of(*opt_v.value.exact, *social_welfare(lb.v_lies, s).exact);
    const Ratio worst = std::max(ru, rv);
    holds = holds && worst >= Ratio(bound);
    forced.push_back({{"y", y.str()}, {"ratio_u_lies", ru.str()}, {"ratio_v_lies", rv.str()}, {"forced", worst.str()}});
  }
  json doc = {{"construction", "utilitarian"},
              {"n", o.n},
              {"agents", lb.truthful.n()},
              {"opt_u_lies", opt_u.value.exact->str()},
              {"opt_v_lies", opt_v.value.exact->str()},
              {"expected_opt", (Rational(5 * static_cast<long>(o.n), 2) - 1).str()},
              {"bound", bound.str()},
              {"forced_ratios", forced},
              {"bound_holds", holds},
              {"mech4_truthful", five_thirds_mechanism(lb.truthful).placements[0].str()}};
  doc["truthful"] = as_json(io::instance_to_json(lb.truthful));
  emit(o, out, dump(doc));
  return kSuccess;
}

int cmd_lowerbound_egalitarian(const Options& o, std::ostream& out) {
  const EgalitarianLowerBound lb = egalitarian_lower_bound(o.q);
  const OracleOptions opts = oracle_options(o);
  const OracleResult opt = oracle_mw(lb.truthful, opts);
  const OracleResult opt_lies = oracle_mw(lb.lies, opts);
  AuditCaps caps = audit_caps(o);
  caps.max_agents = std::max(caps.max_agents, lb.truthful.n());
  if (caps.max_coalition == 0) caps.max_coalition = 2;
  const Mechanism mech8 = path_gap_parallel;
  const auto witness = check_wgsp(mech8, lb.truthful, caps);
  json doc = {{"construction", "egalitarian"},
              {"q", o.q},
              {"agents", lb.truthful.n()},
              {"opt", opt.value.exact->str()},
              {"opt_lies", opt_lies.value.exact->str()},
              {"expected_opt", "1/4"},
              {"expected_opt_lies", Rational(1, 2 * static_cast<long>(o.q)).str()},
              {"mech8_truthful_mw", io::length_text(min_welfare(lb.truthful, mech8(lb.truthful)))},
              {"mech8_lies_mw", io::length_text(min_welfare(lb.lies, mech8(lb.lies)))},
              {"coalition_cap", caps.max_coalition}};
  doc["mech8_wgsp_witness"] = witness ? as_json(io::witness_to_json(*witness, lb.truthful, Property::WGSP))
                                      : json(nullptr);
  doc["truthful"] = as_json(io::instance_to_json(lb.truthful));
  doc["lies"] = as_json(io::instance_to_json(lb.lies));
  emit(o, out, dump(doc));
  return kSuccess;
}

int cmd_vote(const Options& o, std::ostream& out) {
  const io::VotingFile file = io::parse_voting(read_file(o.instance));
  json approvals = json::array();
  for (int c = 0; c < file.instance.candidates(); ++c) approvals.push_back(voting::approval(file.instance, c).str());
  json doc = {{"approvals", approvals}, {"winner", voting::elect(file.instance, file.tie_order) + 1}};
  emit(o, out, dump(doc));
  return kSuccess;
}

int cmd_beta(const Options& o, std::ostream& out) {
  const Distribution d = io::parse_distribution(read_file(o.instance));
  json doc = {{"distribution", as_json(io::distribution_to_json(d))}};
  doc["report"] = as_json(io::beta_report_to_json(beta_report(d)));
  emit(o, out, dump(doc));
  return kSuccess;
}

int cmd_bench(const Options& o, std::ostream& out) {
  std::vector<const MechanismInfo*> selected;
  if (o.mechanisms.empty()) {
    for (const auto& m : mechanism_registry()) selected.push_back(&m);
  } else {
    for (const auto& name : o.mechanisms) selected.push_back(&mechanism_named(name));
  }
  const OracleOptions opts = oracle_options(o);
  std::ostringstream csv;
  csv << "instance-id,mechanism,objective,mech-value,oracle-value,ratio\n";
  for (const MechanismInfo* info : selected) {
    const Objective obj = objective_of(o, *info);
    const InstanceShape shape = shape_for(*info);
    std::mt19937_64 rng(o.seed);
    for (std::size_t t = 0; t < o.trials; ++t) {
      const Instance inst = sample_instance(rng, shape);
      const RatioSample s = measure_ratio(info->run, obj, inst, opts);
      csv << t << ',' << info->name << ',' << to_string(obj) << ',' << io::measure_text(s.mechanism_value) << ','
          << io::measure_text(s.oracle.value) << ',' << (s.ratio ? s.ratio->str() : fixed(s.ratio_lower)) << '\n';
    }
  }
  std::string text = csv.str();
  text.pop_back();
  emit(o, out, text);
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Obnoxious facility location mechanisms, oracles and audits", "ofl"};
  app.require_subcommand(1);

  auto add_out = [&](CLI::App* c) { c->add_option("--out", o.out, "Write the result document to FILE"); };
  auto add_instance = [&](CLI::App* c, bool required) {
    auto* opt = c->add_option("--instance", o.instance, "Input file");
    if (required) opt->required();
  };
  auto add_sampling = [&](CLI::App* c) {
    c->add_option("--seed", o.seed, "PRNG seed")->capture_default_str();
    c->add_option("--trials", o.trials, "Number of sampled instances")->capture_default_str();
  };
  auto add_grid = [&](CLI::App* c) { c->add_option("--grid-step", o.grid_step, "Oracle grid step p/q"); };

  auto* solve = app.add_subcommand("solve", "Run a mechanism on an instance file");
  solve->add_option("--mechanism", o.mechanism, "Mechanism name")->required();
  add_instance(solve, true);
  add_out(solve);

  auto* oracle = app.add_subcommand("oracle", "Optimal social or minimum welfare of an instance");
  oracle->add_option("--objective", o.objective, "sw or mw")->required();
  add_instance(oracle, true);
  add_grid(oracle);
  add_out(oracle);

  auto* audit = app.add_subcommand("audit", "Search for manipulations or measure approximation ratios");
  audit->add_option("--property", o.property, "sp, wgsp or sgsp");
  audit->add_flag("--ratio", o.ratio, "Audit the approximation ratio instead");
  audit->add_option("--objective", o.objective, "sw or mw (ratio audits)");
  audit->add_option("--mechanism", o.mechanism, "Mechanism name (mech1 for voting files)")->required();
  add_instance(audit, false);
  add_sampling(audit);
  add_grid(audit);
  audit->add_option("--coalition-cap", o.coalition_cap, "Largest coalition searched (0 = all)");
  audit->add_option("--max-agents", o.max_agents, "Largest instance the search accepts");
  add_out(audit);

  auto* lower = app.add_subcommand("lowerbound", "Build and verify a lower-bound construction");
  lower->require_subcommand(1);
  auto* lb_util = lower->add_subcommand("utilitarian", "Instances forcing ratio 5/3 - 2/(3n) on SGSP mechanisms");
  lb_util->add_option("--n", o.n, "Size parameter (n >= 2)")->required();
  add_grid(lb_util);
  add_out(lb_util);
  auto* lb_egal = lower->add_subcommand("egalitarian", "Instance pair forcing ratio q/4 on WGSP mechanisms");
  lb_egal->add_option("--q", o.q, "Even size parameter (q >= 2)")->required();
  lb_egal->add_option("--coalition-cap", o.coalition_cap, "Largest coalition searched for mech8 (default 2)");
  add_out(lb_egal);

  auto* vote = app.add_subcommand("vote", "Weighted approval vote on a voting file");
  add_instance(vote, true);
  add_out(vote);

  auto* beta = app.add_subcommand("beta", "Worst-case ratios at -1, 0, +1 for a distribution file");
  add_instance(beta, true);
  add_out(beta);

  auto* bench = app.add_subcommand("bench", "CSV of mechanism value against oracle value");
  bench->add_option("--mechanism", o.mechanisms, "Mechanism name (repeatable; default all)");
  bench->add_option("--objective", o.objective, "sw or mw (default per mechanism)");
  add_sampling(bench);
  add_grid(bench);
  add_out(bench);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsage;
  }

  try {
    if (solve->parsed()) return cmd_solve(o, out, err);
    if (oracle->parsed()) return cmd_oracle(o, out);
    if (audit->parsed()) return cmd_audit(o, out);
    if (lb_util->parsed()) return cmd_lowerbound_utilitarian(o, out);
    if (lb_egal->parsed()) return cmd_lowerbound_egalitarian(o, out);
    if (vote->parsed()) return cmd_vote(o, out);
    if (beta->parsed()) return cmd_beta(o, out);
    if (bench->parsed()) return cmd_bench(o, out);
  } catch (const Usage& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kParse;
  } catch (const ResourceLimit& e) {
    err << "resource cap: " << e.what() << '\n';
    return kResourceCap;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace ofl::cli
