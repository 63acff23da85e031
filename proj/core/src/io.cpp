#include "ofl/io.hpp"

#include "ofl/error.hpp"

#include <json.hpp>

#include <algorithm>

namespace ofl::io {

using nlohmann::json;

namespace {

// ---------------------------------------------------------------------------
// Reading

std::string locate(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

json parse_document(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(locate(text, e.byte == 0 ? 0 : e.byte - 1), "malformed JSON");
  }
}

std::string child(const std::string& ptr, std::string_view key) { return ptr + "/" + std::string(key); }
std::string child(const std::string& ptr, std::size_t index) { return ptr + "/" + std::to_string(index); }

const json& field(const json& obj, const std::string& ptr, std::string_view key) {
  if (!obj.is_object()) throw ParseError(ptr.empty() ? "/" : ptr, "expected an object");
  auto it = obj.find(std::string(key));
  if (it == obj.end()) throw ParseError(child(ptr, key), "missing field");
  return *it;
}

Rational number(const json& v, const std::string& ptr) {
  try {
    if (v.is_string()) return Rational::parse(v.get<std::string>());
    if (v.is_number_integer()) return Rational(v.get<long>());
    if (v.is_number_float()) return Rational::parse(v.dump());
  } catch (const Error& e) {
    throw ParseError(ptr, e.what());
  }
  throw ParseError(ptr, "expected a number or a \"p/q\" string");
}

long integer(const json& v, const std::string& ptr) {
  if (!v.is_number_integer()) throw ParseError(ptr, "expected an integer");
  return v.get<long>();
}

const json& array(const json& v, const std::string& ptr) {
  if (!v.is_array()) throw ParseError(ptr, "expected an array");
  return v;
}

Point point(const json& v, SpaceKind space, const std::string& ptr) {
  if (space == SpaceKind::Square) {
    if (!v.is_array() || v.size() != 2) throw ParseError(ptr, "expected a pair [x, y]");
    return Point(number(v[0], child(ptr, 0)), number(v[1], child(ptr, 1)));
  }
  return Point(number(v, ptr));
}

Instance instance_from(const json& doc, const std::string& base) {
  const SpaceKind space = [&] {
    const json& s = field(doc, base, "space");
    if (!s.is_string()) throw ParseError(child(base, "space"), "expected a string");
    auto kind = parse_space(s.get<std::string>());
    if (!kind) throw ParseError(child(base, "space"), "unknown space '" + s.get<std::string>() + "'");
    return *kind;
  }();
  const long k = integer(field(doc, base, "k"), child(base, "k"));
  if (k < 1 || k > FacilitySet::kMaxFacilities) throw ParseError(child(base, "k"), "k must be in [1, 64]");
  const std::string agents_ptr = child(base, "agents");
  const json& list = array(field(doc, base, "agents"), agents_ptr);
  if (list.empty()) throw ParseError(agents_ptr, "an instance needs at least one agent");

  std::vector<Agent> agents;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string ap = child(agents_ptr, i);
    Agent a;
    a.location = point(field(list[i], ap, "x"), space, child(ap, "x"));
    if (!valid_point(space, a.location)) {
      throw ParseError(child(ap, "x"), a.location.str() + " is not a valid " + std::string(to_string(space)) + " point");
    }
    const std::string dp = child(ap, "dislikes");
    const json& dl = array(field(list[i], ap, "dislikes"), dp);
    for (std::size_t t = 0; t < dl.size(); ++t) {
      const long j = integer(dl[t], child(dp, t));
      if (j < 1 || j > k) throw ParseError(child(dp, t), "facility index must be in [1, k]");
      a.dislikes.insert(static_cast<int>(j - 1));
    }
    agents.push_back(std::move(a));
  }
  return Instance(space, static_cast<int>(k), std::move(agents));
}

// ---------------------------------------------------------------------------
// Writing

json point_json(const Point& p) {
  if (p.dimension() == 2) return json::array({p.x().str(), p.y().str()});
  return p.x().str();
}

json length_json(const Length& l) {
  if (auto e = l.exact_value()) return e->str();
  return json{{"squared", l.squared().str()}, {"approx", l.value()}};
}

json measure_json(const Measure& m) {
  if (m.exact) return m.exact->str();
  return json{{"approx", m.value}};
}

json instance_json(const Instance& inst) {
  json agents = json::array();
  for (const auto& a : inst.agents()) {
    json dl = json::array();
    for (int j = 0; j < inst.k(); ++j) {
      if (a.dislikes.contains(j)) dl.push_back(j + 1);
    }
    agents.push_back({{"x", point_json(a.location)}, {"dislikes", dl}});
  }
  return {{"space", std::string(to_string(inst.space()))}, {"k", inst.k()}, {"agents", agents}};
}

json solution_json(const Solution& y) {
  json s = json::array();
  for (const auto& p : y.placements) s.push_back(point_json(p));
  return s;
}

json distribution_json(const Distribution& d) {
  json pairs = json::array();
  for (const auto& p : d.pairs()) pairs.push_back({{"x", p.x.str()}, {"gamma", p.gamma.str()}});
  return {{"pairs", pairs}};
}

json beta_value_json(const BetaValue& b) {
  return {{"beta", b.value.str()},
          {"adversary", distribution_json(b.indifferent)["pairs"]},
          {"relocation", b.relocation}};
}

json beta_json(const BetaReport& r) {
  return {{"minus1", beta_value_json(r.minus1)},
          {"zero", beta_value_json(r.zero)},
          {"plus1", beta_value_json(r.plus1)},
          {"chosen", r.chosen}};
}

json oracle_json(const OracleResult& r) {
  json j = {{"method", std::string(to_string(r.method))},
            {"solution", solution_json(r.solution)},
            {"value", measure_json(r.value)},
            {"upper_bound", r.upper}};
  if (r.grid_step) j["grid_step"] = r.grid_step->str();
  if (r.zero_one_value) j["zero_one_value"] = measure_json(*r.zero_one_value);
  if (r.grid_check_value) j["grid_check_value"] = *r.grid_check_value;
  return j;
}

std::string dump(const json& j) { return j.dump(2); }

}  // namespace

// ---------------------------------------------------------------------------

Instance parse_instance(std::string_view text) {
  const json doc = parse_document(text);
  try {
    return instance_from(doc, "");
  } catch (const ParseError&) {
    throw;
  } catch (const InvalidInput& e) {
    throw ParseError("/", e.what());
  }
}

std::string instance_to_json(const Instance& inst) { return dump(instance_json(inst)); }

VotingFile parse_voting(std::string_view text) {
  const json doc = parse_document(text);
  const long c = integer(field(doc, "", "candidates"), "/candidates");
  if (c < 1 || c > 64) throw ParseError("/candidates", "candidate count must be in [1, 64]");
  const json& list = array(field(doc, "", "voters"), "/voters");
  if (list.empty()) throw ParseError("/voters", "at least one voter is required");

  std::vector<voting::Voter> voters;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string vp = child(std::string("/voters"), i);
    voting::Voter v;
    const json& top = array(field(list[i], vp, "top"), child(vp, "top"));
    for (std::size_t t = 0; t < top.size(); ++t) {
      const long j = integer(top[t], child(child(vp, "top"), t));
      if (j < 1 || j > c) throw ParseError(child(child(vp, "top"), t), "candidate must be in [1, candidates]");
      v.top_tier |= voting::CandidateSet{1} << (j - 1);
    }
    v.w_plus = number(field(list[i], vp, "w_plus"), child(vp, "w_plus"));
    v.w_minus = number(field(list[i], vp, "w_minus"), child(vp, "w_minus"));
    if (v.w_minus.sign() < 0 || v.w_plus < v.w_minus) throw ParseError(vp, "weights must satisfy w_plus >= w_minus >= 0");
    voters.push_back(std::move(v));
  }

  std::vector<int> order;
  if (doc.contains("tie_order")) {
    const json& t = array(doc["tie_order"], "/tie_order");
    for (std::size_t i = 0; i < t.size(); ++i) {
      order.push_back(static_cast<int>(integer(t[i], child(std::string("/tie_order"), i)) - 1));
    }
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
      if (sorted.size() != static_cast<std::size_t>(c) || sorted[i] != static_cast<int>(i)) {
        throw ParseError("/tie_order", "must be a permutation of 1..candidates");
      }
    }
  }
  return {voting::VotingInstance(static_cast<int>(c), std::move(voters)), std::move(order)};
}

std::string voting_to_json(const VotingFile& file) {
  json voters = json::array();
  for (const auto& v : file.instance.voters()) {
    json top = json::array();
    for (int j = 0; j < file.instance.candidates(); ++j) {
      if ((v.top_tier >> j) & 1U) top.push_back(j + 1);
    }
    voters.push_back({{"top", top}, {"w_plus", v.w_plus.str()}, {"w_minus", v.w_minus.str()}});
  }
  json doc = {{"candidates", file.instance.candidates()}, {"voters", voters}};
  if (!file.tie_order.empty()) {
    json t = json::array();
    for (int c : file.tie_order) t.push_back(c + 1);
    doc["tie_order"] = t;
  }
  return dump(doc);
}

Distribution parse_distribution(std::string_view text) {
  const json doc = parse_document(text);
  const json& list = array(field(doc, "", "pairs"), "/pairs");
  std::vector<WeightedPoint> pairs;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const std::string pp = child(std::string("/pairs"), i);
    pairs.push_back({number(field(list[i], pp, "x"), child(pp, "x")),
                     number(field(list[i], pp, "gamma"), child(pp, "gamma"))});
  }
  try {
    return Distribution(std::move(pairs));
  } catch (const InvalidInput& e) {
    throw ParseError("/pairs", e.what());
  }
}

std::string distribution_to_json(const Distribution& d) { return dump(distribution_json(d)); }

std::string result_to_json(std::string_view mechanism, const Instance& inst, const Solution& y,
                           const BetaReport* beta) {
  json welfare = json::array();
  for (std::size_t i = 0; i < inst.n(); ++i) welfare.push_back(length_json(agent_welfare(inst, i, y)));
  json doc = {{"mechanism", std::string(mechanism)},
              {"instance", instance_json(inst)},
              {"solution", solution_json(y)},
              {"agent_welfare", welfare},
              {"social_welfare", measure_json(social_welfare(inst, y))},
              {"min_welfare", length_json(min_welfare(inst, y))}};
  if (beta) doc["beta_report"] = beta_json(*beta);
  return dump(doc);
}

LoadedResult parse_result(std::string_view text) {
  const json doc = parse_document(text);
  const json& mech = field(doc, "", "mechanism");
  if (!mech.is_string()) throw ParseError("/mechanism", "expected a string");
  Instance inst = instance_from(field(doc, "", "instance"), "/instance");
  const json& sol = array(field(doc, "", "solution"), "/solution");
  Solution y;
  for (std::size_t j = 0; j < sol.size(); ++j) y.placements.push_back(point(sol[j], inst.space(), child(std::string("/solution"), j)));
  try {
    validate_solution(inst, y);
  } catch (const InvalidInput& e) {
    throw ParseError("/solution", e.what());
  }
  LoadedResult r{mech.get<std::string>(), std::move(inst), std::move(y), {}, {}, {}};
  const json& w = array(field(doc, "", "agent_welfare"), "/agent_welfare");
  for (const auto& v : w) r.agent_welfare.push_back(v.is_string() ? v.get<std::string>() : v.dump());
  const json& sw = field(doc, "", "social_welfare");
  r.social_welfare = sw.is_string() ? sw.get<std::string>() : sw.dump();
  const json& mw = field(doc, "", "min_welfare");
  r.min_welfare = mw.is_string() ? mw.get<std::string>() : mw.dump();
  return r;
}

std::string length_text(const Length& l) {
  const json j = length_json(l);
  return j.is_string() ? j.get<std::string>() : j.dump();
}

std::string measure_text(const Measure& m) {
  const json j = measure_json(m);
  return j.is_string() ? j.get<std::string>() : j.dump();
}

std::string beta_report_to_json(const BetaReport& r) { return dump(beta_json(r)); }

std::string oracle_result_to_json(const OracleResult& r) { return dump(oracle_json(r)); }

std::string witness_to_json(const ManipulationWitness& w, const Instance& truth, Property p) {
  json members = json::array();
  for (std::size_t t = 0; t < w.coalition.size(); ++t) {
    const std::size_t i = w.coalition[t];
    json truthful = json::array(), reported = json::array();
    for (int j = 0; j < truth.k(); ++j) {
      if (truth.agents()[i].dislikes.contains(j)) truthful.push_back(j + 1);
      if (w.reports[t].contains(j)) reported.push_back(j + 1);
    }
    members.push_back({{"agent", i + 1},
                       {"true_dislikes", truthful},
                       {"reported_dislikes", reported},
                       {"welfare_before", length_json(w.welfare_before[t])},
                       {"welfare_after", length_json(w.welfare_after[t])}});
  }
  return dump({{"property", std::string(to_string(p))},
               {"members", members},
               {"truthful_outcome", solution_json(w.truthful_outcome)},
               {"manipulated_outcome", solution_json(w.manipulated_outcome)}});
}

std::string voting_witness_to_json(const VotingWitness& w, Property p) {
  json members = json::array();
  for (std::size_t t = 0; t < w.coalition.size(); ++t) {
    json reported = json::array();
    for (int j = 0; j < 64; ++j) {
      if ((w.reports[t] >> j) & 1U) reported.push_back(j + 1);
    }
    members.push_back({{"voter", w.coalition[t] + 1}, {"reported_top", reported}});
  }
  return dump({{"property", std::string(to_string(p))},
               {"members", members},
               {"winner_before", w.winner_before + 1},
               {"winner_after", w.winner_after + 1}});
}

std::string ratio_sample_to_json(const RatioSample& s, std::string_view mechanism, Objective objective) {
  json doc = {{"mechanism", std::string(mechanism)},
              {"objective", std::string(to_string(objective))},
              {"trial", s.trial},
              {"solution", solution_json(s.solution)},
              {"mechanism_value", measure_json(s.mechanism_value)},
              {"oracle", oracle_json(s.oracle)},
              {"ratio_lower", s.ratio_lower},
              {"ratio_upper", s.ratio_upper}};
  if (s.instance) doc["instance"] = instance_json(*s.instance);
  if (s.ratio) doc["ratio"] = s.ratio->str();
  return dump(doc);
}

}  // namespace ofl::io
