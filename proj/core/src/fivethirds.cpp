#include "ofl/fivethirds.hpp"

#include "ofl/error.hpp"

#include <algorithm>
#include <string>

namespace ofl {

namespace {

const Rational kOne(1);
const Rational kMinusOne(-1);

bool in_unit_band(const Rational& x) { return x >= kMinusOne && x <= kOne; }

}  // namespace

Distribution::Distribution(std::vector<WeightedPoint> pairs) : pairs_(std::move(pairs)) {
  for (const auto& p : pairs_) {
    if (!in_unit_band(p.x)) throw InvalidInput("distribution location " + p.x.str() + " is outside [-1, 1]");
    if (p.gamma.sign() <= 0) throw InvalidInput("distribution mass at " + p.x.str() + " must be positive");
  }
  std::sort(pairs_.begin(), pairs_.end(),
            [](const WeightedPoint& a, const WeightedPoint& b) { return a.x < b.x; });
  for (std::size_t i = 1; i < pairs_.size(); ++i) {
    if (pairs_[i].x == pairs_[i - 1].x) {
      throw InvalidInput("distribution repeats location " + pairs_[i].x.str());
    }
  }
}

Rational Distribution::gamma_at(const Rational& x) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), x,
                             [](const WeightedPoint& p, const Rational& v) { return p.x < v; });
  return it != pairs_.end() && it->x == x ? it->gamma : Rational(0);
}

Distribution Distribution::below_zero() const {
  Distribution out;
  for (const auto& p : pairs_) if (p.x.sign() < 0) out.pairs_.push_back(p);
  return out;
}

Distribution Distribution::at_zero() const {
  Distribution out;
  for (const auto& p : pairs_) if (p.x.is_zero()) out.pairs_.push_back(p);
  return out;
}

Distribution Distribution::above_zero() const {
  Distribution out;
  for (const auto& p : pairs_) if (p.x.sign() > 0) out.pairs_.push_back(p);
  return out;
}

Distribution Distribution::prefix(std::size_t k) const {
  Distribution out;
  out.pairs_.assign(pairs_.begin(), pairs_.begin() + static_cast<std::ptrdiff_t>(std::min(k, size())));
  return out;
}

Distribution Distribution::suffix(std::size_t k) const {
  Distribution out;
  out.pairs_.assign(pairs_.end() - static_cast<std::ptrdiff_t>(std::min(k, size())), pairs_.end());
  return out;
}

bool Distribution::dominates(const Distribution& other) const {
  return std::all_of(other.pairs_.begin(), other.pairs_.end(),
                     [&](const WeightedPoint& p) { return gamma_at(p.x) >= p.gamma; });
}

bool Distribution::trivial() const {
  const bool has_neg = std::any_of(pairs_.begin(), pairs_.end(), [](const auto& p) { return p.x.sign() < 0; });
  const bool has_pos = std::any_of(pairs_.begin(), pairs_.end(), [](const auto& p) { return p.x.sign() > 0; });
  return !has_neg || !has_pos;
}

bool Distribution::special() const {
  const auto neg = below_zero().size();
  const auto pos = above_zero().size();
  return neg >= 1 && neg <= 2 && pos >= 1 && pos <= 2;
}

std::string Distribution::str() const {
  std::string s = "{";
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i) s += ", ";
    s += "(" + pairs_[i].x.str() + ", " + pairs_[i].gamma.str() + ")";
  }
  return s + "}";
}

Rational weight(const Distribution& d) {
  Rational g;
  for (const auto& p : d.pairs()) g += p.gamma;
  return g;
}

Rational wsum(const Distribution& d) {
  Rational h;
  for (const auto& p : d.pairs()) h += p.gamma * p.x;
  return h;
}

Rational phi(const Distribution& d, const Distribution& indifferent, const Rational& y) {
  if (!in_unit_band(y)) throw InvalidInput("facility location " + y.str() + " is outside [-1, 1]");
  if (!d.dominates(indifferent)) throw InvalidInput("adversary distribution is not dominated");
  Rational total;
  for (const auto& p : d.pairs()) {
    const Rational g_ind = indifferent.gamma_at(p.x);
    total += abs(y - p.x) * (p.gamma - g_ind) + (kOne + abs(p.x)) * g_ind;
  }
  return total;
}

Ratio psi(const Distribution& d, const Distribution& indifferent, const Rational& y,
          const Rational& y_alt) {
  return Ratio::of(phi(d, indifferent, y_alt), phi(d, indifferent, y));
}

EndpointBetas beta_endpoints(const Distribution& d) {
  EndpointBetas out;
  out.at_minus1.indifferent = d.above_zero();
  out.at_minus1.relocation = 1;
  out.at_plus1.indifferent = d.below_zero();
  out.at_plus1.relocation = -1;
  if (d.empty()) return out;

  const Rational g = weight(d);
  const Rational h = wsum(d);
  const Rational h_neg = wsum(out.at_plus1.indifferent);
  const Rational h_pos = wsum(out.at_minus1.indifferent);
  out.at_minus1.value = Ratio::of(g - h + Rational(2) * h_pos, g + h);
  out.at_plus1.value = Ratio::of(g + h - Rational(2) * h_neg, g - h);
  return out;
}

namespace {

struct ZeroScan {
  Ratio best_prefix;
  std::size_t prefix_len = 0;
  Ratio best_suffix;
  std::size_t suffix_len = 0;
};

// Least-length maximizers of the prefix and suffix expressions.
ZeroScan scan_zero(const Distribution& d) {
  const auto& pairs = d.pairs();
  const Rational g = weight(d);
  const Rational h = wsum(d);
  Rational h_neg, h_pos;
  std::size_t neg = 0, pos = 0;
  for (const auto& p : pairs) {
    if (p.x.sign() < 0) {
      h_neg += p.gamma * p.x;
      ++neg;
    } else if (p.x.sign() > 0) {
      h_pos += p.gamma * p.x;
      ++pos;
    }
  }
  const Rational spread = h_pos - h_neg;  // sum of gamma |x|

  ZeroScan scan;
  Rational g_run, h_run;
  for (std::size_t k = 0; k <= neg; ++k) {
    if (k > 0) {
      g_run += pairs[k - 1].gamma;
      h_run += pairs[k - 1].gamma * pairs[k - 1].x;
    }
    Ratio r = Ratio::of(g + h - Rational(2) * h_run, g_run + spread);
    if (k == 0 || r > scan.best_prefix) {
      scan.best_prefix = std::move(r);
      scan.prefix_len = k;
    }
  }
  g_run = 0;
  h_run = 0;
  for (std::size_t k = 0; k <= pos; ++k) {
    if (k > 0) {
      const auto& p = pairs[pairs.size() - k];
      g_run += p.gamma;
      h_run += p.gamma * p.x;
    }
    Ratio r = Ratio::of(g - h + Rational(2) * h_run, g_run + spread);
    if (k == 0 || r > scan.best_suffix) {
      scan.best_suffix = std::move(r);
      scan.suffix_len = k;
    }
  }
  return scan;
}

}  // namespace

BetaValue beta_zero(const Distribution& d) {
  BetaValue out;
  out.relocation = -1;
  if (d.empty()) return out;
  const ZeroScan scan = scan_zero(d);
  if (scan.best_suffix > scan.best_prefix) {
    out.value = scan.best_suffix;
    out.indifferent = d.suffix(scan.suffix_len);
    out.relocation = 1;
  } else {
    out.value = scan.best_prefix;
    out.indifferent = d.prefix(scan.prefix_len);
  }
  return out;
}

const BetaValue& BetaReport::at(int y) const {
  switch (y) {
    case -1: return minus1;
    case 0: return zero;
    case 1: return plus1;
    default: throw InvalidInput("beta location must be -1, 0 or 1");
  }
}

BetaReport beta_report(const Distribution& d) {
  BetaReport r;
  auto ends = beta_endpoints(d);
  r.minus1 = std::move(ends.at_minus1);
  r.plus1 = std::move(ends.at_plus1);
  r.zero = beta_zero(d);
  r.chosen = -1;
  if (r.zero.value < r.at(r.chosen).value) r.chosen = 0;
  if (r.plus1.value < r.at(r.chosen).value) r.chosen = 1;
  return r;
}

Ratio brute_beta(const Distribution& d, int y, int gamma_grid, int y_grid,
                 std::size_t max_evaluations) {
  if (y < -1 || y > 1) throw InvalidInput("beta location must be -1, 0 or 1");
  if (gamma_grid < 1) throw InvalidInput("gamma_grid must be positive");
  if (y_grid < 0) throw InvalidInput("y_grid must be nonnegative");
  if (d.empty()) return Ratio(Rational(1));

  const auto& pairs = d.pairs();
  const std::size_t n = pairs.size();
  std::size_t splits = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (splits > max_evaluations / static_cast<std::size_t>(gamma_grid + 1)) {
      throw ResourceLimit("brute_beta: more than " + std::to_string(max_evaluations) +
                          " adversary splits");
    }
    splits *= static_cast<std::size_t>(gamma_grid + 1);
  }

  std::vector<Rational> relocations = {kMinusOne, kOne};
  for (int t = 1; t < y_grid; ++t) relocations.push_back(Rational(-1) + Rational(2L * t, y_grid));

  const Rational at(y);
  std::vector<int> level(n, 0);
  std::vector<Rational> g_ind(n);
  Ratio best(Rational(1));
  for (std::size_t s = 0; s < splits; ++s) {
    for (std::size_t i = 0; i < n; ++i) {
      g_ind[i] = pairs[i].gamma * Rational(level[i], gamma_grid);
    }
    auto welfare = [&](const Rational& loc) {
      Rational total;
      for (std::size_t i = 0; i < n; ++i) {
        total += abs(loc - pairs[i].x) * (pairs[i].gamma - g_ind[i]) +
                 (kOne + abs(pairs[i].x)) * g_ind[i];
      }
      return total;
    };
    const Rational base = welfare(at);
    for (const auto& alt : relocations) {
      Ratio r = Ratio::of(welfare(alt), base);
      if (r > best) best = std::move(r);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (++level[i] <= gamma_grid) break;
      level[i] = 0;
    }
  }
  return best;
}

Distribution worst_prefix(const Distribution& d) {
  if (d.empty()) return {};
  return d.prefix(scan_zero(d).prefix_len);
}

Distribution worst_suffix(const Distribution& d) {
  if (d.empty()) return {};
  return d.suffix(scan_zero(d).suffix_len);
}

Distribution specialize(const Distribution& d) {
  if (d.trivial()) throw PreconditionError("specialize needs mass on both sides of 0");
  const ZeroScan scan = scan_zero(d);
  const auto& pairs = d.pairs();
  const std::size_t neg = d.below_zero().size();
  const std::size_t pos = d.above_zero().size();
  const std::size_t n = pairs.size();

  // Block boundaries in sorted order.
  const std::size_t bounds[6] = {0, scan.prefix_len, neg, n - pos, n - scan.suffix_len, n};
  std::vector<WeightedPoint> out;
  for (int b = 0; b < 5; ++b) {
    Rational g, h;
    for (std::size_t i = bounds[b]; i < bounds[b + 1]; ++i) {
      g += pairs[i].gamma;
      h += pairs[i].gamma * pairs[i].x;
    }
    if (g.sign() > 0) out.push_back({h / g, g});
  }
  return Distribution(std::move(out));
}

Distribution distribution_of(const Instance& inst) {
  if (inst.space() != SpaceKind::Path) throw InvalidInput("distribution_of requires a path instance");
  std::vector<Rational> xs;
  xs.reserve(inst.n());
  for (const auto& a : inst.agents()) xs.push_back(Rational(2) * a.location.x() - kOne);
  std::sort(xs.begin(), xs.end());
  std::vector<WeightedPoint> pairs;
  for (const auto& x : xs) {
    if (!pairs.empty() && pairs.back().x == x) {
      pairs.back().gamma += kOne;
    } else {
      pairs.push_back({x, kOne});
    }
  }
  return Distribution(std::move(pairs));
}

Solution five_thirds_mechanism(const Instance& inst) {
  if (inst.space() != SpaceKind::Path) throw InvalidInput("five_thirds_mechanism requires a path instance");
  if (inst.k() != 1) throw PreconditionError("five_thirds_mechanism places a single facility (k = 1)");
  const BetaReport r = beta_report(distribution_of(inst));
  return uniform_solution(1, Point(Rational(r.chosen + 1, 2)));
}

}  // namespace ofl
