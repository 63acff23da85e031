#include "ofl/oracle.hpp"

#include "ofl/egalitarian.hpp"
#include "ofl/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

namespace ofl {

std::string_view to_string(OracleMethod m) {
  switch (m) {
    case OracleMethod::ExactCandidates: return "exact-candidates";
    case OracleMethod::ZeroOneEnum: return "zero-one-enum";
    case OracleMethod::Grid: return "grid";
  }
  return "?";
}

namespace {

Measure measure_of(const Length& l) {
  Measure m{Rational(0), 0.0};
  m += l;
  return m;
}

// ---------------------------------------------------------------------------
// Exact welfare on the path and the cycle, specialised for scanning.

struct AgentRow {
  std::uint64_t dislikes;
  Rational x;
  Rational constant;  // welfare when indifferent
  double xd;
  double constant_d;
};

std::vector<AgentRow> rows_of(const Instance& inst) {
  std::vector<AgentRow> rows;
  rows.reserve(inst.n());
  for (const auto& a : inst.agents()) {
    AgentRow r{a.dislikes.bits(), a.location.x(), {}, a.location.x().to_double(), 0.0};
    if (inst.space() == SpaceKind::Path) {
      r.constant = std::max(r.x, Rational(1) - r.x);
    } else {
      r.constant = Rational(1, 2);
    }
    r.constant_d = r.constant.to_double();
    rows.push_back(std::move(r));
  }
  return rows;
}

Rational line_distance(SpaceKind space, const Rational& a, const Rational& b) {
  Rational d = abs(a - b);
  if (space == SpaceKind::Cycle) {
    Rational other = Rational(1) - d;
    if (other < d) return other;
  }
  return d;
}

double line_distance_d(SpaceKind space, double a, double b) {
  const double d = std::abs(a - b);
  return space == SpaceKind::Cycle ? std::min(d, 1.0 - d) : d;
}

Rational exact_sw(SpaceKind space, const std::vector<AgentRow>& rows, const std::vector<Rational>& y) {
  Rational total;
  for (const auto& r : rows) {
    if (r.dislikes == 0) {
      total += r.constant;
      continue;
    }
    std::optional<Rational> best;
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (!((r.dislikes >> j) & 1U)) continue;
      Rational d = line_distance(space, r.x, y[j]);
      if (!best || d < *best) best = std::move(d);
    }
    total += *best;
  }
  return total;
}

// ---------------------------------------------------------------------------
// Arrangement vertices for hyperplanes with coefficients in {-1, 0, 1}.

struct Hyperplane {
  std::vector<int> a;
  Rational b;
};

long long int_det(const std::vector<long long>& m, int n) {
  if (n == 1) return m[0];
  if (n == 2) return m[0] * m[3] - m[1] * m[2];
  long long total = 0;
  std::vector<long long> minor(static_cast<std::size_t>((n - 1) * (n - 1)));
  for (int c = 0; c < n; ++c) {
    if (m[static_cast<std::size_t>(c)] == 0) continue;
    std::size_t w = 0;
    for (int r = 1; r < n; ++r) {
      for (int cc = 0; cc < n; ++cc) {
        if (cc != c) minor[w++] = m[static_cast<std::size_t>(r * n + cc)];
      }
    }
    const long long term = m[static_cast<std::size_t>(c)] * int_det(minor, n - 1);
    total += (c % 2 == 0) ? term : -term;
  }
  return total;
}

// Cofactor C(r, c) of an integer matrix.
long long cofactor(const std::vector<long long>& m, int n, int r, int c) {
  if (n == 1) return 1;
  std::vector<long long> minor;
  minor.reserve(static_cast<std::size_t>((n - 1) * (n - 1)));
  for (int rr = 0; rr < n; ++rr) {
    if (rr == r) continue;
    for (int cc = 0; cc < n; ++cc) {
      if (cc != c) minor.push_back(m[static_cast<std::size_t>(rr * n + cc)]);
    }
  }
  const long long d = int_det(minor, n - 1);
  return ((r + c) % 2 == 0) ? d : -d;
}

// Calls visit(y) for every vertex of the arrangement inside [0, 1]^k.
template <typename Visit>
void for_each_vertex(int k, const std::vector<Hyperplane>& planes, Visit&& visit) {
  const std::size_t h = planes.size();
  if (h < static_cast<std::size_t>(k)) return;
  std::vector<std::size_t> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = static_cast<std::size_t>(i);
  std::vector<long long> m(static_cast<std::size_t>(k * k));
  std::vector<Rational> y(static_cast<std::size_t>(k));
  const Rational zero, one(1);
  while (true) {
    for (int r = 0; r < k; ++r) {
      for (int c = 0; c < k; ++c) {
        m[static_cast<std::size_t>(r * k + c)] = planes[pick[static_cast<std::size_t>(r)]].a[static_cast<std::size_t>(c)];
      }
    }
    const long long det = int_det(m, k);
    if (det != 0) {
      bool inside = true;
      for (int c = 0; c < k && inside; ++c) {
        Rational v;
        for (int r = 0; r < k; ++r) {
          const long long cf = cofactor(m, k, r, c);
          if (cf != 0) v += planes[pick[static_cast<std::size_t>(r)]].b * Rational(static_cast<long>(cf));
        }
        v /= Rational(static_cast<long>(det));
        inside = v >= zero && v <= one;
        y[static_cast<std::size_t>(c)] = std::move(v);
      }
      if (inside) visit(y);
    }
    // Next k-subset in lexicographic order.
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == h - static_cast<std::size_t>(k - i)) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int t = i + 1; t < k; ++t) pick[static_cast<std::size_t>(t)] = pick[static_cast<std::size_t>(t - 1)] + 1;
  }
}

std::vector<int> unit(int k, int j, int sign = 1) {
  std::vector<int> a(static_cast<std::size_t>(k), 0);
  a[static_cast<std::size_t>(j)] = sign;
  return a;
}

std::vector<int> pair_coeffs(int k, int j, int l, int sign_l) {
  std::vector<int> a(static_cast<std::size_t>(k), 0);
  a[static_cast<std::size_t>(j)] = 1;
  a[static_cast<std::size_t>(l)] = sign_l;
  return a;
}

void add_unique(std::vector<Rational>& values, Rational v) {
  if (std::find(values.begin(), values.end(), v) == values.end()) values.push_back(std::move(v));
}

std::vector<Hyperplane> sw_hyperplanes(const Instance& inst) {
  const int k = inst.k();
  const bool cycle = inst.space() == SpaceKind::Cycle;
  const Rational zero, one(1), half(1, 2);
  std::vector<Hyperplane> planes;
  for (int j = 0; j < k; ++j) {
    std::vector<Rational> consts = {zero, one};
    for (const auto& a : inst.agents()) {
      if (!a.dislikes.contains(j)) continue;
      const Rational& x = a.location.x();
      add_unique(consts, x);
      if (cycle) {
        if (x + half <= one) add_unique(consts, x + half);
        if (x - half >= zero) add_unique(consts, x - half);
      }
    }
    for (auto& c : consts) planes.push_back({unit(k, j), std::move(c)});
  }
  for (int j = 0; j < k; ++j) {
    for (int l = j + 1; l < k; ++l) {
      std::vector<Rational> diffs = {zero};
      if (cycle) {
        diffs.push_back(one);
        diffs.push_back(-one);
      }
      for (auto& d : diffs) planes.push_back({pair_coeffs(k, j, l, -1), std::move(d)});
      std::vector<Rational> sums;
      for (const auto& a : inst.agents()) {
        if (!a.dislikes.contains(j) || !a.dislikes.contains(l)) continue;
        const Rational twice = Rational(2) * a.location.x();
        add_unique(sums, twice);
        if (cycle) {
          add_unique(sums, twice - one);
          add_unique(sums, twice + one);
        }
      }
      for (auto& s : sums) planes.push_back({pair_coeffs(k, j, l, 1), std::move(s)});
    }
  }
  return planes;
}

Solution line_solution(SpaceKind space, const std::vector<Rational>& y) {
  Solution s;
  for (const auto& v : y) {
    s.placements.emplace_back(space == SpaceKind::Cycle && v == Rational(1) ? Rational(0) : v);
  }
  return s;
}

// ---------------------------------------------------------------------------
// Floating grid scans.

struct GridScan {
  std::size_t m = 1;                  // resolution 1/m per coordinate
  std::vector<std::size_t> best;      // grid indices of the best point
  double best_value = -std::numeric_limits<double>::infinity();
};

std::size_t grid_resolution(const Rational& step, std::size_t dims, std::size_t max_points) {
  if (step.sign() <= 0) throw InvalidInput("grid step must be positive");
  const Rational inv = Rational(1) / step;
  // floor(1/step)
  mpz_class fl = inv.numerator() / inv.denominator();
  std::size_t m = fl.fits_ulong_p() ? fl.get_ui() : std::numeric_limits<std::size_t>::max();
  m = std::max<std::size_t>(m, 1);
  auto points = [&](std::size_t mm) {
    double p = std::pow(static_cast<double>(mm + 1), static_cast<double>(dims));
    return p;
  };
  while (m > 1 && points(m) > static_cast<double>(max_points)) {
    const double root = std::floor(std::pow(static_cast<double>(max_points), 1.0 / static_cast<double>(dims)));
    const std::size_t cand = root >= 2.0 ? static_cast<std::size_t>(root) - 1 : 1;
    m = std::min(m - 1, cand);
  }
  return m;
}

template <typename Objective>
GridScan scan_grid(std::size_t dims, std::size_t m, Objective&& objective) {
  GridScan scan;
  scan.m = m;
  std::vector<std::size_t> idx(dims, 0);
  std::vector<double> coord(dims, 0.0);
  const double inv = 1.0 / static_cast<double>(m);
  while (true) {
    for (std::size_t d = 0; d < dims; ++d) coord[d] = static_cast<double>(idx[d]) * inv;
    const double v = objective(coord);
    if (v > scan.best_value) {
      scan.best_value = v;
      scan.best = idx;
    }
    std::size_t d = 0;
    while (d < dims && ++idx[d] > m) idx[d++] = 0;
    if (d == dims) break;
  }
  return scan;
}

Solution grid_solution(SpaceKind space, int k, const GridScan& scan) {
  Solution s;
  const long m = static_cast<long>(scan.m);
  auto at = [&](std::size_t i) {
    const long t = static_cast<long>(scan.best[i]);
    return (space == SpaceKind::Cycle && t == m) ? Rational(0) : Rational(t, m);
  };
  for (int j = 0; j < k; ++j) {
    if (space == SpaceKind::Square) {
      s.placements.emplace_back(at(static_cast<std::size_t>(2 * j)), at(static_cast<std::size_t>(2 * j + 1)));
    } else {
      s.placements.emplace_back(at(static_cast<std::size_t>(j)));
    }
  }
  return s;
}

double sw_line_d(SpaceKind space, const std::vector<AgentRow>& rows, const std::vector<double>& y) {
  double total = 0.0;
  for (const auto& r : rows) {
    if (r.dislikes == 0) {
      total += r.constant_d;
      continue;
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t j = 0; j < y.size(); ++j) {
      if ((r.dislikes >> j) & 1U) best = std::min(best, line_distance_d(space, r.xd, y[j]));
    }
    total += best;
  }
  return total;
}

GridScan scan_sw_line(const Instance& inst, const std::vector<AgentRow>& rows, const Rational& step,
                      std::size_t max_points) {
  const auto dims = static_cast<std::size_t>(inst.k());
  const std::size_t m = grid_resolution(step, dims, max_points);
  return scan_grid(dims, m, [&](const std::vector<double>& y) { return sw_line_d(inst.space(), rows, y); });
}

double sum_farthest(const Instance& inst) {
  double total = 0.0;
  for (const auto& a : inst.agents()) total += farthest_distance(inst.space(), a.location).value();
  return total;
}

OracleResult sw_line_exact(const Instance& inst, const OracleOptions& opts) {
  const auto rows = rows_of(inst);
  const int k = inst.k();
  OracleResult res;
  if (k <= opts.exact_k_max) {
    std::optional<Rational> best;
    std::vector<Rational> best_y;
    for_each_vertex(k, sw_hyperplanes(inst), [&](const std::vector<Rational>& raw) {
      std::vector<Rational> y = raw;
      if (inst.space() == SpaceKind::Cycle) {
        for (auto& v : y) if (v == Rational(1)) v = Rational(0);
      }
      Rational v = exact_sw(inst.space(), rows, y);
      if (!best || v > *best || (v == *best && y < best_y)) {
        best = std::move(v);
        best_y = std::move(y);
      }
    });
    res.method = OracleMethod::ExactCandidates;
    res.solution = line_solution(inst.space(), best_y);
    res.value = Measure{*best, best->to_double()};
    res.upper = res.value.value;
    if (opts.grid_check) {
      const GridScan g = scan_sw_line(inst, rows, opts.grid_step, opts.max_grid_points);
      res.grid_check_value = g.best_value;
      res.grid_step = Rational(1, static_cast<long>(g.m));
    }
  } else {
    const GridScan g = scan_sw_line(inst, rows, opts.grid_step, opts.max_grid_points);
    res.method = OracleMethod::Grid;
    res.solution = grid_solution(inst.space(), k, g);
    res.grid_step = Rational(1, static_cast<long>(g.m));
    res.value = social_welfare(inst, res.solution);
    const double bound = static_cast<double>(inst.n()) * static_cast<double>(k) / static_cast<double>(g.m);
    res.upper = std::min(res.value.value + bound, sum_farthest(inst));
  }
  return res;
}

}  // namespace

OracleResult oracle_sw_path(const Instance& inst, const OracleOptions& opts) {
  if (inst.space() != SpaceKind::Path) throw InvalidInput("oracle_sw_path requires a path instance");
  OracleResult res = sw_line_exact(inst, opts);
  const int k = inst.k();
  if (k <= 20) {
    const auto rows = rows_of(inst);
    std::optional<Rational> best;
    std::vector<Rational> y(static_cast<std::size_t>(k));
    for (std::uint64_t v = 0; v < (std::uint64_t{1} << k); ++v) {
      for (int j = 0; j < k; ++j) y[static_cast<std::size_t>(j)] = Rational(static_cast<long>((v >> (k - 1 - j)) & 1U));
      Rational s = exact_sw(SpaceKind::Path, rows, y);
      if (!best || s > *best) best = std::move(s);
    }
    res.zero_one_value = Measure{*best, best->to_double()};
  }
  return res;
}

OracleResult oracle_sw_cycle(const Instance& inst, const OracleOptions& opts) {
  if (inst.space() != SpaceKind::Cycle) throw InvalidInput("oracle_sw_cycle requires a cycle instance");
  return sw_line_exact(inst, opts);
}

OracleResult oracle_sw_square(const Instance& inst, const OracleOptions& opts) {
  if (inst.space() != SpaceKind::Square) throw InvalidInput("oracle_sw_square requires a square instance");
  const int k = inst.k();
  const auto dims = static_cast<std::size_t>(2 * k);
  const std::size_t m = grid_resolution(opts.square_grid_step, dims, opts.max_grid_points);

  struct Row {
    std::uint64_t dislikes;
    double x, y, constant;
  };
  std::vector<Row> rows;
  for (const auto& a : inst.agents()) {
    rows.push_back({a.dislikes.bits(), a.location.x().to_double(), a.location.y().to_double(),
                    farthest_distance(SpaceKind::Square, a.location).value()});
  }
  const GridScan g = scan_grid(dims, m, [&](const std::vector<double>& c) {
    double total = 0.0;
    for (const auto& r : rows) {
      if (r.dislikes == 0) {
        total += r.constant;
        continue;
      }
      double best = std::numeric_limits<double>::infinity();
      for (int j = 0; j < k; ++j) {
        if (!((r.dislikes >> j) & 1U)) continue;
        best = std::min(best, std::hypot(r.x - c[static_cast<std::size_t>(2 * j)],
                                         r.y - c[static_cast<std::size_t>(2 * j + 1)]));
      }
      total += best;
    }
    return total;
  });

  OracleResult res;
  res.method = OracleMethod::Grid;
  res.solution = grid_solution(SpaceKind::Square, k, g);
  res.grid_step = Rational(1, static_cast<long>(g.m));
  res.value = social_welfare(inst, res.solution);
  const double bound = static_cast<double>(inst.n()) / static_cast<double>(g.m);
  res.upper = std::min(res.value.value + bound, sum_farthest(inst));
  return res;
}

OracleResult oracle_sw(const Instance& inst, const OracleOptions& opts) {
  switch (inst.space()) {
    case SpaceKind::Path: return oracle_sw_path(inst, opts);
    case SpaceKind::Cycle: return oracle_sw_cycle(inst, opts);
    case SpaceKind::Square: return oracle_sw_square(inst, opts);
  }
  throw InvalidInput("unknown space");
}

// ---------------------------------------------------------------------------

OracleResult oracle_mw_single(const Instance& inst, const OracleOptions& opts) {
  if (inst.k() != 1) throw PreconditionError("oracle_mw_single needs k = 1");
  const SpaceKind space = inst.space();
  if (space == SpaceKind::Square) throw PreconditionError("oracle_mw_single covers the path and the cycle");

  std::vector<Rational> hs;
  std::optional<Rational> floor_value;  // least indifferent constant
  for (const auto& r : rows_of(inst)) {
    if (r.dislikes & 1U) {
      hs.push_back(r.x);
    } else if (!floor_value || r.constant < *floor_value) {
      floor_value = r.constant;
    }
  }

  const Rational zero, one(1), half(1, 2);
  std::vector<Rational> cands = {zero};
  if (space == SpaceKind::Path) cands.push_back(one);
  for (std::size_t i = 0; i < hs.size(); ++i) {
    if (space == SpaceKind::Path) {
      cands.push_back(hs[i]);
    } else {
      Rational anti = hs[i] + half;
      cands.push_back(anti >= one ? anti - one : anti);
    }
    for (std::size_t j = i + 1; j < hs.size(); ++j) {
      Rational mid = (hs[i] + hs[j]) / Rational(2);
      if (space == SpaceKind::Cycle) {
        Rational other = mid + half;
        cands.push_back(other >= one ? other - one : other);
      }
      cands.push_back(std::move(mid));
    }
  }
  std::sort(cands.begin(), cands.end());
  cands.erase(std::unique(cands.begin(), cands.end()), cands.end());

  std::optional<Rational> best;
  Rational best_y;
  for (const auto& y : cands) {
    std::optional<Rational> v = floor_value;
    for (const auto& x : hs) {
      Rational d = line_distance(space, x, y);
      if (!v || d < *v) v = std::move(d);
    }
    if (!best || *v > *best) {
      best = v;
      best_y = y;
    }
  }

  OracleResult res;
  res.method = OracleMethod::ExactCandidates;
  res.solution = uniform_solution(1, Point(best_y));
  res.value = Measure{*best, best->to_double()};
  res.upper = res.value.value;
  if (opts.grid_check) {
    const auto rows = rows_of(inst);
    const std::size_t m = grid_resolution(opts.grid_step, 1, opts.max_grid_points);
    const GridScan g = scan_grid(1, m, [&](const std::vector<double>& y) {
      double v = std::numeric_limits<double>::infinity();
      for (const auto& r : rows) {
        v = std::min(v, (r.dislikes & 1U) ? line_distance_d(space, r.xd, y[0]) : r.constant_d);
      }
      return v;
    });
    res.grid_check_value = g.best_value;
    res.grid_step = Rational(1, static_cast<long>(g.m));
  }
  return res;
}

OracleResult oracle_mw_square_grid(const Instance& inst, const Rational& step) {
  if (inst.space() != SpaceKind::Square) throw InvalidInput("oracle_mw_square_grid requires a square instance");
  if (inst.k() != 1) throw PreconditionError("oracle_mw_square_grid needs k = 1");
  struct Row {
    bool hater;
    double x, y, constant;
  };
  std::vector<Row> rows;
  for (const auto& a : inst.agents()) {
    rows.push_back({a.dislikes.contains(0), a.location.x().to_double(), a.location.y().to_double(),
                    farthest_distance(SpaceKind::Square, a.location).value()});
  }
  const std::size_t m = grid_resolution(step, 2, std::numeric_limits<std::size_t>::max());
  const GridScan g = scan_grid(2, m, [&](const std::vector<double>& c) {
    double v = std::numeric_limits<double>::infinity();
    for (const auto& r : rows) v = std::min(v, r.hater ? std::hypot(r.x - c[0], r.y - c[1]) : r.constant);
    return v;
  });
  OracleResult res;
  res.method = OracleMethod::Grid;
  res.solution = grid_solution(SpaceKind::Square, 1, g);
  res.grid_step = Rational(1, static_cast<long>(g.m));
  res.value = measure_of(min_welfare(inst, res.solution));
  res.upper = res.value.value + std::sqrt(2.0) / static_cast<double>(g.m);
  return res;
}

OracleResult oracle_mw_multi(const Instance& inst, const OracleOptions& opts) {
  OracleResult res;
  res.method = OracleMethod::ExactCandidates;
  res.upper = std::numeric_limits<double>::infinity();
  for (int j = 0; j < inst.k(); ++j) {
    const Instance proj = single_projection(inst, j);
    const OracleResult part = inst.space() == SpaceKind::Square
                                  ? oracle_mw_square_grid(proj, opts.square_grid_step)
                                  : oracle_mw_single(proj, opts);
    if (part.method == OracleMethod::Grid) {
      res.method = OracleMethod::Grid;
      res.grid_step = part.grid_step;
    }
    res.upper = std::min(res.upper, part.upper);
    res.solution.placements.push_back(part.solution.placements.front());
  }
  res.value = measure_of(min_welfare(inst, res.solution));
  if (res.exact()) res.upper = res.value.value;
  return res;
}

OracleResult oracle_mw(const Instance& inst, const OracleOptions& opts) {
  if (inst.k() == 1 && inst.space() != SpaceKind::Square) return oracle_mw_single(inst, opts);
  return oracle_mw_multi(inst, opts);
}

// ---------------------------------------------------------------------------

Rational total_distance(const std::vector<Rational>& points, const Rational& z) {
  Rational total;
  for (const auto& p : points) total += abs(z - p);
  return total;
}

MaxianResult one_maxian(const std::vector<Rational>& points, const Rational& a, const Rational& b) {
  if (points.empty()) throw InvalidInput("one_maxian needs at least one point");
  if (a > b) throw InvalidInput("one_maxian needs a <= b");
  for (const auto& p : points) {
    if (p < a || p > b) throw InvalidInput("point " + p.str() + " lies outside the interval");
  }
  Rational at_a = total_distance(points, a);
  Rational at_b = total_distance(points, b);
  if (at_a >= at_b) return {a, std::move(at_a)};
  return {b, std::move(at_b)};
}

}  // namespace ofl
