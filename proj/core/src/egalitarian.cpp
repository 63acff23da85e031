#include "ofl/egalitarian.hpp"

#include "ofl/error.hpp"

#include <algorithm>
#include <array>
#include <optional>
#include <string>

namespace ofl {

namespace {

void require_single(const Instance& inst, SpaceKind space, const char* who) {
  if (inst.space() != space) {
    throw InvalidInput(std::string(who) + " requires a " + std::string(to_string(space)) +
                       " instance");
  }
  if (inst.k() != 1) throw PreconditionError(std::string(who) + " places a single facility (k = 1)");
}

std::vector<Rational> sorted_hater_coordinates(const Instance& inst) {
  std::vector<Rational> xs;
  for (const auto& a : inst.agents()) {
    if (a.dislikes.contains(0)) xs.push_back(a.location.x());
  }
  std::sort(xs.begin(), xs.end());
  return xs;
}

Instance all_dislike_first(const Instance& inst) {
  std::vector<Agent> agents;
  agents.reserve(inst.n());
  for (const auto& a : inst.agents()) agents.push_back({a.location, FacilitySet::single(0)});
  return Instance(inst.space(), 1, std::move(agents));
}

}  // namespace

Instance single_projection(const Instance& inst, int j) {
  if (j < 0 || j >= inst.k()) throw InvalidInput("facility index out of range");
  std::vector<Agent> agents;
  agents.reserve(inst.n());
  for (const auto& a : inst.agents()) {
    agents.push_back({a.location, a.dislikes.contains(j) ? FacilitySet::single(0) : FacilitySet()});
  }
  return Instance(inst.space(), 1, std::move(agents));
}

Solution parallel(const Mechanism& single, const Instance& inst) {
  Solution y;
  y.placements.reserve(static_cast<std::size_t>(inst.k()));
  for (int j = 0; j < inst.k(); ++j) {
    const Solution part = single(single_projection(inst, j));
    if (part.placements.size() != 1) throw InvalidInput("parallel needs a single-facility mechanism");
    y.placements.push_back(part.placements.front());
  }
  return y;
}

// ---------------------------------------------------------------------------
// Path and cycle

GapAnalysis analyze_path_gaps(std::vector<Rational> xs) {
  if (xs.size() < 2) throw PreconditionError("gap analysis needs at least two haters");
  std::sort(xs.begin(), xs.end());
  GapAnalysis g;
  g.d1 = xs.front();
  g.d3 = Rational(1) - xs.back();
  Rational widest = xs[1] - xs[0];
  for (std::size_t i = 1; i + 1 < xs.size(); ++i) {
    Rational gap = xs[i + 1] - xs[i];
    if (gap > widest) {
      widest = std::move(gap);
      g.s = i;
    }
  }
  g.d2 = widest / Rational(2);
  g.m = xs[g.s] + g.d2;
  return g;
}

Solution path_gap_mechanism(const Instance& inst) {
  require_single(inst, SpaceKind::Path, "path_gap_mechanism");
  const auto xs = sorted_hater_coordinates(inst);
  if (xs.empty()) return uniform_solution(1, Point(Rational(0)));
  if (xs.size() == 1) {
    const Rational d1 = xs.front();
    const Rational d3 = Rational(1) - xs.front();
    return uniform_solution(1, Point(d1 >= d3 ? Rational(0) : Rational(1)));
  }
  const GapAnalysis g = analyze_path_gaps(xs);
  if (g.d1 >= g.d2 && g.d1 >= g.d3) return uniform_solution(1, Point(Rational(0)));
  if (g.d2 >= g.d3) return uniform_solution(1, Point(g.m));
  return uniform_solution(1, Point(Rational(1)));
}

Solution cycle_gap_mechanism(const Instance& inst) {
  require_single(inst, SpaceKind::Cycle, "cycle_gap_mechanism");
  const auto xs = sorted_hater_coordinates(inst);
  if (xs.empty()) return uniform_solution(1, Point(Rational(0)));
  const Rational one(1);
  auto wrap = [&](Rational v) { return v >= one ? v - one : v; };
  if (xs.size() == 1) return uniform_solution(1, Point(wrap(xs.front() + Rational(1, 2))));

  // Gap i runs clockwise from xs[i] to xs[i+1]; the last one wraps through 0.
  const std::size_t l = xs.size();
  std::size_t s = 0;
  Rational widest;
  for (std::size_t i = 0; i < l; ++i) {
    Rational gap = i + 1 < l ? xs[i + 1] - xs[i] : xs.front() + one - xs.back();
    if (i == 0 || gap > widest) {
      widest = std::move(gap);
      s = i;
    }
  }
  return uniform_solution(1, Point(wrap(xs[s] + widest / Rational(2))));
}

// ---------------------------------------------------------------------------
// Square

namespace {

struct Line {
  // a x + b y = c
  Rational a, b, c;
};

Line bisector(const Point& p, const Point& q) {
  const Rational a = q.x() - p.x();
  const Rational b = q.y() - p.y();
  const Rational c =
      (q.x() * q.x() + q.y() * q.y() - p.x() * p.x() - p.y() * p.y()) / Rational(2);
  return {a, b, c};
}

bool in_square(const Rational& x, const Rational& y) {
  const Rational zero, one(1);
  return x >= zero && x <= one && y >= zero && y <= one;
}

Rational cross(const Point& p, const Point& q, const Point& r) {
  return (q.x() - p.x()) * (r.y() - p.y()) - (q.y() - p.y()) * (r.x() - p.x());
}

std::optional<Point> circumcenter(const Point& p, const Point& q, const Point& r) {
  const Line l1 = bisector(p, q);
  const Line l2 = bisector(p, r);
  const Rational det = l1.a * l2.b - l2.a * l1.b;
  if (det.is_zero()) return std::nullopt;
  return Point((l1.c * l2.b - l2.c * l1.b) / det, (l1.a * l2.c - l2.a * l1.c) / det);
}

Rational squared_distance(const Point& p, const Point& q) {
  const Rational dx = p.x() - q.x();
  const Rational dy = p.y() - q.y();
  return dx * dx + dy * dy;
}

std::vector<Point> distinct(std::vector<Point> pts) {
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

std::vector<SquareCandidate> square_candidates(const std::vector<Point>& hater_locations) {
  if (hater_locations.empty()) throw PreconditionError("square_candidates needs at least one hater");
  const auto pts = distinct(hater_locations);
  const Rational zero, one(1);

  std::vector<SquareCandidate> out;
  for (int cx = 0; cx <= 1; ++cx) {
    for (int cy = 0; cy <= 1; ++cy) {
      out.push_back({Point(Rational(cx), Rational(cy)), CandidateKind::Corner});
    }
  }
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      const Line l = bisector(pts[i], pts[j]);
      for (const Rational& side : {zero, one}) {
        if (!l.b.is_zero()) {
          Rational y = (l.c - l.a * side) / l.b;
          if (in_square(side, y)) out.push_back({Point(side, std::move(y)), CandidateKind::BisectorBoundary});
        }
        if (!l.a.is_zero()) {
          Rational x = (l.c - l.b * side) / l.a;
          if (in_square(x, side)) out.push_back({Point(std::move(x), side), CandidateKind::BisectorBoundary});
        }
      }
      for (std::size_t t = j + 1; t < pts.size(); ++t) {
        auto c = circumcenter(pts[i], pts[j], pts[t]);
        if (c && in_square(c->x(), c->y())) out.push_back({std::move(*c), CandidateKind::Circumcenter});
      }
    }
  }
  return out;
}

bool in_general_position(const std::vector<Point>& locations) {
  const auto pts = distinct(locations);
  if (pts.size() != locations.size()) return false;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t t = j + 1; t < n; ++t) {
        if (cross(pts[i], pts[j], pts[t]).is_zero()) return false;
        const auto c = circumcenter(pts[i], pts[j], pts[t]);
        const Rational r2 = squared_distance(*c, pts[i]);
        for (std::size_t u = t + 1; u < n; ++u) {
          if (squared_distance(*c, pts[u]) == r2) return false;
        }
      }
    }
  }
  return true;
}

Solution square_empty_circle_mechanism(const Instance& inst) {
  require_single(inst, SpaceKind::Square, "square_empty_circle_mechanism");
  std::vector<Point> hs;
  for (const auto& a : inst.agents()) {
    if (a.dislikes.contains(0)) hs.push_back(a.location);
  }
  if (hs.empty()) return uniform_solution(1, Point(Rational(0), Rational(0)));
  const auto pts = distinct(hs);

  std::optional<Point> best;
  Rational best_value;
  for (auto& cand : square_candidates(pts)) {
    Rational nearest = squared_distance(cand.point, pts.front());
    for (std::size_t i = 1; i < pts.size(); ++i) nearest = std::min(nearest, squared_distance(cand.point, pts[i]));
    if (!best || nearest > best_value || (nearest == best_value && cand.point < *best)) {
      best_value = std::move(nearest);
      best = std::move(cand.point);
    }
  }
  return uniform_solution(1, *best);
}

// ---------------------------------------------------------------------------

Solution path_gap_parallel(const Instance& inst) { return parallel(path_gap_mechanism, inst); }
Solution cycle_gap_parallel(const Instance& inst) { return parallel(cycle_gap_mechanism, inst); }
Solution square_empty_circle_parallel(const Instance& inst) {
  return parallel(square_empty_circle_mechanism, inst);
}

Solution path_gap_uniform(const Instance& inst) {
  if (inst.space() != SpaceKind::Path) throw InvalidInput("path_gap_uniform requires a path instance");
  return uniform_solution(inst.k(), path_gap_mechanism(all_dislike_first(inst)).placements.front());
}

Solution cycle_gap_uniform(const Instance& inst) {
  if (inst.space() != SpaceKind::Cycle) throw InvalidInput("cycle_gap_uniform requires a cycle instance");
  return uniform_solution(inst.k(), cycle_gap_mechanism(all_dislike_first(inst)).placements.front());
}

}  // namespace ofl
