#include "ofl/core.hpp"

#include "ofl/error.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <sstream>

namespace ofl {

std::string_view to_string(SpaceKind kind) {
  switch (kind) {
    case SpaceKind::Path: return "path";
    case SpaceKind::Cycle: return "cycle";
    case SpaceKind::Square: return "square";
  }
  return "?";
}

std::optional<SpaceKind> parse_space(std::string_view name) {
  if (name == "path") return SpaceKind::Path;
  if (name == "cycle") return SpaceKind::Cycle;
  if (name == "square") return SpaceKind::Square;
  return std::nullopt;
}

int dimension(SpaceKind kind) { return kind == SpaceKind::Square ? 2 : 1; }

std::string Point::str() const {
  if (dim_ == 1) return c_[0].str();
  return "(" + c_[0].str() + ", " + c_[1].str() + ")";
}

bool valid_point(SpaceKind space, const Point& p) {
  if (p.dimension() != dimension(space)) return false;
  const Rational zero, one(1);
  switch (space) {
    case SpaceKind::Path: return p.x() >= zero && p.x() <= one;
    case SpaceKind::Cycle: return p.x() >= zero && p.x() < one;
    case SpaceKind::Square:
      return p.x() >= zero && p.x() <= one && p.y() >= zero && p.y() <= one;
  }
  return false;
}

// ---------------------------------------------------------------------------

Length Length::exact(Rational value) {
  Length l;
  l.magnitude_ = std::move(value);
  return l;
}

Length Length::from_squared(Rational squared) {
  Length l;
  l.magnitude_ = std::move(squared);
  l.squared_form_ = true;
  return l;
}

std::optional<Rational> Length::exact_value() const {
  if (!squared_form_) return magnitude_;
  // Perfect squares still have an exact root.
  const mpz_class& num = magnitude_.mpq().get_num();
  const mpz_class& den = magnitude_.mpq().get_den();
  if (mpz_perfect_square_p(num.get_mpz_t()) && mpz_perfect_square_p(den.get_mpz_t())) {
    mpz_class rn, rd;
    mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
    return Rational(mpq_class(rn, rd));
  }
  return std::nullopt;
}

Rational Length::squared() const { return squared_form_ ? magnitude_ : magnitude_ * magnitude_; }

double Length::value() const {
  return squared_form_ ? std::sqrt(magnitude_.to_double()) : magnitude_.to_double();
}

int Length::compare(const Length& a, const Length& b) {
  if (!a.squared_form_ && !b.squared_form_) return cmp(a.magnitude_.mpq(), b.magnitude_.mpq());
  return cmp(a.squared().mpq(), b.squared().mpq());
}

std::string Length::str() const {
  if (auto e = exact_value()) return e->str();
  std::ostringstream os;
  os.precision(17);
  os << "sqrt(" << magnitude_.str() << ")~" << value();
  return os.str();
}

Measure& Measure::operator+=(const Length& term) {
  value += term.value();
  if (exact) {
    if (auto e = term.exact_value()) {
      *exact += *e;
    } else {
      exact.reset();
    }
  }
  if (exact) value = exact->to_double();
  return *this;
}

std::string Measure::str() const {
  if (exact) return exact->str();
  std::ostringstream os;
  os.precision(17);
  os << value;
  return os.str();
}

// ---------------------------------------------------------------------------

FacilitySet FacilitySet::all(int k) {
  return FacilitySet(k >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << k) - 1);
}

int FacilitySet::size() const noexcept { return std::popcount(bits_); }

Instance::Instance(SpaceKind space, int k, std::vector<Agent> agents)
    : space_(space), k_(k), agents_(std::move(agents)) {
  if (agents_.empty()) throw InvalidInput("instance must have at least one agent");
  if (k_ < 1 || k_ > FacilitySet::kMaxFacilities) {
    throw InvalidInput("facility count k must be in [1, 64], got " + std::to_string(k_));
  }
  const auto allowed = FacilitySet::all(k_).bits();
  for (std::size_t i = 0; i < agents_.size(); ++i) {
    if (!valid_point(space_, agents_[i].location)) {
      throw InvalidInput("agent " + std::to_string(i + 1) + " location " +
                         agents_[i].location.str() + " is not a valid " +
                         std::string(to_string(space_)) + " point");
    }
    if ((agents_[i].dislikes.bits() & ~allowed) != 0) {
      throw InvalidInput("agent " + std::to_string(i + 1) + " dislikes a facility index > k");
    }
  }
}

Instance Instance::with_reports(std::span<const FacilitySet> reports) const {
  if (reports.size() != agents_.size()) throw InvalidInput("report profile has wrong length");
  std::vector<Agent> a = agents_;
  for (std::size_t i = 0; i < a.size(); ++i) a[i].dislikes = reports[i];
  return Instance(space_, k_, std::move(a));
}

Instance Instance::with_report(std::size_t i, FacilitySet report) const {
  std::vector<Agent> a = agents_;
  a.at(i).dislikes = report;
  return Instance(space_, k_, std::move(a));
}

std::vector<FacilitySet> Instance::reports() const {
  std::vector<FacilitySet> r;
  r.reserve(agents_.size());
  for (const auto& a : agents_) r.push_back(a.dislikes);
  return r;
}

std::string Solution::str() const {
  std::string s = "(";
  for (std::size_t j = 0; j < placements.size(); ++j) {
    if (j) s += ", ";
    s += placements[j].str();
  }
  return s + ")";
}

// ---------------------------------------------------------------------------

Length distance(SpaceKind space, const Point& p, const Point& q) {
  const int d = dimension(space);
  if (p.dimension() != d || q.dimension() != d) {
    throw InvalidInput("point dimension does not match the " + std::string(to_string(space)));
  }
  switch (space) {
    case SpaceKind::Path: return Length::exact(abs(p.x() - q.x()));
    case SpaceKind::Cycle: {
      Rational a = abs(p.x() - q.x());
      Rational b = Rational(1) - a;
      return Length::exact(a <= b ? a : b);
    }
    case SpaceKind::Square: {
      const Rational dx = p.x() - q.x();
      const Rational dy = p.y() - q.y();
      return Length::from_squared(dx * dx + dy * dy);
    }
  }
  return {};
}

Length farthest_distance(SpaceKind space, const Point& p) {
  switch (space) {
    case SpaceKind::Path: {
      Rational left = p.x();
      Rational right = Rational(1) - p.x();
      return Length::exact(left >= right ? left : right);
    }
    case SpaceKind::Cycle: return Length::exact(Rational(1, 2));
    case SpaceKind::Square: {
      Length best = Length::from_squared(Rational(0));
      for (int cx = 0; cx <= 1; ++cx) {
        for (int cy = 0; cy <= 1; ++cy) {
          best = std::max(best, distance(space, p, Point(Rational(cx), Rational(cy))));
        }
      }
      return best;
    }
  }
  return {};
}

void validate_solution(const Instance& inst, const Solution& y) {
  if (static_cast<int>(y.placements.size()) != inst.k()) {
    throw InvalidInput("solution has " + std::to_string(y.placements.size()) +
                       " placements, expected k = " + std::to_string(inst.k()));
  }
  for (const auto& p : y.placements) {
    if (!valid_point(inst.space(), p)) {
      throw InvalidInput("placement " + p.str() + " is not a valid " +
                         std::string(to_string(inst.space())) + " point");
    }
  }
}

namespace {

Length welfare_unchecked(const Instance& inst, std::size_t i, const Solution& y) {
  const Agent& a = inst.agents()[i];
  if (a.dislikes.empty()) return farthest_distance(inst.space(), a.location);
  std::optional<Length> best;
  for (int j = 0; j < inst.k(); ++j) {
    if (!a.dislikes.contains(j)) continue;
    Length d = distance(inst.space(), a.location, y.placements[j]);
    if (!best || d < *best) best = std::move(d);
  }
  return *best;
}

}  // namespace

Length agent_welfare(const Instance& inst, std::size_t i, const Solution& y) {
  if (i >= inst.n()) throw InvalidInput("agent index out of range");
  validate_solution(inst, y);
  return welfare_unchecked(inst, i, y);
}

Measure social_welfare(const Instance& inst, const Solution& y) {
  validate_solution(inst, y);
  Measure total{Rational(0), 0.0};
  for (std::size_t i = 0; i < inst.n(); ++i) total += welfare_unchecked(inst, i, y);
  return total;
}

Length min_welfare(const Instance& inst, const Solution& y) {
  validate_solution(inst, y);
  Length worst = welfare_unchecked(inst, 0, y);
  for (std::size_t i = 1; i < inst.n(); ++i) worst = std::min(worst, welfare_unchecked(inst, i, y));
  return worst;
}

std::vector<std::size_t> haters(const Instance& inst, int j) {
  if (j < 0 || j >= inst.k()) throw InvalidInput("facility index out of range");
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    if (inst.agents()[i].dislikes.contains(j)) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> indiff(const Instance& inst) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < inst.n(); ++i) {
    if (inst.agents()[i].dislikes.empty()) out.push_back(i);
  }
  return out;
}

Solution uniform_solution(int k, const Point& p) {
  return Solution{std::vector<Point>(static_cast<std::size_t>(k), p)};
}

}  // namespace ofl
