#include "k3walls/wall_finder.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>
#include <tuple>

#include "k3walls/crossing.hpp"

namespace k3walls {

using checked::add;
using checked::mul;
using checked::sub;

MukaiVector hilbert_vector(std::int64_t n) { return {1, 0, sub(1, n)}; }

namespace {

// u ↦ (−s, 2d·c, −r), so that (u, x) is the dot product of gram(u) and x.
MukaiVector gram(const MukaiVector& u, const SurfaceParams& p) {
  return {sub(0, u.s), mul(p.h_squared(), u.c), sub(0, u.r)};
}

MukaiVector cross(const MukaiVector& a, const MukaiVector& b) {
  return {sub(mul(a.c, b.s), mul(a.s, b.c)), sub(mul(a.s, b.r), mul(a.r, b.s)), sub(mul(a.r, b.c), mul(a.c, b.r))};
}

std::optional<WallCurve> try_locus(const MukaiVector& v, const MukaiVector& a, const SurfaceParams& p) {
  try {
    return wall_locus(v, a, p);
  } catch (const std::domain_error&) {
    return std::nullopt;
  }
}

int type_priority(WallType t) {
  switch (t) {
    case WallType::divisorial:
      return 0;
    case WallType::boundary_lagrangian:
      return 1;
    case WallType::flopping:
      return 2;
    case WallType::candidate:
      return 3;
  }
  return 3;
}

auto size_key(const MukaiVector& a) { return std::make_tuple(std::llabs(a.r), std::llabs(a.c), std::llabs(a.s)); }

struct Clause {
  std::int64_t a_sq;
  std::int64_t pairing;
  WallType type;
};

std::vector<Clause> hilbert_clauses(std::int64_t n) {
  std::vector<Clause> out{{-2, 0, WallType::divisorial},
                          {0, 1, WallType::divisorial},
                          {0, 2, WallType::divisorial},
                          {0, 0, WallType::boundary_lagrangian}};
  for (std::int64_t k = 1; k <= n - 1; ++k) out.push_back({-2, k, WallType::flopping});
  for (std::int64_t k = 3; k <= n - 1; ++k) out.push_back({0, k, WallType::flopping});
  for (std::int64_t A = 2; 2 * A < n - 1; A += 2)
    for (std::int64_t k = 2 * A + 1; k <= n - 1; ++k) out.push_back({A, k, WallType::flopping});
  return out;
}

struct Solution {
  Rational gamma;
  WallType type;
  MukaiVector a;
  std::int64_t a_sq;
  std::int64_t pairing;
};

struct HilbertSearch {
  Rational gamma_max;
  std::vector<WallRecord> walls;
};

HilbertSearch search_hilbert(std::int64_t n, std::int64_t r_max, const SurfaceParams& p) {
  const MukaiVector v = hilbert_vector(n);
  const std::int64_t v_sq = mukai_square(v, p);
  std::vector<Solution> sols;
  for (const Clause& clause : hilbert_clauses(n)) {
    for (std::int64_t r = -r_max; r <= r_max; ++r) {
      // (v, a) = k forces s = r(n−1) − k; a² = A then reads d·c² = r·s + A/2.
      const std::int64_t s = sub(mul(r, n - 1), clause.pairing);
      const std::int64_t rhs = add(mul(r, s), clause.a_sq / 2);
      if (rhs < 0 || rhs % p.d() != 0) continue;
      std::int64_t c = 0;
      if (!is_perfect_square(rhs / p.d(), &c)) continue;
      const bool lagrangian = clause.type == WallType::boundary_lagrangian;
      if (!lagrangian && mul(clause.pairing, clause.pairing) - mul(v_sq, clause.a_sq) <= 0) continue;
      for (std::int64_t sign : {1, -1}) {
        if (sign < 0 && c == 0) break;
        MukaiVector a{r, sign * c, s};
        if (is_zero(a) || are_parallel(a, v)) continue;
        Rational gamma;
        try {
          gamma = gamma_of_wall(n, a, p);
        } catch (const std::domain_error&) {
          continue;
        }
        if (clause.pairing == 0) {
          // a and −a both satisfy the clause; keep the one with Im Z(a) > 0
          // just right of the wall center.
          const Rational x_ref = gamma > 0 ? Rational(-1 / gamma) : Rational(0);
          const Rational im = a.c - a.r * x_ref;
          if (im < 0 || (im == 0 && a.r > 0)) a = -a;
        }
        sols.push_back({gamma, clause.type, a, clause.a_sq, clause.pairing});
      }
    }
  }

  std::optional<Rational> gamma_max;
  for (const auto& sol : sols) {
    if (sol.type == WallType::flopping || sol.gamma <= 0) continue;
    if (!gamma_max || sol.gamma < *gamma_max) gamma_max = sol.gamma;
  }
  if (!gamma_max) throw std::domain_error("no cone boundary within search bounds");

  std::map<Rational, Solution> best;
  for (const auto& sol : sols) {
    if (sol.gamma < 0 || sol.gamma > *gamma_max) continue;
    if (sol.gamma == *gamma_max && sol.type == WallType::flopping) continue;
    auto it = best.find(sol.gamma);
    if (it == best.end()) {
      best.emplace(sol.gamma, sol);
      continue;
    }
    const auto key = [](const Solution& s) {
      return std::make_tuple(type_priority(s.type), size_key(s.a), s.a);
    };
    if (key(sol) < key(it->second)) it->second = sol;
  }

  HilbertSearch out{*gamma_max, {}};
  for (const auto& [gamma, sol] : best) {
    WallRecord rec;
    rec.a = sol.a;
    rec.a_sq = sol.a_sq;
    rec.pairing_va = sol.pairing;
    rec.gamma = gamma;
    rec.type = sol.type;
    if (sol.type != WallType::boundary_lagrangian) rec.curve = try_locus(v, sol.a, p);
    out.walls.push_back(rec);
  }
  return out;
}

void require_hilbert_n(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("n must be at least 2, got " + std::to_string(n));
}

void require_r_max(const SearchBounds& bounds) {
  if (bounds.r_max < 1) throw std::invalid_argument("r_max must be at least 1");
}

}  // namespace

Rational gamma_of_wall(std::int64_t n, const MukaiVector& a, const SurfaceParams& p) {
  const MukaiVector v = hilbert_vector(n);
  MukaiVector w = cross(gram(v, p), gram(a, p));
  if (is_zero(w)) throw std::invalid_argument(to_string(a) + " is parallel to " + to_string(v));
  w = primitive_part(w);
  // v^⊥ is spanned by H̃ = (0,−1,0) and B = (−1,0,1−n): w = α·H̃ + β·B.
  const std::int64_t alpha = -w.c;
  const std::int64_t beta = -w.r;
  if (w.s != mul(w.r, n - 1)) throw std::logic_error("orthogonal generator left the span of H~ and B");
  if (alpha == 0) throw std::domain_error("wall of " + to_string(a) + " has no finite Gamma");
  return alpha > 0 ? Rational(-beta, alpha) : Rational(beta, -alpha);
}

WallTable hilbert_walls(std::int64_t n, const SearchBounds& bounds, const SurfaceParams& p) {
  require_hilbert_n(n);
  require_r_max(bounds);
  const HilbertSearch first = search_hilbert(n, bounds.r_max, p);
  const HilbertSearch doubled = search_hilbert(n, mul(bounds.r_max, 2), p);
  WallTable table;
  table.v = hilbert_vector(n);
  table.walls = first.walls;
  table.complete = first.walls == doubled.walls;
  return table;
}

MovableCone movable_cone(std::int64_t n, const SearchBounds& bounds, const SurfaceParams& p) {
  require_hilbert_n(n);
  require_r_max(bounds);
  MovableCone cone;
  cone.n = n;
  cone.gamma_min = 0;
  cone.gamma_max = search_hilbert(n, bounds.r_max, p).gamma_max;
  cone.h_tilde = {0, -1, 0};
  cone.b = {-1, 0, sub(1, n)};
  return cone;
}

std::vector<WallRecord> transport_walls(const std::vector<WallRecord>& records, std::int64_t m,
                                        const MukaiVector& v, const SurfaceParams& p) {
  const MukaiVector v_image = phi_pushforward(v, m, p);
  std::vector<WallRecord> out;
  out.reserve(records.size());
  for (const auto& rec : records) {
    WallRecord moved = rec;
    moved.a = phi_pushforward(rec.a, m, p);
    moved.a_sq = mukai_square(moved.a, p);
    moved.pairing_va = mukai_pairing(v_image, moved.a, p);
    moved.curve = rec.type == WallType::boundary_lagrangian ? std::nullopt : try_locus(v_image, moved.a, p);
    out.push_back(moved);
  }
  return out;
}

std::optional<HilbertPreimage> find_hilbert_preimage(const MukaiVector& v, const SurfaceParams& p) {
  const std::int64_t sq = mukai_square(v, p);
  if (sq < 2) return std::nullopt;
  const std::int64_t n = sq / 2 + 1;
  const MukaiVector base = hilbert_vector(n);
  const std::int64_t bound = mul(4, n);
  for (std::int64_t k = 0; k <= bound; ++k) {
    for (std::int64_t m : {k, -k}) {
      try {
        if (phi_pushforward(base, m, p) == v) return HilbertPreimage{n, m};
      } catch (const std::overflow_error&) {
      }
      if (k == 0) break;
    }
  }
  return std::nullopt;
}

namespace {


std::vector<WallRecord> search_candidates(const MukaiVector& v, std::int64_t r_max, const Rational& y_min,
                                          const SurfaceParams& p) {
  const MukaiVector v0 = primitive_part(v);
  const auto basis = complete_to_basis(v0);
  const std::int64_t v_sq = mukai_square(v, p);
  const Rational y_min_sq = y_min * y_min;
  std::map<std::pair<Rational, Rational>, WallRecord> found;

  for (std::int64_t i = -r_max; i <= r_max; ++i) {
    for (std::int64_t j = -r_max; j <= r_max; ++j) {
      if (std::gcd(i, j) != 1) continue;
      if (i < 0 || (i == 0 && j < 0)) continue;
      const MukaiVector a = i * basis[1] + j * basis[2];
      const auto curve = try_locus(v, a, p);
      if (!curve || !std::holds_alternative<Semicircle>(*curve)) continue;
      const auto& circle = std::get<Semicircle>(*curve);
      if (circle.radius_sq <= y_min_sq) continue;
      const std::int64_t k = mukai_pairing(v, a, p);
      if (mul(k, k) - mul(v_sq, mukai_square(a, p)) <= 0) continue;
      const auto key = std::make_pair(circle.center, circle.radius_sq);
      if (found.count(key)) continue;

      std::vector<PositiveClass> classes;
      try {
        classes = plane_positive_classes(v, {v0, a}, circle, p);
      } catch (const std::domain_error&) {
        continue;
      }
      std::set<MukaiVector> members;
      for (const auto& c : classes) members.insert(c.u);
      std::optional<MukaiVector> rep;
      for (const auto& c : classes) {
        if (!members.count(v - c.u)) continue;
        for (const MukaiVector& part : {c.u, v - c.u})
          if (!rep || std::make_tuple(size_key(part), part) < std::make_tuple(size_key(*rep), *rep)) rep = part;
      }
      if (!rep) continue;
      WallRecord rec;
      rec.a = *rep;
      rec.a_sq = mukai_square(*rep, p);
      rec.pairing_va = mukai_pairing(v, *rep, p);
      rec.curve = *curve;
      rec.type = WallType::candidate;
      found.emplace(key, rec);
    }
  }

  std::vector<WallRecord> out;
  for (auto& [key, rec] : found) out.push_back(rec);
  std::sort(out.begin(), out.end(), [](const WallRecord& x, const WallRecord& y) {
    const auto& cx = std::get<Semicircle>(*x.curve);
    const auto& cy = std::get<Semicircle>(*y.curve);
    if (cx.radius_sq != cy.radius_sq) return cx.radius_sq > cy.radius_sq;
    return cx.center < cy.center;
  });
  return out;
}

}  // namespace

WallTable candidate_walls(const MukaiVector& v, const SearchBounds& bounds, const SurfaceParams& p) {
  require_r_max(bounds);
  if (is_zero(v)) throw std::invalid_argument("candidate_walls needs a nonzero vector");
  if (mukai_square(v, p) < -2) throw std::invalid_argument("no stable objects of class " + to_string(v));
  if (bounds.y_min < 0) throw std::invalid_argument("y_min must be non-negative");
  WallTable table;
  table.v = v;
  table.walls = search_candidates(v, bounds.r_max, bounds.y_min, p);
  const auto doubled = search_candidates(v, mul(bounds.r_max, 2), bounds.y_min, p);
  auto curves = [](const std::vector<WallRecord>& walls) {
    std::vector<WallCurve> out;
    for (const auto& w : walls) out.push_back(*w.curve);
    return out;
  };
  table.complete = curves(table.walls) == curves(doubled);
  return table;
}

}  // namespace k3walls
