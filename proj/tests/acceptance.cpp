// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <complex>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>

#include "k3walls/crossing.hpp"
#include "k3walls/report.hpp"
#include "k3walls/wall_finder.hpp"
#include "reference_tables.hpp"

using namespace k3walls;

namespace {

const SurfaceParams P1{1};

constexpr double kTable1Seconds = 1.0;
constexpr double kPropertySeconds = 30.0;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) detail << what;
    pass = pass && ok;
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

bool equivalent(const MukaiVector& a, const MukaiVector& b, const MukaiVector& v) {
  return are_parallel(a - b, v) || are_parallel(a + b, v) || a == b || a == -b;
}

WallTable hilbert(std::int64_t n, std::int64_t r_max) {
  SearchBounds b;
  b.r_max = r_max;
  return hilbert_walls(n, b, P1);
}

std::vector<WallRecord> walls_of(const MukaiVector& v) {
  const auto t = hilbert(10, 40);
  if (v == t.v) return t.walls;
  return transport_walls(t.walls, 3, t.v, P1);
}

WallRecord wall_at(const MukaiVector& v, const Rational& gamma) {
  for (const auto& w : walls_of(v))
    if (w.gamma == gamma) return w;
  throw std::logic_error("no wall at Gamma = " + to_string(gamma));
}

void compare_table(Outcome& out, const WallTable& t, const std::vector<ref::Row>& rows, const std::string& tag) {
  if (t.walls.size() != rows.size()) {
    out.require(false, tag + ": " + std::to_string(t.walls.size()) + " walls, expected " + std::to_string(rows.size()));
    return;
  }
  out.require(t.complete, tag + ": search incomplete");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& w = t.walls[i];
    const auto& r = rows[i];
    const std::string at = tag + " row " + std::to_string(i) + ": ";
    out.require(w.gamma && *w.gamma == r.gamma, at + "Gamma");
    out.require(equivalent(w.a, r.a, t.v), at + "class " + to_string(w.a));
    out.require(w.a_sq == r.a_sq, at + "a^2");
    out.require(w.pairing_va == r.pairing, at + "(v,a)");
    out.require(w.type == r.type, at + "type");
    if (r.center) {
      const auto* c = w.curve ? std::get_if<Semicircle>(&*w.curve) : nullptr;
      out.require(c && c->center == *r.center && c->radius_sq == *r.radius_sq, at + "circle");
    }
  }
}

std::multiset<MukaiVector> as_multiset(const std::vector<MukaiVector>& parts) { return {parts.begin(), parts.end()}; }

// 1. Table for n = 10.
void table1(Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  const auto t = hilbert(10, 40);
  const double elapsed = seconds_since(start);
  compare_table(out, t, ref::table_n10(), "n=10");
  // Circle equations as printed in the table, in the CLI's fraction notation.
  const std::vector<std::string> circles{"x = 0",
                                         "x^2 + 11x + y^2 = -9",
                                         "x^2 + 10x + y^2 = -9",
                                         "x^2 + 9x + y^2 = -9",
                                         "x^2 + 8x + y^2 = -9",
                                         "x^2 + 7x + y^2 = -9",
                                         "x^2 + (13/2)x + y^2 = -9",
                                         "x^2 + (19/3)x + y^2 = -9",
                                         "x^2 + (25/4)x + y^2 = -9",
                                         "x^2 + (31/5)x + y^2 = -9",
                                         "x^2 + (43/7)x + y^2 = -9",
                                         ""};
  const auto rows = table_rows(t, CircleStyle::expanded);
  for (std::size_t i = 0; i < std::min(rows.size(), circles.size()); ++i)
    out.require(rows[i].circle == circles[i], "circle " + std::to_string(i) + ": " + rows[i].circle);
  out.require(elapsed < kTable1Seconds, "runtime " + std::to_string(elapsed) + " s");
  out.detail << (out.pass ? "" : "; ") << "12 walls, " << elapsed << " s at r_max = 40";
}

// 2. Transport to (0,3,−1).
void table2(Outcome& out) {
  const auto t = hilbert(10, 40);
  const auto moved = transport_walls(t.walls, 3, t.v, P1);
  std::vector<Rational> radii;
  for (const auto& w : moved) {
    if (!w.gamma || *w.gamma < Rational(6, 19) || !w.curve) continue;
    const auto& c = std::get<Semicircle>(*w.curve);
    out.require(c.center == Rational(-1, 6), "center " + to_string(c.center));
    radii.push_back(c.radius_sq);
  }
  std::sort(radii.begin(), radii.end());
  out.require(radii == std::vector<Rational>{Rational(37, 36), Rational(49, 36), Rational(61, 36), Rational(85, 36)},
              "radii do not match");
  for (const auto& row : ref::torsion_table()) {
    const auto it = std::find_if(moved.begin(), moved.end(), [&](const WallRecord& w) { return w.gamma == row.gamma; });
    out.require(it != moved.end() && same_up_to_sign(it->a, row.a), "class at Gamma = " + to_string(row.gamma));
  }
  out.require(moved.back().a == MukaiVector{0, 0, 1}, "Lagrangian row maps to " + to_string(moved.back().a));
  out.detail << (out.pass ? "" : "; ") << "radius^2 = 37/36, 49/36, 61/36, 85/36";
}

// 3. Small n.
void appendix(Outcome& out) {
  compare_table(out, hilbert(2, 8), ref::table_n2(), "n=2");
  compare_table(out, hilbert(3, 12), ref::table_n3(), "n=3");
  compare_table(out, hilbert(4, 16), ref::table_n4(), "n=4");
  compare_table(out, hilbert(8, 32), ref::table_n8(), "n=8");
  out.detail << (out.pass ? "" : "; ") << "n = 2, 3, 4, 8";
}

// 4. Movable cones.
void cones(Outcome& out) {
  const std::vector<std::pair<std::int64_t, Rational>> want{
      {2, 1}, {3, Rational(1, 2)}, {4, Rational(1, 2)}, {8, Rational(3, 8)}, {10, Rational(1, 3)}};
  SearchBounds b;
  for (const auto& [n, g] : want) {
    b.r_max = 4 * n;
    const auto cone = movable_cone(n, b, P1);
    out.require(cone.gamma_max == g, "n=" + std::to_string(n) + ": " + to_string(cone.gamma_max));
    out.detail << (n == 2 ? "" : ", ") << to_string(cone.gamma_max);
  }
}

// 5. Path walks.
void paths(Outcome& out) {
  auto ys = [](const WallTable& t, const Rational& x0) {
    std::vector<Rational> out;
    for (const auto& r : walk_path(t, x0, 1)) out.push_back(r.hit.y_sq);
    return out;
  };
  const auto t = hilbert(10, 40);
  out.require(ys(t, -3) == std::vector<Rational>{15, 12, 9, 6, 3, Rational(3, 2)}, "n=10, x0=-3");
  const WallTable tt{{0, 3, -1}, transport_walls(t.walls, 3, t.v, P1), t.complete};
  out.require(ys(tt, Rational(-1, 6)) ==
                  std::vector<Rational>{Rational(85, 36), Rational(61, 36), Rational(49, 36), Rational(37, 36)},
              "(0,3,-1), x0=-1/6");
  out.require(ys(t, 0).empty(), "n=10, x0=0 not empty");
  out.detail << (out.pass ? "" : "; ") << "6 hits at x0 = -3, 4 hits at x0 = -1/6";
}

// 6. Decomposition sets.
void decomposition_sets(Outcome& out) {
  int total = 0;
  for (const auto& pw : ref::ten_walls()) {
    const auto decs = decompositions(pw.v, wall_at(pw.v, pw.gamma), 3, P1);
    std::set<std::multiset<MukaiVector>> got, want;
    for (const auto& d : decs) got.insert(as_multiset(d.parts));
    for (const auto& d : pw.decompositions) want.insert(as_multiset(d));
    out.require(got == want && decs.size() == got.size(), "wall " + std::to_string(pw.index));
    total += static_cast<int>(decs.size());
  }
  out.detail << (out.pass ? "" : "; ") << total << " decompositions on 10 walls";
}

// 7. Dimensions.
void dimension_suite(Outcome& out) {
  int checked = 0;
  for (const auto& pw : ref::ten_walls()) {
    const auto decs = decompositions(pw.v, wall_at(pw.v, pw.gamma), 3, P1);
    for (std::size_t k = 0; k < pw.decompositions.size(); ++k) {
      if (!pw.stratum_dims[k]) continue;
      const auto want = as_multiset(pw.decompositions[k]);
      const auto it = std::find_if(decs.begin(), decs.end(),
                                   [&](const Decomposition& d) { return as_multiset(d.parts) == want; });
      const std::string at = "wall " + std::to_string(pw.index) + "." + std::to_string(k);
      if (it == decs.end()) {
        out.require(false, at + " missing");
        continue;
      }
      try {
        const auto r = stratum_dims(*it, P1);
        out.require(r.stratum_dim == *pw.stratum_dims[k], at + " stratum " + std::to_string(r.stratum_dim));
        out.require(r.fiber_dims == pw.fiber_dims[k], at + " fibers");
        ++checked;
      } catch (const std::exception& e) {
        out.require(false, at + ": " + e.what());
      }
    }
  }
  out.detail << (out.pass ? "" : "; ") << checked << " strata";
}

// 8. Torsion candidates.
void torsion_candidates(Outcome& out) {
  SearchBounds b;
  b.r_max = 12;
  b.y_min = 1;
  const std::vector<std::pair<MukaiVector, std::vector<Semicircle>>> want{
      {{0, 2, -1}, {{Rational(-1, 4), Rational(25, 16)}, {Rational(-1, 4), Rational(17, 16)}}},
      {{0, 2, -2}, {{Rational(-1, 2), Rational(5, 4)}}},
      {{0, 1, 0}, {}},
  };
  for (const auto& [v, circles] : want) {
    const auto t = candidate_walls(v, b, P1);
    out.require(t.complete, to_string(v) + ": search incomplete");
    std::vector<Semicircle> got;
    for (const auto& w : t.walls) {
      out.require(w.type == WallType::candidate, to_string(v) + ": untagged entry");
      if (w.curve)
        if (const auto* c = std::get_if<Semicircle>(&*w.curve)) got.push_back(*c);
    }
    for (const auto& c : circles)
      out.require(std::find(got.begin(), got.end(), c) != got.end(),
                  to_string(v) + ": missing radius^2 " + to_string(c.radius_sq));
    out.detail << (v == want.front().first ? "" : ", ") << to_string(v) << ": " << got.size();
  }
}

// 9. Property suites.
std::complex<double> z_oracle(const MukaiVector& u, std::complex<double> z) {
  return 2.0 * double(u.c) * z - double(u.s) - double(u.r) * z * z;
}

void properties(Outcome& out) {
  const auto start = std::chrono::steady_clock::now();
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<std::int64_t> small(-40, 40), shift(-5, 5);

  // Isometries preserve the pairing.
  for (int i = 0; i < 10000; ++i) {
    const MukaiVector u{small(rng), small(rng), small(rng)}, w{small(rng), small(rng), small(rng)};
    const std::int64_t k = shift(rng);
    const auto before = mukai_pairing(u, w, P1);
    out.require(mukai_pairing(tensor_twist(u, k, P1), tensor_twist(w, k, P1), P1) == before, "twist isometry");
    out.require(mukai_pairing(phi_pushforward(u, k, P1), phi_pushforward(w, k, P1), P1) == before, "phi isometry");
    const auto s = line_bundle_vector(shift(rng), P1);
    out.require(mukai_pairing(spherical_reflect(u, s, P1), spherical_reflect(w, s, P1), P1) == before,
                "reflection isometry");
  }

  // Walls depend on the plane ⟨v,a⟩ only and move with twists.
  int loci = 0;
  while (loci < 1000) {
    const MukaiVector v{small(rng), small(rng), small(rng)}, a{small(rng), small(rng), small(rng)};
    if (are_parallel(v, a) || is_zero(a) || is_zero(v)) continue;
    WallCurve base;
    try {
      base = wall_locus(v, a, P1);
    } catch (const std::exception&) {
      continue;
    }
    const std::int64_t m = shift(rng);
    out.require(wall_locus(v, a + m * v, P1) == base, "locus depends on representative");
    const auto moved = wall_locus(tensor_twist(v, m, P1), tensor_twist(a, m, P1), P1);
    if (const auto* c = std::get_if<Semicircle>(&base))
      out.require(moved == WallCurve(Semicircle{c->center + m, c->radius_sq}), "twist shift (circle)");
    else
      out.require(moved == WallCurve(VerticalLine{std::get<VerticalLine>(base).x0 + m}), "twist shift (line)");
    ++loci;
  }

  // Z-additivity and the brute-force oracle on the ten walls.
  for (const auto& pw : ref::ten_walls()) {
    const auto wall = wall_at(pw.v, pw.gamma);
    const auto& circle = std::get<Semicircle>(*wall.curve);
    const std::complex<double> z{to_double(circle.center), std::sqrt(to_double(circle.radius_sq))};
    const auto zv = z_oracle(pw.v, z);
    for (const auto& d : decompositions(pw.v, wall, 3, P1)) {
      std::complex<double> sum = 0;
      for (const auto& u : d.parts) sum += z_oracle(u, z);
      out.require(std::abs(sum - zv) < 1e-9 * std::abs(zv), "Z not additive on wall " + std::to_string(pw.index));
    }
    // Every class m·b1 + n·b2 with |m|, |n| ≤ 50, λ in floating point.
    std::set<MukaiVector> brute;
    const auto basis = saturated_plane_basis(pw.v, wall.a);
    for (std::int64_t m = -50; m <= 50; ++m)
      for (std::int64_t n = -50; n <= 50; ++n) {
        const auto u = m * basis[0] + n * basis[1];
        if (is_zero(u) || are_parallel(u, pw.v)) continue;
        const auto usq = mukai_square(u, P1);
        if (usq < -2 || (!is_primitive(u) && usq <= 0)) continue;
        const auto ratio = z_oracle(u, z) / zv;
        if (ratio.real() > 1e-9 && ratio.real() < 1 - 1e-9) brute.insert(u);
      }
    const auto listed = positive_classes(pw.v, wall, P1);
    out.require(std::set<MukaiVector>(listed.begin(), listed.end()) == brute,
                "positive classes differ on wall " + std::to_string(pw.index));
  }

  // Doubling the search bound changes nothing.
  for (std::int64_t n : {2, 3, 4, 8, 10})
    out.require(hilbert(n, 4 * n).walls == hilbert(n, 8 * n).walls, "doubling n=" + std::to_string(n));

  const double elapsed = seconds_since(start);
  out.require(elapsed < kPropertySeconds, "runtime " + std::to_string(elapsed) + " s");
  out.detail << (out.pass ? "" : "; ") << elapsed << " s";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"walls for n = 10", table1},
      {"transported torsion walls", table2},
      {"small-n tables", appendix},
      {"movable cones", cones},
      {"path walks", paths},
      {"decomposition lists", decomposition_sets},
      {"stratum and fiber dimensions", dimension_suite},
      {"torsion candidates", torsion_candidates},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome out;
    try {
      criteria[i].second(out);
    } catch (const std::exception& e) {
      out.pass = false;
      out.detail << " exception: " << e.what();
    }
    if (!out.pass) ++failed;
    std::cout << "criterion " << i + 1 << ": " << (out.pass ? "PASS" : "FAIL") << "  " << criteria[i].first << "  ("
              << out.detail.str() << ")\n";
  }
  std::cout << (failed == 0 ? "all criteria pass" : std::to_string(failed) + " criteria fail") << "\n";
  return failed == 0 ? 0 : 1;
}
