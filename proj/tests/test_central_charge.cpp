#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <complex>
#include <random>

#include "k3walls/central_charge.hpp"

using namespace k3walls;

namespace {

const SurfaceParams P1{1};

// Z(u) = (e^{zH}, u) with e^{zH} = (1, z, d z²), evaluated in floating point.
std::complex<double> z_oracle(const MukaiVector& u, double x, double y, std::int64_t d) {
  const std::complex<double> z(x, y);
  const std::complex<double> er = 1.0, ec = z, es = static_cast<double>(d) * z * z;
  return 2.0 * static_cast<double>(d) * ec * static_cast<double>(u.c) - er * static_cast<double>(u.s) -
         static_cast<double>(u.r) * es;
}

MukaiVector random_vector(std::mt19937_64& rng, std::int64_t bound) {
  std::uniform_int_distribution<std::int64_t> dist(-bound, bound);
  return {dist(rng), dist(rng), dist(rng)};
}

Semicircle circle_of(const WallCurve& w) { return std::get<Semicircle>(w); }

}  // namespace

TEST_CASE("stability points") {
  CHECK_THROWS_AS(StabilityPoint(0, 0), std::invalid_argument);
  CHECK_THROWS_AS(StabilityPoint(0, -1), std::invalid_argument);
  CHECK(StabilityPoint(Rational(1, 2), 4).y() == doctest::Approx(2.0));
}

TEST_CASE("central charge values") {
  const StabilityPoint pt(-3, 15);
  CHECK(central_charge({0, 0, 1}, pt, P1) == ComplexValue{-1, 0});
  CHECK(central_charge({0, 0, 1}, StabilityPoint(7, Rational(1, 9)), P1) == ComplexValue{-1, 0});
  const ComplexValue z = central_charge({1, 0, -9}, pt, P1);
  CHECK(z.re == 15);
  CHECK(z.im_over_y == 6);
  const auto oracle = z_oracle({1, 0, -9}, -3, std::sqrt(15.0), 1);
  CHECK(to_double(z.re) == doctest::Approx(oracle.real()));
  CHECK(to_double(z.im_over_y) * pt.y() == doctest::Approx(oracle.imag()));
  CHECK(aligned(central_charge({1, -1, 2}, pt, P1), z));
  CHECK(!aligned(central_charge({1, -1, 2}, StabilityPoint(-3, 14), P1), central_charge({1, 0, -9}, StabilityPoint(-3, 14), P1)));
}

TEST_CASE("central charge agrees with the pairing formula") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-40, 40), den(1, 9);
  for (int i = 0; i < 500; ++i) {
    const auto u = random_vector(rng, 50);
    const Rational x(num(rng), den(rng));
    const Rational y_sq(den(rng) * den(rng), den(rng));
    for (std::int64_t d : {1, 2}) {
      const StabilityPoint pt(x, y_sq);
      const auto z = central_charge(u, pt, SurfaceParams(d));
      const auto o = z_oracle(u, to_double(x), pt.y(), d);
      CHECK(to_double(z.re) == doctest::Approx(o.real()).epsilon(1e-9));
      CHECK(to_double(z.im_over_y) * pt.y() == doctest::Approx(o.imag()).epsilon(1e-9));
    }
  }
}

TEST_CASE("additivity") {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 500; ++i) {
    const auto u = random_vector(rng, 100), w = random_vector(rng, 100);
    const StabilityPoint pt(Rational(i % 17 - 8, 3), Rational(i % 5 + 1, 7));
    CHECK(central_charge(u + w, pt, P1) == central_charge(u, pt, P1) + central_charge(w, pt, P1));
  }
}

TEST_CASE("phase") {
  CHECK(phase({0, 0, -1}, StabilityPoint(5, 2), P1) == doctest::Approx(1.0));
  CHECK(phase({0, 1, 0}, StabilityPoint(0, 4), P1) == doctest::Approx(0.5));
  const StabilityPoint pt(-3, 15);
  CHECK(phase({1, 0, -9}, pt, P1) == doctest::Approx(phase({1, -1, 2}, pt, P1)));
  const double ph = phase({1, 0, -9}, StabilityPoint(-1, 1), P1);
  CHECK(ph > 0.0);
  CHECK(ph <= 1.0);
  // O_S has Z = 0 at (0, 1).
  CHECK_THROWS_AS(phase({1, 0, 1}, StabilityPoint(0, 1), P1), std::domain_error);
}

TEST_CASE("wall locus examples") {
  CHECK(wall_locus({1, 0, -9}, {1, -1, 2}, P1) == WallCurve(Semicircle{Rational(-11, 2), Rational(85, 4)}));
  CHECK(wall_locus({1, 0, -9}, {0, 0, -1}, P1) == WallCurve(VerticalLine{0}));
  CHECK(wall_locus({0, 3, -1}, {1, 1, 2}, P1) == WallCurve(Semicircle{Rational(-1, 6), Rational(85, 36)}));
  CHECK_THROWS_AS(wall_locus({1, 0, -9}, {-2, 0, 18}, P1), std::invalid_argument);
  // Z(0,0,1) = -1 is real while Im Z(0,1,0) = 2y > 0: they never align.
  CHECK_THROWS_AS(wall_locus({0, 0, 1}, {0, 1, 0}, P1), std::domain_error);
}

TEST_CASE("wall locus lattice invariance") {
  std::mt19937_64 rng(17);
  int tested = 0;
  while (tested < 1000) {
    const auto v = random_vector(rng, 20), a = random_vector(rng, 20);
    const std::int64_t m = std::uniform_int_distribution<std::int64_t>(-10, 10)(rng);
    const MukaiVector shifted = a + m * v;
    if (are_parallel(v, a) || are_parallel(v, shifted)) continue;
    WallCurve w;
    try {
      w = wall_locus(v, a, P1);
    } catch (const std::domain_error&) {
      CHECK_THROWS_AS(wall_locus(v, shifted, P1), std::domain_error);
      CHECK_THROWS_AS(wall_locus(v, -a, P1), std::domain_error);
      ++tested;
      continue;
    }
    CHECK(wall_locus(v, shifted, P1) == w);
    CHECK(wall_locus(v, -a, P1) == w);
    ++tested;
  }
}

TEST_CASE("classes align at rational points of their wall") {
  const MukaiVector v{1, 0, -9};
  for (const MukaiVector a : {MukaiVector{1, -1, 2}, MukaiVector{0, 1, -7}, MukaiVector{1, -2, 4}}) {
    const auto c = circle_of(wall_locus(v, a, P1));
    for (int k = -3; k <= 3; ++k) {
      const Rational x = c.center + Rational(k, 4);
      const Rational y_sq = c.radius_sq - (x - c.center) * (x - c.center);
      if (y_sq <= 0) continue;
      const StabilityPoint pt(x, y_sq);
      CHECK(aligned(central_charge(a, pt, P1), central_charge(v, pt, P1)));
    }
  }
}

TEST_CASE("circle formulas on both sides of the flop") {
  // Hilbert side: (x + 1/Γ)² + y² = 1/Γ² − 9.
  const std::vector<std::pair<Rational, MukaiVector>> hilbert{
      {Rational(2, 11), {1, -1, 2}},   {Rational(1, 5), {1, -1, 1}},    {Rational(2, 9), {1, -1, 0}},
      {Rational(1, 4), {0, 1, -8}},    {Rational(2, 7), {0, 1, -7}},    {Rational(4, 13), {1, -2, 4}},
      {Rational(6, 19), {-1, 3, -10}}, {Rational(8, 25), {-1, 4, -16}}, {Rational(10, 31), {2, -5, 13}},
      {Rational(14, 43), {-2, 7, -25}}};
  for (const auto& [gamma, a] : hilbert) {
    const auto c = circle_of(wall_locus({1, 0, -9}, a, P1));
    CHECK(c.center == -1 / gamma);
    CHECK(c.radius_sq == 1 / (gamma * gamma) - 9);
  }
  // Torsion side: (x + 1/6)² + y² = 1/36 + Γ/(6(1 − 3Γ)).
  const std::vector<std::pair<Rational, MukaiVector>> torsion{{Rational(6, 19), {1, 0, 1}},
                                                              {Rational(8, 25), {1, 1, 1}},
                                                              {Rational(10, 31), {1, -1, 2}},
                                                              {Rational(14, 43), {1, 1, 2}}};
  for (const auto& [gamma, a] : torsion) {
    const auto c = circle_of(wall_locus({0, 3, -1}, a, P1));
    CHECK(c.center == Rational(-1, 6));
    CHECK(c.radius_sq == Rational(1, 36) + gamma / (6 * (1 - 3 * gamma)));
  }
}

TEST_CASE("path intersection") {
  const WallCurve w0 = Semicircle{Rational(-11, 2), Rational(85, 4)};
  auto hit = path_intersection(w0, -3);
  CHECK(hit.kind == PathHit::Kind::point);
  CHECK(hit.y_sq == 15);
  hit = path_intersection(Semicircle{Rational(-13, 4), Rational(25, 16)}, -3);
  CHECK(hit.kind == PathHit::Kind::point);
  CHECK(hit.y_sq == Rational(3, 2));
  CHECK(path_intersection(w0, 0).kind == PathHit::Kind::none);
  CHECK(path_intersection(VerticalLine{0}, 0).kind == PathHit::Kind::whole_ray);
  CHECK(path_intersection(VerticalLine{0}, 1).kind == PathHit::Kind::none);
  // Tangent point: y = 0 is not in the half-plane.
  CHECK(path_intersection(Semicircle{0, 1}, 1).kind == PathHit::Kind::none);
}

TEST_CASE("geometric check") {
  CHECK(geometric_check(StabilityPoint(-3, Rational(36, 25)), P1, 5).status == GeometricCheck::Status::ok);
  auto r = geometric_check(StabilityPoint(0, Rational(1, 4)), P1, 1);
  CHECK(r.status == GeometricCheck::Status::obstructed);
  CHECK(r.witness == MukaiVector{1, 0, 1});
  r = geometric_check(StabilityPoint(Rational(-1, 2), Rational(1, 9)), P1, 2);
  CHECK(r.status == GeometricCheck::Status::obstructed);
  CHECK(r.witness == MukaiVector{2, -1, 1});
  CHECK(mukai_square(*r.witness, P1) == -2);
  // Above the witness bound y = 1/2 nothing is found for x = -1/2.
  CHECK(geometric_check(StabilityPoint(Rational(-1, 2), Rational(1, 2)), P1, 2).status ==
        GeometricCheck::Status::inconclusive);
  // Rank bound too small to reach x = -1/2.
  CHECK(geometric_check(StabilityPoint(Rational(-1, 2), Rational(1, 9)), P1, 1).status ==
        GeometricCheck::Status::inconclusive);
  CHECK(geometric_check(StabilityPoint(0, Rational(1, 4), true), P1, 5).status ==
        GeometricCheck::Status::inconclusive);
}
