#include "k3walls/central_charge.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace k3walls {

StabilityPoint::StabilityPoint(Rational x, Rational y_sq, bool inexact)
    : x_(std::move(x)), y_sq_(std::move(y_sq)), inexact_(inexact) {
  if (y_sq_ <= 0) throw std::invalid_argument("stability point needs y > 0");
}

double StabilityPoint::y() const { return std::sqrt(to_double(y_sq_)); }

ComplexValue operator+(const ComplexValue& a, const ComplexValue& b) {
  return {a.re + b.re, a.im_over_y + b.im_over_y};
}

ComplexValue central_charge(const MukaiVector& u, const StabilityPoint& pt, const SurfaceParams& p) {
  const Rational& x = pt.x();
  const Rational d = p.d();
  ComplexValue z;
  z.re = 2 * d * u.c * x - u.s - u.r * d * (x * x - pt.y_sq());
  z.im_over_y = 2 * d * (u.c - u.r * x);
  return z;
}

double phase(const MukaiVector& u, const StabilityPoint& pt, const SurfaceParams& p) {
  const ComplexValue z = central_charge(u, pt, p);
  if (z.re == 0 && z.im_over_y == 0) throw std::domain_error("class collapses at this point");
  const double theta = std::atan2(to_double(z.im_over_y) * pt.y(), to_double(z.re)) / std::numbers::pi;
  return theta <= 0.0 ? theta + 1.0 : theta;
}

bool aligned(const ComplexValue& a, const ComplexValue& b) {
  // Im(a·conj b) / y
  return a.im_over_y * b.re - a.re * b.im_over_y == 0;
}

WallCurve wall_locus(const MukaiVector& v, const MukaiVector& a, const SurfaceParams& p) {
  if (are_parallel(v, a))
    throw std::invalid_argument("wall_locus needs independent classes, got " + to_string(v) + " and " + to_string(a));
  const Rational P = Rational(p.d()) * (Rational(v.c) * a.r - Rational(a.c) * v.r);
  const Rational Q = Rational(a.r) * v.s - Rational(v.r) * a.s;
  const Rational R = Rational(v.c) * a.s - Rational(a.c) * v.s;
  if (P == 0) {
    if (Q == 0) throw std::domain_error("wall does not meet the half-plane");
    return VerticalLine{-R / Q};
  }
  const Rational center = Q / (2 * P);
  const Rational radius_sq = R / P + center * center;
  if (radius_sq <= 0) throw std::domain_error("wall does not meet the half-plane");
  return Semicircle{center, radius_sq};
}

PathHit path_intersection(const WallCurve& w, const Rational& x0) {
  PathHit hit;
  if (const auto* line = std::get_if<VerticalLine>(&w)) {
    if (line->x0 == x0) hit.kind = PathHit::Kind::whole_ray;
    return hit;
  }
  const auto& circle = std::get<Semicircle>(w);
  const Rational dx = x0 - circle.center;
  const Rational y_sq = circle.radius_sq - dx * dx;
  if (y_sq > 0) {
    hit.kind = PathHit::Kind::point;
    hit.y_sq = y_sq;
  }
  return hit;
}

GeometricCheck geometric_check(const StabilityPoint& pt, const SurfaceParams& p, std::int64_t rank_bound) {
  GeometricCheck out;
  if (pt.y_sq() * p.d() > 1) {
    out.status = GeometricCheck::Status::ok;
    return out;
  }
  if (pt.inexact()) return out;
  const BigInt num = numerator_of(pt.x());
  const BigInt den = denominator_of(pt.x());
  // Spherical classes with c/r = x have r = k·den, c = k·num. The smallest
  // such r gives the weakest bound y² ≤ 1/(d r²), so the first hit decides.
  for (BigInt r = den, c = num; r <= rank_bound; r += den, c += num) {
    const BigInt top = BigInt(p.d()) * c * c + 1;
    if (top % r != 0) continue;
    const MukaiVector w{to_int64(r), to_int64(c), to_int64(top / r)};
    if (pt.y_sq() * p.d() * Rational(r * r) <= 1) {
      out.status = GeometricCheck::Status::obstructed;
      out.witness = w;
    }
    return out;
  }
  return out;
}

}  // namespace k3walls
