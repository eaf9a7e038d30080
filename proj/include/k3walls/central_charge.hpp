/**
 * @file central_charge.hpp
 * @brief Central charges on the (x, y) upper half-plane and wall curves.
 *
 * At σ_{x,y} (β = xH, ω = yH) the central charge of u = (r, c, s) is
 *
 *     Z(u) = 2d·c·z − s − r·d·z²,   z = x + iy,
 *
 * so Re Z = 2d·c·x − s − r·d·(x² − y²) and Im Z = 2d·y·(c − r·x). Both parts
 * are exact once y² is rational: Re Z depends on y² only and Im Z is a
 * rational multiple of y.
 */
#pragma once

#include <optional>
#include <variant>

#include "k3walls/lattice.hpp"
#include "k3walls/rational.hpp"

namespace k3walls {

class StabilityPoint {
 public:
  /// Throws std::invalid_argument unless y_sq > 0. `inexact` marks a y² that
  /// was rounded from a float.
  StabilityPoint(Rational x, Rational y_sq, bool inexact = false);

  const Rational& x() const noexcept { return x_; }
  const Rational& y_sq() const noexcept { return y_sq_; }
  bool inexact() const noexcept { return inexact_; }
  double y() const;

 private:
  Rational x_;
  Rational y_sq_;
  bool inexact_;
};

/// Z = re + i·(im_over_y · y).
struct ComplexValue {
  Rational re;
  Rational im_over_y;

  friend bool operator==(const ComplexValue&, const ComplexValue&) = default;
};

ComplexValue operator+(const ComplexValue& a, const ComplexValue& b);

struct VerticalLine {
  Rational x0;
  friend bool operator==(const VerticalLine&, const VerticalLine&) = default;
};

struct Semicircle {
  Rational center;
  Rational radius_sq;
  friend bool operator==(const Semicircle&, const Semicircle&) = default;
};

using WallCurve = std::variant<VerticalLine, Semicircle>;

ComplexValue central_charge(const MukaiVector& u, const StabilityPoint& pt, const SurfaceParams& p);

/// arg(Z)/π reduced modulo 1 into (0, 1]; positive reals have phase 1.
/// Throws std::domain_error("class collapses at this point") when Z = 0.
double phase(const MukaiVector& u, const StabilityPoint& pt, const SurfaceParams& p);

/// True when Z(u) and Z(w) are real multiples of each other (exact).
bool aligned(const ComplexValue& a, const ComplexValue& b);

/// Locus y > 0 where Im(Z(a)·conj Z(v)) = 0:  −P(x² + y²) + Qx + R = 0.
/// Throws std::invalid_argument if v ∥ a and std::domain_error
/// ("wall does not meet the half-plane") if the locus is empty.
WallCurve wall_locus(const MukaiVector& v, const MukaiVector& a, const SurfaceParams& p);

struct PathHit {
  enum class Kind { none, point, whole_ray };
  Kind kind = Kind::none;
  Rational y_sq;  // meaningful for Kind::point
};

/// Where the vertical ray x = x0 meets the curve.
PathHit path_intersection(const WallCurve& w, const Rational& x0);

struct GeometricCheck {
  enum class Status { ok, obstructed, inconclusive };
  Status status = Status::inconclusive;
  std::optional<MukaiVector> witness;
};

/// ok when d·y² > 1. Otherwise looks for a spherical class (r, c, s) with
/// 1 ≤ r ≤ rank_bound and x = c/r whose central charge is real and ≤ 0.
GeometricCheck geometric_check(const StabilityPoint& pt, const SurfaceParams& p, std::int64_t rank_bound);

}  // namespace k3walls
