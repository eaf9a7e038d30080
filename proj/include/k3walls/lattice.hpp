/**
 * @file lattice.hpp
 * @brief Algebraic Mukai lattice of a K3 surface with Pic = Z·H, H² = 2d.
 *
 * A Mukai vector (r, c, s) stands for r ⊕ c·H ⊕ s·[pt]. The pairing is
 *
 *     (u, w) = 2d·c_u·c_w − r_u·s_w − r_w·s_u
 *
 * and all autoequivalence actions below are isometries of it. Coordinates are
 * 64-bit; products that would overflow throw std::overflow_error.
 */
#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

namespace k3walls {

class SurfaceParams {
 public:
  /// H² = 2d. Throws std::invalid_argument unless d ≥ 1.
  explicit SurfaceParams(std::int64_t d = 1);

  std::int64_t d() const noexcept { return d_; }
  std::int64_t h_squared() const noexcept { return 2 * d_; }

  friend bool operator==(const SurfaceParams&, const SurfaceParams&) = default;

 private:
  std::int64_t d_;
};

struct MukaiVector {
  std::int64_t r = 0;
  std::int64_t c = 0;
  std::int64_t s = 0;

  friend bool operator==(const MukaiVector&, const MukaiVector&) = default;
  friend auto operator<=>(const MukaiVector&, const MukaiVector&) = default;
};

MukaiVector operator+(const MukaiVector& u, const MukaiVector& w);
MukaiVector operator-(const MukaiVector& u, const MukaiVector& w);
MukaiVector operator-(const MukaiVector& u);
MukaiVector operator*(std::int64_t k, const MukaiVector& u);

/// "(r,c,s)"
std::string to_string(const MukaiVector& u);
std::ostream& operator<<(std::ostream& os, const MukaiVector& u);

/// Parses "r,c,s" or "(r,c,s)". Throws std::invalid_argument.
MukaiVector parse_mukai_vector(const std::string& text);

bool is_zero(const MukaiVector& u) noexcept;
/// gcd(|r|,|c|,|s|); zero for the zero vector.
std::int64_t content(const MukaiVector& u) noexcept;
bool is_primitive(const MukaiVector& u) noexcept;
/// u / content(u). Throws std::invalid_argument for the zero vector.
MukaiVector primitive_part(const MukaiVector& u);
/// Linearly dependent over Q (the zero vector is parallel to everything).
bool are_parallel(const MukaiVector& u, const MukaiVector& w) noexcept;
/// a and w span the same line, i.e. a = ±w.
bool same_up_to_sign(const MukaiVector& a, const MukaiVector& w) noexcept;

std::int64_t mukai_pairing(const MukaiVector& u, const MukaiVector& w, const SurfaceParams& p);
std::int64_t mukai_square(const MukaiVector& u, const SurfaceParams& p);

/// Mukai vector of O_S(kH): (1, k, d·k² + 1).
MukaiVector line_bundle_vector(std::int64_t k, const SurfaceParams& p);

/// Cohomological action of − ⊗ O_S(kH).
MukaiVector tensor_twist(const MukaiVector& u, std::int64_t k, const SurfaceParams& p);

/// Reflection u ↦ u + (u,w)·w in a spherical class w.
/// Throws std::invalid_argument if w² ≠ −2.
MukaiVector spherical_reflect(const MukaiVector& u, const MukaiVector& w, const SurfaceParams& p);

/// Derived dual followed by [1]: (r,c,s) ↦ (−r, c, −s).
MukaiVector dual_shift(const MukaiVector& u) noexcept;

/// Φ_* for Φ = (− ⊗ O(mH)) ∘ T_{O(−mH)}.
MukaiVector phi_pushforward(const MukaiVector& u, std::int64_t m, const SurfaceParams& p);

/// Determinant of the 3×3 matrix with rows u, v, w.
std::int64_t det3(const MukaiVector& u, const MukaiVector& v, const MukaiVector& w);

/// Basis {e1, e2} of the saturated rank-two lattice Q⟨v, a⟩ ∩ Z³.
/// Throws std::invalid_argument when v and a are parallel.
std::array<MukaiVector, 2> saturated_plane_basis(const MukaiVector& v, const MukaiVector& a);

/// Integer coordinates (m, n) of u in the basis {e1, e2}; u must lie in their span.
std::array<std::int64_t, 2> plane_coordinates(const MukaiVector& u, const std::array<MukaiVector, 2>& basis);

/// Completes a primitive vector to a basis {v, e1, e2} of Z³. The pair
/// (e1, e2) is Gauss-reduced modulo v in the Euclidean metric.
std::array<MukaiVector, 3> complete_to_basis(const MukaiVector& v);

// ---------------------------------------------------------------------------

/// Lattice isometry induced by an autoequivalence of D^b(S).
class Autoequivalence {
 public:
  struct TensorTwist {
    std::int64_t k;
  };
  struct SphericalReflect {
    MukaiVector w;
  };
  struct DualShift {};
  struct Composite {
    std::vector<Autoequivalence> steps;  // applied first to last
  };

  static Autoequivalence tensor(std::int64_t k);
  /// Throws std::invalid_argument if w² ≠ −2.
  static Autoequivalence reflection(const MukaiVector& w, const SurfaceParams& p);
  static Autoequivalence dual();
  static Autoequivalence compose(std::vector<Autoequivalence> steps);
  /// T_{O(−mH)} followed by − ⊗ O(mH).
  static Autoequivalence phi(std::int64_t m, const SurfaceParams& p);

  MukaiVector apply(const MukaiVector& u, const SurfaceParams& p) const;

  using Kind = std::variant<TensorTwist, SphericalReflect, DualShift, Composite>;
  const Kind& kind() const noexcept { return kind_; }

 private:
  explicit Autoequivalence(Kind kind) : kind_(std::move(kind)) {}
  Kind kind_;
};

}  // namespace k3walls
