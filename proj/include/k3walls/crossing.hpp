/**
 * @file crossing.hpp
 * @brief Decompositions of v on a wall and the dimension count of the
 * loci they describe.
 *
 * On a wall every class u of the saturated plane ⟨v, a⟩ has Z(u) = λ(u)·Z(v)
 * with λ linear. A class is positive when 0 < λ(u) < 1, u² ≥ −2, u is not
 * proportional to v, and u carries stable objects (primitive, or u² > 0).
 */
#pragma once

#include <array>
#include <vector>

#include "k3walls/wall_record.hpp"

namespace k3walls {

enum class WallSide { on, plus, minus };

/// Apex of a semicircle wall; plus/minus move y² by ±epsilon.
/// Throws std::invalid_argument for vertical or missing curves.
StabilityPoint wall_base_point(const WallRecord& w, WallSide side, const Rational& epsilon);

/// λ(u) at the apex of `circle`, for u in the plane of v (not checked).
Rational ray_coefficient(const MukaiVector& u, const MukaiVector& v, const Semicircle& circle,
                         const SurfaceParams& p);

struct PositiveClass {
  MukaiVector u;
  Rational lambda;
};

/// Positive classes in the saturated plane spanned by `plane` (which must
/// contain v), evaluated at the apex of `circle`. Sorted by λ descending,
/// ties by (r,c,s) descending.
std::vector<PositiveClass> plane_positive_classes(const MukaiVector& v, const std::array<MukaiVector, 2>& plane,
                                                  const Semicircle& circle, const SurfaceParams& p);

std::vector<MukaiVector> positive_classes(const MukaiVector& v, const WallRecord& w, const SurfaceParams& p);

struct Decomposition {
  std::vector<MukaiVector> parts;
  std::vector<Rational> coefficients;  // λ of each part; they sum to 1
  WallRecord wall;
};

/// Multisets of 2..parts_max positive classes summing to v. Parts are
/// ordered by λ descending; the list by part count, then λ-sequence
/// descending.
std::vector<Decomposition> decompositions(const MukaiVector& v, const WallRecord& w, std::int64_t parts_max,
                                          const SurfaceParams& p);

/// u² + 2 for primitive u with u² ≥ −2; throws std::invalid_argument otherwise.
std::int64_t moduli_dim(const MukaiVector& u, const SurfaceParams& p);

/// Dimension of the stable locus: u² + 2 when u is primitive with u² ≥ −2
/// or u² > 0. Throws std::invalid_argument otherwise.
std::int64_t stable_locus_dim(const MukaiVector& u, const SurfaceParams& p);

struct DimReport {
  std::vector<std::int64_t> part_moduli_dims;
  std::vector<std::int64_t> fiber_dims;
  std::int64_t stratum_dim = 0;
  std::int64_t total_space_dim = 0;
};

/// Chain count for the filtration u₁ ⊂ … : fiber_i = (u₁+…+u_i, u_{i+1}) − 1.
/// Throws std::domain_error("non-effective extension step") on a negative fiber.
DimReport stratum_dims(const Decomposition& dec, const SurfaceParams& p);
DimReport stratum_dims(const std::vector<MukaiVector>& parts, const SurfaceParams& p);

/// (u, w): ext¹ between stable objects of equal phase.
std::int64_t ext_dim(const MukaiVector& u, const MukaiVector& w, const SurfaceParams& p);

}  // namespace k3walls
