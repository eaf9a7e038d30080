/**
 * @file wall_finder.hpp
 * @brief Wall enumeration for v = (1,0,1−n) and for arbitrary vectors.
 *
 * Hilbert-type walls are found clause by clause: each admissible pair
 * (a², (v,a)) fixes s in terms of r, leaving d·c² = r·s + a²/2 to be solved
 * over |r| ≤ r_max. Walls are keyed by their exact Γ-slope, the position of
 * the wall on the ray H̃ − Γ·B of the movable cone.
 *
 * Search is bounded. Every search is repeated with r_max doubled; the
 * `complete` flag is cleared when the two answers differ.
 */
#pragma once

#include <optional>

#include "k3walls/wall_record.hpp"

namespace k3walls {

/// (1, 0, 1 − n).
MukaiVector hilbert_vector(std::int64_t n);

/// Γ of the wall spanned by v = (1,0,1−n) and a. Throws std::invalid_argument
/// when a ∥ v and std::domain_error when the wall has no finite Γ.
Rational gamma_of_wall(std::int64_t n, const MukaiVector& a, const SurfaceParams& p);

/// All walls in the movable cone of M(1,0,1−n), ascending by Γ; the cone
/// boundary at gamma_max is included. Requires n ≥ 2.
WallTable hilbert_walls(std::int64_t n, const SearchBounds& bounds, const SurfaceParams& p);

struct MovableCone {
  std::int64_t n = 0;
  Rational gamma_min;
  Rational gamma_max;
  MukaiVector h_tilde;  // (0, −1, 0)
  MukaiVector b;        // (−1, 0, 1 − n)
};

/// Throws std::domain_error("no cone boundary within search bounds").
MovableCone movable_cone(std::int64_t n, const SearchBounds& bounds, const SurfaceParams& p);

/// Pushes each record through Φ_m; v is the vector the records belong to.
std::vector<WallRecord> transport_walls(const std::vector<WallRecord>& records, std::int64_t m,
                                        const MukaiVector& v, const SurfaceParams& p);

struct HilbertPreimage {
  std::int64_t n;
  std::int64_t m;
};

/// Finds n, m with Φ_m(1,0,1−n) = v, searching |m| ≤ 4n.
std::optional<HilbertPreimage> find_hilbert_preimage(const MukaiVector& v, const SurfaceParams& p);

/// Semicircle walls for an arbitrary vector with radius > y_min, sorted by
/// radius descending. A plane ⟨v, a⟩ is kept when it is hyperbolic and v
/// splits into two positive classes at the apex of its circle.
WallTable candidate_walls(const MukaiVector& v, const SearchBounds& bounds, const SurfaceParams& p);

}  // namespace k3walls
