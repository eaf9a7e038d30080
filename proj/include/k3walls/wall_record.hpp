#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3walls/central_charge.hpp"
#include "k3walls/lattice.hpp"
#include "k3walls/rational.hpp"

namespace k3walls {

enum class WallType { divisorial, flopping, boundary_lagrangian, candidate };

std::string to_string(WallType t);
/// Inverse of to_string; throws std::invalid_argument.
WallType parse_wall_type(const std::string& text);

struct WallRecord {
  MukaiVector a;
  std::int64_t a_sq = 0;
  std::int64_t pairing_va = 0;
  std::optional<Rational> gamma;    // Hilbert-type and transported walls only
  std::optional<WallCurve> curve;   // absent for the Lagrangian boundary
  WallType type = WallType::candidate;

  friend bool operator==(const WallRecord&, const WallRecord&) = default;
};

struct SearchBounds {
  std::int64_t r_max = 40;
  std::int64_t parts_max = 3;
  Rational y_min = 1;
};

struct WallTable {
  MukaiVector v;
  std::vector<WallRecord> walls;
  bool complete = true;
};

}  // namespace k3walls
