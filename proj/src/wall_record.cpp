#include "k3walls/wall_record.hpp"

#include <stdexcept>

namespace k3walls {

std::string to_string(WallType t) {
  switch (t) {
    case WallType::divisorial:
      return "divisorial";
    case WallType::flopping:
      return "flopping";
    case WallType::boundary_lagrangian:
      return "boundary_lagrangian";
    case WallType::candidate:
      return "candidate";
  }
  throw std::logic_error("unknown wall type");
}

WallType parse_wall_type(const std::string& text) {
  for (WallType t : {WallType::divisorial, WallType::flopping, WallType::boundary_lagrangian, WallType::candidate})
    if (to_string(t) == text) return t;
  throw std::invalid_argument("unknown wall type '" + text + "'");
}

}  // namespace k3walls
