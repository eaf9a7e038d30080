/**
 * @file report.hpp
 * @brief Rendering of wall tables, path walks, decompositions and figures.
 *
 * Text output is aligned columns; CSV has a header row; JSON carries every
 * rational as {"num", "den"}. Text rendered from parsed JSON is identical to
 * text rendered directly.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "k3walls/crossing.hpp"
#include "k3walls/wall_finder.hpp"

namespace k3walls {

enum class OutputFormat { text, csv, json, svg };

/// Throws std::invalid_argument for unknown names.
OutputFormat parse_format(const std::string& name);
std::string to_string(OutputFormat f);

enum class CircleStyle { expanded, centered };

/// Expanded "x^2 + px + y^2 = q" for v = (1,0,1−n), centered otherwise.
CircleStyle default_circle_style(const MukaiVector& v);

/// Empty string for a missing curve.
std::string circle_equation(const std::optional<WallCurve>& curve, CircleStyle style);

/// Label used in tables: divisorial, flop, Lagrangian fibration, candidate.
std::string wall_type_label(WallType t);

struct WallTableRow {
  std::string gamma;
  std::string a;
  std::int64_t a_sq = 0;
  std::int64_t pairing = 0;
  std::string circle;
  std::string wall_type;
};

std::vector<WallTableRow> table_rows(const WallTable& table, CircleStyle style);

std::string render_walls_text(const WallTable& table, const SurfaceParams& p);
std::string render_walls_csv(const WallTable& table, const SurfaceParams& p);
std::string render_walls_json(const WallTable& table, const SurfaceParams& p);

struct ParsedWallTable {
  SurfaceParams surface;
  WallTable table;
};

/// Inverse of render_walls_json. Throws std::invalid_argument on bad input.
ParsedWallTable parse_walls_json(const std::string& text);

std::string render_cone(const MovableCone& cone, OutputFormat format);

struct PathRow {
  WallRecord wall;
  PathHit hit;
};

/// Walls crossed by the ray x = x0 above y = y_min, ordered by decreasing y.
std::vector<PathRow> walk_path(const WallTable& table, const Rational& x0, const Rational& y_min);

/// Vertical walls that contain the whole ray x = x0.
std::vector<WallRecord> walls_containing_path(const WallTable& table, const Rational& x0);

std::string render_path(const WallTable& table, const Rational& x0, const std::vector<PathRow>& rows,
                        OutputFormat format, int precision);

struct DecompositionReport {
  Decomposition decomposition;
  std::optional<DimReport> dims;
  std::string error;  // set when the dimension count fails
};

std::vector<DecompositionReport> analyze_wall(const MukaiVector& v, const WallRecord& wall, std::int64_t parts_max,
                                              const SurfaceParams& p);

std::string render_decompositions(const MukaiVector& v, const WallRecord& wall,
                                  const std::vector<DecompositionReport>& reports, OutputFormat format);

std::string render_dims(const std::vector<MukaiVector>& parts, const DimReport& report, OutputFormat format);

struct FigureOptions {
  double x_min = -10.5;
  double x_max = 0.5;
  double y_lo = 0.0;
  std::optional<double> y_hi;  // defaults to ceil(largest radius) + 1
  Rational radius_floor = 1;   // arcs with radius ≤ this are skipped
  int precision = 6;
};

/// SVG 1.1 document: one arc per semicircle wall above the radius floor,
/// a dashed line at y = 1, axis ticks and a legend.
std::string render_figure_svg(const WallTable& table, const FigureOptions& options);

}  // namespace k3walls
