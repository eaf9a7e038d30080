// k3walls: wall-and-chamber tables for Mukai vectors on a K3 surface of
// Picard rank one.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "k3walls/report.hpp"

using namespace k3walls;

namespace {

constexpr int kExitRuntime = 1;
constexpr int kExitUsage = 2;
constexpr int kExitIncomplete = 3;

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Options {
  std::string format;
  std::int64_t degree = 1;
  int precision = 6;
  std::string output;
  bool strict_complete = false;
};

struct Target {
  std::optional<std::int64_t> n;
  std::string vector;
  std::optional<std::int64_t> r_max;
  std::optional<std::string> y_min;
  bool candidates = false;
};

void add_target(CLI::App* cmd, Target& t, bool with_candidates = true) {
  cmd->add_option("--n", t.n, "Hilbert scheme S^[n], i.e. v = (1,0,1-n)");
  cmd->add_option("--vector", t.vector, "Mukai vector r,c,s");
  cmd->add_option("--r-max", t.r_max, "search bound (default 4n, or 12 for candidate search)");
  if (with_candidates) cmd->add_flag("--candidates", t.candidates, "force the generic candidate search");
}

MukaiVector target_vector(const Target& t) {
  if (t.n && !t.vector.empty()) throw UsageError("give either --n or --vector, not both");
  if (t.n) {
    if (*t.n < 2) throw UsageError("--n must be at least 2");
    return hilbert_vector(*t.n);
  }
  if (t.vector.empty()) throw UsageError("one of --n or --vector is required");
  return parse_mukai_vector(t.vector);
}

std::optional<std::int64_t> hilbert_n(const MukaiVector& v) {
  if (v.r == 1 && v.c == 0 && v.s <= -1) return 1 - v.s;
  return std::nullopt;
}

SearchBounds bounds_for(const Target& t, std::int64_t default_r_max) {
  SearchBounds b;
  b.r_max = t.r_max.value_or(default_r_max);
  if (b.r_max < 1) throw UsageError("--r-max must be at least 1");
  return b;
}

// Hilbert vectors use the criterion search, images of Hilbert vectors under
// some Φ_m use transported walls, everything else the candidate search.
WallTable walls_for(const MukaiVector& v, const Target& t, const Rational& candidate_y_min, const SurfaceParams& p) {
  if (!t.candidates) {
    if (const auto n = hilbert_n(v)) return hilbert_walls(*n, bounds_for(t, 4 * *n), p);
    if (const auto pre = find_hilbert_preimage(v, p)) {
      WallTable base = hilbert_walls(pre->n, bounds_for(t, 4 * pre->n), p);
      WallTable out;
      out.v = v;
      out.walls = transport_walls(base.walls, pre->m, base.v, p);
      out.complete = base.complete;
      return out;
    }
  }
  SearchBounds b = bounds_for(t, 12);
  b.y_min = candidate_y_min;
  return candidate_walls(v, b, p);
}

Rational parse_rational_arg(const std::string& text, const std::string& flag) {
  try {
    return parse_rational(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

std::pair<double, double> parse_range(const std::string& text, const std::string& flag) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError(flag + " expects lo,hi");
  const double lo = to_double(parse_rational_arg(text.substr(0, comma), flag));
  const double hi = to_double(parse_rational_arg(text.substr(comma + 1), flag));
  if (!(hi > lo)) throw UsageError(flag + " needs lo < hi");
  return {lo, hi};
}

void filter_gamma(WallTable& table, const std::optional<std::string>& lo, const std::optional<std::string>& hi) {
  if (!lo && !hi) return;
  const auto glo = lo ? std::optional<Rational>(parse_rational_arg(*lo, "--gamma-min")) : std::nullopt;
  const auto ghi = hi ? std::optional<Rational>(parse_rational_arg(*hi, "--gamma-max")) : std::nullopt;
  std::vector<WallRecord> kept;
  for (const auto& w : table.walls) {
    if (!w.gamma) continue;
    if (glo && *w.gamma < *glo) continue;
    if (ghi && *w.gamma > *ghi) continue;
    kept.push_back(w);
  }
  table.walls = std::move(kept);
}

// Drops semicircles of radius ≤ y_min; lines and curveless rows stay.
void filter_radius(WallTable& table, const Rational& y_min) {
  std::vector<WallRecord> kept;
  for (const auto& w : table.walls) {
    if (w.curve && std::holds_alternative<Semicircle>(*w.curve) &&
        std::get<Semicircle>(*w.curve).radius_sq <= y_min * y_min)
      continue;
    kept.push_back(w);
  }
  table.walls = std::move(kept);
}

OutputFormat resolve_format(const Options& o) {
  std::string name = o.format;
  if (name.empty()) {
    const char* env = std::getenv("K3WALLS_FORMAT");
    name = env && *env ? env : "text";
  }
  try {
    return parse_format(name);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

void emit(const Options& o, const std::string& text) {
  if (o.output.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(o.output, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open output file " + o.output);
  out << text;
}

std::string render_table(const WallTable& table, OutputFormat format, const SurfaceParams& p) {
  switch (format) {
    case OutputFormat::csv:
      return render_walls_csv(table, p);
    case OutputFormat::json:
      return render_walls_json(table, p);
    case OutputFormat::text:
      return render_walls_text(table, p);
    case OutputFormat::svg:
      break;
  }
  throw UsageError("svg output is only available from the figure command");
}

int table_status(const Options& o, const WallTable& table) {
  if (!table.complete) {
    std::cerr << "warning: search bounds did not stabilize; the wall list may be incomplete\n";
    if (o.strict_complete) return kExitIncomplete;
  }
  return 0;
}

const WallRecord& select_wall(const WallTable& table, const std::optional<std::string>& gamma,
                              const std::optional<std::int64_t>& index) {
  if (gamma.has_value() == index.has_value()) throw UsageError("give exactly one of --gamma or --wall-index");
  if (gamma) {
    const Rational g = parse_rational_arg(*gamma, "--gamma");
    for (const auto& w : table.walls)
      if (w.gamma && *w.gamma == g) return w;
    std::string available;
    for (const auto& w : table.walls)
      if (w.gamma) available += (available.empty() ? "" : ", ") + to_string(*w.gamma);
    throw UsageError("no wall with Gamma = " + to_string(g) + "; available: " +
                     (available.empty() ? std::string("none") : available));
  }
  // Flopping walls are numbered from 0 by increasing Gamma; candidate lists
  // are numbered in their printed order.
  std::vector<const WallRecord*> indexed;
  for (const auto& w : table.walls)
    if (w.type == WallType::flopping || w.type == WallType::candidate) indexed.push_back(&w);
  if (*index < 0 || *index >= static_cast<std::int64_t>(indexed.size()))
    throw UsageError("--wall-index out of range; " + std::to_string(indexed.size()) + " walls available");
  return *indexed[static_cast<std::size_t>(*index)];
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Walls and chambers for Mukai vectors on a K3 surface with Pic = Z.H"};
  app.require_subcommand(1);
  app.fallthrough();
  Options opt;
  app.add_option("--format", opt.format, "text, csv, json or svg (default: $K3WALLS_FORMAT or text)");
  app.add_option("--degree", opt.degree, "d with H^2 = 2d")->capture_default_str();
  app.add_option("--precision", opt.precision, "digits for floating-point display")->capture_default_str();
  app.add_option("--output", opt.output, "write to this file instead of stdout");
  app.add_flag("--strict-complete", opt.strict_complete, "exit with status 3 when the search may be incomplete");

  Target walls_t;
  auto* walls = app.add_subcommand("walls", "wall table for a vector");
  add_target(walls, walls_t);
  walls->add_option("--ymin", walls_t.y_min, "keep circles with radius > ymin");

  std::int64_t cone_n = 0;
  std::optional<std::int64_t> cone_r_max;
  auto* cone = app.add_subcommand("cone", "movable cone of S^[n]");
  cone->add_option("--n", cone_n, "n")->required();
  cone->add_option("--r-max", cone_r_max, "search bound (default 4n)");

  Target path_t;
  std::string path_x0;
  auto* path = app.add_subcommand("path", "walls crossed by the vertical path x = x0");
  add_target(path, path_t);
  path->add_option("--x0", path_x0, "x coordinate of the path")->required();
  path->add_option("--ymin", path_t.y_min, "ignore crossings with y <= ymin (default 1)");

  Target dec_t;
  std::optional<std::string> dec_gamma;
  std::optional<std::int64_t> dec_index;
  std::int64_t parts_max = 3;
  auto* decompose = app.add_subcommand("decompose", "decompositions of v on one wall, with dimensions");
  add_target(decompose, dec_t);
  decompose->add_option("--gamma", dec_gamma, "wall by Gamma");
  decompose->add_option("--wall-index", dec_index, "wall by index among flopping walls (0-based)");
  decompose->add_option("--parts-max", parts_max, "largest number of parts")->capture_default_str();
  decompose->add_option("--ymin", dec_t.y_min, "radius floor for candidate search (default 1)");

  std::vector<std::string> dim_parts;
  auto* dims = app.add_subcommand("dims", "dimension count for a filtration or a single moduli space");
  dims->add_option("--part", dim_parts, "Mukai vector r,c,s; repeat in filtration order")->required();

  Target tr_t;
  std::int64_t tr_m = 0;
  std::optional<std::string> tr_gmin, tr_gmax;
  auto* transport = app.add_subcommand("transport", "push a wall table through Phi_m");
  add_target(transport, tr_t);
  transport->add_option("--m", tr_m, "twist parameter m")->required();
  transport->add_option("--gamma-min", tr_gmin, "keep walls with Gamma >= this");
  transport->add_option("--gamma-max", tr_gmax, "keep walls with Gamma <= this");

  Target fig_t;
  std::string fig_x, fig_y;
  std::optional<std::string> fig_gmin, fig_gmax;
  auto* figure = app.add_subcommand("figure", "SVG plot of the wall circles");
  add_target(figure, fig_t);
  figure->add_option("--xrange", fig_x, "lo,hi");
  figure->add_option("--yrange", fig_y, "lo,hi");
  figure->add_option("--ymin", fig_t.y_min, "draw circles with radius > ymin (default 1)");
  figure->add_option("--gamma-min", fig_gmin, "keep walls with Gamma >= this");
  figure->add_option("--gamma-max", fig_gmax, "keep walls with Gamma <= this");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (opt.precision < 1) throw UsageError("--precision must be at least 1");
    SurfaceParams p = [&] {
      try {
        return SurfaceParams(opt.degree);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }();
    const OutputFormat format = resolve_format(opt);
    auto y_min_of = [](const Target& t) {
      return t.y_min ? parse_rational_arg(*t.y_min, "--ymin") : Rational(1);
    };

    if (walls->parsed()) {
      const MukaiVector v = target_vector(walls_t);
      WallTable table = walls_for(v, walls_t, y_min_of(walls_t), p);
      if (walls_t.y_min) filter_radius(table, y_min_of(walls_t));
      emit(opt, render_table(table, format, p));
      return table_status(opt, table);
    }
    if (cone->parsed()) {
      if (cone_n < 2) throw UsageError("--n must be at least 2");
      SearchBounds b;
      b.r_max = cone_r_max.value_or(4 * cone_n);
      if (format == OutputFormat::svg) throw UsageError("svg output is only available from the figure command");
      emit(opt, render_cone(movable_cone(cone_n, b, p), format));
      return 0;
    }
    if (path->parsed()) {
      const MukaiVector v = target_vector(path_t);
      const Rational x0 = parse_rational_arg(path_x0, "--x0");
      const Rational y_min = y_min_of(path_t);
      const WallTable table = walls_for(v, path_t, y_min, p);
      if (format == OutputFormat::svg) throw UsageError("svg output is only available from the figure command");
      emit(opt, render_path(table, x0, walk_path(table, x0, y_min), format, opt.precision));
      return table_status(opt, table);
    }
    if (decompose->parsed()) {
      const MukaiVector v = target_vector(dec_t);
      if (parts_max < 2) throw UsageError("--parts-max must be at least 2");
      if (parts_max > 3) std::cerr << "note: --parts-max above 3 has not been checked against published lists\n";
      const WallTable table = walls_for(v, dec_t, y_min_of(dec_t), p);
      const WallRecord& wall = select_wall(table, dec_gamma, dec_index);
      if (!wall.curve || !std::holds_alternative<Semicircle>(*wall.curve))
        throw UsageError("the selected wall is not a semicircle; decompositions need a wall apex");
      if (format == OutputFormat::svg) throw UsageError("svg output is only available from the figure command");
      emit(opt, render_decompositions(v, wall, analyze_wall(v, wall, parts_max, p), format));
      return table_status(opt, table);
    }
    if (dims->parsed()) {
      std::vector<MukaiVector> parts;
      for (const auto& s : dim_parts) parts.push_back(parse_mukai_vector(s));
      if (format == OutputFormat::svg) throw UsageError("svg output is only available from the figure command");
      if (parts.size() == 1) {
        const std::int64_t dim = moduli_dim(parts.front(), p);
        emit(opt, format == OutputFormat::json  ? "{\n  \"vector\": [" + std::to_string(parts[0].r) + ", " +
                                                      std::to_string(parts[0].c) + ", " + std::to_string(parts[0].s) +
                                                      "],\n  \"moduli_dim\": " + std::to_string(dim) + "\n}\n"
                  : format == OutputFormat::csv ? "vector,moduli_dim\n\"" + to_string(parts[0]) + "\"," +
                                                      std::to_string(dim) + "\n"
                                                : "dim M" + to_string(parts[0]) + " = " + std::to_string(dim) + "\n");
        return 0;
      }
      emit(opt, render_dims(parts, stratum_dims(parts, p), format));
      return 0;
    }
    if (transport->parsed()) {
      const MukaiVector v = target_vector(tr_t);
      const WallTable base = walls_for(v, tr_t, y_min_of(tr_t), p);
      WallTable table;
      table.v = phi_pushforward(v, tr_m, p);
      table.walls = transport_walls(base.walls, tr_m, v, p);
      table.complete = base.complete;
      filter_gamma(table, tr_gmin, tr_gmax);
      emit(opt, render_table(table, format, p));
      return table_status(opt, table);
    }
    if (figure->parsed()) {
      if (!opt.format.empty() && format != OutputFormat::svg) throw UsageError("figure only writes svg");
      const MukaiVector v = target_vector(fig_t);
      FigureOptions fo;
      fo.radius_floor = y_min_of(fig_t);
      fo.precision = opt.precision;
      WallTable table = walls_for(v, fig_t, fo.radius_floor, p);
      filter_gamma(table, fig_gmin, fig_gmax);
      if (!fig_x.empty()) {
        std::tie(fo.x_min, fo.x_max) = parse_range(fig_x, "--xrange");
      } else if (const auto n = hilbert_n(v)) {
        fo.x_min = -static_cast<double>(*n) - 0.5;
        fo.x_max = 0.5;
      } else {
        double lo = -2, hi = 2;
        for (const auto& w : table.walls) {
          if (!w.curve || !std::holds_alternative<Semicircle>(*w.curve)) continue;
          const auto& c = std::get<Semicircle>(*w.curve);
          const double r = std::sqrt(to_double(c.radius_sq));
          lo = std::min(lo, std::floor(to_double(c.center) - r) - 0.5);
          hi = std::max(hi, std::ceil(to_double(c.center) + r) + 0.5);
        }
        fo.x_min = lo;
        fo.x_max = hi;
      }
      if (!fig_y.empty()) {
        auto [lo, hi] = parse_range(fig_y, "--yrange");
        fo.y_lo = lo;
        fo.y_hi = hi;
      }
      emit(opt, render_figure_svg(table, fo));
      return table_status(opt, table);
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
