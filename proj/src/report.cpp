#include "k3walls/report.hpp"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace k3walls {

using Json = nlohmann::ordered_json;

OutputFormat parse_format(const std::string& name) {
  if (name == "text") return OutputFormat::text;
  if (name == "csv") return OutputFormat::csv;
  if (name == "json") return OutputFormat::json;
  if (name == "svg") return OutputFormat::svg;
  throw std::invalid_argument("unknown output format '" + name + "' (expected text, csv, json or svg)");
}

std::string to_string(OutputFormat f) {
  switch (f) {
    case OutputFormat::text:
      return "text";
    case OutputFormat::csv:
      return "csv";
    case OutputFormat::json:
      return "json";
    case OutputFormat::svg:
      return "svg";
  }
  throw std::logic_error("unknown output format");
}

CircleStyle default_circle_style(const MukaiVector& v) {
  return v.r == 1 && v.c == 0 && v.s <= -1 ? CircleStyle::expanded : CircleStyle::centered;
}

namespace {

std::string linear_term(const Rational& coeff) {
  const Rational mag = abs(coeff);
  std::string out = coeff < 0 ? " - " : " + ";
  if (mag == 1) return out + "x";
  if (denominator_of(mag) == 1) return out + to_string(mag) + "x";
  return out + "(" + to_string(mag) + ")x";
}

}  // namespace

std::string circle_equation(const std::optional<WallCurve>& curve, CircleStyle style) {
  if (!curve) return "";
  if (const auto* line = std::get_if<VerticalLine>(&*curve)) return "x = " + to_string(line->x0);
  const auto& circle = std::get<Semicircle>(*curve);
  if (style == CircleStyle::expanded) {
    std::string out = "x^2";
    const Rational b = -2 * circle.center;
    if (b != 0) out += linear_term(b);
    return out + " + y^2 = " + to_string(Rational(circle.radius_sq - circle.center * circle.center));
  }
  std::string out;
  if (circle.center == 0) {
    out = "x^2";
  } else {
    const Rational shift = -circle.center;
    out = "(x " + std::string(shift < 0 ? "- " : "+ ") + to_string(Rational(abs(shift))) + ")^2";
  }
  return out + " + y^2 = " + to_string(circle.radius_sq);
}

std::string wall_type_label(WallType t) {
  switch (t) {
    case WallType::divisorial:
      return "divisorial";
    case WallType::flopping:
      return "flop";
    case WallType::boundary_lagrangian:
      return "Lagrangian fibration";
    case WallType::candidate:
      return "candidate";
  }
  throw std::logic_error("unknown wall type");
}

std::vector<WallTableRow> table_rows(const WallTable& table, CircleStyle style) {
  std::vector<WallTableRow> rows;
  for (const auto& w : table.walls) {
    rows.push_back({w.gamma ? to_string(*w.gamma) : std::string(), to_string(w.a), w.a_sq, w.pairing_va,
                    circle_equation(w.curve, style), wall_type_label(w.type)});
  }
  return rows;
}

namespace {

std::string or_dash(const std::string& s) { return s.empty() ? "-" : s; }

// Left-aligned columns separated by two spaces, no trailing blanks.
std::string align(const std::vector<std::vector<std::string>>& cells) {
  std::vector<std::size_t> width;
  for (const auto& row : cells) {
    if (width.size() < row.size()) width.resize(row.size(), 0);
    for (std::size_t i = 0; i < row.size(); ++i) width[i] = std::max(width[i], row[i].size());
  }
  std::string out;
  for (const auto& row : cells) {
    std::string line;
    for (std::size_t i = 0; i < row.size(); ++i) {
      line += row[i];
      if (i + 1 < row.size()) line += std::string(width[i] - row[i].size() + 2, ' ');
    }
    while (!line.empty() && line.back() == ' ') line.pop_back();
    out += line + "\n";
  }
  return out;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + "\"";
}

std::string csv_line(const std::vector<std::string>& fields) {
  std::string out;
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i) out += ',';
    out += csv_field(fields[i]);
  }
  return out + "\n";
}

Json rational_json(const Rational& q) {
  return Json{{"num", to_int64(numerator_of(q))}, {"den", to_int64(denominator_of(q))}};
}

Rational rational_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den"))
    throw std::invalid_argument("rational must be an object with num and den");
  const auto den = j.at("den").get<std::int64_t>();
  if (den <= 0) throw std::invalid_argument("rational denominator must be positive");
  return Rational(j.at("num").get<std::int64_t>(), den);
}

Json vector_json(const MukaiVector& u) { return Json::array({u.r, u.c, u.s}); }

MukaiVector vector_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 3) throw std::invalid_argument("Mukai vector must be an array of three integers");
  return {j[0].get<std::int64_t>(), j[1].get<std::int64_t>(), j[2].get<std::int64_t>()};
}

Json curve_json(const std::optional<WallCurve>& curve) {
  if (!curve) return nullptr;
  if (const auto* line = std::get_if<VerticalLine>(&*curve)) return Json{{"kind", "line"}, {"x0", rational_json(line->x0)}};
  const auto& c = std::get<Semicircle>(*curve);
  return Json{{"kind", "semicircle"}, {"center", rational_json(c.center)}, {"radius_sq", rational_json(c.radius_sq)}};
}

std::optional<WallCurve> curve_from_json(const Json& j) {
  if (j.is_null()) return std::nullopt;
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "line") return VerticalLine{rational_from_json(j.at("x0"))};
  if (kind == "semicircle") return Semicircle{rational_from_json(j.at("center")), rational_from_json(j.at("radius_sq"))};
  throw std::invalid_argument("unknown curve kind '" + kind + "'");
}

Json wall_json(const WallRecord& w) {
  return Json{{"gamma", w.gamma ? rational_json(*w.gamma) : Json(nullptr)},
              {"a", vector_json(w.a)},
              {"a_sq", w.a_sq},
              {"pairing", w.pairing_va},
              {"curve", curve_json(w.curve)},
              {"type", to_string(w.type)}};
}

std::string fixed(double value, int precision) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(precision) << value;
  std::string s = os.str();
  if (s.find_first_not_of("-0.") == std::string::npos) s = s.substr(s[0] == '-' ? 1 : 0);
  return s;
}

std::string join(const std::vector<std::string>& items, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) out += (i ? sep : "") + items[i];
  return out;
}

template <typename T>
std::vector<std::string> stringify(const std::vector<T>& items) {
  std::vector<std::string> out;
  for (const auto& x : items) {
    if constexpr (std::is_same_v<T, std::int64_t>)
      out.push_back(std::to_string(x));
    else
      out.push_back(to_string(x));
  }
  return out;
}

}  // namespace

std::string render_walls_text(const WallTable& table, const SurfaceParams& p) {
  std::string out = "v = " + to_string(table.v) + "  d = " + std::to_string(p.d()) + "\n";
  std::vector<std::vector<std::string>> cells{{"Gamma", "a", "a^2", "(v,a)", "wall", "type"}};
  for (const auto& row : table_rows(table, default_circle_style(table.v)))
    cells.push_back({or_dash(row.gamma), row.a, std::to_string(row.a_sq), std::to_string(row.pairing),
                     or_dash(row.circle), row.wall_type});
  out += align(cells);
  if (table.walls.empty()) out += "(no walls)\n";
  out += table.complete ? "search: complete\n" : "search: possibly incomplete\n";
  return out;
}

std::string render_walls_csv(const WallTable& table, const SurfaceParams&) {
  std::string out = csv_line({"gamma", "a", "a_sq", "pairing", "wall", "type"});
  for (const auto& row : table_rows(table, default_circle_style(table.v)))
    out += csv_line({row.gamma, row.a, std::to_string(row.a_sq), std::to_string(row.pairing), row.circle, row.wall_type});
  return out;
}

std::string render_walls_json(const WallTable& table, const SurfaceParams& p) {
  Json walls = Json::array();
  for (const auto& w : table.walls) walls.push_back(wall_json(w));
  const Json doc{{"surface", {{"d", p.d()}}},
                 {"vector", vector_json(table.v)},
                 {"walls", walls},
                 {"complete", table.complete}};
  return doc.dump(2) + "\n";
}

ParsedWallTable parse_walls_json(const std::string& text) {
  try {
    const Json doc = Json::parse(text);
    ParsedWallTable out{SurfaceParams(doc.at("surface").at("d").get<std::int64_t>()), {}};
    out.table.v = vector_from_json(doc.at("vector"));
    out.table.complete = doc.at("complete").get<bool>();
    for (const auto& w : doc.at("walls")) {
      WallRecord rec;
      if (!w.at("gamma").is_null()) rec.gamma = rational_from_json(w.at("gamma"));
      rec.a = vector_from_json(w.at("a"));
      rec.a_sq = w.at("a_sq").get<std::int64_t>();
      rec.pairing_va = w.at("pairing").get<std::int64_t>();
      rec.curve = curve_from_json(w.at("curve"));
      rec.type = parse_wall_type(w.at("type").get<std::string>());
      out.table.walls.push_back(rec);
    }
    return out;
  } catch (const nlohmann::json::exception& e) {
    throw std::invalid_argument(std::string("malformed wall table JSON: ") + e.what());
  }
}

std::string render_cone(const MovableCone& cone, OutputFormat format) {
  switch (format) {
    case OutputFormat::csv:
      return csv_line({"n", "gamma_min", "gamma_max", "h_tilde", "b"}) +
             csv_line({std::to_string(cone.n), to_string(cone.gamma_min), to_string(cone.gamma_max),
                       to_string(cone.h_tilde), to_string(cone.b)});
    case OutputFormat::json:
      return Json{{"n", cone.n},
                  {"gamma_min", rational_json(cone.gamma_min)},
                  {"gamma_max", rational_json(cone.gamma_max)},
                  {"h_tilde", vector_json(cone.h_tilde)},
                  {"b", vector_json(cone.b)}}
                 .dump(2) +
             "\n";
    default:
      break;
  }
  std::string out;
  out += "n = " + std::to_string(cone.n) + "\n";
  out += "H~ = " + to_string(cone.h_tilde) + "\n";
  out += "B = " + to_string(cone.b) + "\n";
  out += "gamma_min = " + to_string(cone.gamma_min) + "\n";
  out += "gamma_max = " + to_string(cone.gamma_max) + "\n";
  const std::string coeff = cone.gamma_max == 1 ? std::string() : to_string(cone.gamma_max) + " ";
  out += "Mov = <H~, H~ - " + coeff + "B>\n";
  return out;
}

std::vector<PathRow> walk_path(const WallTable& table, const Rational& x0, const Rational& y_min) {
  std::vector<PathRow> rows;
  const Rational floor_sq = y_min * y_min;
  for (const auto& w : table.walls) {
    if (!w.curve) continue;
    const PathHit hit = path_intersection(*w.curve, x0);
    if (hit.kind != PathHit::Kind::point || hit.y_sq <= floor_sq) continue;
    rows.push_back({w, hit});
  }
  std::stable_sort(rows.begin(), rows.end(),
                   [](const PathRow& x, const PathRow& y) { return x.hit.y_sq > y.hit.y_sq; });
  return rows;
}

std::vector<WallRecord> walls_containing_path(const WallTable& table, const Rational& x0) {
  std::vector<WallRecord> out;
  for (const auto& w : table.walls)
    if (w.curve && path_intersection(*w.curve, x0).kind == PathHit::Kind::whole_ray) out.push_back(w);
  return out;
}

std::string render_path(const WallTable& table, const Rational& x0, const std::vector<PathRow>& rows,
                        OutputFormat format, int precision) {
  auto gamma_text = [](const WallRecord& w) { return w.gamma ? to_string(*w.gamma) : std::string(); };
  const auto along = walls_containing_path(table, x0);

  if (format == OutputFormat::csv) {
    std::string out = csv_line({"gamma", "a", "y_sq", "y"});
    for (const auto& row : rows)
      out += csv_line({gamma_text(row.wall), to_string(row.wall.a), to_string(row.hit.y_sq),
                       fixed(std::sqrt(to_double(row.hit.y_sq)), precision)});
    return out;
  }
  if (format == OutputFormat::json) {
    Json hits = Json::array();
    for (const auto& row : rows)
      hits.push_back(Json{{"gamma", row.wall.gamma ? rational_json(*row.wall.gamma) : Json(nullptr)},
                          {"a", vector_json(row.wall.a)},
                          {"y_sq", rational_json(row.hit.y_sq)}});
    Json on = Json::array();
    for (const auto& w : along) on.push_back(wall_json(w));
    return Json{{"vector", vector_json(table.v)},
                {"x0", rational_json(x0)},
                {"hits", hits},
                {"along", on},
                {"complete", table.complete}}
               .dump(2) +
           "\n";
  }
  std::string out = "v = " + to_string(table.v) + "  x0 = " + to_string(x0) + "\n";
  std::vector<std::vector<std::string>> cells{{"Gamma", "a", "y^2", "y"}};
  for (const auto& row : rows)
    cells.push_back({or_dash(gamma_text(row.wall)), to_string(row.wall.a), to_string(row.hit.y_sq),
                     fixed(std::sqrt(to_double(row.hit.y_sq)), precision)});
  out += align(cells);
  if (rows.empty()) out += "(no walls crossed)\n";
  for (const auto& w : along)
    out += "path lies on the wall Gamma = " + or_dash(gamma_text(w)) + "  a = " + to_string(w.a) + "  " +
           circle_equation(w.curve, default_circle_style(table.v)) + "\n";
  return out;
}

std::vector<DecompositionReport> analyze_wall(const MukaiVector& v, const WallRecord& wall, std::int64_t parts_max,
                                              const SurfaceParams& p) {
  std::vector<DecompositionReport> out;
  for (auto& dec : decompositions(v, wall, parts_max, p)) {
    DecompositionReport report{dec, std::nullopt, {}};
    try {
      report.dims = stratum_dims(dec, p);
    } catch (const std::exception& e) {
      report.error = e.what();
    }
    out.push_back(std::move(report));
  }
  return out;
}

std::string render_decompositions(const MukaiVector& v, const WallRecord& wall,
                                  const std::vector<DecompositionReport>& reports, OutputFormat format) {
  const std::string gamma = wall.gamma ? to_string(*wall.gamma) : std::string();
  if (format == OutputFormat::json) {
    Json decs = Json::array();
    for (const auto& r : reports) {
      Json parts = Json::array();
      for (const auto& u : r.decomposition.parts) parts.push_back(vector_json(u));
      Json lambdas = Json::array();
      for (const auto& l : r.decomposition.coefficients) lambdas.push_back(rational_json(l));
      Json dims = nullptr;
      if (r.dims)
        dims = Json{{"part_moduli_dims", r.dims->part_moduli_dims},
                    {"fiber_dims", r.dims->fiber_dims},
                    {"stratum_dim", r.dims->stratum_dim},
                    {"total_space_dim", r.dims->total_space_dim}};
      decs.push_back(Json{{"parts", parts},
                          {"lambda", lambdas},
                          {"dims", dims},
                          {"error", r.error.empty() ? Json(nullptr) : Json(r.error)}});
    }
    return Json{{"vector", vector_json(v)}, {"wall", wall_json(wall)}, {"decompositions", decs}}.dump(2) + "\n";
  }
  if (format == OutputFormat::csv) {
    std::string out = csv_line({"index", "parts", "lambda", "part_dims", "fiber_dims", "stratum_dim", "total_dim", "error"});
    for (std::size_t i = 0; i < reports.size(); ++i) {
      const auto& r = reports[i];
      out += csv_line({std::to_string(i + 1), join(stringify(r.decomposition.parts), " + "),
                       join(stringify(r.decomposition.coefficients), " "),
                       r.dims ? join(stringify(r.dims->part_moduli_dims), " ") : "",
                       r.dims ? join(stringify(r.dims->fiber_dims), " ") : "",
                       r.dims ? std::to_string(r.dims->stratum_dim) : "",
                       r.dims ? std::to_string(r.dims->total_space_dim) : "", r.error});
    }
    return out;
  }
  std::string out = "v = " + to_string(v) + "\n";
  out += "wall: Gamma = " + or_dash(gamma) + "  a = " + to_string(wall.a) + "  " +
         or_dash(circle_equation(wall.curve, default_circle_style(v))) + "  " + wall_type_label(wall.type) + "\n";
  if (reports.empty()) out += "(no decompositions)\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const auto& r = reports[i];
    out += "decomposition " + std::to_string(i + 1) + ": " + join(stringify(r.decomposition.parts), " + ") + "\n";
    out += "  lambda: " + join(stringify(r.decomposition.coefficients), ", ") + "\n";
    if (r.dims) {
      out += "  part dims: " + join(stringify(r.dims->part_moduli_dims), ", ") + "\n";
      out += "  fiber dims: " + join(stringify(r.dims->fiber_dims), ", ") + "\n";
      out += "  stratum dim: " + std::to_string(r.dims->stratum_dim) + " (of " +
             std::to_string(r.dims->total_space_dim) + ")\n";
    } else {
      out += "  dims: " + r.error + "\n";
    }
  }
  return out;
}

std::string render_dims(const std::vector<MukaiVector>& parts, const DimReport& report, OutputFormat format) {
  if (format == OutputFormat::json)
    return Json{{"parts", [&] {
                   Json a = Json::array();
                   for (const auto& u : parts) a.push_back(vector_json(u));
                   return a;
                 }()},
                {"part_moduli_dims", report.part_moduli_dims},
                {"fiber_dims", report.fiber_dims},
                {"stratum_dim", report.stratum_dim},
                {"total_space_dim", report.total_space_dim}}
               .dump(2) +
           "\n";
  if (format == OutputFormat::csv)
    return csv_line({"parts", "part_dims", "fiber_dims", "stratum_dim", "total_dim"}) +
           csv_line({join(stringify(parts), " + "), join(stringify(report.part_moduli_dims), " "),
                     join(stringify(report.fiber_dims), " "), std::to_string(report.stratum_dim),
                     std::to_string(report.total_space_dim)});
  std::string out = "parts: " + join(stringify(parts), " + ") + "\n";
  out += "part dims: " + join(stringify(report.part_moduli_dims), ", ") + "\n";
  out += "fiber dims: " + join(stringify(report.fiber_dims), ", ") + "\n";
  out += "stratum dim: " + std::to_string(report.stratum_dim) + " (of " + std::to_string(report.total_space_dim) + ")\n";
  return out;
}

std::string render_figure_svg(const WallTable& table, const FigureOptions& o) {
  if (!(o.x_max > o.x_min)) throw std::invalid_argument("figure x-range is empty");
  struct Arc {
    double center;
    double radius;
    std::string label;
  };
  std::vector<Arc> arcs;
  const Rational floor_sq = o.radius_floor * o.radius_floor;
  for (const auto& w : table.walls) {
    if (!w.curve || !std::holds_alternative<Semicircle>(*w.curve)) continue;
    const auto& c = std::get<Semicircle>(*w.curve);
    if (c.radius_sq <= floor_sq) continue;
    const double center = to_double(c.center);
    const double radius = std::sqrt(to_double(c.radius_sq));
    if (center + radius <= o.x_min || center - radius >= o.x_max) continue;
    arcs.push_back({center, radius, w.gamma ? "Gamma = " + to_string(*w.gamma) : "r^2 = " + to_string(c.radius_sq)});
  }
  double y_hi = 2.0;
  if (o.y_hi) {
    y_hi = *o.y_hi;
  } else {
    for (const auto& a : arcs) y_hi = std::max(y_hi, std::ceil(a.radius) + 1.0);
  }
  if (!(y_hi > o.y_lo)) throw std::invalid_argument("figure y-range is empty");

  const double width = 800, height = 500, left = 60, right = 180, top = 20, bottom = 50;
  const double plot_w = width - left - right, plot_h = height - top - bottom;
  const double sx = plot_w / (o.x_max - o.x_min), sy = plot_h / (y_hi - o.y_lo);
  auto X = [&](double x) { return fixed(left + (x - o.x_min) * sx, o.precision); };
  auto Y = [&](double y) { return fixed(top + plot_h - (y - o.y_lo) * sy, o.precision); };
  auto num = [&](double v) { return fixed(v, o.precision); };

  static const char* palette[] = {"#7b3294", "#2166ac", "#d6604d", "#1b7837", "#e08214", "#01665e",
                                  "#c51b7d", "#4d4d4d", "#8c510a", "#35978f", "#b2182b", "#5aae61"};
  std::ostringstream svg;
  svg << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << width << "\" height=\"" << height
      << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n"
      << "<title>walls for v = " << to_string(table.v) << "</title>\n"
      << "<defs><clipPath id=\"plot\"><rect x=\"" << num(left) << "\" y=\"" << num(top) << "\" width=\""
      << num(plot_w) << "\" height=\"" << num(plot_h) << "\"/></clipPath></defs>\n"
      << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height << "\" fill=\"white\"/>\n";

  // Axes and ticks.
  svg << "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\" fill=\"none\">\n"
      << "<line x1=\"" << X(o.x_min) << "\" y1=\"" << Y(o.y_lo) << "\" x2=\"" << X(o.x_max) << "\" y2=\"" << Y(o.y_lo)
      << "\"/>\n"
      << "<line x1=\"" << X(o.x_min) << "\" y1=\"" << Y(o.y_lo) << "\" x2=\"" << X(o.x_min) << "\" y2=\"" << Y(y_hi)
      << "\"/>\n";
  auto tick_step = [](double span) {
    double step = 1;
    while (span / step > 20) step *= 2;
    return step;
  };
  std::ostringstream labels;
  const double xs = tick_step(o.x_max - o.x_min);
  for (double t = std::ceil(o.x_min / xs) * xs; t <= o.x_max + 1e-9; t += xs) {
    svg << "<line x1=\"" << X(t) << "\" y1=\"" << Y(o.y_lo) << "\" x2=\"" << X(t) << "\" y2=\""
        << num(top + plot_h + 5) << "\"/>\n";
    labels << "<text x=\"" << X(t) << "\" y=\"" << num(top + plot_h + 20) << "\" text-anchor=\"middle\">"
           << fixed(t, 0) << "</text>\n";
  }
  const double ys = tick_step(y_hi - o.y_lo);
  for (double t = std::ceil(o.y_lo / ys) * ys; t <= y_hi + 1e-9; t += ys) {
    svg << "<line x1=\"" << num(left - 5) << "\" y1=\"" << Y(t) << "\" x2=\"" << X(o.x_min) << "\" y2=\"" << Y(t)
        << "\"/>\n";
    labels << "<text x=\"" << num(left - 8) << "\" y=\"" << Y(t) << "\" text-anchor=\"end\" dominant-baseline=\"middle\">"
           << fixed(t, 0) << "</text>\n";
  }
  svg << "</g>\n<g class=\"labels\" font-family=\"sans-serif\" font-size=\"12\">\n"
      << labels.str() << "<text x=\"" << num(left + plot_w / 2) << "\" y=\"" << num(height - 8)
      << "\" text-anchor=\"middle\">x</text>\n"
      << "<text x=\"" << num(15) << "\" y=\"" << num(top + plot_h / 2) << "\" text-anchor=\"middle\">y</text>\n</g>\n";

  if (o.y_lo < 1 && 1 < y_hi)
    svg << "<line class=\"marker\" x1=\"" << X(o.x_min) << "\" y1=\"" << Y(1) << "\" x2=\"" << X(o.x_max) << "\" y2=\""
        << Y(1) << "\" stroke=\"gray\" stroke-dasharray=\"6 4\"/>\n";

  svg << "<g clip-path=\"url(#plot)\" fill=\"none\" stroke-width=\"2\">\n";
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const auto& a = arcs[i];
    svg << "<path class=\"wall\" stroke=\"" << palette[i % std::size(palette)] << "\" d=\"M " << X(a.center - a.radius)
        << ' ' << Y(0) << " A " << num(a.radius * sx) << ' ' << num(a.radius * sy) << " 0 0 1 "
        << X(a.center + a.radius) << ' ' << Y(0) << "\"/>\n";
  }
  svg << "</g>\n<g class=\"legend\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    const double ly = top + 10 + 18 * static_cast<double>(i);
    svg << "<line x1=\"" << num(left + plot_w + 15) << "\" y1=\"" << num(ly) << "\" x2=\"" << num(left + plot_w + 40)
        << "\" y2=\"" << num(ly) << "\" stroke=\"" << palette[i % std::size(palette)] << "\" stroke-width=\"2\"/>\n"
        << "<text x=\"" << num(left + plot_w + 45) << "\" y=\"" << num(ly) << "\" dominant-baseline=\"middle\">"
        << arcs[i].label << "</text>\n";
  }
  svg << "</g>\n</svg>\n";
  return svg.str();
}

}  // namespace k3walls
