#include "k3walls/crossing.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <stdexcept>

namespace k3walls {

StabilityPoint wall_base_point(const WallRecord& w, WallSide side, const Rational& epsilon) {
  if (!w.curve || !std::holds_alternative<Semicircle>(*w.curve))
    throw std::invalid_argument("no canonical base point on a wall that is not a semicircle");
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  const auto& circle = std::get<Semicircle>(*w.curve);
  switch (side) {
    case WallSide::on:
      return StabilityPoint(circle.center, circle.radius_sq);
    case WallSide::plus:
      return StabilityPoint(circle.center, circle.radius_sq + epsilon);
    case WallSide::minus:
      if (circle.radius_sq <= epsilon) throw std::invalid_argument("epsilon exceeds the squared radius");
      return StabilityPoint(circle.center, circle.radius_sq - epsilon);
  }
  throw std::logic_error("unknown wall side");
}

Rational ray_coefficient(const MukaiVector& u, const MukaiVector& v, const Semicircle& circle,
                         const SurfaceParams& p) {
  const StabilityPoint apex(circle.center, circle.radius_sq);
  const ComplexValue zv = central_charge(v, apex, p);
  const ComplexValue zu = central_charge(u, apex, p);
  if (zv.im_over_y != 0) return zu.im_over_y / zv.im_over_y;
  if (zv.re == 0) throw std::domain_error("class collapses at this point");
  return zu.re / zv.re;
}

namespace {

bool order_desc(const PositiveClass& x, const PositiveClass& y) {
  if (x.lambda != y.lambda) return x.lambda > y.lambda;
  return x.u > y.u;
}

bool carries_stable_objects(const MukaiVector& u, std::int64_t sq) { return sq >= -2 && (is_primitive(u) || sq > 0); }

}  // namespace

std::vector<PositiveClass> plane_positive_classes(const MukaiVector& v, const std::array<MukaiVector, 2>& plane,
                                                  const Semicircle& circle, const SurfaceParams& p) {
  const auto [e1, e2] = plane;
  const Rational l1 = ray_coefficient(e1, v, circle, p);
  const Rational l2 = ray_coefficient(e2, v, circle, p);

  // Primitive kernel vector of λ on the plane.
  const BigInt scale = boost::multiprecision::lcm(denominator_of(l1), denominator_of(l2));
  BigInt km = numerator_of(Rational(l2 * scale));
  BigInt kn = -numerator_of(Rational(l1 * scale));
  const BigInt g = boost::multiprecision::gcd(km, kn);
  if (g == 0) throw std::logic_error("ray coefficient vanishes on the whole plane");
  km /= g;
  kn /= g;
  const std::int64_t k1 = to_int64(km);
  const std::int64_t k2 = to_int64(kn);
  const MukaiVector kernel = k1 * e1 + k2 * e2;
  const std::int64_t q = -mukai_square(kernel, p);
  if (q <= 0) throw std::domain_error("a class of square >= 0 has vanishing central charge on this wall");

  // u = λ·v + μ·kernel with 0 < λ < 1 and u² ≥ −2 bounds |μ|.
  const double b = std::abs(static_cast<double>(mukai_pairing(v, kernel, p)));
  const double vv = std::max<double>(0.0, static_cast<double>(mukai_square(v, p)));
  const double mu_max = (b + std::sqrt(b * b + q * (vv + 2.0))) / q;
  const auto cv = plane_coordinates(v, plane);
  const auto box = [&](std::int64_t vc, std::int64_t kc) {
    return std::abs(vc) + static_cast<std::int64_t>(std::ceil(mu_max * std::abs(static_cast<double>(kc)))) + 1;
  };
  const std::int64_t m_box = box(cv[0], k1);
  const std::int64_t n_box = box(cv[1], k2);

  std::vector<PositiveClass> out;
  for (std::int64_t m = -m_box; m <= m_box; ++m) {
    for (std::int64_t n = -n_box; n <= n_box; ++n) {
      const Rational lambda = l1 * m + l2 * n;
      if (lambda <= 0 || lambda >= 1) continue;
      const MukaiVector u = m * e1 + n * e2;
      const std::int64_t sq = mukai_square(u, p);
      if (!carries_stable_objects(u, sq) || are_parallel(u, v)) continue;
      out.push_back({u, lambda});
    }
  }
  std::sort(out.begin(), out.end(), order_desc);
  return out;
}

std::vector<MukaiVector> positive_classes(const MukaiVector& v, const WallRecord& w, const SurfaceParams& p) {
  if (!w.curve || !std::holds_alternative<Semicircle>(*w.curve))
    throw std::invalid_argument("positive classes need a semicircle wall");
  const auto classes =
      plane_positive_classes(v, saturated_plane_basis(v, w.a), std::get<Semicircle>(*w.curve), p);
  std::vector<MukaiVector> out;
  out.reserve(classes.size());
  for (const auto& c : classes) out.push_back(c.u);
  return out;
}

std::vector<Decomposition> decompositions(const MukaiVector& v, const WallRecord& w, std::int64_t parts_max,
                                          const SurfaceParams& p) {
  if (parts_max < 2) throw std::invalid_argument("parts_max must be at least 2");
  if (!w.curve || !std::holds_alternative<Semicircle>(*w.curve))
    throw std::invalid_argument("decompositions need a semicircle wall");
  const auto classes =
      plane_positive_classes(v, saturated_plane_basis(v, w.a), std::get<Semicircle>(*w.curve), p);
  std::map<MukaiVector, std::size_t> index;
  for (std::size_t i = 0; i < classes.size(); ++i) index.emplace(classes[i].u, i);

  std::vector<Decomposition> out;
  std::vector<std::size_t> chosen;
  // Parts are picked with non-decreasing index, so each multiset appears once.
  auto recurse = [&](auto&& self, std::size_t start, const MukaiVector& rest, const Rational& rest_lambda) -> void {
    if (!chosen.empty()) {
      const auto it = index.find(rest);
      if (it != index.end() && it->second >= start) {
        Decomposition dec;
        dec.wall = w;
        for (std::size_t i : chosen) {
          dec.parts.push_back(classes[i].u);
          dec.coefficients.push_back(classes[i].lambda);
        }
        dec.parts.push_back(rest);
        dec.coefficients.push_back(classes[it->second].lambda);
        out.push_back(std::move(dec));
      }
    }
    if (static_cast<std::int64_t>(chosen.size()) + 2 > parts_max) return;
    for (std::size_t i = start; i < classes.size(); ++i) {
      if (rest_lambda - classes[i].lambda <= 0) continue;
      chosen.push_back(i);
      self(self, i, rest - classes[i].u, rest_lambda - classes[i].lambda);
      chosen.pop_back();
    }
  };
  recurse(recurse, 0, v, Rational(1));

  std::sort(out.begin(), out.end(), [](const Decomposition& x, const Decomposition& y) {
    if (x.parts.size() != y.parts.size()) return x.parts.size() < y.parts.size();
    if (x.coefficients != y.coefficients)
      return std::lexicographical_compare(x.coefficients.begin(), x.coefficients.end(), y.coefficients.begin(),
                                          y.coefficients.end(), std::greater<>());
    return x.parts > y.parts;
  });
  return out;
}

std::int64_t moduli_dim(const MukaiVector& u, const SurfaceParams& p) {
  const std::int64_t sq = mukai_square(u, p);
  if (!is_primitive(u)) throw std::invalid_argument("moduli_dim needs a primitive class, got " + to_string(u));
  if (sq < -2) throw std::invalid_argument("no stable objects of class " + to_string(u) + " (square < -2)");
  return sq + 2;
}

std::int64_t stable_locus_dim(const MukaiVector& u, const SurfaceParams& p) {
  const std::int64_t sq = mukai_square(u, p);
  if (!carries_stable_objects(u, sq))
    throw std::invalid_argument("class " + to_string(u) + " carries no stable objects");
  return sq + 2;
}

DimReport stratum_dims(const std::vector<MukaiVector>& parts, const SurfaceParams& p) {
  if (parts.size() < 2) throw std::invalid_argument("a decomposition has at least two parts");
  DimReport report;
  MukaiVector partial = parts.front();
  for (const auto& u : parts) report.part_moduli_dims.push_back(stable_locus_dim(u, p));
  for (std::size_t i = 1; i < parts.size(); ++i) {
    const std::int64_t fiber = mukai_pairing(partial, parts[i], p) - 1;
    if (fiber < 0)
      throw std::domain_error("non-effective extension step at part " + std::to_string(i + 1) + " (" +
                              to_string(parts[i]) + ")");
    report.fiber_dims.push_back(fiber);
    partial = partial + parts[i];
  }
  for (auto dim : report.part_moduli_dims) report.stratum_dim += dim;
  for (auto dim : report.fiber_dims) report.stratum_dim += dim;
  report.total_space_dim = stable_locus_dim(partial, p);
  return report;
}

DimReport stratum_dims(const Decomposition& dec, const SurfaceParams& p) { return stratum_dims(dec.parts, p); }

std::int64_t ext_dim(const MukaiVector& u, const MukaiVector& w, const SurfaceParams& p) {
  return mukai_pairing(u, w, p);
}

}  // namespace k3walls
