#include "k3walls/lattice.hpp"

#include <cstdlib>
#include <numeric>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "k3walls/rational.hpp"

namespace k3walls {

using checked::add;
using checked::mul;
using checked::sub;

SurfaceParams::SurfaceParams(std::int64_t d) : d_(d) {
  if (d < 1) throw std::invalid_argument("surface parameter d must be >= 1 (H^2 = 2d)");
}

MukaiVector operator+(const MukaiVector& u, const MukaiVector& w) {
  return {add(u.r, w.r), add(u.c, w.c), add(u.s, w.s)};
}

MukaiVector operator-(const MukaiVector& u, const MukaiVector& w) {
  return {sub(u.r, w.r), sub(u.c, w.c), sub(u.s, w.s)};
}

MukaiVector operator-(const MukaiVector& u) { return {sub(0, u.r), sub(0, u.c), sub(0, u.s)}; }

MukaiVector operator*(std::int64_t k, const MukaiVector& u) { return {mul(k, u.r), mul(k, u.c), mul(k, u.s)}; }

std::string to_string(const MukaiVector& u) {
  std::ostringstream os;
  os << '(' << u.r << ',' << u.c << ',' << u.s << ')';
  return os.str();
}

std::ostream& operator<<(std::ostream& os, const MukaiVector& u) { return os << to_string(u); }

MukaiVector parse_mukai_vector(const std::string& text) {
  std::string body;
  for (char ch : text) {
    if (ch == '(' || ch == ')' || ch == ' ' || ch == '[' || ch == ']') continue;
    body.push_back(ch);
  }
  std::int64_t parts[3] = {0, 0, 0};
  std::size_t start = 0;
  for (int i = 0; i < 3; ++i) {
    const std::size_t comma = body.find(',', start);
    const bool last = i == 2;
    if (last != (comma == std::string::npos))
      throw std::invalid_argument("Mukai vector must have exactly three integer entries: '" + text + "'");
    const std::string piece = body.substr(start, last ? std::string::npos : comma - start);
    try {
      std::size_t used = 0;
      parts[i] = std::stoll(piece, &used);
      if (used != piece.size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      throw std::invalid_argument("Mukai vector entry is not an integer: '" + piece + "'");
    }
    start = comma + 1;
  }
  return {parts[0], parts[1], parts[2]};
}

bool is_zero(const MukaiVector& u) noexcept { return u.r == 0 && u.c == 0 && u.s == 0; }

std::int64_t content(const MukaiVector& u) noexcept {
  return std::gcd(std::gcd(std::llabs(u.r), std::llabs(u.c)), std::llabs(u.s));
}

bool is_primitive(const MukaiVector& u) noexcept { return content(u) == 1; }

MukaiVector primitive_part(const MukaiVector& u) {
  const std::int64_t g = content(u);
  if (g == 0) throw std::invalid_argument("the zero vector has no primitive part");
  return {u.r / g, u.c / g, u.s / g};
}

bool are_parallel(const MukaiVector& u, const MukaiVector& w) noexcept {
  const __int128 x = static_cast<__int128>(u.c) * w.s - static_cast<__int128>(u.s) * w.c;
  const __int128 y = static_cast<__int128>(u.s) * w.r - static_cast<__int128>(u.r) * w.s;
  const __int128 z = static_cast<__int128>(u.r) * w.c - static_cast<__int128>(u.c) * w.r;
  return x == 0 && y == 0 && z == 0;
}

bool same_up_to_sign(const MukaiVector& a, const MukaiVector& w) noexcept {
  return a == w || (a.r == -w.r && a.c == -w.c && a.s == -w.s);
}

std::int64_t mukai_pairing(const MukaiVector& u, const MukaiVector& w, const SurfaceParams& p) {
  return sub(sub(mul(mul(p.h_squared(), u.c), w.c), mul(u.r, w.s)), mul(w.r, u.s));
}

std::int64_t mukai_square(const MukaiVector& u, const SurfaceParams& p) { return mukai_pairing(u, u, p); }

MukaiVector line_bundle_vector(std::int64_t k, const SurfaceParams& p) {
  return {1, k, add(mul(p.d(), mul(k, k)), 1)};
}

MukaiVector tensor_twist(const MukaiVector& u, std::int64_t k, const SurfaceParams& p) {
  // multiplication by e^{kH} = (1, k, d k²)
  const std::int64_t c = add(u.c, mul(u.r, k));
  const std::int64_t s = add(add(u.s, mul(mul(p.h_squared(), u.c), k)), mul(mul(p.d(), u.r), mul(k, k)));
  return {u.r, c, s};
}

MukaiVector spherical_reflect(const MukaiVector& u, const MukaiVector& w, const SurfaceParams& p) {
  if (mukai_square(w, p) != -2)
    throw std::invalid_argument("spherical reflection needs a class of square -2, got " + to_string(w));
  return u + mukai_pairing(u, w, p) * w;
}

MukaiVector dual_shift(const MukaiVector& u) noexcept { return {-u.r, u.c, -u.s}; }

MukaiVector phi_pushforward(const MukaiVector& u, std::int64_t m, const SurfaceParams& p) {
  return tensor_twist(spherical_reflect(u, line_bundle_vector(-m, p), p), m, p);
}

std::int64_t det3(const MukaiVector& u, const MukaiVector& v, const MukaiVector& w) {
  const std::int64_t a = sub(mul(v.c, w.s), mul(v.s, w.c));
  const std::int64_t b = sub(mul(v.r, w.s), mul(v.s, w.r));
  const std::int64_t c = sub(mul(v.r, w.c), mul(v.c, w.r));
  return add(sub(mul(u.r, a), mul(u.c, b)), mul(u.s, c));
}

namespace {

using Vec = std::array<std::int64_t, 3>;

Vec as_array(const MukaiVector& u) { return {u.r, u.c, u.s}; }
MukaiVector as_vector(const Vec& a) { return {a[0], a[1], a[2]}; }

Vec cross(const Vec& a, const Vec& b) {
  return {sub(mul(a[1], b[2]), mul(a[2], b[1])), sub(mul(a[2], b[0]), mul(a[0], b[2])),
          sub(mul(a[0], b[1]), mul(a[1], b[0]))};
}

std::int64_t dot(const Vec& a, const Vec& b) {
  return add(add(mul(a[0], b[0]), mul(a[1], b[1])), mul(a[2], b[2]));
}

// Two columns of a unimodular matrix spanning the kernel of the functional f.
std::array<Vec, 2> kernel_basis(Vec f) {
  std::array<Vec, 3> cols{Vec{1, 0, 0}, Vec{0, 1, 0}, Vec{0, 0, 1}};
  for (;;) {
    int pivot = -1;
    for (int i = 0; i < 3; ++i)
      if (f[i] != 0 && (pivot < 0 || std::llabs(f[i]) < std::llabs(f[pivot]))) pivot = i;
    if (pivot < 0) throw std::invalid_argument("kernel of the zero functional is not rank two");
    bool reduced = true;
    for (int j = 0; j < 3; ++j) {
      if (j == pivot || f[j] == 0) continue;
      const std::int64_t q = f[j] / f[pivot];
      f[j] -= q * f[pivot];
      for (int k = 0; k < 3; ++k) cols[j][k] = sub(cols[j][k], mul(q, cols[pivot][k]));
      if (f[j] != 0) reduced = false;
    }
    if (reduced) {
      std::array<Vec, 2> out{};
      int idx = 0;
      for (int j = 0; j < 3; ++j)
        if (j != pivot) out[idx++] = cols[j];
      return out;
    }
  }
}

// Extended Euclid: returns g = gcd(a,b) >= 0 with x*a + y*b = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

BigInt round_to_nearest(const Rational& q) { return floor_of(Rational(q + Rational(1, 2))); }

// Lagrange–Gauss reduction of (e1, e2) after projecting away from `axis`
// (Euclidean metric). With a zero axis this is plain reduction.
void gauss_reduce(Vec& e1, Vec& e2, const Vec& axis) {
  const std::int64_t axis_norm = dot(axis, axis);
  auto gram = [&](const Vec& a, const Vec& b) {
    Rational g = dot(a, b);
    if (axis_norm != 0) g -= Rational(BigInt(dot(a, axis)) * dot(b, axis), axis_norm);
    return g;
  };
  for (int iter = 0; iter < 256; ++iter) {
    if (gram(e1, e1) > gram(e2, e2)) std::swap(e1, e2);
    const BigInt mu = round_to_nearest(Rational(gram(e1, e2) / gram(e1, e1)));
    if (mu == 0) break;
    const std::int64_t m = to_int64(mu);
    for (int k = 0; k < 3; ++k) e2[k] = sub(e2[k], mul(m, e1[k]));
  }
  if (axis_norm != 0) {
    for (Vec* e : {&e1, &e2}) {
      const std::int64_t m = to_int64(round_to_nearest(Rational(dot(*e, axis), axis_norm)));
      for (int k = 0; k < 3; ++k) (*e)[k] = sub((*e)[k], mul(m, axis[k]));
    }
  }
}

}  // namespace

std::array<MukaiVector, 2> saturated_plane_basis(const MukaiVector& v, const MukaiVector& a) {
  Vec normal = cross(as_array(v), as_array(a));
  const std::int64_t g = std::gcd(std::gcd(std::llabs(normal[0]), std::llabs(normal[1])), std::llabs(normal[2]));
  if (g == 0) throw std::invalid_argument("vectors " + to_string(v) + " and " + to_string(a) + " are parallel");
  for (auto& x : normal) x /= g;
  auto basis = kernel_basis(normal);
  gauss_reduce(basis[0], basis[1], Vec{0, 0, 0});
  return {as_vector(basis[0]), as_vector(basis[1])};
}

std::array<std::int64_t, 2> plane_coordinates(const MukaiVector& u, const std::array<MukaiVector, 2>& basis) {
  const Vec e1 = as_array(basis[0]);
  const Vec e2 = as_array(basis[1]);
  const Vec x = as_array(u);
  const Vec n = cross(e1, e2);
  const std::int64_t nn = dot(n, n);
  if (nn == 0) throw std::invalid_argument("plane basis is degenerate");
  const std::int64_t m_num = dot(cross(x, e2), n);
  const std::int64_t n_num = dot(cross(e1, x), n);
  if (m_num % nn != 0 || n_num % nn != 0 || dot(x, n) != 0)
    throw std::invalid_argument(to_string(u) + " is not an integer point of the plane");
  return {m_num / nn, n_num / nn};
}

std::array<MukaiVector, 3> complete_to_basis(const MukaiVector& v) {
  if (!is_primitive(v)) throw std::invalid_argument("only primitive vectors extend to a basis: " + to_string(v));
  std::int64_t x1 = 0, y1 = 0, x2 = 0, y2 = 0;
  const std::int64_t g1 = ext_gcd(v.r, v.c, x1, y1);
  const std::int64_t g = ext_gcd(g1, v.s, x2, y2);
  if (g != 1) throw std::logic_error("gcd of a primitive vector is not one");
  // f·v = 1, so Z³ = Z·v ⊕ ker f.
  const Vec f{mul(x2, x1), mul(x2, y1), y2};
  auto basis = kernel_basis(f);
  gauss_reduce(basis[0], basis[1], as_array(v));
  return {v, as_vector(basis[0]), as_vector(basis[1])};
}

// ---------------------------------------------------------------------------

Autoequivalence Autoequivalence::tensor(std::int64_t k) { return Autoequivalence(TensorTwist{k}); }

Autoequivalence Autoequivalence::reflection(const MukaiVector& w, const SurfaceParams& p) {
  if (mukai_square(w, p) != -2)
    throw std::invalid_argument("spherical reflection needs a class of square -2, got " + to_string(w));
  return Autoequivalence(SphericalReflect{w});
}

Autoequivalence Autoequivalence::dual() { return Autoequivalence(DualShift{}); }

Autoequivalence Autoequivalence::compose(std::vector<Autoequivalence> steps) {
  return Autoequivalence(Composite{std::move(steps)});
}

Autoequivalence Autoequivalence::phi(std::int64_t m, const SurfaceParams& p) {
  return compose({reflection(line_bundle_vector(-m, p), p), tensor(m)});
}

MukaiVector Autoequivalence::apply(const MukaiVector& u, const SurfaceParams& p) const {
  struct Visitor {
    const MukaiVector& u;
    const SurfaceParams& p;
    MukaiVector operator()(const TensorTwist& t) const { return tensor_twist(u, t.k, p); }
    MukaiVector operator()(const SphericalReflect& t) const { return spherical_reflect(u, t.w, p); }
    MukaiVector operator()(const DualShift&) const { return dual_shift(u); }
    MukaiVector operator()(const Composite& t) const {
      MukaiVector out = u;
      for (const auto& step : t.steps) out = step.apply(out, p);
      return out;
    }
  };
  return std::visit(Visitor{u, p}, kind_);
}

}  // namespace k3walls
