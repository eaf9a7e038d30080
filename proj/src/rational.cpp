#include "k3walls/rational.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace k3walls {

namespace mp = boost::multiprecision;

std::string to_string(const Rational& q) {
  const BigInt num = mp::numerator(q);
  const BigInt den = mp::denominator(q);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  if (text.empty()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  std::size_t i = 0;
  bool negative = false;
  if (text[0] == '+' || text[0] == '-') {
    negative = text[0] == '-';
    i = 1;
  }
  if (i == text.size()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
  BigInt value = 0;
  for (; i < text.size(); ++i) {
    const char ch = text[i];
    if (ch < '0' || ch > '9') throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    value = value * 10 + (ch - '0');
  }
  return negative ? BigInt(-value) : value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

}  // namespace

Rational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  return den < 0 ? Rational(-num, -den) : Rational(num, den);
}

Rational parse_rational(std::string_view text) {
  const std::string_view whole = text;
  text = trim(text);
  if (const auto slash = text.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(trim(text.substr(0, slash)), whole);
    const BigInt den = parse_integer(trim(text.substr(slash + 1)), whole);
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(whole) + "'");
    return make_rational(num, den);
  }
  if (const auto dot = text.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = text.substr(0, dot);
    const std::string_view frac_part = text.substr(dot + 1);
    bool negative = !int_part.empty() && int_part[0] == '-';
    if (!int_part.empty() && (int_part[0] == '-' || int_part[0] == '+')) int_part.remove_prefix(1);
    if (int_part.empty() && frac_part.empty()) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    BigInt ip = int_part.empty() ? BigInt(0) : parse_integer(int_part, whole);
    if (ip < 0) throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    BigInt fp = frac_part.empty() ? BigInt(0) : parse_integer(frac_part, whole);
    if (fp < 0 || (!frac_part.empty() && (frac_part[0] == '-' || frac_part[0] == '+')))
      throw std::invalid_argument("malformed rational: '" + std::string(whole) + "'");
    BigInt scale = 1;
    for (std::size_t i = 0; i < frac_part.size(); ++i) scale *= 10;
    Rational value = Rational(ip) + Rational(fp, scale);
    return negative ? Rational(-value) : value;
  }
  return Rational(parse_integer(text, whole));
}

double to_double(const Rational& q) { return q.convert_to<double>(); }

BigInt numerator_of(const Rational& q) { return mp::numerator(q); }
BigInt denominator_of(const Rational& q) { return mp::denominator(q); }

std::int64_t to_int64(const BigInt& value) {
  if (value > std::numeric_limits<std::int64_t>::max() || value < std::numeric_limits<std::int64_t>::min())
    throw std::overflow_error("integer does not fit in 64 bits: " + value.str());
  return value.convert_to<std::int64_t>();
}

BigInt floor_of(const Rational& q) {
  const BigInt num = mp::numerator(q);
  const BigInt den = mp::denominator(q);  // always positive
  BigInt quot = num / den;                 // truncates toward zero
  if (num < 0 && quot * den != num) quot -= 1;
  return quot;
}

BigInt ceil_of(const Rational& q) { return -floor_of(Rational(-q)); }

bool is_perfect_square(std::int64_t value, std::int64_t* root) {
  if (value < 0) return false;
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<long double>(value)));
  while (r > 0 && static_cast<__int128>(r) * r > value) --r;
  while (static_cast<__int128>(r + 1) * (r + 1) <= value) ++r;
  if (static_cast<__int128>(r) * r != value) return false;
  if (root) *root = r;
  return true;
}

namespace checked {

std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("lattice arithmetic overflow");
  return out;
}

std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("lattice arithmetic overflow");
  return out;
}

std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_sub_overflow(a, b, &out)) throw std::overflow_error("lattice arithmetic overflow");
  return out;
}

}  // namespace checked

}  // namespace k3walls
