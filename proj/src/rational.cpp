#include "mvtensor/rational.hpp"

#include <charconv>
#include <limits>
#include <numeric>

#include "mvtensor/error.hpp"

namespace mvt {
namespace {

using Wide = __int128;

std::int64_t narrow(Wide v) {
  if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorKind::Overflow, "rational component exceeds 64 bits");
  }
  return static_cast<std::int64_t>(v);
}

Wide wide_gcd(Wide a, Wide b) {
  if (a < 0) a = -a;
  if (b < 0) b = -b;
  while (b != 0) {
    Wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

// Reduces num/den (den != 0) and narrows to 64 bits.
std::pair<std::int64_t, std::int64_t> reduce(Wide num, Wide den) {
  if (den == 0) throw Error(ErrorKind::DomainMismatch, "zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  Wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num == 0) den = 1;
  return {narrow(num), narrow(den)};
}

std::int64_t parse_int(std::string_view text) {
  std::int64_t v = 0;
  auto begin = text.data();
  auto end = text.data() + text.size();
  if (!text.empty() && text.front() == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, end, v);
  if (ec != std::errc() || ptr != end || begin == end) {
    throw Error(ErrorKind::ParseError, "not an integer: '" + std::string(text) + "'");
  }
  return v;
}

}  // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  auto [n, d] = reduce(num, den);
  num_ = n;
  den_ = d;
}

Rational Rational::operator+(const Rational& o) const {
  auto [n, d] = reduce(Wide(num_) * o.den_ + Wide(o.num_) * den_, Wide(den_) * o.den_);
  Rational r;
  r.num_ = n;
  r.den_ = d;
  return r;
}

Rational Rational::operator-(const Rational& o) const { return *this + (-o); }

Rational Rational::operator*(const Rational& o) const {
  auto [n, d] = reduce(Wide(num_) * o.num_, Wide(den_) * o.den_);
  Rational r;
  r.num_ = n;
  r.den_ = d;
  return r;
}

Rational Rational::operator/(const Rational& o) const {
  if (o.num_ == 0) throw Error(ErrorKind::DomainMismatch, "division by zero");
  auto [n, d] = reduce(Wide(num_) * o.den_, Wide(den_) * o.num_);
  Rational r;
  r.num_ = n;
  r.den_ = d;
  return r;
}

Rational Rational::operator-() const {
  Rational r;
  r.num_ = narrow(-Wide(num_));
  r.den_ = den_;
  return r;
}

std::strong_ordering Rational::operator<=>(const Rational& o) const noexcept {
  return Wide(num_) * o.den_ <=> Wide(o.num_) * den_;
}

std::string Rational::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::parse(std::string_view text) {
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  std::int64_t d = parse_int(text.substr(slash + 1));
  if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
  return Rational(parse_int(text.substr(0, slash)), d);
}

Rational01 make_reduced01(std::int64_t num, std::int64_t den) {
  return Rational01(Rational01::Raw{}, num, den);
}

Rational01::Rational01(std::int64_t num, std::int64_t den) {
  auto [n, d] = reduce(num, den);
  if (n < 0 || n > d) {
    throw Error(ErrorKind::DomainMismatch,
                "value " + std::to_string(num) + "/" + std::to_string(den) + " outside [0,1]");
  }
  num_ = n;
  den_ = d;
}

Rational01::Rational01(const Rational& r) : Rational01(r.num(), r.den()) {}

Rational01 Rational01::from_reduced(std::int64_t num, std::int64_t den) {
  if (den <= 0 || num < 0 || num > den) {
    throw Error(ErrorKind::DomainMismatch,
                "[" + std::to_string(num) + "," + std::to_string(den) + "] is not a rational in [0,1]");
  }
  if (std::gcd(num, den) != 1 && !(num == 0 && den == 1)) {
    throw Error(ErrorKind::DomainMismatch,
                "[" + std::to_string(num) + "," + std::to_string(den) + "] is not in lowest terms");
  }
  return make_reduced01(num, den);
}

Rational01 Rational01::parse(std::string_view text) { return Rational01(Rational::parse(text)); }

std::strong_ordering Rational01::operator<=>(const Rational01& o) const noexcept {
  return Wide(num_) * o.den_ <=> Wide(o.num_) * den_;
}

std::string Rational01::str() const {
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational01 oplus(Rational01 x, Rational01 y) {
  Wide n = Wide(x.num()) * y.den() + Wide(y.num()) * x.den();
  Wide d = Wide(x.den()) * y.den();
  if (n >= d) return Rational01::one();
  auto [rn, rd] = reduce(n, d);
  return make_reduced01(rn, rd);
}

Rational01 neg(Rational01 x) { return make_reduced01(x.den() - x.num(), x.den()); }

Rational01 odot(Rational01 x, Rational01 y) { return neg(oplus(neg(x), neg(y))); }

Rational01 join(Rational01 x, Rational01 y) { return x < y ? y : x; }

Rational01 meet(Rational01 x, Rational01 y) { return x < y ? x : y; }

Rational01 times(Rational01 x, Rational01 y) {
  auto [n, d] = reduce(Wide(x.num()) * y.num(), Wide(x.den()) * y.den());
  return make_reduced01(n, d);
}

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
  Wide g = std::gcd(a, b);
  return narrow(Wide(a) / g * b);
}

}  // namespace mvt
