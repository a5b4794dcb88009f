#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace mvt {

/// Signed exact rational in lowest terms with a positive denominator.
/// Arithmetic is checked: a result that does not fit in 64 bits raises
/// Error(Overflow) instead of wrapping.
class Rational {
 public:
  constexpr Rational() = default;
  Rational(std::int64_t num, std::int64_t den = 1);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  Rational operator+(const Rational& o) const;
  Rational operator-(const Rational& o) const;
  Rational operator*(const Rational& o) const;
  Rational operator/(const Rational& o) const;
  Rational operator-() const;

  bool operator==(const Rational& o) const noexcept = default;
  std::strong_ordering operator<=>(const Rational& o) const noexcept;

  std::string str() const;
  /// Accepts "p/q" or "p".
  static Rational parse(std::string_view text);

 private:
  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

/// Exact rational in [0,1]; the scalar universe of every carrier.
class Rational01 {
 public:
  constexpr Rational01() = default;
  /// Reduces; throws Error(DomainMismatch) when the value leaves [0,1].
  Rational01(std::int64_t num, std::int64_t den);
  explicit Rational01(const Rational& r);

  /// Rejects pairs that are not already in lowest terms.
  static Rational01 from_reduced(std::int64_t num, std::int64_t den);
  static Rational01 parse(std::string_view text);

  static constexpr Rational01 zero() { return Rational01(); }
  static Rational01 one() { return Rational01(1, 1); }

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }
  bool is_zero() const noexcept { return num_ == 0; }
  bool is_one() const noexcept { return num_ == den_; }
  Rational to_rational() const { return Rational(num_, den_); }

  bool operator==(const Rational01& o) const noexcept = default;
  std::strong_ordering operator<=>(const Rational01& o) const noexcept;

  std::string str() const;

 private:
  struct Raw {};
  constexpr Rational01(Raw, std::int64_t num, std::int64_t den) : num_(num), den_(den) {}
  friend Rational01 make_reduced01(std::int64_t, std::int64_t);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

// Łukasiewicz operations on the standard model [0,1].
Rational01 oplus(Rational01 x, Rational01 y);  // min(x+y, 1)
Rational01 neg(Rational01 x);                  // 1 - x
Rational01 odot(Rational01 x, Rational01 y);   // max(x+y-1, 0)
Rational01 join(Rational01 x, Rational01 y);
Rational01 meet(Rational01 x, Rational01 y);
Rational01 times(Rational01 x, Rational01 y);  // exact real product

std::int64_t lcm_checked(std::int64_t a, std::int64_t b);

struct Rational01Hash {
  std::size_t operator()(const Rational01& r) const noexcept {
    return std::hash<std::int64_t>{}(r.num()) * 1000003u ^ std::hash<std::int64_t>{}(r.den());
  }
};

}  // namespace mvt
