#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ecgame {

__extension__ using wide_int = __int128;

/// Raised when an exact operation leaves the 64-bit range.
class overflow_error : public std::overflow_error {
public:
  using std::overflow_error::overflow_error;
};

/// Exact rational number with 64-bit numerator and denominator.
///
/// Always normalized: gcd(num, den) == 1 and den > 0. Intermediate products
/// are formed in 128 bits and reduced before narrowing, so an overflow is only
/// reported when the reduced result itself does not fit.
class Rational {
public:
  constexpr Rational() noexcept = default;
  constexpr Rational(std::int64_t value) noexcept : num_(value) {} // NOLINT(implicit)
  Rational(std::int64_t num, std::int64_t den);

  /// Accepts "7", "-7", "14/3", "-2/3". Decimal points and exponents are rejected.
  static Rational parse(std::string_view text);

  std::int64_t num() const noexcept { return num_; }
  std::int64_t den() const noexcept { return den_; }

  bool is_integer() const noexcept { return den_ == 1; }
  int sign() const noexcept { return (num_ > 0) - (num_ < 0); }

  /// "14/3", or "5" for integers.
  std::string to_string() const;
  /// Always "num/den", e.g. "5/1".
  std::string to_fraction_string() const;
  double to_double() const noexcept {
    return static_cast<double>(num_) / static_cast<double>(den_);
  }

  Rational operator-() const;
  Rational &operator+=(const Rational &rhs);
  Rational &operator-=(const Rational &rhs);
  Rational &operator*=(const Rational &rhs);
  Rational &operator/=(const Rational &rhs);

  friend Rational operator+(Rational lhs, const Rational &rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational &rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational &rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational &rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational &, const Rational &) noexcept = default;
  friend std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs) noexcept;

private:
  static Rational from_wide(wide_int num, wide_int den);

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
};

Rational abs(const Rational &r);
Rational min(const Rational &a, const Rational &b);
Rational max(const Rational &a, const Rational &b);
/// max(r, 0)
Rational positive_part(const Rational &r);

std::ostream &operator<<(std::ostream &os, const Rational &r);

} // namespace ecgame
