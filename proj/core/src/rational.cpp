#include "ecgame/rational.hpp"

#include <charconv>
#include <limits>
#include <ostream>

namespace ecgame {

namespace {

using wide = wide_int;

constexpr wide kMax = std::numeric_limits<std::int64_t>::max();
constexpr wide kMin = std::numeric_limits<std::int64_t>::min();

wide wide_abs(wide v) { return v < 0 ? -v : v; }

wide wide_gcd(wide a, wide b) {
  a = wide_abs(a);
  b = wide_abs(b);
  while (b != 0) {
    wide t = a % b;
    a = b;
    b = t;
  }
  return a;
}

std::int64_t parse_int(std::string_view text, std::string_view whole) {
  std::int64_t value = 0;
  const char *first = text.data();
  const char *last = text.data() + text.size();
  if (!text.empty() && text.front() == '+')
    ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec == std::errc::result_out_of_range)
    throw overflow_error("rational literal out of 64-bit range: '" + std::string(whole) + "'");
  if (ec != std::errc() || ptr != last || first == last)
    throw std::invalid_argument("not a rational literal: '" + std::string(whole) + "'");
  return value;
}

} // namespace

Rational::Rational(std::int64_t num, std::int64_t den) {
  if (den == 0)
    throw std::domain_error("rational with zero denominator");
  *this = from_wide(num, den);
}

Rational Rational::from_wide(wide num, wide den) {
  if (den == 0)
    throw std::domain_error("division by zero");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  wide g = wide_gcd(num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
  if (num > kMax || num < kMin || den > kMax)
    throw overflow_error("rational arithmetic overflow");
  Rational r;
  r.num_ = static_cast<std::int64_t>(num);
  r.den_ = static_cast<std::int64_t>(den);
  return r;
}

Rational Rational::parse(std::string_view text) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t'))
      s.remove_prefix(1);
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t'))
      s.remove_suffix(1);
    return s;
  };
  std::string_view body = trim(text);
  auto slash = body.find('/');
  if (slash == std::string_view::npos)
    return Rational(parse_int(body, text));
  std::int64_t num = parse_int(trim(body.substr(0, slash)), text);
  std::string_view den_text = trim(body.substr(slash + 1));
  if (!den_text.empty() && den_text.front() == '-')
    throw std::invalid_argument("negative denominator in '" + std::string(text) + "'");
  std::int64_t den = parse_int(den_text, text);
  if (den == 0)
    throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  return Rational(num, den);
}

std::string Rational::to_string() const {
  if (den_ == 1)
    return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

std::string Rational::to_fraction_string() const {
  return std::to_string(num_) + "/" + std::to_string(den_);
}

Rational Rational::operator-() const { return from_wide(-static_cast<wide>(num_), den_); }

Rational &Rational::operator+=(const Rational &rhs) {
  if (den_ == rhs.den_)
    *this = from_wide(static_cast<wide>(num_) + rhs.num_, den_);
  else
    *this = from_wide(static_cast<wide>(num_) * rhs.den_ + static_cast<wide>(rhs.num_) * den_,
                      static_cast<wide>(den_) * rhs.den_);
  return *this;
}

Rational &Rational::operator-=(const Rational &rhs) {
  if (den_ == rhs.den_)
    *this = from_wide(static_cast<wide>(num_) - rhs.num_, den_);
  else
    *this = from_wide(static_cast<wide>(num_) * rhs.den_ - static_cast<wide>(rhs.num_) * den_,
                      static_cast<wide>(den_) * rhs.den_);
  return *this;
}

Rational &Rational::operator*=(const Rational &rhs) {
  // Cross-reduce first so the 128-bit product stays small.
  wide g1 = wide_gcd(num_, rhs.den_);
  wide g2 = wide_gcd(rhs.num_, den_);
  if (g1 == 0)
    g1 = 1;
  if (g2 == 0)
    g2 = 1;
  *this = from_wide((num_ / g1) * (rhs.num_ / g2), (den_ / g2) * (rhs.den_ / g1));
  return *this;
}

Rational &Rational::operator/=(const Rational &rhs) {
  if (rhs.num_ == 0)
    throw std::domain_error("division by zero");
  *this = from_wide(static_cast<wide>(num_) * rhs.den_, static_cast<wide>(den_) * rhs.num_);
  return *this;
}

std::strong_ordering operator<=>(const Rational &lhs, const Rational &rhs) noexcept {
  if (lhs.den_ == rhs.den_)
    return lhs.num_ <=> rhs.num_;
  wide l = static_cast<wide>(lhs.num_) * rhs.den_;
  wide r = static_cast<wide>(rhs.num_) * lhs.den_;
  return l < r ? std::strong_ordering::less
               : (l > r ? std::strong_ordering::greater : std::strong_ordering::equal);
}

Rational abs(const Rational &r) { return r.sign() < 0 ? -r : r; }
Rational min(const Rational &a, const Rational &b) { return b < a ? b : a; }
Rational max(const Rational &a, const Rational &b) { return a < b ? b : a; }
Rational positive_part(const Rational &r) { return r.sign() < 0 ? Rational(0) : r; }

std::ostream &operator<<(std::ostream &os, const Rational &r) { return os << r.to_string(); }

} // namespace ecgame
