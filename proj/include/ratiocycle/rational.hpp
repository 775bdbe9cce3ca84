#pragma once

// Exact arbitrary-precision integers and fractions.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

namespace ratiocycle {

using BigInt = mpz_class;

/// Parses a decimal integer with optional leading sign. Returns nullopt on
/// anything else (including empty input and embedded whitespace).
std::optional<BigInt> parse_bigint(std::string_view text);

std::string to_string(const BigInt& x);

/// True if x fits in a signed 64-bit integer.
bool fits_int64(const BigInt& x);
std::int64_t to_int64(const BigInt& x);
BigInt from_int64(std::int64_t x);

/// Normalized fraction: denominator > 0 and gcd(|num|, den) == 1 at all times.
class Rational {
 public:
  Rational() = default;
  Rational(long x) : q_(x) {}  // NOLINT(google-explicit-constructor)
  Rational(int x) : q_(static_cast<long>(x)) {}  // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& x) : q_(x) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(std::int64_t num, std::int64_t den);

  /// Accepts "p/q" or an integer "p". Rejects q == 0.
  static std::optional<Rational> parse(std::string_view text);

  BigInt numerator() const { return q_.get_num(); }
  BigInt denominator() const { return q_.get_den(); }
  int sign() const { return sgn(q_); }
  bool is_integer() const { return q_.get_den() == 1; }

  Rational operator-() const;
  Rational& operator+=(const Rational& o);
  Rational& operator-=(const Rational& o);
  Rational& operator*=(const Rational& o);
  Rational& operator/=(const Rational& o);  // throws std::domain_error on zero

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  double to_double() const { return q_.get_d(); }

  const mpq_class& raw() const { return q_; }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace ratiocycle
