#include "ratiocycle/rational.hpp"

#include <cctype>
#include <limits>
#include <stdexcept>

namespace ratiocycle {

std::optional<BigInt> parse_bigint(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::size_t i = 0;
  if (text[0] == '+' || text[0] == '-') i = 1;
  if (i == text.size()) return std::nullopt;
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) return std::nullopt;
  }
  std::string s(text.substr(text[0] == '+' ? 1 : 0));
  BigInt out;
  if (out.set_str(s, 10) != 0) return std::nullopt;
  return out;
}

std::string to_string(const BigInt& x) { return x.get_str(10); }

bool fits_int64(const BigInt& x) {
  static const BigInt lo(std::to_string(std::numeric_limits<std::int64_t>::min()));
  static const BigInt hi(std::to_string(std::numeric_limits<std::int64_t>::max()));
  return x >= lo && x <= hi;
}

std::int64_t to_int64(const BigInt& x) {
  if (!fits_int64(x)) throw std::overflow_error("BigInt does not fit in int64");
  if (x.fits_slong_p()) return static_cast<std::int64_t>(x.get_si());
  return std::stoll(x.get_str(10));
}

BigInt from_int64(std::int64_t x) {
  if (x >= std::numeric_limits<long>::min() && x <= std::numeric_limits<long>::max()) {
    return BigInt(static_cast<long>(x));
  }
  return BigInt(std::to_string(x));
}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("Rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational::Rational(std::int64_t num, std::int64_t den)
    : Rational(from_int64(num), from_int64(den)) {}

std::optional<Rational> Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) {
    auto n = parse_bigint(text);
    if (!n) return std::nullopt;
    return Rational(*n);
  }
  auto n = parse_bigint(text.substr(0, slash));
  auto d = parse_bigint(text.substr(slash + 1));
  if (!n || !d || *d == 0) return std::nullopt;
  return Rational(*n, *d);
}

Rational Rational::operator-() const {
  Rational r;
  r.q_ = -q_;
  return r;
}

Rational& Rational::operator+=(const Rational& o) {
  q_ += o.q_;
  return *this;
}

Rational& Rational::operator-=(const Rational& o) {
  q_ -= o.q_;
  return *this;
}

Rational& Rational::operator*=(const Rational& o) {
  q_ *= o.q_;
  return *this;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.q_ == 0) throw std::domain_error("Rational division by zero");
  q_ /= o.q_;
  return *this;
}

std::string Rational::str() const {
  if (is_integer()) return q_.get_num().get_str(10);
  return q_.get_num().get_str(10) + "/" + q_.get_den().get_str(10);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace ratiocycle
