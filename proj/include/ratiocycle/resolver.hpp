#pragma once

// Parametric-search resolver: maintains an open interval known to contain the
// unknown optimum lambda*, collects the roots of the linear functions compared
// in one batch, and binary-searches them with a three-way decision oracle.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <vector>

#include "ratiocycle/comparison.hpp"

namespace ratiocycle {

/// Fraction num/den with den > 0, not necessarily reduced.
template <class I>
struct Frac {
  I num{};
  I den{1};
};

inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline BigInt gcd_of(const BigInt& a, const BigInt& b) { return gcd(a, b); }

template <class I>
Frac<I> reduced(Frac<I> f) {
  I g = gcd_of(f.num, f.den);
  if (g != 0 && g != 1) {
    f.num /= g;
    f.den /= g;
  }
  return f;
}

/// sign(x - y) for fractions with positive denominators.
template <class I>
int compare_frac(const Frac<I>& x, const Frac<I>& y) {
  return cross_sign(x.num, y.den, y.num, x.den);
}

template <class I>
Rational to_rational(const Frac<I>& f) {
  return Rational(to_rational(f.num).numerator(), to_rational(f.den).numerator());
}

template <class I>
Frac<I> frac_from(const Rational& r);

template <>
inline Frac<std::int64_t> frac_from<std::int64_t>(const Rational& r) {
  return {to_int64(r.numerator()), to_int64(r.denominator())};
}
template <>
inline Frac<BigInt> frac_from<BigInt>(const Rational& r) {
  return {r.numerator(), r.denominator()};
}

/// Three-way decision oracle: the position of lambda relative to lambda*
/// (Less means lambda < lambda*).
using Oracle = std::function<Ordering(const Rational&)>;

struct Probe {
  Rational lambda;
  Ordering outcome;
};

template <class I>
class Resolver {
 public:
  /// nullopt bounds stand for -infinity / +infinity.
  Resolver(std::optional<Rational> lo, std::optional<Rational> hi, Oracle oracle)
      : oracle_(std::move(oracle)) {
    if (lo) lo_ = frac_from<I>(*lo);
    if (hi) hi_ = frac_from<I>(*hi);
    if (lo_ && hi_ && compare_frac(*lo_, *hi_) >= 0) throw std::invalid_argument("resolver needs lo < hi");
  }

  std::optional<Rational> lo() const { return lo_ ? std::optional(to_rational(*lo_)) : std::nullopt; }
  std::optional<Rational> hi() const { return hi_ ? std::optional(to_rational(*hi_)) : std::nullopt; }
  std::optional<Rational> star() const {
    return star_ ? std::optional(to_rational(*star_)) : std::nullopt;
  }
  bool star_found() const { return star_.has_value(); }
  std::uint64_t oracle_calls() const { return oracle_calls_; }
  const std::vector<Probe>& probe_log() const { return log_; }
  std::size_t max_batch_roots() const { return max_batch_roots_; }

  /// Direct probe, outside the batch machinery. Updates the interval.
  Ordering probe(const Rational& lambda) {
    const Frac<I> f = frac_from<I>(lambda);
    return probe_frac(f);
  }

  /// Registers the comparison a - lambda*b vs 0 for the current batch.
  void note(const I& a, const I& b) {
    if (star_ || sign_of(b) == 0) return;
    if (!inside(a, b)) return;
    Frac<I> r = (sign_of(b) < 0) ? Frac<I>{sub_checked(I{0}, a), sub_checked(I{0}, b)} : Frac<I>{a, b};
    pending_.push_back(reduced(r));
  }

  /// Binary search over the distinct pending roots; afterwards none of them
  /// lies strictly inside (lo, hi) unless lambda* was hit exactly.
  void resolve_pending() {
    if (pending_.empty()) return;
    auto& roots = pending_;
    std::sort(roots.begin(), roots.end(),
              [](const Frac<I>& x, const Frac<I>& y) { return compare_frac(x, y) < 0; });
    roots.erase(std::unique(roots.begin(), roots.end(),
                            [](const Frac<I>& x, const Frac<I>& y) { return compare_frac(x, y) == 0; }),
                roots.end());
    max_batch_roots_ = std::max(max_batch_roots_, roots.size());
    std::size_t lo = 0, hi = roots.size();
    while (lo < hi && !star_) {
      const std::size_t mid = lo + (hi - lo) / 2;
      const Ordering o = probe_frac(roots[mid]);
      if (o == Ordering::Less) {
        lo = mid + 1;
      } else if (o == Ordering::Greater) {
        hi = mid;
      }
    }
    roots.clear();
  }

  /// Sign at lambda* of a - lambda*b, for a comparison that needs no oracle
  /// (its root, if any, is outside the open interval or lambda* is known).
  int sign_at_star(const I& a, const I& b) const {
    const int sb = sign_of(b);
    if (sb == 0) return sign_of(a);
    if (star_) return cross_sign(a, star_->den, star_->num, b);
    // d(lambda) = a - lambda*b changes sign only at r = a/b.
    if (lo_ && sign_of_root_minus(a, b, *lo_) <= 0) return -sb;
    if (hi_ && sign_of_root_minus(a, b, *hi_) >= 0) return sb;
    throw std::logic_error("comparison root inside the open interval was never resolved");
  }

  bool inside(const I& a, const I& b) const {
    if (sign_of(b) == 0 || star_) return false;
    if (lo_ && sign_of_root_minus(a, b, *lo_) <= 0) return false;
    if (hi_ && sign_of_root_minus(a, b, *hi_) >= 0) return false;
    return true;
  }

 private:
  // sign(a/b - p/q), b != 0, q > 0.
  static int sign_of_root_minus(const I& a, const I& b, const Frac<I>& f) {
    return cross_sign(a, f.den, f.num, b) * sign_of(b);
  }

  Ordering probe_frac(const Frac<I>& f) {
    if (star_) throw std::logic_error("probe after lambda* was found");
    if ((lo_ && compare_frac(f, *lo_) <= 0) || (hi_ && compare_frac(f, *hi_) >= 0)) {
      throw std::logic_error("probe outside the open interval");
    }
    const Rational lambda = to_rational(f);
    const Ordering o = oracle_(lambda);
    ++oracle_calls_;
    log_.push_back({lambda, o});
    if (o == Ordering::Less) {
      lo_ = f;
    } else if (o == Ordering::Greater) {
      hi_ = f;
    } else {
      star_ = f;
    }
    return o;
  }

  Oracle oracle_;
  std::optional<Frac<I>> lo_, hi_, star_;
  std::vector<Frac<I>> pending_;
  std::vector<Probe> log_;
  std::uint64_t oracle_calls_ = 0;
  std::size_t max_batch_roots_ = 0;
};

struct LoggedComparison {
  Rational x_a, x_b, y_a, y_b;  // finite operands only
  Ordering outcome;
};

/// Runs algorithm code "generically at lambda*": operands are linear functions
/// of lambda and every outcome is the ordering of their values at lambda*.
template <class I>
class ParametricContext : public BatchTracker {
 public:
  using weight_type = LinearWeight<I>;
  static constexpr bool is_parametric = true;

  explicit ParametricContext(Resolver<I>& resolver) : resolver_(&resolver) {}

  Resolver<I>& resolver() { return *resolver_; }
  const Resolver<I>& resolver() const { return *resolver_; }

  void batch_begin() { open_batch(); }
  void batch_end() {
    close_batch();
    resolver_->resolve_pending();
    counters.oracle_calls = resolver_->oracle_calls();
  }

  void submit(const Dist<weight_type>& x, const Dist<weight_type>& y) {
    require_open("submit");
    ++counters.comparisons;
    if (x.infinite || y.infinite) return;
    const weight_type d = x.value - y.value;
    resolver_->note(d.a, d.b);
  }

  Ordering decide(const Dist<weight_type>& x, const Dist<weight_type>& y) {
    Ordering o;
    if (x.infinite || y.infinite) {
      o = compare_concrete_inf(x, y);
    } else {
      const weight_type d = x.value - y.value;
      o = ordering_from_sign(resolver_->sign_at_star(d.a, d.b));
      if (record_log) {
        log.push_back({to_rational(x.value.a), to_rational(x.value.b), to_rational(y.value.a),
                       to_rational(y.value.b), o});
      }
    }
    if (flip_decision && decisions_ == *flip_decision) o = mirror(o);
    ++decisions_;
    return o;
  }

  Ordering compare(const Dist<weight_type>& x, const Dist<weight_type>& y) {
    require_closed("compare");
    batch_begin();
    submit(x, y);
    batch_end();
    return decide(x, y);
  }

  /// Fault-injection hook: mirror the outcome of the k-th decision (0-based).
  std::optional<std::uint64_t> flip_decision;
  bool record_log = false;
  std::vector<LoggedComparison> log;

 private:
  static Ordering compare_concrete_inf(const Dist<weight_type>& x, const Dist<weight_type>& y) {
    if (x.infinite && y.infinite) return Ordering::Equal;
    return x.infinite ? Ordering::Greater : Ordering::Less;
  }

  Resolver<I>* resolver_;
  std::uint64_t decisions_ = 0;
};

}  // namespace ratiocycle
