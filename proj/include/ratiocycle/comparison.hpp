#pragma once

// Comparison contexts. Every shortest-path routine in this library compares
// and adds weights only through a context, so the same code runs on concrete
// numbers and symbolically on linear functions of lambda.

#include <compare>
#include <concepts>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <type_traits>

#include "ratiocycle/rational.hpp"

namespace ratiocycle {

enum class Ordering { Less, Equal, Greater };

constexpr Ordering mirror(Ordering o) {
  return o == Ordering::Less ? Ordering::Greater : (o == Ordering::Greater ? Ordering::Less : o);
}

constexpr Ordering ordering_from_sign(int s) {
  return s < 0 ? Ordering::Less : (s > 0 ? Ordering::Greater : Ordering::Equal);
}

std::string_view to_string(Ordering o);

struct Counters {
  std::uint64_t comparisons = 0;        // weight comparisons issued
  std::uint64_t comparison_rounds = 0;  // closed batches (one per tournament round)
  std::uint64_t oracle_calls = 0;       // decision-oracle probes
  std::uint64_t work_units = 0;         // weight additions / candidate evaluations
  std::uint64_t parallel_steps = 0;     // logical parallel steps, a min counted as one step

  Counters& operator+=(const Counters& o);
  friend bool operator==(const Counters&, const Counters&) = default;
};

class BatchMisuse : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// ---------------------------------------------------------------------------
// Integer helpers shared by the int64 and BigInt instantiations.

inline std::int64_t add_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in weight sum");
  return r;
}
inline std::int64_t sub_checked(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("int64 overflow in weight difference");
  return r;
}
inline BigInt add_checked(const BigInt& a, const BigInt& b) { return a + b; }
inline BigInt sub_checked(const BigInt& a, const BigInt& b) { return a - b; }

inline int sign_of(std::int64_t x) { return (x > 0) - (x < 0); }
inline int sign_of(const BigInt& x) { return sgn(x); }

/// sign(a*d - c*b), computed without overflow.
inline int cross_sign(std::int64_t a, std::int64_t d, std::int64_t c, std::int64_t b) {
  const __int128 l = static_cast<__int128>(a) * d;
  const __int128 r = static_cast<__int128>(c) * b;
  return (l > r) - (l < r);
}
inline int cross_sign(const BigInt& a, const BigInt& d, const BigInt& c, const BigInt& b) {
  return sgn(BigInt(a * d - c * b));
}

// ---------------------------------------------------------------------------

inline Rational add_weights(const Rational& a, const Rational& b) { return a + b; }
inline std::int64_t add_weights(std::int64_t a, std::int64_t b) { return add_checked(a, b); }
inline BigInt add_weights(const BigInt& a, const BigInt& b) { return a + b; }

/// A weight extended with an absorbing +infinity.
template <class W>
struct Dist {
  bool infinite = true;
  W value{};

  static Dist inf() { return Dist{}; }
  static Dist of(W w) { return Dist{false, std::move(w)}; }
  bool finite() const { return !infinite; }

  friend Dist operator+(const Dist& x, const Dist& y) {
    if (x.infinite || y.infinite) return inf();
    return of(add_weights(x.value, y.value));
  }
  friend bool operator==(const Dist& x, const Dist& y) {
    if (x.infinite || y.infinite) return x.infinite == y.infinite;
    return x.value == y.value;
  }
};

/// The function a - lambda * b. Components are integers: every edge weight is
/// c(e) - lambda t(e) with integral c and t, and only sums are ever formed.
template <class I>
struct LinearWeight {
  I a{};  // constant (cost-like) term
  I b{};  // coefficient of -lambda (time-like) term

  friend LinearWeight operator+(const LinearWeight& x, const LinearWeight& y) {
    return {add_checked(x.a, y.a), add_checked(x.b, y.b)};
  }
  friend LinearWeight operator-(const LinearWeight& x, const LinearWeight& y) {
    return {sub_checked(x.a, y.a), sub_checked(x.b, y.b)};
  }
  LinearWeight operator-() const { return {sub_checked(I{0}, a), sub_checked(I{0}, b)}; }
  friend bool operator==(const LinearWeight&, const LinearWeight&) = default;

  /// Exact value at lambda.
  Rational at(const Rational& lambda) const;
};

template <class I>
LinearWeight<I> add_weights(const LinearWeight<I>& x, const LinearWeight<I>& y) {
  return x + y;
}

inline Rational to_rational(std::int64_t x) { return Rational(from_int64(x)); }
inline Rational to_rational(const BigInt& x) { return Rational(x); }

template <class I>
Rational LinearWeight<I>::at(const Rational& lambda) const {
  return to_rational(a) - lambda * to_rational(b);
}

/// Exact comparison for concrete weight types.
template <class W>
Ordering compare_concrete(const Dist<W>& x, const Dist<W>& y) {
  if (x.infinite || y.infinite) {
    if (x.infinite && y.infinite) return Ordering::Equal;
    return x.infinite ? Ordering::Greater : Ordering::Less;
  }
  if (x.value < y.value) return Ordering::Less;
  if (y.value < x.value) return Ordering::Greater;
  return Ordering::Equal;
}

/// Batch bookkeeping shared by all contexts: begin/submit/end/decide.
class BatchTracker {
 public:
  Counters counters;

  bool in_batch() const { return open_; }
  void add_work(std::uint64_t units) { counters.work_units += units; }
  void note_step(std::uint64_t steps = 1) { counters.parallel_steps += steps; }

 protected:
  void open_batch() {
    if (open_) throw BatchMisuse("batch_begin inside an open batch");
    open_ = true;
  }
  void close_batch() {
    if (!open_) throw BatchMisuse("batch_end without batch_begin");
    open_ = false;
    ++counters.comparison_rounds;
  }
  void require_open(const char* what) const {
    if (!open_) throw BatchMisuse(std::string(what) + " outside a batch");
  }
  void require_closed(const char* what) const {
    if (open_) throw BatchMisuse(std::string(what) + " inside an open batch");
  }

 private:
  bool open_ = false;
};

/// Exact comparisons on concrete weights (Rational, int64 or BigInt).
template <class W>
class ConcreteContext : public BatchTracker {
 public:
  using weight_type = W;
  static constexpr bool is_parametric = false;

  /// When true, minimum computations that need no tie-breaking run as plain
  /// loops (and through the SIMD kernels for int64) instead of tournaments.
  /// Results are identical either way; counters are accounted analytically.
  bool direct_loops = true;

  void batch_begin() { open_batch(); }
  void batch_end() { close_batch(); }
  void submit(const Dist<W>&, const Dist<W>&) {
    require_open("submit");
    ++counters.comparisons;
  }
  Ordering decide(const Dist<W>& x, const Dist<W>& y) const { return compare_concrete(x, y); }

  /// A comparison outside any batch markers is a singleton batch.
  Ordering compare(const Dist<W>& x, const Dist<W>& y) {
    require_closed("compare");
    batch_begin();
    submit(x, y);
    batch_end();
    return decide(x, y);
  }
};

template <class Ctx>
concept ComparisonContext = requires(Ctx& ctx, const Dist<typename Ctx::weight_type>& d) {
  typename Ctx::weight_type;
  ctx.batch_begin();
  ctx.batch_end();
  ctx.submit(d, d);
  { ctx.decide(d, d) } -> std::same_as<Ordering>;
  { ctx.compare(d, d) } -> std::same_as<Ordering>;
  ctx.add_work(std::uint64_t{1});
};

}  // namespace ratiocycle
