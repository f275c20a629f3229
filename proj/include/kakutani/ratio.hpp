#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string>
#include <string_view>

namespace kakutani {

using Integer = mpz_class;

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor canonicalizes,
/// so two equal values always have identical numerator/denominator pairs.
class Ratio {
 public:
  Ratio() = default;
  Ratio(long num) : q_(num) {}  // NOLINT(google-explicit-constructor)
  Ratio(long num, long den);
  Ratio(const Integer& num, const Integer& den);
  explicit Ratio(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Accepts "p/q", "p", or a base-10 decimal such as "0.25" or "-1.5e-3";
  /// decimals are converted exactly. Throws Error{Parse} on malformed text.
  static Ratio parse(std::string_view text);

  Integer numerator() const { return q_.get_num(); }
  Integer denominator() const { return q_.get_den(); }
  const mpq_class& raw() const { return q_; }

  /// "p/q", or "p" when the denominator is 1.
  std::string to_string() const;
  double to_double() const { return q_.get_d(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }

  Ratio& operator+=(const Ratio& o) { q_ += o.q_; return *this; }
  Ratio& operator-=(const Ratio& o) { q_ -= o.q_; return *this; }
  Ratio& operator*=(const Ratio& o) { q_ *= o.q_; return *this; }
  Ratio& operator/=(const Ratio& o);

  friend Ratio operator+(Ratio a, const Ratio& b) { return a += b; }
  friend Ratio operator-(Ratio a, const Ratio& b) { return a -= b; }
  friend Ratio operator*(Ratio a, const Ratio& b) { return a *= b; }
  friend Ratio operator/(Ratio a, const Ratio& b) { return a /= b; }
  friend Ratio operator-(const Ratio& a) { return Ratio(mpq_class(-a.q_)); }

  friend bool operator==(const Ratio& a, const Ratio& b) { return cmp(a.q_, b.q_) == 0; }
  friend std::strong_ordering operator<=>(const Ratio& a, const Ratio& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Ratio& r) { return os << r.to_string(); }

  std::size_t hash() const;

 private:
  mpq_class q_;
};

inline Ratio abs(const Ratio& r) { return r.sign() < 0 ? -r : r; }

/// 2^e for e >= 0, or 1/2^-e otherwise.
Ratio pow2(long e);

/// Decimal rendering with round-half-even at `digits` significant digits,
/// formatted like printf's %g (scientific below 1e-4 or at/above 10^digits,
/// trailing zeros stripped). Locale independent.
std::string to_decimal(const Ratio& r, int digits = 12);

}  // namespace kakutani

template <>
struct std::hash<kakutani::Ratio> {
  std::size_t operator()(const kakutani::Ratio& r) const noexcept { return r.hash(); }
};
