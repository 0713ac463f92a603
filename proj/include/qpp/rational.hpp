#ifndef QPP_RATIONAL_HPP_
#define QPP_RATIONAL_HPP_

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace qpp {

/// Exact rational number of unbounded size.
///
/// Always stored in lowest terms with a positive denominator, so two equal
/// values have identical representations and `str()` is canonical.
class Rational {
 public:
  Rational() = default;

  template <std::integral I>
  Rational(I value)  // NOLINT(google-explicit-constructor)
      : value_(static_cast<long>(value)) {}

  Rational(long numerator, long denominator);

  /// Accepts "p/q", "p", with an optional leading sign. Throws ParseError.
  static Rational parse(std::string_view text);

  static Rational from_mpq(const mpq_class& value);

  const mpq_class& raw() const { return value_; }

  /// "p/q", or "p" when the denominator is 1.
  std::string str() const;
  /// Nearest binary64 value (ties to even).
  double to_double() const;

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) {
    return cmp(a.value_, b.value_) == 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater
                          : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
  }

 private:
  mpq_class value_;
};

Rational abs(const Rational& r);

/// r^n for any integer n; n < 0 requires r != 0.
Rational pow(const Rational& r, long n);

Rational factorial(unsigned n);
Rational binomial(unsigned n, unsigned k);

/// Generalized binomial coefficient e(e-1)...(e-j+1)/j! for rational e.
Rational binomial(const Rational& e, unsigned j);

}  // namespace qpp

#endif  // QPP_RATIONAL_HPP_
