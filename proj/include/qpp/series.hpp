#ifndef QPP_SERIES_HPP_
#define QPP_SERIES_HPP_

#include <initializer_list>
#include <string>
#include <vector>

#include "qpp/rational.hpp"

namespace qpp {

/// Truncated power series c_0 + c_1 z + ... + c_K z^K over the rationals.
///
/// The truncation order K is part of the value. Binary operations require
/// both operands to carry the same order and throw OrderMismatch otherwise,
/// so precision is never lost silently.
class Series {
 public:
  /// The zero series of order K.
  explicit Series(unsigned order = 0);
  /// Coefficients beyond K are rejected; missing ones are zero.
  Series(std::vector<Rational> coeffs, unsigned order);
  Series(std::initializer_list<Rational> coeffs, unsigned order);

  static Series constant(const Rational& c, unsigned order);
  /// The series z (requires order >= 1 to be non-zero).
  static Series identity(unsigned order);
  /// c0 + c1 z, with c1 dropped at order 0.
  static Series linear(const Rational& c0, const Rational& c1, unsigned order);

  unsigned order() const { return order_; }
  const std::vector<Rational>& coeffs() const { return coeffs_; }
  const Rational& operator[](unsigned n) const { return coeffs_[n]; }
  /// Coefficient of z^n, zero for n > K.
  Rational coeff(unsigned n) const;

  /// Re-truncate (n < K) or zero-pad (n > K).
  Series with_order(unsigned n) const;
  Series with_coeff(unsigned n, const Rational& c) const;

  bool is_zero() const;
  std::string str() const;

  friend bool operator==(const Series& a, const Series& b) = default;

 private:
  std::vector<Rational> coeffs_;
  unsigned order_;
};

enum class DeriveOrder {
  Repad,   // keep order K; the top coefficient becomes 0
  Shrink,  // return order K-1
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);
Series operator*(const Series& a, const Series& b);
Series operator*(const Rational& c, const Series& a);

Series add(const Series& a, const Series& b);
Series mul(const Series& a, const Series& b);
Series scale(const Series& a, const Rational& c);

/// Throws NotInvertible when the constant term is zero.
Series reciprocal(const Series& a);

/// Requires a[0] == 0, else BadConstantTerm.
Series exp(const Series& a);
/// Requires a[0] == 1, else BadConstantTerm.
Series log(const Series& a);
/// a^alpha as exp(alpha log a); requires a[0] == 1.
Series pow(const Series& a, const Rational& alpha);
/// Repeated squaring; valid for any constant term.
Series pow_int(const Series& a, unsigned n);

/// f(g(z)). Requires g[0] == 0 unless f is a constant.
Series compose(const Series& f, const Series& g);
/// Compositional inverse; requires f[0] == 0 and f[1] != 0.
Series revert(const Series& f);

Series derive(const Series& a, DeriveOrder mode = DeriveOrder::Repad);
/// Antiderivative with zero constant term. The result has order K+1, since
/// no information is lost.
Series integrate(const Series& a);

/// (a - a[0]) / z, re-padded to the same order.
Series divide_by_z(const Series& a);
/// z * a, truncated to the same order.
Series multiply_by_z(const Series& a);

}  // namespace qpp

#endif  // QPP_SERIES_HPP_
