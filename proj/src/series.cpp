#include "qpp/series.hpp"

#include <algorithm>
#include <sstream>
#include <utility>

#include "qpp/errors.hpp"

namespace qpp {
namespace {

void require_same_order(const Series& a, const Series& b, const char* op) {
  if (a.order() != b.order()) {
    throw OrderMismatch(std::string(op) + ": orders " +
                        std::to_string(a.order()) + " and " +
                        std::to_string(b.order()));
  }
}

}  // namespace

Series::Series(unsigned order) : coeffs_(order + 1), order_(order) {}

Series::Series(std::vector<Rational> coeffs, unsigned order)
    : coeffs_(std::move(coeffs)), order_(order) {
  if (coeffs_.size() > order + 1) {
    throw OrderMismatch("more coefficients than the truncation order allows");
  }
  coeffs_.resize(order + 1);
}

Series::Series(std::initializer_list<Rational> coeffs, unsigned order)
    : Series(std::vector<Rational>(coeffs), order) {}

Series Series::constant(const Rational& c, unsigned order) {
  Series s(order);
  s.coeffs_[0] = c;
  return s;
}

Series Series::identity(unsigned order) {
  Series s(order);
  if (order >= 1) s.coeffs_[1] = 1;
  return s;
}

Series Series::linear(const Rational& c0, const Rational& c1,
                      unsigned order) {
  Series s = constant(c0, order);
  if (order >= 1) s.coeffs_[1] = c1;
  return s;
}

Rational Series::coeff(unsigned n) const {
  return n <= order_ ? coeffs_[n] : Rational(0);
}

Series Series::with_order(unsigned n) const {
  std::vector<Rational> c(coeffs_.begin(),
                          coeffs_.begin() + std::min(n, order_) + 1);
  return Series(std::move(c), n);
}

Series Series::with_coeff(unsigned n, const Rational& c) const {
  if (n > order_) throw OrderMismatch("coefficient index beyond order");
  Series s = *this;
  s.coeffs_[n] = c;
  return s;
}

bool Series::is_zero() const {
  for (const auto& c : coeffs_) {
    if (!c.is_zero()) return false;
  }
  return true;
}

std::string Series::str() const {
  std::ostringstream os;
  bool first = true;
  for (unsigned n = 0; n <= order_; ++n) {
    if (coeffs_[n].is_zero()) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << coeffs_[n] << ")";
    if (n >= 1) os << "z";
    if (n >= 2) os << "^" << n;
  }
  if (first) os << "0";
  os << " + O(z^" << order_ + 1 << ")";
  return os.str();
}

Series add(const Series& a, const Series& b) {
  require_same_order(a, b, "add");
  std::vector<Rational> c(a.order() + 1);
  for (unsigned n = 0; n <= a.order(); ++n) c[n] = a[n] + b[n];
  return Series(std::move(c), a.order());
}

Series mul(const Series& a, const Series& b) {
  require_same_order(a, b, "mul");
  const unsigned K = a.order();
  std::vector<Rational> c(K + 1);
  for (unsigned i = 0; i <= K; ++i) {
    if (a[i].is_zero()) continue;
    for (unsigned j = 0; i + j <= K; ++j) c[i + j] += a[i] * b[j];
  }
  return Series(std::move(c), K);
}

Series scale(const Series& a, const Rational& s) {
  std::vector<Rational> c(a.coeffs());
  for (auto& x : c) x *= s;
  return Series(std::move(c), a.order());
}

Series operator+(const Series& a, const Series& b) { return add(a, b); }
Series operator-(const Series& a) { return scale(a, Rational(-1)); }
Series operator-(const Series& a, const Series& b) { return add(a, -b); }
Series operator*(const Series& a, const Series& b) { return mul(a, b); }
Series operator*(const Rational& c, const Series& a) { return scale(a, c); }

Series reciprocal(const Series& a) {
  if (a[0].is_zero()) throw NotInvertible("reciprocal: zero constant term");
  const unsigned K = a.order();
  const Rational inv0 = Rational(1) / a[0];
  std::vector<Rational> b(K + 1);
  b[0] = inv0;
  for (unsigned n = 1; n <= K; ++n) {
    Rational s;
    for (unsigned k = 1; k <= n; ++k) s += a[k] * b[n - k];
    b[n] = -s * inv0;
  }
  return Series(std::move(b), K);
}

// Both recurrences come from comparing coefficients in b' = a' b and
// a l' = a'.
Series exp(const Series& a) {
  if (!a[0].is_zero()) throw BadConstantTerm("exp: constant term must be 0");
  const unsigned K = a.order();
  std::vector<Rational> b(K + 1);
  b[0] = 1;
  for (unsigned n = 1; n <= K; ++n) {
    Rational s;
    for (unsigned k = 1; k <= n; ++k) s += Rational(k) * a[k] * b[n - k];
    b[n] = s / Rational(n);
  }
  return Series(std::move(b), K);
}

Series log(const Series& a) {
  if (a[0] != Rational(1)) {
    throw BadConstantTerm("log: constant term must be 1");
  }
  const unsigned K = a.order();
  std::vector<Rational> l(K + 1);
  for (unsigned n = 1; n <= K; ++n) {
    Rational s;
    for (unsigned k = 1; k < n; ++k) s += Rational(k) * l[k] * a[n - k];
    l[n] = a[n] - s / Rational(n);
  }
  return Series(std::move(l), K);
}

Series pow(const Series& a, const Rational& alpha) {
  if (a[0] != Rational(1)) {
    throw BadConstantTerm("pow: constant term must be 1");
  }
  return exp(scale(log(a), alpha));
}

Series pow_int(const Series& a, unsigned n) {
  Series result = Series::constant(1, a.order());
  Series base = a;
  while (n > 0) {
    if (n & 1U) result = mul(result, base);
    n >>= 1;
    if (n > 0) base = mul(base, base);
  }
  return result;
}

Series compose(const Series& f, const Series& g) {
  require_same_order(f, g, "compose");
  const unsigned K = f.order();
  bool f_constant = true;
  for (unsigned n = 1; n <= K; ++n) f_constant = f_constant && f[n].is_zero();
  if (f_constant) return Series::constant(f[0], K);
  if (!g[0].is_zero()) {
    throw BadConstantTerm("compose: inner series must have zero constant term");
  }
  // Horner: f_0 + g (f_1 + g (f_2 + ...)).
  Series acc = Series::constant(f[K], K);
  for (unsigned n = K; n-- > 0;) {
    acc = mul(acc, g);
    acc = acc.with_coeff(0, acc[0] + f[n]);
  }
  return acc;
}

// Lagrange inversion: [w^n] g = (1/n) [w^{n-1}] (w / f(w))^n.
Series revert(const Series& f) {
  if (!f[0].is_zero()) {
    throw NotRevertible("revert: constant term must be 0");
  }
  const unsigned K = f.order();
  if (K == 0) return Series(0);
  if (f[1].is_zero()) throw NotRevertible("revert: linear coefficient is 0");
  const Series h = reciprocal(divide_by_z(f));
  // divide_by_z loses the top coefficient slot, which is harmless: only
  // coefficients up to w^{K-1} of powers of h are read.
  std::vector<Rational> g(K + 1);
  Series hp = Series::constant(1, K);
  for (unsigned n = 1; n <= K; ++n) {
    hp = mul(hp, h);
    g[n] = hp[n - 1] / Rational(n);
  }
  return Series(std::move(g), K);
}

Series derive(const Series& a, DeriveOrder mode) {
  const unsigned K = a.order();
  std::vector<Rational> d(K + 1);
  for (unsigned n = 1; n <= K; ++n) d[n - 1] = Rational(n) * a[n];
  if (mode == DeriveOrder::Shrink) {
    const unsigned k = K == 0 ? 0 : K - 1;
    d.resize(k + 1);
    return Series(std::move(d), k);
  }
  return Series(std::move(d), K);
}

Series integrate(const Series& a) {
  const unsigned K = a.order();
  std::vector<Rational> c(K + 2);
  for (unsigned n = 0; n <= K; ++n) c[n + 1] = a[n] / Rational(n + 1);
  return Series(std::move(c), K + 1);
}

Series divide_by_z(const Series& a) {
  const unsigned K = a.order();
  std::vector<Rational> c(K + 1);
  for (unsigned n = 1; n <= K; ++n) c[n - 1] = a[n];
  return Series(std::move(c), K);
}

Series multiply_by_z(const Series& a) {
  const unsigned K = a.order();
  std::vector<Rational> c(K + 1);
  for (unsigned n = 0; n < K; ++n) c[n + 1] = a[n];
  return Series(std::move(c), K);
}

}  // namespace qpp
