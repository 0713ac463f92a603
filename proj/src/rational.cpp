#include "qpp/rational.hpp"

#include <cctype>
#include <cmath>

#include "qpp/errors.hpp"

namespace qpp {
namespace {

bool valid_integer(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '-' || s[0] == '+') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

std::string strip_plus(std::string_view s) {
  if (!s.empty() && s[0] == '+') s.remove_prefix(1);
  return std::string(s);
}

}  // namespace

Rational::Rational(long numerator, long denominator) {
  if (denominator == 0) throw DivisionByZero("rational with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front())))
    text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back())))
    text.remove_suffix(1);

  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1")
                                      : text.substr(slash + 1);
  if (!valid_integer(num) || !valid_integer(den) || den[0] == '-' ||
      den[0] == '+') {
    throw ParseError("not a rational: '" + std::string(text) + "'");
  }
  mpz_class n(strip_plus(num), 10);
  mpz_class d(std::string(den), 10);
  if (d == 0) throw ParseError("zero denominator: '" + std::string(text) + "'");
  Rational r;
  r.value_ = mpq_class(n, d);
  r.value_.canonicalize();
  return r;
}

Rational Rational::from_mpq(const mpq_class& value) {
  Rational r;
  r.value_ = value;
  r.value_.canonicalize();
  return r;
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& other) {
  value_ += other.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& other) {
  value_ -= other.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& other) {
  value_ *= other.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& other) {
  if (other.is_zero()) throw DivisionByZero("rational division by zero");
  value_ /= other.value_;
  return *this;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

Rational pow(const Rational& r, long n) {
  if (n < 0) return Rational(1) / pow(r, -n);
  Rational result(1);
  Rational base = r;
  unsigned long e = static_cast<unsigned long>(n);
  while (e > 0) {
    if (e & 1UL) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational::from_mpq(mpq_class(f));
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return Rational::from_mpq(mpq_class(b));
}

Rational binomial(const Rational& e, unsigned j) {
  Rational num(1);
  for (unsigned i = 0; i < j; ++i) num *= e - Rational(i);
  return num / factorial(j);
}

double Rational::to_double() const {
  // get_d truncates; compare the two neighbours exactly to round properly.
  const double d = value_.get_d();
  if (!std::isfinite(d)) return d;
  const double away = std::nextafter(d, value_ < 0 ? -HUGE_VAL : HUGE_VAL);
  if (!std::isfinite(away)) return d;
  const mpq_class lo_gap = abs(value_ - mpq_class(d));
  const mpq_class hi_gap = abs(mpq_class(away) - value_);
  if (hi_gap < lo_gap) return away;
  if (hi_gap == lo_gap) {
    int e = 0;
    const double mant = std::ldexp(std::frexp(away, &e), 53);
    return std::fmod(mant, 2.0) == 0 ? away : d;
  }
  return d;
}

}  // namespace qpp
