#include "qpp/signatures.hpp"

#include <algorithm>
#include <string>

#include "qpp/errors.hpp"

namespace qpp {
namespace {

void require_distinct(const std::vector<Rational>& x) {
  std::vector<Rational> sorted = x;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw DegenerateInput("coordinates must be pairwise distinct");
  }
}

Rational vandermonde_ratio(const std::vector<Rational>& x, std::size_t i,
                           const Rational& q) {
  Rational num(1), den(1);
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (j == i) continue;
    const Rational d = x[i] - x[j];
    num *= d - q;
    den *= d;
  }
  return num / den;
}

Rational power_sum(const std::vector<Rational>& x, const Rational& shift,
                   unsigned n) {
  Rational s;
  for (const auto& xi : x) s += pow(xi + shift, static_cast<long>(n));
  return s;
}

}  // namespace

Signature::Signature(std::vector<long> parts) : parts_(std::move(parts)) {
  if (parts_.empty()) throw InvalidSignature("signature must have N >= 1");
  for (std::size_t i = 1; i < parts_.size(); ++i) {
    if (parts_[i] > parts_[i - 1]) {
      throw InvalidSignature("not non-increasing at position " +
                             std::to_string(i + 1));
    }
  }
}

std::vector<Rational> Signature::shifted() const {
  const long N = static_cast<long>(parts_.size());
  std::vector<Rational> x;
  x.reserve(parts_.size());
  for (long i = 1; i <= N; ++i) x.emplace_back(parts_[i - 1] + N - i);
  return x;
}

Rational AtomicMeasure::mass() const {
  Rational m;
  for (const auto& a : atoms) m += a.w;
  return m;
}

Rational AtomicMeasure::moment(unsigned k) const {
  Rational m;
  for (const auto& a : atoms) m += a.w * pow(a.pos, static_cast<long>(k));
  return m;
}

AtomicMeasure pp_measure(const Signature& lambda, const Rational& q,
                         const Rational& offset) {
  const long N = lambda.n();
  std::vector<Rational> x;
  for (long i = 1; i <= N; ++i) x.emplace_back(lambda.parts()[i - 1] - i);

  AtomicMeasure m;
  m.is_signed = q > Rational(1) || q < Rational(-1);
  const Rational invN(1, N);
  for (long i = 0; i < N; ++i) {
    Atom a;
    a.pos = (Rational(lambda.parts()[i]) + offset * Rational(N) -
             Rational(i + 1)) * invN;
    a.w = invN * vandermonde_ratio(x, static_cast<std::size_t>(i), q);
    m.atoms.push_back(std::move(a));
  }
  return m;
}

Rational pp_moment_direct(const Signature& lambda, const Rational& q,
                          unsigned k, const Rational& offset) {
  return pp_measure(lambda, q, offset).moment(k);
}

Rational mkq_direct(const std::vector<Rational>& x, const Rational& q,
                    unsigned k) {
  require_distinct(x);
  Rational s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    s += vandermonde_ratio(x, i, q) * pow(x[i], static_cast<long>(k));
  }
  return s;
}

Series mkq_via_gf(const std::vector<Rational>& x, const Rational& q,
                  unsigned K) {
  require_distinct(x);
  if (q.is_zero()) {
    Series s(K);
    for (unsigned k = 0; k + 1 <= K; ++k) {
      s = s.with_coeff(k + 1, power_sum(x, Rational(0), k));
    }
    return s;
  }
  // 1/q - (1/q) prod_i (1 - (x_i + q) z) / (1 - x_i z)
  Series prod = Series::constant(1, K);
  for (const auto& xi : x) {
    const Series num = Series::linear(1, -(xi + q), K);
    const Series den = Series::linear(1, -xi, K);
    prod = prod * num * reciprocal(den);
  }
  const Rational invq = Rational(1) / q;
  return Series::constant(invq, K) - scale(prod, invq);
}

std::vector<std::vector<unsigned>> set_partitions(unsigned n) {
  std::vector<std::vector<unsigned>> out;
  if (n == 0) {
    out.emplace_back();
    return out;
  }
  std::vector<unsigned> a(n, 0), maxv(n, 0);
  // Restricted growth strings: a[0] = 0, a[i] <= 1 + max(a[0..i-1]).
  while (true) {
    out.push_back(a);
    int i = static_cast<int>(n) - 1;
    while (i > 0 && a[i] == maxv[i - 1] + 1) --i;
    if (i == 0) break;
    ++a[i];
    maxv[i] = std::max(maxv[i - 1], a[i]);
    for (unsigned j = i + 1; j < n; ++j) {
      a[j] = 0;
      maxv[j] = maxv[i];
    }
  }
  return out;
}

Rational newton_partition_sum(const std::vector<Rational>& x,
                              const Rational& q, unsigned k) {
  if (q.is_zero()) {
    throw QZeroBranch("partition sum has a 1/q prefactor; use the q = 0 "
                      "generating series instead");
  }
  if (k + 1 > 8) throw TooLarge("partition sum limited to k + 1 <= 8");
  const unsigned n = k + 1;
  std::vector<Rational> diff(n + 1);
  for (unsigned s = 1; s <= n; ++s) {
    diff[s] = power_sum(x, q, s) - power_sum(x, Rational(0), s);
  }
  Rational total;
  for (const auto& rgs : set_partitions(n)) {
    const unsigned blocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    std::vector<unsigned> size(blocks, 0);
    for (unsigned b : rgs) ++size[b];
    Rational term = (blocks % 2 == 1) ? Rational(1) : Rational(-1);
    for (unsigned s : size) term *= factorial(s - 1) * diff[s];
    total += term;
  }
  return total / q;
}

bool supersym_check(const std::vector<Rational>& x, const Rational& q,
                    unsigned K) {
  Series lhs = Series::constant(1, K);
  Series exponent(K);
  for (unsigned k = 1; k <= K; ++k) {
    lhs = lhs.with_coeff(k, -q * mkq_direct(x, q, k - 1));
    exponent = exponent.with_coeff(
        k, (power_sum(x, Rational(0), k) - power_sum(x, q, k)) / Rational(k));
  }
  return lhs == exp(exponent);
}

}  // namespace qpp
