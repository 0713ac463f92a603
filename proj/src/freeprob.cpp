#include "qpp/freeprob.hpp"

#include <string>

#include "qpp/errors.hpp"

namespace qpp {
namespace {

void require_same_order(unsigned a, unsigned b, const char* op) {
  if (a != b) {
    throw OrderMismatch(std::string(op) + ": orders " + std::to_string(a) +
                        " and " + std::to_string(b));
  }
}

// powers[s] = M^s for s = 0..K, all truncated at z^K.
std::vector<Series> powers_of(const Series& M) {
  const unsigned K = M.order();
  std::vector<Series> p;
  p.reserve(K + 1);
  p.push_back(Series::constant(1, K));
  for (unsigned s = 1; s <= K; ++s) p.push_back(p.back() * M);
  return p;
}

Series moment_series(const std::vector<Rational>& mu) {
  return Series(mu, static_cast<unsigned>(mu.size() - 1));
}

}  // namespace

MomentSeq::MomentSeq(std::vector<Rational> mu) : mu_(std::move(mu)) {
  if (mu_.empty() || mu_[0] != Rational(1)) {
    throw InvalidSequence("moment sequence must start with mu_0 = 1");
  }
}

MomentSeq MomentSeq::truncated(unsigned K) const {
  if (K > order()) throw InsufficientOrder("cannot extend a moment sequence");
  return MomentSeq(std::vector<Rational>(mu_.begin(), mu_.begin() + K + 1));
}

CumulantSeq operator+(const CumulantSeq& a, const CumulantSeq& b) {
  require_same_order(a.order(), b.order(), "cumulant sum");
  std::vector<Rational> k(a.kappa());
  for (unsigned n = 0; n < k.size(); ++n) k[n] += b.kappa()[n];
  return CumulantSeq(std::move(k));
}

CumulantSeq operator-(const CumulantSeq& a, const CumulantSeq& b) {
  require_same_order(a.order(), b.order(), "cumulant difference");
  std::vector<Rational> k(a.kappa());
  for (unsigned n = 0; n < k.size(); ++n) k[n] -= b.kappa()[n];
  return CumulantSeq(std::move(k));
}

InfCumulants operator+(const InfCumulants& a, const InfCumulants& b) {
  return {a.kappa + b.kappa, a.kappa_prime + b.kappa_prime};
}

std::vector<Rational> check_correction(std::vector<Rational> corr) {
  if (corr.empty() || !corr[0].is_zero()) {
    throw InvalidSequence("correction moments must start with 0");
  }
  return corr;
}

// mu_n = sum_{s=1}^n kappa_s [z^{n-s}] M(z)^s. The coefficient only reads
// mu_0..mu_{n-1}, so the moments can be produced one at a time.
MomentSeq cumulants_to_moments(const CumulantSeq& c) {
  const unsigned K = c.order();
  std::vector<Rational> mu(K + 1);
  mu[0] = 1;
  for (unsigned n = 1; n <= K; ++n) {
    Series M(std::vector<Rational>(mu.begin(), mu.begin() + n), n);
    Series P = Series::constant(1, n);
    Rational s;
    for (unsigned j = 1; j <= n; ++j) {
      P = P * M;
      s += c(j) * P[n - j];
    }
    mu[n] = s;
  }
  return MomentSeq(std::move(mu));
}

CumulantSeq moments_to_cumulants(const MomentSeq& m) {
  const unsigned K = m.order();
  const auto P = powers_of(moment_series(m.mu()));
  std::vector<Rational> kappa(K);
  for (unsigned n = 1; n <= K; ++n) {
    Rational s = m[n];
    for (unsigned j = 1; j < n; ++j) s -= kappa[j - 1] * P[j][n - j];
    kappa[n - 1] = s;
  }
  return CumulantSeq(std::move(kappa));
}

// Differentiating the moment recursion along the correction direction:
// mu'_n = sum_s kappa'_s [z^{n-s}] M^s + sum_s kappa_s [z^{n-s}] s M^{s-1} M'.
InfPair inf_moments_from_cumulants(const InfCumulants& c) {
  const unsigned K = c.kappa.order();
  require_same_order(K, c.kappa_prime.order(), "infinitesimal cumulants");
  const MomentSeq m = cumulants_to_moments(c.kappa);
  const auto P = powers_of(moment_series(m.mu()));
  std::vector<Rational> corr(K + 1);
  for (unsigned n = 1; n <= K; ++n) {
    Series Mp(std::vector<Rational>(corr.begin(), corr.begin() + n), K);
    Rational s;
    for (unsigned j = 1; j <= n; ++j) {
      s += c.kappa_prime(j) * P[j][n - j];
      s += c.kappa(j) * Rational(j) * (P[j - 1] * Mp)[n - j];
    }
    corr[n] = s;
  }
  return {m, std::move(corr)};
}

InfCumulants inf_cumulants_from_moments(const InfPair& m) {
  const unsigned K = m.moments.order();
  const std::vector<Rational> corr = check_correction(m.corr);
  if (corr.size() != K + 1) {
    throw OrderMismatch("correction length must match the moment order");
  }
  const CumulantSeq kappa = moments_to_cumulants(m.moments);
  const auto P = powers_of(moment_series(m.moments.mu()));
  const Series Mp(corr, K);
  std::vector<Series> PMp;  // s M^{s-1} M'
  for (unsigned j = 1; j <= K; ++j) {
    PMp.push_back(Rational(j) * (P[j - 1] * Mp));
  }
  // Triangular in kappa': the j = n term is kappa'_n itself.
  std::vector<Rational> kp(K);
  for (unsigned n = 1; n <= K; ++n) {
    Rational s = corr[n];
    for (unsigned j = 1; j < n; ++j) s -= kp[j - 1] * P[j][n - j];
    for (unsigned j = 1; j <= n; ++j) s -= kappa(j) * PMp[j - 1][n - j];
    kp[n - 1] = s;
  }
  return {kappa, CumulantSeq(std::move(kp))};
}

Series r_transform(const CumulantSeq& c) {
  if (c.order() == 0) throw InvalidSequence("R-transform needs kappa_1");
  return Series(c.kappa(), c.order() - 1);
}

CumulantSeq cumulants_from_r(const Series& r) {
  return CumulantSeq(r.coeffs());
}

Series eq_series(const Rational& q, unsigned K) {
  if (q.is_zero()) return exp(Series::identity(K));
  return pow(Series::linear(1, -q, K), -(Rational(1) / q));
}

MomentSeq beta_moments(const Rational& q, unsigned K) {
  std::vector<Rational> mu(K + 1);
  Rational prod(1);
  mu[0] = 1;
  for (unsigned k = 1; k <= K; ++k) {
    prod *= Rational(k) - q;
    mu[k] = prod / factorial(k + 1);
  }
  return MomentSeq(std::move(mu));
}

// With E = (e_q - 1)/z, which has constant term 1:
//   e_q/(e_q - 1) - 1/z = ((e_q - E)/z) / E.
Series r_beta(const Rational& q, unsigned n) {
  const Series e = eq_series(q, n + 2);
  const Series E = divide_by_z(e);
  const Series D = divide_by_z(e - E);
  return D.with_order(n) * reciprocal(E.with_order(n));
}

CumulantSeq beta_cumulants(const Rational& q, unsigned K) {
  if (K == 0) return CumulantSeq();
  return cumulants_from_r(r_beta(q, K - 1));
}

BetaData beta_data(const Rational& q, unsigned K) {
  return {beta_moments(q, K), beta_cumulants(q, K)};
}

Series r_quant(const CumulantSeq& c, const Rational& q) {
  return r_transform(c) - r_transform(beta_cumulants(q, c.order()));
}

MomentSeq free_convolve(const MomentSeq& a, const MomentSeq& b) {
  require_same_order(a.order(), b.order(), "free_convolve");
  return cumulants_to_moments(moments_to_cumulants(a) +
                              moments_to_cumulants(b));
}

MomentSeq otimes_q(const MomentSeq& a, const MomentSeq& b, const Rational& q) {
  require_same_order(a.order(), b.order(), "otimes_q");
  return cumulants_to_moments(moments_to_cumulants(a) +
                              moments_to_cumulants(b) -
                              beta_cumulants(q, a.order()));
}

InfCumulants inf_free_convolve(const InfCumulants& a, const InfCumulants& b) {
  require_same_order(a.order(), b.order(), "inf_free_convolve");
  return a + b;
}

}  // namespace qpp
