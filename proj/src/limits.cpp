#include "qpp/limits.hpp"

#include <string>

#include "qpp/errors.hpp"

namespace qpp {
namespace {

void require_data(const TaylorSpec& f, unsigned needed, const char* what) {
  if (needed > f.order() || f.c.empty()) {
    throw InsufficientOrder(std::string(what) + " needs Taylor data up to " +
                            std::to_string(needed) + ", have " +
                            std::to_string(f.c.empty() ? 0 : f.order()));
  }
}

// (1 + w)^e through w^n from exact generalized binomial coefficients.
Series binomial_series(const Rational& e, unsigned n) {
  std::vector<Rational> c(n + 1);
  Rational b(1);
  for (unsigned j = 0; j <= n; ++j) {
    c[j] = b;
    b = b * (e - Rational(j)) / Rational(j + 1);
  }
  return Series(std::move(c), n);
}

Series sum_series(const MomentSeq& m) {  // sum_k mu_k z^{k+1}
  std::vector<Rational> c(m.order() + 2);
  for (unsigned k = 0; k <= m.order(); ++k) c[k + 1] = m[k];
  return Series(std::move(c), m.order() + 1);
}

MomentSeq from_sum_series(const Series& s) {
  std::vector<Rational> mu(s.order());
  for (unsigned k = 0; k < s.order(); ++k) mu[k] = s[k + 1];
  return MomentSeq(std::move(mu));
}

void require_open_domain(const Rational& q, const char* op) {
  if (q.is_zero() || q >= Rational(1) || q <= Rational(-1)) {
    throw OutOfDomain(std::string(op) + " needs q in (-1,0) or (0,1), got " +
                      q.str());
  }
}

}  // namespace

Series TaylorSpec::at_one(unsigned n) const {
  require_data(*this, n, "Taylor series");
  std::vector<Rational> s(n + 1);
  for (unsigned k = 0; k <= n; ++k) s[k] = c[k] / factorial(k);
  return Series(std::move(s), n);
}

Series TaylorSpec::derivative_at_one(unsigned n) const {
  require_data(*this, n + 1, "derivative series");
  std::vector<Rational> s(n + 1);
  for (unsigned k = 0; k <= n; ++k) s[k] = c[k + 1] / factorial(k);
  return Series(std::move(s), n);
}

TaylorSpec TaylorSpec::from_series_at_one(const Series& s) {
  TaylorSpec f;
  for (unsigned k = 0; k <= s.order(); ++k) f.c.push_back(s[k] * factorial(k));
  return f;
}

// With w = u - 1 each derivative at u = 1 is m! [w^m], which cancels
// against the 1/(m+1)! prefactor down to 1/(m+1).
Rational limit_moment(const PsiSpec& psi, const Rational& q, unsigned k) {
  if (k == 0) return Rational(1);
  require_data(psi, k, "limit moment");
  const Series dpsi = psi.derivative_at_one(k - 1).with_order(k);
  const Series base = binomial_series(Rational(k) - q, k);
  Rational total;
  Series power = Series::constant(1, k);  // dpsi^{k-m}, built from m = k down
  for (unsigned m = k + 1; m-- > 0;) {
    total += binomial(k, m) / Rational(m + 1) * (base * power)[m];
    power = power * dpsi;
  }
  return total;
}

MomentSeq limit_moments(const PsiSpec& psi, const Rational& q, unsigned K) {
  std::vector<Rational> mu(K + 1);
  for (unsigned k = 0; k <= K; ++k) mu[k] = limit_moment(psi, q, k);
  return MomentSeq(std::move(mu));
}

Series eq_composed_derivative(const TaylorSpec& f, const Rational& q,
                              unsigned n) {
  const Series e = eq_series(q, n);
  const Series w = e - Series::constant(1, n);
  return e * compose(f.derivative_at_one(n), w);
}

Rational limit_moment_alt(const PsiSpec& psi, const Rational& q, unsigned k) {
  if (k == 0) return Rational(1);
  require_data(psi, k, "limit moment");
  const Series F = eq_composed_derivative(psi, q, k - 1).with_order(k) +
                   r_beta(q, k - 1).with_order(k);
  Rational total;
  Series power = Series::constant(1, k);
  for (unsigned m = k + 1; m-- > 0;) {
    total += binomial(k, m) / Rational(m + 1) * power[m];
    power = power * F;
  }
  return total;
}

CumulantSeq limit_cumulants(const PsiSpec& psi, const Rational& q,
                            unsigned K) {
  if (K == 0) return CumulantSeq();
  require_data(psi, K, "limit cumulants");
  const Series r = eq_composed_derivative(psi, q, K - 1) + r_beta(q, K - 1);
  return cumulants_from_r(r);
}

Rational inf_correction_moment(const PsiSpec& psi, const PhiSpec& phi,
                               const Rational& q, unsigned k, Regime regime) {
  if (k == 0) return Rational(0);
  require_data(psi, k - 1, "correction moment");
  require_data(phi, k, "correction moment");
  const unsigned n = k - 1;
  const Series dpsi = k >= 2 ? psi.derivative_at_one(n - 1).with_order(n)
                             : Series(n);
  Series inner = binomial_series(Rational(k) - q, n) * phi.derivative_at_one(n);
  if (regime == Regime::Full) {
    // (1-q)/(2u) u^{k-q} = (1-q)/2 u^{k-1-q}
    inner = inner - scale(binomial_series(Rational(k - 1) - q, n),
                          (Rational(1) - q) / Rational(2));
  }
  Rational total;
  Series power = Series::constant(1, n);  // dpsi^{k-m-1}
  for (unsigned m = n + 1; m-- > 0;) {
    total += binomial(k, m + 1) * (inner * power)[m];
    power = power * dpsi;
  }
  return total;
}

InfPair limit_inf_pair(const PsiSpec& psi, const PhiSpec& phi,
                       const Rational& q, unsigned K, Regime regime) {
  std::vector<Rational> corr(K + 1);
  for (unsigned k = 1; k <= K; ++k) {
    corr[k] = inf_correction_moment(psi, phi, q, k, regime);
  }
  return {limit_moments(psi, q, K), std::move(corr)};
}

InfCumulants inf_cumulants(const PsiSpec& psi, const PhiSpec& phi,
                           const Rational& q, unsigned K, Regime regime) {
  const CumulantSeq kappa = limit_cumulants(psi, q, K);
  if (K == 0) return {kappa, CumulantSeq()};
  require_data(phi, K, "infinitesimal cumulants");
  std::vector<Rational> kp = eq_composed_derivative(phi, q, K - 1).coeffs();
  if (regime == Regime::Full) kp[0] += (q - Rational(1)) / Rational(2);
  return {kappa, CumulantSeq(std::move(kp))};
}

MomentSeq q_transfer(const MomentSeq& m, const Rational& q,
                     const Rational& q_prime) {
  if (q == q_prime) return m;
  const Series S = sum_series(m);
  const unsigned n = S.order();
  const Series one = Series::constant(1, n);
  // L = (1/q) log(1 - q S), the common value of both sides' logarithms.
  const Series L = q.is_zero() ? -S : scale(log(one - scale(S, q)),
                                            Rational(1) / q);
  const Series T = q_prime.is_zero()
                       ? -L
                       : scale(one - exp(scale(L, q_prime)),
                               Rational(1) / q_prime);
  return from_sum_series(T);
}

std::vector<Rational> inf_transfer(const MomentSeq& m0,
                                   const std::vector<Rational>& corr0,
                                   const Rational& q) {
  const std::vector<Rational> c0 = check_correction(corr0);
  const unsigned K = m0.order();
  if (c0.size() != K + 1) {
    throw OrderMismatch("correction length must match the moment order");
  }
  const unsigned n = K + 1;
  const Series S0 = sum_series(m0);
  std::vector<Rational> rhs(n + 1);
  for (unsigned k = 0; k <= K; ++k) rhs[k + 1] = c0[k];
  for (unsigned k = 0; k + 2 <= n; ++k) {
    rhs[k + 2] += q / Rational(2) * Rational(k + 1) * m0[k];
  }
  const Series Sq = exp(scale(S0, -q)) * Series(std::move(rhs), n);
  std::vector<Rational> out(K + 1);
  for (unsigned k = 0; k <= K; ++k) out[k] = Sq[k + 1];
  return out;
}

MomentSeq p_map(const MomentSeq& m, const Rational& q) {
  require_open_domain(q, "p_map");
  const Series G = sum_series(m);
  const Series one = Series::constant(1, G.order());
  return from_sum_series(scale(one - pow(one - G, q), Rational(1) / q));
}

MomentSeq q_map(const MomentSeq& m, const Rational& q) {
  require_open_domain(q, "q_map");
  const Series G = sum_series(shift_moments(m, Rational(1)));
  const Series one = Series::constant(1, G.order());
  return from_sum_series(scale(one - pow(one + G, -q), Rational(1) / q));
}

MomentSeq shift_moments(const MomentSeq& m, const Rational& c) {
  std::vector<Rational> nu(m.order() + 1);
  for (unsigned k = 0; k <= m.order(); ++k) {
    for (unsigned j = 0; j <= k; ++j) {
      nu[k] += binomial(k, j) * pow(c, static_cast<long>(k - j)) * m[j];
    }
  }
  return MomentSeq(std::move(nu));
}

MomentSeq reflect_moments(const MomentSeq& m) {
  std::vector<Rational> nu(m.order() + 1);
  for (unsigned k = 0; k <= m.order(); ++k) {
    for (unsigned j = 0; j <= k; ++j) {
      const Rational t = binomial(k, j) * m[j];
      nu[k] += (j % 2 == 0) ? t : -t;
    }
  }
  return MomentSeq(std::move(nu));
}

// 1/u = 1 + v with v = -w/(1+w) when u = 1 + w.
TaylorSpec at_inverse(const TaylorSpec& f) {
  const unsigned n = f.order();
  const Series v = -multiply_by_z(reciprocal(Series::linear(1, 1, n)));
  return TaylorSpec::from_series_at_one(compose(f.at_one(n), v));
}

std::pair<PsiSpec, PhiSpec> char_preset(const std::string& name,
                                        const std::vector<Rational>& params,
                                        unsigned K) {
  auto expect = [&](std::size_t n) {
    if (params.size() != n) {
      throw BadParams("preset " + name + " takes " + std::to_string(n) +
                      " parameter(s)");
    }
  };
  auto linear = [&](const Rational& g) {  // g(u - 1)
    TaylorSpec f{std::vector<Rational>(K + 1)};
    if (K >= 1) f.c[1] = g;
    return f;
  };
  auto inverse = [&](const Rational& g) {  // g(1/u - 1): a_k = g (-1)^k k!
    TaylorSpec f{std::vector<Rational>(K + 1)};
    for (unsigned k = 1; k <= K; ++k) {
      f.c[k] = g * factorial(k) * Rational(k % 2 == 0 ? 1 : -1);
    }
    return f;
  };
  const TaylorSpec zero{std::vector<Rational>(K + 1)};

  if (name == "poisson") {
    expect(1);
    return {linear(params[0]), zero};
  }
  if (name == "inv_poisson") {
    expect(1);
    return {inverse(params[0]), zero};
  }
  if (name == "poisson_with_corr") {
    expect(1);
    return {linear(params[0]), linear(params[0])};
  }
  if (name == "inv_poisson_with_corr") {
    expect(1);
    return {inverse(params[0]), inverse(params[0])};
  }
  if (name == "rank_one") {
    expect(2);
    // -log(1 - a w) = sum_k a^k w^k / k, so b_k = (k-1)! a^k.
    TaylorSpec phi{std::vector<Rational>(K + 1)};
    for (unsigned k = 1; k <= K; ++k) {
      phi.c[k] = factorial(k - 1) * pow(params[1], static_cast<long>(k));
    }
    return {inverse(params[0]), phi};
  }
  throw UnknownPreset("unknown preset '" + name + "'");
}

}  // namespace qpp
