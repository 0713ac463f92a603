#ifndef QPP_LIMITS_HPP_
#define QPP_LIMITS_HPP_

#include <string>
#include <utility>
#include <vector>

#include "qpp/freeprob.hpp"
#include "qpp/rational.hpp"
#include "qpp/series.hpp"

namespace qpp {

/// Taylor data of a function at u = 1: f(u) = sum_k c_k (u-1)^k / k!.
/// Used for both Psi (coefficients a_k) and Phi (coefficients b_k).
struct TaylorSpec {
  std::vector<Rational> c;

  unsigned order() const {
    return c.empty() ? 0 : static_cast<unsigned>(c.size() - 1);
  }
  /// f(1) is conventionally 0; a non-zero value is allowed but callers may
  /// want to warn about it.
  bool has_constant_term() const { return !c.empty() && !c[0].is_zero(); }

  /// f(1 + w) as a series in w, order n (missing data is an error).
  Series at_one(unsigned n) const;
  /// f'(1 + w) as a series in w, order n; reads c_1..c_{n+1}.
  Series derivative_at_one(unsigned n) const;

  static TaylorSpec from_series_at_one(const Series& s);

  friend bool operator==(const TaylorSpec&, const TaylorSpec&) = default;
};

using PsiSpec = TaylorSpec;
using PhiSpec = TaylorSpec;

enum class Regime { Full, Leading };

/// k-th limiting moment:
///   sum_{m=0}^k C(k,m)/(m+1)! d^m/du^m (u^{k-q} Psi'(u)^{k-m}) at u = 1.
/// Needs a_1..a_k; throws InsufficientOrder otherwise.
Rational limit_moment(const PsiSpec& psi, const Rational& q, unsigned k);
MomentSeq limit_moments(const PsiSpec& psi, const Rational& q, unsigned K);

/// Same moment through the R-transform side,
///   sum_m k!/(m!(m+1)!(k-m)!) d^m/du^m F_q(u)^{k-m} at u = 0,
/// with F_q(u) = e_q(u) Psi'(e_q(u)) + e_q(u)/(e_q(u)-1) - 1/u.
Rational limit_moment_alt(const PsiSpec& psi, const Rational& q, unsigned k);

/// e_q(u) f'(e_q(u)) as a series in u of order n.
Series eq_composed_derivative(const TaylorSpec& f, const Rational& q,
                              unsigned n);

/// kappa_n = [u^{n-1}] e_q(u) Psi'(e_q(u)) + kappa_n(Beta(1-q, 1+q)).
CumulantSeq limit_cumulants(const PsiSpec& psi, const Rational& q,
                            unsigned K);

/// k-th moment of the first-order correction. The full regime includes the
/// -(1-q)/(2u) term next to Phi'; the leading regime drops it. k = 0 gives 0.
Rational inf_correction_moment(const PsiSpec& psi, const PhiSpec& phi,
                               const Rational& q, unsigned k,
                               Regime regime = Regime::Full);
InfPair limit_inf_pair(const PsiSpec& psi, const PhiSpec& phi,
                       const Rational& q, unsigned K,
                       Regime regime = Regime::Full);

/// (kappa, kappa') with kappa'_n = [u^{n-1}] e_q(u) Phi'(e_q(u)), plus
/// (q-1)/2 at n = 1 in the full regime.
InfCumulants inf_cumulants(const PsiSpec& psi, const PhiSpec& phi,
                           const Rational& q, unsigned K,
                           Regime regime = Regime::Full);

/// Moves a moment sequence between deformation parameters through
/// (1 - q S_q)^{1/q} = (1 - q' S_q')^{1/q'}, S = sum_k mu_k z^{k+1}, with the
/// exponential form at q = 0 or q' = 0.
MomentSeq q_transfer(const MomentSeq& m, const Rational& q,
                     const Rational& q_prime);

/// Correction moments at q from the q = 0 data:
///   exp(q S_0) S'_q = S'_0 + (q/2) sum_k (k+1) mu_k z^{k+2}.
std::vector<Rational> inf_transfer(const MomentSeq& m0,
                                   const std::vector<Rational>& corr0,
                                   const Rational& q);

/// nu with 1 - G_mu = (1 - q G_nu)^{1/q}. Requires q in (-1,0) u (0,1).
MomentSeq p_map(const MomentSeq& m, const Rational& q);
/// lambda with 1 + G_mu(z-1) = (1 - q G_lambda(z))^{-1/q}. Same domain.
MomentSeq q_map(const MomentSeq& m, const Rational& q);

/// Moments of 1 - X.
MomentSeq reflect_moments(const MomentSeq& m);
/// Moments of X + c.
MomentSeq shift_moments(const MomentSeq& m, const Rational& c);

/// Taylor data of u -> f(1/u) at u = 1.
TaylorSpec at_inverse(const TaylorSpec& f);

/// Known presets, Taylor data to order K:
///   poisson(g)               Psi = g(u-1),    Phi = 0
///   inv_poisson(g)           Psi = g(1/u-1),  Phi = 0
///   poisson_with_corr(g)     Psi = Phi = g(u-1)
///   inv_poisson_with_corr(g) Psi = Phi = g(1/u-1)
///   rank_one(g, a)           Psi = g(1/u-1),  Phi = -log(1 - a(u-1))
/// Throws UnknownPreset or BadParams (wrong parameter count).
std::pair<PsiSpec, PhiSpec> char_preset(const std::string& name,
                                        const std::vector<Rational>& params,
                                        unsigned K);

}  // namespace qpp

#endif  // QPP_LIMITS_HPP_
