#ifndef QPP_FREEPROB_HPP_
#define QPP_FREEPROB_HPP_

#include <vector>

#include "qpp/rational.hpp"
#include "qpp/series.hpp"

namespace qpp {

/// Moments mu_0 = 1, mu_1, ..., mu_K.
class MomentSeq {
 public:
  MomentSeq() : mu_{Rational(1)} {}
  /// Throws InvalidSequence unless mu is non-empty with mu[0] == 1.
  explicit MomentSeq(std::vector<Rational> mu);

  unsigned order() const { return static_cast<unsigned>(mu_.size() - 1); }
  const std::vector<Rational>& mu() const { return mu_; }
  const Rational& operator[](unsigned k) const { return mu_[k]; }
  MomentSeq truncated(unsigned K) const;

  friend bool operator==(const MomentSeq&, const MomentSeq&) = default;

 private:
  std::vector<Rational> mu_;
};

/// Free cumulants kappa_1, ..., kappa_K. Indexing is 1-based through
/// operator(); the underlying vector stores kappa_n at n - 1.
class CumulantSeq {
 public:
  CumulantSeq() = default;
  explicit CumulantSeq(std::vector<Rational> kappa)
      : kappa_(std::move(kappa)) {}
  static CumulantSeq zeros(unsigned K) {
    return CumulantSeq(std::vector<Rational>(K));
  }

  unsigned order() const { return static_cast<unsigned>(kappa_.size()); }
  const std::vector<Rational>& kappa() const { return kappa_; }
  const Rational& operator()(unsigned n) const { return kappa_[n - 1]; }

  friend bool operator==(const CumulantSeq&, const CumulantSeq&) = default;

 private:
  std::vector<Rational> kappa_;
};

CumulantSeq operator+(const CumulantSeq& a, const CumulantSeq& b);
CumulantSeq operator-(const CumulantSeq& a, const CumulantSeq& b);

/// A measure together with a first-order correction: corr[k] is the k-th
/// moment of the correction, corr[0] = 0 always.
struct InfPair {
  MomentSeq moments;
  std::vector<Rational> corr;

  unsigned order() const { return moments.order(); }
  friend bool operator==(const InfPair&, const InfPair&) = default;
};

/// Infinitesimal free cumulants (kappa, kappa').
struct InfCumulants {
  CumulantSeq kappa;
  CumulantSeq kappa_prime;

  unsigned order() const { return kappa.order(); }
  friend bool operator==(const InfCumulants&, const InfCumulants&) = default;
};

InfCumulants operator+(const InfCumulants& a, const InfCumulants& b);

/// Correction sequence of length K+1 with a zero 0-th entry. Throws
/// InvalidSequence if corr[0] != 0.
std::vector<Rational> check_correction(std::vector<Rational> corr);

CumulantSeq moments_to_cumulants(const MomentSeq& m);
MomentSeq cumulants_to_moments(const CumulantSeq& c);

InfPair inf_moments_from_cumulants(const InfCumulants& c);
InfCumulants inf_cumulants_from_moments(const InfPair& m);

/// R(z) = sum_{n>=0} kappa_{n+1} z^n, order K - 1. Requires K >= 1.
Series r_transform(const CumulantSeq& c);
CumulantSeq cumulants_from_r(const Series& r);

/// e_q(z) = (1 - q z)^{-1/q}, and exp(z) at q = 0.
Series eq_series(const Rational& q, unsigned K);

/// prod_{i=1}^k (i - q) / (k+1)!, k = 0..K: moments of Beta(1-q, 1+q).
MomentSeq beta_moments(const Rational& q, unsigned K);

/// e_q(z)/(e_q(z) - 1) - 1/z through z^n. The pole is cancelled before
/// any expansion.
Series r_beta(const Rational& q, unsigned n);

CumulantSeq beta_cumulants(const Rational& q, unsigned K);

struct BetaData {
  MomentSeq moments;
  CumulantSeq cumulants;
};
BetaData beta_data(const Rational& q, unsigned K);

/// R_mu(z) - R_beta(z), order K - 1.
Series r_quant(const CumulantSeq& c, const Rational& q);

MomentSeq free_convolve(const MomentSeq& a, const MomentSeq& b);
/// Cumulants kappa(a) + kappa(b) - kappa(Beta(1-q, 1+q)).
MomentSeq otimes_q(const MomentSeq& a, const MomentSeq& b, const Rational& q);
InfCumulants inf_free_convolve(const InfCumulants& a, const InfCumulants& b);

}  // namespace qpp

#endif  // QPP_FREEPROB_HPP_
