#ifndef QPP_SIGNATURES_HPP_
#define QPP_SIGNATURES_HPP_

#include <vector>

#include "qpp/rational.hpp"
#include "qpp/series.hpp"

namespace qpp {

/// Non-increasing integer tuple lambda_1 >= ... >= lambda_N, N >= 1.
class Signature {
 public:
  /// Throws InvalidSignature if empty or not non-increasing.
  explicit Signature(std::vector<long> parts);
  static Signature zeros(unsigned n) { return Signature(std::vector<long>(n)); }

  const std::vector<long>& parts() const { return parts_; }
  unsigned n() const { return static_cast<unsigned>(parts_.size()); }

  /// x_i = lambda_i + N - i, i = 1..N; strictly decreasing.
  std::vector<Rational> shifted() const;

 private:
  std::vector<long> parts_;
};

struct Atom {
  Rational pos;
  Rational w;
  friend bool operator==(const Atom&, const Atom&) = default;
};

struct AtomicMeasure {
  /// Positions strictly decreasing. Zero-weight atoms are kept so that the
  /// atom list always has one entry per row of the signature.
  std::vector<Atom> atoms;
  /// Set when q lies outside [-1, 1], where weights may be negative.
  bool is_signed = false;

  Rational mass() const;
  Rational moment(unsigned k) const;
};

/// Atoms at (lambda_i + c N - i)/N with weights
/// (1/N) prod_{j != i} (x_i - x_j - q)/(x_i - x_j), x_i = lambda_i - i.
AtomicMeasure pp_measure(const Signature& lambda, const Rational& q,
                         const Rational& offset = Rational(1));

Rational pp_moment_direct(const Signature& lambda, const Rational& q,
                          unsigned k, const Rational& offset = Rational(1));

/// sum_i prod_{j != i} (x_i - x_j - q)/(x_i - x_j) x_i^k for distinct x.
Rational mkq_direct(const std::vector<Rational>& x, const Rational& q,
                    unsigned k);

/// Generating series whose z^{k+1} coefficient is mkq_direct(x, q, k),
/// truncated at z^K. Throws DegenerateInput on repeated entries.
Series mkq_via_gf(const std::vector<Rational>& x, const Rational& q,
                  unsigned K);

/// (k+1)! mkq_direct(x, q, k) through the set-partition expansion over
/// power-sum differences p_n(x + q) - p_n(x). Requires q != 0
/// (QZeroBranch) and k + 1 <= 8 (TooLarge).
Rational newton_partition_sum(const std::vector<Rational>& x,
                              const Rational& q, unsigned k);

/// Checks 1 - q sum_{k>=1} m_{k-1} z^k == exp(sum_k (p_k(x) - p_k(x+q)) z^k / k)
/// exactly through z^K.
bool supersym_check(const std::vector<Rational>& x, const Rational& q,
                    unsigned K);

/// All set partitions of {0..n-1} as restricted growth strings.
std::vector<std::vector<unsigned>> set_partitions(unsigned n);

}  // namespace qpp

#endif  // QPP_SIGNATURES_HPP_
