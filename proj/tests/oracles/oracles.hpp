#ifndef QPP_TESTS_ORACLES_HPP_
#define QPP_TESTS_ORACLES_HPP_

// Reference computations that deliberately avoid the production code paths:
// brute-force sums over partitions, closed-form number sequences, and
// formulas evaluated term by term.

#include <vector>

#include "qpp/freeprob.hpp"
#include "qpp/noncrossing.hpp"
#include "qpp/rational.hpp"
#include "qpp/signatures.hpp"

namespace qpp::oracle {

/// Non-crossing partitions obtained by filtering all set partitions.
inline std::vector<NCPartition> nc_by_filter(unsigned k) {
  std::vector<NCPartition> out;
  for (const auto& rgs : set_partitions(k)) {
    unsigned blocks = 0;
    for (unsigned b : rgs) blocks = std::max(blocks, b + 1);
    NCPartition p(blocks);
    for (unsigned i = 0; i < k; ++i) p[rgs[i]].push_back(i + 1);
    if (is_noncrossing_partition(p, k)) out.push_back(std::move(p));
  }
  return out;
}

/// sum over NC(k) of prod_V kappa_{|V|}.
inline Rational nc_moment(const std::vector<Rational>& kappa, unsigned k) {
  if (k == 0) return Rational(1);
  Rational total;
  for (const auto& p : nc_enumerate(k)) {
    Rational term(1);
    for (const auto& b : p) term *= kappa[b.size() - 1];
    total += term;
  }
  return total;
}

/// sum over NC(k) of sum_V kappa'_{|V|} prod_{W != V} kappa_{|W|}.
inline Rational nc_inf_moment(const std::vector<Rational>& kappa,
                              const std::vector<Rational>& kappa_prime,
                              unsigned k) {
  if (k == 0) return Rational(0);
  Rational total;
  for (const auto& p : nc_enumerate(k)) {
    for (std::size_t v = 0; v < p.size(); ++v) {
      Rational term = kappa_prime[p[v].size() - 1];
      for (std::size_t w = 0; w < p.size(); ++w) {
        if (w != v) term *= kappa[p[w].size() - 1];
      }
      total += term;
    }
  }
  return total;
}

inline Rational catalan(unsigned n) {
  return binomial(2 * n, n) / Rational(n + 1);
}

/// Bernoulli numbers B_0..B_n with the B_1 = +1/2 convention, from
/// sum_{j=0}^{m} C(m+1, j) B_j = m + 1.
inline std::vector<Rational> bernoulli_plus(unsigned n) {
  std::vector<Rational> B(n + 1);
  for (unsigned m = 0; m <= n; ++m) {
    Rational s(static_cast<long>(m) + 1);
    for (unsigned j = 0; j < m; ++j) s -= binomial(m + 1, j) * B[j];
    B[m] = s / binomial(m + 1, m);
  }
  return B;
}

}  // namespace qpp::oracle

#endif  // QPP_TESTS_ORACLES_HPP_
