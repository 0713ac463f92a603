#ifndef QPP_TESTS_HELPERS_HPP_
#define QPP_TESTS_HELPERS_HPP_

#include <random>
#include <string>
#include <vector>

#include "qpp/rational.hpp"
#include "qpp/series.hpp"

namespace qpp::test {

inline Rational R(const char* s) { return Rational::parse(s); }

inline Series S(std::vector<Rational> c, unsigned order) {
  return Series(std::move(c), order);
}

inline Rational random_rational(std::mt19937_64& rng, long num_bound,
                                long den_bound) {
  std::uniform_int_distribution<long> num(-num_bound, num_bound);
  std::uniform_int_distribution<long> den(1, den_bound);
  return Rational(num(rng), den(rng));
}

inline Series random_series(std::mt19937_64& rng, unsigned order,
                            const Rational& c0) {
  std::vector<Rational> c(order + 1);
  c[0] = c0;
  for (unsigned n = 1; n <= order; ++n) c[n] = random_rational(rng, 5, 4);
  return Series(std::move(c), order);
}

}  // namespace qpp::test

#endif  // QPP_TESTS_HELPERS_HPP_
