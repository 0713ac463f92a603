#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "helpers.hpp"
#include "qpp/errors.hpp"
#include "qpp/signatures.hpp"

using namespace qpp;
using qpp::test::R;

namespace {

std::vector<Rational> X(std::initializer_list<long> v) {
  return std::vector<Rational>(v.begin(), v.end());
}

Signature random_signature(std::mt19937_64& rng, unsigned N) {
  std::uniform_int_distribution<long> d(-10, 10);
  std::vector<long> p(N);
  for (auto& x : p) x = d(rng);
  std::sort(p.rbegin(), p.rend());
  return Signature(p);
}

}  // namespace

TEST_CASE("signature validation") {
  CHECK_THROWS_AS(Signature({1, 3}), InvalidSignature);
  CHECK_THROWS_AS(Signature(std::vector<long>{}), InvalidSignature);
  CHECK(Signature({3, 1, 0}).shifted() == X({5, 2, 0}));
}

TEST_CASE("pp measure small cases") {
  const AtomicMeasure m = pp_measure(Signature({0, 0}), R("1/2"));
  REQUIRE(m.atoms.size() == 2);
  CHECK(m.atoms[0] == Atom{R("1/2"), R("1/4")});
  CHECK(m.atoms[1] == Atom{Rational(0), R("3/4")});
  CHECK_FALSE(m.is_signed);

  for (const auto& a : pp_measure(Signature({4, 2, 2, 0, -1}), 0).atoms) {
    CHECK(a.w == R("1/5"));
  }
  CHECK(pp_measure(Signature({0}), 3).is_signed);
  CHECK(pp_moment_direct(Signature({0, 0}), R("1/2"), 1) == R("1/8"));
  CHECK(pp_moment_direct(Signature::zeros(6), R("1/3"), 0) == Rational(1));
}

TEST_CASE("pp measure mass and positivity") {
  std::mt19937_64 rng(7);
  const Rational qs[] = {0, 1, -1, R("1/2"), R("-1/2"), R("1/3"), R("5/2"),
                         R("-7/3")};
  for (int t = 0; t < 100; ++t) {
    const Signature s = random_signature(rng, 1 + t % 8);
    for (const auto& q : qs) {
      const AtomicMeasure m = pp_measure(s, q, R("-3/2"));
      CHECK(m.mass() == Rational(1));
      if (!m.is_signed) {
        for (const auto& a : m.atoms) {
          CHECK(a.w >= Rational(0));
          CHECK(a.w <= Rational(1));
        }
      }
    }
  }
}

TEST_CASE("pp moments approach the beta mean for the zero signature") {
  const Rational q = R("1/2");
  const double limit = (1 - 0.5) / 2;
  double prev_gap = 1;
  for (unsigned N : {5u, 10u, 20u, 40u}) {
    const double gap =
        std::abs(pp_moment_direct(Signature::zeros(N), q, 1).to_double() -
                 limit);
    CHECK(gap < prev_gap);
    prev_gap = gap;
  }
  CHECK(prev_gap < 0.01);
}

TEST_CASE("generating series of the deformed power sums") {
  CHECK(mkq_via_gf(X({1, 0}), 0, 3) == Series({0, 2, 1, 1}, 3));
  const Series g = mkq_via_gf(X({1, 0}), R("1/2"), 3);
  for (unsigned k = 0; k + 1 <= 3; ++k) {
    CHECK(g[k + 1] == mkq_direct(X({1, 0}), R("1/2"), k));
  }
  CHECK(mkq_via_gf(X({7, 3, -2}), R("-1/3"), 4)[1] == Rational(3));
  CHECK_THROWS_AS(mkq_via_gf(X({1, 1}), R("1/2"), 3), DegenerateInput);
  CHECK_THROWS_AS(mkq_direct(X({2, 0, 2}), R("1/2"), 1), DegenerateInput);
}

TEST_CASE("direct and generating routes agree after rescaling") {
  std::mt19937_64 rng(11);
  const Rational qs[] = {0, 1, -1, R("1/2"), R("-1/2"), R("1/3")};
  for (int t = 0; t < 30; ++t) {
    const unsigned N = 1 + t % 8;
    const Signature s = random_signature(rng, N);
    for (const auto& q : qs) {
      const Series g = mkq_via_gf(s.shifted(), q, 7);
      for (unsigned k = 0; k <= 6; ++k) {
        const Rational scaled = g[k + 1] / pow(Rational(N), k + 1);
        CHECK(pp_moment_direct(s, q, k) == scaled);
      }
    }
  }
}

TEST_CASE("set partitions") {
  CHECK(set_partitions(0).size() == 1);
  CHECK(set_partitions(1).size() == 1);
  CHECK(set_partitions(4).size() == 15);
  CHECK(set_partitions(8).size() == 4140);
}

TEST_CASE("partition sum matches the deformed power sums") {
  const auto x1 = X({2, 0});
  CHECK(newton_partition_sum(x1, 1, 1) == Rational(2) * mkq_direct(x1, 1, 1));
  const auto x2 = X({3, 1, 0});
  CHECK(newton_partition_sum(x2, R("-1/2"), 3) ==
        Rational(24) * mkq_direct(x2, R("-1/2"), 3));
  CHECK(newton_partition_sum(X({9, 4, 1, -3}), R("1/3"), 0) == Rational(4));
  CHECK_THROWS_AS(newton_partition_sum(x1, 0, 1), QZeroBranch);
  CHECK_THROWS_AS(newton_partition_sum(x1, 1, 8), TooLarge);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 10; ++t) {
    const Signature s = random_signature(rng, 1 + t % 6);
    const auto x = s.shifted();
    for (unsigned k = 0; k <= 5; ++k) {
      CHECK(newton_partition_sum(x, R("-1/2"), k) ==
            factorial(k + 1) * mkq_direct(x, R("-1/2"), k));
    }
  }
}

TEST_CASE("supersymmetric homogeneous identity") {
  CHECK(supersym_check(X({1, 0}), 1, 4));
  CHECK(supersym_check(X({1, 0}), R("2/3"), 0));
  CHECK(supersym_check(X({5, 2, 0}), R("1/3"), 6));
  CHECK(supersym_check(X({4, -1, -6, -7}), R("-5/4"), 7));
}
