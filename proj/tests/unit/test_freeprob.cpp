#include <doctest.h>

#include <random>

#include "../oracles/oracles.hpp"
#include "helpers.hpp"
#include "qpp/errors.hpp"
#include "qpp/freeprob.hpp"
#include "qpp/noncrossing.hpp"

using namespace qpp;
using qpp::test::R;

namespace {

MomentSeq random_moments(std::mt19937_64& rng, unsigned K) {
  std::vector<Rational> mu(K + 1);
  mu[0] = 1;
  for (unsigned k = 1; k <= K; ++k) mu[k] = qpp::test::random_rational(rng, 6, 5);
  return MomentSeq(std::move(mu));
}

CumulantSeq random_cumulants(std::mt19937_64& rng, unsigned K) {
  std::vector<Rational> c(K);
  for (auto& x : c) x = qpp::test::random_rational(rng, 6, 5);
  return CumulantSeq(std::move(c));
}

const std::vector<Rational> kQs = {0, 1, -1, R("1/2"), R("-1/2"), R("1/3"),
                                   R("-1/3")};

}  // namespace

TEST_CASE("non-crossing enumeration") {
  CHECK(nc_enumerate(1).size() == 1);
  CHECK(nc_enumerate(3).size() == 5);
  const auto four = nc_enumerate(4);
  CHECK(four.size() == 14);
  const NCPartition crossing{{1, 3}, {2, 4}};
  CHECK(std::find(four.begin(), four.end(), crossing) == four.end());
  CHECK_FALSE(is_noncrossing_partition(crossing, 4));
  for (unsigned k = 1; k <= 8; ++k) {
    const auto e = nc_enumerate(k);
    CHECK(Rational(static_cast<long>(e.size())) == oracle::catalan(k));
    auto f = oracle::nc_by_filter(k);
    for (auto& p : f) std::sort(p.begin(), p.end());
    std::sort(f.begin(), f.end());
    CHECK(e == f);
  }
  CHECK(nc_enumerate(12).size() == 208012);
  CHECK_THROWS_AS(nc_enumerate(13), TooLarge);
}

TEST_CASE("moment cumulant conversion examples") {
  std::vector<Rational> cat{1, 0, 1, 0, 2, 0, 5, 0, 14};
  CHECK(moments_to_cumulants(MomentSeq(cat)) ==
        CumulantSeq({0, 1, 0, 0, 0, 0, 0, 0}));

  const Rational c = R("-5/3");
  std::vector<Rational> point(7);
  for (unsigned k = 0; k < 7; ++k) point[k] = pow(c, k);
  CHECK(moments_to_cumulants(MomentSeq(point)) ==
        CumulantSeq({c, 0, 0, 0, 0, 0}));

  std::vector<Rational> uni(5);
  for (unsigned k = 0; k < 5; ++k) uni[k] = Rational(1, k + 1);
  CHECK(moments_to_cumulants(MomentSeq(uni)) ==
        CumulantSeq({R("1/2"), R("1/12"), 0, R("-1/720")}));
  CHECK_THROWS_AS(MomentSeq({2, 1}), InvalidSequence);
}

TEST_CASE("conversions agree with the non-crossing sum and invert") {
  std::mt19937_64 rng(101);
  for (int t = 0; t < 5; ++t) {
    const CumulantSeq c = random_cumulants(rng, 8);
    const MomentSeq m = cumulants_to_moments(c);
    for (unsigned k = 0; k <= 8; ++k) {
      CHECK(m[k] == oracle::nc_moment(c.kappa(), k));
    }
    CHECK(moments_to_cumulants(m) == c);
  }
  const MomentSeq m = random_moments(rng, 12);
  CHECK(cumulants_to_moments(moments_to_cumulants(m)) == m);
}

TEST_CASE("infinitesimal conversions") {
  const unsigned K = 6;
  InfCumulants zero{CumulantSeq({1, 2, 3, 4, 5, 6}), CumulantSeq::zeros(K)};
  const InfPair p0 = inf_moments_from_cumulants(zero);
  for (const auto& x : p0.corr) CHECK(x.is_zero());

  const Rational c = R("3/7");
  InfCumulants shift{CumulantSeq::zeros(K), CumulantSeq({c, 0, 0, 0, 0, 0})};
  const InfPair p1 = inf_moments_from_cumulants(shift);
  CHECK(p1.corr[1] == c);
  for (unsigned k = 2; k <= K; ++k) CHECK(p1.corr[k].is_zero());

  for (const auto& q : kQs) {
    std::vector<Rational> kp(K);
    kp[0] = (q - Rational(1)) / Rational(2);
    const InfPair p = inf_moments_from_cumulants(
        {beta_cumulants(q, K), CumulantSeq(kp)});
    const MomentSeq b = beta_moments(q, K);
    for (unsigned k = 1; k <= K; ++k) {
      CHECK(p.corr[k] == kp[0] * Rational(k) * b[k - 1]);
    }
  }

  std::mt19937_64 rng(5);
  for (int t = 0; t < 5; ++t) {
    const InfCumulants ic{random_cumulants(rng, K), random_cumulants(rng, K)};
    const InfPair p = inf_moments_from_cumulants(ic);
    for (unsigned k = 1; k <= K; ++k) {
      CHECK(p.corr[k] ==
            oracle::nc_inf_moment(ic.kappa.kappa(), ic.kappa_prime.kappa(), k));
    }
    CHECK(inf_cumulants_from_moments(p) == ic);
  }
}

TEST_CASE("deformed exponential") {
  CHECK(eq_series(1, 5) == Series({1, 1, 1, 1, 1, 1}, 5));
  CHECK(eq_series(0, 5) == exp(Series::identity(5)));
  CHECK(eq_series(R("1/2"), 2)[2] == R("3/4"));
  for (const auto& q : kQs) {
    const Series e = eq_series(q, 8);
    for (unsigned n = 0; n <= 8; ++n) {
      Rational prod(1);
      for (unsigned j = 1; j < n; ++j) prod *= Rational(j) * q + Rational(1);
      CHECK(e[n] == prod / factorial(n));
    }
  }
}

TEST_CASE("beta data") {
  const unsigned K = 10;
  for (unsigned k = 0; k <= K; ++k) {
    CHECK(beta_moments(0, K)[k] == Rational(1, k + 1));
    CHECK(beta_moments(-1, K)[k] == Rational(1));
    CHECK(beta_moments(1, K)[k] == Rational(k == 0 ? 1 : 0));
  }
  for (const auto& q : kQs) {
    const BetaData d = beta_data(q, K);
    CHECK(cumulants_to_moments(d.cumulants) == d.moments);
    CHECK(d.cumulants(1) == (Rational(1) - q) / Rational(2));
    CHECK(d.cumulants(2) == (Rational(1) - q * q) / Rational(12));
  }
  const auto B = oracle::bernoulli_plus(K);
  const CumulantSeq c0 = beta_cumulants(0, K);
  for (unsigned n = 1; n <= K; ++n) CHECK(c0(n) == B[n] / factorial(n));
}

TEST_CASE("quantized R-transform") {
  std::mt19937_64 rng(9);
  const CumulantSeq c = random_cumulants(rng, 7);
  CHECK(r_quant(c, 1) == r_transform(c));
  CHECK(r_quant(c, -1) == r_transform(c) - Series::constant(1, 6));
  for (const auto& q : kQs) {
    CHECK(r_quant(beta_cumulants(q, 7), q).is_zero());
  }
}

TEST_CASE("free convolution and otimes_q") {
  const unsigned K = 6;
  auto point = [&](const Rational& a) {
    std::vector<Rational> mu(K + 1);
    for (unsigned k = 0; k <= K; ++k) mu[k] = pow(a, k);
    return MomentSeq(mu);
  };
  CHECK(free_convolve(point(R("1/2")), point(R("-3"))) == point(R("-5/2")));

  const MomentSeq sc = cumulants_to_moments(CumulantSeq({0, 1, 0, 0, 0, 0}));
  const MomentSeq sc2 = free_convolve(sc, sc);
  CHECK(sc2[2] == Rational(2));
  CHECK(sc2[4] == Rational(8));
  CHECK(free_convolve(beta_moments(0, K), point(1))[1] == R("3/2"));
  CHECK_THROWS_AS(free_convolve(sc, point(1).truncated(3)), OrderMismatch);

  std::mt19937_64 rng(77);
  for (const auto& q : kQs) {
    const MomentSeq b = beta_moments(q, 10);
    CHECK(otimes_q(b, b, q) == b);
    const MomentSeq x = random_moments(rng, 10);
    const MomentSeq y = random_moments(rng, 10);
    CHECK(otimes_q(x, b, q) == x);
    CHECK(free_convolve(otimes_q(x, y, q), b) == free_convolve(x, y));
  }
  const MomentSeq x = random_moments(rng, K);
  const MomentSeq y = random_moments(rng, K);
  CHECK(otimes_q(x, y, 1) == free_convolve(x, y));
}

TEST_CASE("infinitesimal free convolution") {
  std::mt19937_64 rng(4);
  const unsigned K = 6;
  const InfCumulants a{random_cumulants(rng, K), random_cumulants(rng, K)};
  const InfCumulants b{random_cumulants(rng, K), random_cumulants(rng, K)};
  const InfCumulants zero{CumulantSeq::zeros(K), CumulantSeq::zeros(K)};
  CHECK(inf_free_convolve(a, zero) == a);

  const InfCumulants s = inf_free_convolve(a, b);
  const InfPair p = inf_moments_from_cumulants(s);
  for (unsigned k = 1; k <= K; ++k) {
    CHECK(p.corr[k] == oracle::nc_inf_moment(s.kappa.kappa(),
                                             s.kappa_prime.kappa(), k));
  }
}
