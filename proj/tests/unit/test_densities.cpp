#include <doctest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "qpp/densities.hpp"
#include "qpp/errors.hpp"
#include "qpp/limits.hpp"

using namespace qpp;
using qpp::test::R;
using std::numbers::pi;

namespace {

double series_moment(const Rational& gamma, const Rational& q, unsigned k) {
  return limit_moment(char_preset("poisson", {gamma}, k).first, q, k)
      .to_double();
}

}  // namespace

TEST_CASE("pointwise values") {
  CHECK(eval_density(make_corr_semicircle(), 2.0) ==
        doctest::Approx(-1 / (2 * pi)).epsilon(1e-15));
  CHECK(eval_density(make_uniform(), 0.3) == 1.0);
  CHECK(eval_density(make_uniform(), 1.3) == 0.0);
  // mk_dense on (0,1) is the beta_q density and tends to 1 as q -> 0.
  const double x = 0.3;
  const DensityModel mk = make_mk_dense({0.0}, {1.0}, 0.25);
  CHECK(eval_density(mk, x) ==
        doctest::Approx(eval_density(make_beta_q(0.25), x)).epsilon(1e-14));
  CHECK(eval_density(make_mk_dense({0.0}, {1.0}, 1e-9), x) ==
        doctest::Approx(1.0).epsilon(1e-8));
  // Plancherel is the q -> 0 limit of interp.
  for (double gamma : {0.25, 4.0}) {
    for (double t : {0.05, 0.4, 1.1, 3.0, 7.5}) {
      CHECK(std::abs(eval_density(make_interp(gamma, 1e-10), t) -
                     eval_density(make_plancherel(gamma), t)) < 1e-9);
    }
  }
  CHECK_THROWS_AS(make_interp(NAN, 0.5), BadParams);
  CHECK_THROWS_AS(eval_density(make_uniform(), NAN), BadParams);
}

TEST_CASE("simple quadratures") {
  CHECK(std::abs(quadrature_moment(make_uniform(), 3) - 0.25) < 1e-10);
  for (double q : {-0.5, -1.0 / 3, 0.0, 0.5, 0.9}) {
    double expected = 1;
    for (unsigned k = 0; k <= 6; ++k) {
      if (k > 0) expected *= (k - q) / (k + 1);
      CHECK(std::abs(quadrature_moment(make_beta_q(q), k) - expected) < 1e-9);
    }
  }
  CHECK_THROWS_AS(quadrature_moment(make_uniform(), 13), TooLarge);
}

TEST_CASE("probability models have mass one") {
  const DensityModel models[] = {
      make_uniform(),          make_beta_q(0.5),
      make_beta_q(-1),         make_semicircle(2.0, -1.0),
      make_marchenko_pastur(0.25), make_marchenko_pastur(4.0),
      make_plancherel(0.25),   make_plancherel(4.0),
      make_interp(0.25, 0.5),  make_interp(0.25, -0.5),
      make_interp(0.25, 1),    make_interp(0.25, -1),
      make_interp(4.0, 0.5),   make_interp(4.0, -1),
      make_interp(1.0, 0.5),
      make_mk_dense({0.0, 0.75}, {0.5, 1.25}, 1.0 / 3),
  };
  for (const auto& m : models) {
    INFO(m.id);
    CHECK(std::abs(total_mass(m) - 1) < 1e-10);
  }
}

TEST_CASE("interp densities reproduce the exact limit moments") {
  for (const auto& g : {R("1/4"), R("4")}) {
    for (const auto& q : {R("-1/2"), Rational(0), R("1/2"), Rational(1),
                          Rational(-1)}) {
      const DensityModel m = make_interp(g.to_double(), q.to_double());
      for (unsigned k = 0; k <= 6; ++k) {
        INFO(m.id << " k=" << k);
        CHECK(std::abs(quadrature_moment(m, k) - series_moment(g, q, k)) <
              1e-8);
      }
    }
  }
}

TEST_CASE("endpoint cases match Marchenko-Pastur and the semicircle") {
  for (double g : {0.25, 4.0}) {
    const DensityModel up = make_interp(g, 1);
    const DensityModel mp = make_marchenko_pastur(g);
    const DensityModel down = make_interp(g, -1);
    const DensityModel sc = make_semicircle(g, 1 + g);
    for (unsigned k = 0; k <= 6; ++k) {
      CHECK(std::abs(quadrature_moment(up, k) - quadrature_moment(mp, k)) <
            1e-7);
      CHECK(std::abs(quadrature_moment(down, k) - quadrature_moment(sc, k)) <
            1e-7);
    }
    const auto [a, b] = std::pair{(1 - std::sqrt(g)) * (1 - std::sqrt(g)),
                                  (1 + std::sqrt(g)) * (1 + std::sqrt(g))};
    for (int i = 1; i < 10; ++i) {
      const double t = a + (b - a) * i / 10.0;
      CHECK(std::abs(eval_density(make_interp(g, 1 - 1e-9), t) -
                     eval_density(mp, t)) < 1e-7);
      CHECK(std::abs(eval_density(make_interp(g, -1 + 1e-9), t) -
                     eval_density(sc, t)) < 1e-7);
    }
  }
}

TEST_CASE("plateau and band meet continuously") {
  const double g = 0.25;
  for (double q : {-0.75, -0.5, 0.0, 0.5, 0.75}) {
    const DensityModel m = make_interp(g, q);
    const double a = m.pieces[0].hi;
    const double left = eval_density(m, a * (1 - 1e-12));
    const double right = eval_density(m, a * (1 + 1e-12));
    CHECK(std::abs(left - right) < 1e-5);
    // The two middle branches of the band meet at t = 1 - g.
    const double t = 1 - g;
    CHECK(std::abs(eval_density(m, t * (1 - 1e-12)) -
                   eval_density(m, t * (1 + 1e-12))) < 1e-9);
  }
}

TEST_CASE("correction densities") {
  const auto full = [](const std::string& preset,
                       const std::vector<Rational>& params, const Rational& q,
                       unsigned k) {
    const auto [psi, phi] = char_preset(preset, params, k);
    return inf_correction_moment(psi, phi, q, k).to_double();
  };
  const DensityModel cs = make_corr_semicircle();
  const DensityModel css = make_corr_semicircle_shifted();
  CHECK(std::abs(total_mass(cs)) < 1e-10);
  CHECK(std::abs(total_mass(css)) < 1e-10);
  for (unsigned k = 1; k <= 5; ++k) {
    CHECK(std::abs(quadrature_moment(cs, k) -
                   full("poisson_with_corr", {1}, -1, k)) < 1e-7);
    CHECK(std::abs(quadrature_moment(css, k) -
                   full("inv_poisson_with_corr", {1}, 1, k)) < 1e-7);
  }
  for (const auto& [g, a] : std::vector<std::pair<Rational, Rational>>{
           {1, 1}, {R("1/4"), R("1/2")}, {4, 2}, {4, R("1/2")}}) {
    const DensityModel m = make_corr_rank_one(g.to_double(), a.to_double());
    INFO(m.id);
    CHECK(std::abs(total_mass(m)) < 1e-10);
    for (unsigned k = 1; k <= 5; ++k) {
      CHECK(std::abs(quadrature_moment(m, k) - full("rank_one", {g, a}, 1, k)) <
            1e-7);
    }
  }
}

TEST_CASE("Stieltjes transforms") {
  const auto delta = stieltjes_numeric(make_beta_q(-1), {3.0, 0.0});
  CHECK(std::abs(delta.quadrature - 0.5) < 1e-15);
  const auto u = stieltjes_numeric(make_uniform(), {2.0, 0.0});
  CHECK(std::abs(u.quadrature - std::log(2.0)) < 1e-10);
  REQUIRE(u.closed_form);
  CHECK(std::abs(*u.closed_form - std::log(2.0)) < 1e-14);

  const DensityModel mk = make_mk_dense({0.0}, {1.0}, 0.5);
  const auto s = stieltjes_numeric(mk, {2.0, 0.0});
  CHECK(std::abs(s.quadrature - (2.0 - 2.0 * std::sqrt(0.5))) < 1e-8);
  const DensityModel two = make_mk_dense({0.0, 0.75}, {0.5, 1.25}, -0.4);
  for (std::complex<double> z : {std::complex<double>(0.6, 0.3),
                                 std::complex<double>(-1, -2),
                                 std::complex<double>(3, 0)}) {
    const auto v = stieltjes_numeric(two, z);
    CHECK(std::abs(v.quadrature - *v.closed_form) < 1e-8);
  }
  CHECK_THROWS_AS(stieltjes_numeric(make_uniform(), {0.5, 0.05}),
                  TooCloseToSupport);
}

TEST_CASE("P-map relation on dense models") {
  CHECK(verify_p_relation(make_mk_dense({0.0}, {1.0}, 0.5)).ok);
  CHECK(verify_p_relation(make_mk_dense({0.0, 0.75}, {0.5, 1.25}, 1.0 / 3)).ok);
  CHECK(verify_p_relation(make_mk_dense({-2.0, 0.0, 1.0}, {-1.8, 0.5, 1.3},
                                        -0.5))
            .ok);
  CHECK_THROWS_AS(make_mk_dense({0.0}, {1.0}, 1.0), OutOfDomain);
  CHECK_THROWS_AS(verify_p_relation(make_mk_dense({0.0}, {1.0}, 0.0)),
                  OutOfDomain);
  CHECK_THROWS_AS(make_mk_dense({0.0}, {2.0}, 0.5), BadParams);
}
