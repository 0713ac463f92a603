#include "qpp/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qpp/errors.hpp"

namespace qpp {
namespace {

struct NodeSum {
  double sum = 0;
  double abs_sum = 0;
};

// Adds the contribution of the node at parameter t (both x and its mirror
// are handled by the caller). Returns false on a non-finite integrand.
bool add_node(const EdgeIntegrand& f, double c, double h, double t,
              NodeSum& acc) {
  using std::numbers::pi;
  const double s = 0.5 * pi * std::sinh(t);
  const double ch = std::cosh(s);
  const double w = h * 0.5 * pi * std::cosh(t) / (ch * ch);
  if (w == 0 || !std::isfinite(w)) return true;
  // 1 + tanh(s) = 2 / (1 + e^{-2s}),  1 - tanh(s) = 2 / (1 + e^{2s})
  const double dl = 2 * h / (1 + std::exp(-2 * s));
  const double dr = 2 * h / (1 + std::exp(2 * s));
  if (dl == 0 || dr == 0) return true;
  const double x = dl <= dr ? (c - h) + dl : (c + h) - dr;
  const double v = f(x, dl, dr);
  if (!std::isfinite(v)) return false;
  acc.sum += w * v;
  acc.abs_sum += w * std::abs(v);
  return true;
}

}  // namespace

QuadratureResult integrate_de(const EdgeIntegrand& f, double a, double b,
                              const QuadratureOptions& opt) {
  QuadratureResult r;
  if (!(b > a)) return r;
  const double c = 0.5 * (a + b);
  const double h = 0.5 * (b - a);

  NodeSum acc;
  auto fail = [&](double err) {
    throw QuadratureFailure("non-finite integrand on [" + std::to_string(a) +
                                ", " + std::to_string(b) + "]",
                            err);
  };
  // Level 0: integer nodes.
  if (!add_node(f, c, h, 0.0, acc)) fail(INFINITY);
  for (double t = 1; t <= opt.t_max; t += 1) {
    if (!add_node(f, c, h, t, acc) || !add_node(f, c, h, -t, acc)) {
      fail(INFINITY);
    }
  }
  double step = 1;
  double prev = step * acc.sum;
  double err = INFINITY;
  for (unsigned level = 1; level <= opt.max_level; ++level) {
    step *= 0.5;
    for (double t = step; t <= opt.t_max; t += 2 * step) {
      if (!add_node(f, c, h, t, acc) || !add_node(f, c, h, -t, acc)) {
        fail(err);
      }
    }
    const double cur = step * acc.sum;
    err = std::abs(cur - prev);
    prev = cur;
    const double target =
        std::max(opt.abs_tol, opt.rel_floor * step * acc.abs_sum);
    if (level >= 3 && err <= target) {
      r.value = cur;
      r.error_estimate = err;
      r.l1 = step * acc.abs_sum;
      r.level = level;
      return r;
    }
  }
  throw QuadratureFailure("tanh-sinh did not converge on [" +
                              std::to_string(a) + ", " + std::to_string(b) +
                              "]",
                          err);
}

}  // namespace qpp
