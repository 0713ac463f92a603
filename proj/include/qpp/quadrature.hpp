#ifndef QPP_QUADRATURE_HPP_
#define QPP_QUADRATURE_HPP_

#include <functional>

namespace qpp {

/// Integrand on [a, b] that also receives the distances dl = x - a and
/// dr = b - x. Near an endpoint these are far more accurate than what can
/// be recovered from x, which matters for algebraic endpoint singularities.
using EdgeIntegrand = std::function<double(double x, double dl, double dr)>;

struct QuadratureOptions {
  double abs_tol = 1e-10;
  /// The target is max(abs_tol, rel_floor * integral of |f|): binary64
  /// cannot resolve large integrals to an absolute 1e-10.
  double rel_floor = 1e-14;
  unsigned max_level = 14;
  double t_max = 6.0;
};

struct QuadratureResult {
  double value = 0;
  double error_estimate = 0;
  double l1 = 0;
  unsigned level = 0;
};

/// Double-exponential (tanh-sinh) rule. Throws QuadratureFailure when the
/// difference between successive levels is still above the target after
/// max_level halvings, or when the integrand returns a non-finite value.
QuadratureResult integrate_de(const EdgeIntegrand& f, double a, double b,
                              const QuadratureOptions& opt = {});

}  // namespace qpp

#endif  // QPP_QUADRATURE_HPP_
