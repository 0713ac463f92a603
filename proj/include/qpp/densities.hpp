#ifndef QPP_DENSITIES_HPP_
#define QPP_DENSITIES_HPP_

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "qpp/quadrature.hpp"

namespace qpp {

enum class DensityKind {
  BetaQ,
  Uniform,
  Semicircle,
  MarchenkoPastur,
  Plancherel,
  Interp,
  MkDense,
  CorrSemicircle,
  CorrSemicircleShifted,
  CorrRankOne,
};

/// Sub-interval on which the density is given by a single analytic
/// expression. Quadrature runs piece by piece so that every singularity
/// sits at an endpoint.
struct DensityPiece {
  double lo;
  double hi;
};

struct DensityAtom {
  double pos;
  double w;
};

/// Closed-form density with explicit atoms. Construct with the make_*
/// functions, which validate parameters (BadParams).
struct DensityModel {
  DensityKind kind;
  std::string id;
  std::vector<DensityPiece> pieces;
  std::vector<DensityAtom> atoms;
  /// Kind-specific scalars: gamma, q, centre, alpha as applicable.
  std::vector<double> params;
  std::vector<double> alphas;  // mk_dense interval left ends
  std::vector<double> betas;   // mk_dense interval right ends
  /// Correction densities have total mass 0 rather than 1.
  bool is_correction = false;

  /// Union of the pieces as disjoint ordered closed intervals.
  std::vector<DensityPiece> support() const;
  /// Density on piece i at x, given the distances to its ends.
  double piece_value(std::size_t i, double x, double dl, double dr) const;
};

/// sin(pi q)/(pi q) x^{-q} (1-x)^q on (0,1); q = 1 and q = -1 give the
/// point masses at 0 and 1, q = 0 the uniform law.
DensityModel make_beta_q(double q);
DensityModel make_uniform();
/// Semicircle of variance gamma centred at c.
DensityModel make_semicircle(double gamma, double centre);
/// Free Poisson law of rate gamma, with the atom 1 - gamma at 0 if gamma < 1.
DensityModel make_marchenko_pastur(double gamma);
/// One-sided Plancherel law: arccos band, plus the plateau 1 on
/// [0, (1 - sqrt g)^2] when gamma < 1.
DensityModel make_plancherel(double gamma);
/// Limit density of the q-deformed measures of the Poisson preset,
/// -1 <= q <= 1. At q = 1 this is Marchenko-Pastur (with its atom) and at
/// q = -1 the semicircle of variance gamma centred at 1 + gamma.
DensityModel make_interp(double gamma, double q);
/// sin(pi q)/(pi q) prod_i |x - alpha_i|^{-q} |x - beta_i|^q on the union of
/// [alpha_i, beta_i]; requires interleaved ends and total length 1
/// (BadParams) and -1 < q < 1 (OutOfDomain).
DensityModel make_mk_dense(std::vector<double> alphas, std::vector<double> betas,
                           double q);
/// (1/2pi)(x^2 - 4x + 2)/sqrt((4-x)x) on (0, 4).
DensityModel make_corr_semicircle();
/// (1/2pi)(x^2 + x - 2)/sqrt((1-x)(3+x)) on (-3, 1).
DensityModel make_corr_semicircle_shifted();
/// Rank-one correction density on (-2 sqrt g - g, 2 sqrt g - g), with the
/// outlier atom alpha/(alpha+1) at g/(alpha+1) - g + alpha + 1 when
/// alpha + 1 >= sqrt g.
DensityModel make_corr_rank_one(double gamma, double alpha);

/// Pointwise density; 0 outside the support.
double eval_density(const DensityModel& m, double t);

/// Integral of t^k against the model, atoms included. Requires k <= 12.
double quadrature_moment(const DensityModel& m, unsigned k,
                         const QuadratureOptions& opt = {});
double total_mass(const DensityModel& m, const QuadratureOptions& opt = {});

struct StieltjesValue {
  std::complex<double> quadrature;
  /// Present for models with a closed-form transform (mk_dense, beta_q,
  /// uniform).
  std::optional<std::complex<double>> closed_form;
};

/// G(z) = integral of dm(t)/(z - t). Throws TooCloseToSupport when z is
/// within 0.1 of the support or of an atom.
StieltjesValue stieltjes_numeric(const DensityModel& m, std::complex<double> z,
                                 const QuadratureOptions& opt = {});

struct PRelationReport {
  bool ok = false;
  double max_abs_error = 0;
  std::vector<double> points;
};

/// For an mk_dense model nu built from intervals [alpha_i, beta_i], checks
///   1 - G_mu(z) = (1 - q G_nu(z))^{1/q}
/// at five real points right of the support, where G_nu is computed by
/// quadrature and mu is the measure with G_mu = 1 - prod (z-beta)/(z-alpha).
/// q is the model's own parameter and must be non-zero (OutOfDomain); a
/// non-positive base raises BranchAmbiguity.
PRelationReport verify_p_relation(const DensityModel& nu, double tol = 1e-8,
                                  const QuadratureOptions& opt = {});

}  // namespace qpp

#endif  // QPP_DENSITIES_HPP_
