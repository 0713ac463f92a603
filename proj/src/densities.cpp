#include "qpp/densities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "qpp/errors.hpp"

namespace qpp {
namespace {

using std::numbers::pi;

void require_finite(std::initializer_list<double> values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw BadParams(std::string(what) + ": parameters must be finite");
    }
  }
}

void require_positive_gamma(double gamma, const char* what) {
  require_finite({gamma}, what);
  if (!(gamma > 0)) throw BadParams(std::string(what) + ": gamma must be > 0");
}

void require_q(double q, const char* what) {
  require_finite({q}, what);
  if (q < -1 || q > 1) {
    throw BadParams(std::string(what) + ": q must lie in [-1, 1]");
  }
}

// sin(pi q)/(pi q), equal to 1 at q = 0.
double sinc_pi(double q) {
  return q == 0 ? 1.0 : std::sin(pi * q) / (pi * q);
}

// sin(q theta)/q, equal to theta at q = 0.
double sin_ratio(double q, double theta) {
  return q == 0 ? theta : std::sin(q * theta) / q;
}

// Edges of the band [(1 - sqrt g)^2, (1 + sqrt g)^2].
std::pair<double, double> band(double gamma) {
  const double s = std::sqrt(gamma);
  return {(1 - s) * (1 - s), (1 + s) * (1 + s)};
}

// arccos((t + g - 1) / (2 sqrt(g t))) in [0, pi] using the band edge
// distances, so the value stays accurate near both edges.
double band_angle(double gamma, double t, double dl, double dr) {
  return std::atan2(std::sqrt(dl * dr), t + gamma - 1);
}

DensityModel base(DensityKind kind, std::string id) {
  DensityModel m;
  m.kind = kind;
  m.id = std::move(id);
  return m;
}

std::string fmt(double v) {
  std::string s = std::to_string(v);
  s.erase(s.find_last_not_of('0') + 1);
  if (!s.empty() && s.back() == '.') s.pop_back();
  return s;
}

}  // namespace

std::vector<DensityPiece> DensityModel::support() const {
  std::vector<DensityPiece> out;
  for (const auto& p : pieces) {
    if (!out.empty() && p.lo <= out.back().hi) {
      out.back().hi = std::max(out.back().hi, p.hi);
    } else {
      out.push_back(p);
    }
  }
  return out;
}

double DensityModel::piece_value(std::size_t i, double x, double dl,
                                 double dr) const {
  switch (kind) {
    case DensityKind::Uniform:
      return 1.0;
    case DensityKind::BetaQ: {
      const double q = params[0];
      return sinc_pi(q) * std::pow(dl, -q) * std::pow(dr, q);
    }
    case DensityKind::Semicircle:
      return std::sqrt(dl * dr) / (2 * pi * params[0]);
    case DensityKind::MarchenkoPastur:
      return std::sqrt(dl * dr) / (2 * pi * x);
    case DensityKind::Plancherel: {
      const double gamma = params[0];
      if (pieces.size() == 2 && i == 0) return 1.0;
      return band_angle(gamma, x, dl, dr) / pi;
    }
    case DensityKind::Interp: {
      const double gamma = params[0];
      const double q = params[1];
      const auto [a, b] = band(gamma);
      if (pieces.size() == 2 && i == 0) {
        // Plateau on (0, a): |1 - G_MP(t)| = (1 - g - t + sqrt((a-t)(b-t)))/(2t)
        const double mod =
            (1 - gamma - x + std::sqrt(dr * (dr + (b - a)))) / (2 * x);
        return sinc_pi(q) * std::pow(mod, q);
      }
      const double theta = band_angle(gamma, x, dl, dr);
      return std::pow(gamma / x, q / 2) * sin_ratio(q, theta) / pi;
    }
    case DensityKind::MkDense: {
      const double q = params[0];
      if (q == 0) return 1.0;
      double log_ratio = 0;
      for (std::size_t j = 0; j < alphas.size(); ++j) {
        const double da = j == i ? dl : std::abs(x - alphas[j]);
        const double db = j == i ? dr : std::abs(x - betas[j]);
        log_ratio += std::log(db) - std::log(da);
      }
      return sinc_pi(q) * std::exp(q * log_ratio);
    }
    case DensityKind::CorrSemicircle:
      return (x * x - 4 * x + 2) / (2 * pi * std::sqrt(dl * dr));
    case DensityKind::CorrSemicircleShifted:
      // x^2 + x - 2 = -(x + 2)(1 - x)
      return -(x + 2) * std::sqrt(dr) / (2 * pi * std::sqrt(dl));
    case DensityKind::CorrRankOne: {
      const double gamma = params[0];
      const double alpha = params[1];
      const double num = alpha * (x + gamma) - 2 * alpha * (alpha + 1);
      const double den =
          (alpha + 1) * (alpha + 1) + gamma - (alpha + 1) * (x + gamma);
      return num / den / (2 * pi * std::sqrt(dl * dr));
    }
  }
  return 0;
}

DensityModel make_beta_q(double q) {
  require_q(q, "beta_q");
  DensityModel m = base(DensityKind::BetaQ, "beta_q(" + fmt(q) + ")");
  m.params = {q};
  if (q == 1) {
    m.atoms = {{0.0, 1.0}};
  } else if (q == -1) {
    m.atoms = {{1.0, 1.0}};
  } else {
    m.pieces = {{0.0, 1.0}};
  }
  return m;
}

DensityModel make_uniform() {
  DensityModel m = base(DensityKind::Uniform, "uniform");
  m.pieces = {{0.0, 1.0}};
  return m;
}

DensityModel make_semicircle(double gamma, double centre) {
  require_positive_gamma(gamma, "semicircle");
  require_finite({centre}, "semicircle");
  DensityModel m = base(DensityKind::Semicircle,
                        "semicircle(" + fmt(gamma) + "," + fmt(centre) + ")");
  m.params = {gamma, centre};
  const double r = 2 * std::sqrt(gamma);
  m.pieces = {{centre - r, centre + r}};
  return m;
}

DensityModel make_marchenko_pastur(double gamma) {
  require_positive_gamma(gamma, "marchenko_pastur");
  DensityModel m =
      base(DensityKind::MarchenkoPastur, "marchenko_pastur(" + fmt(gamma) + ")");
  m.params = {gamma};
  const auto [a, b] = band(gamma);
  m.pieces = {{a, b}};
  if (gamma < 1) m.atoms = {{0.0, 1 - gamma}};
  return m;
}

DensityModel make_plancherel(double gamma) {
  require_positive_gamma(gamma, "plancherel");
  DensityModel m = base(DensityKind::Plancherel, "plancherel(" + fmt(gamma) + ")");
  m.params = {gamma};
  const auto [a, b] = band(gamma);
  if (gamma < 1) m.pieces.push_back({0.0, a});
  m.pieces.push_back({a, b});
  return m;
}

DensityModel make_interp(double gamma, double q) {
  require_positive_gamma(gamma, "interp");
  require_q(q, "interp");
  DensityModel m =
      base(DensityKind::Interp, "interp(" + fmt(gamma) + "," + fmt(q) + ")");
  m.params = {gamma, q};
  const auto [a, b] = band(gamma);
  // The plateau carries sin(pi q)/(pi q), which vanishes at q = +-1; at
  // q = 1 its mass reappears as an atom at the origin.
  if (gamma < 1 && std::abs(q) < 1) m.pieces.push_back({0.0, a});
  m.pieces.push_back({a, b});
  if (gamma < 1 && q == 1) m.atoms = {{0.0, 1 - gamma}};
  return m;
}

DensityModel make_mk_dense(std::vector<double> alphas, std::vector<double> betas,
                           double q) {
  require_finite({q}, "mk_dense");
  for (double v : alphas) require_finite({v}, "mk_dense");
  for (double v : betas) require_finite({v}, "mk_dense");
  if (alphas.empty() || alphas.size() != betas.size()) {
    throw BadParams("mk_dense: need equally many (at least one) left and "
                    "right ends");
  }
  double length = 0;
  for (std::size_t i = 0; i < alphas.size(); ++i) {
    if (!(alphas[i] < betas[i]) ||
        (i > 0 && !(betas[i - 1] < alphas[i]))) {
      throw BadParams("mk_dense: ends must satisfy a1 < b1 < a2 < ...");
    }
    length += betas[i] - alphas[i];
  }
  if (std::abs(length - 1) > 1e-12) {
    throw BadParams("mk_dense: interval lengths must sum to 1");
  }
  if (!(q > -1 && q < 1)) {
    throw OutOfDomain("mk_dense: q must lie in (-1, 1)");
  }
  DensityModel m = base(DensityKind::MkDense, "mk_dense(" + fmt(q) + ")");
  m.params = {q};
  m.alphas = std::move(alphas);
  m.betas = std::move(betas);
  for (std::size_t i = 0; i < m.alphas.size(); ++i) {
    m.pieces.push_back({m.alphas[i], m.betas[i]});
  }
  return m;
}

DensityModel make_corr_semicircle() {
  DensityModel m = base(DensityKind::CorrSemicircle, "corr_semicircle");
  m.pieces = {{0.0, 4.0}};
  m.is_correction = true;
  return m;
}

DensityModel make_corr_semicircle_shifted() {
  DensityModel m =
      base(DensityKind::CorrSemicircleShifted, "corr_semicircle_shifted");
  m.pieces = {{-3.0, 1.0}};
  m.is_correction = true;
  return m;
}

DensityModel make_corr_rank_one(double gamma, double alpha) {
  require_positive_gamma(gamma, "corr_rank_one");
  require_finite({alpha}, "corr_rank_one");
  if (!(alpha > -1)) throw BadParams("corr_rank_one: alpha must be > -1");
  const double s = std::sqrt(gamma);
  if (alpha + 1 == s) {
    throw BadParams("corr_rank_one: alpha + 1 = sqrt(gamma) puts the pole on "
                    "the support edge");
  }
  DensityModel m = base(DensityKind::CorrRankOne,
                        "corr_rank_one(" + fmt(gamma) + "," + fmt(alpha) + ")");
  m.params = {gamma, alpha};
  m.pieces = {{-2 * s - gamma, 2 * s - gamma}};
  if (alpha + 1 >= s) {
    m.atoms = {{gamma / (alpha + 1) - gamma + alpha + 1, alpha / (alpha + 1)}};
  }
  m.is_correction = true;
  return m;
}

double eval_density(const DensityModel& m, double t) {
  if (std::isnan(t)) throw BadParams("eval_density: t is NaN");
  for (std::size_t i = 0; i < m.pieces.size(); ++i) {
    const auto& p = m.pieces[i];
    if (t > p.lo && t < p.hi) return m.piece_value(i, t, t - p.lo, p.hi - t);
  }
  // On a boundary shared by two pieces, use the right-hand piece.
  for (std::size_t i = 0; i < m.pieces.size(); ++i) {
    const auto& p = m.pieces[i];
    if (t == p.lo && i > 0 && m.pieces[i - 1].hi == t) {
      return m.piece_value(i, t, 0.0, p.hi - t);
    }
  }
  return 0.0;
}

double quadrature_moment(const DensityModel& m, unsigned k,
                         const QuadratureOptions& opt) {
  if (k > 12) throw TooLarge("quadrature moments are limited to k <= 12");
  double total = 0;
  for (std::size_t i = 0; i < m.pieces.size(); ++i) {
    const auto& p = m.pieces[i];
    total += integrate_de(
                 [&](double x, double dl, double dr) {
                   return std::pow(x, static_cast<int>(k)) *
                          m.piece_value(i, x, dl, dr);
                 },
                 p.lo, p.hi, opt)
                 .value;
  }
  for (const auto& a : m.atoms) {
    total += a.w * std::pow(a.pos, static_cast<int>(k));
  }
  return total;
}

double total_mass(const DensityModel& m, const QuadratureOptions& opt) {
  return quadrature_moment(m, 0, opt);
}

StieltjesValue stieltjes_numeric(const DensityModel& m, std::complex<double> z,
                                 const QuadratureOptions& opt) {
  auto distance_to = [&](double lo, double hi) {
    const double re = std::clamp(z.real(), lo, hi);
    return std::abs(z - std::complex<double>(re, 0));
  };
  for (const auto& p : m.pieces) {
    if (distance_to(p.lo, p.hi) < 0.1) {
      throw TooCloseToSupport("z is within 0.1 of the support");
    }
  }
  for (const auto& a : m.atoms) {
    if (distance_to(a.pos, a.pos) < 0.1) {
      throw TooCloseToSupport("z is within 0.1 of an atom");
    }
  }

  StieltjesValue out;
  for (std::size_t i = 0; i < m.pieces.size(); ++i) {
    const auto& p = m.pieces[i];
    auto part = [&](bool imag) {
      return integrate_de(
                 [&](double x, double dl, double dr) {
                   const std::complex<double> k = 1.0 / (z - x);
                   return (imag ? k.imag() : k.real()) *
                          m.piece_value(i, x, dl, dr);
                 },
                 p.lo, p.hi, opt)
          .value;
    };
    out.quadrature += std::complex<double>(part(false), part(true));
  }
  for (const auto& a : m.atoms) out.quadrature += a.w / (z - a.pos);

  // sum_i log(z - beta_i) - log(z - alpha_i) with principal logs is the
  // continuation from large real z of log prod (z - beta)/(z - alpha).
  auto log_ratio = [&](const std::vector<double>& al,
                       const std::vector<double>& be) {
    std::complex<double> s;
    for (std::size_t i = 0; i < al.size(); ++i) {
      s += std::log(z - be[i]) - std::log(z - al[i]);
    }
    return s;
  };
  auto mk_closed = [&](const std::vector<double>& al,
                       const std::vector<double>& be, double q) {
    const std::complex<double> L = log_ratio(al, be);
    if (q == 0) return -L;
    return (1.0 - std::exp(q * L)) / q;
  };
  switch (m.kind) {
    case DensityKind::MkDense:
      out.closed_form = mk_closed(m.alphas, m.betas, m.params[0]);
      break;
    case DensityKind::Uniform:
      out.closed_form = mk_closed({0.0}, {1.0}, 0.0);
      break;
    case DensityKind::BetaQ: {
      const double q = m.params[0];
      if (q == 1) {
        out.closed_form = 1.0 / z;
      } else if (q == -1) {
        out.closed_form = 1.0 / (z - 1.0);
      } else {
        out.closed_form = mk_closed({0.0}, {1.0}, q);
      }
      break;
    }
    default:
      break;
  }
  return out;
}

PRelationReport verify_p_relation(const DensityModel& nu, double tol,
                                  const QuadratureOptions& opt) {
  if (nu.kind != DensityKind::MkDense) {
    throw BadParams("verify_p_relation needs an mk_dense model");
  }
  const double q = nu.params[0];
  if (q == 0) throw OutOfDomain("verify_p_relation needs q != 0");

  PRelationReport report;
  const double right = nu.betas.back();
  for (double d : {0.5, 1.0, 2.0, 4.0, 8.0}) {
    const double z = right + d;
    report.points.push_back(z);
    const double g_nu = stieltjes_numeric(nu, z, opt).quadrature.real();
    const double base = 1 - q * g_nu;
    if (!(base > 0)) {
      throw BranchAmbiguity("1 - q G(z) is not positive at z = " +
                            std::to_string(z));
    }
    // 1 - G_mu(z) = prod (z - beta_i)/(z - alpha_i), positive right of the
    // support.
    double lhs = 1;
    for (std::size_t i = 0; i < nu.alphas.size(); ++i) {
      lhs *= (z - nu.betas[i]) / (z - nu.alphas[i]);
    }
    const double rhs = std::pow(base, 1 / q);
    report.max_abs_error = std::max(report.max_abs_error, std::abs(lhs - rhs));
  }
  report.ok = report.max_abs_error <= tol;
  return report;
}

}  // namespace qpp
