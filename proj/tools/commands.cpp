#include "commands.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <functional>
#include <future>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "acceptance.hpp"
#include "qpp/densities.hpp"
#include "qpp/errors.hpp"
#include "qpp/freeprob.hpp"
#include "qpp/limits.hpp"
#include "qpp/signatures.hpp"

namespace qpp::cli {
namespace {

constexpr unsigned kMaxExactOrder = 16;
constexpr double kMassTol = 1e-10;

const Json& need(const Json& cfg, const char* key) {
  if (!cfg.is_object() || !cfg.contains(key)) {
    throw ParseError(std::string("config is missing '") + key + "'");
  }
  return cfg.at(key);
}

unsigned exact_order(const Json& cfg, unsigned fallback) {
  const unsigned K = cfg.contains("order") ? cfg.at("order").get<unsigned>()
                                           : fallback;
  if (K > kMaxExactOrder) {
    throw TooLarge("order " + std::to_string(K) + " exceeds " +
                   std::to_string(kMaxExactOrder));
  }
  return K;
}

Rational rational_or(const Json& cfg, const char* key, const Rational& dflt) {
  return cfg.contains(key) ? rational_from_json(cfg.at(key)) : dflt;
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string num(const Rational& r) { return format_double(r.to_double()); }

std::string csv_column(const std::vector<Rational>& v, const char* name) {
  std::ostringstream os;
  os << "k," << name << "\n";
  for (std::size_t k = 0; k < v.size(); ++k) os << k << ',' << num(v[k]) << '\n';
  return os.str();
}

// Moments of the atoms (x_i / N + c - 1) from the sums m_j = sum w_i x_i^j.
std::vector<Rational> moments_from_power_sums(const std::vector<Rational>& m,
                                              const Rational& N,
                                              const Rational& offset,
                                              unsigned K) {
  const Rational shift = offset - Rational(1);
  std::vector<Rational> out(K + 1);
  for (unsigned k = 0; k <= K; ++k) {
    for (unsigned j = 0; j <= k; ++j) {
      out[k] += binomial(k, j) * pow(shift, static_cast<long>(k - j)) * m[j] /
                pow(N, static_cast<long>(j + 1));
    }
  }
  return out;
}

std::pair<PsiSpec, std::optional<PhiSpec>> read_profiles(const Json& cfg,
                                                         unsigned K) {
  if (cfg.contains("preset")) {
    const Json& p = cfg.at("preset");
    const std::string name = need(p, "name").get<std::string>();
    const std::vector<Rational> params =
        p.contains("params") ? rationals_from_json(p.at("params"))
                             : std::vector<Rational>{};
    auto [psi, phi] = char_preset(name, params, K);
    return {psi, phi};
  }
  PsiSpec psi = psi_from_json(need(cfg, "psi"));
  std::optional<PhiSpec> phi;
  if (cfg.contains("phi")) phi = phi_from_json(cfg.at("phi"));
  return {psi, phi};
}

Regime read_regime(const Json& cfg) {
  const std::string r = cfg.value("regime", std::string("full"));
  if (r == "full") return Regime::Full;
  if (r == "leading") return Regime::Leading;
  throw BadParams("regime must be 'full' or 'leading', got '" + r + "'");
}

// A density parameter, exact when given as a rational string or integer.
struct Param {
  double value = 0;
  std::optional<Rational> exact;
};

Param read_param(const Json& model, const char* key) {
  const Json& j = need(model, key);
  if (j.is_number_float()) return {j.get<double>(), std::nullopt};
  const Rational r = rational_from_json(j);
  return {r.to_double(), r};
}

std::vector<double> read_doubles(const Json& model, const char* key) {
  std::vector<double> out;
  for (const auto& e : need(model, key)) {
    out.push_back(e.is_number_float() ? e.get<double>()
                                      : rational_from_json(e).to_double());
  }
  return out;
}

struct ModelWithSeries {
  DensityModel model;
  // Exact moments k = 0..K when the model has a known moment series.
  std::function<Rational(unsigned)> series;
};

ModelWithSeries read_model(const Json& spec, unsigned K) {
  const std::string kind = need(spec, "kind").get<std::string>();
  const auto poisson_like = [K](const char* preset,
                                std::vector<Rational> params,
                                const Rational& q, const Rational& shift) {
    const PsiSpec psi = char_preset(preset, params, K).first;
    const MomentSeq mu = shift_moments(limit_moments(psi, q, K), shift);
    return [mu](unsigned k) { return mu[k]; };
  };
  const auto correction = [K](const char* preset, std::vector<Rational> params,
                              const Rational& q) {
    const auto [psi, phi] = char_preset(preset, params, K);
    const InfPair p = limit_inf_pair(psi, phi, q, K);
    return [corr = p.corr](unsigned k) { return corr[k]; };
  };
  ModelWithSeries out{make_uniform(), nullptr};
  if (kind == "uniform") {
    out.model = make_uniform();
    const MomentSeq b = beta_moments(0, K);
    out.series = [b](unsigned k) { return b[k]; };
  } else if (kind == "beta_q") {
    const Param q = read_param(spec, "q");
    out.model = make_beta_q(q.value);
    if (q.exact) {
      const MomentSeq b = beta_moments(*q.exact, K);
      out.series = [b](unsigned k) { return b[k]; };
    }
  } else if (kind == "semicircle") {
    const Param g = read_param(spec, "gamma");
    const Param c = read_param(spec, "centre");
    out.model = make_semicircle(g.value, c.value);
    if (g.exact && c.exact && *g.exact > Rational(0)) {
      out.series = poisson_like("inv_poisson", {*g.exact}, 1, *g.exact + *c.exact);
    }
  } else if (kind == "marchenko_pastur") {
    const Param g = read_param(spec, "gamma");
    out.model = make_marchenko_pastur(g.value);
    if (g.exact) out.series = poisson_like("poisson", {*g.exact}, 1, 0);
  } else if (kind == "plancherel") {
    const Param g = read_param(spec, "gamma");
    out.model = make_plancherel(g.value);
    if (g.exact) out.series = poisson_like("poisson", {*g.exact}, 0, 0);
  } else if (kind == "interp") {
    const Param g = read_param(spec, "gamma");
    const Param q = read_param(spec, "q");
    out.model = make_interp(g.value, q.value);
    if (g.exact && q.exact) {
      out.series = poisson_like("poisson", {*g.exact}, *q.exact, 0);
    }
  } else if (kind == "mk_dense") {
    out.model = make_mk_dense(read_doubles(spec, "alphas"),
                              read_doubles(spec, "betas"),
                              read_param(spec, "q").value);
  } else if (kind == "corr_semicircle") {
    out.model = make_corr_semicircle();
    out.series = correction("poisson_with_corr", {1}, -1);
  } else if (kind == "corr_semicircle_shifted") {
    out.model = make_corr_semicircle_shifted();
    out.series = correction("inv_poisson_with_corr", {1}, 1);
  } else if (kind == "corr_rank_one") {
    const Param g = read_param(spec, "gamma");
    const Param a = read_param(spec, "alpha");
    out.model = make_corr_rank_one(g.value, a.value);
    if (g.exact && a.exact) out.series = correction("rank_one", {*g.exact, *a.exact}, 1);
  } else {
    throw BadParams("unknown density kind '" + kind + "'");
  }
  return out;
}

}  // namespace

std::string cmd_pp(const Json& cfg, Format f) {
  const Signature lambda =
      signature_from_json(cfg.contains("signature") ? cfg.at("signature") : cfg);
  const Rational q = rational_from_json(need(cfg, "q"));
  const Rational offset = rational_or(cfg, "offset", 1);
  const unsigned K = exact_order(cfg, 6);
  const AtomicMeasure m = pp_measure(lambda, q, offset);
  const Rational N(static_cast<long>(lambda.n()));
  const std::vector<Rational> x = lambda.shifted();

  std::vector<Rational> direct(K + 1);
  for (unsigned k = 0; k <= K; ++k) direct[k] = pp_moment_direct(lambda, q, k, offset);
  const Series gf = mkq_via_gf(x, q, K + 1);
  std::vector<Rational> sums(K + 1);
  for (unsigned j = 0; j <= K; ++j) sums[j] = gf[j + 1];
  const std::vector<Rational> via_gf = moments_from_power_sums(sums, N, offset, K);
  bool agree = direct == via_gf;

  // The set-partition route is limited to moments of order <= 7.
  std::optional<std::vector<Rational>> via_partitions;
  if (!q.is_zero()) {
    const unsigned Kp = std::min(K, 7u);
    std::vector<Rational> p(Kp + 1);
    for (unsigned j = 0; j <= Kp; ++j) {
      p[j] = newton_partition_sum(x, q, j) / factorial(j + 1);
    }
    via_partitions = moments_from_power_sums(p, N, offset, Kp);
    for (unsigned k = 0; k <= Kp; ++k) agree = agree && (*via_partitions)[k] == direct[k];
  }

  if (f == Format::Csv) {
    return atoms_csv(m) + "# routes_agree=" + (agree ? "true" : "false") + "\n";
  }
  Json j;
  j["command"] = "pp";
  j["signature"] = to_json(lambda);
  j["q"] = to_json(q);
  j["offset"] = to_json(offset);
  j["order"] = K;
  j["signed"] = m.is_signed;
  j["mass"] = to_json(m.mass());
  j["atoms"] = to_json(m);
  j["moments"]["direct"] = to_json(direct);
  j["moments"]["gf"] = to_json(via_gf);
  j["moments"]["partition_sum"] =
      via_partitions ? to_json(*via_partitions) : Json(nullptr);
  j["routes_agree"] = agree;
  return dump(j);
}

std::string cmd_limit(const Json& cfg, Format f) {
  const Rational q = rational_from_json(need(cfg, "q"));
  const unsigned K = exact_order(cfg, 8);
  const Regime regime = read_regime(cfg);
  const auto [psi, phi] = read_profiles(cfg, K);
  const MomentSeq mu = limit_moments(psi, q, K);
  const CumulantSeq kappa = limit_cumulants(psi, q, K);
  std::optional<InfPair> pair;
  std::optional<InfCumulants> ic;
  if (phi) {
    pair = limit_inf_pair(psi, *phi, q, K, regime);
    ic = inf_cumulants(psi, *phi, q, K, regime);
  }

  if (f == Format::Csv) {
    std::ostringstream os;
    os << "k,moment,cumulant";
    if (phi) os << ",correction,kappa_prime";
    os << '\n';
    for (unsigned k = 0; k <= K; ++k) {
      os << k << ',' << num(mu[k]) << ',' << (k > 0 ? num(kappa(k)) : "");
      if (phi) {
        os << ',' << num(pair->corr[k]) << ','
           << (k > 0 ? num(ic->kappa_prime(k)) : "");
      }
      os << '\n';
    }
    return os.str();
  }
  Json j;
  j["command"] = "limit";
  j["q"] = to_json(q);
  j["order"] = K;
  j["regime"] = regime == Regime::Full ? "full" : "leading";
  j["psi"] = psi_to_json(psi);
  if (phi) j["phi"] = phi_to_json(*phi);
  Json warnings = Json::array();
  if (psi.has_constant_term()) warnings.push_back("Psi(1) is not zero");
  j["warnings"] = warnings;
  j["moments"] = to_json(mu.mu());
  j["cumulants"] = to_json(kappa.kappa());
  if (phi) {
    j["corrections"] = to_json(pair->corr);
    j["inf_cumulants"]["kappa"] = to_json(ic->kappa.kappa());
    j["inf_cumulants"]["kappa_prime"] = to_json(ic->kappa_prime.kappa());
  }
  return dump(j);
}

std::string cmd_transfer(const Json& cfg, Format f) {
  const std::string op = need(cfg, "op").get<std::string>();
  const auto moments = [&](const char* key) {
    const MomentSeq m = moments_from_json(need(cfg, key));
    if (m.order() > kMaxExactOrder) throw TooLarge("moment sequence too long");
    return m;
  };
  const auto q = [&](const char* key) { return rational_from_json(need(cfg, key)); };

  std::vector<Rational> result;
  const char* name = "mu";
  if (op == "q_transfer") {
    result = q_transfer(moments("moments"), q("q"), q("q_prime")).mu();
  } else if (op == "inf_transfer") {
    result = inf_transfer(moments("moments"), rationals_from_json(need(cfg, "corr")),
                          q("q"));
    name = "corr";
  } else if (op == "p_map") {
    result = p_map(moments("moments"), q("q")).mu();
  } else if (op == "q_map") {
    result = q_map(moments("moments"), q("q")).mu();
  } else if (op == "reflect") {
    result = reflect_moments(moments("moments")).mu();
  } else if (op == "shift") {
    result = shift_moments(moments("moments"), q("c")).mu();
  } else if (op == "otimes_q") {
    result = otimes_q(moments("a"), moments("b"), q("q")).mu();
  } else if (op == "free_convolve") {
    result = free_convolve(moments("a"), moments("b")).mu();
  } else {
    throw BadParams("unknown transfer op '" + op + "'");
  }

  if (f == Format::Csv) return csv_column(result, name);
  Json j;
  j["command"] = "transfer";
  j["op"] = op;
  j["result"][name] = to_json(result);
  return dump(j);
}

std::string cmd_density(const Json& cfg, Format f, const GridOverride& grid) {
  const unsigned K = cfg.value("moments", 6u);
  if (K > 12) throw TooLarge("quadrature moments are limited to k <= 12");
  const ModelWithSeries ms = read_model(need(cfg, "model"), K);
  const DensityModel& m = ms.model;
  const double mass = total_mass(m);
  const double expected = m.is_correction ? 0.0 : 1.0;
  const double mass_err = std::abs(mass - expected);

  if (f == Format::Csv) {
    const auto support = m.support();
    const double from = grid.from.value_or(
        cfg.value("from", support.empty() ? 0.0 : support.front().lo));
    const double to = grid.to.value_or(
        cfg.value("to", support.empty() ? 1.0 : support.back().hi));
    const unsigned points = grid.points.value_or(cfg.value("points", 1000u));
    if (points < 2 || !(from < to)) {
      throw BadParams("grid needs at least 2 points and from < to");
    }
    std::ostringstream os;
    os << "t,f,model\n";
    for (unsigned i = 0; i < points; ++i) {
      const double t = from + (to - from) * i / (points - 1);
      os << format_double(t) << ',' << format_double(eval_density(m, t)) << ','
         << m.id << '\n';
    }
    for (const DensityAtom& a : m.atoms) {
      os << "# atom pos=" << format_double(a.pos) << " w=" << format_double(a.w)
         << '\n';
    }
    os << "# mass=" << format_double(mass) << " expected="
       << format_double(expected) << " abs_err=" << format_double(mass_err)
       << " within_1e-10=" << (mass_err <= kMassTol ? "true" : "false") << '\n';
    return os.str();
  }
  Json j;
  j["command"] = "density";
  j["model"] = m.id;
  j["mass"] = mass;
  j["mass_abs_err"] = mass_err;
  Json rows = Json::array();
  for (unsigned k = 0; k <= K; ++k) {
    const double quad = quadrature_moment(m, k);
    Json row;
    row["k"] = k;
    if (ms.series) {
      const Rational exact = ms.series(k);
      row["series"] = to_json(exact);
      row["quad"] = quad;
      row["abs_err"] = std::abs(quad - exact.to_double());
    } else {
      row["series"] = nullptr;
      row["quad"] = quad;
      row["abs_err"] = nullptr;
    }
    rows.push_back(row);
  }
  j["moments"] = rows;
  return dump(j);
}

std::string cmd_converge(const Json& cfg, Format f) {
  const Rational q = rational_or(cfg, "q", Rational(1, 2));
  std::vector<unsigned> ks;
  if (cfg.contains("k")) {
    ks = cfg.at("k").is_array() ? cfg.at("k").get<std::vector<unsigned>>()
                                : std::vector<unsigned>{cfg.at("k").get<unsigned>()};
  } else {
    for (unsigned k = 1; k <= exact_order(cfg, 5); ++k) ks.push_back(k);
  }
  const std::vector<unsigned> Ns =
      cfg.value("N", std::vector<unsigned>{10, 20, 40, 80, 160});
  unsigned K = 0;
  for (unsigned k : ks) K = std::max(K, k);
  if (K > kMaxExactOrder) throw TooLarge("moment order too large");
  for (unsigned N : Ns) {
    if (N == 0) throw BadParams("N must be positive");
  }
  const MomentSeq beta = beta_moments(q, K);
  const PsiSpec zero{std::vector<Rational>(K + 1)};

  // One task per N; each builds its own measure and shares nothing mutable.
  std::vector<std::future<std::vector<Rational>>> jobs;
  for (unsigned N : Ns) {
    jobs.push_back(std::async(std::launch::async, [N, q, K] {
      const AtomicMeasure m = pp_measure(Signature::zeros(N), q);
      std::vector<Rational> mom(K + 1);
      for (unsigned k = 0; k <= K; ++k) mom[k] = m.moment(k);
      return mom;
    }));
  }
  struct Row {
    unsigned N, k;
    Rational moment, limit, scaled_gap, predicted;
  };
  std::vector<Row> rows;
  for (std::size_t i = 0; i < Ns.size(); ++i) {
    const std::vector<Rational> mom = jobs[i].get();
    for (unsigned k : ks) {
      const Rational NN(static_cast<long>(Ns[i]));
      rows.push_back({Ns[i], k, mom[k], beta[k], NN * (mom[k] - beta[k]),
                      inf_correction_moment(zero, zero, q, k)});
    }
  }

  if (f == Format::Csv) {
    std::ostringstream os;
    os << "N,k,moment,limit,N_gap,predicted\n";
    for (const Row& r : rows) {
      os << r.N << ',' << r.k << ',' << num(r.moment) << ',' << num(r.limit)
         << ',' << num(r.scaled_gap) << ',' << num(r.predicted) << '\n';
    }
    return os.str();
  }
  Json j;
  j["command"] = "converge";
  j["q"] = to_json(q);
  Json arr = Json::array();
  for (const Row& r : rows) {
    Json row;
    row["N"] = r.N;
    row["k"] = r.k;
    row["moment"] = to_json(r.moment);
    row["limit"] = to_json(r.limit);
    row["N_gap"] = to_json(r.scaled_gap);
    row["predicted"] = to_json(r.predicted);
    arr.push_back(row);
  }
  j["rows"] = arr;
  return dump(j);
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const QuadratureFailure*>(&e)) return 4;
  if (dynamic_cast<const InsufficientOrder*>(&e) ||
      dynamic_cast<const TooLarge*>(&e)) {
    return 3;
  }
  if (dynamic_cast<const Error*>(&e) ||
      dynamic_cast<const nlohmann::json::exception*>(&e)) {
    return 2;
  }
  return 1;
}

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Exact computations for q-deformed Perelomov-Popov measures",
               "qpp"};
  app.require_subcommand(1);

  struct Common {
    std::string config;
    std::string out;
    std::string format;
  };
  std::map<std::string, Common> common;
  GridOverride grid;
  double from = 0, to = 0;
  unsigned points = 0;

  const char* names[] = {"pp", "limit", "transfer", "density", "converge"};
  const char* blurbs[] = {
      "atoms and moments of the measure of one signature",
      "limit moments, cumulants and corrections from Psi/Phi or a preset",
      "maps between moment sequences",
      "density on a grid (csv) or quadrature moment report (json)",
      "finite-N moments of the empty signature against the limit",
  };
  std::map<std::string, CLI::App*> subs;
  for (std::size_t i = 0; i < std::size(names); ++i) {
    CLI::App* s = app.add_subcommand(names[i], blurbs[i]);
    Common& c = common[names[i]];
    s->add_option("--config", c.config, "JSON job configuration")->required();
    s->add_option("--out", c.out, "write the report here instead of stdout");
    s->add_option("--format", c.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    subs[names[i]] = s;
  }
  CLI::App* density = subs["density"];
  CLI::Option* o_from = density->add_option("--from", from, "grid start");
  CLI::Option* o_to = density->add_option("--to", to, "grid end");
  CLI::Option* o_points = density->add_option("--points", points, "grid size");
  CLI::App* selftest = app.add_subcommand(
      "selftest", "run the acceptance suite, one line per criterion");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  if (selftest->parsed()) {
    bool all = true;
    qpp::acceptance::run_all([&](const qpp::acceptance::CriterionResult& r) {
      out << qpp::acceptance::format_line(r) << std::endl;
      all = all && r.passed;
    });
    return all ? 0 : 1;
  }

  std::string name;
  for (const auto& [n, s] : subs) {
    if (s->parsed()) name = n;
  }
  const Common& c = common[name];
  if (o_from->count()) grid.from = from;
  if (o_to->count()) grid.to = to;
  if (o_points->count()) grid.points = points;

  try {
    std::ifstream in(c.config);
    if (!in) throw ParseError("cannot read config '" + c.config + "'");
    const Json cfg = Json::parse(in);
    if (!cfg.is_object()) throw ParseError("config must be a JSON object");
    if (cfg.contains("command") && cfg.at("command").get<std::string>() != name) {
      throw BadParams("config is for '" + cfg.at("command").get<std::string>() +
                      "', not '" + name + "'");
    }
    std::string fmt = c.format;
    if (fmt.empty()) {
      fmt = cfg.value("format", std::string(name == "density" ? "csv" : "json"));
    }
    if (fmt != "json" && fmt != "csv") throw BadParams("unknown format '" + fmt + "'");
    const Format f = fmt == "csv" ? Format::Csv : Format::Json;

    std::string report;
    if (name == "pp") report = cmd_pp(cfg, f);
    else if (name == "limit") report = cmd_limit(cfg, f);
    else if (name == "transfer") report = cmd_transfer(cfg, f);
    else if (name == "density") report = cmd_density(cfg, f, grid);
    else report = cmd_converge(cfg, f);

    const std::string path = !c.out.empty() ? c.out : cfg.value("out", std::string());
    if (path.empty()) {
      out << report;
    } else {
      std::ofstream file(path, std::ios::binary);
      if (!file) throw ParseError("cannot write '" + path + "'");
      file << report;
    }
    return 0;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code_for(e);
  }
}

}  // namespace qpp::cli
