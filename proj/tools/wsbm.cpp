// wsbm: community-structure tests for weighted networks.
//
// Subcommands: test, simulate, limits, dichotomize, validate.
// Exit codes: 0 computed, 2 input error, 3 numerical degeneracy,
// 4 internal check failure.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "wsbm/families.hpp"
#include "wsbm/graph.hpp"
#include "wsbm/limits.hpp"
#include "wsbm/sim.hpp"
#include "wsbm/statistics.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitDegenerate = 3;
constexpr int kExitCheckFailed = 4;

wsbm::ExpFamilyModel family_by_name(const std::string& name) {
  if (name == "exponential") return wsbm::builtin_exponential();
  if (name == "normal") return wsbm::builtin_normal_natural();
  if (name == "gamma3") return wsbm::builtin_gamma_shape3();
  throw wsbm::InputError("unknown family '" + name + "' (exponential|normal|gamma3)");
}

wsbm::MomentFamilyKind moment_family_by_name(const std::string& name) {
  if (name == "normal") return wsbm::MomentFamilyKind::NormalMoment;
  if (name == "gamma") return wsbm::MomentFamilyKind::GammaMoment;
  if (name == "mixexp") return wsbm::MomentFamilyKind::MixtureExpMoment;
  throw wsbm::InputError("unknown moment family '" + name + "' (normal|gamma|mixexp)");
}

std::uint64_t env_seed(std::uint64_t fallback) {
  if (const char* s = std::getenv("WSBM_SEED")) return std::strtoull(s, nullptr, 10);
  return fallback;
}

int env_threads(int fallback) {
  if (const char* s = std::getenv("WSBM_THREADS")) return std::atoi(s);
  return fallback;
}

// ---------------------------------------------------------------------------
// test
// ---------------------------------------------------------------------------

struct TestArgs {
  std::string file;
  std::string stat = "all";
  int m = 2, l = 1, k = 3;
  double alpha = 0.05;
  std::optional<double> t0;
  std::optional<double> p0;
  int index_base = 1;
  std::string format = "json";
};

int cmd_test(const TestArgs& a) {
  wsbm::EdgeListOptions opt;
  opt.index_base = a.index_base;
  std::ifstream in(a.file);
  if (!in) throw wsbm::InputError("cannot open graph file: " + a.file);
  const wsbm::WeightedGraph g = wsbm::parse_edge_list(in, opt);

  std::vector<wsbm::TestReport> reports;
  auto push = [&](wsbm::TestKind kind, double value, wsbm::NullLaw null) {
    wsbm::TestReport r = wsbm::decide(value, null, a.alpha);
    r.kind = kind;
    r.n = g.n();
    r.k = a.k;
    if (kind == wsbm::TestKind::SLMC || kind == wsbm::TestKind::SpectralCombined) r.m = a.m;
    reports.push_back(r);
  };

  const bool all = a.stat == "all";
  if (all || a.stat == "slmc")
    push(wsbm::TestKind::SLMC, wsbm::slmc_statistic(g, a.m, a.k), wsbm::NullLaw::StdNormal);
  if (all) {
    for (int l = 1; l <= a.m; ++l) {
      wsbm::TestReport r =
          wsbm::decide(wsbm::slc_statistic(g, l, a.k), wsbm::NullLaw::StdNormal, a.alpha);
      r.kind = wsbm::TestKind::SLC;
      r.n = g.n();
      r.k = a.k;
      r.l = l;
      reports.push_back(r);
    }
  } else if (a.stat == "slc") {
    wsbm::TestReport r =
        wsbm::decide(wsbm::slc_statistic(g, a.l, a.k), wsbm::NullLaw::StdNormal, a.alpha);
    r.kind = wsbm::TestKind::SLC;
    r.n = g.n();
    r.k = a.k;
    r.l = a.l;
    reports.push_back(r);
  } else if (a.stat == "spectral") {
    wsbm::TestReport r =
        wsbm::decide(wsbm::spectral_statistic(g, a.l), wsbm::NullLaw::TracyWidom1, a.alpha);
    r.kind = wsbm::TestKind::SpectralSingle;
    r.n = g.n();
    r.k = a.k;
    r.l = a.l;
    reports.push_back(r);
  } else if (a.stat == "spectral-combined") {
    push(wsbm::TestKind::SpectralCombined, wsbm::combined_spectral_statistic(g, a.m),
         wsbm::NullLaw::TracyWidom1);
  } else if (!all && a.stat != "slmc") {
    throw wsbm::InputError("unknown --stat '" + a.stat + "'");
  }
  if (a.t0) {
    wsbm::TestReport r = wsbm::decide(wsbm::dichotomized_slc_statistic(g, *a.t0, a.k, a.p0),
                                      wsbm::NullLaw::StdNormal, a.alpha);
    r.kind = wsbm::TestKind::DichotomizedSLC;
    r.n = g.n();
    r.k = a.k;
    r.t0 = *a.t0;
    reports.push_back(r);
  }

  if (a.format == "json") {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : reports) out.push_back(r.to_json());
    std::cout << out.dump(2) << "\n";
  } else if (a.format == "csv") {
    std::cout << "test,k,statistic,critical,p_value,reject\r\n";
    for (const auto& r : reports)
      std::printf("%s,%d,%.10g,%.10g,%.10g,%d\r\n", wsbm::to_string(r.kind).c_str(), r.k,
                  r.statistic, r.critical, r.p_value, r.reject ? 1 : 0);
  } else {
    for (const auto& r : reports)
      std::printf("%-18s k=%d  stat=%12.4f  crit=%8.4f  p=%.4g  %s\n",
                  wsbm::to_string(r.kind).c_str(), r.k, r.statistic, r.critical, r.p_value,
                  r.reject ? "REJECT" : "accept");
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// simulate
// ---------------------------------------------------------------------------

wsbm::TestSpec parse_test_spec(const std::string& s) {
  wsbm::TestSpec t;
  if (s == "slmc") {
    t.kind = wsbm::TestKind::SLMC;
  } else if (s == "slc1" || s == "slc2") {
    t.kind = wsbm::TestKind::SLC;
    t.l = s.back() - '0';
  } else if (s == "spectral1" || s == "spectral2") {
    t.kind = wsbm::TestKind::SpectralSingle;
    t.l = s.back() - '0';
  } else if (s == "spectral-combined") {
    t.kind = wsbm::TestKind::SpectralCombined;
  } else if (s.rfind("dslc@", 0) == 0) {
    t.kind = wsbm::TestKind::DichotomizedSLC;
    t.t0 = std::stod(s.substr(5));
  } else {
    throw wsbm::InputError("unknown test spec '" + s +
                           "' (slmc|slc1|slc2|spectral1|spectral2|spectral-combined|dslc@T0)");
  }
  return t;
}

void apply_config_entry(wsbm::SimConfig& cfg, const std::string& key, const nlohmann::json& v) {
  if (key == "n") cfg.n = v.get<int>();
  else if (key == "family") cfg.family = moment_family_by_name(v.get<std::string>());
  else if (key == "lambda1") cfg.lambda1 = v.get<double>();
  else if (key == "lambda2") cfg.lambda2 = v.get<double>();
  else if (key == "eps1") cfg.eps1 = v.get<double>();
  else if (key == "eps2") cfg.eps2 = v.get<double>();
  else if (key == "k") cfg.k = v.get<int>();
  else if (key == "m") cfg.m = v.get<int>();
  else if (key == "reps") cfg.reps = v.get<int>();
  else if (key == "alpha") cfg.alpha = v.get<double>();
  else if (key == "seed") cfg.seed = v.get<std::uint64_t>();
  else if (key == "threads") cfg.threads = v.get<int>();
  else if (key == "tests") {
    cfg.tests.clear();
    if (v.is_array())
      for (const auto& e : v) cfg.tests.push_back(parse_test_spec(e.get<std::string>()));
    else {
      std::stringstream ss(v.get<std::string>());
      std::string tok;
      while (std::getline(ss, tok, ' '))
        if (!tok.empty()) cfg.tests.push_back(parse_test_spec(tok));
    }
  } else {
    throw wsbm::InputError("unknown config key '" + key + "'");
  }
}

// JSON object or flat key=value lines.
void load_config_file(wsbm::SimConfig& cfg, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wsbm::InputError("cannot open config file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  const std::string text = buf.str();
  std::size_t first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    nlohmann::json j = nlohmann::json::parse(text);
    for (auto it = j.begin(); it != j.end(); ++it) apply_config_entry(cfg, it.key(), it.value());
    return;
  }
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    std::size_t start = line.find_first_not_of(" \t\r");
    if (start == std::string::npos || line[start] == '#') continue;
    std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw wsbm::InputError("config line without '=': " + line);
    std::string key = line.substr(start, eq - start);
    std::string val = line.substr(eq + 1);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    while (!val.empty() && (val.back() == ' ' || val.back() == '\t' || val.back() == '\r'))
      val.pop_back();
    std::size_t vs = val.find_first_not_of(" \t");
    val = vs == std::string::npos ? "" : val.substr(vs);
    // numbers as numbers so apply_config_entry's typed getters work
    try {
      std::size_t pos = 0;
      double num = std::stod(val, &pos);
      if (pos == val.size()) {
        apply_config_entry(cfg, key, nlohmann::json(num));
        continue;
      }
    } catch (const std::exception&) {
    }
    apply_config_entry(cfg, key, nlohmann::json(val));
  }
}

struct SimulateArgs {
  wsbm::SimConfig cfg;
  std::string config_file;
  std::string family_name;  // empty: keep config-file / default family
  std::vector<std::string> test_names;
  std::vector<int> grid_n;
  std::vector<double> grid_eps1, grid_eps2;
  std::string format = "json";
  bool progress = false;
};

int cmd_simulate(SimulateArgs& a) {
  if (!a.config_file.empty()) load_config_file(a.cfg, a.config_file);
  if (!a.family_name.empty()) a.cfg.family = moment_family_by_name(a.family_name);
  if (!a.test_names.empty()) {
    a.cfg.tests.clear();
    for (const auto& s : a.test_names) a.cfg.tests.push_back(parse_test_spec(s));
  }
  a.cfg.seed = env_seed(a.cfg.seed);
  a.cfg.threads = env_threads(a.cfg.threads);

  std::vector<wsbm::SweepCell> grid;
  if (a.grid_n.empty() && a.grid_eps1.empty() && a.grid_eps2.empty()) {
    grid.push_back({a.cfg.n, a.cfg.eps1, a.cfg.eps2});
  } else {
    std::vector<int> ns = a.grid_n.empty() ? std::vector<int>{a.cfg.n} : a.grid_n;
    std::vector<double> e1 = a.grid_eps1.empty() ? std::vector<double>{a.cfg.eps1} : a.grid_eps1;
    std::vector<double> e2 = a.grid_eps2.empty() ? std::vector<double>{a.cfg.eps2} : a.grid_eps2;
    for (int n : ns)
      for (double x1 : e1)
        for (double x2 : e2) grid.push_back({n, x1, x2});
  }

  std::vector<wsbm::SimResult> results = wsbm::power_sweep(a.cfg, grid, a.progress);
  if (a.format == "csv") {
    std::cout << wsbm::power_sweep_csv(results);
  } else {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& r : results) out.push_back(r.to_json());
    std::cout << (results.size() == 1 ? out[0].dump(2) : out.dump(2)) << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// limits
// ---------------------------------------------------------------------------

struct LimitsArgs {
  std::string family = "exponential";
  std::vector<double> tau{1.0};
  std::vector<double> d_grid;
  std::vector<double> d2_grid{0.0};
  std::optional<double> t0;
};

int cmd_limits(const LimitsArgs& a) {
  if (a.d_grid.empty()) throw wsbm::InputError("limits: empty --d-grid");
  const wsbm::ExpFamilyModel fam = family_by_name(a.family);
  if (static_cast<int>(a.tau.size()) != fam.m)
    throw wsbm::InputError("limits: --tau needs " + std::to_string(fam.m) + " value(s) for " +
                           fam.name);
  Eigen::VectorXd tau(fam.m);
  for (int i = 0; i < fam.m; ++i) tau(i) = a.tau[static_cast<std::size_t>(i)];

  std::cout << "d1,d2,weighted_radius,dichotomized_radius,regime_weighted,regime_dichotomized\r\n";
  const std::vector<double> d2s = fam.m > 1 ? a.d2_grid : std::vector<double>{0.0};
  for (double d1 : a.d_grid)
    for (double d2 : d2s) {
      Eigen::VectorXd d(fam.m);
      d(0) = d1;
      if (fam.m > 1) d(1) = d2;
      double rw = wsbm::radius_weighted(fam, tau, d);
      std::ostringstream row;
      row.precision(10);
      row << d1 << ',' << d2 << ',' << rw << ',';
      if (a.t0) {
        double rd = wsbm::radius_dichotomized(fam, tau, d, *a.t0);
        row << rd << ',' << wsbm::to_string(wsbm::classify_regime(rw).regime) << ','
            << wsbm::to_string(wsbm::classify_regime(rd).regime);
      } else {
        row << ',' << wsbm::to_string(wsbm::classify_regime(rw).regime) << ',';
      }
      std::cout << row.str() << "\r\n";
    }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// dichotomize
// ---------------------------------------------------------------------------

int cmd_dichotomize(const std::string& family, double tau, const std::string& format) {
  if (family != "exponential")
    throw wsbm::InputError("dichotomize: optimal threshold is exponential-family only");
  auto [t0_star, ratio] = wsbm::optimal_threshold_exponential(tau);
  if (format == "json") {
    nlohmann::json j{{"family", family}, {"tau", tau}, {"t0_star", t0_star},
                     {"loss_ratio", ratio}};
    std::cout << j.dump(2) << "\n";
  } else {
    std::printf("optimal threshold t0* = %.6f (x* = %.6f), information-loss ratio %.6f\n",
                t0_star, t0_star * tau, ratio);
  }
  return kExitOk;
}

// ---------------------------------------------------------------------------
// validate
// ---------------------------------------------------------------------------

struct CheckSink {
  int failures = 0;
  void check(const std::string& name, bool ok, double value) {
    std::printf("%-52s %-4s (%.6g)\n", name.c_str(), ok ? "ok" : "FAIL", value);
    if (!ok) ++failures;
  }
};

void validate_cycles(CheckSink& s) {
  wsbm::RngStream rng(7, 0);
  for (int n : {8, 10}) {
    Eigen::MatrixXd b = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j) b(i, j) = b(j, i) = rng.normal();
    for (int k : {3, 4}) {
      double brute = wsbm::cycle_sum_bruteforce(b, k);
      double fast = k == 3 ? wsbm::cycle_sum_trace3(b) : wsbm::cycle_sum_trace4(b);
      double rel = std::abs(brute - fast) / std::max(1.0, std::abs(brute));
      s.check("cycles: trace vs brute force n=" + std::to_string(n) + " k=" + std::to_string(k),
              rel < 1e-10, rel);
    }
  }
}

void validate_families(CheckSink& s) {
  for (const auto& fam :
       {wsbm::builtin_exponential(), wsbm::builtin_normal_natural(), wsbm::builtin_gamma_shape3()}) {
    Eigen::VectorXd tau(fam.m);
    tau(0) = fam.m == 1 ? 1.3 : 0.4;
    if (fam.m == 2) tau(1) = -0.7;
    double gerr = (fam.grad(tau) - fam.grad_fd(tau)).cwiseAbs().maxCoeff();
    double herr = (fam.hessian(tau) - fam.hessian_fd(tau)).cwiseAbs().maxCoeff();
    s.check("families: " + fam.name + " grad fd", gerr < 1e-6, gerr);
    s.check("families: " + fam.name + " hessian fd", herr < 1e-5, herr);
  }
}

void validate_limits(CheckSink& s) {
  const auto expf = wsbm::builtin_exponential();
  Eigen::VectorXd tau = Eigen::VectorXd::Constant(1, 1.0);
  Eigen::VectorXd d = Eigen::VectorXd::Constant(1, 0.7);
  double rw = wsbm::radius_weighted(expf, tau, d);
  s.check("limits: exponential radius = d^2", std::abs(rw - 0.49) < 1e-12, rw);
  auto [t0s, ratio] = wsbm::optimal_threshold_exponential(1.0);
  s.check("limits: optimal x* = 1.594", std::abs(t0s - 1.594) < 1e-3, t0s);
  s.check("limits: minimal ratio = 1.544", std::abs(ratio - 1.544) < 1e-3, ratio);
  double rd = wsbm::radius_dichotomized(expf, tau, d, 1.0);
  double closed = 1.0 * 1.0 * 0.49 / std::expm1(1.0);
  s.check("limits: dichotomized closed form", std::abs(rd - closed) < 1e-12, rd);
}

void validate_null_calibration(CheckSink& s) {
  wsbm::SimConfig cfg;
  cfg.n = 300;
  cfg.reps = 2000;
  cfg.threads = env_threads(4);
  cfg.seed = env_seed(12345);
  cfg.tests = {wsbm::TestSpec{wsbm::TestKind::SLC, 1, 0.0}};
  wsbm::SimResult r = wsbm::run_monte_carlo(cfg);
  std::vector<double> vals;
  for (double v : r.tests[0].values)
    if (std::isfinite(v)) vals.push_back(v);
  double ks = wsbm::ks_statistic(vals, [](double x) { return wsbm::normal_cdf(x); });
  double p = wsbm::ks_pvalue(ks, vals.size());
  s.check("null-calibration: KS vs N(0,1) p-value > 0.01", p > 0.01, p);
  double rate = r.tests[0].rejection_rate;
  s.check("null-calibration: type I error near 0.05", std::abs(rate - 0.05) < 0.03, rate);
}

int cmd_validate(const std::string& suite) {
  CheckSink s;
  if (suite == "cycles") validate_cycles(s);
  else if (suite == "families") validate_families(s);
  else if (suite == "limits") validate_limits(s);
  else if (suite == "null-calibration") validate_null_calibration(s);
  else if (suite == "all") {
    validate_cycles(s);
    validate_families(s);
    validate_limits(s);
    validate_null_calibration(s);
  } else {
    throw wsbm::InputError("unknown suite '" + suite +
                           "' (cycles|families|limits|null-calibration|all)");
  }
  if (s.failures > 0) {
    std::printf("%d check(s) failed\n", s.failures);
    return kExitCheckFailed;
  }
  std::printf("all checks passed\n");
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"community-structure tests for weighted stochastic block models"};
  app.require_subcommand(1);

  TestArgs ta;
  CLI::App* t = app.add_subcommand("test", "run test statistics on an edge-list file");
  t->add_option("file", ta.file, "edge-list file")->required();
  t->add_option("--stat", ta.stat, "slmc|slc|spectral|spectral-combined|all");
  t->add_option("--m", ta.m, "moment order for combined statistics");
  t->add_option("--l", ta.l, "moment order for single-moment statistics");
  t->add_option("--k", ta.k, "cycle length");
  t->add_option("--alpha", ta.alpha, "nominal level");
  double t0v = 0.0, p0v = 0.0;
  CLI::Option* t0o = t->add_option("--t0", t0v, "also run the dichotomized test at this threshold");
  CLI::Option* p0o = t->add_option("--p0", p0v, "known edge probability for the dichotomized test");
  t->add_option("--index-base", ta.index_base, "node index base of the file (0 or 1)");
  t->add_option("--format", ta.format, "json|csv|text");

  SimulateArgs sa;
  CLI::App* sim = app.add_subcommand("simulate", "Monte-Carlo size/power experiments");
  sim->add_option("--config", sa.config_file, "JSON or key=value config file");
  sim->add_option("--n", sa.cfg.n, "node count");
  std::string fam_name = "normal";
  CLI::Option* famo = sim->add_option("--family", fam_name, "normal|gamma|mixexp");
  sim->add_option("--lambda1", sa.cfg.lambda1, "base first moment");
  sim->add_option("--lambda2", sa.cfg.lambda2, "base second moment");
  sim->add_option("--eps1", sa.cfg.eps1, "community effect on the first moment");
  sim->add_option("--eps2", sa.cfg.eps2, "community effect on the second moment");
  sim->add_option("--k", sa.cfg.k, "cycle length");
  sim->add_option("--m", sa.cfg.m, "moment order for combined statistics");
  sim->add_option("--reps", sa.cfg.reps, "replications");
  sim->add_option("--alpha", sa.cfg.alpha, "nominal level");
  sim->add_option("--seed", sa.cfg.seed, "RNG seed");
  sim->add_option("--threads", sa.cfg.threads, "worker cap");
  sim->add_option("--tests", sa.test_names, "tests, e.g. slmc slc1 spectral1 dslc@0.5");
  sim->add_option("--grid-n", sa.grid_n, "sweep over node counts");
  sim->add_option("--grid-eps1", sa.grid_eps1, "sweep over eps1");
  sim->add_option("--grid-eps2", sa.grid_eps2, "sweep over eps2");
  sim->add_option("--format", sa.format, "json|csv");
  sim->add_flag("--progress", sa.progress, "progress lines on standard error");

  LimitsArgs la;
  CLI::App* lim = app.add_subcommand("limits", "detection-boundary phase grid (CSV)");
  lim->add_option("--family", la.family, "exponential|normal|gamma3");
  lim->add_option("--tau", la.tau, "natural parameter (repeat for vector families)");
  lim->add_option("--d-grid", la.d_grid, "grid of d (first component)");
  lim->add_option("--d2-grid", la.d2_grid, "grid of the second d component");
  double lt0 = 0.0;
  CLI::Option* lt0o = lim->add_option("--t0", lt0, "dichotomization threshold");

  std::string dfam = "exponential";
  double dtau = 1.0;
  std::string dformat = "text";
  CLI::App* dich = app.add_subcommand("dichotomize", "least-loss threshold");
  dich->add_option("--family", dfam, "family (exponential)");
  dich->add_option("--tau", dtau, "rate parameter")->required();
  dich->add_option("--format", dformat, "json|text");

  std::string suite = "all";
  CLI::App* val = app.add_subcommand("validate", "internal oracle suites");
  val->add_option("--suite", suite, "cycles|families|limits|null-calibration|all");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*t) {
      if (t0o->count()) ta.t0 = t0v;
      if (p0o->count()) ta.p0 = p0v;
      return cmd_test(ta);
    }
    if (*sim) {
      // explicit --family wins over the config file; default is normal
      if (famo->count() || sa.config_file.empty()) sa.family_name = fam_name;
      return cmd_simulate(sa);
    }
    if (*lim) {
      if (lt0o->count()) la.t0 = lt0;
      return cmd_limits(la);
    }
    if (*dich) return cmd_dichotomize(dfam, dtau, dformat);
    if (*val) return cmd_validate(suite);
  } catch (const wsbm::ZeroVarianceError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDegenerate;
  } catch (const wsbm::DegenerateDichotomyError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDegenerate;
  } catch (const wsbm::NumericError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitDegenerate;
  } catch (const wsbm::DomainError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const wsbm::InputError& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInput;
  }
  return kExitInput;
}
