#pragma once

#include <chrono>
#include <cmath>
#include <cstdint>
#include <cstdio>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "json.hpp"
#include "wsbm/errors.hpp"
#include "wsbm/families.hpp"
#include "wsbm/graph.hpp"
#include "wsbm/rng.hpp"
#include "wsbm/statistics.hpp"

namespace wsbm {

/// One requested statistic inside a simulation cell.
struct TestSpec {
  TestKind kind = TestKind::SLC;
  int l = 1;        // moment order for SLC / SpectralSingle
  double t0 = 0.0;  // threshold for DichotomizedSLC

  std::string label() const {
    switch (kind) {
      case TestKind::SLMC: return "slmc";
      case TestKind::SLC: return "slc" + std::to_string(l);
      case TestKind::SpectralSingle: return "spectral" + std::to_string(l);
      case TestKind::SpectralCombined: return "spectral-combined";
      case TestKind::DichotomizedSLC: {
        std::ostringstream os;
        os << "dslc@" << t0;
        return os.str();
      }
      case TestKind::WSLMC: return "wslmc";
    }
    return "?";
  }

  NullLaw null() const {
    return (kind == TestKind::SpectralSingle || kind == TestKind::SpectralCombined)
               ? NullLaw::TracyWidom1
               : NullLaw::StdNormal;
  }
};

struct SimConfig {
  int n = 300;
  MomentFamilyKind family = MomentFamilyKind::NormalMoment;
  double lambda1 = 0.0, lambda2 = 1.0;  // base first/second raw moments
  double eps1 = 0.0, eps2 = 0.0;        // community effects on the moments
  int k = 3;
  int m = 2;
  std::vector<TestSpec> tests{TestSpec{TestKind::SLC, 1, 0.0}};
  int reps = 500;
  double alpha = 0.05;
  std::uint64_t seed = 1;
  int threads = 1;

  void validate() const {
    if (n < 3) throw InputError("SimConfig: n must be >= 3");
    if (reps < 1) throw InputError("SimConfig: reps must be >= 1");
    if (!(alpha > 0.0 && alpha < 1.0)) throw InputError("SimConfig: alpha outside (0,1)");
    if (k < 3) throw InputError("SimConfig: k must be >= 3");
    if (m < 1) throw InputError("SimConfig: m must be >= 1");
    if (tests.empty()) throw InputError("SimConfig: no tests requested");
    MomentFamily fam{family};
    for (int s : {+1, -1})
      if (!fam.valid(lambda1 + s * eps1, lambda2 + s * eps2))
        throw InputError("SimConfig: moments (lambda " + std::string(s > 0 ? "+" : "-") +
                         " eps) invalid for family " + to_string(family));
  }

  nlohmann::json to_json() const {
    nlohmann::json tj = nlohmann::json::array();
    for (const auto& t : tests) tj.push_back(t.label());
    return {{"n", n},           {"family", to_string(family)},
            {"lambda1", lambda1}, {"lambda2", lambda2},
            {"eps1", eps1},     {"eps2", eps2},
            {"k", k},           {"m", m},
            {"tests", tj},      {"reps", reps},
            {"alpha", alpha},   {"seed", seed},
            {"threads", threads}};
  }
};

inline std::vector<int> sample_labels(int n, RngStream& rng) {
  if (n < 1) throw InputError("sample_labels: n must be >= 1");
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (auto& s : sigma) s = (rng.next_u64() & 1) ? +1 : -1;
  return sigma;
}

/// Draw A_ij independently from the moment family at
/// (lambda1 + eps1 sigma_i sigma_j, lambda2 + eps2 sigma_i sigma_j).
inline WeightedGraph generate_wsbm(const SimConfig& cfg, const std::vector<int>& sigma,
                                   RngStream& rng) {
  if (static_cast<int>(sigma.size()) != cfg.n)
    throw InputError("generate_wsbm: label vector size mismatch");
  MomentFamily fam{cfg.family};
  Eigen::MatrixXd w = Eigen::MatrixXd::Zero(cfg.n, cfg.n);
  for (int i = 0; i < cfg.n; ++i)
    for (int j = i + 1; j < cfg.n; ++j) {
      int s = sigma[static_cast<std::size_t>(i)] * sigma[static_cast<std::size_t>(j)];
      double v = fam.sample(cfg.lambda1 + s * cfg.eps1, cfg.lambda2 + s * cfg.eps2, rng);
      w(i, j) = w(j, i) = v;
    }
  return WeightedGraph(std::move(w));
}

struct TestSummary {
  TestSpec spec;
  double rejection_rate = 0.0;
  double se = 0.0;  // sqrt(p(1-p)/reps)
  double stat_mean = 0.0;
  double stat_var = 0.0;
  int errors = 0;               // replicates where this test threw
  std::vector<double> values;   // per-replicate statistics (errors -> NaN)

  nlohmann::json to_json() const {
    return {{"test", spec.label()},        {"rejection_rate", rejection_rate},
            {"se", se},                    {"stat_mean", stat_mean},
            {"stat_var", stat_var},        {"errors", errors}};
  }
};

struct SimResult {
  SimConfig config;
  std::vector<TestSummary> tests;
  double elapsed_seconds = 0.0;

  nlohmann::json to_json() const {
    nlohmann::json tj = nlohmann::json::array();
    for (const auto& t : tests) tj.push_back(t.to_json());
    return {{"config", config.to_json()}, {"tests", tj}, {"elapsed_seconds", elapsed_seconds}};
  }
};

namespace detail {

inline double evaluate_test(const WeightedGraph& g, const TestSpec& t, const SimConfig& cfg) {
  switch (t.kind) {
    case TestKind::SLMC: return slmc_statistic(g, cfg.m, cfg.k);
    case TestKind::SLC: return slc_statistic(g, t.l, cfg.k);
    case TestKind::DichotomizedSLC: return dichotomized_slc_statistic(g, t.t0, cfg.k);
    case TestKind::SpectralSingle: return spectral_statistic(g, t.l);
    case TestKind::SpectralCombined: return combined_spectral_statistic(g, cfg.m);
    case TestKind::WSLMC:
      throw InputError("run_monte_carlo: WSLMC needs an explicit family; not a sim test");
  }
  throw InputError("run_monte_carlo: unknown test kind");
}

}  // namespace detail

/// Size/power Monte Carlo: per replicate, fresh labels and a fresh graph from
/// the stream (seed, rep), every requested statistic evaluated and decided at
/// level alpha. Per-test errors are counted, not fatal. Bitwise deterministic
/// in (seed, config), independent of thread count.
inline SimResult run_monte_carlo(const SimConfig& cfg) {
  cfg.validate();
  const auto start = std::chrono::steady_clock::now();
  const std::size_t nt = cfg.tests.size();
  const std::size_t reps = static_cast<std::size_t>(cfg.reps);

  // flat [rep][test] tables filled by workers, reduced in order afterwards
  std::vector<double> stats(reps * nt, std::numeric_limits<double>::quiet_NaN());
  std::vector<unsigned char> rejects(reps * nt, 0);
  std::vector<unsigned char> failed(reps * nt, 0);

  auto worker = [&](std::size_t lo, std::size_t hi) {
    for (std::size_t r = lo; r < hi; ++r) {
      RngStream rng(cfg.seed, static_cast<std::uint64_t>(r));
      const std::vector<int> sigma = sample_labels(cfg.n, rng);
      const WeightedGraph g = generate_wsbm(cfg, sigma, rng);
      for (std::size_t t = 0; t < nt; ++t) {
        try {
          double v = detail::evaluate_test(g, cfg.tests[t], cfg);
          TestReport rep = decide(v, cfg.tests[t].null(), cfg.alpha);
          stats[r * nt + t] = v;
          rejects[r * nt + t] = rep.reject ? 1 : 0;
        } catch (const std::exception&) {
          failed[r * nt + t] = 1;
        }
      }
    }
  };

  int threads = std::max(1, std::min(cfg.threads, cfg.reps));
  if (threads == 1) {
    worker(0, reps);
  } else {
    std::vector<std::thread> pool;
    std::size_t chunk = (reps + static_cast<std::size_t>(threads) - 1) / threads;
    for (int t = 0; t < threads; ++t) {
      std::size_t lo = t * chunk;
      pool.emplace_back(worker, std::min(lo, reps), std::min(lo + chunk, reps));
    }
    for (auto& th : pool) th.join();
  }

  SimResult out;
  out.config = cfg;
  for (std::size_t t = 0; t < nt; ++t) {
    TestSummary s;
    s.spec = cfg.tests[t];
    s.values.reserve(reps);
    KahanSum sum;
    int ok = 0, rej = 0;
    for (std::size_t r = 0; r < reps; ++r) {
      double v = stats[r * nt + t];
      s.values.push_back(v);
      if (failed[r * nt + t]) {
        ++s.errors;
        continue;
      }
      ++ok;
      rej += rejects[r * nt + t];
      sum.add(v);
    }
    if (ok > 0) {
      s.stat_mean = sum.value() / ok;
      KahanSum sq;
      for (std::size_t r = 0; r < reps; ++r)
        if (!failed[r * nt + t]) {
          double dlt = stats[r * nt + t] - s.stat_mean;
          sq.add(dlt * dlt);
        }
      s.stat_var = ok > 1 ? sq.value() / (ok - 1.0) : 0.0;
      s.rejection_rate = static_cast<double>(rej) / ok;
      s.se = std::sqrt(s.rejection_rate * (1.0 - s.rejection_rate) / ok);
    }
    out.tests.push_back(std::move(s));
  }
  out.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return out;
}

// ---------------------------------------------------------------------------
// Power sweeps
// ---------------------------------------------------------------------------

struct SweepCell {
  int n;
  double eps1, eps2;
};

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace detail

inline std::vector<SimResult> power_sweep(const SimConfig& base, const std::vector<SweepCell>& grid,
                                          bool progress = false) {
  if (grid.empty()) throw InputError("power_sweep: empty grid");
  std::vector<SimResult> results;
  results.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    SimConfig cfg = base;
    cfg.n = grid[i].n;
    cfg.eps1 = grid[i].eps1;
    cfg.eps2 = grid[i].eps2;
    if (progress)
      std::fprintf(stderr, "cell %zu/%zu: n=%d eps=(%g, %g)\n", i + 1, grid.size(), cfg.n,
                   cfg.eps1, cfg.eps2);
    results.push_back(run_monte_carlo(cfg));
  }
  return results;
}

inline std::string power_sweep_csv(const std::vector<SimResult>& results) {
  std::ostringstream os;
  os << "n,eps1,eps2,family,test,k,rejection_rate,se,stat_mean,stat_var,errors\r\n";
  os.precision(10);
  for (const auto& r : results)
    for (const auto& t : r.tests) {
      os << r.config.n << ',' << r.config.eps1 << ',' << r.config.eps2 << ','
         << detail::csv_field(to_string(r.config.family)) << ','
         << detail::csv_field(t.spec.label()) << ',' << r.config.k << ',' << t.rejection_rate
         << ',' << t.se << ',' << t.stat_mean << ',' << t.stat_var << ',' << t.errors << "\r\n";
    }
  return os.str();
}

}  // namespace wsbm
