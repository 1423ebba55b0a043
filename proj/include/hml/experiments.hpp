#pragma once

// Monte Carlo harness turning the limit theorems, the LDP consistency
// identities, and the appendix approximations into reproducible experiment
// runs with statistical pass/fail reports. Replicates are sharded over
// streams with fixed shard boundaries, so reports are bitwise independent of
// the worker count.

#include <Eigen/Dense>
#include <string>
#include <vector>

#include "hml/moment_space.hpp"
#include "hml/rng.hpp"

namespace hml {

enum class ExperimentId {
  clt_fixed_k,
  process_unit,
  process_halfline,
  process_realline,
  ldp_t1,
  appendix_checks,
  oracle_suite,
};

const char* experiment_name(ExperimentId id);
ExperimentId experiment_from_name(const std::string& name);

struct Tolerances {
  double mean_se_factor = 4.0;   // |mean - target| <= factor * SE
  double mean_abs = 0.02;        // absolute mean tolerance (process t=1 checks)
  double var_rel = 0.05;         // CLT variance relative tolerance
  double cov_rel = 0.05;         // covariance: max(rel * |target|, abs)
  double cov_abs = 0.05;
  double ks_level = 0.01;        // KS passes iff p-value >= level
  double lemma_a1_rel = 0.02;
  double duality_tol = 1e-6;
  double consistency_tol = 1e-8;
  double residual_exponent_min = 2.5;
  double lln_tol = 0.01;
};

struct ExperimentConfig {
  ExperimentId id = ExperimentId::clt_fixed_k;
  int n = 1000;
  int reps = 10000;
  std::vector<double> grid{0.2, 0.4, 0.6, 0.8};
  int k = 1;
  SeedSpec seed;
  double gamma_const = 0.0;          // constant gamma_{n,k} for the unbounded laws
  int workers = 1;
  std::vector<double> cumulant_lambdas{-1.0, 0.5, 1.0};
  std::vector<int> n_ladder{50, 100, 200};
  bool slope_check = false;          // rare-event LDP slope trend (slow)
  int slope_reps = 200000;
  Tolerances tol;

  void validate() const;
};

// Experiment-appropriate defaults (grids, rep counts, tolerance profile).
ExperimentConfig default_config(ExperimentId id);

struct StatRecord {
  std::string name;
  double estimate = 0.0;
  double target = 0.0;
  double standard_error = 0.0;
  bool pass = true;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<StatRecord> stats;
  Eigen::MatrixXd empirical_cov;  // empty unless the experiment estimates one
  Eigen::MatrixXd target_cov;
  double wall_ms = 0.0;
  bool pass = true;  // conjunction of per-statistic passes
};

ExperimentReport run_clt_fixed_k(const ExperimentConfig& config);
ExperimentReport run_process_experiment(const ExperimentConfig& config);
ExperimentReport run_appendix_checks(const ExperimentConfig& config);
ExperimentReport run_ldp_t1(const ExperimentConfig& config);
ExperimentReport run_experiment(const ExperimentConfig& config);

// Z_n(1) = -(1/n)(D_{2n} - D^0_{2n}) replicates under the uniform law,
// sharded and reproducible; stream_offset decorrelates sub-experiments.
std::vector<double> sample_z1_replicates(int n, int reps, SeedSpec seed,
                                         int workers,
                                         std::uint64_t stream_offset = 0);

// JSON (machine) and CSV (plot-ready) serialization. JSON key order is fixed
// and, apart from the wall_ms field, payloads are bitwise reproducible.
std::string report_to_json(const ExperimentReport& report);
std::string report_stats_csv(const ExperimentReport& report);
std::string report_cov_csv(const ExperimentReport& report);
std::string config_to_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const std::string& text);

}  // namespace hml
