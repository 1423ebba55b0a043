// hml: random moment sequences, Hankel log-determinant processes, their
// Gaussian limits, and large-deviation rate functions. Subcommands sample
// the canonical laws, tabulate limit objects, evaluate the LDP functionals,
// and run the reproducible Monte Carlo experiment suites.

#include <CLI11.hpp>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <nlohmann/json.hpp>
#include <optional>
#include <string>

#include "hml/experiments.hpp"
#include "hml/hankel_det.hpp"
#include "hml/ldp.hpp"
#include "hml/limit_theory.hpp"
#include "hml/oracle.hpp"
#include "hml/sampling.hpp"

namespace {

using json = nlohmann::ordered_json;

constexpr const char* kVersion = "0.1.0";

struct SeedOptions {
  std::optional<std::uint64_t> seed;
  std::uint64_t stream = 0;

  hml::SeedSpec resolve() const {
    if (seed) return {*seed, stream};
    if (const char* env = std::getenv("HML_SEED"))
      return {std::stoull(env), stream};
    throw hml::ConfigError(
        "stochastic subcommand needs --seed (or the HML_SEED environment "
        "variable)");
  }
};

void add_seed_options(CLI::App* cmd, SeedOptions& opts) {
  cmd->add_option("--seed", opts.seed, "RNG seed (required unless HML_SEED set)");
  cmd->add_option("--streams,--stream", opts.stream, "base stream id");
}

std::vector<double> parse_grid(const std::string& spec) {
  std::vector<double> grid;
  if (spec.find(':') != std::string::npos) {
    double start, stop, step;
    char c1, c2;
    std::istringstream is(spec);
    if (!(is >> start >> c1 >> stop >> c2 >> step) || c1 != ':' || c2 != ':' ||
        step <= 0)
      throw hml::ConfigError("grid spec must be start:stop:step");
    for (double t = start; t <= stop + 1e-12; t += step)
      grid.push_back(std::min(t, stop));
  } else {
    std::istringstream is(spec);
    std::string tok;
    while (std::getline(is, tok, ',')) grid.push_back(std::stod(tok));
  }
  if (grid.empty()) throw hml::ConfigError("empty grid");
  return grid;
}

std::string provenance(const std::string& what, const hml::SeedSpec* seed) {
  std::ostringstream os;
  os << "# hml " << what << " version=" << kVersion;
  if (seed) os << " seed=" << seed->seed << " stream=" << seed->stream_id;
  os << '\n';
  return os.str();
}

void write_file(const std::filesystem::path& path, const std::string& body) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw hml::ConfigError("cannot write " + path.string());
  out << body;
}

json moment_vector_json(const hml::MomentVector& mv) {
  return json{{"interval", hml::interval_name(mv.interval)}, {"m", mv.m}};
}

json canonical_json(const hml::CanonicalCoords& c) {
  return json{{"interval", hml::interval_name(c.interval)},
              {"kind", "canonical"},
              {"coords", c.coords}};
}

hml::CanonicalCoords draw_coords(hml::IntervalKind interval, int n,
                                 double gamma_const, hml::RngStream& rng) {
  switch (interval) {
    case hml::IntervalKind::unit:
      return hml::sample_unit_canonical(2 * n, rng);
    case hml::IntervalKind::halfline:
      return hml::sample_halfline_canonical(
          hml::HalflineParams::unit_mean(2 * n, gamma_const), rng);
    case hml::IntervalKind::realline:
      return hml::sample_realline_canonical(
          hml::ReallineParams::unit_mean(n, gamma_const), rng);
  }
  throw hml::ConfigError("bad interval");
}

hml::TestFunction parse_test_function(const std::string& spec) {
  if (spec.rfind("const:", 0) == 0)
    return hml::test_function_const(std::stod(spec.substr(6)));
  if (spec.rfind("indicator:", 0) == 0)
    return hml::test_function_indicator(std::stod(spec.substr(10)));
  if (!spec.empty() && spec[0] == '@') {
    std::ifstream in(spec.substr(1));
    if (!in) throw hml::ConfigError("cannot read " + spec.substr(1));
    const json j = json::parse(in);
    return hml::test_function_piecewise(
        j.at("breakpoints").get<std::vector<double>>(),
        j.at("values").get<std::vector<double>>());
  }
  throw hml::ConfigError(
      "test function must be const:c, indicator:t, or @piecewise.json");
}

int finish_experiment(const hml::ExperimentReport& report,
                      const std::string& out_dir, const std::string& format,
                      const std::string& dump_config) {
  if (!dump_config.empty())
    write_file(dump_config, hml::config_to_json(report.config));
  if (!out_dir.empty()) {
    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    if (format == "csv") {
      const std::string head = provenance(
          hml::experiment_name(report.config.id), &report.config.seed);
      write_file(dir / "stats.csv", head + report_stats_csv(report));
      if (report.empirical_cov.size() > 0)
        write_file(dir / "covariance.csv", head + report_cov_csv(report));
    } else {
      write_file(dir / "report.json", report_to_json(report));
    }
  }
  for (const auto& stat : report.stats)
    std::cout << (stat.pass ? "[pass] " : "[FAIL] ") << stat.name
              << " estimate=" << stat.estimate << " target=" << stat.target
              << '\n';
  std::cout << (report.pass ? "PASS" : "FAIL") << " (" << report.stats.size()
            << " statistics, " << report.wall_ms << " ms)\n";
  return report.pass ? 0 : 1;
}

void apply_common(hml::ExperimentConfig& config, const SeedOptions& seed,
                  int workers) {
  config.seed = seed.resolve();
  config.workers = workers;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hankel determinants of random moment sequences"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  std::string out_dir, format = "json", dump_config;
  int workers = 1;
  app.add_option("--out", out_dir, "output directory")->envname("HML_OUT");
  app.add_option("--format", format, "json|csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--dump-config", dump_config,
                 "write the resolved experiment config JSON to this path");
  app.add_option("--workers", workers, "Monte Carlo worker threads")
      ->check(CLI::PositiveNumber);

  // ---- sample ----------------------------------------------------------
  auto* sample = app.add_subcommand("sample", "draw random moment vectors");
  std::string sample_interval = "unit";
  int sample_n = 4, sample_count = 1;
  bool sample_canonical = false;
  double sample_gamma = 0.0;
  SeedOptions sample_seed;
  sample->add_option("--interval", sample_interval)
      ->check(CLI::IsMember({"unit", "halfline", "realline"}));
  sample->add_option("--n", sample_n, "moment order N");
  sample->add_option("--count", sample_count, "number of vectors");
  sample->add_flag("--canonical", sample_canonical,
                   "emit canonical coordinates instead of moments");
  sample->add_option("--gamma", sample_gamma, "constant gamma parameter");
  add_seed_options(sample, sample_seed);

  // ---- logdet ----------------------------------------------------------
  auto* logdet = app.add_subcommand(
      "logdet", "log-determinant process paths for random coordinates");
  std::string logdet_interval = "unit", logdet_grid = "0:1:0.1";
  int logdet_n = 50, logdet_count = 1;
  double logdet_gamma = 0.0;
  SeedOptions logdet_seed;
  logdet->add_option("--interval", logdet_interval)
      ->check(CLI::IsMember({"unit", "halfline", "realline"}));
  logdet->add_option("--n", logdet_n, "process scale n");
  logdet->add_option("--grid", logdet_grid, "t-grid start:stop:step");
  logdet->add_option("--count", logdet_count, "number of paths");
  logdet->add_option("--gamma", logdet_gamma, "constant gamma parameter");
  add_seed_options(logdet, logdet_seed);

  // ---- kernel ----------------------------------------------------------
  auto* kernel = app.add_subcommand("kernel", "tabulate f, g or r on a grid");
  std::string kernel_id = "f", kernel_grid = "0:1:0.1";
  kernel->add_option("--kernel", kernel_id)
      ->check(CLI::IsMember({"f", "g", "r"}));
  kernel->add_option("--grid", kernel_grid, "grid start:stop:step");

  // ---- limit-paths -----------------------------------------------------
  auto* limit_paths = app.add_subcommand(
      "limit-paths", "simulate the limiting Gaussian process on a grid");
  std::string lp_interval = "unit", lp_grid = "0.1:1:0.1";
  int lp_count = 10;
  bool lp_gram = false;
  SeedOptions lp_seed;
  limit_paths->add_option("--interval", lp_interval)
      ->check(CLI::IsMember({"unit", "halfline", "realline"}));
  limit_paths->add_option("--grid", lp_grid);
  limit_paths->add_option("--paths", lp_count, "number of paths");
  limit_paths->add_flag("--gram", lp_gram, "also emit the Gram matrix CSV");
  add_seed_options(limit_paths, lp_seed);

  // ---- experiments -----------------------------------------------------
  auto* clt = app.add_subcommand("clt", "fixed-k CLT experiment");
  int clt_k = 1, clt_n = 2000, clt_reps = 20000;
  SeedOptions clt_seed;
  clt->add_option("--k", clt_k);
  clt->add_option("--n", clt_n);
  clt->add_option("--reps", clt_reps);
  add_seed_options(clt, clt_seed);

  auto* process = app.add_subcommand("process", "process limit experiment");
  std::string process_interval = "unit", process_grid = "0.2,0.4,0.6,0.8";
  int process_n = 1000, process_reps = 10000;
  double process_gamma = 0.0;
  SeedOptions process_seed;
  process->add_option("--interval", process_interval)
      ->check(CLI::IsMember({"unit", "halfline", "realline"}));
  process->add_option("--n", process_n);
  process->add_option("--reps", process_reps);
  process->add_option("--grid", process_grid);
  process->add_option("--gamma", process_gamma);
  add_seed_options(process, process_seed);

  auto* ldp = app.add_subcommand(
      "ldp", "rate-function evaluators and the t=1 Monte Carlo suite");
  double ldp_t = 1.0;
  std::optional<double> ldp_x, ldp_lam;
  std::string ldp_f;
  bool ldp_mc = false;
  int ldp_reps = 600000;
  double ldp_quad_tol = 1e-10;
  bool ldp_slope = false;
  SeedOptions ldp_seed;
  ldp->add_option("--t", ldp_t, "time point in (0,1]");
  ldp->add_option("--x", ldp_x, "evaluate the rate Lambda*_t(x)");
  ldp->add_option("--lam", ldp_lam, "evaluate Lambda_t(lambda)");
  ldp->add_option("--f", ldp_f,
                  "test function (const:c | indicator:t | @file.json) for "
                  "Lambda(f)");
  ldp->add_option("--quad-tol", ldp_quad_tol);
  ldp->add_flag("--mc", ldp_mc, "run the Monte Carlo ldp_t1 experiment");
  ldp->add_option("--reps", ldp_reps);
  ldp->add_flag("--slope-check", ldp_slope,
                "include the rare-event slope trend");
  add_seed_options(ldp, ldp_seed);

  auto* appendix =
      app.add_subcommand("appendix", "appendix approximation suite");
  int appendix_reps = 200000;
  SeedOptions appendix_seed;
  appendix->add_option("--reps", appendix_reps);
  add_seed_options(appendix, appendix_seed);

  auto* oracle =
      app.add_subcommand("oracle-check", "exact-arithmetic certification");
  int oracle_kmax = 6, oracle_trials = 50;
  SeedOptions oracle_seed;
  oracle->add_option("--kmax", oracle_kmax)->check(CLI::Range(1, 8));
  oracle->add_option("--trials", oracle_trials);
  add_seed_options(oracle, oracle_seed);

  auto* rerun = app.add_subcommand("rerun", "re-run a dumped config");
  std::string rerun_config;
  rerun->add_option("--config", rerun_config)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // config errors exit 2; --help/--version exit 0
  }

  try {
    if (*sample) {
      const auto seed = sample_seed.resolve();
      const auto interval = hml::interval_from_name(sample_interval);
      json vectors = json::array();
      for (int i = 0; i < sample_count; ++i) {
        hml::SeedSpec vec_seed{seed.seed,
                               seed.stream_id + static_cast<std::uint64_t>(i)};
        if (sample_canonical) {
          hml::RngStream rng(vec_seed);
          hml::CanonicalCoords coords;
          switch (interval) {
            case hml::IntervalKind::unit:
              coords = hml::sample_unit_canonical(sample_n, rng);
              break;
            case hml::IntervalKind::halfline:
              coords = hml::sample_halfline_canonical(
                  hml::HalflineParams::unit_mean(sample_n, sample_gamma), rng);
              break;
            case hml::IntervalKind::realline:
              if (sample_n % 2 == 0)
                throw hml::ConfigError("realline needs odd N (2n-1)");
              coords = hml::sample_realline_canonical(
                  hml::ReallineParams::unit_mean((sample_n + 1) / 2,
                                                 sample_gamma),
                  rng);
              break;
          }
          vectors.push_back(canonical_json(coords));
        } else {
          vectors.push_back(moment_vector_json(
              hml::sample_moment_vector(interval, sample_n, {}, vec_seed)));
        }
      }
      json out{{"meta", json{{"tool", "hml sample"},
                             {"version", kVersion},
                             {"seed", seed.seed},
                             {"stream", seed.stream_id}}},
               {"vectors", vectors}};
      const std::string body = out.dump(2) + "\n";
      if (out_dir.empty()) {
        std::cout << body;
      } else {
        std::filesystem::create_directories(out_dir);
        write_file(std::filesystem::path(out_dir) / "samples.json", body);
      }
      return 0;
    }

    if (*logdet) {
      const auto seed = logdet_seed.resolve();
      const auto interval = hml::interval_from_name(logdet_interval);
      const auto grid = parse_grid(logdet_grid);
      std::ostringstream csv;
      csv << provenance("logdet", &seed);
      csv << "path,t,k,logdet,centered_logdet\n";
      csv.precision(17);
      const int horizon =
          interval == hml::IntervalKind::realline ? logdet_n - 1 : logdet_n;
      for (int path_id = 0; path_id < logdet_count; ++path_id) {
        hml::RngStream rng({seed.seed, seed.stream_id + path_id});
        const auto coords = draw_coords(interval, logdet_n, logdet_gamma, rng);
        const auto values = hml::logdet_process(coords, horizon, grid);
        for (std::size_t i = 0; i < grid.size(); ++i) {
          const int k = static_cast<int>(std::floor(horizon * grid[i]));
          const double centered = interval == hml::IntervalKind::unit
                                      ? values[i] - hml::arcsine_centering(k)
                                      : values[i];
          csv << path_id << ',' << grid[i] << ',' << k << ',' << values[i]
              << ',' << centered << '\n';
        }
      }
      if (out_dir.empty()) {
        std::cout << csv.str();
      } else {
        std::filesystem::create_directories(out_dir);
        write_file(std::filesystem::path(out_dir) / "logdet.csv", csv.str());
      }
      return 0;
    }

    if (*kernel) {
      const auto grid = parse_grid(kernel_grid);
      std::ostringstream csv;
      csv << provenance("kernel", nullptr);
      csv.precision(17);
      if (kernel_id == "r") {
        csv << "t,r\n";
        for (double t : grid) csv << t << ',' << hml::r_drift(t) << '\n';
      } else {
        const auto fn = kernel_id == "f" ? hml::kernel_f : hml::kernel_g;
        csv << "s,t," << kernel_id << "\n";
        for (double s : grid)
          for (double t : grid) csv << s << ',' << t << ',' << fn(s, t) << '\n';
      }
      if (out_dir.empty()) {
        std::cout << csv.str();
      } else {
        std::filesystem::create_directories(out_dir);
        write_file(std::filesystem::path(out_dir) / "kernel.csv", csv.str());
      }
      return 0;
    }

    if (*limit_paths) {
      const auto seed = lp_seed.resolve();
      const auto spec =
          hml::LimitSpec::for_interval(hml::interval_from_name(lp_interval));
      const auto grid = parse_grid(lp_grid);
      const Eigen::MatrixXd paths =
          hml::sample_limit_paths(spec, grid, lp_count, seed);
      std::ostringstream csv;
      csv << provenance("limit-paths", &seed);
      csv << "path_id,t,value\n";
      csv.precision(17);
      for (Eigen::Index p = 0; p < paths.rows(); ++p)
        for (std::size_t j = 0; j < grid.size(); ++j)
          csv << p << ',' << grid[j] << ','
              << paths(p, static_cast<Eigen::Index>(j)) << '\n';
      std::ostringstream gram_csv;
      if (lp_gram) {
        const auto kg = hml::build_kernel_grid(spec, grid);
        gram_csv << provenance("limit-paths gram", &seed);
        gram_csv << "s,t,value\n";
        gram_csv.precision(17);
        for (std::size_t i = 0; i < grid.size(); ++i)
          for (std::size_t j = 0; j < grid.size(); ++j)
            gram_csv << grid[i] << ',' << grid[j] << ','
                     << kg.gram(static_cast<Eigen::Index>(i),
                                static_cast<Eigen::Index>(j))
                     << '\n';
      }
      if (out_dir.empty()) {
        std::cout << csv.str();
        if (lp_gram) std::cout << gram_csv.str();
      } else {
        std::filesystem::create_directories(out_dir);
        write_file(std::filesystem::path(out_dir) / "limit_paths.csv",
                   csv.str());
        if (lp_gram)
          write_file(std::filesystem::path(out_dir) / "gram.csv",
                     gram_csv.str());
      }
      return 0;
    }

    if (*clt) {
      auto config = hml::default_config(hml::ExperimentId::clt_fixed_k);
      config.k = clt_k;
      config.n = clt_n;
      config.reps = clt_reps;
      apply_common(config, clt_seed, workers);
      return finish_experiment(hml::run_clt_fixed_k(config), out_dir, format,
                               dump_config);
    }

    if (*process) {
      const auto interval = hml::interval_from_name(process_interval);
      const auto id = interval == hml::IntervalKind::unit
                          ? hml::ExperimentId::process_unit
                      : interval == hml::IntervalKind::halfline
                          ? hml::ExperimentId::process_halfline
                          : hml::ExperimentId::process_realline;
      auto config = hml::default_config(id);
      config.n = process_n;
      config.reps = process_reps;
      config.grid = parse_grid(process_grid);
      config.gamma_const = process_gamma;
      apply_common(config, process_seed, workers);
      return finish_experiment(hml::run_process_experiment(config), out_dir,
                               format, dump_config);
    }

    if (*ldp) {
      if (ldp_mc) {
        auto config = hml::default_config(hml::ExperimentId::ldp_t1);
        config.reps = ldp_reps;
        config.slope_check = ldp_slope;
        config.cumulant_lambdas = {-2.0, -1.0, 0.5, 1.0};
        apply_common(config, ldp_seed, workers);
        return finish_experiment(hml::run_ldp_t1(config), out_dir, format,
                                 dump_config);
      }
      std::cout.precision(12);
      bool any = false;
      if (!ldp_f.empty()) {
        const auto eval =
            hml::lambda_functional(parse_test_function(ldp_f), ldp_quad_tol);
        std::cout << "K = " << eval.K << '\n';
        switch (eval.regime) {
          case hml::RateRegime::subcritical:
            std::cout << "Lambda(f) = " << *eval.value << " (subcritical)\n";
            break;
          case hml::RateRegime::supercritical:
            std::cout << "Lambda(f) = +inf (supercritical)\n";
            break;
          case hml::RateRegime::boundary:
            std::cout << "Lambda(f) undefined: K lies in the boundary band "
                         "|K-2| <= 1e-9 (open case)\n";
            break;
        }
        any = true;
      }
      if (ldp_lam) {
        std::cout << "Lambda_t(" << ldp_t << ", " << *ldp_lam
                  << ") = " << hml::lambda_t(ldp_t, *ldp_lam) << '\n';
        any = true;
      }
      if (ldp_x) {
        const double star = hml::lambda_t_star(ldp_t, *ldp_x, 1e-10);
        std::cout << "Lambda*_t(" << ldp_t << ", " << *ldp_x << ") = " << star
                  << '\n';
        if (ldp_t == 1.0) {
          const double closed = hml::rate_t1_closed(*ldp_x);
          const bool match = std::abs(star - closed) <= 1e-6;
          std::cout << "closed form 2x-1-log(2x) = " << closed
                    << (match ? "  [match]" : "  [MISMATCH]") << '\n';
          if (!match) return 1;
        }
        any = true;
      }
      if (!any) throw hml::ConfigError("ldp: give --x, --lam or --f (or --mc)");
      return 0;
    }

    if (*appendix) {
      auto config = hml::default_config(hml::ExperimentId::appendix_checks);
      config.reps = appendix_reps;
      apply_common(config, appendix_seed, workers);
      return finish_experiment(hml::run_appendix_checks(config), out_dir,
                               format, dump_config);
    }

    if (*oracle) {
      const auto seed = oracle_seed.resolve();
      bool ok = true;
      for (auto interval : {hml::IntervalKind::unit, hml::IntervalKind::halfline,
                            hml::IntervalKind::realline}) {
        const auto report = hml::certify_product_formula(interval, oracle_kmax,
                                                         oracle_trials, seed);
        ok = ok && report.ok;
        std::cout << (report.ok ? "[pass] " : "[FAIL] ")
                  << hml::interval_name(interval) << ": " << report.checks
                  << " exact identities, " << report.trials << " trials, "
                  << report.seconds << " s";
        if (!report.ok)
          std::cout << "  counterexample: " << report.counterexample;
        std::cout << '\n';
      }
      std::cout << (ok ? "PASS" : "FAIL") << '\n';
      return ok ? 0 : 1;
    }

    if (*rerun) {
      std::ifstream in(rerun_config);
      if (!in) throw hml::ConfigError("cannot read " + rerun_config);
      std::stringstream buffer;
      buffer << in.rdbuf();
      const auto config = hml::config_from_json(buffer.str());
      return finish_experiment(hml::run_experiment(config), out_dir, format,
                               dump_config);
    }
  } catch (const hml::ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
