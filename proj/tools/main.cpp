// Command-line front end: parameter-sweep runs of the interference/SIR bound
// engine with CSV/JSON emission.

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "csmabound/bounds.hpp"
#include "csmabound/codes.hpp"
#include "csmabound/geometry.hpp"
#include "csmabound/io.hpp"
#include "csmabound/planner.hpp"
#include "csmabound/validation.hpp"

namespace {

using nlohmann::json;

struct RunConfig {
  double p_t = 1.0;
  double eta = 2.2;
  double sigma_db = 2.0;
  double d1_m = 6.0;
  double d2_m = 18.0;
  std::string scenario = "dense";
  int m_flows = 3;
  double grid_min_m = 1.0;
  double grid_max_m = -1.0;  // default: d1 - 1
  double grid_step_m = 0.1;
  std::uint64_t n_samples = 50000;
  std::uint64_t bound_samples = 50000;
  int trials = 1000;
  std::uint64_t seed = 1;
  double sir_th_db = 0.0;
  double gamma = 0.1;
  double kappa = 0.9;
  int n_codes = 10;
  int n_max = 0;           // codes: max active nodes; 0 derives from geometry
  int n_max_override = 0;  // geometry: pack-problem override; 0 = none
  double candidate_density = 0.0;  // 0 = expected 1000 candidates
  double points_per_meter = 10.0;
  double path_length_m = 100.0;
  double sir_th_min_db = -5.0;
  double sir_th_max_db = 5.0;
  double sir_th_step_db = 1.0;
  unsigned threads = 0;
  std::string out;
  std::string flows_file;
  std::string covers_out;
  bool compare = false;
};

struct KeyBinding {
  CLI::Option* option = nullptr;
  std::function<void(const json&)> apply;
};

class ConfiguredCommand {
 public:
  ConfiguredCommand(CLI::App& app, const std::string& name,
                    const std::string& description)
      : cmd_(app.add_subcommand(name, description)) {
    cmd_->add_option("--config", config_path_,
                     "JSON config file with flat keys mirroring the flags");
    bind("--seed", cfg_.seed, "RNG seed (same seed, same bytes out)");
    bind("--p_t", cfg_.p_t, "transmit power, linear");
    bind("--eta", cfg_.eta, "path-loss exponent");
    bind("--sigma_db", cfg_.sigma_db, "fading std dev, dB");
    bind("--d1_m", cfg_.d1_m, "contention-region radius, m");
    bind("--d2_m", cfg_.d2_m, "transition-region outer radius, m");
    bind("--scenario", cfg_.scenario, "dense | flow");
    bind("--m_flows", cfg_.m_flows, "concurrent flows for the flow scenario");
    bind("--grid_min_m", cfg_.grid_min_m, "distance grid start, m");
    bind("--grid_max_m", cfg_.grid_max_m, "distance grid end, m (default d1-1)");
    bind("--grid_step_m", cfg_.grid_step_m, "distance grid step, m");
    bind("--n_samples", cfg_.n_samples, "Monte Carlo samples per grid point");
    bind("--bound_samples", cfg_.bound_samples,
         "samples for the bound side of validation");
    bind("--trials", cfg_.trials, "random covers per grid point");
    bind("--sir_th_db", cfg_.sir_th_db, "SIR threshold, dB");
    bind("--gamma", cfg_.gamma, "outage probability target, (0, 0.5]");
    bind("--kappa", cfg_.kappa, "interference-free probability target");
    bind("--n_codes", cfg_.n_codes, "orthogonal codes in use");
    bind("--n_max", cfg_.n_max, "max active nodes for code selection");
    bind("--n_max_override", cfg_.n_max_override,
         "override for the max simultaneous-interferer count");
    bind("--candidate_density", cfg_.candidate_density,
         "validation candidate density, points per m^2");
    bind("--points_per_meter", cfg_.points_per_meter,
         "flow-scenario candidate spacing");
    bind("--path_length_m", cfg_.path_length_m,
         "path length for bound comparison");
    bind("--sir_th_min_db", cfg_.sir_th_min_db, "comparison threshold start");
    bind("--sir_th_max_db", cfg_.sir_th_max_db, "comparison threshold end");
    bind("--sir_th_step_db", cfg_.sir_th_step_db, "comparison threshold step");
    bind("--threads", cfg_.threads, "worker threads (0 = hardware)");
    bind("--out", cfg_.out, "output path");
  }

  CLI::App* cmd() { return cmd_; }
  RunConfig& config() { return cfg_; }

  bool flag_given(const std::string& name) const {
    const auto it = bindings_.find(name);
    return it != bindings_.end() && it->second.option->count() > 0;
  }

  bool key_given(const std::string& name) const {
    return flag_given(name) || config_keys_.count(name) > 0;
  }

  // Applies config-file values underneath any explicitly passed flags.
  void merge_config_file() {
    if (config_path_.empty()) return;
    std::ifstream in(config_path_);
    if (!in) throw std::runtime_error("cannot read config " + config_path_);
    json doc = json::parse(in);
    for (const auto& [key, value] : doc.items()) {
      const auto it = bindings_.find("--" + key);
      if (it == bindings_.end()) {
        throw std::runtime_error("unknown config key: " + key);
      }
      config_keys_.insert("--" + key);
      if (it->second.option->count() == 0) {
        it->second.apply(value);
      }
    }
  }

 private:
  template <typename T>
  void bind(const std::string& flag, T& field, const std::string& help) {
    KeyBinding binding;
    binding.option = cmd_->add_option(flag, field, help);
    binding.apply = [&field](const json& value) { field = value.get<T>(); };
    bindings_.emplace(flag, std::move(binding));
  }

  CLI::App* cmd_;
  RunConfig cfg_;
  std::string config_path_;
  std::map<std::string, KeyBinding> bindings_;
  std::set<std::string> config_keys_;
};

csmabound::RadioEnvironment make_env(const RunConfig& cfg) {
  return {cfg.p_t, cfg.eta, cfg.sigma_db, cfg.d1_m, cfg.d2_m};
}

csmabound::Scenario make_scenario(const RunConfig& cfg) {
  if (cfg.scenario == "dense") return csmabound::Scenario::dense();
  if (cfg.scenario == "flow") return csmabound::Scenario::flow(cfg.m_flows);
  throw std::runtime_error("scenario must be 'dense' or 'flow'");
}

std::vector<double> make_distance_grid(const RunConfig& cfg) {
  const double hi =
      cfg.grid_max_m > 0.0 ? cfg.grid_max_m : cfg.d1_m - 1.0;
  return csmabound::make_grid(cfg.grid_min_m, hi, cfg.grid_step_m);
}

std::optional<int> geometry_override(const RunConfig& cfg) {
  if (cfg.n_max_override > 0) return cfg.n_max_override;
  return std::nullopt;
}

void emit_covers(const RunConfig& cfg, const csmabound::Scenario& scenario) {
  if (cfg.covers_out.empty()) return;
  const auto sc = csmabound::scenario_covers(
      make_env(cfg), scenario, make_distance_grid(cfg).front(),
      geometry_override(cfg));
  json docs = json::array();
  for (const auto& cover : sc.covers) {
    docs.push_back(json::parse(csmabound::cover_to_json(cover)));
  }
  csmabound::write_file_atomic(cfg.covers_out, docs.dump(2) + "\n");
}

int run_bound(ConfiguredCommand& cc) {
  RunConfig& cfg = cc.config();
  const auto env = make_env(cfg);
  const auto scenario = make_scenario(cfg);
  const auto grid = make_distance_grid(cfg);
  csmabound::RngStream rng(cfg.seed);
  const auto curve = csmabound::bound_curve(env, scenario, grid, rng,
                                            cfg.n_samples,
                                            geometry_override(cfg),
                                            cfg.threads);
  std::optional<double> threshold;
  if (cc.key_given("--sir_th_db")) threshold = cfg.sir_th_db;
  if (cfg.out.empty()) cfg.out = "bound_curve.csv";
  csmabound::write_file_atomic(cfg.out, csmabound::curve_to_csv(curve,
                                                                threshold));
  emit_covers(cfg, scenario);
  if (threshold && !csmabound::outage_monotone(curve, *threshold)) {
    std::cerr << "warning: outage probability is not monotone in d; "
                 "d_max selection uses the literal highest qualifying point\n";
  }
  std::cout << "wrote " << curve.points.size() << " grid points to "
            << cfg.out << "\n";
  return 0;
}

int run_dmax(ConfiguredCommand& cc) {
  RunConfig& cfg = cc.config();
  const auto env = make_env(cfg);
  const auto scenario = make_scenario(cfg);
  const auto grid = make_distance_grid(cfg);
  csmabound::RngStream rng(cfg.seed);
  const auto curve = csmabound::bound_curve(env, scenario, grid, rng,
                                            cfg.n_samples,
                                            geometry_override(cfg),
                                            cfg.threads);
  if (!csmabound::outage_monotone(curve, cfg.sir_th_db)) {
    std::cerr << "warning: outage probability is not monotone in d\n";
  }
  const auto d_max = csmabound::select_dmax(curve, cfg.sir_th_db, cfg.gamma);
  if (!cfg.out.empty()) {
    csmabound::write_file_atomic(
        cfg.out, csmabound::curve_to_csv(curve, cfg.sir_th_db));
  }
  if (d_max) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", *d_max);
    std::cout << "d_max_m " << buf << "\n";
  } else {
    std::cout << "infeasible\n";
  }
  return 0;
}

int run_codes(ConfiguredCommand& cc) {
  RunConfig& cfg = cc.config();
  int n_max = cfg.n_max;
  if (n_max <= 0) {
    n_max = csmabound::max_interferer_count(make_env(cfg),
                                            geometry_override(cfg)) +
            1;
  }
  const int selected = csmabound::select_code_count(n_max, cfg.kappa);
  const double bound =
      csmabound::interference_free_lower_bound({selected, n_max});
  if (cfg.out.empty()) cfg.out = "code_selection.json";
  csmabound::write_file_atomic(
      cfg.out,
      csmabound::code_selection_to_json(n_max, cfg.kappa, selected, bound));
  std::cout << "selected_n_codes " << selected << "\n";
  return 0;
}

std::vector<csmabound::FlowSpec> read_flows(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read flows file " + path);
  const json doc = json::parse(in);
  std::vector<csmabound::FlowSpec> flows;
  for (const auto& item : doc) {
    const auto& src = item.at("source");
    const auto& snk = item.at("sink");
    flows.push_back({{src.at(0).get<double>(), src.at(1).get<double>()},
                     {snk.at(0).get<double>(), snk.at(1).get<double>()}});
  }
  if (flows.empty()) throw std::runtime_error("flows file lists no flows");
  return flows;
}

int run_plan(ConfiguredCommand& cc) {
  RunConfig& cfg = cc.config();
  const auto env = make_env(cfg);
  const auto grid = make_distance_grid(cfg);
  csmabound::RngStream rng(cfg.seed);
  if (cfg.compare) {
    const auto thresholds = csmabound::make_grid(
        cfg.sir_th_min_db, cfg.sir_th_max_db, cfg.sir_th_step_db);
    const auto rows = csmabound::compare_bounds(
        env, thresholds, cfg.gamma, cfg.path_length_m, cfg.m_flows, grid,
        rng, cfg.n_samples, geometry_override(cfg), cfg.threads);
    if (cfg.out.empty()) cfg.out = "bound_comparison.csv";
    csmabound::write_file_atomic(cfg.out, csmabound::comparison_to_csv(rows));
    double best = 0.0;
    for (const auto& row : rows) {
      if (row.saving_fraction) best = std::max(best, *row.saving_fraction);
    }
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", best);
    std::cout << "wrote " << rows.size() << " rows to " << cfg.out
              << " (max saving " << buf << ")\n";
    return 0;
  }
  if (cfg.flows_file.empty()) {
    throw std::runtime_error("plan requires --flows FILE (or --compare)");
  }
  const auto flows = read_flows(cfg.flows_file);
  const auto plan = csmabound::plan_deployment(
      flows, env, cfg.sir_th_db, cfg.gamma, grid, rng, cfg.n_samples,
      geometry_override(cfg), cfg.threads);
  if (cfg.out.empty()) cfg.out = "deployment_plan.json";
  csmabound::write_file_atomic(cfg.out, csmabound::plan_to_json(plan));
  std::cout << "total_robots " << plan.total << "\n";
  return 0;
}

int run_validate(ConfiguredCommand& cc) {
  RunConfig& cfg = cc.config();
  const auto env = make_env(cfg);
  const auto scenario = make_scenario(cfg);
  const auto grid = make_distance_grid(cfg);
  csmabound::RngStream rng(cfg.seed);
  csmabound::ValidationOptions options;
  options.candidate_density = cfg.candidate_density;
  options.points_per_meter = cfg.points_per_meter;
  options.bound_samples = cfg.bound_samples;
  options.n_max_override = geometry_override(cfg);
  options.threads = cfg.threads;
  const auto report = csmabound::run_validation(
      env, scenario, grid, cfg.trials, rng, cfg.n_samples, options);
  if (cfg.out.empty()) cfg.out = "validation.csv";
  std::string json_out = cfg.out;
  if (json_out.size() > 4 && json_out.ends_with(".csv")) {
    json_out.replace(json_out.size() - 4, 4, ".json");
  } else {
    json_out += ".json";
  }
  csmabound::write_file_atomic(cfg.out, csmabound::report_to_csv(report));
  csmabound::write_file_atomic(json_out, csmabound::report_to_json(report));
  double mean_violation = 0.0;
  long dominance = 0;
  for (const auto& point : report.per_d) {
    mean_violation += point.p_below_mean;
    dominance += point.dominance_violations;
  }
  mean_violation /= static_cast<double>(report.per_d.size());
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", mean_violation);
  std::cout << "avg_p_below_mean " << buf << " dominance_violations "
            << dominance << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Distance-dependent worst-case interference and SIR bounds for CSMA "
      "networks, with d_max selection, orthogonal-code analysis, relay "
      "planning and a randomized validation harness"};
  app.require_subcommand(1);

  ConfiguredCommand bound(app, "bound",
                          "compute a distance-dependent SIR bound curve");
  ConfiguredCommand dmax(app, "dmax",
                         "select the largest link spacing meeting an outage "
                         "target");
  ConfiguredCommand codes(app, "codes",
                          "select the orthogonal-code count for "
                          "interference-free operation");
  ConfiguredCommand plan(app, "plan",
                         "plan relay-robot counts for a set of flows");
  ConfiguredCommand validate(app, "validate",
                             "measure bound violations over random "
                             "interferer sets");
  plan.cmd()->add_option("--flows", plan.config().flows_file,
                         "JSON file with [{\"source\":[x,y],\"sink\":[x,y]}]");
  plan.cmd()->add_flag("--compare", plan.config().compare,
                       "emit the dense-vs-flow robot comparison table");
  bound.cmd()->add_option("--covers-out", bound.config().covers_out,
                          "also dump the scenario covers as JSON");

  CLI11_PARSE(app, argc, argv);

  try {
    for (ConfiguredCommand* cc :
         {&bound, &dmax, &codes, &plan, &validate}) {
      if (cc->cmd()->parsed()) cc->merge_config_file();
    }
    if (bound.cmd()->parsed()) return run_bound(bound);
    if (dmax.cmd()->parsed()) return run_dmax(dmax);
    if (codes.cmd()->parsed()) return run_codes(codes);
    if (plan.cmd()->parsed()) return run_plan(plan);
    if (validate.cmd()->parsed()) return run_validate(validate);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
