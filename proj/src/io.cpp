#include "csmabound/io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace csmabound {
namespace {

using nlohmann::json;

std::string format_g9(double value) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", value);
  return buf;
}

json env_to_json(const RadioEnvironment& env) {
  return json{{"p_t", round_sig(env.p_t, 9)},
              {"eta", round_sig(env.eta, 9)},
              {"sigma_db", round_sig(env.sigma_db, 9)},
              {"d1_m", round_sig(env.d1, 9)},
              {"d2_m", round_sig(env.d2, 9)}};
}

}  // namespace

double round_sig(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return value;
  char buf[48];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, value);
  return std::strtod(buf, nullptr);
}

std::string cover_to_json(const InterferenceSetCover& cover) {
  json nodes = json::array();
  for (const auto& node : cover.nodes) {
    nodes.push_back({round_sig(node.x, 9), round_sig(node.y, 9)});
  }
  const json doc{{"label", std::string(to_string(cover.label))},
                 {"d1", round_sig(cover.env.d1, 9)},
                 {"d2", round_sig(cover.env.d2, 9)},
                 {"nodes", nodes}};
  return doc.dump(2) + "\n";
}

std::string curve_to_csv(const BoundCurve& curve,
                         std::optional<double> sir_th_db) {
  std::string out =
      "d_m,p_int_mean_linear,sir_mean_db,sir_std_db,sir_q10_db,sir_q50_db";
  if (sir_th_db) out += ",outage_prob_at_threshold";
  out += "\n";
  for (const auto& point : curve.points) {
    out += format_g9(point.d);
    out += ',';
    out += format_g9(point.interference_mean);
    out += ',';
    out += format_g9(point.sir.mean());
    out += ',';
    out += format_g9(point.sir.std_dev());
    out += ',';
    out += format_g9(point.sir.quantile(0.10));
    out += ',';
    out += format_g9(point.sir.quantile(0.50));
    if (sir_th_db) {
      out += ',';
      out += format_g9(point.sir.prob_below(*sir_th_db));
    }
    out += '\n';
  }
  return out;
}

std::string comparison_to_csv(std::span<const BoundComparisonRow> rows) {
  std::string out =
      "sir_th_db,dmax_dense_m,dmax_flow_m,robots_dense,robots_flow,"
      "saving_fraction\n";
  for (const auto& row : rows) {
    out += format_g9(row.sir_th_db);
    out += ',';
    out += row.dmax_dense_m ? format_g9(*row.dmax_dense_m) : "infeasible";
    out += ',';
    out += row.dmax_flow_m ? format_g9(*row.dmax_flow_m) : "infeasible";
    out += ',';
    out += row.robots_dense ? std::to_string(*row.robots_dense) : "";
    out += ',';
    out += row.robots_flow ? std::to_string(*row.robots_flow) : "";
    out += ',';
    out += row.saving_fraction ? format_g9(*row.saving_fraction) : "";
    out += '\n';
  }
  return out;
}

std::string plan_to_json(const DeploymentPlan& plan) {
  json flows = json::array();
  for (const auto& entry : plan.per_flow) {
    flows.push_back({{"source", {round_sig(entry.flow.source.x, 9),
                                 round_sig(entry.flow.source.y, 9)}},
                     {"sink", {round_sig(entry.flow.sink.x, 9),
                               round_sig(entry.flow.sink.y, 9)}},
                     {"length_m", round_sig(entry.flow.length(), 9)},
                     {"d_max_m", round_sig(entry.d_max, 9)},
                     {"robots", entry.robots}});
  }
  const json doc{{"flows", flows},
                 {"total_robots", plan.total},
                 {"d_max_m", round_sig(plan.d_max, 9)},
                 {"relay_convention", "ceil(length/d_max)-1"}};
  return doc.dump(2) + "\n";
}

std::string report_to_csv(const ValidationReport& report) {
  std::string out =
      "d_m,p_below_mean,p_below_mean_minus_std,p_below_ratio_of_means,"
      "dominance_violations\n";
  for (const auto& point : report.per_d) {
    out += format_g9(point.d);
    out += ',';
    out += format_g9(point.p_below_mean);
    out += ',';
    out += format_g9(point.p_below_mean_minus_std);
    out += ',';
    out += format_g9(point.p_below_ratio_of_means);
    out += ',';
    out += std::to_string(point.dominance_violations);
    out += '\n';
  }
  return out;
}

std::string report_to_json(const ValidationReport& report) {
  json per_d = json::array();
  for (const auto& point : report.per_d) {
    per_d.push_back(
        {{"d_m", round_sig(point.d, 9)},
         {"p_below_mean", round_sig(point.p_below_mean, 9)},
         {"p_below_mean_minus_std",
          round_sig(point.p_below_mean_minus_std, 9)},
         {"p_below_ratio_of_means",
          round_sig(point.p_below_ratio_of_means, 9)},
         {"dominance_violations", point.dominance_violations}});
  }
  const json doc{{"scenario", report.scenario.name()},
                 {"env", env_to_json(report.env)},
                 {"trials", report.trials},
                 {"n_samples", report.n_samples},
                 {"seed", report.seed},
                 {"per_d", per_d}};
  return doc.dump(2) + "\n";
}

std::string code_selection_to_json(int n_max, double kappa,
                                   int selected_n_codes,
                                   double bound_at_selection) {
  const json doc{{"n_max", n_max},
                 {"kappa", round_sig(kappa, 9)},
                 {"selected_n_codes", selected_n_codes},
                 {"bound_at_selection", round_sig(bound_at_selection, 9)}};
  return doc.dump(2) + "\n";
}

void write_file_atomic(const std::string& path, std::string_view content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp + " for writing");
    out.write(content.data(),
              static_cast<std::streamsize>(content.size()));
    if (!out) throw std::runtime_error("write failed for " + tmp);
  }
  if (std::rename(tmp.c_str(), path.c_str()) != 0) {
    std::remove(tmp.c_str());
    throw std::runtime_error("cannot rename " + tmp + " to " + path);
  }
}

}  // namespace csmabound
