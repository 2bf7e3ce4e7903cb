#ifndef CSMABOUND_IO_HPP_
#define CSMABOUND_IO_HPP_

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "csmabound/bounds.hpp"
#include "csmabound/planner.hpp"
#include "csmabound/validation.hpp"

namespace csmabound {

// Rounds to `digits` significant decimal digits (serialization precision).
double round_sig(double value, int digits);

// {"label": ..., "d1": ..., "d2": ..., "nodes": [[x, y], ...]}, coordinates
// at 9 significant digits.
std::string cover_to_json(const InterferenceSetCover& cover);

// d_m,p_int_mean_linear,sir_mean_db,sir_std_db,sir_q10_db,sir_q50_db with an
// outage_prob_at_threshold column when a threshold is supplied.
std::string curve_to_csv(const BoundCurve& curve,
                         std::optional<double> sir_th_db = std::nullopt);

// sir_th_db,dmax_dense_m,dmax_flow_m,robots_dense,robots_flow,saving_fraction
// with "infeasible" in the d_max cells of infeasible rows.
std::string comparison_to_csv(std::span<const BoundComparisonRow> rows);

std::string plan_to_json(const DeploymentPlan& plan);

// d_m,p_below_mean,p_below_mean_minus_std,p_below_ratio_of_means,
// dominance_violations.
std::string report_to_csv(const ValidationReport& report);

std::string report_to_json(const ValidationReport& report);

std::string code_selection_to_json(int n_max, double kappa,
                                   int selected_n_codes,
                                   double bound_at_selection);

// Writes via a temp file and renames, so failures never leave partial output.
void write_file_atomic(const std::string& path, std::string_view content);

}  // namespace csmabound

#endif  // CSMABOUND_IO_HPP_
