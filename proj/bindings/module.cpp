#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "csmabound/bounds.hpp"
#include "csmabound/channel.hpp"
#include "csmabound/codes.hpp"
#include "csmabound/geometry.hpp"
#include "csmabound/io.hpp"
#include "csmabound/planner.hpp"
#include "csmabound/validation.hpp"

namespace py = pybind11;
using namespace csmabound;

namespace {

Scenario scenario_from_name(const std::string& name, int m_flows) {
  if (name == "dense") return Scenario::dense();
  if (name == "flow") return Scenario::flow(m_flows);
  throw std::invalid_argument("scenario must be 'dense' or 'flow'");
}

std::vector<std::pair<double, double>> node_tuples(
    const InterferenceSetCover& cover) {
  std::vector<std::pair<double, double>> out;
  out.reserve(cover.nodes.size());
  for (const auto& node : cover.nodes) out.emplace_back(node.x, node.y);
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Distance-dependent worst-case interference and SIR bounds for CSMA "
      "networks";

  py::class_<RadioEnvironment>(m, "RadioEnvironment")
      .def(py::init<double, double, double, double, double>(), py::arg("p_t"),
           py::arg("eta"), py::arg("sigma_db"), py::arg("d1"), py::arg("d2"))
      .def_readonly("p_t", &RadioEnvironment::p_t)
      .def_readonly("eta", &RadioEnvironment::eta)
      .def_readonly("sigma_db", &RadioEnvironment::sigma_db)
      .def_readonly("d1", &RadioEnvironment::d1)
      .def_readonly("d2", &RadioEnvironment::d2);

  py::class_<RngStream>(m, "RngStream")
      .def(py::init<std::uint64_t>(), py::arg("seed"))
      .def("uniform", &RngStream::uniform)
      .def("normal", &RngStream::normal)
      .def("derive", py::overload_cast<std::uint64_t>(&RngStream::derive,
                                                      py::const_),
           py::arg("salt"))
      .def_property_readonly("seed", &RngStream::seed);

  py::class_<InterferenceSetCover>(m, "InterferenceSetCover")
      .def_property_readonly(
          "label",
          [](const InterferenceSetCover& c) {
            return std::string(to_string(c.label));
          })
      .def_property_readonly("nodes", &node_tuples)
      .def("__len__",
           [](const InterferenceSetCover& c) { return c.nodes.size(); })
      .def("to_json", &cover_to_json);

  m.def("build_config1", &build_config1, py::arg("env"));
  m.def("build_config2", &build_config2, py::arg("env"));
  m.def("build_intraflow", &build_intraflow, py::arg("env"));
  m.def("build_interflow_class1", &build_interflow_class1, py::arg("env"),
        py::arg("m_flows"));
  m.def("build_interflow_class2", &build_interflow_class2, py::arg("env"),
        py::arg("m_flows"), py::arg("receiver_distance") = 0.0);
  m.def(
      "validate_cover",
      [](const InterferenceSetCover& cover) {
        std::vector<std::string> out;
        for (const auto& v : validate_cover(cover)) {
          out.push_back(v.describe());
        }
        return out;
      },
      py::arg("cover"));
  m.def("max_interferer_count", &max_interferer_count, py::arg("env"),
        py::arg("override_count") = std::nullopt);
  m.def("chord_length", &chord_length, py::arg("d_r"), py::arg("env"));

  m.def("mean_power", &mean_power, py::arg("distance"), py::arg("env"));
  m.def("sample_power", &sample_power, py::arg("distance"), py::arg("env"),
        py::arg("rng"));
  m.def("to_db", &to_db, py::arg("linear"));
  m.def("from_db", &from_db, py::arg("db"));

  py::class_<SirDistribution>(m, "SirDistribution")
      .def_property_readonly("mean", &SirDistribution::mean)
      .def_property_readonly("std_dev", &SirDistribution::std_dev)
      .def_property_readonly("sample_count", &SirDistribution::sample_count)
      .def("prob_below", &SirDistribution::prob_below, py::arg("x"))
      .def("quantile", &SirDistribution::quantile, py::arg("p"))
      .def("samples", [](const SirDistribution& d) {
        return std::vector<double>(d.sorted_samples().begin(),
                                   d.sorted_samples().end());
      });

  m.def("correction_factor", &correction_factor, py::arg("cover_size"),
        py::arg("n_max"));
  m.def("interference_no_fading", &interference_no_fading, py::arg("d"),
        py::arg("cover"), py::arg("zeta"));
  m.def(
      "sample_sir",
      [](double d, const std::vector<InterferenceSetCover>& covers,
         double zeta, RngStream& rng, std::size_t n) {
        return sample_sir(d, covers, zeta, rng, n);
      },
      py::arg("d"), py::arg("covers"), py::arg("zeta"), py::arg("rng"),
      py::arg("n"));

  py::class_<BoundCurvePoint>(m, "BoundCurvePoint")
      .def_readonly("d", &BoundCurvePoint::d)
      .def_readonly("zeta", &BoundCurvePoint::zeta)
      .def_readonly("interference_mean", &BoundCurvePoint::interference_mean)
      .def_readonly("sir", &BoundCurvePoint::sir);

  py::class_<BoundCurve>(m, "BoundCurve")
      .def_readonly("points", &BoundCurve::points)
      .def_readonly("cover_labels", &BoundCurve::cover_labels)
      .def("to_csv",
           [](const BoundCurve& curve, std::optional<double> sir_th_db) {
             return curve_to_csv(curve, sir_th_db);
           },
           py::arg("sir_th_db") = std::nullopt);

  m.def(
      "bound_curve",
      [](const RadioEnvironment& env, const std::string& scenario,
         int m_flows, const std::vector<double>& grid, RngStream& rng,
         std::size_t n, std::optional<int> n_max_override,
         unsigned threads) {
        return bound_curve(env, scenario_from_name(scenario, m_flows), grid,
                           rng, n, n_max_override, threads);
      },
      py::arg("env"), py::arg("scenario"), py::arg("m_flows"),
      py::arg("grid"), py::arg("rng"), py::arg("n"),
      py::arg("n_max_override") = std::nullopt, py::arg("threads") = 0);
  m.def("select_dmax", &select_dmax, py::arg("curve"), py::arg("sir_th_db"),
        py::arg("gamma"));

  m.def(
      "interference_free_lower_bound",
      [](int n_codes, int n_max) {
        return interference_free_lower_bound({n_codes, n_max});
      },
      py::arg("n_codes"), py::arg("n_max"));
  m.def("select_code_count", &select_code_count, py::arg("n_max"),
        py::arg("kappa"));

  m.def("robots_for_flow", &robots_for_flow, py::arg("length"),
        py::arg("d_max"));

  m.def(
      "generate_random_cover",
      [](const RadioEnvironment& env,
         const std::vector<std::pair<double, double>>& candidates,
         RngStream& rng) {
        std::vector<NodePosition> points;
        points.reserve(candidates.size());
        for (const auto& [x, y] : candidates) points.push_back({x, y});
        return generate_random_cover(env, std::move(points), rng);
      },
      py::arg("env"), py::arg("candidates"), py::arg("rng"));
  m.def(
      "dense_candidates",
      [](const RadioEnvironment& env, double density, RngStream& rng) {
        std::vector<std::pair<double, double>> out;
        for (const auto& p : dense_candidates(env, density, rng)) {
          out.emplace_back(p.x, p.y);
        }
        return out;
      },
      py::arg("env"), py::arg("density"), py::arg("rng"));
}
