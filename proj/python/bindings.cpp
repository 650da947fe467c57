#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <string>
#include <vector>

#include "deterrence/distribution.hpp"
#include "deterrence/errors.hpp"
#include "deterrence/game.hpp"
#include "deterrence/harness.hpp"
#include "deterrence/model.hpp"
#include "deterrence/paper_data.hpp"
#include "deterrence/roc.hpp"

namespace py = pybind11;
using namespace deterrence;

namespace {

ThresholdGrid make_grid(const std::string& mode, int samples) {
  ThresholdGrid grid = parse_grid_mode(mode) == GridMode::kExact ? ThresholdGrid::exact()
                                                                 : ThresholdGrid::replication(samples);
  grid.validate();
  return grid;
}

SumDistribution distribution(const WeightScheme& scheme, const std::vector<double>& probs) {
  return weighted_sum_distribution(scheme, probs);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Weighted-threshold coalition ROC analysis";
  m.attr("__version__") = std::string(kToolVersion);

  py::register_exception<IoError>(m, "IoError", PyExc_OSError);
  py::register_exception<ValidationError>(m, "ValidationError", PyExc_ValueError);

  py::class_<WeightScheme>(m, "WeightScheme")
      .def(py::init([](std::string name, std::vector<double> weights) {
             WeightScheme s{std::move(name), std::move(weights)};
             s.validate();
             return s;
           }),
           py::arg("name"), py::arg("weights"))
      .def_readonly("name", &WeightScheme::name)
      .def_readonly("weights", &WeightScheme::weights)
      .def_property_readonly("total", &WeightScheme::total)
      .def("__repr__", [](const WeightScheme& s) { return "WeightScheme('" + s.name + "')"; });

  py::class_<InfoEnvironment>(m, "InfoEnvironment")
      .def(py::init<std::string, std::vector<double>, std::vector<double>>(), py::arg("id"),
           py::arg("p"), py::arg("q"))
      .def_readonly("id", &InfoEnvironment::id)
      .def_readonly("p", &InfoEnvironment::p)
      .def_readonly("q", &InfoEnvironment::q)
      .def("__repr__", [](const InfoEnvironment& e) { return "InfoEnvironment('" + e.id + "')"; });

  py::class_<SumDistribution>(m, "SumDistribution")
      .def_readonly("support", &SumDistribution::support)
      .def_readonly("mass", &SumDistribution::mass)
      .def_property_readonly("total_mass", &SumDistribution::total_mass);

  py::class_<RocPoint>(m, "RocPoint")
      .def_readonly("fpr", &RocPoint::fpr)
      .def_readonly("tpr", &RocPoint::tpr)
      .def_readonly("tau", &RocPoint::tau);

  py::class_<RocCurve>(m, "RocCurve")
      .def_readonly("points", &RocCurve::points)
      .def_readonly("anchored", &RocCurve::anchored)
      .def_property_readonly("mode", [](const RocCurve& c) { return std::string(to_string(c.mode)); });

  py::class_<YoudenResult>(m, "YoudenResult")
      .def_readonly("j_star", &YoudenResult::j_star)
      .def_readonly("tau_star", &YoudenResult::tau_star)
      .def_readonly("taus", &YoudenResult::taus)
      .def_readonly("j_values", &YoudenResult::j_values);

  py::class_<AucStats>(m, "AucStats")
      .def_readonly("scheme", &AucStats::scheme)
      .def_readonly("mean", &AucStats::mean)
      .def_readonly("min", &AucStats::min)
      .def_readonly("max", &AucStats::max);

  py::class_<JStats>(m, "JStats")
      .def_readonly("scheme", &JStats::scheme)
      .def_readonly("mean_j", &JStats::mean_j)
      .def_readonly("min_j", &JStats::min_j)
      .def_readonly("max_j", &JStats::max_j)
      .def_readonly("mean_tau_star", &JStats::mean_tau_star);

  py::class_<MonteCarloEstimate>(m, "MonteCarloEstimate")
      .def_readonly("estimate", &MonteCarloEstimate::estimate)
      .def_readonly("standard_error", &MonteCarloEstimate::standard_error)
      .def_readonly("trials", &MonteCarloEstimate::trials);

  py::class_<AttackAssessment>(m, "AttackAssessment")
      .def_readonly("expected_payoff", &AttackAssessment::expected_payoff)
      .def_readonly("attacks", &AttackAssessment::attacks)
      .def_readonly("deterrence_threshold", &AttackAssessment::deterrence_threshold)
      .def_readonly("retaliation_prob", &AttackAssessment::retaliation_prob);

  py::class_<AverageRates>(m, "AverageRates")
      .def_readonly("mean_retaliation", &AverageRates::mean_retaliation)
      .def_readonly("mean_false_alarm", &AverageRates::mean_false_alarm);

  m.def("paper_schemes", &paper_schemes, py::return_value_policy::copy);
  m.def("find_scheme", &find_paper_scheme, py::arg("name"), py::return_value_policy::copy);
  m.def("paper_environments", &paper_environments, py::return_value_policy::copy);
  m.def("find_environment", &find_paper_environment, py::arg("id"), py::return_value_policy::copy);
  m.def("conclusion_battery", &conclusion_battery);

  m.def("weighted_sum_distribution", &distribution, py::arg("scheme"), py::arg("probs"));
  m.def("tail_probability", &tail_probability, py::arg("dist"), py::arg("tau"));
  m.def("binomial_tail", &binomial_tail, py::arg("n"), py::arg("prob"), py::arg("tau"));
  m.def(
      "monte_carlo_tail",
      [](const WeightScheme& s, const std::vector<double>& probs, double tau, std::uint64_t trials,
         std::uint64_t seed) { return monte_carlo_tail(s, probs, tau, trials, seed); },
      py::arg("scheme"), py::arg("probs"), py::arg("tau"), py::arg("trials"), py::arg("seed") = 42);

  m.def(
      "roc_curve",
      [](const WeightScheme& s, const InfoEnvironment& e, const std::string& mode, int samples) {
        return roc_curve(s, e, make_grid(mode, samples));
      },
      py::arg("scheme"), py::arg("env"), py::arg("mode") = "replication",
      py::arg("samples") = kDefaultSamples);
  m.def("auc_trapezoid", &auc_trapezoid, py::arg("curve"));
  m.def(
      "auc_rank",
      [](const WeightScheme& s, const InfoEnvironment& e) {
        const auto d = conditional_distributions(s, e);
        return auc_exact(d.aggressive, d.benign);
      },
      py::arg("scheme"), py::arg("env"));
  m.def(
      "youden",
      [](const WeightScheme& s, const InfoEnvironment& e, const std::string& mode, int samples) {
        return youden(s, e, make_grid(mode, samples));
      },
      py::arg("scheme"), py::arg("env"), py::arg("mode") = "replication",
      py::arg("samples") = kDefaultSamples);
  m.def(
      "auc_statistics",
      [](const WeightScheme& s, const std::vector<InfoEnvironment>& envs, const std::string& mode,
         int samples) { return auc_statistics(s, envs, make_grid(mode, samples)); },
      py::arg("scheme"), py::arg("envs"), py::arg("mode") = "replication",
      py::arg("samples") = kDefaultSamples);
  m.def(
      "j_statistics",
      [](const WeightScheme& s, const std::vector<InfoEnvironment>& envs, const std::string& mode,
         int samples) { return j_statistics(s, envs, make_grid(mode, samples)); },
      py::arg("scheme"), py::arg("envs"), py::arg("mode") = "replication",
      py::arg("samples") = kDefaultSamples);

  m.def(
      "assess_attack",
      [](double r, double benefit, double cost, double prior) {
        return assess_attack(r, GameParams{benefit, cost, prior});
      },
      py::arg("retaliation_prob"), py::arg("benefit") = 1.0, py::arg("cost") = 1.0,
      py::arg("prior") = 0.5);
  m.def("breakeven_benefit_ratio", &breakeven_benefit_ratio, py::arg("retaliation_prob"));
  m.def(
      "average_rates",
      [](const WeightScheme& s, double tau, const std::vector<InfoEnvironment>& envs) {
        return average_rates(s, tau, envs);
      },
      py::arg("scheme"), py::arg("tau"), py::arg("envs"));

  // Harness entry points return the JSON run report as a string.
  m.def(
      "run_config",
      [](const std::string& config_json, const std::filesystem::path& out) {
        const auto cfg = config_from_json(nlohmann::json::parse(config_json, nullptr, true, true));
        py::gil_scoped_release release;
        return report_to_json(run_config(cfg, out)).dump();
      },
      py::arg("config_json"), py::arg("output_dir"));
  m.def(
      "reproduce_paper",
      [](const std::filesystem::path& out, int samples, unsigned jobs) {
        py::gil_scoped_release release;
        return report_to_json(reproduce_paper(out, samples, jobs)).dump();
      },
      py::arg("output_dir"), py::arg("samples") = kDefaultSamples, py::arg("jobs") = 0);
}
