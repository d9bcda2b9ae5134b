#include "pba/lepton_mass.hpp"

#include "pba/linalg.hpp"

#include <json.hpp>

#include <cmath>
#include <fstream>

namespace pba {

namespace {

const std::vector<std::string> kLabels = {"e", "mu", "tau", "f"};

}  // namespace

double predicted_mass_ratio(int n, const MassModel& model) {
  if (n < 0 || n > 3) {
    throw std::domain_error("predicted_mass_ratio: generation index must be in 0..3");
  }
  if (!(model.inverse_alpha > 0.0)) {
    throw std::domain_error("predicted_mass_ratio: inverse_alpha must be positive");
  }
  double value = static_cast<double>(exact_binomial(3, n)) * std::ldexp(1.0, -n * n);
  for (int i = 0; i < n; ++i) value *= model.inverse_alpha;
  return value;
}

std::map<std::string, double> default_experimental_ratios() {
  return {{"mu", kMuonElectronRatio}, {"tau", kTauElectronRatio}};
}

MassTable build_mass_table(const MassModel& model,
                           const std::map<std::string, double>& experimental) {
  for (const auto& [label, ratio] : experimental) {
    if (label != "e" && label != "mu" && label != "tau") {
      throw std::invalid_argument("build_mass_table: unknown experimental label '" + label +
                                  "'");
    }
    if (!(ratio > 0.0)) {
      throw std::domain_error("build_mass_table: experimental ratio for '" + label +
                              "' must be positive");
    }
  }

  MassTable table;
  table.model = model;
  for (int n = 0; n <= 3; ++n) {
    MassRow row;
    row.n = n;
    row.label = kLabels[static_cast<std::size_t>(n)];
    row.predicted_ratio = predicted_mass_ratio(n, model);
    if (auto it = experimental.find(row.label); it != experimental.end()) {
      row.experimental_ratio = it->second;
      row.relative_deviation = std::abs(row.predicted_ratio - it->second) / it->second;
    }
    table.rows.push_back(std::move(row));
  }
  return table;
}

MassConfig load_mass_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_mass_config: cannot open '" + path + "'");
  nlohmann::json j;
  in >> j;
  if (!j.is_object()) throw std::invalid_argument("load_mass_config: top level must be an object");

  MassConfig config;
  for (const auto& [key, value] : j.items()) {
    if (key == "inverse_alpha") {
      if (!value.is_number()) {
        throw std::invalid_argument("load_mass_config: inverse_alpha must be a number");
      }
      config.inverse_alpha = value.get<double>();
    } else if (key == "experimental_ratios") {
      if (!value.is_object()) {
        throw std::invalid_argument("load_mass_config: experimental_ratios must be an object");
      }
      for (const auto& [label, ratio] : value.items()) {
        if (!ratio.is_number()) {
          throw std::invalid_argument("load_mass_config: ratio for '" + label +
                                      "' must be a number");
        }
        config.experimental_ratios[label] = ratio.get<double>();
      }
    } else {
      throw std::invalid_argument("load_mass_config: unknown key '" + key + "'");
    }
  }
  return config;
}

}  // namespace pba
