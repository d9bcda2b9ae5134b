#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pba {

inline constexpr double kDefaultInverseAlpha = 137.035999;
inline constexpr double kMuonElectronRatio = 206.7682830;
inline constexpr double kTauElectronRatio = 3477.23;

struct MassModel {
  double inverse_alpha = kDefaultInverseAlpha;
};

/// m_n / m_e = C(3,n) (1/2)^(n^2) (1/alpha)^n for generation index n = 0..3.
/// n = 0 is exactly 1. The power of 1/2 is an exact ldexp and the inverse
/// alpha powers are accumulated by repeated multiplication, so the table is
/// reproducible bit for bit.
double predicted_mass_ratio(int n, const MassModel& model);

struct MassRow {
  int n = 0;
  std::string label;  // e, mu, tau, f
  double predicted_ratio = 0.0;
  std::optional<double> experimental_ratio;
  std::optional<double> relative_deviation;  // |predicted - experimental| / experimental
};

struct MassTable {
  MassModel model;
  std::vector<MassRow> rows;
};

/// Shipped mass ratios: mu and tau relative to the electron.
std::map<std::string, double> default_experimental_ratios();

/// Rows n = 0..3. Experimental entries may cover e, mu, tau; the fourth row f
/// is a prediction with no measured counterpart and accepts none.
MassTable build_mass_table(const MassModel& model,
                           const std::map<std::string, double>& experimental =
                               default_experimental_ratios());

struct MassConfig {
  std::optional<double> inverse_alpha;
  std::map<std::string, double> experimental_ratios;
};

/// Reads {"inverse_alpha": real, "experimental_ratios": {label: real}} with
/// both keys optional.
MassConfig load_mass_config(const std::string& path);

}  // namespace pba
