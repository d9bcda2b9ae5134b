#include "pba/json_io.hpp"

#include <cmath>

namespace pba {

using nlohmann::json;

json matrix_to_json(const CMatrix& x) {
  detail::require_square(x, "matrix_to_json");
  json data = json::array();
  for (Eigen::Index i = 0; i < x.rows(); ++i) {
    for (Eigen::Index j = 0; j < x.cols(); ++j) {
      data.push_back(json::array({x(i, j).real(), x(i, j).imag()}));
    }
  }
  return json{{"dim", x.rows()}, {"data", std::move(data)}};
}

CMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("data")) {
    throw std::invalid_argument("matrix_from_json: expected {dim, data}");
  }
  if (!j["dim"].is_number_integer() || j["dim"].get<long long>() < 1) {
    throw std::invalid_argument("matrix_from_json: dim must be a positive integer");
  }
  const auto n = j["dim"].get<Eigen::Index>();
  const auto& data = j["data"];
  if (!data.is_array() || data.size() != static_cast<std::size_t>(n * n)) {
    throw std::invalid_argument("matrix_from_json: data must hold dim^2 entries");
  }

  CMatrix x(n, n);
  std::size_t idx = 0;
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index jj = 0; jj < n; ++jj, ++idx) {
      const auto& e = data[idx];
      if (!e.is_array() || e.size() != 2 || !e[0].is_number() || !e[1].is_number()) {
        throw std::invalid_argument("matrix_from_json: entries must be [re, im] pairs");
      }
      const double re = e[0].get<double>();
      const double im = e[1].get<double>();
      if (!std::isfinite(re) || !std::isfinite(im)) {
        throw std::invalid_argument("matrix_from_json: non-finite entry");
      }
      x(i, jj) = Complex(re, im);
    }
  }
  return x;
}

std::string dump_canonical(const json& j) { return j.dump(2) + "\n"; }

json relations_to_json(const std::vector<RelationResidual>& relations) {
  json out = json::array();
  for (const auto& rel : relations) {
    out.push_back({{"name", rel.name},
                   {"residual", rel.residual},
                   {"scale", rel.scale},
                   {"empirical", rel.empirical}});
  }
  return out;
}

json susy_report_to_json(const SusyAlgebraReport& report) {
  json relations = json::array();
  for (const auto& rel : report.relations) {
    relations.push_back({{"relation_name", rel.name},
                         {"interior_residual", rel.interior_residual},
                         {"boundary_residual", rel.boundary_residual},
                         {"scale", rel.scale}});
  }
  return json{{"s", report.s}, {"k", report.k}, {"relations", std::move(relations)}};
}

json structure_constants_to_json(const StructureConstants& constants, double threshold) {
  json entries = json::array();
  for (std::size_t a = 0; a < constants.size; ++a) {
    for (std::size_t b = 0; b < constants.size; ++b) {
      for (std::size_t c = 0; c < constants.size; ++c) {
        const double v = constants.at(a, b, c);
        if (std::abs(v) > threshold) {
          entries.push_back({{"a", a}, {"b", b}, {"c", c}, {"value", v}});
        }
      }
    }
  }
  return json{{"size", constants.size},
              {"threshold", threshold},
              {"entries", std::move(entries)}};
}

json mass_table_to_json(const MassTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    json r{{"n", row.n}, {"label", row.label}, {"predicted_ratio", row.predicted_ratio}};
    if (row.experimental_ratio) r["experimental_ratio"] = *row.experimental_ratio;
    if (row.relative_deviation) r["relative_deviation"] = *row.relative_deviation;
    rows.push_back(std::move(r));
  }
  return json{{"inverse_alpha", table.model.inverse_alpha}, {"rows", std::move(rows)}};
}

}  // namespace pba
