#include <cmath>
#include <string>

#include "rwci/cli.hpp"
#include "rwci/errors.hpp"

namespace rwci::cli {

namespace {

Eigen::MatrixXd parse_matrix(const nlohmann::json& doc, const char* key) {
  if (!doc.contains(key)) throw InputError(std::string("missing field \"") + key + "\"");
  const auto& rows = doc.at(key);
  if (!rows.is_array() || rows.empty()) {
    throw InputError(std::string("\"") + key + "\" must be a nonempty array of rows");
  }
  const std::size_t ncols = rows.front().is_array() ? rows.front().size() : 0;
  if (ncols == 0) throw InputError(std::string("\"") + key + "\" rows must be nonempty arrays");

  Eigen::MatrixXd m(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(ncols));
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (!row.is_array() || row.size() != ncols) {
      throw InputError(std::string("\"") + key + "\" is ragged at row " + std::to_string(i));
    }
    for (std::size_t j = 0; j < ncols; ++j) {
      if (!row[j].is_number()) {
        throw InputError(std::string("\"") + key + "\" has a non-numeric entry at (" +
                         std::to_string(i) + ", " + std::to_string(j) + ")");
      }
      const double v = row[j].get<double>();
      if (!std::isfinite(v)) throw InputError(std::string("\"") + key + "\" has a non-finite entry");
      m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = v;
    }
  }
  return m;
}

const char* comparison_name(oracle::Comparison c) {
  switch (c) {
    case oracle::Comparison::kEqual:
      return "abs_diff_le_tol";
    case oracle::Comparison::kAtLeast:
      return "oracle_ge_closed_minus_tol";
    case oracle::Comparison::kAtMost:
      return "oracle_le_closed_plus_tol";
  }
  return "unknown";
}

}  // namespace

std::string_view tool_version() { return RWCI_VERSION; }

JointGaussianCov parse_covariance(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("covariance file must hold a JSON object");
  const bool blocks = doc.contains("kx") || doc.contains("ky") || doc.contains("kxy");
  const bool joint = doc.contains("joint");
  if (blocks == joint) {
    throw InputError("covariance file needs either {kx, ky, kxy} or {joint, dim_x}");
  }
  if (blocks) {
    return JointGaussianCov::from_blocks(parse_matrix(doc, "kx"), parse_matrix(doc, "ky"),
                                         parse_matrix(doc, "kxy"));
  }
  if (!doc.contains("dim_x") || !doc.at("dim_x").is_number_integer()) {
    throw InputError("\"dim_x\" must be an integer");
  }
  return JointGaussianCov::from_joint(parse_matrix(doc, "joint"),
                                      doc.at("dim_x").get<Eigen::Index>());
}

Json encode_number(double v) {
  if (std::isfinite(v)) return v;
  if (std::isnan(v)) return "nan";
  return v > 0 ? "inf" : "-inf";
}

double decode_number(const Json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf") return std::numeric_limits<double>::infinity();
    if (s == "-inf") return -std::numeric_limits<double>::infinity();
    if (s == "nan") return std::numeric_limits<double>::quiet_NaN();
  }
  throw InputError("expected a number or \"inf\"");
}

Json encode_allocation(const Allocation& a) {
  Json gammas = Json::array();
  for (double g : a.gammas) gammas.push_back(encode_number(g));
  Json saturated = Json::array();
  for (bool s : a.saturated) saturated.push_back(s);
  Json out;
  out["gammas"] = std::move(gammas);
  out["water_level"] = encode_number(a.water_level_beta);
  out["saturated"] = std::move(saturated);
  out["slack"] = encode_number(a.slack);
  out["total_value"] = encode_number(a.total_value);
  return out;
}

Allocation decode_allocation(const Json& j) {
  Allocation a;
  for (const auto& g : j.at("gammas")) a.gammas.push_back(decode_number(g));
  for (const auto& s : j.at("saturated")) a.saturated.push_back(s.get<bool>());
  a.water_level_beta = decode_number(j.at("water_level"));
  a.slack = decode_number(j.at("slack"));
  a.total_value = decode_number(j.at("total_value"));
  return a;
}

Json encode_report(const oracle::Report& report) {
  Json checks = Json::array();
  for (const auto& c : report.checks) {
    Json jc;
    jc["name"] = c.name;
    jc["oracle"] = encode_number(c.oracle);
    jc["closed_form"] = encode_number(c.closed_form);
    jc["tolerance"] = encode_number(c.tolerance);
    jc["comparison"] = comparison_name(c.comparison);
    jc["passed"] = c.passed;
    checks.push_back(std::move(jc));
  }
  Json details = Json::object();
  for (const auto& d : report.details) details[d.name] = encode_number(d.value);

  Json out;
  out["verifier"] = report.verifier;
  out["instance"] = report.instance;
  out["passed"] = report.passed();
  out["checks"] = std::move(checks);
  out["details"] = std::move(details);
  return out;
}

}  // namespace rwci::cli
