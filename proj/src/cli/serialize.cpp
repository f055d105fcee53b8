#include "ddrec/serialize.hpp"

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "ddrec/error.hpp"

namespace ddrec::cli {

namespace {

using Json = nlohmann::ordered_json;

Json real(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::strtod(format_real(v).c_str(), nullptr);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

std::string join(const std::vector<std::string>& cells) {
  std::string line;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (i) line += ",";
    line += cells[i];
  }
  return line + "\n";
}

Json saddle_json(const SaddleReport& r) {
  Json j;
  j["n"] = r.n;
  j["rho"] = real(r.rho);
  j["rho_prime"] = real(r.rho_prime);
  j["predicted_mean"] = real(r.predicted_mean);
  j["predicted_variance"] = real(r.predicted_variance);
  j["b_value"] = real(r.b_value);
  j["coeff_estimate_log"] = real(r.coeff_estimate_log);
  j["leading_mean"] = real(r.leading_mean);
  j["leading_variance"] = real(r.leading_variance);
  j["residual"] = real(r.residual);
  return j;
}

}  // namespace

Format parse_format(const std::string& name) {
  if (name == "csv") return Format::csv;
  if (name == "json") return Format::json;
  throw Error(ErrorKind::invalid_argument, "unknown format '" + name + "' (csv or json)");
}

std::string format_real(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

std::string serialize_triangle(std::span<const TriangleRow> rows, Format format) {
  if (format == Format::json) {
    Json out;
    out["rows"] = Json::array();
    for (const auto& row : rows) {
      Json coeffs = Json::array();
      for (const auto& c : row.coeffs) coeffs.push_back(c.get_str());
      out["rows"].push_back({{"n", row.n}, {"coeffs", coeffs}});
    }
    return dump(out);
  }
  std::size_t width = 0;
  for (const auto& row : rows) width = std::max(width, row.coeffs.size());
  std::vector<std::string> header{"n"};
  for (std::size_t k = 0; k < width; ++k) header.push_back("c" + std::to_string(k));
  std::string text = join(header);
  for (const auto& row : rows) {
    std::vector<std::string> cells{std::to_string(row.n)};
    for (const auto& c : row.coeffs) cells.push_back(c.get_str());
    text += join(cells);
  }
  return text;
}

std::string serialize_pmf(std::span<const PMFTable> tables, Format format) {
  if (format == Format::json) {
    Json out;
    out["tables"] = Json::array();
    for (const auto& t : tables) {
      Json probs = Json::object(), floats = Json::object();
      for (const auto& [k, p] : t.probs) {
        probs[std::to_string(k)] = p.get_str();
        floats[std::to_string(k)] = real(p.get_d());
      }
      Json j;
      j["n"] = t.n;
      j["probs"] = probs;
      j["probs_float"] = floats;
      j["mean"] = t.mean.get_str();
      j["mean_float"] = real(t.mean.get_d());
      j["variance"] = t.variance.get_str();
      j["variance_float"] = real(t.variance.get_d());
      j["skewness"] = real(t.skewness);
      j["excess_kurtosis"] = real(t.excess_kurtosis);
      out["tables"].push_back(j);
    }
    return dump(out);
  }
  std::string text = join({"n", "k", "prob", "prob_float"});
  for (const auto& t : tables) {
    for (const auto& [k, p] : t.probs) {
      text += join({std::to_string(t.n), std::to_string(k), p.get_str(), format_real(p.get_d())});
    }
  }
  return text;
}

std::string serialize_moments(std::span<const PMFTable> tables, Format format) {
  if (format == Format::json) {
    Json out;
    out["moments"] = Json::array();
    for (const auto& t : tables) {
      Json j;
      j["n"] = t.n;
      j["mean"] = t.mean.get_str();
      j["variance"] = t.variance.get_str();
      j["mean_float"] = real(t.mean.get_d());
      j["variance_float"] = real(t.variance.get_d());
      j["skewness"] = real(t.skewness);
      j["excess_kurtosis"] = real(t.excess_kurtosis);
      out["moments"].push_back(j);
    }
    return dump(out);
  }
  std::string text = join({"n", "mean", "variance", "mean_float", "variance_float", "skewness",
                           "excess_kurtosis"});
  for (const auto& t : tables) {
    text += join({std::to_string(t.n), t.mean.get_str(), t.variance.get_str(),
                  format_real(t.mean.get_d()), format_real(t.variance.get_d()),
                  format_real(t.skewness), format_real(t.excess_kurtosis)});
  }
  return text;
}

std::string serialize_normality(std::span<const NormalityReport> reports, Format format) {
  if (format == Format::json) {
    Json out;
    out["reports"] = Json::array();
    for (const auto& r : reports) {
      Json j;
      j["n"] = r.n;
      j["ks_plain"] = real(r.ks_plain);
      j["ks_continuity"] = real(r.ks_continuity);
      j["standardized_third"] = real(r.standardized_third);
      j["standardized_fourth"] = real(r.standardized_fourth);
      j["normalization"] = {{"center", real(r.normalization.center)},
                            {"scale", real(r.normalization.scale)}};
      j["theorem_ks_plain"] = real(r.theorem_ks_plain);
      j["theorem_ks_continuity"] = real(r.theorem_ks_continuity);
      out["reports"].push_back(j);
    }
    return dump(out);
  }
  std::string text = join({"n", "ks_plain", "ks_continuity", "standardized_third",
                           "standardized_fourth", "center", "scale", "theorem_ks_plain",
                           "theorem_ks_continuity"});
  for (const auto& r : reports) {
    text += join({std::to_string(r.n), format_real(r.ks_plain), format_real(r.ks_continuity),
                  format_real(r.standardized_third), format_real(r.standardized_fourth),
                  format_real(r.normalization.center), format_real(r.normalization.scale),
                  format_real(r.theorem_ks_plain), format_real(r.theorem_ks_continuity)});
  }
  return text;
}

std::string serialize_asymptotics(std::span<const ExactComparison> rows, Format format) {
  if (format == Format::json) {
    Json out;
    out["reports"] = Json::array();
    for (const auto& c : rows) {
      Json j;
      j["saddle"] = saddle_json(c.saddle);
      j["exact_mean"] = real(c.exact_mean);
      j["exact_variance"] = real(c.exact_variance);
      j["log_exact_total"] = real(c.log_exact_total);
      j["mean_rel_error"] = real(c.mean_rel_error);
      j["variance_rel_error"] = real(c.variance_rel_error);
      j["coeff_log_rel_error"] = real(c.coeff_log_rel_error);
      out["reports"].push_back(j);
    }
    return dump(out);
  }
  std::string text =
      join({"n", "rho", "rho_prime", "predicted_mean", "predicted_variance", "b_value",
            "coeff_estimate_log", "leading_mean", "leading_variance", "residual", "exact_mean",
            "exact_variance", "log_exact_total", "mean_rel_error", "variance_rel_error",
            "coeff_log_rel_error"});
  for (const auto& c : rows) {
    const SaddleReport& r = c.saddle;
    text += join({std::to_string(r.n), format_real(r.rho), format_real(r.rho_prime),
                  format_real(r.predicted_mean), format_real(r.predicted_variance),
                  format_real(r.b_value), format_real(r.coeff_estimate_log),
                  format_real(r.leading_mean), format_real(r.leading_variance),
                  format_real(r.residual), format_real(c.exact_mean),
                  format_real(c.exact_variance), format_real(c.log_exact_total),
                  format_real(c.mean_rel_error), format_real(c.variance_rel_error),
                  format_real(c.coeff_log_rel_error)});
  }
  return text;
}

std::string serialize_families(std::span<const FamilyDescriptor> families, Format format) {
  if (format == Format::json) {
    Json out;
    out["families"] = Json::array();
    for (const auto& f : families) {
      const TheoremConstants tc = theorem_constants(f.saddle);
      Json params = Json::object();
      for (const auto& [k, v] : f.parameters) params[k] = v;
      Json j;
      j["name"] = f.name;
      j["parameters"] = params;
      j["oeis_refs"] = f.oeis_refs;
      j["d"] = tc.d;
      j["alpha_d"] = tc.alpha_d.get_str();
      j["hypothesis_ok"] = tc.hypothesis_ok;
      out["families"].push_back(j);
    }
    out["untagged_oeis_refs"] = untagged_oeis_refs();
    return dump(out);
  }
  std::string text = join({"name", "parameters", "oeis_refs", "d", "alpha_d", "hypothesis_ok"});
  for (const auto& f : families) {
    const TheoremConstants tc = theorem_constants(f.saddle);
    std::string params, tags;
    for (const auto& [k, v] : f.parameters) {
      params += (params.empty() ? "" : " ") + k + "=" + std::to_string(v);
    }
    for (const auto& t : f.oeis_refs) tags += (tags.empty() ? "" : " ") + t;
    text += join({f.name, params, tags, std::to_string(tc.d), tc.alpha_d.get_str(),
                  tc.hypothesis_ok ? "true" : "false"});
  }
  return text;
}

}  // namespace ddrec::cli
