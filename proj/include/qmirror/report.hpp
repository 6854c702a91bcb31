// Rendering of series and verification results as JSON, CSV, or text
// documents.  Every format is deterministic: fixed field order, fixed row
// order, rationals printed exactly as "p/q" in lowest terms.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "qmirror/model.hpp"
#include "qmirror/qseries.hpp"
#include "qmirror/rational.hpp"
#include "qmirror/verify.hpp"

namespace qmirror {

using OrderedJson = nlohmann::ordered_json;

inline OrderedJson model_json(const Model& m) {
  OrderedJson j;
  j["n"] = m.n;
  j["a"] = m.a;
  return j;
}

inline std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += "\"\"";
    else out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

struct SeriesReport {
  Model model;
  int order = 0;
  std::uint64_t seed = 0;
  std::string name;
  QSeries<Rat> series;
};

inline std::string render_series_json(const SeriesReport& r) {
  OrderedJson j;
  j["model"] = model_json(r.model);
  j["order"] = r.order;
  j["seed"] = r.seed;
  OrderedJson s;
  s["name"] = r.name;
  OrderedJson coeffs = OrderedJson::array();
  for (int k = 0; k <= r.series.order(); ++k)
    coeffs.push_back(r.series.coeff(k).str());
  s["coeffs"] = coeffs;
  j["series"] = s;
  return j.dump(2) + "\n";
}

inline std::string render_series_csv(const SeriesReport& r) {
  std::string out = "index,numerator,denominator\n";
  for (int k = 0; k <= r.series.order(); ++k) {
    const Rat& c = r.series.coeff(k);
    out += std::to_string(k) + "," + c.num_str() + "," + c.den_str() + "\n";
  }
  return out;
}

inline std::string render_series_text(const SeriesReport& r) {
  std::string out =
      r.name + "  [" + r.model.str() + ", order " + std::to_string(r.order) + "]\n";
  for (int k = 0; k <= r.series.order(); ++k)
    out += "  q^" + std::to_string(k) + ": " + r.series.coeff(k).str() + "\n";
  return out;
}

struct VerifyReport {
  Model model;
  int order = 0;
  std::uint64_t seed = 0;
  std::string suite;
  std::vector<CheckResult> checks;

  bool all_passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline std::string render_verify_json(const VerifyReport& r) {
  OrderedJson j;
  j["model"] = model_json(r.model);
  j["suite"] = r.suite;
  OrderedJson checks = OrderedJson::array();
  for (const auto& c : r.checks) {
    OrderedJson e;
    e["name"] = c.name;
    e["paper_ref"] = c.paper_ref;
    e["status"] = c.pass ? "pass" : "fail";
    e["detail"] = c.detail;
    checks.push_back(e);
  }
  j["checks"] = checks;
  return j.dump(2) + "\n";
}

inline std::string render_verify_csv(const VerifyReport& r) {
  std::string out = "name,paper_ref,status,detail\n";
  for (const auto& c : r.checks)
    out += csv_quote(c.name) + "," + csv_quote(c.paper_ref) + "," +
           (c.pass ? "pass" : "fail") + "," + csv_quote(c.detail) + "\n";
  return out;
}

inline std::string render_verify_text(const VerifyReport& r) {
  std::string out = "verification suite '" + r.suite + "' for " + r.model.str() +
                    ", order " + std::to_string(r.order) + ", seed " +
                    std::to_string(r.seed) + "\n";
  int passed = 0;
  for (const auto& c : r.checks) {
    out += (c.pass ? "  pass  " : "  FAIL  ") + c.name + "  [" + c.paper_ref + "]";
    if (!c.detail.empty()) out += "  " + c.detail;
    out += "\n";
    if (c.pass) ++passed;
  }
  out += std::to_string(passed) + "/" + std::to_string(r.checks.size()) +
         " checks passed\n";
  return out;
}

}  // namespace qmirror
