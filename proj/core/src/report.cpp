#include "covariant/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "covariant/random.hpp"

namespace covariant {
namespace {

using Json = nlohmann::ordered_json;

Json number(double x) { return std::isfinite(x) ? Json(x) : Json(nullptr); }

Json case_key_json(const CaseKey& key) {
  Json out;
  out["group"] = key.group;
  if (key.omega) {
    out["omega"] = *key.omega;
    return out;
  }
  out["subgroup"] = key.subgroup;
  Json exponents = Json::object();
  for (std::size_t i = 0; i < key.subgroup.size(); ++i) {
    exponents[std::to_string(key.subgroup[i])] = key.exponents.at(i);
  }
  out["character"] = {{"modulus", key.modulus}, {"exponents", std::move(exponents)}};
  return out;
}

Json grid_json(const GridSpec& g) {
  return {{"a_min", g.a_min},     {"a_max", g.a_max},     {"b_bound", g.b_bound},
          {"a_nodes", g.a_nodes}, {"b_nodes", g.b_nodes}};
}

Json function_value(const GroupFunction& f) {
  Json re = Json::array(), im = Json::array();
  for (Eigen::Index i = 0; i < f.values().size(); ++i) {
    re.push_back(f.values()(i).real());
    im.push_back(f.values()(i).imag());
  }
  return {{"re", std::move(re)}, {"im", std::move(im)}};
}

}  // namespace

std::string report_json(const std::vector<CaseReport>& cases, const ReportHeader& header) {
  Json doc;
  doc["suite_version"] = kSuiteVersion;
  doc["seed"] = header.seed;
  doc["prng"] = std::string(kPrngDescription);
  if (header.trials > 0) doc["trials"] = header.trials;
  if (header.grid) doc["grid"] = grid_json(*header.grid);
  Json list = Json::array();
  for (const CaseReport& c : cases) {
    Json entry;
    entry["case_key"] = case_key_json(c.key);
    if (!c.key.omega) entry["weights"] = {{"u", c.haar.u()}, {"v", c.haar.v()}, {"w", c.haar.w()}};
    Json theorems = Json::array();
    for (const TheoremReport& t : c.theorems) {
      Json th;
      th["id"] = std::string(to_string(t.id));
      th["status"] = t.passed ? "pass" : "fail";
      th["residual"] = number(t.residual);
      th["samples"] = t.samples;
      if (!t.detail.empty()) th["detail"] = t.detail;
      theorems.push_back(std::move(th));
    }
    entry["theorems"] = std::move(theorems);
    list.push_back(std::move(entry));
  }
  doc["cases"] = std::move(list);
  return doc.dump(2) + "\n";
}

std::string report_text(const std::vector<CaseReport>& cases, const ReportHeader& header) {
  std::ostringstream out;
  std::size_t total = 0, failed = 0;
  out << "seed " << header.seed;
  if (header.trials > 0) out << ", " << header.trials << " trials";
  if (header.weights) out << ", " << header.weights->text();
  out << "\n";
  char line[256];
  for (const CaseReport& c : cases) {
    out << c.key.text() << "\n";
    for (const TheoremReport& t : c.theorems) {
      ++total;
      if (!t.passed) ++failed;
      std::snprintf(line, sizeof line, "  %-18s %-4s %10.3e  %6zu", std::string(to_string(t.id)).c_str(),
                    t.passed ? "pass" : "FAIL", t.residual, t.samples);
      out << line;
      if (!t.detail.empty()) out << "  " << t.detail;
      out << "\n";
    }
  }
  out << (total - failed) << "/" << total << " checks passed\n";
  return out.str();
}

std::string function_json(const GroupFunction& f) { return function_value(f).dump(); }

std::string basis_json(const SubspaceBasis& basis) {
  Json vectors = Json::array();
  for (const GroupFunction& v : basis.vectors()) vectors.push_back(function_value(v));
  Json out;
  out["dimension"] = basis.dimension();
  out["vectors"] = std::move(vectors);
  return out.dump();
}

}  // namespace covariant
