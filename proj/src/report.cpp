#include "heis/report.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

namespace heis {

std::string display5(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.5f", v);
  return buf;
}

ojson report_number(double v) {
  ojson j;
  j["value"] = v;
  j["display"] = display5(v);
  return j;
}

ojson verdict_to_json(const Verdict& v, const std::string& member) {
  ojson j;
  j["spec"] = v.inequality;
  j["member"] = member;
  j["delta"] = v.delta;
  j["inside_cone"] = v.inside_cone;
  j["applicable"] = v.applicable;
  j["lhs"] = report_number(v.lhs);
  j["rhs"] = report_number(v.rhs);
  j["constant"] = report_number(v.constant);
  j["margin"] = report_number(v.margin);
  j["quad_error"] = v.quad_err;
  j["pass"] = v.pass;
  return j;
}

ojson identity_to_json(const IdentityCheck& c, const std::string& member) {
  ojson j;
  j["name"] = c.name;
  j["member"] = member;
  j["applicable"] = c.applicable;
  j["lhs"] = report_number(c.lhs);
  j["rhs"] = report_number(c.rhs);
  j["residual"] = c.residual;
  j["scale"] = c.scale;
  j["relative"] = c.rel;
  j["pass"] = c.pass;
  return j;
}

ojson thm_v1_to_json(const ThmV1Report& r) {
  ojson j;
  j["check"] = "single-budget-subordination";
  j["b"] = report_number(r.b);
  j["threshold"] = report_number(r.threshold);
  j["margin"] = report_number(r.margin);
  j["implied_form_constant"] = report_number(r.subordination);
  j["certifying"] = r.certifying;
  j["hypothesis_met"] = r.met;
  return j;
}

ojson thm_v2_to_json(const ThmV2Report& r) {
  ojson j;
  j["check"] = "three-budget-split";
  j["b1"] = report_number(r.b1);
  j["b2"] = report_number(r.b2);
  j["b3"] = report_number(r.b3);
  j["b3_threshold"] = report_number(r.b3_threshold);
  j["certifying"] = r.certifying;
  j["hypothesis_met"] = r.met;
  j["subordinated"] = r.subordinated;
  ojson w;
  w["lower"] = r.window_lower;
  w["upper"] = r.window_upper;
  w["nonempty"] = r.window_nonempty;
  j["aperture_window"] = w;
  j["single_budget_threshold"] = report_number(r.single_budget_threshold);
  j["beats_single_budget"] = r.beats_single_budget;
  return j;
}

namespace {

ojson budget_to_json(const BudgetBound& b) {
  ojson j;
  if (b.certified())
    j["upper"] = *b.upper;
  else
    j["upper"] = nullptr;
  j["lower"] = b.lower;
  j["certified"] = b.certified();
  return j;
}

}  // namespace

ojson bounds_to_json(const PotentialBounds& b) {
  ojson j;
  j["method"] = b.method;
  j["b"] = budget_to_json(b.b);
  j["b1"] = budget_to_json(b.b1);
  j["b2"] = budget_to_json(b.b2);
  j["b3"] = budget_to_json(b.b3);
  return j;
}

ojson report_envelope(const std::string& kind, ojson results) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = kind;
  j["results"] = std::move(results);
  return j;
}

std::string table_csv(const std::vector<constants::TableRow>& rows) {
  std::string out = "d,delta_star,kappa_d\n";
  for (const auto& r : rows)
    out += std::to_string(r.d) + "," + display5(r.delta_star) + "," +
           display5(r.kappa) + "\n";
  return out;
}

ojson table_json(const std::vector<constants::TableRow>& rows) {
  ojson arr = ojson::array();
  for (const auto& r : rows) {
    ojson j;
    j["d"] = r.d;
    j["delta_star"] = report_number(r.delta_star);
    j["kappa_d"] = report_number(r.kappa);
    arr.push_back(std::move(j));
  }
  return report_envelope("constants-table", std::move(arr));
}

std::string verdict_csv(
    const std::vector<std::pair<std::string, Verdict>>& rows) {
  std::string out = "member,inequality,delta,applicable,pass,margin\n";
  for (const auto& [member, v] : rows) {
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s,%s,%.6g,%d,%d,%.6g\n", member.c_str(),
                  v.inequality.c_str(), v.delta, v.applicable ? 1 : 0,
                  v.pass ? 1 : 0, v.margin);
    out += buf;
  }
  return out;
}

ojson run_meta(const std::vector<std::string>& argv_tail,
               unsigned long long seed, const std::string& preset) {
  ojson j;
  j["schema_version"] = kSchemaVersion;
  const auto now = std::chrono::system_clock::now();
  j["timestamp_unix"] =
      std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch())
          .count();
  j["invocation"] = argv_tail;
  j["seed"] = seed;
  j["preset"] = preset;
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  const std::filesystem::path p(path);
  if (p.has_parent_path()) std::filesystem::create_directories(p.parent_path());
  std::ofstream out(p, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + path);
  out << content;
  if (!out) throw std::runtime_error("write failed: " + path);
}

}  // namespace heis
