#include "residuum/report.hpp"

#include <algorithm>
#include <sstream>

namespace residuum {

const char* to_string(Verdict v) noexcept {
  switch (v) {
    case Verdict::confirmed: return "CONFIRMED";
    case Verdict::violations_found: return "VIOLATIONS FOUND";
    case Verdict::undefined_cases: return "UNDEFINED CASES";
  }
  return "UNKNOWN";
}

Verdict ClaimReport::verdict() const noexcept {
  if (!violations.empty()) return Verdict::violations_found;
  if (undefined > 0) return Verdict::undefined_cases;
  return Verdict::confirmed;
}

void Tally::max(const std::string& key, double v) {
  auto [it, inserted] = maxima.try_emplace(key, v);
  if (!inserted) it->second = std::max(it->second, v);
}

void Tally::merge(Tally&& other) {
  tested += other.tested;
  undefined += other.undefined;
  violations.insert(violations.end(), std::make_move_iterator(other.violations.begin()),
                    std::make_move_iterator(other.violations.end()));
  for (const auto& [k, v] : other.sums) sums[k] += v;
  for (const auto& [k, v] : other.maxima) max(k, v);
}

ClaimReport make_report(std::string claim_id, std::string anchor, std::string range, Tally&& tally) {
  ClaimReport r;
  r.claim_id = std::move(claim_id);
  r.anchor = std::move(anchor);
  r.range = std::move(range);
  r.tested = tally.tested;
  r.undefined = tally.undefined;
  r.violations = std::move(tally.violations);
  r.stats = std::move(tally.sums);
  for (const auto& [k, v] : tally.maxima) r.stats[k] = v;
  return r;
}

Json to_json(const ClaimReport& report) {
  Json j;
  j["claim_id"] = report.claim_id;
  j["anchor"] = report.anchor;
  j["range"] = report.range;
  j["verdict"] = to_string(report.verdict());
  j["tested"] = report.tested;
  j["undefined"] = report.undefined;
  j["violation_count"] = report.violations.size();
  Json stats = Json::object();
  for (const auto& [k, v] : report.stats) stats[k] = v;
  j["stats"] = std::move(stats);
  Json violations = Json::array();
  for (const auto& v : report.violations) violations.push_back(v.fields());
  j["violations"] = std::move(violations);
  return j;
}

ClaimReport report_from_json(const Json& j) {
  ClaimReport r;
  r.claim_id = j.at("claim_id").get<std::string>();
  r.anchor = j.value("anchor", std::string{});
  r.range = j.value("range", std::string{});
  r.tested = j.at("tested").get<std::uint64_t>();
  r.undefined = j.value("undefined", std::uint64_t{0});
  for (const auto& [k, v] : j.at("stats").items()) r.stats[k] = v.get<double>();
  for (const auto& v : j.at("violations")) r.violations.emplace_back(v);
  return r;
}

std::string render_json(const ClaimReport& report) { return to_json(report).dump(2) + "\n"; }

namespace {

std::string csv_cell(const Json& v) {
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

}  // namespace

std::string render_csv(const ClaimReport& report) {
  std::vector<Json> rows;
  rows.reserve(report.violations.size());
  std::vector<std::string> columns;
  for (const auto& v : report.violations) {
    rows.push_back(v.fields());
    for (const auto& [k, _] : rows.back().items()) {
      if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    }
  }
  std::ostringstream out;
  out << "claim_id";
  for (const auto& c : columns) out << ',' << c;
  out << '\n';
  for (const auto& row : rows) {
    out << report.claim_id;
    for (const auto& c : columns) {
      out << ',';
      if (row.contains(c)) out << csv_cell(row.at(c));
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace residuum
