#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace residuum {

using Json = nlohmann::ordered_json;

/// One counterexample, stored as a compact JSON object whose keys keep
/// insertion order. Holding the serialized text keeps million-entry sweeps
/// small in memory.
class Violation {
 public:
  explicit Violation(const Json& fields) : text_(fields.dump()) {}

  const std::string& text() const noexcept { return text_; }
  Json fields() const { return Json::parse(text_); }

 private:
  std::string text_;
};

enum class Verdict { confirmed, violations_found, undefined_cases };

const char* to_string(Verdict v) noexcept;

/// Per-claim verdict ledger entry.
struct ClaimReport {
  std::string claim_id;
  std::string anchor;
  std::string range;
  std::uint64_t tested = 0;
  std::uint64_t undefined = 0;
  std::vector<Violation> violations;
  std::map<std::string, double> stats;
  // Wall time is reported on the console only; it is not part of the
  // serialized report so that identical configurations stay byte-identical.
  double runtime_ms = 0.0;

  Verdict verdict() const noexcept;
};

/// Partial sweep result for one input (or one contiguous block of inputs).
/// Tallies merge in input order; sums are accumulated in that order so
/// floating aggregates do not depend on how the range was split.
struct Tally {
  std::uint64_t tested = 0;
  std::uint64_t undefined = 0;
  std::vector<Violation> violations;
  std::map<std::string, double> sums;
  std::map<std::string, double> maxima;

  void add(const std::string& key, double v) { sums[key] += v; }
  void max(const std::string& key, double v);
  void violation(const Json& fields) { violations.emplace_back(fields); }
  void merge(Tally&& other);
};

/// Folds a tally into a report; sums and maxima become stats entries.
ClaimReport make_report(std::string claim_id, std::string anchor, std::string range, Tally&& tally);

Json to_json(const ClaimReport& report);
ClaimReport report_from_json(const Json& j);

/// Pretty JSON text with a trailing newline.
std::string render_json(const ClaimReport& report);
/// One violation per row; columns are the union of violation keys in
/// first-seen order, prefixed by claim_id.
std::string render_csv(const ClaimReport& report);

}  // namespace residuum
