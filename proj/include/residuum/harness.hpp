#pragma once

#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include "residuum/integer.hpp"
#include "residuum/report.hpp"

namespace residuum {

enum class ReportFormat { json, csv };

struct SweepConfig {
  std::string claim_id;
  Natural max = 0;
  unsigned workers = 1;
  std::filesystem::path output_path;  // empty: do not write
  ReportFormat format = ReportFormat::json;
};

/// Registered claim: how its sweep range is enumerated and how one input is
/// checked.
struct ClaimSpec {
  std::string id;
  std::string anchor;
  std::string variable;      // what --max bounds
  Natural min_max = 1;       // smallest admissible --max
  std::string item_key;      // violation field naming the swept input
  std::string context_key;   // violation field carrying --max, if the check depends on it
  std::function<std::vector<Natural>(Natural max)> items;
  std::function<std::string(Natural max)> range;
  // Returns the per-input check, sharing any tables (sieves) sized by max.
  std::function<std::function<Tally(Natural)>(Natural max)> prepare;
  std::function<void(ClaimReport&)> finalize;
};

const std::vector<ClaimSpec>& claim_registry();
const ClaimSpec& find_claim(const std::string& id);  // throws Errc::unknown_claim

/// Runs the sweep, merges per-input results in input order and writes the
/// report when cfg.output_path is set. Output does not depend on workers.
ClaimReport run_claim(const SweepConfig& cfg);

/// Re-executes the single-input check named by a stored violation and
/// reports whether the identical violation is produced again.
bool reproduces(const std::string& claim_id, const Json& violation);

/// Throws Errc::io when the file cannot be written.
void write_report(const ClaimReport& report, const std::filesystem::path& path, ReportFormat format);

/// RESIDUUM_OUT if set, otherwise ./residuum-out.
std::filesystem::path default_output_dir();

/// One row per JSON report in dir; throws Errc::io ("no reports") when the
/// directory holds none.
std::string ledger(const std::filesystem::path& dir);

/// Applies fn to every item on `workers` threads and merges the tallies in
/// item order. Items are grouped in fixed-size blocks, so the merge
/// association is the same for any worker count.
Tally parallel_tally(const std::vector<Natural>& items, unsigned workers, const std::function<Tally(Natural)>& fn);

}  // namespace residuum
