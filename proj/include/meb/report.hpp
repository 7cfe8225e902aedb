#pragma once

// Structured run reports shared by every CLI verb. The machine-readable
// JSON document has a stable key set: "command", "version", "seed",
// "samples", "tol", "checks" (each with "name", "anchor", "target",
// "observed", "deviation", "pass"), "pass" and "wall_ms". CSV flattens one
// check per row; the human-readable text is derived from the same records.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace meb {

struct CheckRecord {
  std::string name;
  std::string anchor;  // equation label in the source text, e.g. "Eq 22"
  double target = 0.0;
  double observed = 0.0;
  double deviation = 0.0;
  bool pass = false;
  // Context columns for CSV output; empty when not applicable.
  std::string family;
  std::string subspace;
};

struct RunReport {
  std::string command;
  std::string version;
  std::uint64_t seed = 0;
  long samples = 0;
  double tol = 0.0;
  std::vector<CheckRecord> checks;
  std::vector<std::string> notes;  // free-form detail (factors, warnings)
  bool pass = false;
  double wall_ms = 0.0;

  // Sets pass to the conjunction of the per-check flags.
  void finalize();
};

enum class ReportFormat { Text, Json, Csv };

std::optional<ReportFormat> parse_format(std::string_view text);

std::string to_json(const RunReport& rep);
std::string to_csv(const RunReport& rep);
std::string to_text(const RunReport& rep);
std::string render(const RunReport& rep, ReportFormat format);

}  // namespace meb
