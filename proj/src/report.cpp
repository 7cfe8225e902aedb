#include "meb/report.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

namespace meb {

void RunReport::finalize() {
  pass = std::all_of(checks.begin(), checks.end(),
                     [](const CheckRecord& c) { return c.pass; });
}

std::optional<ReportFormat> parse_format(std::string_view text) {
  if (text == "text") return ReportFormat::Text;
  if (text == "json") return ReportFormat::Json;
  if (text == "csv") return ReportFormat::Csv;
  return std::nullopt;
}

std::string to_json(const RunReport& rep) {
  nlohmann::ordered_json doc;
  doc["command"] = rep.command;
  doc["version"] = rep.version;
  doc["seed"] = rep.seed;
  doc["samples"] = rep.samples;
  doc["tol"] = rep.tol;
  doc["checks"] = nlohmann::ordered_json::array();
  for (const CheckRecord& c : rep.checks) {
    nlohmann::ordered_json jc;
    jc["name"] = c.name;
    jc["anchor"] = c.anchor;
    jc["target"] = c.target;
    jc["observed"] = c.observed;
    jc["deviation"] = c.deviation;
    jc["pass"] = c.pass;
    doc["checks"].push_back(std::move(jc));
  }
  doc["pass"] = rep.pass;
  doc["wall_ms"] = rep.wall_ms;
  if (!rep.notes.empty()) doc["notes"] = rep.notes;
  return doc.dump(2) + "\n";
}

namespace {

std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char ch : field) {
    if (ch == '"') out += "\"\"";
    else out.push_back(ch);
  }
  out.push_back('"');
  return out;
}

}  // namespace

std::string to_csv(const RunReport& rep) {
  std::ostringstream out;
  out.precision(17);
  out << "command,family,subspace,check_name,paper_anchor,target,observed,"
         "deviation,pass\n";
  for (const CheckRecord& c : rep.checks) {
    out << csv_escape(rep.command) << ',' << csv_escape(c.family) << ','
        << csv_escape(c.subspace) << ',' << csv_escape(c.name) << ','
        << csv_escape(c.anchor) << ',' << c.target << ',' << c.observed << ','
        << c.deviation << ',' << (c.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

std::string to_text(const RunReport& rep) {
  std::ostringstream out;
  out.precision(12);
  out << rep.command << " (v" << rep.version << ")  seed=" << rep.seed
      << " samples=" << rep.samples << " tol=" << rep.tol << "\n";
  for (const CheckRecord& c : rep.checks) {
    out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name;
    if (!c.anchor.empty()) out << " (" << c.anchor << ")";
    if (!c.family.empty()) out << " family=" << c.family;
    if (!c.subspace.empty()) out << " subspace=" << c.subspace;
    out << ": target=" << c.target << " observed=" << c.observed
        << " deviation=" << c.deviation << "\n";
  }
  for (const std::string& n : rep.notes) out << "  note: " << n << "\n";
  out << (rep.pass ? "PASS" : "FAIL") << " (" << rep.checks.size()
      << " checks, " << rep.wall_ms << " ms)\n";
  return out.str();
}

std::string render(const RunReport& rep, ReportFormat format) {
  switch (format) {
    case ReportFormat::Text: return to_text(rep);
    case ReportFormat::Json: return to_json(rep);
    case ReportFormat::Csv: return to_csv(rep);
  }
  return {};
}

}  // namespace meb
