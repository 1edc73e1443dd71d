#include "curvegenus/report.hpp"

#include <algorithm>
#include <sstream>

#include "curvegenus/error.hpp"

namespace curvegenus {

Check make_check(std::string name, nlohmann::json inputs, std::string expected,
                 std::string provenance, std::string computed, std::string citation) {
  Check c;
  c.name = std::move(name);
  c.inputs = std::move(inputs);
  c.expected = std::move(expected);
  c.provenance = std::move(provenance);
  c.computed = std::move(computed);
  c.citation = std::move(citation);
  c.pass = c.expected == c.computed;
  return c;
}

bool Report::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::size_t Report::failures() const {
  return static_cast<std::size_t>(
      std::count_if(checks.begin(), checks.end(), [](const Check& c) { return !c.pass; }));
}

void Report::append(const Report& other) {
  checks.insert(checks.end(), other.checks.begin(), other.checks.end());
}

nlohmann::json to_json(const Report& report) {
  nlohmann::json out = nlohmann::json::array();
  for (const Check& c : report.checks) {
    out.push_back({{"name", c.name},
                   {"inputs", c.inputs},
                   {"expected", c.expected},
                   {"provenance", c.provenance},
                   {"computed", c.computed},
                   {"citation", c.citation},
                   {"pass", c.pass}});
  }
  return out;
}

Report report_from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) throw ParseError("report: expected a JSON array of checks");
  Report report;
  for (const auto& item : doc) {
    try {
      Check c;
      c.name = item.at("name").get<std::string>();
      c.inputs = item.at("inputs");
      c.expected = item.at("expected").get<std::string>();
      c.provenance = item.at("provenance").get<std::string>();
      c.computed = item.at("computed").get<std::string>();
      c.citation = item.at("citation").get<std::string>();
      c.pass = item.at("pass").get<bool>();
      report.checks.push_back(std::move(c));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(std::string("report: malformed check: ") + e.what());
    }
  }
  return report;
}

std::string render_structured(const Report& report) { return to_json(report).dump(2) + "\n"; }

std::string render_table(const Report& report) {
  std::size_t name_width = 4;
  for (const Check& c : report.checks) name_width = std::max(name_width, c.name.size());
  std::ostringstream out;
  auto pad = [](const std::string& s, std::size_t w) {
    return s.size() >= w ? s : s + std::string(w - s.size(), ' ');
  };
  out << pad("name", name_width) << "  pass  expected | computed\n";
  for (const Check& c : report.checks) {
    out << pad(c.name, name_width) << "  " << (c.pass ? "ok  " : "FAIL") << "  " << c.expected;
    if (!c.pass) out << " | " << c.computed << "  [" << c.citation << "]";
    out << "\n";
  }
  out << report.checks.size() - report.failures() << "/" << report.checks.size()
      << " checks passed\n";
  return out.str();
}

}  // namespace curvegenus
