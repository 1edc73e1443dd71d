#ifndef CURVEGENUS_REPORT_HPP
#define CURVEGENUS_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

namespace curvegenus {

/// One named comparison. `pass` is expected == computed, both rendered as text.
struct Check {
  std::string name;
  nlohmann::json inputs = nlohmann::json::object();
  std::string expected;
  std::string provenance;  // "stated", "derived" or "elementary"
  std::string computed;
  std::string citation;
  bool pass = false;

  friend bool operator==(const Check&, const Check&) = default;
};

Check make_check(std::string name, nlohmann::json inputs, std::string expected,
                 std::string provenance, std::string computed, std::string citation);

struct Report {
  std::vector<Check> checks;

  bool all_pass() const;
  std::size_t failures() const;
  void append(const Report& other);
};

nlohmann::json to_json(const Report& report);
/// Throws ParseError on a malformed document.
Report report_from_json(const nlohmann::json& doc);

/// Pretty-printed JSON; parsing it and rendering again gives the same bytes.
std::string render_structured(const Report& report);
std::string render_table(const Report& report);

}  // namespace curvegenus

#endif  // CURVEGENUS_REPORT_HPP
