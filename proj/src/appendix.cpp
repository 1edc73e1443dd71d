#include "curvegenus/appendix.hpp"

#include <algorithm>
#include <set>

#include "curvegenus/error.hpp"

namespace curvegenus {

namespace {

// One row of the case analysis: a constraint set valid on [low, high].
struct TableRow {
  const char* case_id;
  long low;
  long high;
  std::map<long, long> fixed;
  std::map<long, long> lower;
  std::vector<DecayRule> decay;
  bool tabulated;  // the sub-range carries a coarsened closed expression
  std::optional<LinearExpr> printed;
  bool strict;
  const char* label;
};

const char* const kCase2Deg5 = "II (deg X = 5)";
const char* const kCase2Deg6 = "II (deg X = 6)";

// Hyperplane section Gamma of C in P^3. Case II: h^0(I_Gamma(2)) = 1 and
// h^0(I_Gamma(3)) > 4, Gamma on an integral curve X of degree 5 or 6.
// Bezout gives h_Gamma(i) = h_X(i) when d > i deg X; h_X(3), h_X(4) are
// bounded below by summing the Hilbert function of deg X points in the plane.
// Case III: h^0(I_Gamma(2)) = 1, h^0(I_Gamma(3)) = 4. Case IV: h^0(I_Gamma(2)) = 0.
// Cases II and III cannot be a.C.M. (Gamma lies on a quadric, C does not),
// so their sums bound p_a strictly.
const std::vector<TableRow>& table() {
  static const std::vector<TableRow> rows = {
      {kCase2Deg5, 17, 20, {{1, 4}, {2, 9}}, {{3, 14}, {4, 17}}, {}, true, std::nullopt, true,
       "h(3) = h_X(3) >= 14 by Bezout"},
      {kCase2Deg5, 21, 23, {{1, 4}, {2, 9}}, {{3, 14}, {4, 19}}, {}, true, LinearExpr{4, -45},
       true, "h(i) = h_X(i) for i <= 4 by Bezout"},
      {kCase2Deg5, 24, 27, {{1, 4}, {2, 9}}, {{3, 14}, {4, 19}}, {}, true, LinearExpr{4, -41},
       true, "h(i) = h_X(i) for i <= 4 by Bezout"},
      {kCase2Deg5, 28, 30, {{1, 4}, {2, 9}}, {{3, 14}, {4, 19}}, {}, true, LinearExpr{4, -35},
       true, "h(i) = h_X(i) for i <= 4 by Bezout"},
      {kCase2Deg5, 31, kAppendixMaxDegree, {{1, 4}, {2, 9}}, {{3, 14}, {4, 19}}, {}, false,
       std::nullopt, true, "h(i) = h_X(i) for i <= 4 by Bezout"},

      {kCase2Deg6, 17, 17, {{1, 4}, {2, 9}}, {{3, 15}}, {}, false, std::nullopt, true,
       "h(3) = h_X(3) >= 15"},
      {kCase2Deg6, 17, 17, {{1, 4}, {2, 9}}, {}, {{3, 2}}, false, std::nullopt, true,
       "h^0(I_Gamma(3)) > h^0(I_X(3)): Delta h(4) <= max{0, Delta h(3) - 2}"},
      {kCase2Deg6, 18, 18, {{1, 4}, {2, 9}}, {{3, 14}, {4, 17}}, {}, true, LinearExpr{0, 28},
       true, "h(3) >= 15 via X, or >= 14 for a (2,3,3) complete intersection"},
      {kCase2Deg6, 19, 24, {{1, 4}, {2, 9}}, {{3, 15}, {4, 18}}, {}, true, LinearExpr{4, -45},
       true, "h(3) = h_X(3) >= 15 by Bezout"},
      {kCase2Deg6, 25, 30, {{1, 4}, {2, 9}}, {{3, 15}, {4, 21}}, {}, true, LinearExpr{4, -42},
       true, "h(i) = h_X(i) for i <= 4 by Bezout"},
      {kCase2Deg6, 31, kAppendixMaxDegree, {{1, 4}, {2, 9}}, {{3, 15}, {4, 21}}, {}, false,
       std::nullopt, true, "h(i) = h_X(i) for i <= 4 by Bezout"},

      {"III", 17, 20, {{1, 4}, {2, 9}, {3, 16}}, {}, {}, true, LinearExpr{3, -28}, true,
       "h(3) = 16"},
      {"III", 21, 25, {{1, 4}, {2, 9}, {3, 16}}, {}, {}, true, LinearExpr{3, -22}, true,
       "h(3) = 16"},
      {"III", 26, 30, {{1, 4}, {2, 9}, {3, 16}}, {}, {}, true, LinearExpr{3, -12}, true,
       "h(3) = 16"},
      {"III", 31, kAppendixMaxDegree, {{1, 4}, {2, 9}, {3, 16}}, {}, {}, false, std::nullopt,
       true, "h(3) = 16"},

      {"IV", 17, kAppendixMaxDegree, {{1, 4}, {2, 10}}, {}, {}, false, std::nullopt, false,
       "h(2) = 10"},
  };
  return rows;
}

ConstraintSet make_set(const TableRow& row, long d) {
  ConstraintSet c;
  c.d = d;
  c.n = 3;
  c.fixed = row.fixed;
  for (const auto& [i, v] : row.lower) c.lower[i] = std::min(d, v);
  c.decay = row.decay;
  c.strict = row.strict;
  c.label = row.label;
  return c;
}

}  // namespace

std::string LinearExpr::str() const {
  std::string out;
  if (slope != 0) out = (slope == 1 ? "" : std::to_string(slope)) + "d";
  if (offset != 0 || out.empty()) {
    if (out.empty()) return std::to_string(offset);
    out += offset < 0 ? "-" + std::to_string(-offset) : "+" + std::to_string(offset);
  }
  return out;
}

long coarsened_bound(const ConstraintSet& c, long range_high) {
  std::map<long, long> explicit_values;
  for (const auto& [i, v] : c.lower) explicit_values[i] = v;
  for (const auto& [i, v] : c.fixed) explicit_values[i] = std::max(explicit_values[i], v);

  ConstraintSet top = c;
  top.d = range_high;
  const HilbertProfile at_top = minimal_profile(top);

  long sum = 0;
  for (const auto& [i, v] : explicit_values) sum += c.d - v;
  for (long i = 1; i <= at_top.horizon(); ++i) {
    if (!explicit_values.count(i)) sum += range_high - at_top.at(i);
  }
  return sum;
}

std::vector<CaseReport> appendix_replay(long d) {
  if (d < kAppendixMinDegree || d > kAppendixMaxDegree)
    throw DomainError("appendix_replay: d must lie in [17, 143], got " + std::to_string(d));
  const Rat reference = make_rat(Int(d) * (d - 6), 8) + 1;

  std::vector<CaseReport> reports;
  CaseReport case1;
  case1.case_id = "I";
  case1.d = d;
  case1.excluded = true;
  case1.verdict = true;
  case1.reference = reference;
  case1.note =
      "h^0(I_Gamma(2)) >= 2 excluded by monodromy: Gamma would lie on an integral "
      "curve of degree <= 4 and C on a surface of degree <= 4 (not computed)";
  reports.push_back(case1);

  for (const char* id : {kCase2Deg5, kCase2Deg6, "III", "IV"}) {
    CaseReport report;
    report.case_id = id;
    report.d = d;
    report.reference = reference;
    report.verdict = true;
    for (const TableRow& row : table()) {
      if (std::string(row.case_id) != id || d < row.low || d > row.high) continue;
      CaseBranch branch;
      branch.label = row.label;
      branch.constraints = make_set(row, d);
      branch.estimate = genus_upper_bound(branch.constraints);
      branch.range_low = row.low;
      branch.range_high = row.high;
      branch.tabulated = row.tabulated;
      branch.printed = row.printed;
      branch.strict = row.strict;
      branch.compared_bound = row.tabulated
                                  ? coarsened_bound(branch.constraints, row.high)
                                  : branch.estimate.bound;
      const Rat effective = Rat(branch.strict ? branch.compared_bound - 1 : branch.compared_bound);
      branch.below_reference = effective < reference;
      branch.strictness_needed = branch.strict && !(Rat(branch.compared_bound) < reference);
      report.bound = report.branches.empty() ? branch.compared_bound
                                             : std::max(report.bound, branch.compared_bound);
      report.verdict = report.verdict && branch.below_reference;
      report.branches.push_back(std::move(branch));
    }
    if (std::string(id) == kCase2Deg6 && d == 17)
      report.note =
          "d = 17 follows the final enumerated sub-cases: h(3) = h_X(3), or the decay "
          "dichotomy h(3) = 17 / h(3) >= 14";
    reports.push_back(std::move(report));
  }
  return reports;
}

bool appendix_verdict(const std::vector<CaseReport>& reports) {
  return std::all_of(reports.begin(), reports.end(),
                     [](const CaseReport& r) { return r.verdict; });
}

}  // namespace curvegenus
