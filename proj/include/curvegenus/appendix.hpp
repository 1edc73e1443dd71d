#ifndef CURVEGENUS_APPENDIX_HPP
#define CURVEGENUS_APPENDIX_HPP

#include <optional>
#include <string>
#include <vector>

#include "curvegenus/arith.hpp"
#include "curvegenus/hilbert_engine.hpp"

namespace curvegenus {

/// a*d + b, as printed for a tabulated sub-range.
struct LinearExpr {
  long slope = 0;
  long offset = 0;

  long operator()(long d) const { return slope * d + offset; }
  std::string str() const;
};

/// One constraint set inside a case, with the bound the comparison uses.
///
/// For tabulated sub-ranges [lo, hi] the comparison uses the coarsened sum:
/// every explicitly tabulated index contributes d - h(i), every index derived
/// by closure contributes its value at d = hi. Elsewhere it uses the engine's sum.
struct CaseBranch {
  std::string label;
  ConstraintSet constraints;
  GenusEstimate estimate;
  long range_low = 0;
  long range_high = 0;
  bool tabulated = false;
  std::optional<LinearExpr> printed;  // closed expression stated for the sub-range
  long compared_bound = 0;
  bool strict = false;
  bool strictness_needed = false;  // compared_bound alone does not beat the reference
  bool below_reference = false;
};

struct CaseReport {
  std::string case_id;  // "I", "II (deg X = 5)", "II (deg X = 6)", "III", "IV"
  long d = 0;
  bool excluded = false;
  std::string note;
  std::vector<CaseBranch> branches;
  Rat reference;  // d(d-6)/8 + 1
  long bound = 0;  // max compared_bound over branches
  bool verdict = false;  // every branch concludes p_a < reference
};

inline constexpr long kAppendixMinDegree = 17;
inline constexpr long kAppendixMaxDegree = 143;

/// Replays the hyperplane-section case analysis for curves in P^4 of degree d
/// not on surfaces of degree < 5. Requires 17 <= d <= 143.
std::vector<CaseReport> appendix_replay(long d);

/// Coarsened sum for a set tabulated over [lo, hi] (see CaseBranch).
long coarsened_bound(const ConstraintSet& c, long range_high);

/// True when every case report for d concludes p_a < d(d-6)/8 + 1.
bool appendix_verdict(const std::vector<CaseReport>& reports);

}  // namespace curvegenus

#endif  // CURVEGENUS_APPENDIX_HPP
