#ifndef CURVEGENUS_HILBERT_PROFILE_HPP
#define CURVEGENUS_HILBERT_PROFILE_HPP

#include <string>
#include <vector>

namespace curvegenus {

/// A finite Hilbert function h(0), ..., h(H) of d points, with h(H) = d.
struct HilbertProfile {
  long d = 0;
  std::vector<long> values;

  long horizon() const { return static_cast<long>(values.size()) - 1; }
  /// h(i); equal to d beyond the horizon.
  long at(long i) const;
  /// Sum over i >= 1 of d - h(i).
  long deficiency_sum() const;

  friend bool operator==(const HilbertProfile&, const HilbertProfile&) = default;
};

/// Checks h(0) = 1, monotonicity, h <= d, h(H) = d, the superadditivity rule
/// h(i+j) >= min{d, h(i)+h(j)-1} and the lower envelope h(i) >= min{d, iN+1}.
/// Returns an empty string when all hold, else a description of the first violation.
std::string profile_violation(const HilbertProfile& h, long ambient_n);

std::string to_string(const HilbertProfile& h);

}  // namespace curvegenus

#endif  // CURVEGENUS_HILBERT_PROFILE_HPP
