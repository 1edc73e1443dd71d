#include "curvegenus/hilbert_profile.hpp"

#include <algorithm>

namespace curvegenus {

long HilbertProfile::at(long i) const {
  if (i < 0) return 0;
  if (i > horizon()) return d;
  return values[static_cast<std::size_t>(i)];
}

long HilbertProfile::deficiency_sum() const {
  long sum = 0;
  for (long i = 1; i <= horizon(); ++i) sum += d - at(i);
  return sum;
}

std::string profile_violation(const HilbertProfile& h, long ambient_n) {
  if (h.values.empty()) return "empty profile";
  if (h.at(0) != 1) return "h(0) != 1";
  if (h.values.back() != h.d) return "profile does not reach d";
  const long horizon = h.horizon();
  for (long i = 1; i <= horizon; ++i) {
    const std::string at_i = " at i = " + std::to_string(i);
    if (h.at(i) < h.at(i - 1)) return "not nondecreasing" + at_i;
    if (h.at(i) > h.d) return "exceeds d" + at_i;
    if (h.at(i) < std::min(h.d, i * ambient_n + 1)) return "below min{d, iN+1}" + at_i;
    for (long j = 1; j < i; ++j) {
      if (h.at(i) < std::min(h.d, h.at(j) + h.at(i - j) - 1))
        return "superadditivity fails" + at_i + ", j = " + std::to_string(j);
    }
  }
  return {};
}

std::string to_string(const HilbertProfile& h) {
  std::string out = "[";
  for (std::size_t i = 0; i < h.values.size(); ++i) {
    if (i) out += ", ";
    out += std::to_string(h.values[i]);
  }
  return out + "]";
}

}  // namespace curvegenus
