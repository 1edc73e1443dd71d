#ifndef CURVEGENUS_HILBERT_ENGINE_HPP
#define CURVEGENUS_HILBERT_ENGINE_HPP

#include <map>
#include <string>
#include <vector>

#include "curvegenus/hilbert_profile.hpp"

namespace curvegenus {

/// Macaulay-type decay rule  Delta h(i+1) <= max{0, Delta h(i) - drop}.
struct DecayRule {
  long index = 0;
  long drop = 0;

  friend bool operator==(const DecayRule&, const DecayRule&) = default;
};

/// Lower-bound constraints on the Hilbert function of d points in P^n.
///
/// `decay` holds unresolved disjunctive rules; genus_upper_bound resolves them
/// with decay_split. `decay_active` holds rules already resolved to their
/// non-saturated branch: h(i) < d and Delta h(i+1) <= Delta h(i) - drop.
struct ConstraintSet {
  long d = 0;
  long n = 0;
  std::map<long, long> fixed;
  std::map<long, long> lower;
  std::vector<DecayRule> decay;
  std::vector<DecayRule> decay_active;
  bool strict = false;
  std::string label;

  friend bool operator==(const ConstraintSet&, const ConstraintSet&) = default;
};

struct GenusEstimate {
  long bound = 0;
  bool strict = false;
  HilbertProfile profile;  // closure of the branch attaining `bound`
  int branches = 1;
};

/// Throws DomainError when indices or values are out of range.
void validate(const ConstraintSet& c);

/// Pointwise least h satisfying the lower bounds, the fixed values (as lower
/// bounds), h(i) >= min{d, iN+1}, monotonicity, superadditivity
/// h(i) >= min{d, h(j) + h(i-j) - 1}, and the active decay rules.
/// Fixed values are then checked for equality; a fixed value strictly below
/// its closed lower bound throws InfeasibleError.
/// Unresolved `decay` rules are ignored here.
HilbertProfile minimal_profile(const ConstraintSet& c);

/// The deficiency sum of the closure, maximized over all branches of the
/// unresolved decay rules.
GenusEstimate genus_upper_bound(const ConstraintSet& c);

/// Splits c on the rule Delta h(i+1) <= max{0, Delta h(i) - drop}:
/// (a) h(i) = d, or (b) h(i) < d with the decay inequality active.
/// Returns one set when the index is already saturated or when branch (b)
/// cannot hold. Any matching entry in c.decay is consumed.
std::vector<ConstraintSet> decay_split(const ConstraintSet& c, long i, long drop);

}  // namespace curvegenus

#endif  // CURVEGENUS_HILBERT_ENGINE_HPP
