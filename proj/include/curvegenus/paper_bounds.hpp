#ifndef CURVEGENUS_PAPER_BOUNDS_HPP
#define CURVEGENUS_PAPER_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "curvegenus/arith.hpp"
#include "curvegenus/classical_bounds.hpp"
#include "curvegenus/hilbert_profile.hpp"

namespace curvegenus {

/// An upper bound on the arithmetic genus, either a single number or an
/// interval (lower, upper] bracketing the maximal genus.
///
/// Point form: `upper` alone. When `upper` is integral the bound may be
/// attained; when `strict` is set the genus is known to be < upper.
/// Interval form: `lower` is set and `lower_open` records whether the lower
/// endpoint is excluded. The upper endpoint is always closed.
struct GenusBound {
  Rat upper;
  std::optional<Rat> lower;
  bool lower_open = false;
  bool strict = false;
  Validity validity;
  std::string attained_by;
  std::vector<std::string> notes;

  bool is_interval() const { return lower.has_value(); }
  bool is_point() const { return !lower && is_integral(upper); }
  /// Largest genus compatible with the bound.
  Int max_genus() const;
};

struct ExtremalConstruction {
  Int m;
  Int eps;
  Int mu;
  Int a;
  Int cone_multiplicity;  // k
  Int normalization_genus;
  Int delta_p;
  Int total_genus;
};

/// p_a <= d(d-6)/8 + 1 for curves in P^4 not on quadrics, d > 16.
GenusBound thm1_general_bound(const Int& d);

/// The bound for d odd or C a.C.M., d > 143, with d - 1 = 5m + eps.
GenusBound thm1_odd_acm_bound(const Int& d);

/// Integral value of thm1_odd_acm_bound's closed form.
Int thm1_odd_acm_value(const Int& d);

/// The minimal Hilbert function h_{d,pi} of hyperplane sections of curves on
/// a quintic surface in P^4 with sectional genus pi in {0, 1}.
HilbertProfile h_profile_dpi(long d, int pi);

/// G_{d,pi}: the deficiency sum of h_profile_dpi.
Int G_dpi(long d, int pi);

/// The two closed forms 5 binom(m,2) + m eps + 4 and
/// 5 binom(m,2) + m(eps+1) + 1 + binom(eps,4).
Int G_dpi_closed_form(const Int& d, int pi);

/// 6 binom(m,2) + m eps with d - 1 = 6m + eps, for curves in P^5 not on quadrics.
GenusBound thm2_bound(const Int& d);
Int thm2_value(const Int& d);

/// s for the quadric proposition: binom(r+2,2) = 3h + k, s = h-1 (k=0) or h (k=2).
Int prop3_params(const Int& r);

/// s = (binom(r+3,3) - 4)/6 for the cubic proposition; throws when not integral.
Int prop4_params(const Int& r);

/// Bracket d^2/2s + (d/2s)(2 pi - 2 - s) + O(1), 0 < O(1) <= s^3/(r-2).
/// The sectional genus pi is 0 for the scroll-based propositions and 1 for
/// the triple Veronese case (r = 6, s = 9).
GenusBound prop_bound_interval(const Int& r, const Int& d, const Int& s,
                               int sectional_genus = 0);

/// Bound for curves in P^6 not on quadrics via the projected triple Veronese surface.
GenusBound remark_veronese3_interval(const Int& d);

/// Genus of the cone construction with multiplicity-k vertex singularity.
ExtremalConstruction extremal_cone_genus(const Int& m, const Int& eps, const Int& mu);

}  // namespace curvegenus

#endif  // CURVEGENUS_PAPER_BOUNDS_HPP
