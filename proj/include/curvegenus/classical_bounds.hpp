#ifndef CURVEGENUS_CLASSICAL_BOUNDS_HPP
#define CURVEGENUS_CLASSICAL_BOUNDS_HPP

#include <string>

#include "curvegenus/arith.hpp"

namespace curvegenus {

/// The range of degrees in which a bound formula is known to hold: d > above.
/// Formulas are evaluated outside it too; `within` records which side we are on.
struct Validity {
  Int above;
  bool within = true;
  std::string note;
};

/// Center +/- radius bracket for the Castelnuovo-Halphen genus G(r; d, s).
/// The interval is closed on both ends.
struct HalphenEstimate {
  Rat center;
  Rat radius;
  Rat lower;
  Rat upper;
  Validity validity;
};

struct Thresholds {
  Int d0;
  Int d1;
  Int sigma;
};

/// Lower bound on the sectional genus of a surface, selecting a branch of the
/// h^0 estimates for its hyperplane sections.
enum class PiClass { at_least_0, at_least_1, at_least_2 };

/// Castelnuovo's bound for a nondegenerate integral curve of degree d in
/// P^ambient_dim: binom(m,2)*s + m*eps with d - 1 = m*s + eps, s = ambient_dim - 1.
Int castelnuovo(const Int& ambient_dim, const Int& d);

/// Same number, assembled from the rational closed form
/// d^2/2s + d(-s-2)/2s + (1+eps)(s+1-eps)/2s.
Rat castelnuovo_closed_form(const Int& ambient_dim, const Int& d);

/// Maximal genus of an integral nondegenerate curve of degree d in P^n, with
/// the plane (n = 2) handled as binom(d-1, 2).
Int max_genus_nondegenerate(const Int& n, const Int& d);

/// Bracket for G(r; d, s). Requires s >= r - 1 >= 2.
HalphenEstimate halphen_interval(const Int& r, const Int& d, const Int& s);

/// ceil((2s/(r-2)) * ((r-1)! s)^{H_{r-2}}), H the harmonic number.
Int threshold_d0(const Int& r, const Int& s);

/// max{d0, ceil(4s(s+1)^3/(r-2))}.
Int threshold_d1(const Int& r, const Int& s);

/// Integer part of (s-r+2)(s^2/(2(r-2)) + 1) + 1.
Int sigma(const Int& r, const Int& s);

Thresholds thresholds(const Int& r, const Int& s);

/// pi_2(d, 4) of Eisenbud-Harris: maximal genus of a curve in P^4 not on a
/// surface of degree < 5 (for d > 143). Integrality is checked at runtime.
Int eh_pi2_bound(const Int& d);

/// Upper bound for h^0(O_Sigma(i)) on a degree-s curve with sectional genus
/// in the given class.
Int section_h0_upper(const Int& s, const Int& i, PiClass pi);

/// Lower bound for h^0(I_S(i)) of a degree-s surface in P^r. Negative values
/// mean no hypersurface of degree i is forced.
Int surface_ideal_lower_bound(const Int& r, const Int& s, const Int& i, PiClass pi);

/// h^0(O_S(k)) = k + 1 + binom(k+1, 2) s on a rational normal scroll of degree s.
Int scroll_h0(const Int& s, const Int& k);

std::string to_string(PiClass pi);

}  // namespace curvegenus

#endif  // CURVEGENUS_CLASSICAL_BOUNDS_HPP
