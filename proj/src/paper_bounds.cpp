#include "curvegenus/paper_bounds.hpp"

#include <algorithm>

namespace curvegenus {

Int GenusBound::max_genus() const {
  if (strict) return ceil_rat(upper) - 1;
  return floor_rat(upper);
}

GenusBound thm1_general_bound(const Int& d) {
  if (d < 1) throw DomainError("thm1_general_bound: d must be positive");
  GenusBound out;
  out.upper = make_rat(d * (d - 6), 8) + 1;
  out.validity.above = 16;
  out.validity.within = d > 16;
  out.validity.note = "valid for d > 16";
  if (d % 2 == 0) {
    out.attained_by =
        "sharp iff projection of Veronese: curves on a generic projection of the "
        "Veronese surface to P^4 (genus of a plane curve of degree d/2)";
  } else {
    out.strict = true;
    out.notes.push_back("d odd: the bound is not attained");
  }
  if (!out.validity.within)
    out.notes.push_back("outside the validity range d > 16");
  return out;
}

Int thm1_odd_acm_value(const Int& d) {
  if (d < 6) throw DomainError("thm1_odd_acm_bound: d must be >= 6");
  const Decomposition dec = decompose(d, 5);
  const Int& eps = dec.remainder;
  const Rat value = make_rat(d * d, 10) - make_rat(d, 2) -
                    make_rat((eps - 4) * (eps + 1), 10) + Rat(binom(eps, Int(4))) + 1;
  return assert_integral(value, "thm1_odd_acm_bound(" + d.get_str() + ")");
}

GenusBound thm1_odd_acm_bound(const Int& d) {
  GenusBound out;
  out.upper = thm1_odd_acm_value(d);
  out.validity.above = 143;
  out.validity.within = d > 143;
  out.validity.note = "valid for d > 143 when d is odd or C is a.C.M.";
  out.attained_by =
      "a.C.M. curves on a quintic surface of sectional genus 1 (cone over an "
      "elliptic quintic), inside a cubic threefold";
  if (!out.validity.within)
    out.notes.push_back("outside the validity range d > 143");
  return out;
}

HilbertProfile h_profile_dpi(long d, int pi) {
  if (d < 7) throw DomainError("h_profile_dpi: d must be >= 7");
  if (pi != 0 && pi != 1) throw DomainError("h_profile_dpi: pi must be 0 or 1");
  const Decomposition dec = decompose(Int(d), Int(5));
  const long m = to_long(dec.quotient);
  const long eps = to_long(dec.remainder);

  HilbertProfile h;
  h.d = d;
  h.values.push_back(1);
  for (long i = 1; i <= m; ++i) {
    const long mu = (pi == 0 && i == 2) ? 1 : 0;
    h.values.push_back(1 - pi + 5 * i - std::max(0L, 3 - pi - i) - mu);
  }
  if (pi == 1 && eps == 4) h.values.push_back(d - 1);
  h.values.push_back(d);
  return h;
}

Int G_dpi(long d, int pi) { return h_profile_dpi(d, pi).deficiency_sum(); }

Int G_dpi_closed_form(const Int& d, int pi) {
  const Decomposition dec = decompose(d, 5);
  const Int& m = dec.quotient;
  const Int& eps = dec.remainder;
  if (pi == 0) return 5 * binom(m, Int(2)) + m * eps + 4;
  if (pi == 1) return 5 * binom(m, Int(2)) + m * (eps + 1) + 1 + binom(eps, Int(4));
  throw DomainError("G_dpi_closed_form: pi must be 0 or 1");
}

Int thm2_value(const Int& d) {
  if (d < 8) throw DomainError("thm2_bound: d must be >= 8");
  const Decomposition dec = decompose(d, 6);
  return 6 * binom(dec.quotient, Int(2)) + dec.quotient * dec.remainder;
}

GenusBound thm2_bound(const Int& d) {
  GenusBound out;
  out.upper = thm2_value(d);
  out.validity.above = 215;
  out.validity.within = d > 215;
  out.validity.note = "valid for d > 215";
  out.attained_by =
      "generic projection to P^5 of a Castelnuovo curve on a smooth rational "
      "normal scroll of degree 6 in P^7";
  out.notes.push_back("equals Castelnuovo's bound for degree-d curves in P^7");
  out.notes.push_back(
      "sampled generic projections of sextic scrolls to P^5 lie on one quadric; "
      "see `surface certify --kind scroll --a 3 --b 3 --target 5`");
  if (!out.validity.within)
    out.notes.push_back("outside the validity range d > 215");
  return out;
}

Int prop3_params(const Int& r) {
  if (r < 7) throw DomainError("prop3_params: r must be >= 7");
  const Int total = binom(r + 2, Int(2));
  const Int h = total / 3;
  const Int k = total - 3 * h;
  if (k == 0) return h - 1;
  if (k == 2) return h;
  throw DomainError("r = " + r.get_str() +
                    " divisible by 3: outside the quadric proposition "
                    "(see the triple Veronese case for r = 6)");
}

Int prop4_params(const Int& r) {
  if (r < 9) throw DomainError("prop4_params: r must be >= 9");
  const Int numerator = binom(r + 3, Int(3)) - 4;
  if (numerator % 6 != 0)
    throw DomainError("r = " + r.get_str() +
                      " outside the cubic proposition classes: (binom(r+3,3) - 4)/6 "
                      "is not an integer");
  return numerator / 6;
}

GenusBound prop_bound_interval(const Int& r, const Int& d, const Int& s,
                               int sectional_genus) {
  if (r < 3) throw DomainError("prop_bound_interval: r must be >= 3");
  if (s < 1) throw DomainError("prop_bound_interval: s must be positive");
  GenusBound out;
  const Int two_s = 2 * s;
  const Rat base = make_rat(d * d, two_s) + make_rat(d * (2 * sectional_genus - 2 - s), two_s);
  out.lower = base;
  out.lower_open = true;
  out.upper = base + make_rat(s * s * s, r - 2);
  out.validity.above = threshold_d1(r, s);
  out.validity.within = d > out.validity.above;
  out.validity.note = "valid for d > d1(r, s) = " + out.validity.above.get_str();
  if (sectional_genus == 0) {
    out.attained_by =
        "generic projection of a Castelnuovo curve on a rational normal scroll of "
        "degree s; constant term known only up to 0 < O(1) <= s^3/(r-2)";
  }
  if (!out.validity.within)
    out.notes.push_back("outside the validity range d > d1(r, s)");
  return out;
}

GenusBound remark_veronese3_interval(const Int& d) {
  GenusBound out = prop_bound_interval(6, d, 9, 1);
  out.attained_by =
      "curves on a generic projection to P^6 of the triple Veronese surface; "
      "sharpness is conditional and stated for d divisible by 3";
  out.notes.push_back("radius s^3/(r-2) = 729/4; the stated integer constant is 182");
  if (d % 3 != 0) out.notes.push_back("d not divisible by 3: stated only for d = 0 mod 3");
  return out;
}

ExtremalConstruction extremal_cone_genus(const Int& m, const Int& eps, const Int& mu) {
  if (mu < 3 || m < mu)
    throw DomainError("extremal_cone_genus: need m >= mu >= 3");
  if (eps < 0 || eps > 4) throw DomainError("extremal_cone_genus: need 0 <= eps <= 4");
  ExtremalConstruction out;
  out.m = m;
  out.eps = eps;
  out.mu = mu;
  out.a = -mu - 1;
  out.cone_multiplicity = 5 * mu + eps + 1;

  const Int& a = out.a;
  const Rat normalization = Rat(5 * binom(m, Int(2)) + m * (eps + 1) + 1) -
                            make_rat(5 * a * a, 2) + Rat(a) * (Rat(eps) - make_rat(3, 2));
  out.normalization_genus = assert_integral(normalization, "normalization genus");

  const Int tangent_cone_genus =
      5 * binom(mu, Int(2)) + mu * (1 + eps) + 1 + binom(eps, Int(4));
  out.delta_p = tangent_cone_genus - (1 - out.cone_multiplicity);
  out.total_genus = out.normalization_genus + out.delta_p;
  return out;
}

}  // namespace curvegenus
