#include "curvegenus/classical_bounds.hpp"

#include <algorithm>

namespace curvegenus {

namespace {

void require_ambient(const Int& ambient_dim) {
  if (ambient_dim < 3)
    throw DomainError("ambient dimension must be >= 3, got " + ambient_dim.get_str());
}

}  // namespace

Int castelnuovo(const Int& ambient_dim, const Int& d) {
  require_ambient(ambient_dim);
  const Decomposition dec = decompose(d, ambient_dim - 1);
  return binom(dec.quotient, Int(2)) * dec.divisor + dec.quotient * dec.remainder;
}

Rat castelnuovo_closed_form(const Int& ambient_dim, const Int& d) {
  require_ambient(ambient_dim);
  const Decomposition dec = decompose(d, ambient_dim - 1);
  const Int& s = dec.divisor;
  const Int& eps = dec.remainder;
  const Int two_s = 2 * s;
  return make_rat(d * d, two_s) + make_rat(d * (-s - 2), two_s) +
         make_rat((1 + eps) * (s + 1 - eps), two_s);
}

Int max_genus_nondegenerate(const Int& n, const Int& d) {
  if (n == 2) {
    if (d < 1) throw DomainError("plane curve degree must be positive");
    return d >= 3 ? binom(Int(d - 1), Int(2)) : Int(0);
  }
  return castelnuovo(n, d);
}

HalphenEstimate halphen_interval(const Int& r, const Int& d, const Int& s) {
  if (r < 3) throw DomainError("halphen_interval: r must be >= 3");
  if (s < r - 1)
    throw DomainError("halphen_interval: need s >= r - 1 (s = " + s.get_str() +
                      ", r = " + r.get_str() + ")");
  HalphenEstimate out;
  const Int two_s = 2 * s;
  const Int g_prev = max_genus_nondegenerate(r - 1, s);
  out.center = make_rat(d * d, two_s) + make_rat(d * (2 * g_prev - 2 - s), two_s);
  out.radius = make_rat(s * s * s, r - 2);
  out.lower = out.center - out.radius;
  out.upper = out.center + out.radius;

  // Eisenbud-Harris extend the formula below d0 in two cases.
  if (r == 4 && s == 6) {
    out.validity.above = 143;
    out.validity.note = "valid for d > 143 (Eisenbud-Harris range, r = 4, s = 6)";
  } else if (r == 5 && s == 7) {
    out.validity.above = 179;
    out.validity.note = "valid for d > 179 (Eisenbud-Harris range, r = 5, s = 7)";
  } else {
    out.validity.above = threshold_d0(r, s);
    out.validity.note = "valid for d > d0(r, s) = " + out.validity.above.get_str();
  }
  out.validity.within = d > out.validity.above;
  return out;
}

Int threshold_d0(const Int& r, const Int& s) {
  if (r < 3 || s < r - 1) throw DomainError("threshold_d0: need s >= r - 1 >= 2");
  const long rl = to_long(r);
  const Rat c = make_rat(2 * s, r - 2);
  const Int base = factorial(rl - 1) * s;
  return ceil_power_product(c, base, harmonic(rl - 2));
}

Int threshold_d1(const Int& r, const Int& s) {
  const Int d0 = threshold_d0(r, s);
  const Int s1 = s + 1;
  const Int other = ceil_rat(make_rat(4 * s * s1 * s1 * s1, r - 2));
  return std::max(d0, other);
}

Int sigma(const Int& r, const Int& s) {
  if (r < 3) throw DomainError("sigma: r must be >= 3");
  const Rat value = Rat(s - r + 2) * (make_rat(s * s, 2 * (r - 2)) + 1) + 1;
  return floor_rat(value);
}

Thresholds thresholds(const Int& r, const Int& s) {
  return Thresholds{threshold_d0(r, s), threshold_d1(r, s), sigma(r, s)};
}

Int eh_pi2_bound(const Int& d) {
  if (d < 6) throw DomainError("eh_pi2_bound: d must be >= 6");
  const Decomposition dec = decompose(d, 5);
  const Int& v = dec.remainder;
  const Int w = std::max(Int(0), Int(v / 2));
  const Rat g = make_rat(d * d, 10) - make_rat(3 * d, 10) + make_rat(1, 5) +
                make_rat(v, 10) - make_rat(v * v, 10) + Rat(w);
  return assert_integral(g, "eh_pi2_bound(" + d.get_str() + ")");
}

Int section_h0_upper(const Int& s, const Int& i, PiClass pi) {
  if (i < 1) throw DomainError("section_h0_upper: i must be >= 1");
  switch (pi) {
    case PiClass::at_least_0: return 1 + i * s;
    case PiClass::at_least_1: return i * s;
    case PiClass::at_least_2: return -1 + i * s;
  }
  throw DomainError("unknown PiClass");
}

Int surface_ideal_lower_bound(const Int& r, const Int& s, const Int& i, PiClass pi) {
  if (i < 1) throw DomainError("surface_ideal_lower_bound: i must be >= 1");
  const Int ambient = binom(r + i, i);
  const Int quad = binom(i + 1, Int(2)) * s;
  switch (pi) {
    case PiClass::at_least_0: return ambient - (i + 1 + quad);
    case PiClass::at_least_1: return ambient - (1 + quad);
    case PiClass::at_least_2: return ambient - (1 - i + quad);
  }
  throw DomainError("unknown PiClass");
}

Int scroll_h0(const Int& s, const Int& k) {
  if (s < 2 || k < 1) throw DomainError("scroll_h0: need s >= 2 and k >= 1");
  return k + 1 + binom(k + 1, Int(2)) * s;
}

std::string to_string(PiClass pi) {
  switch (pi) {
    case PiClass::at_least_0: return "pi>=0";
    case PiClass::at_least_1: return "pi>=1";
    case PiClass::at_least_2: return "pi>=2";
  }
  return "?";
}

}  // namespace curvegenus
