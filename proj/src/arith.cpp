#include "curvegenus/arith.hpp"

#include <climits>

namespace curvegenus {

Rat make_rat(const Int& num, const Int& den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

Int binom(const Int& n, const Int& k) {
  if (k < 0) throw DomainError("binom: negative k = " + k.get_str());
  if (n < 0) throw DomainError("binom: negative n = " + n.get_str());
  if (k > n) return 0;
  Int result;
  // mpz_bin_ui needs k as unsigned long; use the smaller of k, n-k.
  Int kk = (k * 2 > n) ? Int(n - k) : k;
  if (!kk.fits_ulong_p()) throw DomainError("binom: k too large");
  mpz_bin_ui(result.get_mpz_t(), n.get_mpz_t(), kk.get_ui());
  return result;
}

Int binom(long n, long k) { return binom(Int(n), Int(k)); }

Decomposition decompose(const Int& d, const Int& s) {
  if (s < 2) throw DomainError("decompose: divisor s must be >= 2");
  if (d <= s)
    throw DomainError("degree below degenerate threshold: d = " + d.get_str() +
                      " <= s = " + s.get_str());
  Decomposition out;
  out.divisor = s;
  Int dm1 = d - 1;
  mpz_fdiv_qr(out.quotient.get_mpz_t(), out.remainder.get_mpz_t(),
              dm1.get_mpz_t(), s.get_mpz_t());
  return out;
}

namespace {

Int pow_int(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

}  // namespace

Int ceil_power_product(const Rat& c, const Int& base, const Rat& exp) {
  if (c <= 0) throw DomainError("ceil_power_product: c must be positive");
  if (base < 1) throw DomainError("ceil_power_product: base must be >= 1");
  if (exp < 0) throw DomainError("ceil_power_product: exp must be >= 0");
  const Int& p = exp.get_num();
  const Int& q = exp.get_den();
  if (!p.fits_ulong_p() || !q.fits_ulong_p())
    throw DomainError("ceil_power_product: exponent too large");
  const unsigned long pu = p.get_ui();
  const unsigned long qu = q.get_ui();

  // target = c^q * base^p = num / den
  const Int num = pow_int(c.get_num(), qu) * pow_int(base, pu);
  const Int den = pow_int(c.get_den(), qu);

  Int floor_target;
  mpz_fdiv_q(floor_target.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Int root;
  mpz_root(root.get_mpz_t(), floor_target.get_mpz_t(), qu);
  // root <= target^(1/q) < root + 1, so the ceiling is root or root + 1.
  if (pow_int(root, qu) * den >= num) return root;
  return root + 1;
}

Rat harmonic(long n) {
  Rat h = 0;
  for (long i = 1; i <= n; ++i) h += make_rat(1, i);
  return h;
}

Int factorial(long n) {
  if (n < 0) throw DomainError("factorial of a negative number");
  Int out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

Int floor_rat(const Rat& q) {
  Int out;
  mpz_fdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

Int ceil_rat(const Rat& q) {
  Int out;
  mpz_cdiv_q(out.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
  return out;
}

bool is_integral(const Rat& q) { return q.get_den() == 1; }

Int assert_integral(const Rat& q, const std::string& what) {
  if (!is_integral(q))
    throw DomainError(what + ": expected an integer, got " + to_string(q));
  return q.get_num();
}

std::string to_string(const Int& v) { return v.get_str(); }

std::string to_string(const Rat& v) { return v.get_str(); }

Rat parse_rat(const std::string& text) {
  Rat q;
  if (text.empty() || q.set_str(text, 10) != 0)
    throw ParseError("not a rational number: '" + text + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  q.canonicalize();
  return q;
}

long to_long(const Int& v) {
  if (!v.fits_slong_p()) throw DomainError("integer out of machine range: " + v.get_str());
  return v.get_si();
}

}  // namespace curvegenus
