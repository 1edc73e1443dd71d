#ifndef CURVEGENUS_ARITH_HPP
#define CURVEGENUS_ARITH_HPP

#include <gmpxx.h>

#include <string>

#include "curvegenus/error.hpp"

namespace curvegenus {

using Int = mpz_class;
using Rat = mpq_class;

/// Normalized rational num/den. Throws DomainError on a zero denominator.
Rat make_rat(const Int& num, const Int& den = 1);

/// d - 1 = m*s + eps with 0 <= eps <= s-1.
struct Decomposition {
  Int divisor;    // s
  Int quotient;   // m
  Int remainder;  // eps

  Int degree() const { return quotient * divisor + remainder + 1; }
};

/// Binomial coefficient for n >= 0, k >= 0; zero when k > n.
Int binom(const Int& n, const Int& k);
Int binom(long n, long k);

/// Euclidean split of d - 1 by s. Requires s >= 2 and d >= s + 1.
Decomposition decompose(const Int& d, const Int& s);

/// Smallest integer n with n >= c * base^exp, decided by comparing
/// n^q against c^q * base^p for exp = p/q. Requires c > 0, base >= 1, exp >= 0.
Int ceil_power_product(const Rat& c, const Int& base, const Rat& exp);

/// H_n = 1 + 1/2 + ... + 1/n as an exact rational; H_0 = 0.
Rat harmonic(long n);

Int factorial(long n);

Int floor_rat(const Rat& q);
Int ceil_rat(const Rat& q);
bool is_integral(const Rat& q);

/// Converts q to Int, throwing DomainError with `what` if q is not integral.
Int assert_integral(const Rat& q, const std::string& what);

std::string to_string(const Int& v);
std::string to_string(const Rat& v);

/// Parses a decimal integer or a fraction "p/q".
Rat parse_rat(const std::string& text);

long to_long(const Int& v);

}  // namespace curvegenus

#endif  // CURVEGENUS_ARITH_HPP
