#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "curvegenus/arith.hpp"

using namespace curvegenus;

namespace {

Int power(const Int& base, unsigned long e) {
  Int out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), e);
  return out;
}

// n (n-1) ... (n-k+1) / k!
Int binom_by_product(long n, long k) {
  Int num = 1, den = 1;
  for (long j = 0; j < k; ++j) {
    num *= n - j;
    den *= j + 1;
  }
  return num / den;
}

}  // namespace

TEST_CASE("binom matches direct multiplication") {
  CHECK(binom(36, 2) == binom_by_product(36, 2));
  CHECK(binom(36, 2) == 630);
  CHECK(binom(3, 4) == 0);
  CHECK(binom(0, 0) == 1);
  for (long n = 0; n <= 40; ++n) CHECK(binom(n, 0) == 1);
  CHECK(binom(Int(100), Int(50)) == binom_by_product(100, 50));
}

TEST_CASE("binom satisfies Pascal's rule up to 60") {
  for (long n = 1; n <= 60; ++n)
    for (long k = 1; k <= n; ++k)
      REQUIRE(binom(n, k) == binom(n - 1, k - 1) + binom(n - 1, k));
}

TEST_CASE("binom rejects negative arguments") {
  CHECK_THROWS_AS(binom(-1, 2), DomainError);
  CHECK_THROWS_AS(binom(5, -1), DomainError);
  CHECK_THROWS_WITH(binom(5, -3), doctest::Contains("-3"));
}

TEST_CASE("decompose") {
  const Decomposition a = decompose(24, 5);
  CHECK(a.quotient == 4);
  CHECK(a.remainder == 3);
  const Decomposition b = decompose(217, 6);
  CHECK(b.quotient == 36);
  CHECK(b.remainder == 0);
  const Decomposition c = decompose(144, 5);
  CHECK(c.quotient == 28);
  CHECK(c.remainder == 3);

  CHECK_THROWS_WITH_AS(decompose(5, 5), doctest::Contains("degenerate"), DomainError);
  CHECK_THROWS_AS(decompose(10, 1), DomainError);

  SUBCASE("round trip") {
    for (long s = 2; s <= 30; ++s)
      for (long d = s + 1; d <= 400; ++d) {
        const Decomposition dec = decompose(d, s);
        REQUIRE(dec.degree() == d);
        REQUIRE(dec.remainder >= 0);
        REQUIRE(dec.remainder < s);
      }
  }
}

TEST_CASE("ceil_power_product examples") {
  CHECK(ceil_power_product(Rat(5), 30, make_rat(3, 2)) == 822);
  CHECK(ceil_power_product(Rat(1), 8, make_rat(1, 3)) == 2);
  CHECK(ceil_power_product(make_rat(7, 2), 1, make_rat(5, 7)) == 4);
  CHECK(ceil_power_product(Rat(3), 7, Rat(0)) == 3);
  CHECK(ceil_power_product(make_rat(1, 3), 1, Rat(1)) == 1);
}

TEST_CASE("ceil_power_product brackets c * base^exp") {
  std::mt19937_64 rng(20260);
  auto pick = [&rng](long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng); };
  for (int trial = 0; trial < 1000; ++trial) {
    const Int num = pick(1, 500);
    const Int den = pick(1, 50);
    const Int base = pick(1, 1000);
    const unsigned long q = static_cast<unsigned long>(pick(1, 6));
    const unsigned long p = static_cast<unsigned long>(pick(0, 12));
    const Rat c = make_rat(num, den);
    const Rat e = make_rat(Int(p), Int(q));
    const Int n = ceil_power_product(c, base, e);
    // n^q * den^q against num^q * base^p, with exp = p/q in lowest terms.
    const unsigned long eq = mpz_get_ui(e.get_den().get_mpz_t());
    const unsigned long ep = mpz_get_ui(e.get_num().get_mpz_t());
    const Int rhs = power(c.get_num(), eq) * power(base, ep);
    const Int scale = power(c.get_den(), eq);
    INFO("c = ", to_string(c), " base = ", base.get_str(), " exp = ", to_string(e));
    REQUIRE(power(n, eq) * scale >= rhs);
    if (n > 0) REQUIRE(power(n - 1, eq) * scale < rhs);
  }
}

TEST_CASE("harmonic and factorial") {
  CHECK(harmonic(0) == 0);
  CHECK(harmonic(1) == 1);
  CHECK(harmonic(4) == make_rat(25, 12));
  CHECK(factorial(0) == 1);
  CHECK(factorial(10) == 3628800);
}

TEST_CASE("rational helpers") {
  CHECK(make_rat(6, -4) == make_rat(-3, 2));
  CHECK(make_rat(6, -4).get_den() == 2);
  CHECK_THROWS_AS(make_rat(1, 0), DomainError);
  CHECK(floor_rat(make_rat(-7, 2)) == -4);
  CHECK(ceil_rat(make_rat(-7, 2)) == -3);
  CHECK(floor_rat(make_rat(7, 2)) == 3);
  CHECK(ceil_rat(Rat(5)) == 5);
  CHECK(is_integral(make_rat(8, 4)));
  CHECK_FALSE(is_integral(make_rat(1, 3)));
  CHECK(assert_integral(make_rat(10, 5), "x") == 2);
  CHECK_THROWS_WITH_AS(assert_integral(make_rat(1, 2), "probe"), doctest::Contains("probe"),
                       DomainError);
  CHECK(parse_rat("-12/8") == make_rat(-3, 2));
  CHECK(parse_rat("17") == 17);
  CHECK_THROWS_AS(parse_rat("1/0"), Error);
  CHECK_THROWS_AS(parse_rat("abc"), Error);
  CHECK(to_string(make_rat(3, 6)) == "1/2");
  CHECK(to_long(Int(123456789)) == 123456789);
}
