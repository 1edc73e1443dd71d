#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "curvegenus/paper_bounds.hpp"

using namespace curvegenus;

namespace {

long sum_deficiency(long d, const std::vector<long>& values) {
  long total = 0;
  for (std::size_t i = 1; i < values.size(); ++i) total += d - values[i];
  return total;
}

}  // namespace

TEST_CASE("general no-quadrics bound in P^4") {
  CHECK(thm1_general_bound(24).upper == 55);
  CHECK(thm1_general_bound(18).upper == 28);
  CHECK(thm1_general_bound(30).upper == 91);

  const GenusBound even = thm1_general_bound(24);
  CHECK(even.is_point());
  CHECK_FALSE(even.strict);
  CHECK(even.max_genus() == 55);
  CHECK(even.attained_by.rfind("sharp iff projection of Veronese", 0) == 0);
  CHECK(even.validity.within);

  const GenusBound odd = thm1_general_bound(25);
  CHECK(odd.strict);
  CHECK(odd.upper == make_rat(25 * 19, 8) + 1);
  CHECK(odd.max_genus() == 60);

  const GenusBound low = thm1_general_bound(10);
  CHECK_FALSE(low.validity.within);
  CHECK(low.upper == 6);

  for (long d = 18; d <= 1000; d += 2) {
    const long half = d / 2;
    REQUIRE(thm1_general_bound(d).upper == Rat((half - 1) * (half - 2) / 2));
  }
}

TEST_CASE("odd or a.C.M. bound") {
  CHECK(thm1_odd_acm_value(144) == 2003);
  CHECK(thm1_odd_acm_value(144) == 5 * binom(28, 2) + 28 * 4 + 1);
  CHECK(thm1_odd_acm_value(24) == 47);
  CHECK(thm1_odd_acm_bound(144).validity.above == 143);
  CHECK_FALSE(thm1_odd_acm_bound(143).validity.within);
  for (long d = 7; d <= 1000; ++d) REQUIRE(thm1_odd_acm_value(d) == G_dpi(d, 1));
  for (long d = 144; d <= 1000; d += 2)
    REQUIRE(Rat(thm1_odd_acm_value(d)) < thm1_general_bound(d).upper);
}

TEST_CASE("quintic profiles") {
  const HilbertProfile h0 = h_profile_dpi(24, 0);
  CHECK(h0.values == std::vector<long>{1, 4, 9, 16, 21, 24});
  CHECK(h0.at(9) == 24);
  const HilbertProfile h1 = h_profile_dpi(24, 1);
  CHECK(h1.values == std::vector<long>{1, 4, 10, 15, 20, 24});
  CHECK(G_dpi(24, 0) == 46);
  CHECK(G_dpi(24, 1) == 47);
  CHECK(sum_deficiency(24, h0.values) == 20 + 15 + 8 + 3);

  SUBCASE("eps = 4 tail") {
    // 30 - 1 = 5*5 + 4
    const HilbertProfile h = h_profile_dpi(30, 1);
    CHECK(h.values[6] == 29);
    CHECK(h.values.back() == 30);
  }
  SUBCASE("sums equal the closed forms") {
    for (long d = 11; d <= 500; ++d)
      for (int pi : {0, 1}) REQUIRE(G_dpi(d, pi) == G_dpi_closed_form(d, pi));
    // below 11 the pi = 0 profile saturates at i = 2 and the +4 overcounts
    CHECK(G_dpi(7, 0) == 3);
    CHECK(G_dpi_closed_form(7, 0) == 5);
    for (long d = 20; d <= 500; ++d) REQUIRE(G_dpi(d, 0) < G_dpi(d, 1));
  }
  CHECK_THROWS_AS(h_profile_dpi(6, 0), DomainError);
  CHECK_THROWS_AS(h_profile_dpi(30, 2), DomainError);
}

TEST_CASE("no-quadrics bound in P^5") {
  CHECK(thm2_value(217) == 3780);
  CHECK(thm2_bound(217).upper == 3780);
  CHECK(thm2_bound(216).validity.within);
  CHECK_FALSE(thm2_bound(215).validity.within);
  for (long d = 216; d <= 2000; ++d) REQUIRE(thm2_value(d) == castelnuovo(7, d));
  for (long d = 180; d <= 5000; ++d)
    REQUIRE(make_rat(Int(d) * d, 14) - make_rat(3 * d, 14) + 115 < Rat(thm2_value(d)));
}

TEST_CASE("quadric proposition parameters") {
  CHECK(prop3_params(7) == 11);
  CHECK(prop3_params(8) == 14);
  CHECK(prop3_params(10) == 21);
  CHECK_THROWS_WITH_AS(prop3_params(9), doctest::Contains("divisible by 3"), DomainError);
  CHECK_THROWS_AS(prop3_params(6), DomainError);
  for (long r = 7; r <= 200; ++r) {
    if (r % 3 == 0) continue;
    const Int s = prop3_params(r);
    const Int forms = binom(r + 2, 2);
    REQUIRE(forms - 3 * (s + 1) <= 0);
    REQUIRE(forms - 3 * s > 0);
  }
}

TEST_CASE("cubic proposition parameters") {
  CHECK(prop4_params(9) == 36);
  CHECK(prop4_params(10) == 47);
  CHECK(prop4_params(11) == 60);
  CHECK(prop4_params(18) == 221);
  CHECK(prop4_params(19) == 256);
  CHECK((binom(15, 3) - 4) % 6 != 0);
  CHECK_THROWS_AS(prop4_params(12), DomainError);
  const std::vector<long> classes{1, 2, 9, 10, 11, 18, 19, 27, 29};
  for (long r = 9; r <= 300; ++r) {
    const bool in_class =
        std::find(classes.begin(), classes.end(), r % 36) != classes.end();
    if (in_class) {
      REQUIRE(6 * prop4_params(r) + 4 == binom(r + 3, 3));
    } else {
      REQUIRE_THROWS_AS(prop4_params(r), DomainError);
    }
  }
}

TEST_CASE("scroll interval bounds") {
  const Int d = 4000000000;
  const GenusBound b = prop_bound_interval(7, d, 11);
  REQUIRE(b.is_interval());
  CHECK(b.lower_open);
  CHECK(b.upper - *b.lower == make_rat(1331, 5));
  // lower end is the Castelnuovo closed form without its eps term
  const Decomposition dec = decompose(d, 11);
  const Rat eps_term = make_rat((1 + dec.remainder) * (12 - dec.remainder), 22);
  CHECK(*b.lower == castelnuovo_closed_form(12, d) - eps_term);
  CHECK(b.validity.above == threshold_d1(7, 11));
  CHECK(b.validity.within);
  CHECK_FALSE(prop_bound_interval(7, 1000, 11).validity.within);

  const GenusBound v = remark_veronese3_interval(1000);
  CHECK(*v.lower == make_rat(1000 * 1000, 18) - 500);
  CHECK(v.upper - *v.lower == make_rat(729, 4));
  bool mentions_182 = false;
  for (const auto& note : v.notes) mentions_182 |= note.find("182") != std::string::npos;
  CHECK(mentions_182);
}

TEST_CASE("cone construction genus") {
  const ExtremalConstruction c = extremal_cone_genus(6, 0, 3);
  CHECK(c.a == -4);
  CHECK(c.cone_multiplicity == 16);
  CHECK(c.normalization_genus == 48);
  CHECK(c.delta_p == 34);
  CHECK(c.total_genus == 82);
  CHECK(c.total_genus == G_dpi(31, 1));

  const ExtremalConstruction e4 = extremal_cone_genus(10, 4, 3);
  const ExtremalConstruction e3 = extremal_cone_genus(10, 3, 3);
  // mu from the linear term, 1 from binom(eps, 4), 1 from the multiplicity
  CHECK(e4.delta_p - e3.delta_p == 5);

  for (long m = 4; m <= 60; ++m)
    for (long eps = 0; eps <= 4; ++eps)
      for (long mu = 3; mu <= m - 1; ++mu) {
        const ExtremalConstruction x = extremal_cone_genus(m, eps, mu);
        REQUIRE(x.total_genus == x.normalization_genus + x.delta_p);
        REQUIRE(x.total_genus == G_dpi(5 * m + eps + 1, 1));
      }
  CHECK_THROWS_AS(extremal_cone_genus(5, 0, 2), DomainError);
  CHECK_THROWS_AS(extremal_cone_genus(5, 5, 3), DomainError);
  CHECK_THROWS_AS(extremal_cone_genus(3, 0, 4), DomainError);
}
