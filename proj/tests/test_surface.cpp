#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>

#include "curvegenus/classical_bounds.hpp"
#include "curvegenus/error.hpp"
#include "curvegenus/row_echelon.hpp"
#include "curvegenus/surface.hpp"
#include "curvegenus/surface_lab.hpp"

using namespace curvegenus;

namespace {

using Exponent = std::vector<int>;
using Poly = std::map<Exponent, Int>;

Poly monomial(std::size_t vars, std::initializer_list<std::pair<std::size_t, int>> powers) {
  Exponent e(vars, 0);
  for (auto [i, p] : powers) e[i] = p;
  return Poly{{e, Int(1)}};
}

Poly multiply(const Poly& a, const Poly& b) {
  Poly out;
  for (const auto& [ea, ca] : a)
    for (const auto& [eb, cb] : b) {
      Exponent e(ea.size());
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      out[e] += ca * cb;
    }
  return out;
}

// Coordinates of the unprojected surface as polynomials in its parameters,
// written out independently of the library's parametrization.
std::vector<Poly> source_coordinates(const ParamSurface& s) {
  std::vector<Poly> out;
  if (s.kind == SurfaceKind::scroll) {
    // parameters (u, v, x, y)
    for (int i = 0; i <= s.a; ++i)
      out.push_back(monomial(4, {{0, static_cast<int>(s.a) - i}, {1, i}, {2, 1}}));
    for (int i = 0; i <= s.b; ++i)
      out.push_back(monomial(4, {{0, static_cast<int>(s.b) - i}, {1, i}, {3, 1}}));
    return out;
  }
  const int k = s.kind == SurfaceKind::veronese2 ? 2 : 3;
  for (int p = k; p >= 0; --p)
    for (int q = k - p; q >= 0; --q) out.push_back(monomial(3, {{0, p}, {1, q}, {2, k - p - q}}));
  return out;
}

std::vector<Poly> coordinates(const ParamSurface& s) {
  const std::vector<Poly> src = source_coordinates(s);
  if (!s.projected()) return src;
  std::vector<Poly> out;
  for (const auto& row : s.projection) {
    Poly p;
    for (std::size_t k = 0; k < row.size(); ++k)
      for (const auto& [e, c] : src[k]) p[e] += row[k] * c;
    out.push_back(p);
  }
  return out;
}

std::size_t rational_rank(std::vector<std::vector<Rat>> a) {
  std::size_t rank = 0;
  const std::size_t cols = a.empty() ? 0 : a.front().size();
  for (std::size_t c = 0; c < cols && rank < a.size(); ++c) {
    std::size_t p = rank;
    while (p < a.size() && a[p][c] == 0) ++p;
    if (p == a.size()) continue;
    std::swap(a[p], a[rank]);
    for (std::size_t r = 0; r < a.size(); ++r) {
      if (r == rank || a[r][c] == 0) continue;
      const Rat f = a[r][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[r][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// Dimension of the quadrics vanishing on s, from the symbolic pullback.
long quadrics_through(const ParamSurface& s) {
  const std::vector<Poly> x = coordinates(s);
  std::vector<Poly> pulled;
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = i; j < x.size(); ++j) pulled.push_back(multiply(x[i], x[j]));
  std::map<Exponent, std::size_t> row_of;
  for (const Poly& p : pulled)
    for (const auto& [e, c] : p) row_of.emplace(e, row_of.size());
  // one row per quadric; rank of the pullback map
  std::vector<std::vector<Rat>> m(pulled.size(), std::vector<Rat>(row_of.size()));
  for (std::size_t q = 0; q < pulled.size(); ++q)
    for (const auto& [e, c] : pulled[q]) m[q][row_of.at(e)] = c;
  return static_cast<long>(pulled.size() - rational_rank(m));
}

}  // namespace

TEST_CASE("parametrizations") {
  const std::vector<Int> v = parametrize_int(veronese2(), {1, 2, 3});
  CHECK(v == std::vector<Int>{1, 2, 3, 4, 6, 9});
  const std::vector<Int> s = parametrize_int(scroll(1, 2), {2, 3, 5, 7});
  CHECK(s == std::vector<Int>{10, 15, 28, 42, 63});
  CHECK(parametrize_int(veronese3(), {1, 1, 1}).size() == 10);
  const std::vector<Rat> r = parametrize(veronese2(), {make_rat(1, 2), Rat(1), Rat(0)});
  CHECK(r.front() == make_rat(1, 4));
  CHECK_THROWS_AS(parametrize_int(veronese2(), {0, 0, 0}), DomainError);
  CHECK_THROWS_AS(scroll(3, 2), DomainError);
  CHECK(scroll(3, 3).ambient_dim == 7);
  CHECK(veronese3().ambient_dim == 9);
  CHECK(parse_surface_kind(to_string(SurfaceKind::scroll)) == SurfaceKind::scroll);
  CHECK_THROWS_AS(parse_surface_kind("torus"), ParseError);
}

TEST_CASE("graded lex monomials") {
  const auto m = monomial_exponents(3, 2);
  REQUIRE(m.size() == 6);
  CHECK(m[0] == std::vector<int>{2, 0, 0});
  CHECK(m[1] == std::vector<int>{1, 1, 0});
  CHECK(m[2] == std::vector<int>{1, 0, 1});
  CHECK(m[3] == std::vector<int>{0, 2, 0});
  CHECK(m[5] == std::vector<int>{0, 0, 2});
  for (std::size_t n = 1; n <= 8; ++n)
    for (int k = 0; k <= 4; ++k)
      REQUIRE(Int(monomial_exponents(n, k).size()) == binom(Int(n + k - 1), Int(k)));
}

TEST_CASE("sample stream") {
  SampleStream a(5), b(5);
  for (int i = 0; i < 1000; ++i) {
    const long x = a.uniform(-3, 3);
    REQUIRE(x == b.uniform(-3, 3));
    REQUIRE(x >= -3);
    REQUIRE(x <= 3);
  }
}

TEST_CASE("generic projection") {
  const ParamSurface p = generic_projection(veronese2(), 4, 9);
  CHECK(p.ambient_dim == 4);
  CHECK(p.projection.size() == 5);
  CHECK(p.projection.front().size() == 6);
  CHECK(p.projection == generic_projection(veronese2(), 4, 9).projection);
  CHECK(p.projection != generic_projection(veronese2(), 4, 10).projection);
  CHECK(exact_rank(p.projection) == 5);
  CHECK_THROWS_AS(generic_projection(veronese2(), 5, 1), DomainError);
}

TEST_CASE("ideal dimensions of the unprojected surfaces") {
  CHECK(h0_ideal(veronese2(), 2, 1).kernel_dim == 6);
  CHECK(h0_ideal(veronese2(), 2, 1).kernel_dim == quadrics_through(veronese2()));
  CHECK(h0_ideal(scroll(3, 3), 2, 1).kernel_dim == 15);
  CHECK(quadrics_through(scroll(3, 3)) == 15);
  CHECK(quadrics_through(scroll(1, 2)) == 3);
  CHECK(h0_ideal(scroll(1, 2), 2, 4).kernel_dim == 3);
  const H0Result v3 = h0_ideal(veronese3(), 2, 1);
  CHECK(v3.kernel_dim == 27);
  CHECK(v3.method == "exact");
  CHECK(v3.monomials == 55);
}

TEST_CASE("h0_ideal bookkeeping") {
  const H0Result r = h0_ideal(scroll(2, 3), 2, 21);
  CHECK(r.stabilized);
  CHECK(r.seed == 21);
  CHECK(r.kernel_history.size() == 3);
  for (std::size_t i = 1; i < r.kernel_history.size(); ++i)
    CHECK(r.kernel_history[i] <= r.kernel_history[i - 1]);
  CHECK(r.samples_used == 3 * r.monomials);
  CHECK(r.kernel_dim == h0_ideal(scroll(2, 3), 2, 22).kernel_dim);

  H0Options modular;
  modular.method = RankMethod::modular;
  CHECK(h0_ideal(scroll(2, 3), 2, 21, modular).kernel_dim == r.kernel_dim);
  CHECK(h0_ideal(scroll(2, 3), 2, 21, modular).method == "modular");

  // a zero kernel after the first batch is final
  const H0Result zero = h0_ideal(generic_projection(veronese2(), 4, 3), 2, 5);
  CHECK(zero.kernel_dim == 0);
  CHECK(zero.kernel_history.size() == 1);

  H0Options tight;
  tight.max_batches = 2;
  CHECK_THROWS_AS(h0_ideal(scroll(3, 3), 2, 1, tight), InconclusiveError);
}

TEST_CASE("projected surfaces") {
  for (std::uint64_t seed : {1ULL, 2ULL}) {
    const ParamSurface v = generic_projection(veronese2(), 4, seed);
    const H0Result r = h0_ideal(v, 2, seed);
    CHECK(r.kernel_dim == quadrics_through(v));
    CHECK(r.kernel_dim == 0);
    CHECK(Int(r.kernel_dim) <= binom(Int(4 + 2), Int(2)));
  }
  CHECK(h0_ideal(generic_projection(veronese3(), 6, 1), 2, 1).kernel_dim == 0);
}

TEST_CASE("sextic scrolls projected to P^5 lie on a quadric") {
  // symbolic pullback, no sampling involved
  for (auto [a, b] : {std::pair{1L, 5L}, {2L, 4L}, {3L, 3L}})
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL}) {
      const ParamSurface p = generic_projection(scroll(a, b), 5, seed);
      INFO("S(", a, ",", b, ") seed ", seed);
      const long oracle = quadrics_through(p);
      CHECK(oracle == 1);
      CHECK(h0_ideal(p, 2, seed).kernel_dim == oracle);
    }
  CHECK_FALSE(certify_generic_projection(scroll(3, 3), 5, 2, 1).certified);
}

TEST_CASE("surface sections and expectations") {
  CHECK(surface_sections(veronese2(), 2) == 15);
  CHECK(surface_sections(veronese3(), 2) == 28);
  CHECK(surface_sections(scroll(3, 3), 2) == 21);
  CHECK(maximal_rank_expectation(veronese2(), 2) == 6);
  CHECK(maximal_rank_expectation(generic_projection(veronese2(), 4, 1), 2) == 0);
  CHECK(maximal_rank_expectation(generic_projection(scroll(3, 3), 5, 1), 2) == 0);
  // r = 9, k = 3: binom(12, 3) = 220 = 4 + 6 * 36
  CHECK(maximal_rank_expectation(generic_projection(scroll(18, 18), 9, 1), 3) == 0);
  for (long s = 2; s <= 12; ++s)
    for (long a = 1; 2 * a <= s; ++a)
      for (int k = 1; k <= 3; ++k) REQUIRE(surface_sections(scroll(a, s - a), k) == scroll_h0(s, k));
}

TEST_CASE("certificates") {
  const CertifyVerdict v = certify_generic_projection(veronese2(), 4, 2, 1);
  CHECK(v.certified);
  CHECK(v.attempts == 1);
  CHECK(v.surface.ambient_dim == 4);
  CHECK(certify_generic_projection(scroll(5, 6), 7, 2, 1).certified);
  CHECK_FALSE(certify_not_on_hypersurface(veronese2(), 2, 1).certified);
}
