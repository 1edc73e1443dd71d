#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "curvegenus/row_echelon.hpp"
#include "curvegenus/surface.hpp"

using namespace curvegenus;

namespace {

using Matrix = std::vector<std::vector<Int>>;

// Plain Gaussian elimination over Q.
std::size_t rational_rank(const Matrix& m) {
  std::vector<std::vector<Rat>> a;
  for (const auto& row : m) a.emplace_back(row.begin(), row.end());
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

Matrix random_matrix(SampleStream& rng, std::size_t rows, std::size_t cols, long bound) {
  Matrix m(rows, std::vector<Int>(cols));
  for (auto& row : m)
    for (auto& v : row) v = rng.uniform(-bound, bound);
  return m;
}

Matrix product(const Matrix& a, const Matrix& b) {
  Matrix out(a.size(), std::vector<Int>(b.front().size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < b.front().size(); ++j) out[i][j] += a[i][k] * b[k][j];
  return out;
}

}  // namespace

TEST_CASE("identity and zero rows") {
  Matrix id(5, std::vector<Int>(5));
  for (std::size_t i = 0; i < 5; ++i) id[i][i] = 1;
  CHECK(exact_rank(id) == 5);
  ExactRowEchelon e(5);
  CHECK_FALSE(e.add_row(std::vector<Int>(5)));
  CHECK(e.rank() == 0);
  CHECK(e.add_row({0, 0, 2, 0, 0}));
  CHECK_FALSE(e.add_row({0, 0, -7, 0, 0}));
  CHECK(e.rank() == 1);
}

TEST_CASE("low-rank products") {
  SampleStream rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 6));
    const Matrix m = product(random_matrix(rng, 12, r, 30), random_matrix(rng, r, 9, 30));
    const std::size_t expected = rational_rank(m);
    REQUIRE(expected <= r);
    REQUIRE(exact_rank(m) == expected);
    ModularRowEchelon mod(9);
    for (const auto& row : m) mod.add_row(row);
    REQUIRE(mod.rank() == expected);
  }
}

TEST_CASE("large entries") {
  // rows that agree modulo the prime but not over Q
  const Int p = Int(ModularRowEchelon::kPrime);
  const Matrix m = {{1, 2}, {1 + p, 2}};
  CHECK(exact_rank(m) == 2);
  ModularRowEchelon mod(2);
  for (const auto& row : m) mod.add_row(row);
  CHECK(mod.rank() == 1);
  CHECK(ModularRowEchelon::reduce(-Int(1)) == ModularRowEchelon::kPrime - 1);
  CHECK(ModularRowEchelon::reduce(p * p + 5) == 5);
}

TEST_CASE("modular rank never exceeds the exact rank") {
  SampleStream rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    const Matrix m = random_matrix(rng, 8, 8, 1000000);
    ModularRowEchelon mod(8);
    for (const auto& row : m) mod.add_row(row);
    REQUIRE(mod.rank() <= exact_rank(m));
    REQUIRE(exact_rank(m) == rational_rank(m));
  }
}
