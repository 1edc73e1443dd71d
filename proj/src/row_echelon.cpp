#include "curvegenus/row_echelon.hpp"

namespace curvegenus {

namespace {

void make_primitive(std::vector<Int>& row) {
  Int g = 0;
  for (const Int& v : row) {
    if (v != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1) {
    for (Int& v : row) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
  }
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b) {
  const u128 prod = static_cast<u128>(a) * b;
  // 2^61 = 1 mod p
  u64 lo = static_cast<u64>(prod & ModularRowEchelon::kPrime);
  u64 hi = static_cast<u64>(prod >> 61);
  u64 s = lo + hi;
  if (s >= ModularRowEchelon::kPrime) s -= ModularRowEchelon::kPrime;
  return s;
}

u64 sub_mod(u64 a, u64 b) {
  return a >= b ? a - b : a + ModularRowEchelon::kPrime - b;
}

u64 pow_mod(u64 base, u64 e) {
  u64 out = 1;
  while (e) {
    if (e & 1) out = mul_mod(out, base);
    base = mul_mod(base, base);
    e >>= 1;
  }
  return out;
}

u64 inv_mod(u64 a) { return pow_mod(a, ModularRowEchelon::kPrime - 2); }

}  // namespace

bool ExactRowEchelon::add_row(std::vector<Int> row) {
  if (row.size() != columns_) throw DomainError("row length does not match column count");
  Int scale, factor;
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const std::size_t p = pivots_[b];
    if (row[p] == 0) continue;
    const std::vector<Int>& base = basis_[b];
    // row <- base[p] * row - row[p] * base, with the common gcd divided out
    Int g = gcd(base[p], row[p]);
    scale = base[p] / g;
    factor = row[p] / g;
    for (std::size_t j = 0; j < columns_; ++j) {
      row[j] *= scale;
      if (base[j] != 0) row[j] -= factor * base[j];
    }
    make_primitive(row);
  }
  std::size_t pivot = columns_;
  for (std::size_t j = 0; j < columns_; ++j) {
    if (row[j] != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot == columns_) return false;
  make_primitive(row);
  basis_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

u64 ModularRowEchelon::reduce(const Int& v) {
  static const Int prime = [] {
    Int p;
    mpz_set_ui(p.get_mpz_t(), kPrime);
    return p;
  }();
  Int r;
  mpz_fdiv_r(r.get_mpz_t(), v.get_mpz_t(), prime.get_mpz_t());
  return static_cast<u64>(mpz_get_ui(r.get_mpz_t()));
}

bool ModularRowEchelon::add_row(const std::vector<Int>& input) {
  if (input.size() != columns_) throw DomainError("row length does not match column count");
  std::vector<u64> row(columns_);
  for (std::size_t j = 0; j < columns_; ++j) row[j] = reduce(input[j]);
  for (std::size_t b = 0; b < basis_.size(); ++b) {
    const std::size_t p = pivots_[b];
    const u64 factor = row[p];
    if (factor == 0) continue;
    const std::vector<u64>& base = basis_[b];
    for (std::size_t j = p; j < columns_; ++j) {
      if (base[j] != 0) row[j] = sub_mod(row[j], mul_mod(factor, base[j]));
    }
  }
  std::size_t pivot = columns_;
  for (std::size_t j = 0; j < columns_; ++j) {
    if (row[j] != 0) {
      pivot = j;
      break;
    }
  }
  if (pivot == columns_) return false;
  const u64 inv = inv_mod(row[pivot]);
  for (std::size_t j = pivot; j < columns_; ++j) row[j] = mul_mod(row[j], inv);
  basis_.push_back(std::move(row));
  pivots_.push_back(pivot);
  return true;
}

std::size_t exact_rank(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return 0;
  ExactRowEchelon echelon(rows.front().size());
  for (const auto& row : rows) echelon.add_row(row);
  return echelon.rank();
}

}  // namespace curvegenus
