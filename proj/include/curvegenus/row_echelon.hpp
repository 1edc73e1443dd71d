#ifndef CURVEGENUS_ROW_ECHELON_HPP
#define CURVEGENUS_ROW_ECHELON_HPP

#include <cstdint>
#include <vector>

#include "curvegenus/arith.hpp"

namespace curvegenus {

/// Incremental row echelon form over the integers. Rows are kept primitive
/// (content divided out) and reduced fraction-free, so the rank is exact.
class ExactRowEchelon {
 public:
  explicit ExactRowEchelon(std::size_t columns) : columns_(columns) {}

  /// Reduces `row` against the basis; returns true if it raised the rank.
  bool add_row(std::vector<Int> row);

  std::size_t rank() const { return basis_.size(); }
  std::size_t columns() const { return columns_; }

 private:
  std::size_t columns_;
  std::vector<std::vector<Int>> basis_;
  std::vector<std::size_t> pivots_;
};

/// The same over F_p, p = 2^61 - 1. The rank mod p never exceeds the rank
/// over Q, so a kernel computed here bounds the rational kernel from above.
class ModularRowEchelon {
 public:
  static constexpr std::uint64_t kPrime = (std::uint64_t{1} << 61) - 1;

  explicit ModularRowEchelon(std::size_t columns) : columns_(columns) {}

  bool add_row(const std::vector<Int>& row);

  std::size_t rank() const { return basis_.size(); }
  std::size_t columns() const { return columns_; }

  static std::uint64_t reduce(const Int& v);

 private:
  std::size_t columns_;
  std::vector<std::vector<std::uint64_t>> basis_;  // pivot entry normalized to 1
  std::vector<std::size_t> pivots_;
};

/// Exact rank of a dense integer matrix.
std::size_t exact_rank(const std::vector<std::vector<Int>>& rows);

}  // namespace curvegenus

#endif  // CURVEGENUS_ROW_ECHELON_HPP
