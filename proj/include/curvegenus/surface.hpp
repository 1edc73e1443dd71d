#ifndef CURVEGENUS_SURFACE_HPP
#define CURVEGENUS_SURFACE_HPP

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "curvegenus/arith.hpp"

namespace curvegenus {

enum class SurfaceKind {
  veronese2,  // 2-uple embedding of P^2 in P^5
  veronese3,  // 3-uple embedding of P^2 in P^9
  scroll,     // rational normal scroll S(a, b) in P^{a+b+1}
};

/// A rational surface given by a polynomial parametrization, optionally
/// composed with a linear projection to a smaller projective space.
struct ParamSurface {
  SurfaceKind kind = SurfaceKind::veronese2;
  long a = 0;
  long b = 0;
  /// (ambient_dim + 1) x (source_dim + 1) integer matrix; empty when unprojected.
  std::vector<std::vector<Int>> projection;
  long ambient_dim = 5;
  std::uint64_t projection_seed = 0;
  int projection_retries = 0;

  long source_dim() const;
  /// Number of homogeneous parameters: 3 for Veronese, 4 (u, v, x, y) for scrolls.
  std::size_t parameter_count() const;
  bool projected() const { return !projection.empty(); }
  std::string describe() const;
};

ParamSurface veronese2();
ParamSurface veronese3();
/// Requires 1 <= a <= b.
ParamSurface scroll(long a, long b);

/// Exponent vectors of all degree-k monomials in n variables, graded
/// lexicographic (x0^k first).
std::vector<std::vector<int>> monomial_exponents(std::size_t n, int k);

/// Ambient coordinates of the surface point with the given parameters.
/// Veronese: degree-2 (or 3) monomials of (x, y, z) in graded lex order.
/// Scroll: (x u^a, x u^{a-1} v, ..., x v^a, y u^b, ..., y v^b).
/// Throws DomainError when all coordinates vanish (indeterminacy of a
/// projection, or a zero parameter vector); callers resample.
std::vector<Rat> parametrize(const ParamSurface& s, const std::vector<Rat>& params);

/// Integer version used by the sampling code.
std::vector<Int> parametrize_int(const ParamSurface& s, const std::vector<Int>& params);

/// Deterministic integers uniform in [lo, hi] from a 64-bit Mersenne twister,
/// using rejection so the stream does not depend on the standard library's
/// distribution implementation.
class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : engine_(seed) {}
  long uniform(long lo, long hi);

 private:
  std::mt19937_64 engine_;
};

/// Composes s with a random integer matrix (entries in [-100, 100]) of shape
/// (target_dim + 1) x (ambient_dim + 1). Rank-deficient samples are redrawn;
/// the number of redraws is recorded in projection_retries.
ParamSurface generic_projection(const ParamSurface& s, long target_dim, std::uint64_t seed);

std::string to_string(SurfaceKind kind);
SurfaceKind parse_surface_kind(const std::string& text);

}  // namespace curvegenus

#endif  // CURVEGENUS_SURFACE_HPP
