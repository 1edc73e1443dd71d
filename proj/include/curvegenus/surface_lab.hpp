#ifndef CURVEGENUS_SURFACE_LAB_HPP
#define CURVEGENUS_SURFACE_LAB_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "curvegenus/surface.hpp"

namespace curvegenus {

enum class RankMethod {
  automatic,  // exact up to kExactColumnLimit monomials, modular above
  exact,
  modular,
};

inline constexpr std::size_t kExactColumnLimit = 84;

struct H0Options {
  RankMethod method = RankMethod::automatic;
  int max_batches = 8;
  long parameter_bound = 50;  // parameters drawn from [-bound, bound]
};

/// Kernel dimension of the degree-k monomial evaluation matrix at sampled
/// surface points. Evaluation at finitely many points can only enlarge the
/// kernel, so kernel_dim >= h^0(I_S(k)) always.
struct H0Result {
  long kernel_dim = 0;
  long samples_used = 0;
  bool stabilized = false;
  std::uint64_t seed = 0;
  long monomials = 0;
  std::string method;                // "exact" or "modular"
  std::vector<long> kernel_history;  // kernel after each batch
};

struct CertifyVerdict {
  bool certified = false;
  H0Result result;
  ParamSurface surface;
  int attempts = 1;
};

/// Adds batches of M sample rows (M = number of monomials) until the kernel
/// is unchanged across two consecutive batches. A zero kernel is final.
/// Throws InconclusiveError if the budget runs out first. Deterministic in seed.
H0Result h0_ideal(const ParamSurface& s, int k, std::uint64_t seed, const H0Options& options = {});

/// h^0(O_S(k)) for the underlying surface: forms of degree 2k (3k) on P^2
/// for Veronese surfaces, k + 1 + binom(k+1,2)(a+b) for scrolls.
Int surface_sections(const ParamSurface& s, int k);

/// max{0, binom(ambient+k, k) - h^0(O_S(k))}: the ideal's h^0 if restriction
/// has maximal rank.
Int maximal_rank_expectation(const ParamSurface& s, int k);

/// "certified" iff h0_ideal stabilizes at 0, a proof that no degree-k
/// hypersurface contains s.
CertifyVerdict certify_not_on_hypersurface(const ParamSurface& s, int k, std::uint64_t seed,
                                           const H0Options& options = {});

/// Projects `source` generically to P^target and certifies it in degree k,
/// redrawing the projection with a fresh seed when the certificate fails.
CertifyVerdict certify_generic_projection(const ParamSurface& source, long target_dim, int k,
                                          std::uint64_t seed, int max_attempts = 4,
                                          const H0Options& options = {});

}  // namespace curvegenus

#endif  // CURVEGENUS_SURFACE_LAB_HPP
