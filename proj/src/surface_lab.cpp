#include "curvegenus/surface_lab.hpp"

#include "curvegenus/classical_bounds.hpp"
#include "curvegenus/row_echelon.hpp"

namespace curvegenus {

namespace {

std::vector<Int> sample_point(const ParamSurface& s, SampleStream& stream, long bound) {
  for (;;) {
    std::vector<Int> params(s.parameter_count());
    for (Int& p : params) p = stream.uniform(-bound, bound);
    try {
      return parametrize_int(s, params);
    } catch (const DomainError&) {
      // zero parameters or a point of indeterminacy: draw again
    }
  }
}

std::vector<Int> monomial_row(const std::vector<Int>& coords,
                              const std::vector<std::vector<int>>& exponents, int k) {
  std::vector<std::vector<Int>> powers(coords.size(), std::vector<Int>(k + 1));
  for (std::size_t v = 0; v < coords.size(); ++v) {
    powers[v][0] = 1;
    for (int e = 1; e <= k; ++e) powers[v][e] = powers[v][e - 1] * coords[v];
  }
  std::vector<Int> row;
  row.reserve(exponents.size());
  for (const auto& e : exponents) {
    Int value = 1;
    for (std::size_t v = 0; v < e.size(); ++v)
      if (e[v]) value *= powers[v][e[v]];
    row.push_back(std::move(value));
  }
  return row;
}

template <typename Echelon>
H0Result run_h0(const ParamSurface& s, int k, std::uint64_t seed, const H0Options& options,
                const char* method) {
  const auto exponents = monomial_exponents(static_cast<std::size_t>(s.ambient_dim) + 1, k);
  const long monomials = static_cast<long>(exponents.size());
  Echelon echelon(exponents.size());
  SampleStream stream(seed);

  H0Result out;
  out.seed = seed;
  out.monomials = monomials;
  out.method = method;
  int unchanged = 0;
  for (int batch = 0; batch < options.max_batches; ++batch) {
    for (long row = 0; row < monomials; ++row) {
      const auto coords = sample_point(s, stream, options.parameter_bound);
      echelon.add_row(monomial_row(coords, exponents, k));
    }
    out.samples_used += monomials;
    const long kernel = monomials - static_cast<long>(echelon.rank());
    if (!out.kernel_history.empty() && kernel == out.kernel_history.back())
      ++unchanged;
    else
      unchanged = 0;
    out.kernel_history.push_back(kernel);
    out.kernel_dim = kernel;
    if (kernel == 0 || unchanged >= 2) {
      out.stabilized = true;
      return out;
    }
  }
  throw InconclusiveError("h0_ideal: kernel of " + s.describe() + " in degree " +
                          std::to_string(k) + " did not stabilize within " +
                          std::to_string(options.max_batches) +
                          " batches; raise the sample budget");
}

}  // namespace

H0Result h0_ideal(const ParamSurface& s, int k, std::uint64_t seed, const H0Options& options) {
  if (k < 1) throw DomainError("h0_ideal: degree k must be >= 1");
  const long monomials = to_long(binom(Int(s.ambient_dim + k), Int(k)));
  RankMethod method = options.method;
  if (method == RankMethod::automatic)
    method = static_cast<std::size_t>(monomials) <= kExactColumnLimit ? RankMethod::exact
                                                                      : RankMethod::modular;
  if (method == RankMethod::exact) return run_h0<ExactRowEchelon>(s, k, seed, options, "exact");
  return run_h0<ModularRowEchelon>(s, k, seed, options, "modular");
}

Int surface_sections(const ParamSurface& s, int k) {
  if (k < 1) throw DomainError("surface_sections: k must be >= 1");
  switch (s.kind) {
    case SurfaceKind::veronese2: return binom(Int(2 * k + 2), Int(2));
    case SurfaceKind::veronese3: return binom(Int(3 * k + 2), Int(2));
    case SurfaceKind::scroll: return scroll_h0(Int(s.a + s.b), Int(k));
  }
  throw DomainError("surface_sections: unknown surface kind");
}

Int maximal_rank_expectation(const ParamSurface& s, int k) {
  const Int ambient_forms = binom(Int(s.ambient_dim + k), Int(k));
  const Int expected = ambient_forms - surface_sections(s, k);
  return expected > 0 ? expected : Int(0);
}

CertifyVerdict certify_not_on_hypersurface(const ParamSurface& s, int k, std::uint64_t seed,
                                           const H0Options& options) {
  CertifyVerdict verdict;
  verdict.surface = s;
  verdict.result = h0_ideal(s, k, seed, options);
  verdict.certified = verdict.result.stabilized && verdict.result.kernel_dim == 0;
  return verdict;
}

CertifyVerdict certify_generic_projection(const ParamSurface& source, long target_dim, int k,
                                          std::uint64_t seed, int max_attempts,
                                          const H0Options& options) {
  CertifyVerdict verdict;
  for (int attempt = 0; attempt < max_attempts; ++attempt) {
    const std::uint64_t projection_seed = seed + static_cast<std::uint64_t>(attempt) * 0x9E3779B97F4A7C15ULL;
    const ParamSurface projected = generic_projection(source, target_dim, projection_seed);
    verdict = certify_not_on_hypersurface(projected, k, seed, options);
    verdict.attempts = attempt + 1;
    if (verdict.certified) break;
  }
  return verdict;
}

}  // namespace curvegenus
