#include "curvegenus/surface.hpp"

#include <algorithm>

#include "curvegenus/row_echelon.hpp"

namespace curvegenus {

namespace {

template <typename T>
T power(const T& base, long e) {
  T out = 1;
  for (long i = 0; i < e; ++i) out *= base;
  return out;
}

template <typename T>
std::vector<T> native_coordinates(const ParamSurface& s, const std::vector<T>& params) {
  if (params.size() != s.parameter_count())
    throw DomainError("parametrize: expected " + std::to_string(s.parameter_count()) +
                      " parameters, got " + std::to_string(params.size()));
  std::vector<T> out;
  switch (s.kind) {
    case SurfaceKind::veronese2:
    case SurfaceKind::veronese3: {
      const int degree = s.kind == SurfaceKind::veronese2 ? 2 : 3;
      for (const auto& e : monomial_exponents(3, degree)) {
        out.push_back(power(params[0], e[0]) * power(params[1], e[1]) * power(params[2], e[2]));
      }
      break;
    }
    case SurfaceKind::scroll: {
      const T& u = params[0];
      const T& v = params[1];
      for (long j = 0; j <= s.a; ++j) out.push_back(params[2] * power(u, s.a - j) * power(v, j));
      for (long j = 0; j <= s.b; ++j) out.push_back(params[3] * power(u, s.b - j) * power(v, j));
      break;
    }
  }
  return out;
}

template <typename T>
std::vector<T> evaluate(const ParamSurface& s, const std::vector<T>& params) {
  std::vector<T> native = native_coordinates(s, params);
  std::vector<T> out;
  if (!s.projected()) {
    out = std::move(native);
  } else {
    out.reserve(s.projection.size());
    for (const auto& matrix_row : s.projection) {
      T acc = 0;
      for (std::size_t j = 0; j < native.size(); ++j) acc += T(matrix_row[j]) * native[j];
      out.push_back(acc);
    }
  }
  if (std::all_of(out.begin(), out.end(), [](const T& v) { return v == 0; }))
    throw DomainError("parameter in the indeterminacy locus: all coordinates vanish, resample");
  return out;
}

}  // namespace

long ParamSurface::source_dim() const {
  switch (kind) {
    case SurfaceKind::veronese2: return 5;
    case SurfaceKind::veronese3: return 9;
    case SurfaceKind::scroll: return a + b + 1;
  }
  return 0;
}

std::size_t ParamSurface::parameter_count() const {
  return kind == SurfaceKind::scroll ? 4 : 3;
}

std::string ParamSurface::describe() const {
  std::string out = to_string(kind);
  if (kind == SurfaceKind::scroll) out += "(" + std::to_string(a) + "," + std::to_string(b) + ")";
  out += " in P^" + std::to_string(ambient_dim);
  if (projected())
    out += " (projected from P^" + std::to_string(source_dim()) + ", seed " +
           std::to_string(projection_seed) + ")";
  return out;
}

ParamSurface veronese2() {
  ParamSurface s;
  s.kind = SurfaceKind::veronese2;
  s.ambient_dim = 5;
  return s;
}

ParamSurface veronese3() {
  ParamSurface s;
  s.kind = SurfaceKind::veronese3;
  s.ambient_dim = 9;
  return s;
}

ParamSurface scroll(long a, long b) {
  if (a < 1 || b < a) throw DomainError("scroll: need 1 <= a <= b");
  ParamSurface s;
  s.kind = SurfaceKind::scroll;
  s.a = a;
  s.b = b;
  s.ambient_dim = a + b + 1;
  return s;
}

std::vector<std::vector<int>> monomial_exponents(std::size_t n, int k) {
  std::vector<std::vector<int>> out;
  if (n == 0) return out;
  std::vector<int> current(n, 0);
  // Recursive fill: the first variable takes the largest exponent first.
  auto fill = [&](auto&& self, std::size_t var, int remaining) -> void {
    if (var + 1 == n) {
      current[var] = remaining;
      out.push_back(current);
      return;
    }
    for (int e = remaining; e >= 0; --e) {
      current[var] = e;
      self(self, var + 1, remaining - e);
    }
  };
  fill(fill, 0, k);
  return out;
}

std::vector<Rat> parametrize(const ParamSurface& s, const std::vector<Rat>& params) {
  return evaluate(s, params);
}

std::vector<Int> parametrize_int(const ParamSurface& s, const std::vector<Int>& params) {
  return evaluate(s, params);
}

long SampleStream::uniform(long lo, long hi) {
  if (hi < lo) throw DomainError("SampleStream::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % span;
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<long>(x % span);
}

ParamSurface generic_projection(const ParamSurface& s, long target_dim, std::uint64_t seed) {
  if (target_dim < 1 || target_dim >= s.ambient_dim)
    throw DomainError("generic_projection: target dimension must be below the ambient dimension");
  SampleStream stream(seed);
  const std::size_t rows = static_cast<std::size_t>(target_dim) + 1;
  const std::size_t cols = static_cast<std::size_t>(s.ambient_dim) + 1;
  std::vector<std::vector<Int>> matrix;
  int retries = 0;
  for (;;) {
    matrix.assign(rows, std::vector<Int>(cols));
    for (auto& row : matrix)
      for (auto& entry : row) entry = stream.uniform(-100, 100);
    if (exact_rank(matrix) == rows) break;
    ++retries;
  }

  ParamSurface out = s;
  if (s.projected()) {
    std::vector<std::vector<Int>> composed(rows, std::vector<Int>(s.projection.front().size()));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t k = 0; k < cols; ++k)
        for (std::size_t j = 0; j < composed[i].size(); ++j)
          composed[i][j] += matrix[i][k] * s.projection[k][j];
    out.projection = std::move(composed);
  } else {
    out.projection = std::move(matrix);
  }
  out.ambient_dim = target_dim;
  out.projection_seed = seed;
  out.projection_retries = s.projection_retries + retries;
  return out;
}

std::string to_string(SurfaceKind kind) {
  switch (kind) {
    case SurfaceKind::veronese2: return "veronese2";
    case SurfaceKind::veronese3: return "veronese3";
    case SurfaceKind::scroll: return "scroll";
  }
  return "?";
}

SurfaceKind parse_surface_kind(const std::string& text) {
  if (text == "veronese2") return SurfaceKind::veronese2;
  if (text == "veronese3") return SurfaceKind::veronese3;
  if (text == "scroll") return SurfaceKind::scroll;
  throw ParseError("unknown surface kind '" + text + "' (veronese2, veronese3, scroll)");
}

}  // namespace curvegenus
