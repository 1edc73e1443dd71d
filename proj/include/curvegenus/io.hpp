#ifndef CURVEGENUS_IO_HPP
#define CURVEGENUS_IO_HPP

#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

#include "curvegenus/hilbert_engine.hpp"
#include "curvegenus/surface.hpp"

namespace curvegenus {

/// Constraint file:
///   { "d": int, "N": int, "fixed": {"i": v, ...}, "lower": {"i": v, ...},
///     "decay": [{"i": int, "drop": int}], "strict": bool, "label": str }
/// Only "d" and "N" are required. Throws ParseError on malformed input and
/// DomainError (via validate) on out-of-range values.
ConstraintSet constraints_from_json(const nlohmann::json& doc);
nlohmann::json constraints_to_json(const ConstraintSet& c);
ConstraintSet load_constraints(const std::string& path);

/// Surface descriptor: { "kind": "veronese2" | "veronese3" | "scroll",
///   "a": int, "b": int, "target_dim": int, "seed": int }.
/// a and b are required for scrolls; target_dim and seed are optional.
struct SurfaceDescriptor {
  SurfaceKind kind = SurfaceKind::veronese2;
  long a = 0;
  long b = 0;
  std::optional<long> target_dim;
  std::optional<std::uint64_t> seed;

  ParamSurface source() const;
};

SurfaceDescriptor surface_descriptor_from_json(const nlohmann::json& doc);
SurfaceDescriptor load_surface_descriptor(const std::string& path);

nlohmann::json profile_to_json(const HilbertProfile& h);

/// Reads and parses a JSON file, mapping I/O and syntax errors to ParseError.
nlohmann::json read_json_file(const std::string& path);

}  // namespace curvegenus

#endif  // CURVEGENUS_IO_HPP
