#include "curvegenus/io.hpp"

#include <algorithm>
#include <fstream>

#include "curvegenus/error.hpp"

namespace curvegenus {

namespace {

using nlohmann::json;

long parse_index(const std::string& key, const char* what) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != key.size())
    throw ParseError(std::string("constraint file: ") + what + " key '" + key +
                     "' is not an integer index");
  return value;
}

long integer_field(const json& value, const std::string& what) {
  if (!value.is_number_integer())
    throw ParseError("constraint file: " + what + " must be an integer");
  return value.get<long>();
}

std::map<long, long> index_map(const json& doc, const char* what) {
  std::map<long, long> out;
  if (!doc.is_object()) throw ParseError(std::string("constraint file: '") + what +
                                         "' must be an object of index -> value");
  for (const auto& [key, value] : doc.items()) {
    const long i = parse_index(key, what);
    out[i] = integer_field(value, std::string(what) + "[" + key + "]");
  }
  return out;
}

}  // namespace

ConstraintSet constraints_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("constraint file: expected a JSON object");
  for (const auto& [key, value] : doc.items()) {
    static const std::vector<std::string> known{"d", "N", "fixed", "lower",
                                                "decay", "strict", "label"};
    if (std::find(known.begin(), known.end(), key) == known.end())
      throw ParseError("constraint file: unknown field '" + key + "'");
  }
  if (!doc.contains("d") || !doc.contains("N"))
    throw ParseError("constraint file: fields 'd' and 'N' are required");

  ConstraintSet c;
  c.d = integer_field(doc.at("d"), "'d'");
  c.n = integer_field(doc.at("N"), "'N'");
  if (doc.contains("fixed")) c.fixed = index_map(doc.at("fixed"), "fixed");
  if (doc.contains("lower")) c.lower = index_map(doc.at("lower"), "lower");
  if (doc.contains("decay")) {
    const json& rules = doc.at("decay");
    if (!rules.is_array()) throw ParseError("constraint file: 'decay' must be an array");
    for (const json& rule : rules) {
      if (!rule.is_object() || !rule.contains("i") || !rule.contains("drop"))
        throw ParseError("constraint file: decay entries need 'i' and 'drop'");
      c.decay.push_back({integer_field(rule.at("i"), "decay 'i'"),
                         integer_field(rule.at("drop"), "decay 'drop'")});
    }
  }
  if (doc.contains("strict")) {
    if (!doc.at("strict").is_boolean()) throw ParseError("constraint file: 'strict' must be a bool");
    c.strict = doc.at("strict").get<bool>();
  }
  if (doc.contains("label")) {
    if (!doc.at("label").is_string()) throw ParseError("constraint file: 'label' must be a string");
    c.label = doc.at("label").get<std::string>();
  }
  validate(c);
  return c;
}

json constraints_to_json(const ConstraintSet& c) {
  json fixed = json::object();
  for (const auto& [i, v] : c.fixed) fixed[std::to_string(i)] = v;
  json lower = json::object();
  for (const auto& [i, v] : c.lower) lower[std::to_string(i)] = v;
  json decay = json::array();
  for (const DecayRule& r : c.decay) decay.push_back({{"i", r.index}, {"drop", r.drop}});
  return {{"d", c.d},         {"N", c.n},           {"fixed", fixed}, {"lower", lower},
          {"decay", decay},   {"strict", c.strict}, {"label", c.label}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError("'" + path + "': " + e.what());
  }
}

ConstraintSet load_constraints(const std::string& path) {
  return constraints_from_json(read_json_file(path));
}

ParamSurface SurfaceDescriptor::source() const {
  switch (kind) {
    case SurfaceKind::veronese2: return veronese2();
    case SurfaceKind::veronese3: return veronese3();
    case SurfaceKind::scroll: return scroll(a, b);
  }
  throw DomainError("unknown surface kind");
}

SurfaceDescriptor surface_descriptor_from_json(const json& doc) {
  if (!doc.is_object()) throw ParseError("surface descriptor: expected a JSON object");
  if (!doc.contains("kind") || !doc.at("kind").is_string())
    throw ParseError("surface descriptor: 'kind' is required");
  SurfaceDescriptor out;
  out.kind = parse_surface_kind(doc.at("kind").get<std::string>());
  auto integer = [&](const char* key) -> std::optional<long> {
    if (!doc.contains(key)) return std::nullopt;
    if (!doc.at(key).is_number_integer())
      throw ParseError(std::string("surface descriptor: '") + key + "' must be an integer");
    return doc.at(key).get<long>();
  };
  if (out.kind == SurfaceKind::scroll) {
    const auto a = integer("a");
    const auto b = integer("b");
    if (!a || !b) throw ParseError("surface descriptor: scrolls need 'a' and 'b'");
    out.a = *a;
    out.b = *b;
  }
  out.target_dim = integer("target_dim");
  if (const auto seed = integer("seed")) {
    if (*seed < 0) throw ParseError("surface descriptor: 'seed' must be non-negative");
    out.seed = static_cast<std::uint64_t>(*seed);
  }
  return out;
}

SurfaceDescriptor load_surface_descriptor(const std::string& path) {
  return surface_descriptor_from_json(read_json_file(path));
}

json profile_to_json(const HilbertProfile& h) { return h.values; }

}  // namespace curvegenus
