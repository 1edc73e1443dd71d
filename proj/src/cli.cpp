#include "curvegenus/cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <future>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include "curvegenus/classical_bounds.hpp"
#include "curvegenus/hilbert_engine.hpp"
#include "curvegenus/io.hpp"
#include "curvegenus/paper_bounds.hpp"
#include "curvegenus/surface_lab.hpp"
#include "curvegenus/verify.hpp"

namespace curvegenus::cli {

namespace {

using nlohmann::json;

struct BoundRow {
  std::string family;
  std::string variant;
  long d = 0;
  json params = json::object();
  GenusBound bound;
};

std::string bound_text(const GenusBound& b) {
  if (b.is_interval()) {
    return std::string("max genus in ") + (b.lower_open ? "(" : "[") + to_string(*b.lower) +
           ", " + to_string(b.upper) + "]";
  }
  return std::string(b.strict ? "p_a < " : "p_a <= ") + to_string(b.upper);
}

json row_to_json(const BoundRow& row) {
  const GenusBound& b = row.bound;
  json out{{"family", row.family},
           {"variant", row.variant},
           {"d", row.d},
           {"params", row.params},
           {"upper", to_string(b.upper)},
           {"lower", b.lower ? json(to_string(*b.lower)) : json(nullptr)},
           {"lower_open", b.lower_open},
           {"strict", b.strict},
           {"max_genus", to_string(b.max_genus())},
           {"validity",
            {{"above", to_string(b.validity.above)},
             {"within", b.validity.within},
             {"note", b.validity.note}}},
           {"attained_by", b.attained_by},
           {"notes", b.notes}};
  return out;
}

GenusBound castelnuovo_row(long ambient, long d) {
  GenusBound b;
  b.upper = castelnuovo(ambient, d);
  b.validity.above = ambient - 1;
  b.validity.within = true;
  b.validity.note = "nondegenerate integral curves, d >= " + std::to_string(ambient);
  b.attained_by = "Castelnuovo curves on surfaces of minimal degree";
  return b;
}

GenusBound halphen_row(long r, long d, long s) {
  const HalphenEstimate est = halphen_interval(r, d, s);
  GenusBound b;
  b.lower = est.lower;
  b.lower_open = false;
  b.upper = est.upper;
  b.validity = est.validity;
  b.notes.push_back("center " + to_string(est.center) + ", radius " + to_string(est.radius));
  if (!b.validity.within) b.notes.push_back("outside the validity range");
  return b;
}

GenusBound eh_pi2_row(long d) {
  GenusBound b;
  b.upper = eh_pi2_bound(d);
  b.validity.above = 143;
  b.validity.within = d > 143;
  b.validity.note = "curves in P^4 not on surfaces of degree < 5, valid for d > 143";
  const Rat reference = make_rat(Int(d) * (d - 6), 8) + 1;
  b.notes.push_back(std::string(b.upper < reference ? "below" : "not below") +
                    " d(d-6)/8 + 1 = " + to_string(reference));
  if (!b.validity.within) b.notes.push_back("outside the validity range d > 143");
  return b;
}

std::vector<BoundRow> no_quadric_rows(long r, long d) {
  std::vector<BoundRow> rows;
  const json params{{"r", r}};
  if (r == 4) {
    rows.push_back({"no-quadrics", "general", d, params, thm1_general_bound(d)});
    if (d >= 6) rows.push_back({"no-quadrics", "odd degree or a.C.M.", d, params,
                                thm1_odd_acm_bound(d)});
  } else if (r == 5) {
    rows.push_back({"no-quadrics", "general", d, params, thm2_bound(d)});
  } else if (r == 6) {
    rows.push_back({"no-quadrics", "triple Veronese", d, {{"r", 6}, {"s", 9}},
                    remark_veronese3_interval(d)});
  } else if (r >= 7) {
    const Int s = prop3_params(r);
    rows.push_back({"no-quadrics", "scroll interval", d, {{"r", r}, {"s", to_long(s)}},
                    prop_bound_interval(r, d, s)});
  } else {
    throw DomainError("bound no-quadrics: r must be >= 4");
  }
  return rows;
}

std::vector<BoundRow> no_cubic_rows(long r, long d) {
  const Int s = prop4_params(r);
  return {{"no-cubics", "scroll interval", d, {{"r", r}, {"s", to_long(s)}},
           prop_bound_interval(r, d, s)}};
}

// Evaluates `one` for every d in the range on a small worker pool, keeping order.
std::vector<BoundRow> sweep(const std::vector<long>& degrees,
                            const std::function<std::vector<BoundRow>(long)>& one) {
  const std::size_t workers =
      std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, 8);
  if (degrees.size() < 64 || workers == 1) {
    std::vector<BoundRow> out;
    for (long d : degrees) {
      auto rows = one(d);
      out.insert(out.end(), rows.begin(), rows.end());
    }
    return out;
  }
  const std::size_t chunk = (degrees.size() + workers - 1) / workers;
  std::vector<std::future<std::vector<BoundRow>>> jobs;
  for (std::size_t begin = 0; begin < degrees.size(); begin += chunk) {
    const std::size_t end = std::min(degrees.size(), begin + chunk);
    jobs.push_back(std::async(std::launch::async, [&, begin, end] {
      std::vector<BoundRow> part;
      for (std::size_t k = begin; k < end; ++k) {
        auto rows = one(degrees[k]);
        part.insert(part.end(), rows.begin(), rows.end());
      }
      return part;
    }));
  }
  std::vector<BoundRow> out;
  for (auto& job : jobs) {
    auto part = job.get();
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

void render_bound_rows(const std::vector<BoundRow>& rows, bool detailed, std::ostream& out) {
  if (!detailed) {
    out << "d\tvariant\tbound\tmax genus\tin range\n";
    for (const BoundRow& row : rows)
      out << row.d << "\t" << row.variant << "\t" << bound_text(row.bound) << "\t"
          << to_string(row.bound.max_genus()) << "\t" << (row.bound.validity.within ? "yes" : "NO")
          << "\n";
    return;
  }
  for (const BoundRow& row : rows) {
    out << row.family << " (" << row.variant << "), d = " << row.d;
    for (const auto& [key, value] : row.params.items()) out << ", " << key << " = " << value;
    out << "\n  " << bound_text(row.bound) << "  (max genus " << to_string(row.bound.max_genus())
        << ")\n";
    if (!row.bound.validity.within)
      out << "  ** outside the validity range: " << row.bound.validity.note << " **\n";
    else
      out << "  " << row.bound.validity.note << "\n";
    if (!row.bound.attained_by.empty()) out << "  attained: " << row.bound.attained_by << "\n";
    for (const std::string& note : row.bound.notes)
      if (note.rfind("outside the validity range", 0) != 0) out << "  note: " << note << "\n";
  }
}

std::vector<long> degrees_from(const std::optional<long>& d, const std::string& range) {
  if (d && !range.empty()) throw ParseError("--d and --d-range are mutually exclusive");
  if (d) return {*d};
  if (range.empty()) throw ParseError("one of --d or --d-range is required");
  const DegreeRange r = parse_degree_range(range);
  std::vector<long> out;
  for (long v = r.first; v <= r.last; ++v) out.push_back(v);
  return out;
}

template <typename T>
T require(const std::optional<T>& value, const char* flag, const std::string& command) {
  if (!value) throw ParseError(command + ": " + flag + " is required");
  return *value;
}

struct Options {
  std::string format = "table";
  std::optional<long> r, d, s, k, ambient, a, b, target;
  std::string d_range;
  std::uint64_t seed = 1;
  bool seed_given = false;
  std::string constraints;
  std::string kind;
  std::string descriptor;
  std::vector<std::string> only;
  std::string json_out;
  int batches = 8;
};

int cmd_bound(const std::string& family, const Options& o, std::ostream& out) {
  const std::vector<long> degrees = degrees_from(o.d, o.d_range);
  const std::string command = "bound " + family;
  std::function<std::vector<BoundRow>(long)> one;
  if (family == "castelnuovo") {
    const long ambient = require(o.ambient, "--ambient", command);
    one = [ambient](long d) {
      return std::vector<BoundRow>{
          {"castelnuovo", "classical", d, {{"ambient", ambient}}, castelnuovo_row(ambient, d)}};
    };
  } else if (family == "halphen") {
    const long r = require(o.r, "--r", command);
    const long s = require(o.s, "--s", command);
    one = [r, s](long d) {
      return std::vector<BoundRow>{
          {"halphen", "interval", d, {{"r", r}, {"s", s}}, halphen_row(r, d, s)}};
    };
  } else if (family == "no-quadrics") {
    const long r = require(o.r, "--r", command);
    one = [r](long d) { return no_quadric_rows(r, d); };
  } else if (family == "no-cubics") {
    const long r = require(o.r, "--r", command);
    one = [r](long d) { return no_cubic_rows(r, d); };
  } else {
    const long r = o.r.value_or(4);
    if (r != 4) throw DomainError("bound eh-pi2 is defined for r = 4 only");
    one = [](long d) {
      return std::vector<BoundRow>{{"eh-pi2", "surfaces of degree >= 5", d, {{"r", 4}},
                                    eh_pi2_row(d)}};
    };
  }
  const std::vector<BoundRow> rows = sweep(degrees, one);
  if (o.format == "structured") {
    json doc = json::array();
    for (const BoundRow& row : rows) doc.push_back(row_to_json(row));
    out << doc.dump(2) << "\n";
  } else {
    render_bound_rows(rows, degrees.size() == 1, out);
  }
  return kSuccess;
}

int cmd_search(const Options& o, std::ostream& out) {
  if (o.constraints.empty()) throw ParseError("search: --constraints is required");
  const ConstraintSet c = load_constraints(o.constraints);
  const GenusEstimate e = genus_upper_bound(c);
  if (o.format == "structured") {
    json doc{{"label", c.label},
             {"d", c.d},
             {"N", c.n},
             {"profile", profile_to_json(e.profile)},
             {"bound", e.bound},
             {"strict", e.strict},
             {"branches", e.branches},
             {"constraints", constraints_to_json(c)}};
    out << doc.dump(2) << "\n";
    return kSuccess;
  }
  if (!c.label.empty()) out << "label: " << c.label << "\n";
  out << "d = " << c.d << ", N = " << c.n << "\n";
  out << "profile: " << to_string(e.profile) << "\n";
  out << "genus bound: p_a " << (e.strict ? "< " : "<= ") << e.bound << "\n";
  if (e.branches > 1) out << "decay branches explored: " << e.branches << "\n";
  return kSuccess;
}

struct SurfaceRequest {
  ParamSurface source;
  std::optional<long> target;
  std::uint64_t seed = 1;
  long k = 2;
  H0Options options;
};

SurfaceRequest surface_request(const Options& o, const std::string& command) {
  SurfaceRequest req;
  req.seed = o.seed;
  req.k = o.k.value_or(2);
  if (!o.descriptor.empty()) {
    if (!o.kind.empty()) throw ParseError(command + ": --descriptor and --kind are exclusive");
    const SurfaceDescriptor desc = load_surface_descriptor(o.descriptor);
    req.source = desc.source();
    req.target = desc.target_dim;
    if (desc.seed && !o.seed_given) req.seed = *desc.seed;
  } else {
    if (o.kind.empty()) throw ParseError(command + ": --kind or --descriptor is required");
    switch (parse_surface_kind(o.kind)) {
      case SurfaceKind::veronese2: req.source = veronese2(); break;
      case SurfaceKind::veronese3: req.source = veronese3(); break;
      case SurfaceKind::scroll:
        req.source = scroll(require(o.a, "--a", command), require(o.b, "--b", command));
        break;
    }
  }
  if (o.target) req.target = o.target;
  if (req.k < 1) throw DomainError(command + ": --k must be >= 1");
  if (o.batches < 1) throw DomainError(command + ": --batches must be >= 1");
  req.options.max_batches = o.batches;
  return req;
}

json h0_json(const ParamSurface& s, const H0Result& r, long k) {
  return {{"surface", s.describe()},
          {"kind", to_string(s.kind)},
          {"ambient_dim", s.ambient_dim},
          {"projection_seed", s.projection_seed},
          {"projection_retries", s.projection_retries},
          {"k", k},
          {"kernel_dim", r.kernel_dim},
          {"samples_used", r.samples_used},
          {"stabilized", r.stabilized},
          {"seed", r.seed},
          {"monomials", r.monomials},
          {"method", r.method},
          {"kernel_history", r.kernel_history},
          {"maximal_rank_expectation", to_string(maximal_rank_expectation(s, static_cast<int>(k)))}};
}

void render_h0(const ParamSurface& s, const H0Result& r, long k, std::ostream& out) {
  out << "surface: " << s.describe() << "\n";
  if (s.projection_retries > 0)
    out << "projection redraws: " << s.projection_retries << "\n";
  out << "degree: " << k << " (" << r.monomials << " monomials)\n";
  out << "kernel dimension: " << r.kernel_dim << "\n";
  out << "maximal-rank expectation: " << to_string(maximal_rank_expectation(s, static_cast<int>(k)))
      << "\n";
  out << "samples: " << r.samples_used << ", method " << r.method
      << (r.stabilized ? ", stabilized" : "") << ", seed " << r.seed << "\n";
}

int cmd_surface(const std::string& action, const Options& o, std::ostream& out) {
  const SurfaceRequest req = surface_request(o, "surface " + action);
  const int k = static_cast<int>(req.k);
  if (action == "h0") {
    const ParamSurface s =
        req.target ? generic_projection(req.source, *req.target, req.seed) : req.source;
    const H0Result r = h0_ideal(s, k, req.seed, req.options);
    if (o.format == "structured")
      out << h0_json(s, r, k).dump(2) << "\n";
    else
      render_h0(s, r, k, out);
    return kSuccess;
  }
  const CertifyVerdict v = req.target
                               ? certify_generic_projection(req.source, *req.target, k, req.seed,
                                                            4, req.options)
                               : certify_not_on_hypersurface(req.source, k, req.seed, req.options);
  if (o.format == "structured") {
    json doc = h0_json(v.surface, v.result, k);
    doc["certified"] = v.certified;
    doc["attempts"] = v.attempts;
    out << doc.dump(2) << "\n";
  } else {
    render_h0(v.surface, v.result, k, out);
    if (v.certified)
      out << "certified: no hypersurface of degree " << k << " contains the surface\n";
    else
      out << "not certified: kernel " << v.result.kernel_dim << " after " << v.attempts
          << (v.attempts == 1 ? " attempt" : " attempts") << "\n";
  }
  return v.certified ? kSuccess : kCheckFailure;
}

int cmd_verify(const Options& o, std::ostream& out) {
  std::vector<std::string> only;
  for (const std::string& item : o.only) {
    std::stringstream ss(item);
    std::string part;
    while (std::getline(ss, part, ','))
      if (!part.empty()) only.push_back(part);
  }
  const Report report = verify_all(only, o.seed);
  if (!o.json_out.empty()) {
    std::ofstream file(o.json_out);
    if (!file) throw ParseError("cannot write '" + o.json_out + "'");
    file << render_structured(report);
  }
  out << (o.format == "structured" ? render_structured(report) : render_table(report));
  return report.all_pass() ? kSuccess : kCheckFailure;
}

}  // namespace

DegreeRange parse_degree_range(const std::string& text) {
  const auto dots = text.find("..");
  auto parse = [&](const std::string& part) {
    std::size_t used = 0;
    long v = 0;
    try {
      v = std::stol(part, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (part.empty() || used != part.size())
      throw ParseError("degree range '" + text + "' must look like A..B");
    return v;
  };
  if (dots == std::string::npos) throw ParseError("degree range '" + text + "' must look like A..B");
  DegreeRange r{parse(text.substr(0, dots)), parse(text.substr(dots + 2))};
  if (r.first > r.last) throw ParseError("degree range '" + text + "' is empty");
  return r;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Genus bounds for projective curves, Hilbert function search and surface checks",
               "curvegenus"};
  app.require_subcommand(1);
  Options o;
  app.add_option("--format", o.format, "Output format")
      ->check(CLI::IsMember({"table", "structured"}));

  auto* bound = app.add_subcommand("bound", "Evaluate a genus bound")->require_subcommand(1);
  bound->fallthrough();
  bound->add_option("--r", o.r, "Ambient dimension r");
  bound->add_option("--d", o.d, "Degree");
  bound->add_option("--d-range", o.d_range, "Degree sweep A..B");
  bound->add_option("--s", o.s, "Surface degree s");
  bound->add_option("--ambient", o.ambient, "Ambient dimension for Castelnuovo's bound");
  std::string family;
  for (const char* name : {"castelnuovo", "halphen", "no-quadrics", "no-cubics", "eh-pi2"}) {
    bound->add_subcommand(name)->fallthrough()->callback([&family, name] { family = name; });
  }

  auto* search = app.add_subcommand("search", "Close a constraint file and bound the genus");
  search->fallthrough();
  search->add_option("--constraints", o.constraints, "Constraint file (JSON)");

  auto* surface = app.add_subcommand("surface", "Sampled ideal dimensions of surfaces")
                      ->require_subcommand(1);
  surface->fallthrough();
  surface->add_option("--kind", o.kind, "veronese2, veronese3 or scroll");
  surface->add_option("--a", o.a, "Scroll parameter a");
  surface->add_option("--b", o.b, "Scroll parameter b");
  surface->add_option("--target", o.target, "Project generically to P^target");
  surface->add_option("--k", o.k, "Degree of hypersurfaces (default 2)");
  auto* seed_opt = surface->add_option("--seed", o.seed, "Sampling and projection seed");
  surface->add_option("--descriptor", o.descriptor, "Surface descriptor file (JSON)");
  surface->add_option("--batches", o.batches, "Sample batch budget (default 8)");
  std::string action;
  for (const char* name : {"h0", "certify"})
    surface->add_subcommand(name)->fallthrough()->callback([&action, name] { action = name; });

  auto* verify = app.add_subcommand("verify", "Run the verification suites")->require_subcommand(1);
  verify->fallthrough();
  auto* paper = verify->add_subcommand("paper", "Run every suite (or --only a subset)");
  paper->fallthrough();
  verify->add_option("--only", o.only, "Suite name(s), comma separated or repeated");
  auto* verify_seed = verify->add_option("--seed", o.seed, "Seed for randomized suites");
  verify->add_option("--json-out", o.json_out, "Also write the structured report here");

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kSuccess : kUsageError;
  }
  o.seed_given = seed_opt->count() > 0 || verify_seed->count() > 0;

  try {
    if (bound->parsed()) return cmd_bound(family, o, out);
    if (search->parsed()) return cmd_search(o, out);
    if (surface->parsed()) return cmd_surface(action, o, out);
    return cmd_verify(o, out);
  } catch (const InfeasibleError& e) {
    err << "error: " << e.what() << "\n";
    return kInfeasible;
  } catch (const InconclusiveError& e) {
    err << "error: " << e.what() << "\n";
    return kInconclusive;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
}

}  // namespace curvegenus::cli
