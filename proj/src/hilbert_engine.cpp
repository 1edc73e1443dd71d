#include "curvegenus/hilbert_engine.hpp"

#include <algorithm>
#include <optional>

#include "curvegenus/error.hpp"

namespace curvegenus {

namespace {

long ceil_half(long x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

}  // namespace

void validate(const ConstraintSet& c) {
  if (c.d < 1) throw DomainError("constraint set: d must be >= 1");
  if (c.n < 1) throw DomainError("constraint set: N must be >= 1");
  auto check_map = [&](const std::map<long, long>& values, const char* what) {
    for (const auto& [i, v] : values) {
      if (i < 1)
        throw DomainError(std::string(what) + " index must be >= 1, got " + std::to_string(i));
      if (v > c.d || v < 0)
        throw DomainError(std::string(what) + " value h(" + std::to_string(i) + ") = " +
                          std::to_string(v) + " outside [0, d]");
    }
  };
  check_map(c.fixed, "fixed");
  check_map(c.lower, "lower");
  for (const auto& rules : {c.decay, c.decay_active}) {
    for (const DecayRule& rule : rules) {
      if (rule.index < 2)
        throw DomainError("decay index must be >= 2, got " + std::to_string(rule.index));
      if (rule.drop < 0) throw DomainError("decay drop must be >= 0");
    }
  }
}

HilbertProfile minimal_profile(const ConstraintSet& c) {
  validate(c);
  const long d = c.d;
  long cap = d;
  for (const auto& [i, v] : c.fixed) cap = std::max(cap, i);
  for (const auto& [i, v] : c.lower) cap = std::max(cap, i);
  for (const DecayRule& rule : c.decay_active) cap = std::max(cap, rule.index + 1);

  std::vector<long> h(static_cast<std::size_t>(cap) + 1, 0);
  h[0] = 1;
  for (long i = 1; i <= cap; ++i) {
    long v = std::min(d, i * c.n + 1);
    if (auto it = c.lower.find(i); it != c.lower.end()) v = std::max(v, it->second);
    if (auto it = c.fixed.find(i); it != c.fixed.end()) v = std::max(v, it->second);
    h[static_cast<std::size_t>(i)] = v;
  }
  auto at = [&](long i) { return i > cap ? d : h[static_cast<std::size_t>(i)]; };

  bool changed = true;
  while (changed) {
    changed = false;
    for (long i = 1; i <= cap; ++i) {
      long v = std::max(at(i), at(i - 1));
      for (long j = 1; j <= i / 2; ++j) v = std::max(v, std::min(d, at(j) + at(i - j) - 1));
      for (const DecayRule& rule : c.decay_active) {
        if (rule.index == i) {
          // Delta h(i+1) <= Delta h(i) - drop  <=>  2 h(i) >= h(i+1) + h(i-1) + drop,
          // and Delta h(i+1) >= 1 forces Delta h(i) >= drop + 1.
          v = std::max(v, ceil_half(at(i + 1) + at(i - 1) + rule.drop));
          v = std::max(v, at(i - 1) + rule.drop + 1);
        } else if (rule.index + 1 == i) {
          v = std::max(v, at(i - 1) + 1);
        }
      }
      v = std::min(v, d);
      if (v > h[static_cast<std::size_t>(i)]) {
        h[static_cast<std::size_t>(i)] = v;
        changed = true;
      }
    }
  }

  for (const DecayRule& rule : c.decay_active) {
    if (at(rule.index) >= d)
      throw InfeasibleError(rule.index, "decay branch needs h(" + std::to_string(rule.index) +
                                            ") < d but the closure reaches d");
  }
  for (const auto& [i, v] : c.fixed) {
    if (at(i) > v) throw InfeasibleError(i, v, at(i));
  }

  HilbertProfile out;
  out.d = d;
  for (long i = 0; i <= cap; ++i) {
    out.values.push_back(at(i));
    if (at(i) == d) break;
  }
  return out;
}

GenusEstimate genus_upper_bound(const ConstraintSet& c) {
  if (c.decay.empty()) {
    GenusEstimate out;
    out.profile = minimal_profile(c);
    out.bound = out.profile.deficiency_sum();
    out.strict = c.strict;
    return out;
  }
  const DecayRule rule = c.decay.front();
  GenusEstimate best;
  bool found = false;
  int branches = 0;
  std::optional<InfeasibleError> last_error;
  for (const ConstraintSet& branch : decay_split(c, rule.index, rule.drop)) {
    try {
      GenusEstimate e = genus_upper_bound(branch);
      branches += e.branches;
      if (!found || e.bound > best.bound) best = std::move(e);
      found = true;
    } catch (const InfeasibleError& err) {
      last_error = err;
    }
  }
  if (!found) throw *last_error;
  best.branches = branches;
  best.strict = c.strict;
  return best;
}

std::vector<ConstraintSet> decay_split(const ConstraintSet& c, long i, long drop) {
  if (i < 2) throw DomainError("decay_split: index must be >= 2");
  if (drop < 0) throw DomainError("decay_split: drop must be >= 0");
  ConstraintSet base = c;
  const DecayRule rule{i, drop};
  if (auto it = std::find(base.decay.begin(), base.decay.end(), rule); it != base.decay.end())
    base.decay.erase(it);

  const HilbertProfile closed = minimal_profile(base);
  if (closed.at(i) >= base.d) return {base};

  const std::string tag = "h(" + std::to_string(i) + ")";
  ConstraintSet saturated = base;
  saturated.lower[i] = base.d;
  saturated.label += (saturated.label.empty() ? "" : " | ") + tag + " = d";

  ConstraintSet decaying = base;
  decaying.decay_active.push_back(rule);
  decaying.label += (decaying.label.empty() ? "" : " | ") + tag + " < d, decay " +
                    std::to_string(drop);
  try {
    minimal_profile(decaying);
  } catch (const InfeasibleError&) {
    return {saturated};
  }
  return {saturated, decaying};
}

}  // namespace curvegenus
