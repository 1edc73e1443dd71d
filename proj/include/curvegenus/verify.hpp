#ifndef CURVEGENUS_VERIFY_HPP
#define CURVEGENUS_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "curvegenus/report.hpp"

namespace curvegenus {

/// Suite names in execution order: castelnuovo, theorem1, eh-pi2, gdpi,
/// sharpness, appendix, theorem2, propositions, surfaces, engine.
const std::vector<std::string>& suite_names();

/// Runs one suite. `seed` drives the randomized suites (surfaces, engine)
/// and is recorded in their check inputs. Throws DomainError for an unknown name.
Report run_suite(const std::string& name, std::uint64_t seed = 1);

/// Runs the selected suites (all when `only` is empty) concurrently and
/// concatenates their reports in suite order.
Report verify_all(const std::vector<std::string>& only = {}, std::uint64_t seed = 1);

}  // namespace curvegenus

#endif  // CURVEGENUS_VERIFY_HPP
