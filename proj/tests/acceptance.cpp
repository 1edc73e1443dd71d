// Acceptance suite: one line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cstdint>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include "curvegenus/verify.hpp"

namespace {

struct Criterion {
  int number;
  const char* title;
  const char* suite;
  double budget_seconds;
};

constexpr std::uint64_t kSeed = 1;

const std::vector<Criterion> kCriteria = {
    {1, "Castelnuovo closed, binomial and summed forms agree", "castelnuovo", 1.0},
    {2, "even-degree no-quadrics bound is a plane curve genus", "theorem1", 1.0},
    {3, "Eisenbud-Harris pi >= 2 bound below d(d-6)/8+1", "eh-pi2", 1.0},
    {4, "quintic-surface genus sums equal their closed forms", "gdpi", 1.0},
    {5, "cone construction attains G(d,1)", "sharpness", 5.0},
    {6, "hyperplane-section case analysis replay", "appendix", 5.0},
    {7, "no-quadrics bound in P^5 equals Castelnuovo in P^7", "theorem2", 1.0},
    {8, "scroll parameter tables and integrality classes", "propositions", 1.0},
    {9, "surface certificates and scroll section counts", "surfaces", 30.0},
    {10, "engine recovers Castelnuovo and is monotone", "engine", 5.0},
};

}  // namespace

int main() {
  int failed = 0;
  for (const Criterion& c : kCriteria) {
    const auto start = std::chrono::steady_clock::now();
    const curvegenus::Report report = curvegenus::run_suite(c.suite, kSeed);
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    const bool in_time = elapsed < c.budget_seconds;
    const bool pass = report.all_pass() && in_time;
    if (!pass) ++failed;

    std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << std::setw(2) << c.number << "  "
              << c.title << "  [" << report.checks.size() - report.failures() << "/"
              << report.checks.size() << " checks, " << std::fixed << std::setprecision(3)
              << elapsed << " s of " << std::setprecision(0) << c.budget_seconds << " s]\n";
    for (const curvegenus::Check& check : report.checks) {
      if (check.pass) continue;
      std::cout << "      " << check.name << ": expected " << check.expected << ", computed "
                << check.computed << "\n";
    }
    if (!in_time) std::cout << "      over the time budget\n";
  }
  std::cout << (kCriteria.size() - failed) << "/" << kCriteria.size() << " criteria passed\n";
  return failed == 0 ? 0 : 1;
}
