#include <algorithm>
#include <cmath>

#include "rwci/oracle.hpp"

namespace rwci::oracle {

bool Report::passed() const {
  return !checks.empty() &&
         std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed; });
}

void Report::check(std::string name, double oracle, double closed_form, double tolerance,
                   Comparison comparison) {
  bool ok = false;
  switch (comparison) {
    case Comparison::kEqual:
      // Matching infinities count as agreement.
      ok = oracle == closed_form || std::abs(oracle - closed_form) <= tolerance;
      break;
    case Comparison::kAtLeast:
      ok = oracle >= closed_form - tolerance;
      break;
    case Comparison::kAtMost:
      ok = oracle <= closed_form + tolerance;
      break;
  }
  checks.push_back({std::move(name), oracle, closed_form, tolerance, comparison, ok});
}

void Report::detail(std::string name, double value) {
  details.push_back({std::move(name), value});
}

}  // namespace rwci::oracle
