#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "hornich/criteria.hpp"

namespace hornich {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  SamplingProfile profile;
  unsigned threads = 1;
  std::uint64_t seed = 20240611;  // randomized batteries of criteria 4-6 and 10
};

// Runs criteria 1-10 in order; `on_result` sees each result as it finishes.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opts,
                                            const std::function<void(const CriterionResult&)>& on_result = {});

// "PASS  3  b(alpha) lemma ...  (0.42 s)"
std::string format_result(const CriterionResult& r);

}  // namespace hornich
