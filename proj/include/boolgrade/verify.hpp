#pragma once

// Whole-statement verification sweeps. Exhaustive up to degree 5; larger
// degrees use a seeded sample unless exhaustive mode is requested.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace boolgrade {

struct VerifyConfig {
  int n_min = 3;
  int n_max = 5;
  /// Largest k for the selfish-subset sweep.
  int k_max = 15;
  std::uint64_t seed = 1;
  bool exhaustive = false;
  /// Cases drawn per degree when sampling.
  std::size_t samples = 1000;
  int threads = 1;
  /// Counterexamples kept in the result; the count is always exact.
  std::size_t max_reported = 20;
};

struct VerifyResult {
  std::string id;
  std::size_t cases = 0;
  std::size_t failures = 0;
  bool sampled = false;
  std::vector<std::string> counterexamples;

  bool passed() const { return failures == 0; }
};

/// thm2.4 prop3.3 prop3.5 cor3.6 thm3.10 lem4.3 lem4.4 prop5.8 lem5.6
/// thm5.10 thm6.4 cor6.7 thm6.8 thm7.2 thm7.3
const std::vector<std::string>& verify_ids();

/// Throws InvalidArgument on an unknown id.
VerifyResult verify(const std::string& id, const VerifyConfig& config);

}  // namespace boolgrade
