#pragma once

// Agreement and invariant checks run over enumerated automata. Each property
// counts the automata it applied to and keeps the first counterexample.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "gendef/automaton.hpp"

namespace gendef {

struct PropertyResult {
  std::string name;
  std::size_t checked = 0;
  std::size_t failures = 0;
  std::optional<Dfa> counterexample;
  std::string detail;
};

struct CheckOptions {
  std::size_t max_k = 32;
  /// Property names to run; empty runs all of them.
  std::vector<std::string> only;
  /// Deliberately negates one verdict so the harness can be seen to fail.
  bool inject_fault = false;
};

/// Property names, in report order:
///   gd_characterization, definite_characterization, finite_cofinite,
///   reverse_definite, witness_validity, pg_counterexamples, definitize,
///   fixed_points, round_trip, index_monotonicity, word_level_soundness
const std::vector<std::string>& property_names();

class PropertyChecker {
public:
  explicit PropertyChecker(CheckOptions options = {});

  void check(const Dfa& dfa);

  const std::vector<PropertyResult>& results() const { return results_; }
  const PropertyResult& result(const std::string& name) const;
  bool ok() const;

private:
  bool enabled(std::size_t index) const { return enabled_[index]; }
  void record(std::size_t index, bool passed, const Dfa& dfa, const std::string& detail);

  CheckOptions options_;
  std::vector<bool> enabled_;
  std::vector<PropertyResult> results_;
};

struct SelftestOptions {
  std::size_t max_states = 3;
  /// Random automata drawn at four states (exhaustive enumeration stops at three).
  std::size_t samples_at_four = 2000;
  std::uint64_t seed = 20240601;
  bool inject_fault = false;
};

/// Exhaustive over n ≤ min(max_states, 3) with one and two letters, sampled
/// at n = 4. Progress and counts go to `log`.
std::vector<PropertyResult> run_selftest(const SelftestOptions& options, std::ostream& log);

}  // namespace gendef
