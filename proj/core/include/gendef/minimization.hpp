#pragma once

#include <optional>
#include <vector>

#include "gendef/automaton.hpp"

namespace gendef {

struct MinimizationResult {
  /// The reduced automaton, states in canonical BFS order.
  Dfa reduced;
  /// Original state → reduced state; nullopt for states outside the
  /// connected part.
  std::vector<std::optional<State>> class_of;
};

/// Hopcroft partition refinement on the connected part, O(kn log n).
MinimizationResult minimize(const Dfa& dfa);

/// Shortest, then lexicographically least word separating p and q; nullopt
/// iff the states are equivalent.
std::optional<Word> separating_word(const Dfa& dfa, State p, State q);

/// Connected and no two distinct states equivalent.
bool is_reduced(const Dfa& dfa);

}  // namespace gendef
