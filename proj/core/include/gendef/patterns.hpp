#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>

#include "gendef/automaton.hpp"
#include "gendef/semigroup.hpp"

namespace gendef {

/// The four forbidden patterns, all on two distinct states p and q:
///   Pf: p·x = p, q·y = q            (finite / cofinite)
///   Pd: p·x = p, q·x = q            (definite)
///   Pr: p·x = p, p·y = q            (reverse definite)
///   Pg: p·x = p, q·x = q, p·y = q   (generalized definite)
enum class PatternId { Pf = 0, Pd = 1, Pr = 2, Pg = 3 };

inline constexpr std::array<PatternId, 4> kAllPatterns{PatternId::Pf, PatternId::Pd,
                                                       PatternId::Pr, PatternId::Pg};

std::string_view pattern_name(PatternId id);

/// A concrete instantiation of a pattern: the images of the two pattern
/// vertices and the words substituted for its variables. `y` is present for
/// Pf, Pr and Pg.
struct PatternWitness {
  PatternId pattern;
  State p;
  State q;
  Word x;
  std::optional<Word> y;

  friend bool operator==(const PatternWitness&, const PatternWitness&) = default;
};

struct ClassReport {
  /// Minimal automaton the verdicts and witness states refer to.
  Dfa reduced;
  bool is_finite = false;
  bool is_cofinite = false;
  bool is_definite = false;
  bool is_reverse_definite = false;
  bool is_generalized_definite = false;
  /// Indexed by PatternId.
  std::array<std::optional<PatternWitness>, 4> witnesses;

  std::size_t reduced_states() const { return reduced.state_count(); }
  const std::optional<PatternWitness>& witness(PatternId id) const {
    return witnesses[static_cast<std::size_t>(id)];
  }
};

// Witness search. Each function decides admission exactly for the automaton
// it is given (reduced or not). Ties are broken by the smallest pair (p, q)
// in state order, then shortest and lexicographically least words.
std::optional<PatternWitness> admits_pf(const Dfa& dfa);
std::optional<PatternWitness> admits_pd(const Dfa& dfa);
std::optional<PatternWitness> admits_pr(const Dfa& dfa);

/// Quadratic procedure: reject when a nontrivial component is not a sink,
/// otherwise look for an off-diagonal pair of one sink lying in a nontrivial
/// component of A × A.
std::optional<PatternWitness> admits_pg(const Dfa& dfa);

/// Minimizes, then evaluates all four patterns on the minimal automaton.
ClassReport classify(const Dfa& dfa);

/// Semigroup-side characterization of generalized definiteness for a reduced
/// automaton: every nontrivial component is a sink and every semigroup element
/// restricted to every sink is non-permutational. Throws PreconditionError on
/// a non-reduced input and ResourceError past `limit` elements.
bool check_condition_ii(const Dfa& dfa, std::size_t limit = kDefaultSemigroupLimit);

/// Every element of the transition semigroup is non-permutational.
bool check_definite_condition_iii(const Dfa& dfa, std::size_t limit = kDefaultSemigroupLimit);

/// Unique sink, every other component trivial, every element
/// non-permutational on the sink.
bool check_definite_condition_iv(const Dfa& dfa, std::size_t limit = kDefaultSemigroupLimit);

/// Evaluates the pattern equations with `act`. Out-of-range states or
/// letters make the witness invalid rather than throwing.
bool validate_witness(const Dfa& dfa, const PatternWitness& w);

/// Two words with equal length-k prefixes and suffixes and different
/// membership: u x^k x^k s and u x^k y x^k s, where start·u = p and s
/// separates p from q. Throws PreconditionError when `w` is not a valid Pg
/// witness, k < 1, p is unreachable or p, q are equivalent.
std::pair<Word, Word> non_k_gd_counterexample(const Dfa& dfa, const PatternWitness& w,
                                              std::size_t k);

/// A × A. Pair (p, q) has id p·n + q. Start is (start, start); a pair is
/// final iff exactly one coordinate is final, so the final pairs are the
/// ones the empty word separates.
struct ProductAutomaton {
  Dfa base;
  std::size_t factor_states;

  std::size_t pair_id(State p, State q) const { return p * factor_states + q; }
  std::pair<State, State> pair_of(std::size_t id) const {
    return {static_cast<State>(id / factor_states), static_cast<State>(id % factor_states)};
  }
};

ProductAutomaton product_automaton(const Dfa& dfa);

}  // namespace gendef
