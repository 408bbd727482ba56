#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "gendef/automaton.hpp"

namespace gendef {

inline constexpr std::size_t kDefaultSemigroupLimit = 1'000'000;

/// T(A): the transformations induced by nonempty words, in BFS order of
/// their shortest (then lexicographically least) generating words.
struct TransitionSemigroup {
  std::size_t state_count = 0;
  std::size_t generator_count = 0;
  std::vector<Transformation> elements;
  std::vector<Word> shortest_word;

  std::size_t size() const { return elements.size(); }
};

/// BFS closure of the letter transformations under right multiplication by
/// letters. Throws ResourceError (with reached() > limit) once the closure
/// grows past `limit` elements.
TransitionSemigroup enumerate_semigroup(const Dfa& dfa,
                                        std::size_t limit = kDefaultSemigroupLimit);

/// t^|Q| is constant; equivalently t permutes no subset of size > 1.
bool is_non_permutational(const Transformation& t);

bool is_idempotent(const Transformation& t);

std::vector<State> fixed_points(const Transformation& t);

/// Whether t maps every member of `subset` to a single state when applied
/// |subset| times. `subset` must be closed under t.
bool is_non_permutational_on(const Transformation& t, std::span<const State> subset);

/// t^e by repeated squaring.
Transformation power(const Transformation& t, std::uint64_t e);

/// T_p = { t : fix(t) = p } for a semigroup whose elements each have a
/// unique fixed point. parts[p] holds indices into sg.elements.
struct FixedPointPartition {
  std::vector<std::vector<std::size_t>> parts;
};

/// Throws PreconditionError ("not definite") when some element does not
/// have exactly one fixed point, InternalError if a part is not closed.
FixedPointPartition fixed_point_partition(const TransitionSemigroup& sg);

/// A linear order ≺ on the states with p maximal and q ≺ q·t for every
/// t ∈ T_p and q ≠ p, obtained by topologically sorting the graph G_p.
/// Throws PreconditionError when T_p is empty or some element has a second
/// fixed point, InternalError when G_p has a cycle.
std::vector<State> acyclic_order_for(const TransitionSemigroup& sg, State p);

/// The least (j, k), 1-based and lexicographic, such that f_j ⋯ f_k is
/// idempotent. Throws DimensionError on mixed sizes and PreconditionError
/// on an empty sequence.
std::optional<std::pair<std::size_t, std::size_t>> find_idempotent_factor(
    std::span<const Transformation> seq);

/// Upper bound on the c-colour triangle Ramsey number via
/// R(1) = 3, R(c) = c·(R(c-1) - 1) + 2. Checked 64-bit arithmetic;
/// ResourceError on overflow, PreconditionError for c = 0.
std::uint64_t ramsey_triangle_bound(std::uint64_t colours);

/// Product length that guarantees an idempotent factor over a set of the
/// given size: ramsey_triangle_bound(size^size). Overflows (ResourceError)
/// from size 3 on.
std::uint64_t m_bound(std::uint64_t set_size);

/// n!, checked.
std::uint64_t checked_factorial(std::uint64_t n);

struct SyntacticSearchResult {
  std::size_t max_size = 0;
  /// A reduced automaton with a definite language attaining max_size; its
  /// letters are the generators, named by their image lists.
  std::optional<Dfa> witness;
  /// Distinct semigroups (up to state relabelling) explored.
  std::size_t semigroups_explored = 0;
};

/// Exhaustive search over semigroups of non-permutational transformations
/// of n states: the largest |T| of a reduced n-state automaton recognizing
/// a definite language. n ≤ 4; ResourceError above that or when an
/// explored semigroup exceeds `limit`.
SyntacticSearchResult search_max_syntactic_complexity(std::size_t n,
                                                      std::size_t limit = kDefaultSemigroupLimit);

/// Name used for a transformation when it becomes a letter: its image list,
/// comma-separated.
std::string image_list_name(const Transformation& t);

}  // namespace gendef
