#pragma once

// Semantic deciders used as ground truth for the pattern characterizations.
//
// The defining quantifiers range over words; each decider replaces them by
// states. For generalized definiteness with parameter k, x1 ranges over the
// states s = start·x1 reachable by words of length exactly k, y over the
// states p reachable from s, and the condition x1·y·x2 ∈ L ⟺ x1·x2 ∈ L
// becomes "no word of length exactly k separates s from p". Exact-length
// separability is the fixpoint-free recurrence
//   sep_0(u, v) = [u ∈ F] xor [v ∈ F]
//   sep_j(u, v) = ∃a. sep_{j-1}(u·a, v·a),
// so the state-level statements are equivalent to the word-level ones, not
// approximations.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <string_view>

#include "gendef/automaton.hpp"

namespace gendef {

enum class ClassKind { Definite, ReverseDefinite, GeneralizedDefinite };

std::string_view kind_name(ClassKind kind);

struct IndexReport {
  ClassKind kind;
  std::optional<std::size_t> minimal_k;
  std::size_t searched_up_to = 0;
};

/// ∀x1, x2 ∈ Σ^k, y ∈ Σ*: x1·y·x2 ∈ L ⟺ x1·x2 ∈ L. O(k·n²·|Σ|).
bool is_k_generalized_definite(const Dfa& dfa, std::size_t k);

/// ∀x ∈ Σ*, y ∈ Σ^k: x·y ∈ L ⟺ y ∈ L.
bool is_k_definite(const Dfa& dfa, std::size_t k);

/// ∀x ∈ Σ^k, y ∈ Σ*: x·y ∈ L ⟺ x ∈ L.
bool is_k_reverse_definite(const Dfa& dfa, std::size_t k);

bool is_k(const Dfa& dfa, ClassKind kind, std::size_t k);

/// Least k ≤ max_k passing the kind's check.
IndexReport definiteness_index(const Dfa& dfa, ClassKind kind, std::size_t max_k);

/// No state that is reachable and co-reachable lies on a cycle.
bool is_finite_language(const Dfa& dfa);

/// Literal enumeration of the defining biconditional with the free word
/// (y for generalized/reverse, x for definite) bounded by max_len. Throws
/// ResourceError when more than `budget` word combinations would be tested.
bool word_level_check(const Dfa& dfa, ClassKind kind, std::size_t k, std::size_t max_len,
                      std::uint64_t budget = 50'000'000);

/// All complete DFAs with states 0..n-1, start 0 and letters "a", "b", …:
/// n^(n·k) transition tables times 2^n final sets. Index order is
/// deterministic: final-set bits vary fastest, then the table read as a
/// base-n number with entry 0 least significant.
class DfaEnumeration {
public:
  /// Throws ResourceError when the count exceeds `budget`.
  DfaEnumeration(std::size_t states, std::size_t alphabet_size,
                 std::uint64_t budget = 100'000'000);

  std::uint64_t size() const noexcept { return count_; }
  Dfa at(std::uint64_t index) const;

  void for_each(const std::function<void(const Dfa&)>& visit) const;

private:
  std::size_t n_;
  std::size_t k_;
  std::uint64_t count_;
};

/// Names "a".."z", then "l26", "l27", ….
std::vector<std::string> default_alphabet(std::size_t size);

}  // namespace gendef
