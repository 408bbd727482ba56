#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace gendef {

using State = std::uint32_t;
using Letter = std::uint32_t;

/// A word is a sequence of letter indices into the owning automaton's
/// alphabet. The empty vector is the empty word.
using Word = std::vector<Letter>;

/// A total self-map of {0, ..., n-1}. Products read left to right:
/// compose(f, g)[q] == g[f[q]], matching the right action of words.
class Transformation {
public:
  Transformation() = default;
  explicit Transformation(std::vector<State> image);

  static Transformation identity(std::size_t n);
  static Transformation constant(std::size_t n, State value);

  std::size_t size() const noexcept { return image_.size(); }
  State operator[](State q) const { return image_[q]; }
  std::span<const State> image() const noexcept { return image_; }

  friend bool operator==(const Transformation&, const Transformation&) = default;
  friend auto operator<=>(const Transformation&, const Transformation&) = default;

private:
  std::vector<State> image_;
};

/// Left-to-right product: result[q] = g[f[q]]. Throws DimensionError when
/// the sizes differ.
Transformation compose(const Transformation& f, const Transformation& g);

struct TransformationHash {
  std::size_t operator()(const Transformation& t) const noexcept;
};

/// Complete deterministic automaton over a named alphabet. States are
/// 0..n-1 and the transition table is total; the constructor rejects
/// anything else with InputError.
class Dfa {
public:
  /// `delta` is row-major: delta[q * alphabet.size() + a] is q·a.
  Dfa(std::vector<std::string> alphabet, std::size_t state_count,
      std::vector<State> delta, State start, std::span<const State> finals);

  std::size_t state_count() const noexcept { return state_count_; }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }
  const std::vector<std::string>& alphabet() const noexcept { return alphabet_; }
  const std::string& letter_name(Letter a) const { return alphabet_[a]; }

  State next(State q, Letter a) const noexcept {
    return delta_[static_cast<std::size_t>(q) * alphabet_.size() + a];
  }
  State start() const noexcept { return start_; }
  bool is_final(State q) const noexcept { return final_[q]; }
  std::vector<State> finals() const;
  std::span<const State> table() const noexcept { return delta_; }

  /// Index of a letter by name, if present.
  std::optional<Letter> letter_index(std::string_view name) const;

  friend bool operator==(const Dfa&, const Dfa&) = default;

private:
  std::vector<std::string> alphabet_;
  std::size_t state_count_ = 0;
  std::vector<State> delta_;
  State start_ = 0;
  std::vector<bool> final_;
};

/// q·w.
State act(const Dfa& dfa, State q, std::span<const Letter> w);

/// Whether start·w is final.
bool accepts(const Dfa& dfa, std::span<const Letter> w);

/// The map q ↦ q·w. The empty word yields the identity, which is not an
/// element of the transition semigroup.
Transformation transformation_of(const Dfa& dfa, std::span<const Letter> w);

/// States reachable from `from`, ascending. Always contains `from`.
std::vector<State> reachable_set(const Dfa& dfa, State from);

/// Reachable restriction together with the old → new state map
/// (nullopt for unreachable states).
struct Restriction {
  Dfa dfa;
  std::vector<std::optional<State>> state_map;
};

/// Restricts to states reachable from the start, numbered in BFS
/// discovery order with letters scanned in alphabet order.
Restriction restrict_to_reachable(const Dfa& dfa);

inline Dfa connected_part(const Dfa& dfa) { return restrict_to_reachable(dfa).dfa; }

/// Same automaton with final and non-final states exchanged.
Dfa complement(const Dfa& dfa);

/// Shortest, then lexicographically least word w with from·w == to, if any.
/// With `nonempty` set, the empty word is not a candidate (so from == to
/// asks for a cycle word).
std::optional<Word> shortest_path_word(const Dfa& dfa, State from, State to,
                                       bool nonempty = false);

/// Renders a word as space-separated letter names.
std::string format_word(const Dfa& dfa, std::span<const Letter> w);

/// Parses space-separated letter names. Throws InputError on unknown names.
Word parse_word(const Dfa& dfa, std::string_view text);

/// Concatenation helpers.
Word concat(std::initializer_list<std::span<const Letter>> parts);
Word repeat(std::span<const Letter> w, std::size_t exponent);

}  // namespace gendef
