#include "gendef/automaton.hpp"

#include <algorithm>
#include <deque>
#include <set>

#include "gendef/errors.hpp"

namespace gendef {

Transformation::Transformation(std::vector<State> image) : image_(std::move(image)) {
  for (State v : image_) {
    if (v >= image_.size()) {
      throw InputError("transformation image " + std::to_string(v) + " out of range");
    }
  }
}

Transformation Transformation::identity(std::size_t n) {
  std::vector<State> image(n);
  for (std::size_t q = 0; q < n; ++q) image[q] = static_cast<State>(q);
  return Transformation(std::move(image));
}

Transformation Transformation::constant(std::size_t n, State value) {
  return Transformation(std::vector<State>(n, value));
}

Transformation compose(const Transformation& f, const Transformation& g) {
  if (f.size() != g.size()) {
    throw DimensionError("compose: transformations of size " + std::to_string(f.size()) +
                         " and " + std::to_string(g.size()));
  }
  std::vector<State> image(f.size());
  for (std::size_t q = 0; q < f.size(); ++q) image[q] = g[f[static_cast<State>(q)]];
  return Transformation(std::move(image));
}

std::size_t TransformationHash::operator()(const Transformation& t) const noexcept {
  // FNV-1a over the image entries.
  std::uint64_t h = 1469598103934665603ULL;
  for (State v : t.image()) {
    h ^= v;
    h *= 1099511628211ULL;
  }
  return static_cast<std::size_t>(h);
}

Dfa::Dfa(std::vector<std::string> alphabet, std::size_t state_count,
         std::vector<State> delta, State start, std::span<const State> finals)
    : alphabet_(std::move(alphabet)),
      state_count_(state_count),
      delta_(std::move(delta)),
      start_(start),
      final_(state_count, false) {
  if (state_count_ == 0) throw InputError("automaton needs at least one state");
  if (alphabet_.empty()) throw InputError("alphabet must be nonempty");
  std::set<std::string_view> seen;
  for (const auto& name : alphabet_) {
    if (name.empty()) throw InputError("empty letter name");
    if (!seen.insert(name).second) throw InputError("duplicate letter '" + name + "'");
  }
  if (delta_.size() != state_count_ * alphabet_.size()) {
    throw InputError("transition table has " + std::to_string(delta_.size()) +
                     " entries, expected " +
                     std::to_string(state_count_ * alphabet_.size()));
  }
  for (State t : delta_) {
    if (t >= state_count_) throw InputError("transition target " + std::to_string(t) + " out of range");
  }
  if (start_ >= state_count_) throw InputError("start state out of range");
  for (State f : finals) {
    if (f >= state_count_) throw InputError("final state " + std::to_string(f) + " out of range");
    final_[f] = true;
  }
}

std::vector<State> Dfa::finals() const {
  std::vector<State> out;
  for (std::size_t q = 0; q < state_count_; ++q) {
    if (final_[q]) out.push_back(static_cast<State>(q));
  }
  return out;
}

std::optional<Letter> Dfa::letter_index(std::string_view name) const {
  for (std::size_t a = 0; a < alphabet_.size(); ++a) {
    if (alphabet_[a] == name) return static_cast<Letter>(a);
  }
  return std::nullopt;
}

State act(const Dfa& dfa, State q, std::span<const Letter> w) {
  for (Letter a : w) q = dfa.next(q, a);
  return q;
}

bool accepts(const Dfa& dfa, std::span<const Letter> w) {
  return dfa.is_final(act(dfa, dfa.start(), w));
}

Transformation transformation_of(const Dfa& dfa, std::span<const Letter> w) {
  std::vector<State> image(dfa.state_count());
  for (std::size_t q = 0; q < image.size(); ++q) image[q] = act(dfa, static_cast<State>(q), w);
  return Transformation(std::move(image));
}

std::vector<State> reachable_set(const Dfa& dfa, State from) {
  std::vector<bool> seen(dfa.state_count(), false);
  std::vector<State> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (Letter a = 0; a < dfa.alphabet_size(); ++a) {
      State t = dfa.next(q, a);
      if (!seen[t]) {
        seen[t] = true;
        stack.push_back(t);
      }
    }
  }
  std::vector<State> out;
  for (std::size_t q = 0; q < seen.size(); ++q) {
    if (seen[q]) out.push_back(static_cast<State>(q));
  }
  return out;
}

Restriction restrict_to_reachable(const Dfa& dfa) {
  const std::size_t k = dfa.alphabet_size();
  std::vector<std::optional<State>> map(dfa.state_count());
  std::vector<State> order;
  order.reserve(dfa.state_count());
  map[dfa.start()] = 0;
  order.push_back(dfa.start());
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      State t = dfa.next(order[i], a);
      if (!map[t]) {
        map[t] = static_cast<State>(order.size());
        order.push_back(t);
      }
    }
  }
  std::vector<State> delta(order.size() * k);
  std::vector<State> finals;
  for (std::size_t i = 0; i < order.size(); ++i) {
    for (Letter a = 0; a < k; ++a) delta[i * k + a] = *map[dfa.next(order[i], a)];
    if (dfa.is_final(order[i])) finals.push_back(static_cast<State>(i));
  }
  return {Dfa(dfa.alphabet(), order.size(), std::move(delta), 0, finals), std::move(map)};
}

Dfa complement(const Dfa& dfa) {
  std::vector<State> finals;
  for (std::size_t q = 0; q < dfa.state_count(); ++q) {
    if (!dfa.is_final(static_cast<State>(q))) finals.push_back(static_cast<State>(q));
  }
  return Dfa(dfa.alphabet(), dfa.state_count(),
             std::vector<State>(dfa.table().begin(), dfa.table().end()), dfa.start(), finals);
}

std::optional<Word> shortest_path_word(const Dfa& dfa, State from, State to, bool nonempty) {
  if (from == to && !nonempty) return Word{};
  // BFS with letters in alphabet order; the parent edge recorded on first
  // discovery yields the lexicographically least among the shortest words.
  constexpr State kUnseen = static_cast<State>(-1);
  const std::size_t n = dfa.state_count();
  std::vector<State> parent(n, kUnseen);
  std::vector<Letter> via(n, 0);
  std::deque<State> queue{from};
  std::vector<bool> seen(n, false);
  seen[from] = true;
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (Letter a = 0; a < dfa.alphabet_size(); ++a) {
      State t = dfa.next(q, a);
      if (t == to) {
        Word w{a};
        for (State s = q; s != from; s = parent[s]) w.push_back(via[s]);
        std::reverse(w.begin(), w.end());
        return w;
      }
      if (!seen[t]) {
        seen[t] = true;
        parent[t] = q;
        via[t] = a;
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

std::string format_word(const Dfa& dfa, std::span<const Letter> w) {
  std::string out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) out += ' ';
    out += dfa.letter_name(w[i]);
  }
  return out;
}

Word parse_word(const Dfa& dfa, std::string_view text) {
  Word w;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t j = i;
    while (j < text.size() && text[j] != ' ') ++j;
    if (j > i) {
      auto a = dfa.letter_index(text.substr(i, j - i));
      if (!a) throw InputError("unknown letter '" + std::string(text.substr(i, j - i)) + "'");
      w.push_back(*a);
    }
    i = j;
  }
  return w;
}

Word concat(std::initializer_list<std::span<const Letter>> parts) {
  Word w;
  for (auto part : parts) w.insert(w.end(), part.begin(), part.end());
  return w;
}

Word repeat(std::span<const Letter> w, std::size_t exponent) {
  Word out;
  out.reserve(w.size() * exponent);
  for (std::size_t i = 0; i < exponent; ++i) out.insert(out.end(), w.begin(), w.end());
  return out;
}

}  // namespace gendef
