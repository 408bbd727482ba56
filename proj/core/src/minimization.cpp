#include "gendef/minimization.hpp"

#include <algorithm>
#include <deque>
#include <utility>

namespace gendef {

namespace {

// Block-structured partition of 0..n-1 for Hopcroft refinement. The states
// of block b occupy elems[first[b], end[b]); the first marked[b] of them are
// marked during a splitter pass.
class Partition {
public:
  explicit Partition(std::size_t n) : elems_(n), loc_(n), block_of_(n, 0) {}

  void init(const std::vector<bool>& accepting) {
    std::size_t lo = 0;
    std::size_t hi = elems_.size();
    for (std::size_t q = 0; q < elems_.size(); ++q) {
      std::size_t pos = accepting[q] ? lo++ : --hi;
      elems_[pos] = static_cast<State>(q);
      loc_[q] = pos;
    }
    if (lo > 0) add_block(0, lo);
    if (lo < elems_.size()) add_block(lo, elems_.size());
    for (std::size_t b = 0; b < first_.size(); ++b) {
      for (std::size_t i = first_[b]; i < end_[b]; ++i) block_of_[elems_[i]] = static_cast<State>(b);
    }
  }

  std::size_t block_count() const { return first_.size(); }
  std::size_t size(std::size_t b) const { return end_[b] - first_[b]; }
  State block_of(State q) const { return block_of_[q]; }
  std::span<const State> members(std::size_t b) const {
    return std::span<const State>(elems_).subspan(first_[b], size(b));
  }

  // Returns true when this was the first mark in the block.
  bool mark(State q) {
    State b = block_of_[q];
    std::size_t boundary = first_[b] + marked_[b];
    std::size_t pos = loc_[q];
    if (pos < boundary) return false;
    std::swap(elems_[pos], elems_[boundary]);
    loc_[elems_[pos]] = pos;
    loc_[elems_[boundary]] = boundary;
    return marked_[b]++ == 0;
  }

  // Splits off the marked prefix of block b. Returns the new block id, or
  // nullopt when all or none of the block was marked.
  std::optional<std::size_t> split(std::size_t b) {
    std::size_t m = marked_[b];
    marked_[b] = 0;
    if (m == 0 || m == size(b)) return std::nullopt;
    std::size_t nb = add_block(first_[b], first_[b] + m);
    first_[b] += m;
    for (std::size_t i = first_[nb]; i < end_[nb]; ++i) block_of_[elems_[i]] = static_cast<State>(nb);
    return nb;
  }

private:
  std::size_t add_block(std::size_t first, std::size_t end) {
    first_.push_back(first);
    end_.push_back(end);
    marked_.push_back(0);
    return first_.size() - 1;
  }

  std::vector<State> elems_;
  std::vector<std::size_t> loc_;
  std::vector<State> block_of_;
  std::vector<std::size_t> first_, end_, marked_;
};

// Per-letter predecessor lists in CSR layout.
struct Predecessors {
  std::size_t n;
  std::vector<std::size_t> offset;  // (k * (n + 1))
  std::vector<State> source;        // (k * n)

  explicit Predecessors(const Dfa& dfa)
      : n(dfa.state_count()),
        offset(dfa.alphabet_size() * (dfa.state_count() + 1), 0),
        source(dfa.alphabet_size() * dfa.state_count()) {
    const std::size_t k = dfa.alphabet_size();
    for (Letter a = 0; a < k; ++a) {
      std::size_t* off = &offset[a * (n + 1)];
      for (std::size_t q = 0; q < n; ++q) ++off[dfa.next(static_cast<State>(q), a) + 1];
      for (std::size_t t = 0; t < n; ++t) off[t + 1] += off[t];
      std::vector<std::size_t> fill(off, off + n);
      for (std::size_t q = 0; q < n; ++q) {
        State t = dfa.next(static_cast<State>(q), a);
        source[a * n + fill[t]++] = static_cast<State>(q);
      }
    }
  }

  std::span<const State> of(Letter a, State t) const {
    const std::size_t* off = &offset[a * (n + 1)];
    return std::span<const State>(source).subspan(a * n + off[t], off[t + 1] - off[t]);
  }
};

}  // namespace

MinimizationResult minimize(const Dfa& dfa) {
  Restriction conn = restrict_to_reachable(dfa);
  const Dfa& a = conn.dfa;
  const std::size_t n = a.state_count();
  const std::size_t k = a.alphabet_size();

  std::vector<bool> accepting(n);
  for (std::size_t q = 0; q < n; ++q) accepting[q] = a.is_final(static_cast<State>(q));

  Partition part(n);
  part.init(accepting);
  Predecessors preds(a);

  std::vector<std::pair<std::size_t, Letter>> work;
  std::vector<char> in_work;
  auto push = [&](std::size_t b, Letter c) {
    if (in_work.size() < (b + 1) * k) in_work.resize((b + 1) * k, 0);
    if (!in_work[b * k + c]) {
      in_work[b * k + c] = 1;
      work.emplace_back(b, c);
    }
  };
  if (part.block_count() == 2) {
    std::size_t smaller = part.size(0) <= part.size(1) ? 0 : 1;
    for (Letter c = 0; c < k; ++c) push(smaller, c);
  }

  std::vector<State> splitter;
  std::vector<std::size_t> touched;
  while (!work.empty()) {
    auto [b, c] = work.back();
    work.pop_back();
    in_work[b * k + c] = 0;
    auto members = part.members(b);
    splitter.assign(members.begin(), members.end());
    for (State t : splitter) {
      for (State s : preds.of(c, t)) {
        if (part.mark(s)) touched.push_back(part.block_of(s));
      }
    }
    for (std::size_t x : touched) {
      auto y = part.split(x);
      if (!y) continue;
      for (Letter d = 0; d < k; ++d) {
        if (in_work.size() > x * k + d && in_work[x * k + d]) {
          push(*y, d);
        } else {
          push(part.size(*y) <= part.size(x) ? *y : x, d);
        }
      }
    }
    touched.clear();
  }

  // Quotient, then canonical BFS renumbering.
  const std::size_t blocks = part.block_count();
  std::vector<State> delta(blocks * k);
  std::vector<State> finals;
  for (std::size_t b = 0; b < blocks; ++b) {
    State rep = part.members(b).front();
    for (Letter c = 0; c < k; ++c) delta[b * k + c] = part.block_of(a.next(rep, c));
    if (a.is_final(rep)) finals.push_back(static_cast<State>(b));
  }
  Dfa quotient(a.alphabet(), blocks, std::move(delta), part.block_of(a.start()), finals);
  Restriction canon = restrict_to_reachable(quotient);

  std::vector<std::optional<State>> class_of(dfa.state_count());
  for (std::size_t q = 0; q < dfa.state_count(); ++q) {
    if (auto c = conn.state_map[q]) class_of[q] = canon.state_map[part.block_of(*c)];
  }
  return {std::move(canon.dfa), std::move(class_of)};
}

std::optional<Word> separating_word(const Dfa& dfa, State p, State q) {
  if (p == q) return std::nullopt;
  const std::size_t n = dfa.state_count();
  auto differs = [&](State u, State v) { return dfa.is_final(u) != dfa.is_final(v); };
  if (differs(p, q)) return Word{};

  // BFS over ordered pairs; first pair found whose finality differs, in
  // BFS order with letters scanned in alphabet order, gives the shortest
  // and lexicographically least separating word.
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  auto id = [n](State u, State v) { return static_cast<std::size_t>(u) * n + v; };
  std::vector<std::size_t> parent(n * n, kUnseen);
  std::vector<Letter> via(n * n, 0);
  std::deque<std::size_t> queue{id(p, q)};
  parent[id(p, q)] = id(p, q);
  while (!queue.empty()) {
    std::size_t cur = queue.front();
    queue.pop_front();
    State u = static_cast<State>(cur / n);
    State v = static_cast<State>(cur % n);
    for (Letter a = 0; a < dfa.alphabet_size(); ++a) {
      State u2 = dfa.next(u, a);
      State v2 = dfa.next(v, a);
      std::size_t nxt = id(u2, v2);
      if (parent[nxt] != kUnseen) continue;
      parent[nxt] = cur;
      via[nxt] = a;
      if (differs(u2, v2)) {
        Word w;
        for (std::size_t s = nxt; s != id(p, q); s = parent[s]) w.push_back(via[s]);
        std::reverse(w.begin(), w.end());
        return w;
      }
      queue.push_back(nxt);
    }
  }
  return std::nullopt;
}

bool is_reduced(const Dfa& dfa) {
  if (restrict_to_reachable(dfa).dfa.state_count() != dfa.state_count()) return false;
  return minimize(dfa).reduced.state_count() == dfa.state_count();
}

}  // namespace gendef
