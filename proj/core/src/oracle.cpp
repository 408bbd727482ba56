#include "gendef/oracle.hpp"

#include <string>

#include "gendef/components.hpp"
#include "gendef/errors.hpp"

namespace gendef {

std::string_view kind_name(ClassKind kind) {
  switch (kind) {
    case ClassKind::Definite: return "definite";
    case ClassKind::ReverseDefinite: return "reverse_definite";
    case ClassKind::GeneralizedDefinite: return "generalized_definite";
  }
  return "?";
}

namespace {

// sep_j as a dense n×n bit matrix, advanced one length at a time.
class Separability {
public:
  explicit Separability(const Dfa& dfa) : dfa_(dfa), n_(dfa.state_count()), sep_(n_ * n_) {
    for (State u = 0; u < n_; ++u) {
      for (State v = 0; v < n_; ++v) sep_[u * n_ + v] = dfa.is_final(u) != dfa.is_final(v);
    }
  }

  bool operator()(State u, State v) const { return sep_[u * n_ + v]; }

  void advance() {
    std::vector<char> next(n_ * n_, 0);
    for (State u = 0; u < n_; ++u) {
      for (State v = 0; v < n_; ++v) {
        for (Letter a = 0; a < dfa_.alphabet_size(); ++a) {
          if (sep_[dfa_.next(u, a) * n_ + dfa_.next(v, a)]) {
            next[u * n_ + v] = 1;
            break;
          }
        }
      }
    }
    sep_.swap(next);
  }

private:
  const Dfa& dfa_;
  std::size_t n_;
  std::vector<char> sep_;
};

// States reached from the start by words of length exactly j.
class Layer {
public:
  explicit Layer(const Dfa& dfa) : dfa_(dfa), in_(dfa.state_count(), false) { in_[dfa.start()] = true; }

  const std::vector<bool>& states() const { return in_; }

  void advance() {
    std::vector<bool> next(in_.size(), false);
    for (State q = 0; q < in_.size(); ++q) {
      if (!in_[q]) continue;
      for (Letter a = 0; a < dfa_.alphabet_size(); ++a) next[dfa_.next(q, a)] = true;
    }
    in_.swap(next);
  }

private:
  const Dfa& dfa_;
  std::vector<bool> in_;
};

std::vector<std::vector<State>> all_reachable_sets(const Dfa& dfa) {
  std::vector<std::vector<State>> out(dfa.state_count());
  for (State q = 0; q < dfa.state_count(); ++q) out[q] = reachable_set(dfa, q);
  return out;
}

// One check per kind given the current layer and sep_k.
class KChecker {
public:
  KChecker(const Dfa& dfa, ClassKind kind)
      : dfa_(dfa), kind_(kind), reach_(all_reachable_sets(dfa)), sep_(dfa), layer_(dfa) {}

  bool holds() const {
    switch (kind_) {
      case ClassKind::GeneralizedDefinite:
        for (State s = 0; s < dfa_.state_count(); ++s) {
          if (!layer_.states()[s]) continue;
          for (State p : reach_[s]) {
            if (sep_(s, p)) return false;
          }
        }
        return true;
      case ClassKind::Definite:
        for (State p : reach_[dfa_.start()]) {
          if (sep_(p, dfa_.start())) return false;
        }
        return true;
      case ClassKind::ReverseDefinite:
        for (State s = 0; s < dfa_.state_count(); ++s) {
          if (!layer_.states()[s]) continue;
          for (State p : reach_[s]) {
            if (dfa_.is_final(p) != dfa_.is_final(s)) return false;
          }
        }
        return true;
    }
    return false;
  }

  void advance() {
    if (kind_ != ClassKind::ReverseDefinite) sep_.advance();
    if (kind_ != ClassKind::Definite) layer_.advance();
  }

private:
  const Dfa& dfa_;
  ClassKind kind_;
  std::vector<std::vector<State>> reach_;
  Separability sep_;
  Layer layer_;
};

}  // namespace

bool is_k(const Dfa& dfa, ClassKind kind, std::size_t k) {
  KChecker check(dfa, kind);
  for (std::size_t j = 0; j < k; ++j) check.advance();
  return check.holds();
}

bool is_k_generalized_definite(const Dfa& dfa, std::size_t k) {
  return is_k(dfa, ClassKind::GeneralizedDefinite, k);
}

bool is_k_definite(const Dfa& dfa, std::size_t k) { return is_k(dfa, ClassKind::Definite, k); }

bool is_k_reverse_definite(const Dfa& dfa, std::size_t k) {
  return is_k(dfa, ClassKind::ReverseDefinite, k);
}

IndexReport definiteness_index(const Dfa& dfa, ClassKind kind, std::size_t max_k) {
  IndexReport report{kind, std::nullopt, max_k};
  KChecker check(dfa, kind);
  for (std::size_t k = 0; k <= max_k; ++k) {
    if (k > 0) check.advance();
    if (check.holds()) {
      report.minimal_k = k;
      break;
    }
  }
  return report;
}

bool is_finite_language(const Dfa& dfa) {
  const std::size_t n = dfa.state_count();
  std::vector<bool> reachable(n, false);
  for (State q : reachable_set(dfa, dfa.start())) reachable[q] = true;

  std::vector<std::vector<State>> preds(n);
  for (State q = 0; q < n; ++q) {
    for (Letter a = 0; a < dfa.alphabet_size(); ++a) preds[dfa.next(q, a)].push_back(q);
  }
  std::vector<bool> coreachable(n, false);
  std::vector<State> stack;
  for (State q = 0; q < n; ++q) {
    if (dfa.is_final(q)) {
      coreachable[q] = true;
      stack.push_back(q);
    }
  }
  while (!stack.empty()) {
    State q = stack.back();
    stack.pop_back();
    for (State p : preds[q]) {
      if (!coreachable[p]) {
        coreachable[p] = true;
        stack.push_back(p);
      }
    }
  }

  auto cg = component_graph(dfa);
  for (State q = 0; q < n; ++q) {
    if (reachable[q] && coreachable[q] && !cg.is_trivial[cg.class_of[q]]) return false;
  }
  return true;
}

namespace {

std::uint64_t checked_pow(std::uint64_t base, std::size_t exp, std::uint64_t cap) {
  std::uint64_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (__builtin_mul_overflow(r, base, &r) || r > cap) return cap + 1;
  }
  return r;
}

// All words of length exactly `len`, in lexicographic order.
std::vector<Word> words_of_length(std::size_t alphabet, std::size_t len) {
  std::vector<Word> out{Word{}};
  for (std::size_t i = 0; i < len; ++i) {
    std::vector<Word> next;
    next.reserve(out.size() * alphabet);
    for (const auto& w : out) {
      for (Letter a = 0; a < alphabet; ++a) {
        next.push_back(w);
        next.back().push_back(a);
      }
    }
    out.swap(next);
  }
  return out;
}

std::vector<Word> words_up_to(std::size_t alphabet, std::size_t max_len) {
  std::vector<Word> out;
  for (std::size_t len = 0; len <= max_len; ++len) {
    auto layer = words_of_length(alphabet, len);
    out.insert(out.end(), layer.begin(), layer.end());
  }
  return out;
}

}  // namespace

bool word_level_check(const Dfa& dfa, ClassKind kind, std::size_t k, std::size_t max_len,
                      std::uint64_t budget) {
  const std::size_t s = dfa.alphabet_size();
  std::uint64_t fixed = checked_pow(s, kind == ClassKind::GeneralizedDefinite ? 2 * k : k, budget);
  std::uint64_t free_words = 0;
  for (std::size_t len = 0; len <= max_len; ++len) {
    free_words += checked_pow(s, len, budget);
    if (free_words > budget) break;
  }
  std::uint64_t total;
  if (free_words > budget || fixed > budget || __builtin_mul_overflow(fixed, free_words, &total) ||
      total > budget) {
    throw ResourceError("word_level_check: enumeration exceeds budget of " +
                        std::to_string(budget) + " combinations");
  }

  const auto fixed_words = words_of_length(s, k);
  const auto free = words_up_to(s, max_len);
  switch (kind) {
    case ClassKind::GeneralizedDefinite:
      for (const auto& x1 : fixed_words) {
        for (const auto& x2 : fixed_words) {
          const bool base = accepts(dfa, concat({x1, x2}));
          for (const auto& y : free) {
            if (accepts(dfa, concat({x1, y, x2})) != base) return false;
          }
        }
      }
      return true;
    case ClassKind::Definite:
      for (const auto& y : fixed_words) {
        const bool base = accepts(dfa, y);
        for (const auto& x : free) {
          if (accepts(dfa, concat({x, y})) != base) return false;
        }
      }
      return true;
    case ClassKind::ReverseDefinite:
      for (const auto& x : fixed_words) {
        const bool base = accepts(dfa, x);
        for (const auto& y : free) {
          if (accepts(dfa, concat({x, y})) != base) return false;
        }
      }
      return true;
  }
  return false;
}

std::vector<std::string> default_alphabet(std::size_t size) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < size; ++i) {
    out.push_back(i < 26 ? std::string(1, static_cast<char>('a' + i)) : "l" + std::to_string(i));
  }
  return out;
}

DfaEnumeration::DfaEnumeration(std::size_t states, std::size_t alphabet_size, std::uint64_t budget)
    : n_(states), k_(alphabet_size) {
  if (states == 0 || alphabet_size == 0) {
    throw PreconditionError("DfaEnumeration: states and alphabet size must be positive");
  }
  std::uint64_t tables = checked_pow(states, states * alphabet_size, budget);
  std::uint64_t finals = checked_pow(2, states, budget);
  if (tables > budget || finals > budget || __builtin_mul_overflow(tables, finals, &count_) ||
      count_ > budget) {
    throw ResourceError("DfaEnumeration: more than " + std::to_string(budget) + " automata");
  }
}

Dfa DfaEnumeration::at(std::uint64_t index) const {
  std::uint64_t final_bits = index % (std::uint64_t{1} << n_);
  std::uint64_t table = index >> n_;
  std::vector<State> delta(n_ * k_);
  for (auto& entry : delta) {
    entry = static_cast<State>(table % n_);
    table /= n_;
  }
  std::vector<State> finals;
  for (State q = 0; q < n_; ++q) {
    if (final_bits & (std::uint64_t{1} << q)) finals.push_back(q);
  }
  return Dfa(default_alphabet(k_), n_, std::move(delta), 0, finals);
}

void DfaEnumeration::for_each(const std::function<void(const Dfa&)>& visit) const {
  for (std::uint64_t i = 0; i < count_; ++i) visit(at(i));
}

}  // namespace gendef
