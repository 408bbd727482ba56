#include "gendef/patterns.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "gendef/components.hpp"
#include "gendef/errors.hpp"
#include "gendef/minimization.hpp"
#include "gendef/scc.hpp"

namespace gendef {

std::string_view pattern_name(PatternId id) {
  switch (id) {
    case PatternId::Pf: return "Pf";
    case PatternId::Pd: return "Pd";
    case PatternId::Pr: return "Pr";
    case PatternId::Pg: return "Pg";
  }
  return "?";
}

namespace {

// Shortest, then lexicographically least, nonempty word leading from
// `from` to a vertex accepted by `is_target` in an implicit deterministic
// graph with `degree` letters.
template <class Next, class Target>
std::optional<Word> bfs_word(std::size_t vertex_count, std::size_t degree, Next&& next,
                             std::uint32_t from, Target&& is_target) {
  constexpr std::uint32_t kUnseen = std::numeric_limits<std::uint32_t>::max();
  std::vector<std::uint32_t> parent(vertex_count, kUnseen);
  std::vector<std::uint32_t> queue{from};
  parent[from] = from;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const std::uint32_t v = queue[head];
    for (Letter a = 0; a < degree; ++a) {
      std::uint32_t t = next(v, a);
      if (is_target(t)) {
        // The letter on each tree edge is the least one leading from the
        // parent to the child, which is the one the search recorded.
        Word w{a};
        for (std::uint32_t s = v; s != from; s = parent[s]) {
          Letter b = 0;
          while (next(parent[s], b) != s) ++b;
          w.push_back(b);
        }
        std::reverse(w.begin(), w.end());
        return w;
      }
      if (parent[t] == kUnseen) {
        parent[t] = v;
        queue.push_back(t);
      }
    }
  }
  return std::nullopt;
}

Word cycle_word(const Dfa& dfa, State p) {
  auto w = shortest_path_word(dfa, p, p, /*nonempty=*/true);
  if (!w) throw InternalError("state in a nontrivial component has no cycle word");
  return *w;
}

// Shortest nonempty x with p·x = p and q·x = q, by BFS over ordered pairs.
Word pair_cycle_word(const Dfa& dfa, State p, State q) {
  const std::size_t n = dfa.state_count();
  const std::uint32_t start = static_cast<std::uint32_t>(p * n + q);
  auto w = bfs_word(
      n * n, dfa.alphabet_size(),
      [&](std::uint32_t v, Letter a) {
        return static_cast<std::uint32_t>(dfa.next(static_cast<State>(v / n), a) * n +
                                          dfa.next(static_cast<State>(v % n), a));
      },
      start, [&](std::uint32_t v) { return v == start; });
  if (!w) throw InternalError("pair in a nontrivial product component has no cycle word");
  return *w;
}

// Components of A × A restricted to off-diagonal pairs. Pairs are folded to
// (min, max) and the diagonal is dropped: it is closed under every letter,
// so no off-diagonal cycle passes through it, and {p,q}·x = {p,q} implies
// (p,q)·x² = (p,q). A canonical pair is therefore in a nontrivial component
// here iff (p,q) is in a nontrivial component of A × A.
class PairScan {
public:
  explicit PairScan(const Dfa& dfa) : n_(dfa.state_count()) {
    const std::size_t pairs = n_ * (n_ - 1) / 2;
    if (pairs >= std::numeric_limits<std::uint32_t>::max()) {
      throw ResourceError("product automaton too large (" + std::to_string(n_) + " states)");
    }
    scc_ = strongly_connected_components(pairs, dfa.alphabet_size(),
                                         [&](std::uint32_t v, std::size_t a) -> std::uint32_t {
                                           auto [p, q] = decode(v);
                                           State p2 = dfa.next(p, static_cast<Letter>(a));
                                           State q2 = dfa.next(q, static_cast<Letter>(a));
                                           if (p2 == q2) return kNoVertex;
                                           return encode(p2, q2);
                                         });
  }

  bool on_cycle(State p, State q) const {
    if (p == q) return false;
    return scc_.nontrivial[scc_.component_of[encode(p, q)]];
  }

  // Smallest canonical pair (p < q) on a cycle and satisfying `keep`.
  template <class Keep>
  std::optional<std::pair<State, State>> first(Keep&& keep) const {
    for (State p = 0; p < n_; ++p) {
      for (State q = p + 1; q < n_; ++q) {
        if (on_cycle(p, q) && keep(p, q)) return std::pair{p, q};
      }
    }
    return std::nullopt;
  }

private:
  // Unordered pairs {p, q}, p < q, packed row by row of the larger state:
  // id = q(q-1)/2 + p.
  static std::uint32_t encode(State p, State q) {
    if (p > q) std::swap(p, q);
    return static_cast<std::uint32_t>(std::uint64_t{q} * (q - 1) / 2 + p);
  }
  static std::pair<State, State> decode(std::uint32_t id) {
    auto q = static_cast<State>((1.0 + std::sqrt(1.0 + 8.0 * id)) / 2.0);
    while (std::uint64_t{q} * (q - 1) / 2 > id) --q;
    while (std::uint64_t{q + 1} * q / 2 <= id) ++q;
    return {static_cast<State>(id - std::uint64_t{q} * (q - 1) / 2), q};
  }

  std::size_t n_;
  SccDecomposition scc_;
};

struct Analysis {
  const Dfa& dfa;
  ComponentGraph cg;
  std::optional<PairScan> pairs;

  explicit Analysis(const Dfa& a) : dfa(a), cg(component_graph(a)) {}

  const PairScan& pair_scan() {
    if (!pairs) pairs.emplace(dfa);
    return *pairs;
  }
  bool on_cycle(State q) const { return !cg.is_trivial[cg.class_of[q]]; }
};

std::optional<PatternWitness> find_pf(Analysis& an) {
  const Dfa& dfa = an.dfa;
  std::optional<State> first;
  for (State q = 0; q < dfa.state_count(); ++q) {
    if (!an.on_cycle(q)) continue;
    if (!first) {
      first = q;
      continue;
    }
    return PatternWitness{PatternId::Pf, *first, q, cycle_word(dfa, *first), cycle_word(dfa, q)};
  }
  return std::nullopt;
}

std::optional<PatternWitness> find_pd(Analysis& an) {
  auto pair = an.pair_scan().first([](State, State) { return true; });
  if (!pair) return std::nullopt;
  auto [p, q] = *pair;
  return PatternWitness{PatternId::Pd, p, q, pair_cycle_word(an.dfa, p, q), std::nullopt};
}

std::optional<PatternWitness> find_pr(Analysis& an) {
  const Dfa& dfa = an.dfa;
  for (State p = 0; p < dfa.state_count(); ++p) {
    if (!an.on_cycle(p)) continue;
    ComponentId c = an.cg.class_of[p];
    if (an.cg.is_sink[c] && an.cg.members[c].size() == 1) continue;  // reaches nothing else
    for (State q : reachable_set(dfa, p)) {
      if (q == p) continue;
      auto y = shortest_path_word(dfa, p, q, /*nonempty=*/true);
      return PatternWitness{PatternId::Pr, p, q, cycle_word(dfa, p), std::move(*y)};
    }
  }
  return std::nullopt;
}

std::optional<PatternWitness> find_pg_in_sink(Analysis& an) {
  const auto& cg = an.cg;
  auto pair = an.pair_scan().first([&](State p, State q) {
    return cg.class_of[p] == cg.class_of[q] && cg.is_sink[cg.class_of[p]];
  });
  if (!pair) return std::nullopt;
  auto [p, q] = *pair;
  auto y = shortest_path_word(an.dfa, p, q, /*nonempty=*/true);
  return PatternWitness{PatternId::Pg, p, q, pair_cycle_word(an.dfa, p, q), std::move(*y)};
}

std::optional<PatternWitness> find_pg(Analysis& an) {
  const Dfa& dfa = an.dfa;
  const auto& cg = an.cg;
  // Step 3: a nontrivial component that is not a sink.
  std::optional<State> looping;
  for (State p = 0; p < dfa.state_count() && !looping; ++p) {
    ComponentId c = cg.class_of[p];
    if (!cg.is_trivial[c] && !cg.is_sink[c]) looping = p;
  }
  if (looping) {
    const State p = *looping;
    Word u = cycle_word(dfa, p);
    // Downstream sink C' with the smallest id; x = u^|C'| is constant on C'
    // whenever u is non-permutational there.
    std::optional<ComponentId> sink;
    for (State r : reachable_set(dfa, p)) {
      ComponentId c = cg.class_of[r];
      if (cg.is_sink[c] && (!sink || c < *sink)) sink = c;
    }
    const auto& members = cg.members[*sink];
    Word x = repeat(u, members.size());
    for (State q : members) {
      if (act(dfa, q, x) == q) {
        auto y = shortest_path_word(dfa, p, q, /*nonempty=*/true);
        return PatternWitness{PatternId::Pg, p, q, std::move(x), std::move(*y)};
      }
    }
    // u^|C'| has no fixed point on C', so u permutes part of that sink and
    // the sink itself carries a witness.
    auto w = find_pg_in_sink(an);
    if (!w) throw InternalError("permutational sink without a product cycle");
    return w;
  }
  // Step 5.
  return find_pg_in_sink(an);
}

}  // namespace

std::optional<PatternWitness> admits_pf(const Dfa& dfa) {
  Analysis an(dfa);
  return find_pf(an);
}

std::optional<PatternWitness> admits_pd(const Dfa& dfa) {
  Analysis an(dfa);
  return find_pd(an);
}

std::optional<PatternWitness> admits_pr(const Dfa& dfa) {
  Analysis an(dfa);
  return find_pr(an);
}

std::optional<PatternWitness> admits_pg(const Dfa& dfa) {
  Analysis an(dfa);
  return find_pg(an);
}

ClassReport classify(const Dfa& dfa) {
  ClassReport report{minimize(dfa).reduced, false, false, false, false, false, {}};
  Analysis an(report.reduced);
  auto& w = report.witnesses;
  w[static_cast<std::size_t>(PatternId::Pf)] = find_pf(an);
  w[static_cast<std::size_t>(PatternId::Pd)] = find_pd(an);
  w[static_cast<std::size_t>(PatternId::Pr)] = find_pr(an);
  w[static_cast<std::size_t>(PatternId::Pg)] = find_pg(an);

  report.is_definite = !report.witness(PatternId::Pd);
  report.is_reverse_definite = !report.witness(PatternId::Pr);
  report.is_generalized_definite = !report.witness(PatternId::Pg);
  if (!report.witness(PatternId::Pf)) {
    // The only state on a cycle is the unique sink, a singleton.
    for (State q = 0; q < report.reduced.state_count(); ++q) {
      if (an.on_cycle(q)) {
        report.is_cofinite = report.reduced.is_final(q);
        report.is_finite = !report.is_cofinite;
        break;
      }
    }
  }
  return report;
}

namespace {

void require_reduced(const Dfa& dfa, const char* what) {
  if (!is_reduced(dfa)) throw PreconditionError(std::string(what) + ": automaton is not reduced");
}

}  // namespace

bool check_condition_ii(const Dfa& dfa, std::size_t limit) {
  require_reduced(dfa, "check_condition_ii");
  auto cg = component_graph(dfa);
  for (ComponentId c = 0; c < cg.component_count; ++c) {
    if (!cg.is_trivial[c] && !cg.is_sink[c]) return false;
  }
  auto sg = enumerate_semigroup(dfa, limit);
  for (ComponentId c : sinks(cg)) {
    for (const auto& t : sg.elements) {
      if (!is_non_permutational_on(t, cg.members[c])) return false;
    }
  }
  return true;
}

bool check_definite_condition_iii(const Dfa& dfa, std::size_t limit) {
  auto sg = enumerate_semigroup(dfa, limit);
  return std::all_of(sg.elements.begin(), sg.elements.end(),
                     [](const Transformation& t) { return is_non_permutational(t); });
}

bool check_definite_condition_iv(const Dfa& dfa, std::size_t limit) {
  auto cg = component_graph(dfa);
  auto sink_ids = sinks(cg);
  if (sink_ids.size() != 1) return false;
  for (ComponentId c = 0; c < cg.component_count; ++c) {
    if (c != sink_ids[0] && !cg.is_trivial[c]) return false;
  }
  auto sg = enumerate_semigroup(dfa, limit);
  const auto& sink = cg.members[sink_ids[0]];
  return std::all_of(sg.elements.begin(), sg.elements.end(),
                     [&](const Transformation& t) { return is_non_permutational_on(t, sink); });
}

bool validate_witness(const Dfa& dfa, const PatternWitness& w) {
  const std::size_t n = dfa.state_count();
  auto valid_word = [&](const Word& word) {
    return !word.empty() && std::all_of(word.begin(), word.end(), [&](Letter a) {
      return a < dfa.alphabet_size();
    });
  };
  if (w.p >= n || w.q >= n || w.p == w.q || !valid_word(w.x)) return false;
  const bool needs_y = w.pattern != PatternId::Pd;
  if (needs_y != w.y.has_value()) return false;
  if (w.y && !valid_word(*w.y)) return false;

  const bool p_loops = act(dfa, w.p, w.x) == w.p;
  switch (w.pattern) {
    case PatternId::Pf: return p_loops && act(dfa, w.q, *w.y) == w.q;
    case PatternId::Pd: return p_loops && act(dfa, w.q, w.x) == w.q;
    case PatternId::Pr: return p_loops && act(dfa, w.p, *w.y) == w.q;
    case PatternId::Pg:
      return p_loops && act(dfa, w.q, w.x) == w.q && act(dfa, w.p, *w.y) == w.q;
  }
  return false;
}

std::pair<Word, Word> non_k_gd_counterexample(const Dfa& dfa, const PatternWitness& w,
                                              std::size_t k) {
  if (k < 1) throw PreconditionError("non_k_gd_counterexample: k must be at least 1");
  if (w.pattern != PatternId::Pg || !validate_witness(dfa, w)) {
    throw PreconditionError("non_k_gd_counterexample: not a valid Pg witness");
  }
  auto u = shortest_path_word(dfa, dfa.start(), w.p);
  if (!u) throw PreconditionError("non_k_gd_counterexample: p is unreachable");
  auto s = separating_word(dfa, w.p, w.q);
  if (!s) throw PreconditionError("non_k_gd_counterexample: p and q are equivalent");
  Word xk = repeat(w.x, k);
  return {concat({*u, xk, xk, *s}), concat({*u, xk, *w.y, xk, *s})};
}

ProductAutomaton product_automaton(const Dfa& dfa) {
  const std::size_t n = dfa.state_count();
  const std::size_t k = dfa.alphabet_size();
  std::vector<State> delta(n * n * k);
  std::vector<State> finals;
  for (State p = 0; p < n; ++p) {
    for (State q = 0; q < n; ++q) {
      const std::size_t id = p * n + q;
      for (Letter a = 0; a < k; ++a) {
        delta[id * k + a] = static_cast<State>(dfa.next(p, a) * n + dfa.next(q, a));
      }
      if (dfa.is_final(p) != dfa.is_final(q)) finals.push_back(static_cast<State>(id));
    }
  }
  const State start = static_cast<State>(dfa.start() * n + dfa.start());
  return {Dfa(dfa.alphabet(), n * n, std::move(delta), start, finals), n};
}

}  // namespace gendef
