#include "gendef/constructions.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "gendef/components.hpp"
#include "gendef/errors.hpp"
#include "gendef/minimization.hpp"
#include "gendef/patterns.hpp"

namespace gendef {

Dag::Dag(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges)
    : n_(vertex_count), edges_(std::move(edges)), out_(vertex_count) {
  if (n_ < 1) throw InputError("DAG needs at least one vertex");
  std::sort(edges_.begin(), edges_.end());
  for (std::size_t e = 0; e < edges_.size(); ++e) {
    auto [i, j] = edges_[e];
    if (i < 1 || j > n_) {
      throw InputError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                       ") has a vertex outside 1.." + std::to_string(n_));
    }
    if (i >= j) {
      throw InputError("edge (" + std::to_string(i) + "," + std::to_string(j) +
                       ") does not satisfy i < j");
    }
    if (e > 0 && edges_[e - 1] == edges_[e]) {
      throw InputError("duplicate edge (" + std::to_string(i) + "," + std::to_string(j) + ")");
    }
    out_[i - 1].push_back(j);
  }
}

bool dag_reachable(const Dag& g, std::size_t from, std::size_t to) {
  std::vector<bool> seen(g.vertex_count() + 1, false);
  std::vector<std::size_t> stack{from};
  seen[from] = true;
  while (!stack.empty()) {
    std::size_t v = stack.back();
    stack.pop_back();
    if (v == to) return true;
    for (std::size_t w : g.neighbours(v)) {
      if (!seen[w]) {
        seen[w] = true;
        stack.push_back(w);
      }
    }
  }
  return false;
}

Dfa reduce_dag_reach(const Dag& g) {
  const std::size_t n = g.vertex_count();
  if (n < 2) throw PreconditionError("reduce_dag_reach: need at least two vertices");
  std::vector<std::string> alphabet;
  for (std::size_t j = 1; j <= n; ++j) alphabet.push_back(std::to_string(j));

  // 1-based in the case analysis, shifted by one when stored.
  std::vector<State> delta((n + 1) * n);
  for (std::size_t i = 1; i <= n + 1; ++i) {
    const std::size_t degree = i <= n ? g.neighbours(i).size() : 0;
    for (std::size_t j = 1; j <= n; ++j) {
      std::size_t target;
      if (i == n + 1 || j == n || (i < n && degree < j)) {
        target = n + 1;
      } else if (i == n && j < n) {
        target = 1;
      } else {
        target = g.neighbours(i)[j - 1];
      }
      delta[(i - 1) * n + (j - 1)] = static_cast<State>(target - 1);
    }
  }
  const State accept = static_cast<State>(n);
  return Dfa(std::move(alphabet), n + 1, std::move(delta), 0, std::span<const State>(&accept, 1));
}

SinkPartition sink_partition(const Dfa& dfa) {
  if (!is_reduced(dfa)) throw PreconditionError("sink_partition: automaton is not reduced");
  if (admits_pg(dfa)) throw PreconditionError("sink_partition: automaton admits Pg");
  auto cg = component_graph(dfa);
  SinkPartition sp;
  // Component ids are topological, so sorting trivial states by component
  // id linearly extends reachability on Q0.
  for (ComponentId c = 0; c < cg.component_count; ++c) {
    if (cg.is_trivial[c]) {
      sp.q0_states.push_back(cg.members[c].front());
    } else {
      sp.sinks.push_back(cg.members[c]);
    }
  }
  std::sort(sp.sinks.begin(), sp.sinks.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a.front() < b.front();
  });
  return sp;
}

namespace {

std::size_t checked_product(std::size_t a, std::size_t b, std::size_t limit) {
  std::size_t r;
  if (__builtin_mul_overflow(a, b, &r) || r > limit) {
    throw ResourceError("definitize: more than " + std::to_string(limit) + " letters");
  }
  return r;
}

}  // namespace

Dfa definitize(const Dfa& dfa, std::size_t limit) {
  const SinkPartition sp = sink_partition(dfa);
  const auto& top = sp.sinks.back();
  if (top.size() == 1) {
    throw PreconditionError(
        "definitize: largest sink is a singleton (reverse definite case, not constructed)");
  }
  const std::size_t n = dfa.state_count();

  // Canonical renumbering: Q0 in topological order, then the sinks.
  std::vector<State> canonical;
  canonical.insert(canonical.end(), sp.q0_states.begin(), sp.q0_states.end());
  for (const auto& s : sp.sinks) canonical.insert(canonical.end(), s.begin(), s.end());
  const std::size_t k = sp.q0_states.size();

  // T_c: distinct restrictions of T(A) to the largest sink.
  const auto sg = enumerate_semigroup(dfa, limit);
  std::set<std::vector<State>> top_maps;
  for (const auto& t : sg.elements) {
    std::vector<State> image;
    for (State q : top) image.push_back(t[q]);
    top_maps.insert(std::move(image));
  }

  // One choice slot per state outside Q_c; the last slot picks f_c.
  struct Slot {
    State state;
    std::vector<State> options;
  };
  std::vector<Slot> slots;
  std::size_t letter_count = 1;
  for (std::size_t i = 0; i < k; ++i) {
    Slot s{canonical[i], {}};
    for (std::size_t j = i + 1; j < n; ++j) s.options.push_back(canonical[j]);
    letter_count = checked_product(letter_count, s.options.size(), limit);
    slots.push_back(std::move(s));
  }
  for (std::size_t c = 0; c + 1 < sp.sinks.size(); ++c) {
    for (State q : sp.sinks[c]) {
      slots.push_back({q, top});
      letter_count = checked_product(letter_count, top.size(), limit);
    }
  }
  const std::vector<std::vector<State>> top_list(top_maps.begin(), top_maps.end());
  letter_count = checked_product(letter_count, top_list.size(), limit);

  std::vector<Transformation> letters;
  letters.reserve(letter_count);
  std::vector<std::size_t> digit(slots.size() + 1, 0);
  for (std::size_t count = 0; count < letter_count; ++count) {
    std::vector<State> image(n);
    for (std::size_t s = 0; s < slots.size(); ++s) image[slots[s].state] = slots[s].options[digit[s]];
    const auto& fc = top_list[digit[slots.size()]];
    for (std::size_t i = 0; i < top.size(); ++i) image[top[i]] = fc[i];
    letters.emplace_back(std::move(image));
    // Mixed-radix increment, last digit = f_c.
    for (std::size_t s = 0; s <= slots.size(); ++s) {
      std::size_t radix = s < slots.size() ? slots[s].options.size() : top_list.size();
      if (++digit[s] < radix) break;
      digit[s] = 0;
    }
  }

  std::map<std::string, const Transformation*> named;
  for (const auto& t : letters) named.emplace(image_list_name(t), &t);
  std::vector<std::string> alphabet;
  std::vector<State> delta(n * named.size());
  std::size_t a = 0;
  for (const auto& [name, t] : named) {
    alphabet.push_back(name);
    for (State q = 0; q < n; ++q) delta[q * named.size() + a] = (*t)[q];
    ++a;
  }
  const auto finals = dfa.finals();
  Dfa b(std::move(alphabet), n, std::move(delta), dfa.start(), finals);

  if (!is_reduced(b)) throw InternalError("definitize: result is not reduced");
  if (admits_pd(b)) throw InternalError("definitize: result admits Pd");
  if (enumerate_semigroup(b, limit).size() < sg.size()) {
    throw InternalError("definitize: result has a smaller semigroup");
  }
  return b;
}

}  // namespace gendef
