#include "gendef/components.hpp"

#include <algorithm>

#include "gendef/scc.hpp"

namespace gendef {

ComponentGraph component_graph(const Dfa& dfa) {
  const std::size_t n = dfa.state_count();
  const std::size_t k = dfa.alphabet_size();
  auto scc = strongly_connected_components(
      n, k, [&](std::uint32_t v, std::size_t a) { return dfa.next(v, static_cast<Letter>(a)); });

  ComponentGraph cg;
  cg.component_count = scc.count;
  cg.class_of = std::move(scc.component_of);
  cg.members.resize(cg.component_count);
  for (std::size_t q = 0; q < n; ++q) cg.members[cg.class_of[q]].push_back(static_cast<State>(q));

  cg.is_trivial.resize(cg.component_count);
  for (ComponentId c = 0; c < cg.component_count; ++c) cg.is_trivial[c] = !scc.nontrivial[c];

  cg.is_sink.assign(cg.component_count, true);
  cg.edges.reserve(n * k);
  for (std::size_t q = 0; q < n; ++q) {
    ComponentId from = cg.class_of[q];
    for (Letter a = 0; a < k; ++a) {
      ComponentId to = cg.class_of[dfa.next(static_cast<State>(q), a)];
      if (to != from) cg.is_sink[from] = false;
      cg.edges.push_back({from, a, to});
    }
  }
  std::sort(cg.edges.begin(), cg.edges.end());
  cg.edges.erase(std::unique(cg.edges.begin(), cg.edges.end()), cg.edges.end());
  return cg;
}

std::vector<ComponentId> sinks(const ComponentGraph& cg) {
  std::vector<ComponentId> out;
  for (ComponentId c = 0; c < cg.component_count; ++c) {
    if (cg.is_sink[c]) out.push_back(c);
  }
  return out;
}

}  // namespace gendef
