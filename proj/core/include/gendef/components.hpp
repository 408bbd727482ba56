#pragma once

#include <cstdint>
#include <vector>

#include "gendef/automaton.hpp"

namespace gendef {

using ComponentId = std::uint32_t;

struct ComponentEdge {
  ComponentId from;
  Letter letter;
  ComponentId to;

  friend auto operator<=>(const ComponentEdge&, const ComponentEdge&) = default;
};

/// The component graph Γ(A): strongly connected components of the
/// transition digraph. Ids are topological (edges never go to a lower id);
/// `edges` is the image of δ under `class_of`, sorted, self-loops included.
struct ComponentGraph {
  std::uint32_t component_count = 0;
  std::vector<ComponentId> class_of;
  std::vector<std::vector<State>> members;
  std::vector<ComponentEdge> edges;
  std::vector<bool> is_trivial;
  std::vector<bool> is_sink;
};

/// Linear in states plus transitions.
ComponentGraph component_graph(const Dfa& dfa);

/// Sink components, ascending id. Never empty.
std::vector<ComponentId> sinks(const ComponentGraph& cg);

inline bool same_component(const ComponentGraph& cg, State p, State q) {
  return cg.class_of[p] == cg.class_of[q];
}

}  // namespace gendef
