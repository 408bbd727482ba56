#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace gendef {

inline constexpr std::uint32_t kNoVertex = std::numeric_limits<std::uint32_t>::max();

struct SccDecomposition {
  /// Component of each vertex. Ids are a topological order of the quotient
  /// DAG: every edge goes from a lower id to a higher or equal one.
  std::vector<std::uint32_t> component_of;
  std::uint32_t count = 0;
  /// Per component: more than one vertex, or a self-loop.
  std::vector<bool> nontrivial;
};

/// Strongly connected components of an implicit graph in which every vertex
/// has `degree` out-edge slots; `next(v, i)` returns the target of slot i or
/// kNoVertex when the slot is absent.
///
/// Iterative variant of Pearce's space-efficient Tarjan algorithm: a single
/// rindex word per vertex doubles as the component id once the vertex is
/// done, so memory stays at one 32-bit word plus one bit per vertex on top
/// of the DFS stacks.
template <class Next>
SccDecomposition strongly_connected_components(std::size_t vertex_count, std::size_t degree,
                                               Next&& next) {
  using V = std::uint32_t;
  const V n = static_cast<V>(vertex_count);
  std::vector<V> rindex(n, 0);
  std::vector<bool> root(n, false);
  std::vector<V> done_stack;
  struct Frame {
    V v;
    std::uint32_t slot;
  };
  std::vector<Frame> frames;

  V index = 1;
  V c = n - 1;  // next component id, counting down

  auto begin = [&](V v) {
    rindex[v] = index++;
    root[v] = true;
    frames.push_back({v, 0});
  };
  auto finish = [&](V v) {
    if (!root[v]) {
      done_stack.push_back(v);
      return;
    }
    --index;
    while (!done_stack.empty() && rindex[v] <= rindex[done_stack.back()]) {
      V w = done_stack.back();
      done_stack.pop_back();
      rindex[w] = c;
      --index;
    }
    rindex[v] = c;
    --c;
  };

  for (V r = 0; r < n; ++r) {
    if (rindex[r] != 0) continue;
    begin(r);
    while (!frames.empty()) {
      Frame& f = frames.back();
      V v = f.v;
      if (f.slot < degree) {
        V w = next(v, f.slot++);
        if (w == kNoVertex) continue;
        if (rindex[w] == 0) {
          begin(w);
          continue;
        }
        if (rindex[w] < rindex[v]) {
          rindex[v] = rindex[w];
          root[v] = false;
        }
      } else {
        frames.pop_back();
        finish(v);
        if (!frames.empty()) {
          V u = frames.back().v;
          if (rindex[v] < rindex[u]) {
            rindex[u] = rindex[v];
            root[u] = false;
          }
        }
      }
    }
  }

  SccDecomposition out;
  out.count = n == 0 ? 0 : (n - 1) - c;
  const V base = c + 1;
  std::vector<std::uint32_t> size(out.count, 0);
  for (V v = 0; v < n; ++v) {
    rindex[v] -= base;
    ++size[rindex[v]];
  }
  out.nontrivial.assign(out.count, false);
  for (V v = 0; v < n; ++v) {
    if (size[rindex[v]] > 1) {
      out.nontrivial[rindex[v]] = true;
      continue;
    }
    for (std::size_t i = 0; i < degree; ++i) {
      if (next(v, i) == v) {
        out.nontrivial[rindex[v]] = true;
        break;
      }
    }
  }
  out.component_of = std::move(rindex);
  return out;
}

}  // namespace gendef
