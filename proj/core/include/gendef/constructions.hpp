#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "gendef/automaton.hpp"
#include "gendef/semigroup.hpp"

namespace gendef {

/// A DAG on vertices 1..n whose edges all go from a smaller to a larger
/// vertex. Edges are kept sorted and duplicate-free.
class Dag {
public:
  /// Throws InputError on n < 1, an edge with i >= j, a vertex outside
  /// 1..n or a duplicate edge.
  Dag(std::size_t vertex_count, std::vector<std::pair<std::size_t, std::size_t>> edges);

  std::size_t vertex_count() const noexcept { return n_; }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const noexcept { return edges_; }
  /// Sorted out-neighbours of vertex i (1-based).
  const std::vector<std::size_t>& neighbours(std::size_t i) const { return out_[i - 1]; }

private:
  std::size_t n_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::vector<std::size_t>> out_;
};

/// BFS reachability between 1-based vertices.
bool dag_reachable(const Dag& g, std::size_t from, std::size_t to);

/// Automaton for the DAG-reachability reduction. Vertex/state i (1-based)
/// becomes state i-1; letter j is named "j" and has index j-1. State n+1
/// (index n) is the only final state. With d(i) the out-degree of i and
/// n(i, j) its j-th smallest neighbour:
///   i·j = n+1     if i = n+1, j = n, or (i < n and d(i) < j)
///   i·j = 1       if i = n and j < n
///   i·j = n(i,j)  otherwise.
/// The language is generalized definite iff n is unreachable from 1.
/// Requires n >= 2.
Dfa reduce_dag_reach(const Dag& g);

/// Q = Q0 ⊎ Q1 ⊎ … ⊎ Qc for a reduced generalized definite automaton:
/// Q0 holds the states of trivial components in a topological order of
/// reachability, the sinks follow by ascending size (ties: smallest member).
struct SinkPartition {
  std::vector<State> q0_states;
  std::vector<std::vector<State>> sinks;
};

/// Throws PreconditionError when the automaton is not reduced or admits Pg.
SinkPartition sink_partition(const Dfa& dfa);

/// Builds a reduced automaton B on the same states with a definite language
/// and |T(B)| >= |T(A)|. B's letters are the source tuplings [f0, …, fc]
/// with f0 elevating on Q0, fi : Qi → Qc for 0 < i < c, and fc ranging over
/// the restrictions of T(A) to Qc. Each letter is named by its image list
/// over the original state ids; letters are sorted by that name. B keeps
/// A's start and final states.
///
/// PreconditionError when A is not reduced or not generalized definite, or
/// when its largest sink is a singleton (the reverse definite case).
/// ResourceError when T(A) or the letter count exceeds `limit`.
/// InternalError if B fails to be reduced, to avoid Pd or to have a large
/// enough semigroup.
Dfa definitize(const Dfa& dfa, std::size_t limit = kDefaultSemigroupLimit);

}  // namespace gendef
