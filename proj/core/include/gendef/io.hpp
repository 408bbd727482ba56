#pragma once

// Text formats.
//
// DfaFile:
//   dfa
//   states <n>
//   alphabet <name>+
//   start <q>
//   final <q>*
//   trans <q> <letter> <q'>      exactly n·|alphabet| lines, each (q, letter) once
//
// DagFile:
//   dag
//   vertices <n>
//   edge <i> <j>                 1 <= i < j <= n, no duplicates
//
// Header lines must appear in the order shown. '#' starts a comment that
// runs to the end of the line; blank lines are ignored. Tokens are separated
// by spaces or tabs. Letter names are any non-blank tokens without '#'.

#include <string>
#include <string_view>

#include "gendef/automaton.hpp"
#include "gendef/components.hpp"
#include "gendef/constructions.hpp"
#include "gendef/oracle.hpp"
#include "gendef/patterns.hpp"
#include "gendef/semigroup.hpp"

namespace gendef {

/// Throws InputError carrying the 1-based line number.
Dfa parse_dfa(std::string_view text);
std::string serialize_dfa(const Dfa& dfa);

Dag parse_dag(std::string_view text);
std::string serialize_dag(const Dag& g);

/// Graphviz rendering of Γ(A): one node "c<id>" per component labelled
/// "{<members>}" plus " trivial" and/or " sink", and one edge per pair of
/// components labelled with the comma-joined names of the letters joining
/// them (self-loops included).
std::string component_graph_dot(const Dfa& dfa, const ComponentGraph& cg);

/// JSON object with the fixed key set
///   reduced_states, finite, cofinite, definite, reverse_definite,
///   generalized_definite, witnesses{Pf, Pd, Pr, Pg}
/// Each witness is null or
///   {pattern, p, q, x, x_indices, y, y_indices}
/// where x/y are space-separated letter names (y null when absent) and
/// p, q are states of the minimal automaton.
std::string class_report_json(const ClassReport& report);

/// Human-readable multi-line summary of the same data.
std::string class_report_text(const ClassReport& report);

/// JSON for definiteness indices: {kind, minimal_k, searched_up_to}.
std::string index_report_json(const IndexReport& report);

}  // namespace gendef
