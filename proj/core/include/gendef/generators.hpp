#pragma once

// Reproducible instance generators. Randomness comes from std::mt19937_64
// reduced with `%`, so a seed produces the same instances on every platform
// (the standard distributions are implementation-defined).

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "gendef/automaton.hpp"
#include "gendef/constructions.hpp"

namespace gendef {

/// Uniform table entries, uniform start, each state final with probability 1/2.
Dfa random_dfa(std::size_t states, std::size_t alphabet_size, std::mt19937_64& rng);

/// `count` automata from one seeded generator.
std::vector<Dfa> random_dfas(std::size_t states, std::size_t alphabet_size, std::uint64_t seed,
                             std::size_t count);

/// Letters a, b: a moves i to min(i+1, n-1), b resets to 0; F = {n-1}.
/// Reduced and strongly connected, so classification has to examine the
/// full pair graph.
Dfa ladder_dfa(std::size_t states);

/// Each edge (i, j), i < j, present independently with probability
/// numerator/denominator.
Dag random_dag(std::size_t vertices, std::uint64_t numerator, std::uint64_t denominator,
               std::mt19937_64& rng);

}  // namespace gendef
