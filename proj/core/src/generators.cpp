#include "gendef/generators.hpp"

#include <algorithm>

#include "gendef/errors.hpp"
#include "gendef/oracle.hpp"

namespace gendef {

Dfa random_dfa(std::size_t states, std::size_t alphabet_size, std::mt19937_64& rng) {
  if (states == 0 || alphabet_size == 0) {
    throw PreconditionError("random_dfa: states and alphabet size must be positive");
  }
  std::vector<State> delta(states * alphabet_size);
  for (auto& entry : delta) entry = static_cast<State>(rng() % states);
  const auto start = static_cast<State>(rng() % states);
  std::vector<State> finals;
  for (State q = 0; q < states; ++q) {
    if (rng() % 2) finals.push_back(q);
  }
  return Dfa(default_alphabet(alphabet_size), states, std::move(delta), start, finals);
}

std::vector<Dfa> random_dfas(std::size_t states, std::size_t alphabet_size, std::uint64_t seed,
                             std::size_t count) {
  std::mt19937_64 rng(seed);
  std::vector<Dfa> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_dfa(states, alphabet_size, rng));
  return out;
}

Dfa ladder_dfa(std::size_t states) {
  if (states == 0) throw PreconditionError("ladder_dfa: states must be positive");
  std::vector<State> delta(states * 2);
  for (State q = 0; q < states; ++q) {
    delta[q * 2] = static_cast<State>(std::min<std::size_t>(q + 1, states - 1));
    delta[q * 2 + 1] = 0;
  }
  const State last = static_cast<State>(states - 1);
  return Dfa(default_alphabet(2), states, std::move(delta), 0, std::span<const State>(&last, 1));
}

Dag random_dag(std::size_t vertices, std::uint64_t numerator, std::uint64_t denominator,
               std::mt19937_64& rng) {
  if (denominator == 0 || numerator > denominator) {
    throw PreconditionError("random_dag: probability must lie in [0, 1]");
  }
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 1; i <= vertices; ++i) {
    for (std::size_t j = i + 1; j <= vertices; ++j) {
      if (rng() % denominator < numerator) edges.emplace_back(i, j);
    }
  }
  return Dag(vertices, std::move(edges));
}

}  // namespace gendef
