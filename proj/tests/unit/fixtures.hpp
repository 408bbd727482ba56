#pragma once

#include <string>
#include <vector>

#include "gendef/automaton.hpp"
#include "gendef/io.hpp"

namespace fixtures {

using gendef::Dfa;
using gendef::State;

inline Dfa make(std::vector<std::string> alphabet, std::size_t n, std::vector<State> delta,
                State start, std::vector<State> finals) {
  return Dfa(std::move(alphabet), n, std::move(delta), start, finals);
}

// a a*
inline Dfa a1() { return make({"a"}, 2, {1, 1}, 0, {1}); }
// words starting with a
inline Dfa a2() { return make({"a", "b"}, 3, {1, 2, 1, 1, 2, 2}, 0, {1}); }
// even number of a
inline Dfa a3() { return make({"a", "b"}, 2, {1, 0, 0, 1}, 0, {0}); }
// last letter a
inline Dfa a5() { return make({"a", "b"}, 2, {1, 0, 1, 0}, 0, {1}); }
// 0 enters the sink {1, 2}; a resets to 1, b to 2
inline Dfa a6() { return make({"a", "b"}, 3, {1, 1, 1, 2, 1, 2}, 0, {1}); }

inline gendef::Word w(const Dfa& d, const std::string& text) { return gendef::parse_word(d, text); }

}  // namespace fixtures
