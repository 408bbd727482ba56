#include <doctest.h>

#include "fixtures.hpp"
#include "gendef/errors.hpp"
#include "gendef/oracle.hpp"

using namespace gendef;

TEST_CASE("generalized definite check") {
  CHECK(is_k_generalized_definite(fixtures::a2(), 1));
  CHECK(!is_k_generalized_definite(fixtures::a2(), 0));
  for (std::size_t k = 0; k <= 8; ++k) CHECK(!is_k_generalized_definite(fixtures::a3(), k));
}

TEST_CASE("definite check") {
  CHECK(is_k_definite(fixtures::a1(), 1));
  CHECK(!is_k_definite(fixtures::a1(), 0));
  for (std::size_t k = 0; k <= 8; ++k) CHECK(!is_k_definite(fixtures::a2(), k));
  CHECK(is_k_definite(fixtures::make({"a", "b"}, 1, {0, 0}, 0, {0}), 0));
}

TEST_CASE("reverse definite check") {
  CHECK(is_k_reverse_definite(fixtures::a2(), 1));
  CHECK(is_k_reverse_definite(fixtures::a1(), 1));
  for (std::size_t k = 0; k <= 8; ++k) CHECK(!is_k_reverse_definite(fixtures::a3(), k));
}

TEST_CASE("definiteness_index") {
  const auto gd = definiteness_index(fixtures::a2(), ClassKind::GeneralizedDefinite, 32);
  CHECK(gd.minimal_k == std::size_t{1});
  CHECK(gd.searched_up_to == 32);
  CHECK(definiteness_index(fixtures::a1(), ClassKind::Definite, 32).minimal_k == std::size_t{1});
  CHECK(!definiteness_index(fixtures::a3(), ClassKind::GeneralizedDefinite, 32).minimal_k);
}

TEST_CASE("is_finite_language") {
  CHECK(is_finite_language(fixtures::make({"a"}, 2, {1, 1}, 0, {})));
  CHECK(!is_finite_language(fixtures::a1()));
  CHECK(is_finite_language(fixtures::make({"a"}, 3, {1, 2, 2}, 0, {0, 1})));
}

TEST_CASE("word_level_check") {
  CHECK(word_level_check(fixtures::a2(), ClassKind::GeneralizedDefinite, 1, 4));
  CHECK(!word_level_check(fixtures::a3(), ClassKind::GeneralizedDefinite, 1, 4));
  CHECK(!word_level_check(fixtures::a3(), ClassKind::GeneralizedDefinite, 2, 4));
  CHECK(word_level_check(fixtures::a1(), ClassKind::Definite, 1, 4));
  CHECK_THROWS_AS(word_level_check(fixtures::a3(), ClassKind::GeneralizedDefinite, 10, 10, 1000),
                  ResourceError);
}

TEST_CASE("DFA enumeration") {
  CHECK(DfaEnumeration(1, 1).size() == 2);
  CHECK(DfaEnumeration(2, 1).size() == 16);
  CHECK(DfaEnumeration(3, 2).size() == 5832);
  CHECK_THROWS_AS(DfaEnumeration(5, 3), ResourceError);
  const DfaEnumeration e(2, 2);
  std::size_t seen = 0;
  std::vector<std::string> texts;
  e.for_each([&](const Dfa& d) {
    CHECK(d.start() == 0);
    CHECK(d == e.at(seen));
    ++seen;
  });
  CHECK(seen == 64);
  CHECK(e.at(0).finals().empty());
  CHECK(e.at(1).finals() == std::vector<State>{0});
}

TEST_CASE("default_alphabet") {
  CHECK(default_alphabet(2) == std::vector<std::string>{"a", "b"});
  CHECK(default_alphabet(28)[26] == "l26");
}
