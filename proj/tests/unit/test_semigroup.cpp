#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>

#include "fixtures.hpp"
#include "gendef/errors.hpp"
#include "gendef/minimization.hpp"
#include "gendef/patterns.hpp"
#include "gendef/semigroup.hpp"

using namespace gendef;

namespace {

std::vector<Transformation> all_maps(std::size_t n) {
  std::size_t count = 1;
  for (std::size_t i = 0; i < n; ++i) count *= n;
  std::vector<Transformation> out;
  for (std::size_t c = 0; c < count; ++c) {
    std::vector<State> image(n);
    std::size_t r = c;
    for (auto& v : image) {
      v = static_cast<State>(r % n);
      r /= n;
    }
    out.emplace_back(std::move(image));
  }
  return out;
}

// Some subset D with |D| > 1 is mapped bijectively onto itself.
bool permutes_some_subset(const Transformation& t) {
  const std::size_t n = t.size();
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) < 2) continue;
    std::uint32_t image = 0;
    for (State q = 0; q < n; ++q) {
      if (mask & (1u << q)) image |= 1u << t[q];
    }
    if (image == mask) return true;
  }
  return false;
}

Transformation product(std::span<const Transformation> seq, std::size_t j, std::size_t k) {
  Transformation p = seq[j - 1];
  for (std::size_t i = j; i < k; ++i) p = compose(p, seq[i]);
  return p;
}

}  // namespace

TEST_CASE("enumerate_semigroup") {
  const auto s3 = enumerate_semigroup(fixtures::a3());
  CHECK(s3.size() == 2);
  CHECK(std::count(s3.elements.begin(), s3.elements.end(), Transformation({1, 0})) == 1);
  CHECK(std::count(s3.elements.begin(), s3.elements.end(), Transformation::identity(2)) == 1);
  CHECK(enumerate_semigroup(fixtures::a2()).size() == 2);
  const auto s5 = enumerate_semigroup(fixtures::a5());
  CHECK(s5.size() == 2);
  CHECK(s5.generator_count == 2);

  const Dfa d = fixtures::make({"a", "b"}, 4, {1, 2, 2, 3, 3, 0, 0, 1}, 0, {0});
  const auto sg = enumerate_semigroup(d);
  std::set<Transformation> seen;
  for (std::size_t i = 0; i < sg.size(); ++i) {
    CHECK(transformation_of(d, sg.shortest_word[i]) == sg.elements[i]);
    CHECK(!sg.shortest_word[i].empty());
    CHECK(seen.insert(sg.elements[i]).second);
    if (i > 0) CHECK(sg.shortest_word[i - 1].size() <= sg.shortest_word[i].size());
  }
  for (const auto& f : sg.elements) {
    for (const auto& g : sg.elements) CHECK(seen.contains(compose(f, g)));
  }
}

TEST_CASE("enumerate_semigroup reports the limit") {
  // Cyclic shift and a transposition generate all 24 permutations of 4 states.
  const Dfa d = fixtures::make({"a", "b"}, 4, {1, 1, 2, 0, 3, 2, 0, 3}, 0, {0});
  CHECK(enumerate_semigroup(d).size() == 24);
  try {
    enumerate_semigroup(d, 10);
    FAIL("expected ResourceError");
  } catch (const ResourceError& e) {
    CHECK(e.reached() > 10);
  }
  CHECK_THROWS_AS(enumerate_semigroup(d, 0), PreconditionError);
}

TEST_CASE("non-permutational, idempotent, fixed points") {
  const Transformation swap({1, 0});
  CHECK(!is_non_permutational(swap));
  CHECK(is_non_permutational(Transformation::constant(3, 0)));
  CHECK(!is_non_permutational(Transformation({1, 1, 2})));
  CHECK(is_idempotent(Transformation::identity(3)));
  CHECK(is_idempotent(Transformation::constant(3, 0)));
  CHECK(!is_idempotent(swap));
  CHECK(fixed_points(Transformation::identity(3)) == std::vector<State>{0, 1, 2});
  CHECK(fixed_points(Transformation({1, 1, 2})) == std::vector<State>{1, 2});
  CHECK(fixed_points(Transformation::constant(3, 0)) == std::vector<State>{0});
}

TEST_CASE("three characterizations of non-permutational maps agree on all maps of 4 states") {
  const auto maps = all_maps(4);
  REQUIRE(maps.size() == 256);
  std::size_t non_perm = 0;
  for (const auto& t : maps) {
    const bool by_power = is_non_permutational(t);
    const bool by_subsets = !permutes_some_subset(t);
    const std::vector<State> all{0, 1, 2, 3};
    const bool by_restriction = is_non_permutational_on(t, all);
    CHECK(by_power == by_subsets);
    CHECK(by_power == by_restriction);
    if (by_power) {
      ++non_perm;
      CHECK(fixed_points(t).size() == 1);
      CHECK(is_idempotent(t) == (fixed_points(t).size() == 1 && t == Transformation::constant(4, t[0])));
    }
  }
  // Rooted trees on 4 labelled vertices: 4^3.
  CHECK(non_perm == 64);
}

TEST_CASE("power") {
  const Transformation cycle({1, 2, 0});
  CHECK(power(cycle, 0) == Transformation::identity(3));
  CHECK(power(cycle, 3) == Transformation::identity(3));
  CHECK(power(cycle, 4) == cycle);
}

TEST_CASE("fixed_point_partition") {
  const auto s5 = enumerate_semigroup(fixtures::a5());
  const auto part = fixed_point_partition(s5);
  REQUIRE(part.parts.size() == 2);
  REQUIRE(part.parts[0].size() == 1);
  REQUIRE(part.parts[1].size() == 1);
  CHECK(s5.elements[part.parts[0][0]] == Transformation::constant(2, 0));
  CHECK(s5.elements[part.parts[1][0]] == Transformation::constant(2, 1));

  const auto s1 = enumerate_semigroup(fixtures::a1());
  const auto p1 = fixed_point_partition(s1);
  CHECK(p1.parts[1].size() == 1);
  CHECK(p1.parts[1].size() <= checked_factorial(1));

  CHECK_THROWS_AS(fixed_point_partition(enumerate_semigroup(fixtures::a2())), PreconditionError);
}

TEST_CASE("acyclic_order_for") {
  CHECK(acyclic_order_for(enumerate_semigroup(fixtures::a1()), 1) == std::vector<State>{0, 1});
  CHECK(acyclic_order_for(enumerate_semigroup(fixtures::a5()), 0) == std::vector<State>{1, 0});
  const auto one = enumerate_semigroup(fixtures::make({"a"}, 1, {0}, 0, {}));
  CHECK(acyclic_order_for(one, 0) == std::vector<State>{0});
  CHECK_THROWS_AS(acyclic_order_for(enumerate_semigroup(fixtures::a1()), 0), PreconditionError);
}

TEST_CASE("find_idempotent_factor") {
  const Transformation swap({1, 0});
  const Transformation c0 = Transformation::constant(2, 0);
  CHECK(find_idempotent_factor(std::vector{c0}) == std::pair<std::size_t, std::size_t>{1, 1});
  CHECK(find_idempotent_factor(std::vector{swap, swap}) == std::pair<std::size_t, std::size_t>{1, 2});
  CHECK(!find_idempotent_factor(std::vector{swap}).has_value());
  CHECK_THROWS_AS(find_idempotent_factor(std::vector<Transformation>{}), PreconditionError);
  CHECK_THROWS_AS(find_idempotent_factor(std::vector{swap, Transformation::identity(3)}),
                  DimensionError);
}

TEST_CASE("find_idempotent_factor returns the least idempotent factor") {
  const auto maps = all_maps(3);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Transformation> seq;
    for (std::size_t i = 0; i < 1 + rng() % 6; ++i) seq.push_back(maps[rng() % maps.size()]);
    std::optional<std::pair<std::size_t, std::size_t>> expected;
    for (std::size_t j = 1; j <= seq.size() && !expected; ++j) {
      for (std::size_t k = j; k <= seq.size() && !expected; ++k) {
        if (is_idempotent(product(seq, j, k))) expected = std::pair{j, k};
      }
    }
    CHECK(find_idempotent_factor(seq) == expected);
  }
}

TEST_CASE("Ramsey bounds") {
  CHECK(ramsey_triangle_bound(1) == 3);
  CHECK(ramsey_triangle_bound(2) == 6);
  CHECK(ramsey_triangle_bound(3) == 17);
  CHECK(ramsey_triangle_bound(4) == 66);
  for (std::uint64_t c = 1; c < 10; ++c) CHECK(ramsey_triangle_bound(c) < ramsey_triangle_bound(c + 1));
  CHECK_THROWS_AS(ramsey_triangle_bound(0), PreconditionError);
  CHECK_THROWS_AS(ramsey_triangle_bound(27), ResourceError);
  CHECK(m_bound(1) == 3);
  CHECK(m_bound(2) == 66);
  CHECK_THROWS_AS(m_bound(3), ResourceError);
  CHECK(checked_factorial(0) == 1);
  CHECK(checked_factorial(4) == 24);
  CHECK(checked_factorial(20) == 2432902008176640000ull);
  CHECK_THROWS_AS(checked_factorial(21), ResourceError);
}

TEST_CASE("image_list_name") {
  CHECK(image_list_name(Transformation::constant(3, 1)) == "1,1,1");
  CHECK(image_list_name(Transformation({2, 0, 1})) == "2,0,1");
}

TEST_CASE("syntactic complexity search") {
  const auto s1 = search_max_syntactic_complexity(1);
  CHECK(s1.max_size == 1);
  const auto s2 = search_max_syntactic_complexity(2);
  CHECK(s2.max_size == 2);
  const auto s3 = search_max_syntactic_complexity(3);
  CHECK(s3.max_size >= 5);
  CHECK(s3.max_size <= 6);
  REQUIRE(s3.witness);
  CHECK(enumerate_semigroup(*s3.witness).size() == s3.max_size);
  CHECK(is_reduced(*s3.witness));
  CHECK(!admits_pd(*s3.witness));
  CHECK_THROWS_AS(search_max_syntactic_complexity(5), ResourceError);
  CHECK_THROWS_AS(search_max_syntactic_complexity(0), PreconditionError);
}
