#include <doctest.h>

#include "fixtures.hpp"
#include "gendef/errors.hpp"
#include "gendef/generators.hpp"
#include "gendef/minimization.hpp"
#include "gendef/oracle.hpp"
#include "gendef/patterns.hpp"

using namespace gendef;
using fixtures::w;

TEST_CASE("Pf") {
  const Dfa a2 = fixtures::a2();
  CHECK(admits_pf(a2) == PatternWitness{PatternId::Pf, 1, 2, w(a2, "a"), w(a2, "a")});
  const auto a3 = admits_pf(fixtures::a3());
  REQUIRE(a3);
  CHECK(validate_witness(fixtures::a3(), *a3));
  CHECK(!admits_pf(fixtures::a1()));
}

TEST_CASE("Pd") {
  const Dfa a2 = fixtures::a2();
  CHECK(admits_pd(a2) == PatternWitness{PatternId::Pd, 1, 2, w(a2, "a"), std::nullopt});
  const Dfa a3 = fixtures::a3();
  CHECK(admits_pd(a3) == PatternWitness{PatternId::Pd, 0, 1, w(a3, "b"), std::nullopt});
  CHECK(!admits_pd(fixtures::a1()));
  CHECK(!admits_pd(fixtures::a5()));
}

TEST_CASE("Pr") {
  const Dfa a3 = fixtures::a3();
  CHECK(admits_pr(a3) == PatternWitness{PatternId::Pr, 0, 1, w(a3, "b"), w(a3, "a")});
  CHECK(!admits_pr(fixtures::a2()));
  CHECK(!admits_pr(fixtures::a1()));
}

TEST_CASE("Pg") {
  const Dfa a3 = fixtures::a3();
  const auto pg = admits_pg(a3);
  CHECK(pg == PatternWitness{PatternId::Pg, 0, 1, w(a3, "b"), w(a3, "a")});
  CHECK(!admits_pg(fixtures::a2()));
  CHECK(!admits_pg(fixtures::a1()));
  CHECK(!admits_pg(fixtures::a5()));
}

TEST_CASE("Pg through a non-sink nontrivial component") {
  // 0 loops on a and leaves on b into the sink {1, 2} where a, b swap.
  const Dfa d = fixtures::make({"a", "b"}, 3, {0, 1, 2, 1, 1, 2}, 0, {1});
  const auto pg = admits_pg(d);
  REQUIRE(pg);
  CHECK(validate_witness(d, *pg));
  CHECK(pg->p == 0);
}

TEST_CASE("classify") {
  const auto r1 = classify(fixtures::a1());
  CHECK(r1.is_cofinite);
  CHECK(!r1.is_finite);
  CHECK(r1.is_definite);
  CHECK(r1.is_reverse_definite);
  CHECK(r1.is_generalized_definite);

  const auto r2 = classify(fixtures::a2());
  CHECK(!r2.is_finite);
  CHECK(!r2.is_cofinite);
  CHECK(!r2.is_definite);
  CHECK(r2.is_reverse_definite);
  CHECK(r2.is_generalized_definite);
  CHECK(r2.reduced_states() == 3);

  const auto r3 = classify(fixtures::a3());
  CHECK(!(r3.is_finite || r3.is_cofinite || r3.is_definite || r3.is_reverse_definite ||
          r3.is_generalized_definite));

  // {ε, a} over {a}.
  const auto fin = classify(fixtures::make({"a"}, 3, {1, 2, 2}, 0, {0, 1}));
  CHECK(fin.is_finite);
  CHECK(!fin.is_cofinite);
}

TEST_CASE("check_condition_ii") {
  CHECK(check_condition_ii(fixtures::a2()));
  CHECK(!check_condition_ii(fixtures::a3()));
  CHECK(check_condition_ii(fixtures::a5()));
  const Dfa dup = fixtures::make({"a", "b"}, 4, {1, 3, 1, 1, 2, 3, 3, 2}, 0, {1});
  CHECK_THROWS_AS(check_condition_ii(dup), PreconditionError);
}

TEST_CASE("definite conditions") {
  CHECK(check_definite_condition_iii(fixtures::a5()));
  CHECK(check_definite_condition_iv(fixtures::a5()));
  CHECK(!check_definite_condition_iii(fixtures::a2()));
  CHECK(!check_definite_condition_iv(fixtures::a2()));
}

TEST_CASE("validate_witness") {
  const Dfa a3 = fixtures::a3();
  CHECK(validate_witness(a3, {PatternId::Pg, 0, 1, w(a3, "a a"), w(a3, "a")}));
  CHECK(!validate_witness(a3, {PatternId::Pg, 0, 1, w(a3, "a"), w(a3, "a")}));
  const Dfa a2 = fixtures::a2();
  CHECK(validate_witness(a2, {PatternId::Pd, 1, 2, w(a2, "a"), std::nullopt}));
  CHECK(!validate_witness(a2, {PatternId::Pd, 1, 1, w(a2, "a"), std::nullopt}));
  CHECK(!validate_witness(a2, {PatternId::Pd, 1, 7, w(a2, "a"), std::nullopt}));
  CHECK(!validate_witness(a2, {PatternId::Pd, 1, 2, Word{}, std::nullopt}));
}

TEST_CASE("non_k_gd_counterexample") {
  const Dfa a3 = fixtures::a3();
  const PatternWitness pg{PatternId::Pg, 0, 1, w(a3, "a a"), w(a3, "a")};
  for (std::size_t k = 1; k <= 4; ++k) {
    auto [u, v] = non_k_gd_counterexample(a3, pg, k);
    REQUIRE(u.size() >= k);
    REQUIRE(v.size() >= k);
    CHECK(std::equal(u.begin(), u.begin() + k, v.begin()));
    CHECK(std::equal(u.end() - k, u.end(), v.end() - k));
    CHECK(accepts(a3, u) != accepts(a3, v));
  }
  CHECK_THROWS_AS(non_k_gd_counterexample(a3, {PatternId::Pg, 0, 1, w(a3, "a"), w(a3, "a")}, 1),
                  PreconditionError);
  CHECK_THROWS_AS(non_k_gd_counterexample(a3, pg, 0), PreconditionError);
}

TEST_CASE("product automaton") {
  const Dfa a2 = fixtures::a2();
  const auto prod = product_automaton(a2);
  CHECK(prod.base.state_count() == 9);
  CHECK(prod.base.start() == prod.pair_id(0, 0));
  CHECK(prod.pair_of(prod.pair_id(2, 1)) == std::pair<State, State>{2, 1});
  CHECK(prod.base.next(prod.pair_id(0, 2), 0) == prod.pair_id(1, 2));
  CHECK(prod.base.is_final(prod.pair_id(1, 2)));
  CHECK(!prod.base.is_final(prod.pair_id(1, 1)));
}

TEST_CASE("class lattice and witness validity on random automata") {
  for (std::size_t n : {2, 4, 7, 12}) {
    for (const auto& d : random_dfas(n, 2, 500 + n, 80)) {
      const auto r = classify(d);
      if (r.is_definite) CHECK(r.is_generalized_definite);
      if (r.is_reverse_definite) CHECK(r.is_generalized_definite);
      if (r.is_finite || r.is_cofinite) {
        CHECK(r.is_definite);
        CHECK(r.is_reverse_definite);
      }
      for (PatternId id : kAllPatterns) {
        if (const auto& wit = r.witness(id)) CHECK(validate_witness(r.reduced, *wit));
      }
      CHECK(r.is_generalized_definite ==
            definiteness_index(d, ClassKind::GeneralizedDefinite, 2 * n * n).minimal_k.has_value());
    }
  }
}
