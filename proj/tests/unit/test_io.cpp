#include <doctest.h>

#include <json.hpp>

#include "fixtures.hpp"
#include "gendef/components.hpp"
#include "gendef/errors.hpp"
#include "gendef/io.hpp"
#include "gendef/oracle.hpp"
#include "gendef/patterns.hpp"

using namespace gendef;

namespace {

std::size_t error_line(const std::string& text) {
  try {
    parse_dfa(text);
  } catch (const InputError& e) {
    return e.line();
  }
  return static_cast<std::size_t>(-1);
}

const char* kA2 = R"(# words starting with a
dfa
states 3
alphabet a b
start 0
final 1

trans 0 a 1   # first letter a
trans 0 b 2
trans 1 a 1
trans 1 b 1
trans 2 a 2
trans 2 b 2
)";

}  // namespace

TEST_CASE("parse_dfa accepts comments and blank lines") {
  CHECK(parse_dfa(kA2) == fixtures::a2());
  CHECK(parse_dfa("dfa\nstates 1\nalphabet x\nstart 0\nfinal\ntrans 0 x 0") ==
        fixtures::make({"x"}, 1, {0}, 0, {}));
}

TEST_CASE("parse_dfa reports the offending line") {
  const std::string head = "dfa\nstates 2\nalphabet a\nstart 0\nfinal 1\n";
  CHECK(error_line(head + "trans 0 a 1\ntrans 1 a\n") == 7);
  CHECK(error_line(head + "trans 0 a 1\ntrans 1 b 1\n") == 7);
  CHECK(error_line(head + "trans 0 a 1\ntrans 0 a 0\n") == 7);
  CHECK(error_line(head + "trans 0 a 2\n") == 6);
  CHECK(error_line(head + "trans 0 a 1\n") == 6);  // incomplete: reported at end of input
  CHECK(error_line("dfa\nstates x\n") == 2);
  CHECK(error_line("dfa\nstates 0\n") == 2);
  CHECK(error_line("states 2\n") == 1);
  CHECK(error_line("dfa\nalphabet a\n") == 2);
  CHECK(error_line("dfa\nstates 1\nalphabet a a\n") == 3);
  CHECK(error_line("dfa\nstates 1\nalphabet a\nstart 1\n") == 4);
  CHECK(error_line("dfa\nstates 2\nalphabet a\nstart 0\nfinal 1 1\n") == 5);
  CHECK(error_line("dfa\nstates 1\nalphabet a\nstart -1\n") == 4);
}

TEST_CASE("serialize_dfa round-trips every small automaton") {
  for (std::size_t n = 1; n <= 3; ++n) {
    for (std::size_t k = 1; k <= 2; ++k) {
      DfaEnumeration(n, k).for_each([](const Dfa& d) {
        const std::string text = serialize_dfa(d);
        const Dfa back = parse_dfa(text);
        CHECK(back == d);
        CHECK(serialize_dfa(back) == text);
      });
    }
  }
}

TEST_CASE("serialize_dfa format") {
  CHECK(serialize_dfa(fixtures::a1()) ==
        "dfa\nstates 2\nalphabet a\nstart 0\nfinal 1\ntrans 0 a 1\ntrans 1 a 1\n");
}

TEST_CASE("dag files") {
  const Dag g = parse_dag("dag\nvertices 3\nedge 1 2\nedge 2 3\n");
  CHECK(g.vertex_count() == 3);
  CHECK(g.edges().size() == 2);
  CHECK(parse_dag(serialize_dag(g)).edges() == g.edges());
  CHECK_THROWS_AS(parse_dag("dag\nvertices 3\nedge 2 1\n"), InputError);
  CHECK_THROWS_AS(parse_dag("dag\nvertices 3\nedge 1 2\nedge 1 2\n"), InputError);
  CHECK_THROWS_AS(parse_dag("dag\nvertices 3\nedge 1 4\n"), InputError);
}

TEST_CASE("component graph DOT") {
  const Dfa a2 = fixtures::a2();
  const std::string dot = component_graph_dot(a2, component_graph(a2));
  CHECK(dot ==
        "digraph components {\n"
        "  c0 [label=\"{0} trivial\"];\n"
        "  c1 [label=\"{2} sink\"];\n"
        "  c2 [label=\"{1} sink\"];\n"
        "  c0 -> c1 [label=\"b\"];\n"
        "  c0 -> c2 [label=\"a\"];\n"
        "  c1 -> c1 [label=\"a,b\"];\n"
        "  c2 -> c2 [label=\"a,b\"];\n"
        "}\n");
}

TEST_CASE("class report JSON has a fixed key set") {
  const auto j = nlohmann::json::parse(class_report_json(classify(fixtures::a3())));
  for (const char* key : {"reduced_states", "finite", "cofinite", "definite", "reverse_definite",
                          "generalized_definite", "witnesses"}) {
    CHECK(j.contains(key));
  }
  CHECK(j.size() == 7);
  const auto& pg = j["witnesses"]["Pg"];
  CHECK(pg["pattern"] == "Pg");
  CHECK(pg["p"] == 0);
  CHECK(pg["q"] == 1);
  CHECK(pg["x"] == "b");
  CHECK(pg["x_indices"] == nlohmann::json::array({1}));
  CHECK(pg["y"] == "a");
  CHECK(j["witnesses"]["Pd"]["y"].is_null());

  const auto j2 = nlohmann::json::parse(class_report_json(classify(fixtures::a2())));
  CHECK(j2["witnesses"]["Pg"].is_null());
  CHECK(j2["generalized_definite"] == true);
  CHECK(j2["witnesses"].size() == 4);
}

TEST_CASE("index report JSON") {
  const auto j = nlohmann::json::parse(
      index_report_json(definiteness_index(fixtures::a3(), ClassKind::Definite, 5)));
  CHECK(j["kind"] == "definite");
  CHECK(j["minimal_k"].is_null());
  CHECK(j["searched_up_to"] == 5);
}
