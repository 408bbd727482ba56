#include <doctest.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "cli.hpp"
#include "gendef/io.hpp"

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "gendef");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = gendef::run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(GENDEF_TEST_DATA) + "/" + name; }

std::string write_temp(const std::string& name, const std::string& text) {
  const std::string path = std::string(GENDEF_TEST_TMP) + "/" + name;
  std::ofstream(path) << text;
  return path;
}

}  // namespace

TEST_CASE("classify") {
  const auto r = run({"classify", data("a2.dfa")});
  CHECK(r.code == 0);
  CHECK(r.out.find("generalized definite: yes") != std::string::npos);
  CHECK(r.out.find("\ndefinite: no") != std::string::npos);

  const auto j = run({"classify", "--json", data("a3.dfa")});
  CHECK(j.code == 0);
  const auto report = nlohmann::json::parse(j.out);
  CHECK(report["witnesses"]["Pg"].is_object());
}

TEST_CASE("input errors exit 2 with the line") {
  const auto path = write_temp("bad.dfa", "dfa\nstates 1\nalphabet a\nstart 0\nfinal\ntrans 0 a\n");
  const auto r = run({"classify", path});
  CHECK(r.code == 2);
  CHECK(r.err.find("line 6") != std::string::npos);
  CHECK(run({"classify", data("missing.dfa")}).code == 2);
  CHECK(run({"classify"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}

TEST_CASE("semigroup") {
  const auto r = run({"semigroup", data("a5.dfa")});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("|T| = 2\n", 0) == 0);
  CHECK(run({"semigroup", "--limit", "1", data("a5.dfa")}).code == 3);
}

TEST_CASE("dagreach") {
  const auto r = run({"dagreach", data("path3.dag")});
  CHECK(r.code == 0);
  CHECK(r.out == "reachable: yes; generalized definite: no; consistent\n");
  const auto cut = write_temp("cut.dag", "dag\nvertices 3\nedge 1 2\n");
  CHECK(run({"dagreach", cut}).out == "reachable: no; generalized definite: yes; consistent\n");
}

TEST_CASE("definitize") {
  CHECK(run({"definitize", data("a2.dfa")}).code == 4);
  CHECK(run({"definitize", data("a3.dfa")}).code == 4);
  const auto r = run({"definitize", data("a6.dfa")});
  CHECK(r.code == 0);
  CHECK(gendef::parse_dfa(r.out).alphabet_size() == 4);
}

TEST_CASE("minimize, components, index") {
  const auto m = run({"minimize", data("a3.dfa")});
  CHECK(m.code == 0);
  CHECK(gendef::parse_dfa(m.out).state_count() == 2);
  const auto out_path = std::string(GENDEF_TEST_TMP) + "/min.dfa";
  CHECK(run({"minimize", data("a3.dfa"), "-o", out_path}).out.empty());
  std::ifstream in(out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  CHECK(buf.str() == m.out);

  const auto c = run({"components", "--dot", data("a2.dfa")});
  CHECK(c.out.rfind("digraph components {", 0) == 0);
  CHECK(run({"components", data("a3.dfa")}).out == "component 0: {0,1} sink\n");

  const auto i = run({"index", "--max-k", "8", data("a3.dfa")});
  CHECK(i.out.find("generalized_definite: none up to k = 8") != std::string::npos);
  const auto ij = run({"index", "--json", data("a2.dfa")});
  CHECK(ij.out.find("\"minimal_k\":1") != std::string::npos);
}

TEST_CASE("gen is reproducible") {
  const auto a = run({"gen", "3", "2", "--seed", "1", "--count", "1"});
  const auto b = run({"gen", "3", "2", "--seed", "1", "--count", "1"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(gendef::parse_dfa(a.out).state_count() == 3);
  CHECK(run({"gen", "3", "2", "--count", "0"}).out.empty());
  CHECK(run({"gen", "3", "2", "--seed", "2"}).out != a.out);
  CHECK(run({"gen", "0", "2"}).code == 4);
}

TEST_CASE("selftest") {
  const auto ok = run({"selftest", "--max-states", "2"});
  CHECK(ok.code == 0);
  CHECK(ok.out.find("gd_characterization: 84 checked, 0 failed") != std::string::npos);
  const auto bad = run({"selftest", "--max-states", "2", "--inject-fault"});
  CHECK(bad.code == 1);
  const auto pos = bad.out.find("first counterexample");
  REQUIRE(pos != std::string::npos);
  const auto dfa_start = bad.out.find("dfa\n", pos);
  REQUIRE(dfa_start != std::string::npos);
  CHECK_NOTHROW(gendef::parse_dfa(bad.out.substr(dfa_start)));
  CHECK(run({"selftest", "--max-states", "5"}).code == 4);
}

TEST_CASE("search") {
  const auto r = run({"search", "3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("max |T| = 5", 0) == 0);
  CHECK(run({"search", "5"}).code == 3);
}
