#include "cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "gendef/components.hpp"
#include "gendef/constructions.hpp"
#include "gendef/errors.hpp"
#include "gendef/generators.hpp"
#include "gendef/io.hpp"
#include "gendef/minimization.hpp"
#include "gendef/oracle.hpp"
#include "gendef/patterns.hpp"
#include "gendef/selftest.hpp"
#include "gendef/semigroup.hpp"

namespace gendef {

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  buf << in.rdbuf();
  return buf.str();
}

Dfa load_dfa(const std::string& path) { return parse_dfa(read_input(path)); }

// Writes to -o when given, otherwise to the command's output stream.
void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(out_path, std::ios::binary);
  if (!file) throw InputError("cannot write '" + out_path + "'");
  file << text;
}

struct Options {
  std::string input;
  std::string output;
  bool json = false;
  bool dot = false;
  std::size_t limit = kDefaultSemigroupLimit;
  std::size_t max_k = 32;
  std::size_t states = 0;
  std::size_t alphabet_size = 0;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::size_t max_states = 3;
  std::size_t samples = 2000;
  bool inject_fault = false;
};

int cmd_classify(const Options& o, std::ostream& out) {
  const auto report = classify(load_dfa(o.input));
  emit(o.json ? class_report_json(report) : class_report_text(report), o.output, out);
  return kExitOk;
}

int cmd_minimize(const Options& o, std::ostream& out) {
  emit(serialize_dfa(minimize(load_dfa(o.input)).reduced), o.output, out);
  return kExitOk;
}

int cmd_components(const Options& o, std::ostream& out) {
  const Dfa dfa = load_dfa(o.input);
  const auto cg = component_graph(dfa);
  if (o.dot) {
    emit(component_graph_dot(dfa, cg), o.output, out);
    return kExitOk;
  }
  std::ostringstream text;
  for (ComponentId c = 0; c < cg.component_count; ++c) {
    text << "component " << c << ": {";
    for (std::size_t i = 0; i < cg.members[c].size(); ++i) text << (i ? "," : "") << cg.members[c][i];
    text << "}" << (cg.is_trivial[c] ? " trivial" : "") << (cg.is_sink[c] ? " sink" : "") << '\n';
  }
  emit(text.str(), o.output, out);
  return kExitOk;
}

int cmd_semigroup(const Options& o, std::ostream& out) {
  const Dfa dfa = load_dfa(o.input);
  const auto sg = enumerate_semigroup(dfa, o.limit);
  std::ostringstream text;
  text << "|T| = " << sg.size() << '\n';
  bool unique_fixed_points = true;
  for (std::size_t i = 0; i < sg.size(); ++i) {
    const auto fixed = fixed_points(sg.elements[i]).size();
    unique_fixed_points = unique_fixed_points && fixed == 1;
    text << image_list_name(sg.elements[i]) << "  word=\"" << format_word(dfa, sg.shortest_word[i])
         << "\"  fixed_points=" << fixed
         << "  non_permutational=" << (is_non_permutational(sg.elements[i]) ? "yes" : "no") << '\n';
  }
  if (unique_fixed_points) {
    const auto partition = fixed_point_partition(sg);
    text << "|T_p|:";
    for (State p = 0; p < partition.parts.size(); ++p) text << ' ' << p << '=' << partition.parts[p].size();
    text << '\n';
  }
  emit(text.str(), o.output, out);
  return kExitOk;
}

int cmd_index(const Options& o, std::ostream& out) {
  const Dfa dfa = load_dfa(o.input);
  std::ostringstream text;
  for (ClassKind kind :
       {ClassKind::Definite, ClassKind::ReverseDefinite, ClassKind::GeneralizedDefinite}) {
    const auto report = definiteness_index(dfa, kind, o.max_k);
    if (o.json) {
      text << index_report_json(report) << '\n';
    } else if (report.minimal_k) {
      text << kind_name(kind) << ": k = " << *report.minimal_k << '\n';
    } else {
      text << kind_name(kind) << ": none up to k = " << report.searched_up_to << '\n';
    }
  }
  emit(text.str(), o.output, out);
  return kExitOk;
}

int cmd_definitize(const Options& o, std::ostream& out) {
  const Dfa reduced = minimize(load_dfa(o.input)).reduced;
  emit(serialize_dfa(definitize(reduced, o.limit)), o.output, out);
  return kExitOk;
}

int cmd_dagreach(const Options& o, std::ostream& out, std::ostream& err) {
  const Dag g = parse_dag(read_input(o.input));
  const Dfa a = reduce_dag_reach(g);
  const bool reachable = dag_reachable(g, 1, g.vertex_count());
  const bool gd = classify(a).is_generalized_definite;
  const bool consistent = reachable != gd;
  out << "reachable: " << (reachable ? "yes" : "no")
      << "; generalized definite: " << (gd ? "yes" : "no") << "; "
      << (consistent ? "consistent" : "INCONSISTENT") << '\n';
  if (!consistent) {
    err << "reachability and classification disagree\n";
    return kExitSelftestFailure;
  }
  return kExitOk;
}

int cmd_gen(const Options& o, std::ostream& out) {
  if (o.states == 0 || o.alphabet_size == 0) {
    throw PreconditionError("gen: state count and alphabet size must be positive");
  }
  std::ostringstream text;
  const auto dfas = random_dfas(o.states, o.alphabet_size, o.seed, o.count);
  for (std::size_t i = 0; i < dfas.size(); ++i) {
    if (i) text << '\n';
    text << serialize_dfa(dfas[i]);
  }
  emit(text.str(), o.output, out);
  return kExitOk;
}

int cmd_selftest(const Options& o, std::ostream& out) {
  SelftestOptions options;
  options.max_states = o.max_states;
  options.samples_at_four = o.samples;
  options.seed = o.seed;
  options.inject_fault = o.inject_fault;
  const auto results = run_selftest(options, out);
  const PropertyResult* first_failure = nullptr;
  for (const auto& r : results) {
    out << r.name << ": " << r.checked << " checked, " << r.failures << " failed\n";
    if (r.failures && !first_failure) first_failure = &r;
  }
  if (!first_failure) {
    out << "all properties hold\n";
    return kExitOk;
  }
  out << "first counterexample (" << first_failure->name << "): " << first_failure->detail << '\n'
      << serialize_dfa(*first_failure->counterexample);
  return kExitSelftestFailure;
}

int cmd_search(const Options& o, std::ostream& out) {
  const auto result = search_max_syntactic_complexity(o.states, o.limit);
  std::ostringstream text;
  text << "max |T| = " << result.max_size << " (" << result.semigroups_explored
       << " semigroups explored)\n";
  if (result.witness) text << serialize_dfa(*result.witness);
  emit(text.str(), o.output, out);
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Classify regular languages into the (generalized) definite classes"};
  app.require_subcommand(1);
  Options o;

  auto with_input = [&](CLI::App* sub) {
    sub->add_option("file", o.input, "DfaFile path, or - for standard input")->required();
    return sub;
  };
  auto with_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Write to this file instead of standard output");
    return sub;
  };
  auto with_limit = [&](CLI::App* sub) {
    sub->add_option("--limit", o.limit, "Semigroup size limit")->check(CLI::PositiveNumber);
    return sub;
  };

  auto* classify_cmd = with_output(with_input(app.add_subcommand("classify", "Classify the language")));
  classify_cmd->add_flag("--json", o.json, "JSON report");
  auto* minimize_cmd = with_output(with_input(app.add_subcommand("minimize", "Write the minimal automaton")));
  auto* components_cmd =
      with_output(with_input(app.add_subcommand("components", "Strongly connected components")));
  components_cmd->add_flag("--dot", o.dot, "Graphviz output");
  auto* semigroup_cmd = with_limit(
      with_output(with_input(app.add_subcommand("semigroup", "Transition semigroup summary"))));
  auto* index_cmd = with_output(with_input(app.add_subcommand("index", "Least definiteness indices")));
  index_cmd->add_option("--max-k", o.max_k, "Largest k tried");
  index_cmd->add_flag("--json", o.json, "One JSON object per kind");
  auto* definitize_cmd = with_limit(with_output(
      with_input(app.add_subcommand("definitize", "Definite automaton with at least as large a semigroup"))));
  auto* dagreach_cmd = app.add_subcommand("dagreach", "Check the reachability reduction on a DagFile");
  dagreach_cmd->add_option("file", o.input, "DagFile path, or - for standard input")->required();
  auto* gen_cmd = with_output(app.add_subcommand("gen", "Reproducible random automata"));
  gen_cmd->add_option("states", o.states, "State count")->required();
  gen_cmd->add_option("alphabet_size", o.alphabet_size, "Alphabet size")->required();
  gen_cmd->add_option("--seed", o.seed, "Generator seed");
  gen_cmd->add_option("--count", o.count, "Number of automata");
  auto* selftest_cmd = app.add_subcommand("selftest", "Run the agreement suite");
  selftest_cmd->add_option("--max-states", o.max_states, "Largest state count (1..4)");
  selftest_cmd->add_option("--samples", o.samples, "Random automata at four states");
  selftest_cmd->add_option("--seed", o.seed, "Seed for the four-state sample");
  selftest_cmd->add_flag("--inject-fault", o.inject_fault, "Negate one verdict to exercise failure reporting");
  auto* search_cmd = with_limit(
      with_output(app.add_subcommand("search", "Largest semigroup of a reduced definite automaton")));
  search_cmd->add_option("states", o.states, "State count (1..4)")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInput;
  }

  try {
    if (*classify_cmd) return cmd_classify(o, out);
    if (*minimize_cmd) return cmd_minimize(o, out);
    if (*components_cmd) return cmd_components(o, out);
    if (*semigroup_cmd) return cmd_semigroup(o, out);
    if (*index_cmd) return cmd_index(o, out);
    if (*definitize_cmd) return cmd_definitize(o, out);
    if (*dagreach_cmd) return cmd_dagreach(o, out, err);
    if (*gen_cmd) return cmd_gen(o, out);
    if (*selftest_cmd) return cmd_selftest(o, out);
    if (*search_cmd) return cmd_search(o, out);
  } catch (const InputError& e) {
    err << "input error: " << e.what() << '\n';
    return kExitInput;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitResource;
  } catch (const PreconditionError& e) {
    err << "precondition violated: " << e.what() << '\n';
    return kExitPrecondition;
  } catch (const Error& e) {
    err << "internal error: " << e.what() << '\n';
    return kExitSelftestFailure;
  }
  return kExitInput;
}

}  // namespace gendef
