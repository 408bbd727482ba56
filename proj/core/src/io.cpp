#include "gendef/io.hpp"

#include <charconv>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "gendef/errors.hpp"

namespace gendef {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
      std::size_t j = i;
      while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
      if (j > i) parsed.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!parsed.tokens.empty()) lines.push_back(std::move(parsed));
    if (eol == text.size()) break;
    pos = eol + 1;
  }
  return lines;
}

std::size_t parse_number(std::string_view token, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size()) {
    throw InputError(std::string("expected a non-negative integer for ") + what + ", got '" +
                         std::string(token) + "'",
                     line);
  }
  return value;
}

// Walks the non-blank lines in order, enforcing the fixed header sequence.
class Cursor {
public:
  explicit Cursor(std::vector<Line> lines, std::size_t total_lines)
      : lines_(std::move(lines)), total_lines_(total_lines) {}

  bool done() const { return next_ >= lines_.size(); }

  const Line& expect(std::string_view keyword, std::size_t min_args, std::size_t max_args) {
    if (done()) throw InputError("missing '" + std::string(keyword) + "' line", total_lines_);
    const Line& line = lines_[next_++];
    if (line.tokens[0] != keyword) {
      throw InputError("expected '" + std::string(keyword) + "', got '" +
                           std::string(line.tokens[0]) + "'",
                       line.number);
    }
    const std::size_t args = line.tokens.size() - 1;
    if (args < min_args || args > max_args) {
      throw InputError("wrong number of arguments for '" + std::string(keyword) + "'",
                       line.number);
    }
    return line;
  }

  std::size_t total_lines() const { return total_lines_; }

private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
  std::size_t total_lines_;
};

std::size_t count_lines(std::string_view text) {
  std::size_t n = 1;
  for (char c : text) n += c == '\n';
  if (!text.empty() && text.back() == '\n') --n;
  return n;
}

constexpr std::size_t kUnbounded = static_cast<std::size_t>(-1);

}  // namespace

Dfa parse_dfa(std::string_view text) {
  Cursor cur(tokenize(text), count_lines(text));
  cur.expect("dfa", 0, 0);

  const Line& states_line = cur.expect("states", 1, 1);
  const std::size_t n = parse_number(states_line.tokens[1], states_line.number, "states");
  if (n == 0) throw InputError("state count must be positive", states_line.number);

  const Line& alpha_line = cur.expect("alphabet", 1, kUnbounded);
  std::vector<std::string> alphabet;
  std::map<std::string_view, Letter> letter_of;
  for (std::size_t i = 1; i < alpha_line.tokens.size(); ++i) {
    auto name = alpha_line.tokens[i];
    if (!letter_of.emplace(name, static_cast<Letter>(alphabet.size())).second) {
      throw InputError("duplicate letter '" + std::string(name) + "'", alpha_line.number);
    }
    alphabet.emplace_back(name);
  }
  const std::size_t k = alphabet.size();

  auto state = [&](std::string_view token, std::size_t line) {
    std::size_t q = parse_number(token, line, "state");
    if (q >= n) throw InputError("state " + std::to_string(q) + " out of range", line);
    return static_cast<State>(q);
  };

  const Line& start_line = cur.expect("start", 1, 1);
  const State start = state(start_line.tokens[1], start_line.number);

  const Line& final_line = cur.expect("final", 0, kUnbounded);
  std::vector<State> finals;
  std::set<State> seen_final;
  for (std::size_t i = 1; i < final_line.tokens.size(); ++i) {
    State q = state(final_line.tokens[i], final_line.number);
    if (!seen_final.insert(q).second) {
      throw InputError("state " + std::to_string(q) + " listed twice as final", final_line.number);
    }
    finals.push_back(q);
  }

  constexpr State kMissing = static_cast<State>(-1);
  std::vector<State> delta(n * k, kMissing);
  std::size_t filled = 0;
  while (!cur.done()) {
    const Line& t = cur.expect("trans", 3, 3);
    State from = state(t.tokens[1], t.number);
    auto letter = letter_of.find(t.tokens[2]);
    if (letter == letter_of.end()) {
      throw InputError("unknown letter '" + std::string(t.tokens[2]) + "'", t.number);
    }
    State to = state(t.tokens[3], t.number);
    State& slot = delta[from * k + letter->second];
    if (slot != kMissing) {
      throw InputError("duplicate transition for (" + std::to_string(from) + ", " +
                           std::string(t.tokens[2]) + ")",
                       t.number);
    }
    slot = to;
    ++filled;
  }
  if (filled != n * k) {
    for (std::size_t i = 0; i < delta.size(); ++i) {
      if (delta[i] == kMissing) {
        throw InputError("missing transition for (" + std::to_string(i / k) + ", " +
                             alphabet[i % k] + "); automata must be complete",
                         cur.total_lines());
      }
    }
  }
  return Dfa(std::move(alphabet), n, std::move(delta), start, finals);
}

std::string serialize_dfa(const Dfa& dfa) {
  std::ostringstream out;
  out << "dfa\nstates " << dfa.state_count() << "\nalphabet";
  for (const auto& name : dfa.alphabet()) out << ' ' << name;
  out << "\nstart " << dfa.start() << "\nfinal";
  for (State q : dfa.finals()) out << ' ' << q;
  out << '\n';
  for (State q = 0; q < dfa.state_count(); ++q) {
    for (Letter a = 0; a < dfa.alphabet_size(); ++a) {
      out << "trans " << q << ' ' << dfa.letter_name(a) << ' ' << dfa.next(q, a) << '\n';
    }
  }
  return out.str();
}

Dag parse_dag(std::string_view text) {
  Cursor cur(tokenize(text), count_lines(text));
  cur.expect("dag", 0, 0);
  const Line& v = cur.expect("vertices", 1, 1);
  const std::size_t n = parse_number(v.tokens[1], v.number, "vertices");
  if (n == 0) throw InputError("vertex count must be positive", v.number);
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::set<std::pair<std::size_t, std::size_t>> seen;
  while (!cur.done()) {
    const Line& e = cur.expect("edge", 2, 2);
    std::size_t i = parse_number(e.tokens[1], e.number, "edge source");
    std::size_t j = parse_number(e.tokens[2], e.number, "edge target");
    if (i < 1 || j > n) throw InputError("edge vertex outside 1.." + std::to_string(n), e.number);
    if (i >= j) throw InputError("edge must satisfy i < j", e.number);
    if (!seen.emplace(i, j).second) throw InputError("duplicate edge", e.number);
    edges.emplace_back(i, j);
  }
  return Dag(n, std::move(edges));
}

std::string serialize_dag(const Dag& g) {
  std::ostringstream out;
  out << "dag\nvertices " << g.vertex_count() << '\n';
  for (auto [i, j] : g.edges()) out << "edge " << i << ' ' << j << '\n';
  return out.str();
}

std::string component_graph_dot(const Dfa& dfa, const ComponentGraph& cg) {
  std::ostringstream out;
  out << "digraph components {\n";
  for (ComponentId c = 0; c < cg.component_count; ++c) {
    out << "  c" << c << " [label=\"{";
    for (std::size_t i = 0; i < cg.members[c].size(); ++i) {
      if (i) out << ',';
      out << cg.members[c][i];
    }
    out << '}';
    if (cg.is_trivial[c]) out << " trivial";
    if (cg.is_sink[c]) out << " sink";
    out << "\"];\n";
  }
  // Edges are sorted by (from, letter, to); regroup by (from, to).
  std::map<std::pair<ComponentId, ComponentId>, std::vector<Letter>> grouped;
  for (const auto& e : cg.edges) grouped[{e.from, e.to}].push_back(e.letter);
  for (const auto& [ends, letters] : grouped) {
    out << "  c" << ends.first << " -> c" << ends.second << " [label=\"";
    for (std::size_t i = 0; i < letters.size(); ++i) {
      if (i) out << ',';
      out << dfa.letter_name(letters[i]);
    }
    out << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

namespace {

using ojson = nlohmann::ordered_json;

ojson witness_json(const Dfa& dfa, const std::optional<PatternWitness>& w) {
  if (!w) return nullptr;
  ojson j;
  j["pattern"] = std::string(pattern_name(w->pattern));
  j["p"] = w->p;
  j["q"] = w->q;
  j["x"] = format_word(dfa, w->x);
  j["x_indices"] = w->x;
  if (w->y) {
    j["y"] = format_word(dfa, *w->y);
    j["y_indices"] = *w->y;
  } else {
    j["y"] = nullptr;
    j["y_indices"] = nullptr;
  }
  return j;
}

}  // namespace

std::string class_report_json(const ClassReport& report) {
  ojson j;
  j["reduced_states"] = report.reduced_states();
  j["finite"] = report.is_finite;
  j["cofinite"] = report.is_cofinite;
  j["definite"] = report.is_definite;
  j["reverse_definite"] = report.is_reverse_definite;
  j["generalized_definite"] = report.is_generalized_definite;
  ojson witnesses = ojson::object();
  for (PatternId id : kAllPatterns) {
    witnesses[std::string(pattern_name(id))] = witness_json(report.reduced, report.witness(id));
  }
  j["witnesses"] = std::move(witnesses);
  return j.dump(2) + "\n";
}

std::string class_report_text(const ClassReport& report) {
  auto yes = [](bool b) { return b ? "yes" : "no"; };
  std::ostringstream out;
  out << "reduced states: " << report.reduced_states() << '\n'
      << "finite: " << yes(report.is_finite) << '\n'
      << "cofinite: " << yes(report.is_cofinite) << '\n'
      << "definite: " << yes(report.is_definite) << '\n'
      << "reverse definite: " << yes(report.is_reverse_definite) << '\n'
      << "generalized definite: " << yes(report.is_generalized_definite) << '\n';
  for (PatternId id : kAllPatterns) {
    const auto& w = report.witness(id);
    out << pattern_name(id) << ": ";
    if (!w) {
      out << "avoided\n";
      continue;
    }
    out << "admitted, p=" << w->p << " q=" << w->q << " x=\"" << format_word(report.reduced, w->x)
        << '"';
    if (w->y) out << " y=\"" << format_word(report.reduced, *w->y) << '"';
    out << '\n';
  }
  return out.str();
}

std::string index_report_json(const IndexReport& report) {
  ojson j;
  j["kind"] = std::string(kind_name(report.kind));
  if (report.minimal_k) {
    j["minimal_k"] = *report.minimal_k;
  } else {
    j["minimal_k"] = nullptr;
  }
  j["searched_up_to"] = report.searched_up_to;
  return j.dump();
}

}  // namespace gendef
