#include "gendef/selftest.hpp"

#include <algorithm>

#include "gendef/constructions.hpp"
#include "gendef/errors.hpp"
#include "gendef/generators.hpp"
#include "gendef/io.hpp"
#include "gendef/minimization.hpp"
#include "gendef/oracle.hpp"
#include "gendef/patterns.hpp"
#include "gendef/semigroup.hpp"

namespace gendef {

namespace {

enum Property : std::size_t {
  kGd,
  kDefinite,
  kFiniteCofinite,
  kReverseDefinite,
  kWitnessValidity,
  kPgCounterexamples,
  kDefinitize,
  kFixedPoints,
  kRoundTrip,
  kMonotonicity,
  kWordLevel,
  kPropertyCount
};

constexpr std::size_t kMonotonicityDepth = 8;
constexpr std::size_t kWordLevelMaxK = 2;
constexpr std::size_t kWordLevelMaxLen = 3;
constexpr std::size_t kCounterexampleMaxK = 4;

const char* yes(bool b) { return b ? "yes" : "no"; }

std::string verdicts(std::initializer_list<std::pair<const char*, bool>> items) {
  std::string out;
  for (const auto& [name, value] : items) {
    if (!out.empty()) out += ", ";
    out += std::string(name) + "=" + yes(value);
  }
  return out;
}

bool all_equal(std::initializer_list<bool> values) {
  return std::all_of(values.begin(), values.end(), [&](bool v) { return v == *values.begin(); });
}

}  // namespace

const std::vector<std::string>& property_names() {
  static const std::vector<std::string> names{
      "gd_characterization", "definite_characterization", "finite_cofinite",
      "reverse_definite",    "witness_validity",          "pg_counterexamples",
      "definitize",          "fixed_points",              "round_trip",
      "index_monotonicity",  "word_level_soundness"};
  return names;
}

PropertyChecker::PropertyChecker(CheckOptions options)
    : options_(std::move(options)), enabled_(kPropertyCount, options_.only.empty()) {
  for (std::size_t i = 0; i < kPropertyCount; ++i) results_.push_back({property_names()[i], 0, 0, std::nullopt, {}});
  for (const auto& name : options_.only) {
    auto it = std::find(property_names().begin(), property_names().end(), name);
    if (it == property_names().end()) throw PreconditionError("unknown property '" + name + "'");
    enabled_[it - property_names().begin()] = true;
  }
}

const PropertyResult& PropertyChecker::result(const std::string& name) const {
  for (const auto& r : results_) {
    if (r.name == name) return r;
  }
  throw PreconditionError("unknown property '" + name + "'");
}

bool PropertyChecker::ok() const {
  return std::all_of(results_.begin(), results_.end(), [](const auto& r) { return r.failures == 0; });
}

void PropertyChecker::record(std::size_t index, bool passed, const Dfa& dfa,
                             const std::string& detail) {
  auto& r = results_[index];
  ++r.checked;
  if (passed) return;
  if (r.failures++ == 0) {
    r.counterexample = dfa;
    r.detail = detail;
  }
}

void PropertyChecker::check(const Dfa& dfa) {
  const ClassReport report = classify(dfa);
  const Dfa& m = report.reduced;
  const std::size_t n = m.state_count();
  const std::size_t max_k = options_.max_k;

  if (enabled(kGd)) {
    bool pattern = !report.witness(PatternId::Pg).has_value();
    if (options_.inject_fault) pattern = !pattern;
    const bool semigroup = check_condition_ii(m);
    const bool dp = definiteness_index(dfa, ClassKind::GeneralizedDefinite, max_k).minimal_k.has_value();
    record(kGd, all_equal({pattern, semigroup, dp}), dfa,
           verdicts({{"avoids Pg", pattern}, {"semigroup condition", semigroup}, {"index found", dp}}));
  }

  if (enabled(kDefinite)) {
    const bool pattern = !report.witness(PatternId::Pd).has_value();
    const bool iii = check_definite_condition_iii(m);
    const bool iv = check_definite_condition_iv(m);
    const bool dp = definiteness_index(dfa, ClassKind::Definite, max_k).minimal_k.has_value();
    record(kDefinite, all_equal({pattern, iii, iv, dp}), dfa,
           verdicts({{"avoids Pd", pattern},
                     {"all non-permutational", iii},
                     {"single sink condition", iv},
                     {"index found", dp}}));
  }

  if (enabled(kFiniteCofinite)) {
    const bool finite = is_finite_language(dfa);
    const bool cofinite = is_finite_language(complement(dfa));
    const bool pattern = !report.witness(PatternId::Pf).has_value();
    const bool passed = pattern == (finite || cofinite) && report.is_finite == finite &&
                        report.is_cofinite == cofinite;
    record(kFiniteCofinite, passed, dfa,
           verdicts({{"avoids Pf", pattern},
                     {"finite", finite},
                     {"cofinite", cofinite},
                     {"reported finite", report.is_finite},
                     {"reported cofinite", report.is_cofinite}}));
  }

  if (enabled(kReverseDefinite)) {
    const bool pattern = !report.witness(PatternId::Pr).has_value();
    const bool dp = definiteness_index(dfa, ClassKind::ReverseDefinite, max_k).minimal_k.has_value();
    record(kReverseDefinite, pattern == dp, dfa,
           verdicts({{"avoids Pr", pattern}, {"index found", dp}}));
  }

  if (enabled(kWitnessValidity)) {
    bool passed = true;
    std::string detail;
    for (PatternId id : kAllPatterns) {
      const auto& w = report.witness(id);
      if (w && (w->pattern != id || !validate_witness(m, *w))) {
        passed = false;
        detail = std::string(pattern_name(id)) + " witness does not satisfy its equations";
      }
    }
    record(kWitnessValidity, passed, dfa, detail);
  }

  if (enabled(kPgCounterexamples)) {
    if (const auto& w = report.witness(PatternId::Pg)) {
      bool passed = true;
      std::string detail;
      for (std::size_t k = 1; k <= kCounterexampleMaxK && passed; ++k) {
        auto [u, v] = non_k_gd_counterexample(m, *w, k);
        const bool same_ends = u.size() >= k && v.size() >= k &&
                               std::equal(u.begin(), u.begin() + k, v.begin()) &&
                               std::equal(u.end() - k, u.end(), v.end() - k);
        if (!same_ends || accepts(dfa, u) == accepts(dfa, v)) {
          passed = false;
          detail = "k=" + std::to_string(k) + ": \"" + format_word(dfa, u) + "\" vs \"" +
                   format_word(dfa, v) + "\"";
        }
      }
      record(kPgCounterexamples, passed, dfa, detail);
    }
  }

  if (enabled(kDefinitize) && report.is_generalized_definite) {
    const auto sp = sink_partition(m);
    if (sp.sinks.back().size() > 1) {
      bool passed = true;
      std::string detail;
      try {
        const Dfa b = definitize(m);
        const std::size_t tb = enumerate_semigroup(b).size();
        const std::size_t ta = enumerate_semigroup(m).size();
        if (!is_reduced(b) || admits_pd(b) || tb < ta) {
          passed = false;
          detail = "|T(B)| = " + std::to_string(tb) + ", |T(A)| = " + std::to_string(ta);
        }
      } catch (const InternalError& e) {
        passed = false;
        detail = e.what();
      }
      record(kDefinitize, passed, dfa, detail);
    }
  }

  if (enabled(kFixedPoints) && report.is_definite) {
    const auto sg = enumerate_semigroup(m);
    bool passed = true;
    std::string detail;
    for (const auto& t : sg.elements) {
      if (fixed_points(t).size() != 1) {
        passed = false;
        detail = "element " + image_list_name(t) + " does not have exactly one fixed point";
      }
    }
    if (passed) {
      const std::uint64_t bound_p = checked_factorial(n - 1);
      const auto partition = fixed_point_partition(sg);
      for (State p = 0; p < n; ++p) {
        const auto& part = partition.parts[p];
        if (part.size() > bound_p) {
          passed = false;
          detail = "|T_" + std::to_string(p) + "| = " + std::to_string(part.size());
        }
        if (part.empty()) continue;
        const auto order = acyclic_order_for(sg, p);
        std::vector<std::size_t> rank(n);
        for (std::size_t i = 0; i < order.size(); ++i) rank[order[i]] = i;
        if (order.back() != p) passed = false;
        for (std::size_t idx : part) {
          for (State q = 0; q < n; ++q) {
            if (q != p && rank[q] >= rank[sg.elements[idx][q]]) {
              passed = false;
              detail = "order for " + std::to_string(p) + " not increased by " +
                       image_list_name(sg.elements[idx]);
            }
          }
        }
      }
      if (sg.size() > checked_factorial(n)) {
        passed = false;
        detail = "|T| = " + std::to_string(sg.size());
      }
    }
    record(kFixedPoints, passed, dfa, detail);
  }

  if (enabled(kRoundTrip)) {
    const std::string text = serialize_dfa(dfa);
    record(kRoundTrip, parse_dfa(text) == dfa && serialize_dfa(parse_dfa(text)) == text, dfa,
           "serialization does not round-trip");
  }

  if (enabled(kMonotonicity)) {
    bool passed = true;
    std::string detail;
    for (ClassKind kind :
         {ClassKind::Definite, ClassKind::ReverseDefinite, ClassKind::GeneralizedDefinite}) {
      bool previous = false;
      for (std::size_t k = 0; k < kMonotonicityDepth; ++k) {
        const bool now = is_k(dfa, kind, k);
        if (previous && !now) {
          passed = false;
          detail = std::string(kind_name(kind)) + " holds at " + std::to_string(k - 1) +
                   " but not at " + std::to_string(k);
        }
        previous = now;
      }
    }
    record(kMonotonicity, passed, dfa, detail);
  }

  if (enabled(kWordLevel)) {
    bool passed = true;
    std::string detail;
    for (ClassKind kind :
         {ClassKind::Definite, ClassKind::ReverseDefinite, ClassKind::GeneralizedDefinite}) {
      for (std::size_t k = 0; k <= kWordLevelMaxK; ++k) {
        const bool dp = is_k(dfa, kind, k);
        const bool words = word_level_check(dfa, kind, k, kWordLevelMaxLen);
        if (words < dp) {
          passed = false;
          detail = std::string(kind_name(kind)) + " at k=" + std::to_string(k) +
                   ": word check fails where the state check holds";
        }
      }
    }
    record(kWordLevel, passed, dfa, detail);
  }
}

std::vector<PropertyResult> run_selftest(const SelftestOptions& options, std::ostream& log) {
  if (options.max_states == 0 || options.max_states > 4) {
    throw PreconditionError("selftest: max_states must lie in 1..4");
  }
  PropertyChecker checker(CheckOptions{32, {}, options.inject_fault});
  std::size_t total = 0;
  for (std::size_t n = 1; n <= std::min<std::size_t>(options.max_states, 3); ++n) {
    for (std::size_t k = 1; k <= 2; ++k) {
      DfaEnumeration all(n, k);
      log << "enumerating n=" << n << " letters=" << k << ": " << all.size() << " automata\n";
      all.for_each([&](const Dfa& d) { checker.check(d); });
      total += all.size();
    }
  }
  if (options.max_states == 4) {
    log << "sampling n=4 letters=2: " << options.samples_at_four << " automata\n";
    for (const auto& d : random_dfas(4, 2, options.seed, options.samples_at_four)) {
      Dfa started(d.alphabet(), 4, std::vector<State>(d.table().begin(), d.table().end()), 0,
                  d.finals());
      checker.check(started);
    }
    total += options.samples_at_four;
  }
  log << "automata checked: " << total << '\n';
  return checker.results();
}

}  // namespace gendef
