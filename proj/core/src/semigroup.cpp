#include "gendef/semigroup.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <string>
#include <unordered_map>

#include "gendef/errors.hpp"

namespace gendef {

TransitionSemigroup enumerate_semigroup(const Dfa& dfa, std::size_t limit) {
  if (limit == 0) throw PreconditionError("semigroup limit must be at least 1");
  const std::size_t k = dfa.alphabet_size();
  TransitionSemigroup sg;
  sg.state_count = dfa.state_count();
  sg.generator_count = k;

  std::vector<Transformation> letters;
  letters.reserve(k);
  for (Letter a = 0; a < k; ++a) letters.push_back(transformation_of(dfa, Word{a}));

  std::unordered_map<Transformation, std::size_t, TransformationHash> index;
  auto add = [&](Transformation t, Word w) {
    if (index.contains(t)) return;
    if (sg.elements.size() >= limit) {
      throw ResourceError("transition semigroup exceeds limit of " + std::to_string(limit) +
                              " elements",
                          limit + 1);
    }
    index.emplace(t, sg.elements.size());
    sg.elements.push_back(std::move(t));
    sg.shortest_word.push_back(std::move(w));
  };

  for (Letter a = 0; a < k; ++a) add(letters[a], Word{a});
  for (std::size_t i = 0; i < sg.elements.size(); ++i) {
    for (Letter a = 0; a < k; ++a) {
      Word w = sg.shortest_word[i];
      w.push_back(a);
      add(compose(sg.elements[i], letters[a]), std::move(w));
    }
  }
  return sg;
}

Transformation power(const Transformation& t, std::uint64_t e) {
  Transformation result = Transformation::identity(t.size());
  Transformation base = t;
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    e >>= 1;
    if (e) base = compose(base, base);
  }
  return result;
}

bool is_non_permutational(const Transformation& t) {
  if (t.size() == 0) return true;
  Transformation p = power(t, t.size());
  auto img = p.image();
  return std::all_of(img.begin(), img.end(), [&](State v) { return v == img[0]; });
}

bool is_idempotent(const Transformation& t) { return compose(t, t) == t; }

std::vector<State> fixed_points(const Transformation& t) {
  std::vector<State> out;
  for (State q = 0; q < t.size(); ++q) {
    if (t[q] == q) out.push_back(q);
  }
  return out;
}

bool is_non_permutational_on(const Transformation& t, std::span<const State> subset) {
  if (subset.empty()) return true;
  std::optional<State> image;
  for (State q : subset) {
    State r = q;
    for (std::size_t i = 0; i < subset.size(); ++i) r = t[r];
    if (image && *image != r) return false;
    image = r;
  }
  return true;
}

FixedPointPartition fixed_point_partition(const TransitionSemigroup& sg) {
  FixedPointPartition fp;
  fp.parts.resize(sg.state_count);
  std::unordered_map<Transformation, State, TransformationHash> fix_of;
  for (std::size_t i = 0; i < sg.elements.size(); ++i) {
    auto fixed = fixed_points(sg.elements[i]);
    if (fixed.size() != 1) {
      throw PreconditionError("not definite: element " + std::to_string(i) + " has " +
                              std::to_string(fixed.size()) + " fixed points");
    }
    fp.parts[fixed[0]].push_back(i);
    fix_of.emplace(sg.elements[i], fixed[0]);
  }
  for (State p = 0; p < fp.parts.size(); ++p) {
    for (std::size_t i : fp.parts[p]) {
      for (std::size_t j : fp.parts[p]) {
        auto it = fix_of.find(compose(sg.elements[i], sg.elements[j]));
        if (it == fix_of.end() || it->second != p) {
          throw InternalError("T_" + std::to_string(p) + " is not closed under composition");
        }
      }
    }
  }
  return fp;
}

std::vector<State> acyclic_order_for(const TransitionSemigroup& sg, State p) {
  const std::size_t n = sg.state_count;
  if (p >= n) throw PreconditionError("state out of range");
  std::vector<const Transformation*> part;
  for (const auto& t : sg.elements) {
    auto fixed = fixed_points(t);
    if (fixed.size() != 1) {
      throw PreconditionError("not definite: an element has " + std::to_string(fixed.size()) +
                              " fixed points");
    }
    if (fixed[0] == p) part.push_back(&t);
  }
  if (part.empty()) throw PreconditionError("T_" + std::to_string(p) + " is empty");

  // G_p: q -> q·t for t in T_p and q != p; p has no out-edges.
  std::vector<std::vector<State>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const Transformation* t : part) {
    for (State q = 0; q < n; ++q) {
      if (q == p) continue;
      succ[q].push_back((*t)[q]);
      ++indegree[(*t)[q]];
    }
  }
  // Kahn's algorithm, smallest available state first; p is held back and
  // appended last.
  std::priority_queue<State, std::vector<State>, std::greater<>> ready;
  for (State q = 0; q < n; ++q) {
    if (q != p && indegree[q] == 0) ready.push(q);
  }
  std::vector<State> order;
  while (!ready.empty()) {
    State q = ready.top();
    ready.pop();
    order.push_back(q);
    for (State r : succ[q]) {
      if (--indegree[r] == 0 && r != p) ready.push(r);
    }
  }
  if (order.size() != n - 1) throw InternalError("G_" + std::to_string(p) + " has a cycle");
  order.push_back(p);
  return order;
}

std::optional<std::pair<std::size_t, std::size_t>> find_idempotent_factor(
    std::span<const Transformation> seq) {
  if (seq.empty()) throw PreconditionError("find_idempotent_factor: empty sequence");
  for (const auto& f : seq) {
    if (f.size() != seq.front().size()) throw DimensionError("find_idempotent_factor: mixed sizes");
  }
  for (std::size_t j = 0; j < seq.size(); ++j) {
    Transformation product = seq[j];
    for (std::size_t k = j; k < seq.size(); ++k) {
      if (k > j) product = compose(product, seq[k]);
      if (is_idempotent(product)) return std::pair{j + 1, k + 1};
    }
  }
  return std::nullopt;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw ResourceError(std::string(what) + ": 64-bit overflow");
  return r;
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b, const char* what) {
  std::uint64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw ResourceError(std::string(what) + ": 64-bit overflow");
  return r;
}

}  // namespace

std::uint64_t ramsey_triangle_bound(std::uint64_t colours) {
  if (colours == 0) throw PreconditionError("ramsey_triangle_bound: need at least one colour");
  std::uint64_t r = 3;
  for (std::uint64_t c = 2; c <= colours; ++c) {
    r = checked_add(checked_mul(c, r - 1, "ramsey_triangle_bound"), 2, "ramsey_triangle_bound");
  }
  return r;
}

std::uint64_t m_bound(std::uint64_t set_size) {
  if (set_size == 0) throw PreconditionError("m_bound: set size must be positive");
  std::uint64_t colours = 1;
  for (std::uint64_t i = 0; i < set_size; ++i) colours = checked_mul(colours, set_size, "m_bound");
  return ramsey_triangle_bound(colours);
}

std::uint64_t checked_factorial(std::uint64_t n) {
  std::uint64_t r = 1;
  for (std::uint64_t i = 2; i <= n; ++i) r = checked_mul(r, i, "factorial");
  return r;
}

std::string image_list_name(const Transformation& t) {
  std::string out;
  for (std::size_t q = 0; q < t.size(); ++q) {
    if (q) out += ',';
    out += std::to_string(t[static_cast<State>(q)]);
  }
  return out;
}

}  // namespace gendef
