#include <algorithm>
#include <array>
#include <bitset>
#include <numeric>
#include <set>
#include <string>
#include <vector>

#include "gendef/errors.hpp"
#include "gendef/minimization.hpp"
#include "gendef/semigroup.hpp"

namespace gendef {

namespace {

constexpr std::size_t kMaxSearchStates = 4;
constexpr std::size_t kMaxCodes = 256;  // 4^4

using CodeSet = std::bitset<kMaxCodes>;

// Transformations of n ≤ 4 states encoded as base-n integers, entry q
// weighted n^q.
class Codec {
public:
  explicit Codec(std::size_t n) : n_(n) {
    count_ = 1;
    for (std::size_t i = 0; i < n; ++i) count_ *= n;
    maps_.resize(count_);
    for (std::size_t c = 0; c < count_; ++c) {
      std::size_t r = c;
      std::vector<State> image(n);
      for (auto& v : image) {
        v = static_cast<State>(r % n);
        r /= n;
      }
      maps_[c] = Transformation(std::move(image));
    }
    mul_.resize(count_ * count_);
    for (std::size_t a = 0; a < count_; ++a) {
      for (std::size_t b = 0; b < count_; ++b) mul_[a * count_ + b] = encode(compose(maps_[a], maps_[b]));
    }
    non_perm_.resize(count_);
    for (std::size_t c = 0; c < count_; ++c) non_perm_[c] = is_non_permutational(maps_[c]);

    std::vector<State> perm(n);
    std::iota(perm.begin(), perm.end(), State{0});
    do {
      std::vector<std::uint16_t> conj(count_);
      for (std::size_t c = 0; c < count_; ++c) {
        // σ⁻¹ t σ relabels state q as perm[q].
        std::vector<State> image(n);
        for (State q = 0; q < n; ++q) image[perm[q]] = perm[maps_[c][q]];
        conj[c] = encode(Transformation(std::move(image)));
      }
      conjugations_.push_back(std::move(conj));
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::size_t count() const { return count_; }
  const Transformation& map(std::size_t c) const { return maps_[c]; }
  std::uint16_t mul(std::size_t a, std::size_t b) const { return mul_[a * count_ + b]; }
  bool non_permutational(std::size_t c) const { return non_perm_[c]; }

  std::uint16_t encode(const Transformation& t) const {
    std::size_t c = 0;
    for (std::size_t q = n_; q-- > 0;) c = c * n_ + t[static_cast<State>(q)];
    return static_cast<std::uint16_t>(c);
  }

  // Least relabelling of the set, compared as a bit string.
  std::string canonical(const CodeSet& s) const {
    std::string best;
    for (const auto& conj : conjugations_) {
      CodeSet image;
      for (std::size_t c = 0; c < count_; ++c) {
        if (s[c]) image[conj[c]] = true;
      }
      std::string key = image.to_string();
      if (best.empty() || key < best) best = std::move(key);
    }
    return best;
  }

private:
  std::size_t n_;
  std::size_t count_;
  std::vector<Transformation> maps_;
  std::vector<std::uint16_t> mul_;
  std::vector<bool> non_perm_;
  std::vector<std::vector<std::uint16_t>> conjugations_;
};

Dfa automaton_for(const Codec& codec, const std::vector<std::uint16_t>& generators, std::size_t n,
                  State start, std::uint32_t final_mask) {
  std::vector<std::string> alphabet;
  std::vector<State> delta(n * generators.size());
  for (std::size_t a = 0; a < generators.size(); ++a) {
    const auto& t = codec.map(generators[a]);
    alphabet.push_back(image_list_name(t));
    for (State q = 0; q < n; ++q) delta[q * generators.size() + a] = t[q];
  }
  std::vector<State> finals;
  for (State q = 0; q < n; ++q) {
    if (final_mask & (1u << q)) finals.push_back(q);
  }
  return Dfa(std::move(alphabet), n, std::move(delta), start, finals);
}

std::optional<Dfa> reduced_realization(const Codec& codec,
                                       const std::vector<std::uint16_t>& generators,
                                       std::size_t n) {
  for (State s = 0; s < n; ++s) {
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
      Dfa d = automaton_for(codec, generators, n, s, mask);
      if (is_reduced(d)) return d;
    }
  }
  return std::nullopt;
}

class Search {
public:
  Search(std::size_t n, std::size_t limit) : n_(n), limit_(limit), codec_(n) {}

  SyntacticSearchResult run() {
    extend(CodeSet{}, {});
    result_.semigroups_explored = visited_.size();
    return std::move(result_);
  }

private:
  // Closure of s ∪ {g}; false when a permutational element appears.
  bool close(const CodeSet& s, std::uint16_t g, CodeSet& out) const {
    out = s;
    std::vector<std::uint16_t> members;
    for (std::size_t c = 0; c < codec_.count(); ++c) {
      if (s[c]) members.push_back(static_cast<std::uint16_t>(c));
    }
    std::vector<std::uint16_t> fresh{g};
    out[g] = true;
    while (!fresh.empty()) {
      std::uint16_t t = fresh.back();
      fresh.pop_back();
      if (!codec_.non_permutational(t)) return false;
      members.push_back(t);
      if (members.size() > limit_) {
        throw ResourceError("semigroup exceeds limit of " + std::to_string(limit_) + " elements",
                            limit_ + 1);
      }
      for (std::size_t i = 0; i < members.size(); ++i) {
        for (std::uint16_t prod : {codec_.mul(t, members[i]), codec_.mul(members[i], t)}) {
          if (!out[prod]) {
            out[prod] = true;
            fresh.push_back(prod);
          }
        }
      }
    }
    return true;
  }

  void extend(const CodeSet& s, const std::vector<std::uint16_t>& generators) {
    for (std::size_t g = 0; g < codec_.count(); ++g) {
      if (s[g] || !codec_.non_permutational(g)) continue;
      CodeSet next;
      if (!close(s, static_cast<std::uint16_t>(g), next)) continue;
      if (!visited_.insert(codec_.canonical(next)).second) continue;
      auto chain = generators;
      chain.push_back(static_cast<std::uint16_t>(g));
      const std::size_t size = next.count();
      if (size > result_.max_size) {
        if (auto d = reduced_realization(codec_, chain, n_)) {
          result_.max_size = size;
          result_.witness = std::move(d);
        }
      }
      extend(next, chain);
    }
  }

  std::size_t n_;
  std::size_t limit_;
  Codec codec_;
  std::set<std::string> visited_;
  SyntacticSearchResult result_;
};

}  // namespace

SyntacticSearchResult search_max_syntactic_complexity(std::size_t n, std::size_t limit) {
  if (n == 0) throw PreconditionError("search_max_syntactic_complexity: n must be positive");
  if (n > kMaxSearchStates) {
    throw ResourceError("search_max_syntactic_complexity: n = " + std::to_string(n) +
                        " exceeds the supported maximum of " + std::to_string(kMaxSearchStates));
  }
  return Search(n, limit).run();
}

}  // namespace gendef
