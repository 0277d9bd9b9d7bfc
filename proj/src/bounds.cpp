#include "tcayley/bounds.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <unordered_map>

#include "tcayley/error.hpp"

namespace tcayley {

namespace {

void check_full_tree(const TranspositionTree& t, const Permutation& p) {
  if (t.n() != p.size() || t.label_bound() != t.n())
    throw Error(ErrorCode::SizeMismatch, "tree on " + std::to_string(t.n()) +
                                             " vertices vs permutation of size " +
                                             std::to_string(p.size()));
}

}  // namespace

int sum_of_distances(const TranspositionTree& t, const Permutation& p) {
  check_full_tree(t, p);
  int s = 0;
  for (int i = 1; i <= p.size(); ++i) s += t.distance(i, p.one_line()[i - 1]);
  return s;
}

int distance_bound(const TranspositionTree& t, const Permutation& p) {
  return cycle_count(p) - p.size() + sum_of_distances(t, p);
}

DiameterBound diameter_bound(const TranspositionTree& t) {
  const int n = t.n();
  if (n > kMaxExhaustiveN)
    throw Error(ErrorCode::TooLarge, "exhaustive f(T) limited to n <= " +
                                         std::to_string(kMaxExhaustiveN) + ", got " +
                                         std::to_string(n));
  if (t.label_bound() != n)
    throw Error(ErrorCode::SizeMismatch, "diameter_bound needs a tree on {1..n}");

  std::array<std::array<int, kMaxExhaustiveN>, kMaxExhaustiveN> dist{};
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) dist[a][b] = t.distance(a + 1, b + 1);

  std::array<int, kMaxExhaustiveN> perm{};
  for (int i = 0; i < n; ++i) perm[i] = i;
  int best = -1;
  std::array<int, kMaxExhaustiveN> best_perm{};
  // Lexicographic sweep; strict improvement keeps the smallest argmax.
  do {
    int s = 0;
    for (int i = 0; i < n; ++i) s += dist[i][perm[i]];
    unsigned seen = 0;
    int c = 0;
    for (int i = 0; i < n; ++i) {
      if (seen >> i & 1u) continue;
      ++c;
      for (int k = i; !(seen >> k & 1u); k = perm[k]) seen |= 1u << k;
    }
    const int f = c - n + s;
    if (f > best) {
      best = f;
      best_perm = perm;
    }
  } while (std::next_permutation(perm.begin(), perm.begin() + n));

  std::vector<int> one_line(n);
  for (int i = 0; i < n; ++i) one_line[i] = best_perm[i] + 1;
  return {best, Permutation(std::move(one_line))};
}

int star_bound(const TranspositionTree& t, const Permutation& p) {
  check_full_tree(t, p);
  const int center = t.star_center();
  const int n = p.size();
  const int fixed = static_cast<int>(fixed_points(p).size());
  const int r = p(center) == center ? 0 : 2;
  return n + cycle_count(p) - 2 * fixed - r;
}

// --- Algorithm A -----------------------------------------------------------

PairPolicy lex_policy() {
  return [](const TranspositionTree&, std::span<const VertexPair> pairs) { return pairs.front(); };
}

namespace {

PairPolicy next_diameter_policy(bool prefer_max) {
  return [prefer_max](const TranspositionTree& t, std::span<const VertexPair> pairs) {
    VertexPair chosen = pairs.front();
    int chosen_diam = -1;
    for (const auto& pr : pairs) {
      const int d = t.n() >= 3 ? tree_diameter(remove_vertices(t, pr)) : 0;
      const bool better = chosen_diam < 0 || (prefer_max ? d > chosen_diam : d < chosen_diam);
      if (better) {
        chosen = pr;
        chosen_diam = d;
      }
    }
    return chosen;
  };
}

}  // namespace

PairPolicy max_next_diameter_policy() { return next_diameter_policy(true); }
PairPolicy min_next_diameter_policy() { return next_diameter_policy(false); }

PairPolicy policy_by_name(std::string_view name) {
  if (name == "lex") return lex_policy();
  if (name == "maxdiam") return max_next_diameter_policy();
  if (name == "mindiam") return min_next_diameter_policy();
  throw Error(ErrorCode::Parse, "unknown pair policy '" + std::string(name) +
                                    "' (expected lex, maxdiam or mindiam)");
}

AlgAOutcome algorithm_a(const TranspositionTree& t, const PairPolicy& policy) {
  AlgAOutcome out;
  TranspositionTree current = t;
  while (current.n() >= 3) {
    const auto pairs = diametral_pairs(current);
    const VertexPair chosen = policy(current, pairs);
    if (std::find(pairs.begin(), pairs.end(), chosen) == pairs.end())
      throw Error(ErrorCode::OutOfRange, "policy returned non-diametral pair " + to_string(chosen));
    const int d = tree_diameter(current);
    out.pairs.push_back(chosen);
    out.step_diameters.push_back(d);
    out.beta += 2 * d - 1;
    current = remove_vertices(current, chosen);
  }
  out.final_vertices = current.vertices();
  out.beta += out.tail();
  return out;
}

Permutation construction_permutation(const TranspositionTree& t, const AlgAOutcome& outcome) {
  const int n = t.label_bound();
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  auto swap_labels = [&](int a, int b) { std::swap(v[a - 1], v[b - 1]); };
  for (const auto& pr : outcome.pairs) swap_labels(pr.i, pr.j);
  if (outcome.final_vertices.size() == 2)
    swap_labels(outcome.final_vertices[0], outcome.final_vertices[1]);
  return Permutation(std::move(v));
}

namespace {

struct Suffix {
  std::vector<VertexPair> pairs;
  std::vector<int> diameters;
  std::vector<int> final_vertices;
};

using SuffixMap = std::map<int, Suffix>;  // beta contribution -> one witness

class BetaSearch {
 public:
  const SuffixMap& solve(const TranspositionTree& t) {
    std::uint32_t mask = 0;
    for (int v : t.vertices()) mask |= 1u << v;
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;

    SuffixMap result;
    if (t.n() < 3) {
      result.emplace(t.n() - 1, Suffix{{}, {}, t.vertices()});
    } else {
      const int d = tree_diameter(t);
      for (const auto& pr : diametral_pairs(t)) {
        const SuffixMap& rest = solve(remove_vertices(t, pr));
        for (const auto& [b, suf] : rest) {
          const int total = 2 * d - 1 + b;
          if (result.contains(total)) continue;
          Suffix s;
          s.pairs.push_back(pr);
          s.pairs.insert(s.pairs.end(), suf.pairs.begin(), suf.pairs.end());
          s.diameters.push_back(d);
          s.diameters.insert(s.diameters.end(), suf.diameters.begin(), suf.diameters.end());
          s.final_vertices = suf.final_vertices;
          result.emplace(total, std::move(s));
        }
      }
    }
    return memo_.emplace(mask, std::move(result)).first->second;
  }

 private:
  std::unordered_map<std::uint32_t, SuffixMap> memo_;
};

}  // namespace

BetaSet enumerate_beta_set(const TranspositionTree& t) {
  if (t.label_bound() > 20)
    throw Error(ErrorCode::TooLarge, "beta-set search limited to labels <= 20");
  BetaSearch search;
  const SuffixMap& all = search.solve(t);
  BetaSet out;
  for (const auto& [beta, suf] : all) {
    out.values.push_back(beta);
    out.outcomes.emplace(beta, AlgAOutcome{suf.pairs, suf.diameters, suf.final_vertices, beta});
  }
  out.beta_min = out.values.front();
  out.beta_max = out.values.back();
  return out;
}

}  // namespace tcayley
