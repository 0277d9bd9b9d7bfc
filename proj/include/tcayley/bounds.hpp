#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tcayley/perm.hpp"
#include "tcayley/tree.hpp"

namespace tcayley {

/// S_T(p) = sum over i of dist_T(i, p(i)). Tree must be on {1..n}.
int sum_of_distances(const TranspositionTree& t, const Permutation& p);

/// f_T(p) = c(p) - n + S_T(p): the per-permutation distance bound.
int distance_bound(const TranspositionTree& t, const Permutation& p);

struct DiameterBound {
  int value = 0;
  /// Lexicographically smallest permutation attaining `value`.
  Permutation witness = Permutation::identity(1);
};

inline constexpr int kMaxExhaustiveN = 10;

/// f(T) = max of f_T over all of S_n by exhaustive sweep. Throws TooLarge
/// above kMaxExhaustiveN.
DiameterBound diameter_bound(const TranspositionTree& t);

/// n + c(p) - 2|Fix(p)| - r(p), where r(p) = 0 if p fixes the star center
/// and 2 otherwise. Throws NotAStar.
int star_bound(const TranspositionTree& t, const Permutation& p);

// --- Algorithm A -----------------------------------------------------------

/// One run of the greedy pair-removal estimate.
struct AlgAOutcome {
  std::vector<VertexPair> pairs;     // chosen at each iteration
  std::vector<int> step_diameters;   // diam of the tree when the pair was chosen
  std::vector<int> final_vertices;   // 1 or 2 vertices left at termination
  int beta = 0;

  int tail() const { return static_cast<int>(final_vertices.size()) - 1; }
};

/// Chooses one pair from the (nonempty, lexicographically sorted)
/// diametral pairs of `t`. Must be deterministic.
using PairPolicy =
    std::function<VertexPair(const TranspositionTree& t, std::span<const VertexPair> pairs)>;

PairPolicy lex_policy();
/// Pick the pair whose removal leaves the largest remaining diameter
/// (ties: lexicographically smallest).
PairPolicy max_next_diameter_policy();
/// As above, smallest remaining diameter.
PairPolicy min_next_diameter_policy();
/// "lex", "maxdiam" or "mindiam".
PairPolicy policy_by_name(std::string_view name);

AlgAOutcome algorithm_a(const TranspositionTree& t, const PairPolicy& policy = lex_policy());

/// The product of an outcome's pairs, plus the final pair when two
/// vertices remain. Its f_T equals the outcome's beta.
Permutation construction_permutation(const TranspositionTree& t, const AlgAOutcome& outcome);

struct BetaSet {
  std::vector<int> values;  // ascending, distinct
  int beta_min = 0;
  int beta_max = 0;
  /// One witness execution per value.
  std::map<int, AlgAOutcome> outcomes;
};

/// All beta values reachable over every choice of diametral pair.
/// Supported for trees on labels up to 20.
BetaSet enumerate_beta_set(const TranspositionTree& t);

}  // namespace tcayley
