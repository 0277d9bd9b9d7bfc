#pragma once

#include <cstdint>
#include <filesystem>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tcayley/perm.hpp"
#include "tcayley/tree.hpp"

namespace tcayley {

inline constexpr int kMaxBfsN = 10;
inline constexpr int kMaxBfsNExtended = 11;

/// Exact distances from the identity to every permutation of {1..n} in the
/// Cayley graph generated by the tree's edges (right multiplication).
/// One byte per permutation, indexed by lexicographic rank.
class DistanceTable {
 public:
  DistanceTable(std::vector<VertexPair> edges, int n, std::vector<std::uint8_t> dist);

  int n() const noexcept { return n_; }
  const std::vector<VertexPair>& edges() const noexcept { return edges_; }
  std::span<const std::uint8_t> raw() const noexcept { return dist_; }

  int distance(const Permutation& p) const;
  int distance_at_rank(std::uint64_t r) const { return dist_[r]; }

 private:
  std::vector<VertexPair> edges_;
  int n_;
  std::vector<std::uint8_t> dist_;
};

/// Breadth-first search from the identity over all n! vertices. Throws
/// TooLarge above kMaxBfsN, or above kMaxBfsNExtended when `allow_n11`.
DistanceTable build_distance_table(const TranspositionTree& t, bool allow_n11 = false);

struct CayleyMetrics {
  int n = 0;
  int diameter = 0;
  /// histogram[d] = number of permutations at distance d; sums to n!.
  std::vector<std::uint64_t> eccentricity_profile;
  /// Smallest-rank permutation at distance `diameter`.
  Permutation peripheral_witness = Permutation::identity(1);
};

CayleyMetrics metrics_of(const DistanceTable& table);
CayleyMetrics bfs_metrics(const TranspositionTree& t, bool allow_n11 = false);

/// Eccentricity of an arbitrary source vertex, by a separate BFS. Used to
/// spot-check vertex transitivity.
int eccentricity_from(const TranspositionTree& t, const Permutation& source);

/// dist(I, p). Uses `table` when given, otherwise a bidirectional search.
int distance(const TranspositionTree& t, const Permutation& p,
             const DistanceTable* table = nullptr);

// Binary cache format, version 1, little-endian:
//   "TCDT" | u32 version | u32 n | u32 edge_count | edge_count * (u8 i, u8 j)
//   | u64 entry_count (= n!) | entry_count * u8 distances in rank order
void save_table(const DistanceTable& table, const std::filesystem::path& path);
/// Throws Io on a missing/corrupt file or a header that does not match `t`.
DistanceTable load_table(const std::filesystem::path& path, const TranspositionTree& t);

/// Cache file name for a tree: n, canonical code and edge list.
std::string cache_file_name(const TranspositionTree& t);

/// Loads from `cache_dir` when present, else runs BFS and writes the file.
DistanceTable cached_distance_table(const TranspositionTree& t,
                                    const std::filesystem::path& cache_dir,
                                    bool allow_n11 = false);

// --- Marker sorting ----------------------------------------------------------

enum class EdgeKind { TypeA, TypeB };

std::string_view to_string(EdgeKind kind);

struct AdmissibleEdge {
  VertexPair edge;
  EdgeKind kind;

  bool operator==(const AdmissibleEdge&) const = default;
};

/// Vertex i holds marker p(i). Type A: swapping across the edge moves both
/// markers strictly closer to home. Type B: one marker is already home and
/// the other marker's path home starts with this edge.
std::optional<EdgeKind> classify_edge(const TranspositionTree& t, const Permutation& p,
                                      VertexPair edge);

/// All admissible edges in lexicographic edge order.
std::vector<AdmissibleEdge> admissible_edges(const TranspositionTree& t, const Permutation& p);

/// Smallest Type A edge if any, else smallest Type B edge. Throws
/// NoAdmissibleEdge when none exists (only for the identity on a tree).
AdmissibleEdge find_admissible_edge(const TranspositionTree& t, const Permutation& p);

/// Picks one of the (nonempty) admissible candidates.
using EdgeSelector = std::function<AdmissibleEdge(
    const TranspositionTree& t, const Permutation& p, std::span<const AdmissibleEdge> candidates)>;

EdgeSelector default_edge_selector();

struct AkTrace {
  Permutation start = Permutation::identity(1);
  std::vector<VertexPair> edges_applied;
  std::vector<EdgeKind> edge_kinds;
  std::vector<int> f_values;  // f_T after each step

  int word_length() const { return static_cast<int>(edges_applied.size()); }
};

AkTrace ak_sort(const TranspositionTree& t, const Permutation& p,
                const EdgeSelector& select = default_edge_selector());

struct ReplayStep {
  VertexPair edge;
  std::optional<EdgeKind> kind;  // nullopt: not admissible here
  int f_after = 0;
};

struct ReplayReport {
  std::vector<ReplayStep> steps;
  bool all_admissible = true;
  bool sorts = false;
  std::optional<std::size_t> first_failure;  // 0-based step index
  std::string message;

  bool valid() const { return all_admissible && sorts; }
};

/// Applies `word` to `p` step by step and checks each step for
/// admissibility. Problems are reported, not thrown; replay stops at the
/// first inadmissible step.
ReplayReport replay_word(const TranspositionTree& t, const Permutation& p,
                         std::span<const VertexPair> word);

/// "(1,2),(1,4)" or "1-2,1-4".
std::vector<VertexPair> parse_word(std::string_view text);

}  // namespace tcayley
