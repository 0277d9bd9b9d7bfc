#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace tcayley {

/// Unordered pair of distinct vertex labels, stored with i < j.
struct VertexPair {
  int i = 0;
  int j = 0;

  VertexPair() = default;
  VertexPair(int a, int b);

  bool operator==(const VertexPair&) const = default;
  auto operator<=>(const VertexPair&) const = default;
};

std::string to_string(const VertexPair& e);

using CanonicalCode = std::vector<std::uint8_t>;

/// A tree whose edges are read as transpositions.
///
/// Built with `build_tree` on labels {1..n}. `remove_vertices` keeps the
/// original labels, so a tree may live on any subset of {1..label_bound()}.
/// All-pairs hop distances are computed once at construction.
class TranspositionTree {
 public:
  /// Number of vertices currently in the tree.
  int n() const noexcept { return static_cast<int>(vertices_.size()); }
  /// Largest label the tree may refer to (the n it was built with).
  int label_bound() const noexcept { return bound_; }

  /// Sorted ascending.
  const std::vector<int>& vertices() const noexcept { return vertices_; }
  /// Sorted lexicographically.
  const std::vector<VertexPair>& edges() const noexcept { return edges_; }

  bool contains(int v) const noexcept;
  bool has_edge(int a, int b) const noexcept;
  int degree(int v) const;
  /// Sorted ascending.
  const std::vector<int>& neighbors(int v) const;
  bool is_leaf(int v) const { return degree(v) == 1; }

  /// Hop distance between two vertices of the tree.
  int distance(int a, int b) const;

  /// For a vertex v != target, the neighbor of v on the path toward target.
  int next_hop(int v, int target) const;

  bool is_star() const;
  bool is_path() const;
  /// Unique vertex of degree n-1; throws NotAStar otherwise. For n == 2
  /// the smaller label is returned.
  int star_center() const;

 private:
  friend TranspositionTree build_tree(int, std::span<const VertexPair>);
  friend TranspositionTree remove_vertices(const TranspositionTree&, VertexPair);

  TranspositionTree(int bound, std::vector<int> vertices, std::vector<VertexPair> edges);

  int index(int v) const;

  int bound_ = 0;
  std::vector<int> vertices_;
  std::vector<VertexPair> edges_;
  std::vector<std::vector<int>> adj_;  // by label, empty for absent labels
  std::vector<int> dist_;              // (bound_+1)^2, -1 for absent labels
};

/// Validates that `edges` form a spanning tree on {1..n}. Errors:
/// BadLabel, DuplicateEdge, CycleDetected, Disconnected.
TranspositionTree build_tree(int n, std::span<const VertexPair> edges);

int tree_diameter(const TranspositionTree& t);

/// Every pair at distance tree_diameter(t), ordered lexicographically.
std::vector<VertexPair> diametral_pairs(const TranspositionTree& t);

/// Removes two leaves of a tree with at least 3 vertices; the rest stays
/// connected and keeps its labels. Throws NotALeaf if either vertex is
/// absent or not a leaf, OutOfRange if the tree has fewer than 3 vertices.
TranspositionTree remove_vertices(const TranspositionTree& t, VertexPair pair);

/// Center-rooted canonical encoding of the unlabeled shape. Equal codes
/// iff the trees are isomorphic.
CanonicalCode canonical_form(const TranspositionTree& t);
std::string to_hex(const CanonicalCode& code);

/// One representative per isomorphism class of free trees on {1..n},
/// sorted by canonical code. Supported for 2 <= n <= 12.
std::vector<TranspositionTree> enumerate_trees(int n);

/// Tree on {1..n} with the given Prüfer sequence (length n-2).
TranspositionTree tree_from_pruefer(int n, std::span<const int> sequence);

/// Grammar: `[n=<int>;]<i>-<j>(,<i>-<j>)*`. Without `n=`, n is the
/// largest label.
TranspositionTree parse_tree(std::string_view text);

/// `n=<n>; i-j,...` with edges in sorted order.
std::string to_string(const TranspositionTree& t);

TranspositionTree make_path(int n);
/// Star with center 1.
TranspositionTree make_star(int n);
/// Path 1..n-2 with leaves n-1 and n hung on vertex n-2.
TranspositionTree make_caterpillar(int n);

}  // namespace tcayley
