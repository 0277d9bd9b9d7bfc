#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "tcayley/bounds.hpp"
#include "tcayley/cayley.hpp"
#include "tcayley/tree.hpp"

namespace tcayley {

inline constexpr int kReportSchemaVersion = 1;

struct AnalyzeOptions {
  std::optional<std::filesystem::path> cache_dir;
  bool allow_n11 = false;
  PairPolicy policy = lex_policy();
};

/// Everything known about one tree. Optional fields are absent when the
/// computation is out of reach; `skipped` says why.
struct TreeReport {
  explicit TreeReport(TranspositionTree t) : tree(std::move(t)) {}

  TranspositionTree tree;
  std::string canonical_hex;
  int n = 0;
  std::optional<int> exact_diameter;
  std::optional<Permutation> peripheral_witness;
  std::optional<int> f_bound;
  std::optional<Permutation> f_witness;
  BetaSet beta_set;
  AlgAOutcome policy_outcome;
  std::optional<int> gap_f;
  std::optional<int> gap_beta;
  std::optional<bool> sharp;
  std::vector<std::string> skipped;
};

TreeReport analyze_tree(const TranspositionTree& t, const AnalyzeOptions& opts = {});

struct TableRow {
  int n = 0;
  int s_n = 0;
  int h_n = 0;
  int delta_n = 0;
  int gamma_n = 0;
  /// Trees whose gap equals delta_n, by canonical code.
  std::vector<std::string> extremal_trees;
};

/// Aggregates the reports of all trees on one vertex count.
TableRow summarize(int n, const std::vector<TreeReport>& reports);

/// Analyses every non-isomorphic tree on n vertices. Trees are processed
/// on `threads` workers (0: hardware concurrency); output order is by
/// canonical code regardless.
std::vector<TreeReport> analyze_all_trees(int n, const AnalyzeOptions& opts = {},
                                          unsigned threads = 0);

struct CaterpillarReport {
  int n = 0;
  int f_bound = 0;
  int f_formula = 0;  // n(n-1)/2 - 2
  int diameter_upper = 0;  // C(n-1,2) + 1
  int guaranteed_gap = 0;  // f_formula - diameter_upper = n - 4
  std::optional<int> exact_diameter;
  std::optional<int> exact_gap;
  BetaSet beta_set;
};

CaterpillarReport analyze_caterpillar(int n, const AnalyzeOptions& opts = {});

struct ConjectureFinding {
  std::string tree;
  std::string canonical_hex;
  int n = 0;
  std::vector<int> beta_values;
  int f_bound = 0;
  std::optional<int> exact_diameter;
  bool beta_max_differs_from_f = false;
  bool multiple_betas = false;
  /// Values of B that fall below the exact diameter.
  std::vector<int> betas_below_diameter;

  bool flagged() const {
    return beta_max_differs_from_f || multiple_betas || !betas_below_diameter.empty();
  }
};

struct ConjectureReport {
  int n_min = 0;
  int n_max = 0;
  std::vector<ConjectureFinding> trees;  // every tree examined
  int trees_unique_beta = 0;
  int trees_beta_max_below_f = 0;
  int trees_with_beta_below_diameter = 0;
};

ConjectureReport explore_conjectures(int n_min, int n_max, const AnalyzeOptions& opts = {});

struct SortReport {
  AkTrace trace;
  int f_value = 0;
  int exact_distance = 0;
  bool suboptimal = false;
  std::optional<ReplayReport> replay;
};

SortReport sort_permutation(const TranspositionTree& t, const Permutation& p,
                            const std::optional<std::vector<VertexPair>>& replay_word_edges,
                            const AnalyzeOptions& opts = {});

/// Names: theorem6-5v, theorem6-7v, t1, t2, caterpillar-<n>, path-<n>,
/// star-<n>. Anything else is parsed as a tree spec.
TranspositionTree resolve_tree(std::string_view name_or_spec);
std::vector<std::string> fixture_names();

nlohmann::json to_json(const Permutation& p);
nlohmann::json to_json(const TranspositionTree& t);
nlohmann::json to_json(const AlgAOutcome& o);
nlohmann::json to_json(const BetaSet& b);
nlohmann::json to_json(const TreeReport& r);
nlohmann::json to_json(const TableRow& r);
nlohmann::json to_json(const CaterpillarReport& r);
nlohmann::json to_json(const ConjectureReport& r);
nlohmann::json to_json(const SortReport& r);

std::string to_text(const TreeReport& r);
std::string to_text(const std::vector<TableRow>& rows);
std::string to_csv(const std::vector<TableRow>& rows);
std::string to_text(const CaterpillarReport& r);
std::string to_text(const ConjectureReport& r);
std::string to_text(const SortReport& r);

}  // namespace tcayley
