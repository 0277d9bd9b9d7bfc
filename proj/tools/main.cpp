// Command-line driver: per-tree analysis, table reproduction, conjecture
// sweeps and marker sorting.

#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "tcayley/error.hpp"
#include "tcayley/report.hpp"

namespace {

using namespace tcayley;

enum class Format { Json, Text, Csv };

Format parse_format(const std::string& s) {
  if (s == "json") return Format::Json;
  if (s == "text") return Format::Text;
  if (s == "csv") return Format::Csv;
  throw Error(ErrorCode::Parse, "unknown format '" + s + "'");
}

void emit(const nlohmann::json& j, const std::string& text, Format f) {
  if (f == Format::Json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Diameters of Cayley graphs generated by transposition trees"};
  app.require_subcommand(1);

  std::string format = "json";
  std::string cache_dir;
  std::string policy = "lex";
  int max_n = kMaxBfsN;
  app.add_option("--format", format, "json|text|csv")->check(CLI::IsMember({"json", "text", "csv"}));
  app.add_option("--cache-dir", cache_dir, "directory for cached BFS distance tables");
  app.add_option("--policy", policy, "Algorithm A pair policy: lex|maxdiam|mindiam")
      ->check(CLI::IsMember({"lex", "maxdiam", "mindiam"}));
  app.add_option("--max-n", max_n, "largest n for exhaustive BFS (10, or 11 to opt in)")
      ->check(CLI::Range(1, kMaxBfsNExtended));

  std::string tree_spec;
  auto* analyze = app.add_subcommand("analyze", "full report for one tree");
  analyze->add_option("tree", tree_spec, "tree spec or fixture name")->required();

  int n_min = 5, n_max = 9;
  auto* table1 = app.add_subcommand("table1", "sharpness/strictness statistics per n");
  table1->add_option("n_min", n_min)->check(CLI::Range(2, 9));
  table1->add_option("n_max", n_max)->check(CLI::Range(2, 9));

  int cat_n = 5;
  auto* caterpillar = app.add_subcommand("caterpillar", "strictness witness family");
  caterpillar->add_option("n", cat_n)->required()->check(CLI::Range(5, 20));

  int conj_n_max = 8;
  auto* conjectures = app.add_subcommand("conjectures", "sweep open questions about Algorithm A");
  conjectures->add_option("n_max", conj_n_max)->check(CLI::Range(2, 9));

  std::string perm_text;
  std::string replay;
  auto* sort = app.add_subcommand("sort", "AK marker sorting against the exact distance");
  sort->add_option("tree", tree_spec, "tree spec or fixture name")->required();
  sort->add_option("permutation", perm_text, "[3,5,1,4,2] or (1,3)(2,5)")->required();
  sort->add_option("--replay", replay, "word to check, e.g. (1,2),(1,4)");

  int enum_n = 5;
  auto* enumerate = app.add_subcommand("enumerate-trees", "one tree per isomorphism class");
  enumerate->add_option("n", enum_n)->required()->check(CLI::Range(2, 12));

  CLI11_PARSE(app, argc, argv);

  try {
    const Format fmt = parse_format(format);
    AnalyzeOptions opts;
    if (!cache_dir.empty()) opts.cache_dir = cache_dir;
    opts.allow_n11 = max_n > kMaxBfsN;
    opts.policy = policy_by_name(policy);

    if (*analyze) {
      const auto t = resolve_tree(tree_spec);
      const auto r = analyze_tree(t, opts);
      emit(to_json(r), to_text(r), fmt);
    } else if (*table1) {
      if (n_min < 5 || n_min > n_max)
        throw Error(ErrorCode::OutOfRange, "table1 needs 5 <= n_min <= n_max <= 9");
      std::vector<TableRow> rows;
      for (int n = n_min; n <= n_max; ++n) rows.push_back(summarize(n, analyze_all_trees(n, opts)));
      if (fmt == Format::Csv) {
        std::cout << to_csv(rows);
      } else {
        nlohmann::json j = nlohmann::json::array();
        for (const auto& r : rows) j.push_back(to_json(r));
        emit(j, to_text(rows), fmt);
      }
    } else if (*caterpillar) {
      const auto r = analyze_caterpillar(cat_n, opts);
      emit(to_json(r), to_text(r), fmt);
    } else if (*conjectures) {
      const auto r = explore_conjectures(2, conj_n_max, opts);
      emit(to_json(r), to_text(r), fmt);
    } else if (*sort) {
      const auto t = resolve_tree(tree_spec);
      const auto p = parse_permutation(perm_text, t.n());
      std::optional<std::vector<VertexPair>> word;
      if (!replay.empty()) word = parse_word(replay);
      const auto r = sort_permutation(t, p, word, opts);
      emit(to_json(r), to_text(r), fmt);
    } else if (*enumerate) {
      const auto trees = enumerate_trees(enum_n);
      nlohmann::json j = nlohmann::json::array();
      std::string text;
      for (const auto& t : trees) {
        j.push_back({{"spec", to_string(t)}, {"canonical_code", to_hex(canonical_form(t))}});
        text += to_string(t) + "\n";
      }
      emit(j, text, fmt);
    }
  } catch (const Error& e) {
    std::cerr << "error [" << to_string(e.code()) << "]: " << e.what() << "\n";
    return e.code() == ErrorCode::TooLarge ? 2 : 1;
  }
  return 0;
}
