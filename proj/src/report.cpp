#include "tcayley/report.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <future>
#include <iomanip>
#include <sstream>
#include <thread>

#include "tcayley/error.hpp"

namespace tcayley {

namespace {

DistanceTable table_for(const TranspositionTree& t, const AnalyzeOptions& opts) {
  if (opts.cache_dir) return cached_distance_table(t, *opts.cache_dir, opts.allow_n11);
  return build_distance_table(t, opts.allow_n11);
}

bool bfs_feasible(const TranspositionTree& t, const AnalyzeOptions& opts) {
  return t.n() <= (opts.allow_n11 ? kMaxBfsNExtended : kMaxBfsN);
}

int choose2(int m) { return m * (m - 1) / 2; }

}  // namespace

TreeReport analyze_tree(const TranspositionTree& t, const AnalyzeOptions& opts) {
  TreeReport r(t);
  r.canonical_hex = to_hex(canonical_form(t));
  r.n = t.n();
  if (bfs_feasible(t, opts)) {
    const auto m = metrics_of(table_for(t, opts));
    r.exact_diameter = m.diameter;
    r.peripheral_witness = m.peripheral_witness;
  } else {
    r.skipped.push_back("exact_diameter: BFS over n! vertices limited to n <= " +
                        std::to_string(opts.allow_n11 ? kMaxBfsNExtended : kMaxBfsN));
  }
  if (t.n() <= kMaxExhaustiveN) {
    auto fb = diameter_bound(t);
    r.f_bound = fb.value;
    r.f_witness = std::move(fb.witness);
  } else {
    r.skipped.push_back("f_bound: exhaustive sweep limited to n <= " +
                        std::to_string(kMaxExhaustiveN));
  }
  r.beta_set = enumerate_beta_set(t);
  r.policy_outcome = algorithm_a(t, opts.policy);
  if (r.exact_diameter && r.f_bound) {
    r.gap_f = *r.f_bound - *r.exact_diameter;
    r.sharp = *r.gap_f == 0;
  }
  if (r.exact_diameter) r.gap_beta = r.beta_set.beta_max - *r.exact_diameter;
  return r;
}

TableRow summarize(int n, const std::vector<TreeReport>& reports) {
  TableRow row;
  row.n = n;
  row.s_n = static_cast<int>(reports.size());
  for (const auto& r : reports) {
    if (!r.gap_f) throw Error(ErrorCode::TooLarge, "table row needs exact gaps for every tree");
    if (*r.gap_f == 0) ++row.h_n;
    row.delta_n = std::max(row.delta_n, *r.gap_f);
  }
  for (const auto& r : reports) {
    if (*r.gap_f == row.delta_n) {
      ++row.gamma_n;
      row.extremal_trees.push_back(to_string(r.tree));
    }
  }
  return row;
}

std::vector<TreeReport> analyze_all_trees(int n, const AnalyzeOptions& opts, unsigned threads) {
  const auto trees = enumerate_trees(n);
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::optional<TreeReport>> slots(trees.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < trees.size(); k = next++) slots[k] = analyze_tree(trees[k], opts);
  };
  std::vector<std::future<void>> pool;
  for (unsigned w = 0; w < threads; ++w) pool.push_back(std::async(std::launch::async, worker));
  for (auto& f : pool) f.get();
  std::vector<TreeReport> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

CaterpillarReport analyze_caterpillar(int n, const AnalyzeOptions& opts) {
  if (n < 5) throw Error(ErrorCode::OutOfRange, "caterpillar report needs n >= 5");
  const auto t = make_caterpillar(n);
  CaterpillarReport r;
  r.n = n;
  r.f_formula = choose2(n) - 2;
  r.diameter_upper = choose2(n - 1) + 1;
  r.guaranteed_gap = r.f_formula - r.diameter_upper;
  r.f_bound = diameter_bound(t).value;
  if (bfs_feasible(t, opts)) {
    r.exact_diameter = metrics_of(table_for(t, opts)).diameter;
    r.exact_gap = r.f_bound - *r.exact_diameter;
  }
  r.beta_set = enumerate_beta_set(t);
  return r;
}

ConjectureReport explore_conjectures(int n_min, int n_max, const AnalyzeOptions& opts) {
  if (n_min < 2 || n_max > 9 || n_min > n_max)
    throw Error(ErrorCode::OutOfRange, "conjecture sweep supports 2 <= n_min <= n_max <= 9");
  ConjectureReport rep;
  rep.n_min = n_min;
  rep.n_max = n_max;
  for (int n = n_min; n <= n_max; ++n) {
    for (const auto& r : analyze_all_trees(n, opts)) {
      ConjectureFinding f;
      f.tree = to_string(r.tree);
      f.canonical_hex = r.canonical_hex;
      f.n = n;
      f.beta_values = r.beta_set.values;
      f.f_bound = *r.f_bound;
      f.exact_diameter = r.exact_diameter;
      f.beta_max_differs_from_f = r.beta_set.beta_max != *r.f_bound;
      f.multiple_betas = r.beta_set.values.size() >= 2;
      if (r.exact_diameter)
        for (int b : r.beta_set.values)
          if (b < *r.exact_diameter) f.betas_below_diameter.push_back(b);
      rep.trees_unique_beta += !f.multiple_betas;
      rep.trees_beta_max_below_f += f.beta_max_differs_from_f;
      rep.trees_with_beta_below_diameter += !f.betas_below_diameter.empty();
      rep.trees.push_back(std::move(f));
    }
  }
  return rep;
}

SortReport sort_permutation(const TranspositionTree& t, const Permutation& p,
                            const std::optional<std::vector<VertexPair>>& replay_word_edges,
                            const AnalyzeOptions& opts) {
  if (t.n() > kMaxBfsN) throw Error(ErrorCode::TooLarge, "sort limited to n <= 10");
  SortReport r;
  r.trace = ak_sort(t, p);
  r.f_value = distance_bound(t, p);
  r.exact_distance = opts.cache_dir ? table_for(t, opts).distance(p) : distance(t, p);
  r.suboptimal = r.trace.word_length() > r.exact_distance;
  if (replay_word_edges) r.replay = replay_word(t, p, *replay_word_edges);
  return r;
}

// --- Fixtures ----------------------------------------------------------------

namespace {

std::optional<int> suffix_number(std::string_view name, std::string_view prefix) {
  if (name.substr(0, prefix.size()) != prefix) return std::nullopt;
  const auto tail = name.substr(prefix.size());
  int value = 0;
  auto [ptr, ec] = std::from_chars(tail.data(), tail.data() + tail.size(), value);
  if (ec != std::errc() || ptr != tail.data() + tail.size() || tail.empty()) return std::nullopt;
  return value;
}

}  // namespace

std::vector<std::string> fixture_names() {
  return {"theorem6-5v", "theorem6-7v", "t1", "t2", "caterpillar-<n>", "path-<n>", "star-<n>"};
}

TranspositionTree resolve_tree(std::string_view name) {
  if (name == "theorem6-5v") return parse_tree("1-2,2-3,1-4,1-5");
  if (name == "theorem6-7v") return parse_tree("1-2,2-3,1-4,4-5,1-6,6-7");
  if (name == "t1") return parse_tree("1-2,2-3,3-7,7-8,3-4,4-5,4-6");
  if (name == "t2") return parse_tree("1-2,2-3,3-6,3-4,4-5,6-7,6-8,6-9");
  if (auto n = suffix_number(name, "caterpillar-")) return make_caterpillar(*n);
  if (auto n = suffix_number(name, "path-")) {
    if (*n < 2) throw Error(ErrorCode::OutOfRange, "path needs n >= 2");
    return make_path(*n);
  }
  if (auto n = suffix_number(name, "star-")) {
    if (*n < 2) throw Error(ErrorCode::OutOfRange, "star needs n >= 2");
    return make_star(*n);
  }
  return parse_tree(name);
}

// --- JSON --------------------------------------------------------------------

using nlohmann::json;

json to_json(const Permutation& p) { return p.one_line(); }

json to_json(const TranspositionTree& t) {
  json edges = json::array();
  for (const auto& e : t.edges()) edges.push_back({e.i, e.j});
  return {{"n", t.n()}, {"spec", to_string(t)}, {"edges", edges}};
}

json to_json(const AlgAOutcome& o) {
  json pairs = json::array();
  for (const auto& p : o.pairs) pairs.push_back({p.i, p.j});
  return {{"pairs", pairs},
          {"step_diameters", o.step_diameters},
          {"final_vertices", o.final_vertices},
          {"beta", o.beta}};
}

json to_json(const BetaSet& b) {
  json outcomes = json::array();
  for (const auto& [beta, o] : b.outcomes) outcomes.push_back(to_json(o));
  return {{"values", b.values}, {"beta_min", b.beta_min}, {"beta_max", b.beta_max},
          {"outcomes", outcomes}};
}

namespace {

template <typename T>
json opt(const std::optional<T>& v) {
  if (!v) return nullptr;
  if constexpr (std::is_same_v<T, Permutation>) {
    return to_json(*v);
  } else {
    return *v;
  }
}

}  // namespace

json to_json(const TreeReport& r) {
  return {{"schema_version", kReportSchemaVersion},
          {"tree", to_json(r.tree)},
          {"canonical_code", r.canonical_hex},
          {"n", r.n},
          {"exact_diameter", opt(r.exact_diameter)},
          {"f_bound", opt(r.f_bound)},
          {"f_witness", opt(r.f_witness)},
          {"beta_set", to_json(r.beta_set)},
          {"beta_max", r.beta_set.beta_max},
          {"policy_outcome", to_json(r.policy_outcome)},
          {"gap_f", opt(r.gap_f)},
          {"gap_beta", opt(r.gap_beta)},
          {"sharp", opt(r.sharp)},
          {"witness", opt(r.peripheral_witness)},
          {"skipped", r.skipped}};
}

json to_json(const TableRow& r) {
  return {{"n", r.n},         {"s_n", r.s_n},         {"h_n", r.h_n},
          {"delta_n", r.delta_n}, {"gamma_n", r.gamma_n}, {"extremal_trees", r.extremal_trees}};
}

json to_json(const CaterpillarReport& r) {
  return {{"schema_version", kReportSchemaVersion},
          {"n", r.n},
          {"f_bound", r.f_bound},
          {"f_formula", r.f_formula},
          {"diameter_upper", r.diameter_upper},
          {"guaranteed_gap", r.guaranteed_gap},
          {"exact_diameter", opt(r.exact_diameter)},
          {"exact_gap", opt(r.exact_gap)},
          {"beta_set", to_json(r.beta_set)}};
}

json to_json(const ConjectureReport& r) {
  json trees = json::array();
  for (const auto& f : r.trees)
    trees.push_back({{"tree", f.tree},
                     {"canonical_code", f.canonical_hex},
                     {"n", f.n},
                     {"beta_values", f.beta_values},
                     {"f_bound", f.f_bound},
                     {"exact_diameter", opt(f.exact_diameter)},
                     {"beta_max_differs_from_f", f.beta_max_differs_from_f},
                     {"multiple_betas", f.multiple_betas},
                     {"betas_below_diameter", f.betas_below_diameter},
                     {"flagged", f.flagged()}});
  return {{"schema_version", kReportSchemaVersion},
          {"n_min", r.n_min},
          {"n_max", r.n_max},
          {"trees_examined", r.trees.size()},
          {"trees_unique_beta", r.trees_unique_beta},
          {"trees_beta_max_below_f", r.trees_beta_max_below_f},
          {"trees_with_beta_below_diameter", r.trees_with_beta_below_diameter},
          {"trees", trees}};
}

json to_json(const SortReport& r) {
  json word = json::array();
  json kinds = json::array();
  for (std::size_t k = 0; k < r.trace.edges_applied.size(); ++k) {
    word.push_back({r.trace.edges_applied[k].i, r.trace.edges_applied[k].j});
    kinds.push_back(std::string(to_string(r.trace.edge_kinds[k])));
  }
  json out = {{"schema_version", kReportSchemaVersion},
              {"start", to_json(r.trace.start)},
              {"word", word},
              {"kinds", kinds},
              {"f_values", r.trace.f_values},
              {"word_length", r.trace.word_length()},
              {"f_T", r.f_value},
              {"distance", r.exact_distance},
              {"suboptimal", r.suboptimal}};
  if (r.replay) {
    json steps = json::array();
    for (const auto& s : r.replay->steps)
      steps.push_back({{"edge", {s.edge.i, s.edge.j}},
                       {"kind", s.kind ? json(std::string(to_string(*s.kind))) : json(nullptr)},
                       {"f_after", s.f_after}});
    out["replay"] = {{"steps", steps},
                     {"length", r.replay->steps.size()},
                     {"all_admissible", r.replay->all_admissible},
                     {"sorts", r.replay->sorts},
                     {"valid", r.replay->valid()},
                     {"message", r.replay->message}};
  }
  return out;
}

// --- Text --------------------------------------------------------------------

namespace {

std::string join(const std::vector<int>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + std::to_string(v[k]);
  return s + "}";
}

template <typename T>
std::string show(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string("n/a");
}

}  // namespace

std::string to_text(const TreeReport& r) {
  std::ostringstream os;
  os << "tree           " << to_string(r.tree) << "\n"
     << "canonical      " << r.canonical_hex << "\n"
     << "diameter       " << show(r.exact_diameter) << "\n"
     << "f(T)           " << show(r.f_bound);
  if (r.f_witness) os << "  witness " << to_string(*r.f_witness);
  os << "\n"
     << "beta set       " << join(r.beta_set.values) << "  max " << r.beta_set.beta_max << "\n"
     << "policy beta    " << r.policy_outcome.beta << "\n"
     << "gap f-diam     " << show(r.gap_f) << "\n"
     << "gap beta-diam  " << show(r.gap_beta) << "\n";
  if (r.peripheral_witness) os << "peripheral     " << to_string(*r.peripheral_witness) << "\n";
  for (const auto& s : r.skipped) os << "skipped        " << s << "\n";
  return os.str();
}

std::string to_text(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << std::left << std::setw(10) << "n";
  for (const auto& r : rows) os << std::right << std::setw(5) << r.n;
  os << "\n";
  auto line = [&](const char* label, auto field) {
    os << std::left << std::setw(10) << label;
    for (const auto& r : rows) os << std::right << std::setw(5) << field(r);
    os << "\n";
  };
  line("s(n)", [](const TableRow& r) { return r.s_n; });
  line("h(n)", [](const TableRow& r) { return r.h_n; });
  line("Delta_n", [](const TableRow& r) { return r.delta_n; });
  line("gamma_n", [](const TableRow& r) { return r.gamma_n; });
  return os.str();
}

std::string to_csv(const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "n,s_n,h_n,delta_n,gamma_n\n";
  for (const auto& r : rows)
    os << r.n << ',' << r.s_n << ',' << r.h_n << ',' << r.delta_n << ',' << r.gamma_n << "\n";
  return os.str();
}

std::string to_text(const CaterpillarReport& r) {
  std::ostringstream os;
  os << "caterpillar n=" << r.n << "\n"
     << "f(T)              " << r.f_bound << " (formula " << r.f_formula << ")\n"
     << "diameter <=       " << r.diameter_upper << "\n"
     << "guaranteed gap >= " << r.guaranteed_gap << "\n"
     << "exact diameter    " << show(r.exact_diameter) << "\n"
     << "exact gap         " << show(r.exact_gap) << "\n"
     << "beta set          " << join(r.beta_set.values) << "\n";
  return os.str();
}

std::string to_text(const ConjectureReport& r) {
  std::ostringstream os;
  os << "n=" << r.n_min << ".." << r.n_max << ": trees examined " << r.trees.size()
     << ", |B|=1: " << r.trees_unique_beta << ", beta_max<f: " << r.trees_beta_max_below_f
     << ", some beta<diam: " << r.trees_with_beta_below_diameter << "\n";
  for (const auto& f : r.trees) {
    if (!f.flagged()) continue;
    os << "n=" << f.n << "  " << f.tree << "  B=" << join(f.beta_values) << "  f=" << f.f_bound
       << "  diam=" << show(f.exact_diameter);
    if (f.multiple_betas) os << "  |B|>=2";
    if (f.beta_max_differs_from_f) os << "  beta_max!=f";
    if (!f.betas_below_diameter.empty()) os << "  beta<diam:" << join(f.betas_below_diameter);
    os << "\n";
  }
  return os.str();
}

std::string to_text(const SortReport& r) {
  std::ostringstream os;
  os << "start     " << to_string(r.trace.start) << " = " << to_cycle_string(r.trace.start) << "\n"
     << "AK word   ";
  for (std::size_t k = 0; k < r.trace.edges_applied.size(); ++k)
    os << (k ? "," : "") << to_string(r.trace.edges_applied[k])
       << to_string(r.trace.edge_kinds[k]);
  os << "\n"
     << "length    " << r.trace.word_length() << "\n"
     << "f_T       " << r.f_value << "\n"
     << "distance  " << r.exact_distance << (r.suboptimal ? "  (AK word is not minimal)" : "")
     << "\n";
  if (r.replay) {
    os << "replay    " << r.replay->steps.size() << " steps, "
       << (r.replay->valid() ? "all admissible, sorts" : r.replay->message) << "\n";
    for (std::size_t k = 0; k < r.replay->steps.size(); ++k) {
      const auto& s = r.replay->steps[k];
      os << "  " << std::setw(2) << k + 1 << "  " << to_string(s.edge) << "  "
         << (s.kind ? std::string(to_string(*s.kind)) : std::string("-")) << "  f=" << s.f_after
         << "\n";
    }
  }
  return os.str();
}

}  // namespace tcayley
