// Acceptance suite: one PASS/FAIL line per criterion, exact integer
// comparisons throughout. Exit status is nonzero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tcayley/bounds.hpp"
#include "tcayley/cayley.hpp"
#include "tcayley/report.hpp"
#include "tcayley/tree.hpp"

using namespace tcayley;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (pass) detail = what;
      pass = false;
    }
  }
};

int failures = 0;

void criterion(const std::string& id, const std::string& title, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o.pass = false;
    o.detail = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (!o.pass) ++failures;
  std::printf("[%s] %-4s %s (%.1fs)%s%s\n", o.pass ? "PASS" : "FAIL", id.c_str(), title.c_str(),
              secs, o.detail.empty() ? "" : " -- ", o.detail.c_str());
  std::fflush(stdout);
}

std::string str(int v) { return std::to_string(v); }

int choose2(int n) { return n * (n - 1) / 2; }

bool contains(const std::vector<int>& v, int x) {
  return std::find(v.begin(), v.end(), x) != v.end();
}

PairPolicy scripted(std::vector<VertexPair> script) {
  auto step = std::make_shared<std::size_t>(0);
  return [script, step](const TranspositionTree&, std::span<const VertexPair> pairs) {
    const VertexPair want = script.at((*step)++);
    if (std::find(pairs.begin(), pairs.end(), want) == pairs.end())
      throw std::runtime_error(to_string(want) + " is not diametral here");
    return want;
  };
}

// A path of length 3 (i, j, k, l) in a tree of diameter >= 3.
std::array<int, 4> three_path(const TranspositionTree& t) {
  for (const auto& e : t.edges())
    for (auto [j, k] : {std::pair{e.i, e.j}, std::pair{e.j, e.i}})
      for (int i : t.neighbors(j))
        for (int l : t.neighbors(k))
          if (i != k && l != j) return {i, j, k, l};
  throw std::runtime_error("no 3-path");
}

bool consecutive_path(const TranspositionTree& t) {
  return std::all_of(t.edges().begin(), t.edges().end(),
                     [](const VertexPair& e) { return e.j == e.i + 1; });
}

const char* const kPaperWord =
    "(1,2),(1,4),(1,2),(2,3),(1,2),(1,6),(6,7),(1,2),(2,3),(4,5),(1,4),(1,6),(6,7),(1,4),(4,5)";

}  // namespace

int main() {
  criterion("1", "per-n statistics: s, h, Delta, gamma for n = 5..9", [] {
    Outcome o;
    const int s[] = {3, 6, 11, 23, 47}, h[] = {2, 4, 3, 6, 4}, d[] = {1, 2, 3, 4, 6},
              g[] = {1, 1, 1, 3, 2};
    std::ostringstream got;
    for (int n = 5; n <= 9; ++n) {
      const auto row = summarize(n, analyze_all_trees(n));
      const int k = n - 5;
      got << " n=" << n << ":(" << row.s_n << "," << row.h_n << "," << row.delta_n << ","
          << row.gamma_n << ")";
      o.require(row.s_n == s[k] && row.h_n == h[k] && row.delta_n == d[k] && row.gamma_n == g[k],
                "row n=" + str(n) + " differs");
    }
    if (o.pass) o.detail = got.str();
    else o.detail += ";" + got.str();
    return o;
  });

  criterion("2", "path: diam = f(T) = n(n-1)/2 for n = 4..8", [] {
    Outcome o;
    for (int n = 4; n <= 8; ++n) {
      const auto t = make_path(n);
      o.require(bfs_metrics(t).diameter == choose2(n), "BFS diameter n=" + str(n));
      o.require(diameter_bound(t).value == choose2(n), "f(T) n=" + str(n));
    }
    return o;
  });

  criterion("3", "star: diam = floor(3(n-1)/2) for n = 4..8; star bound = distance for all p, n <= 7",
            [] {
              Outcome o;
              for (int n = 4; n <= 8; ++n)
                o.require(bfs_metrics(make_star(n)).diameter == 3 * (n - 1) / 2,
                          "star diameter n=" + str(n));
              for (int n = 2; n <= 7; ++n) {
                const auto t = make_star(n);
                const auto table = build_distance_table(t);
                for (std::uint64_t r = 0; r < factorial(n); ++r) {
                  const auto p = unrank(r, n);
                  const int sb = star_bound(t, p);
                  o.require(sb == table.distance_at_rank(r) && sb == distance_bound(t, p),
                            "n=" + str(n) + " p=" + to_string(p));
                }
              }
              return o;
            });

  criterion("4", "f_T = distance for all p iff star (n = 5..7); 3-path witness f_T=6, dist<=4", [] {
    Outcome o;
    for (int n = 5; n <= 7; ++n) {
      for (const auto& t : enumerate_trees(n)) {
        const auto table = build_distance_table(t);
        bool all_equal = true;
        for (std::uint64_t r = 0; r < factorial(n) && all_equal; ++r)
          all_equal = table.distance_at_rank(r) == distance_bound(t, unrank(r, n));
        o.require(all_equal == t.is_star(), "dichotomy fails for " + to_string(t));
        if (!t.is_star()) {
          const auto [i, j, k, l] = three_path(t);
          const auto p = compose(transposition(n, i, k), transposition(n, j, l));
          o.require(distance_bound(t, p) == 6, "f_T != 6 on " + to_string(t));
          o.require(table.distance(p) <= 4, "dist > 4 on " + to_string(t));
        }
      }
    }
    return o;
  });

  criterion("5a", "tree 1-2,2-3,1-4,1-5: diam 7, f(T) 8", [] {
    Outcome o;
    const auto t = resolve_tree("theorem6-5v");
    const int d = bfs_metrics(t).diameter, f = diameter_bound(t).value;
    o.require(d == 7 && f == 8, "got diam " + str(d) + ", f " + str(f));
    return o;
  });

  criterion("5b", "tree 1-2,2-3,1-4,4-5,1-6,6-7: diam 14", [] {
    Outcome o;
    const int d = bfs_metrics(resolve_tree("theorem6-7v")).diameter;
    o.require(d == 14, "got " + str(d));
    return o;
  });

  criterion("5c", "15-edge word admissible at every step and sorts (2,4)(3,5)(5,7) as printed", [] {
    Outcome o;
    const auto t = resolve_tree("theorem6-7v");
    const auto p = parse_permutation("(2,4)(3,5)(5,7)", 7);
    const auto rep = replay_word(t, p, parse_word(kPaperWord));
    o.require(rep.valid(), rep.message + "; f_T(p) = " + str(distance_bound(t, p)) +
                               " < 15, so no strictly decreasing 15-step word exists");
    return o;
  });

  criterion("5d", "15-edge word admissible at every step and sorts (2,4)(3,6)(5,7), the product it encodes",
            [] {
              Outcome o;
              const auto t = resolve_tree("theorem6-7v");
              const auto p = parse_permutation("(2,4)(3,6)(5,7)", 7);
              const auto rep = replay_word(t, p, parse_word(kPaperWord));
              o.require(rep.valid() && rep.steps.size() == 15, rep.message);
              const int d = distance(t, p);
              o.require(d < 15, "exact distance " + str(d) + " not below 15");
              if (o.pass) o.detail = "exact distance " + str(d);
              return o;
            });

  criterion("6", "Algorithm A: T1 B={18} via both sequences; T2 B>={20,22}, diam 18, f 22", [] {
    Outcome o;
    const auto t1 = resolve_tree("t1");
    o.require(enumerate_beta_set(t1).values == std::vector<int>{18}, "T1 beta set");
    o.require(algorithm_a(t1, scripted({{1, 8}, {5, 7}, {2, 6}})).beta == 18, "T1 sequence 1");
    o.require(algorithm_a(t1, scripted({{1, 5}, {6, 8}, {2, 7}})).beta == 18, "T1 sequence 2");
    const auto t2 = resolve_tree("t2");
    const auto b2 = enumerate_beta_set(t2);
    o.require(contains(b2.values, 20) && contains(b2.values, 22), "T2 beta set");
    o.require(algorithm_a(t2, scripted({{1, 5}, {2, 7}, {4, 8}, {3, 9}})).beta == 20, "T2 seq 1");
    o.require(algorithm_a(t2, scripted({{1, 7}, {5, 8}, {2, 9}, {4, 6}})).beta == 22, "T2 seq 2");
    o.require(bfs_metrics(t2).diameter == 18, "T2 diameter");
    o.require(diameter_bound(t2).value == 22, "T2 f(T)");
    if (o.pass) {
      std::string vals;
      for (int v : b2.values) vals += (vals.empty() ? "" : ",") + str(v);
      o.detail = "T2 B={" + vals + "}";
    }
    return o;
  });

  criterion("7", "caterpillar n = 5..9: f = n(n-1)/2 - 2 and f - diam >= n-4", [] {
    Outcome o;
    std::string gaps;
    for (int n = 5; n <= 9; ++n) {
      const auto t = make_caterpillar(n);
      const int f = diameter_bound(t).value;
      const int d = bfs_metrics(t).diameter;
      o.require(f == choose2(n) - 2, "f n=" + str(n));
      o.require(f - d >= n - 4, "gap n=" + str(n));
      gaps += " n=" + str(n) + ":" + str(f - d);
    }
    if (o.pass) o.detail = "gaps" + gaps;
    return o;
  });

  // Shared sweep for the property criteria.
  struct Sweep {
    bool dist_le_f = true, ak_decreasing = true, ak_path = true, ak_star = true;
    std::string first;
  };
  auto sweep = std::make_shared<Sweep>();
  for (int n = 2; n <= 7; ++n) {
    for (const auto& t : enumerate_trees(n)) {
      const auto table = build_distance_table(t);
      for (std::uint64_t r = 0; r < factorial(n); ++r) {
        const auto p = unrank(r, n);
        const int f = distance_bound(t, p);
        if (table.distance_at_rank(r) > f) sweep->dist_le_f = false;
        const auto trace = ak_sort(t, p);
        int prev = f;
        for (int v : trace.f_values) {
          if (v >= prev) sweep->ak_decreasing = false;
          prev = v;
        }
        if (!trace.f_values.empty() && trace.f_values.back() != 0) sweep->ak_decreasing = false;
        if (consecutive_path(t) && trace.word_length() != inversions(p)) sweep->ak_path = false;
        if (t.is_star() && trace.word_length() != f) sweep->ak_star = false;
      }
    }
  }
  // Inversions measure only the path labeled 1..n in order; enumerated
  // representatives may carry other labelings.
  for (int n = 2; n <= 7; ++n) {
    const auto path = make_path(n), star = make_star(n);
    for (std::uint64_t r = 0; r < factorial(n); ++r) {
      const auto p = unrank(r, n);
      if (ak_sort(path, p).word_length() != inversions(p)) sweep->ak_path = false;
      if (ak_sort(star, p).word_length() != distance_bound(star, p)) sweep->ak_star = false;
    }
  }

  criterion("8a", "dist <= f_T for every tree n <= 7 and every p", [&] {
    Outcome o;
    o.require(sweep->dist_le_f, "violation found");
    return o;
  });
  criterion("8b", "AK trace f_values strictly decreasing to 0, all trees n <= 7", [&] {
    Outcome o;
    o.require(sweep->ak_decreasing, "violation found");
    return o;
  });
  criterion("8c", "AK word length = inv(p) on paths, = f_T(p) on stars, n <= 7", [&] {
    Outcome o;
    o.require(sweep->ak_path, "path length differs from inversions");
    o.require(sweep->ak_star, "star length differs from f_T");
    return o;
  });
  criterion("8d", "diam <= beta_max <= f(T) for all trees n <= 8", [] {
    Outcome o;
    for (int n = 2; n <= 8; ++n)
      for (const auto& r : analyze_all_trees(n)) {
        o.require(*r.exact_diameter <= r.beta_set.beta_max, "diam > beta_max: " + to_string(r.tree));
        o.require(r.beta_set.beta_max <= *r.f_bound, "beta_max > f: " + to_string(r.tree));
      }
    return o;
  });
  criterion("8e", "product of chosen pairs has f_T = beta for every outcome, all trees n <= 9", [] {
    Outcome o;
    for (int n = 2; n <= 9; ++n)
      for (const auto& t : enumerate_trees(n)) {
        const auto set = enumerate_beta_set(t);
        for (const auto& [beta, outcome] : set.outcomes)
          o.require(distance_bound(t, construction_permutation(t, outcome)) == beta,
                    "mismatch on " + to_string(t));
        for (const char* name : {"lex", "maxdiam", "mindiam"}) {
          const auto a = algorithm_a(t, policy_by_name(name));
          o.require(distance_bound(t, construction_permutation(t, a)) == a.beta,
                    std::string("policy ") + name + " on " + to_string(t));
        }
      }
    return o;
  });

  criterion("9", "enumerate_trees counts (3,6,11,23,47) for n = 5..9, Pruefer cross-check", [] {
    Outcome o;
    const std::size_t expected[] = {3, 6, 11, 23, 47};
    for (int n = 5; n <= 9; ++n) {
      const auto trees = enumerate_trees(n);
      o.require(trees.size() == expected[n - 5], "generator count n=" + str(n));
      std::set<CanonicalCode> generated, pruefer;
      for (const auto& t : trees) generated.insert(canonical_form(t));
      std::vector<int> seq(n - 2, 1);
      while (true) {
        pruefer.insert(canonical_form(tree_from_pruefer(n, seq)));
        int k = n - 3;
        while (k >= 0 && seq[k] == n) seq[k--] = 1;
        if (k < 0) break;
        ++seq[k];
      }
      o.require(pruefer.size() == expected[n - 5], "Pruefer count n=" + str(n));
      o.require(pruefer == generated, "class sets differ n=" + str(n));
    }
    return o;
  });

  std::printf("%d criterion line(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
