#include "tcayley/tree.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>
#include <numeric>
#include <queue>
#include <set>

#include "tcayley/error.hpp"

namespace tcayley {

VertexPair::VertexPair(int a, int b) : i(std::min(a, b)), j(std::max(a, b)) {
  if (a == b)
    throw Error(ErrorCode::BadLabel, "vertex pair needs two distinct labels, got " +
                                         std::to_string(a) + " twice");
}

std::string to_string(const VertexPair& e) {
  return "(" + std::to_string(e.i) + "," + std::to_string(e.j) + ")";
}

TranspositionTree::TranspositionTree(int bound, std::vector<int> vertices,
                                     std::vector<VertexPair> edges)
    : bound_(bound), vertices_(std::move(vertices)), edges_(std::move(edges)) {
  std::sort(vertices_.begin(), vertices_.end());
  std::sort(edges_.begin(), edges_.end());
  adj_.assign(bound_ + 1, {});
  for (const auto& e : edges_) {
    adj_[e.i].push_back(e.j);
    adj_[e.j].push_back(e.i);
  }
  for (auto& a : adj_) std::sort(a.begin(), a.end());

  const int stride = bound_ + 1;
  dist_.assign(static_cast<std::size_t>(stride) * stride, -1);
  std::vector<int> queue;
  queue.reserve(vertices_.size());
  for (int src : vertices_) {
    int* row = &dist_[static_cast<std::size_t>(src) * stride];
    row[src] = 0;
    queue.assign(1, src);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int w : adj_[u]) {
        if (row[w] >= 0) continue;
        row[w] = row[u] + 1;
        queue.push_back(w);
      }
    }
  }
}

int TranspositionTree::index(int v) const {
  if (!contains(v))
    throw Error(ErrorCode::BadLabel, "vertex " + std::to_string(v) + " is not in the tree");
  return v;
}

bool TranspositionTree::contains(int v) const noexcept {
  return v >= 1 && v <= bound_ && std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool TranspositionTree::has_edge(int a, int b) const noexcept {
  if (!contains(a) || !contains(b)) return false;
  return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
}

int TranspositionTree::degree(int v) const { return static_cast<int>(adj_[index(v)].size()); }

const std::vector<int>& TranspositionTree::neighbors(int v) const { return adj_[index(v)]; }

int TranspositionTree::distance(int a, int b) const {
  return dist_[static_cast<std::size_t>(index(a)) * (bound_ + 1) + index(b)];
}

int TranspositionTree::next_hop(int v, int target) const {
  const int d = distance(v, target);
  if (d == 0) throw Error(ErrorCode::BadLabel, "next_hop needs two distinct vertices");
  for (int w : adj_[v])
    if (distance(w, target) == d - 1) return w;
  throw Error(ErrorCode::Disconnected, "no path between vertices");
}

bool TranspositionTree::is_star() const {
  if (n() <= 2) return true;
  return std::any_of(vertices_.begin(), vertices_.end(),
                     [&](int v) { return degree(v) == n() - 1; });
}

bool TranspositionTree::is_path() const {
  return std::all_of(vertices_.begin(), vertices_.end(), [&](int v) { return degree(v) <= 2; });
}

int TranspositionTree::star_center() const {
  if (n() == 2) return vertices_.front();
  for (int v : vertices_)
    if (degree(v) == n() - 1) return v;
  throw Error(ErrorCode::NotAStar, "tree is not a star: " + to_string(*this));
}

TranspositionTree build_tree(int n, std::span<const VertexPair> edges) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "tree needs at least one vertex");
  std::set<VertexPair> seen;
  for (const auto& e : edges) {
    for (int v : {e.i, e.j})
      if (v < 1 || v > n)
        throw Error(ErrorCode::BadLabel, "edge " + std::to_string(e.i) + "-" +
                                             std::to_string(e.j) + ": label " +
                                             std::to_string(v) + " outside 1.." +
                                             std::to_string(n));
    if (e.i == e.j)
      throw Error(ErrorCode::BadLabel, "self-loop at " + std::to_string(e.i));
    if (!seen.insert(e).second)
      throw Error(ErrorCode::DuplicateEdge,
                  "edge " + std::to_string(e.i) + "-" + std::to_string(e.j) + " repeated");
  }
  // Union-find for cycle detection.
  std::vector<int> parent(n + 1);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& e : edges) {
    const int a = find(e.i), b = find(e.j);
    if (a == b)
      throw Error(ErrorCode::CycleDetected, "edge " + std::to_string(e.i) + "-" +
                                                std::to_string(e.j) + " closes a cycle");
    parent[a] = b;
  }
  if (static_cast<int>(edges.size()) != n - 1)
    throw Error(ErrorCode::Disconnected, "graph on " + std::to_string(n) + " vertices with " +
                                             std::to_string(edges.size()) +
                                             " edges is not connected");
  std::vector<int> vertices(n);
  std::iota(vertices.begin(), vertices.end(), 1);
  return TranspositionTree(n, std::move(vertices),
                           std::vector<VertexPair>(edges.begin(), edges.end()));
}

int tree_diameter(const TranspositionTree& t) {
  int best = 0;
  for (int a : t.vertices())
    for (int b : t.vertices()) best = std::max(best, t.distance(a, b));
  return best;
}

std::vector<VertexPair> diametral_pairs(const TranspositionTree& t) {
  const int d = tree_diameter(t);
  std::vector<VertexPair> out;
  if (d == 0) return out;
  const auto& vs = t.vertices();
  for (std::size_t x = 0; x < vs.size(); ++x)
    for (std::size_t y = x + 1; y < vs.size(); ++y)
      if (t.distance(vs[x], vs[y]) == d) out.emplace_back(vs[x], vs[y]);
  return out;
}

TranspositionTree remove_vertices(const TranspositionTree& t, VertexPair pair) {
  if (t.n() < 3)
    throw Error(ErrorCode::OutOfRange, "removing two leaves needs at least 3 vertices");
  for (int v : {pair.i, pair.j})
    if (!t.contains(v) || !t.is_leaf(v))
      throw Error(ErrorCode::NotALeaf, "vertex " + std::to_string(v) + " is not a leaf of " +
                                           to_string(t));
  std::vector<int> vertices;
  for (int v : t.vertices())
    if (v != pair.i && v != pair.j) vertices.push_back(v);
  std::vector<VertexPair> edges;
  for (const auto& e : t.edges())
    if (e.i != pair.i && e.i != pair.j && e.j != pair.i && e.j != pair.j) edges.push_back(e);
  return TranspositionTree(t.label_bound(), std::move(vertices), std::move(edges));
}

namespace {

// AHU encoding of the subtree hanging from `v` away from `parent`.
std::string rooted_code(const TranspositionTree& t, int v, int parent) {
  std::vector<std::string> kids;
  for (int w : t.neighbors(v))
    if (w != parent) kids.push_back(rooted_code(t, w, v));
  std::sort(kids.begin(), kids.end());
  std::string s = "(";
  for (const auto& k : kids) s += k;
  return s + ")";
}

std::vector<int> centers(const TranspositionTree& t) {
  std::map<int, int> deg;
  std::vector<int> layer;
  for (int v : t.vertices()) {
    deg[v] = t.degree(v);
    if (deg[v] <= 1) layer.push_back(v);
  }
  int remaining = t.n();
  while (remaining > 2) {
    remaining -= static_cast<int>(layer.size());
    std::vector<int> next;
    for (int v : layer)
      for (int w : t.neighbors(v))
        if (--deg[w] == 1) next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

}  // namespace

CanonicalCode canonical_form(const TranspositionTree& t) {
  const auto c = centers(t);
  std::string s;
  if (c.size() == 1) {
    s = "V" + rooted_code(t, c[0], 0);
  } else {
    std::string a = rooted_code(t, c[0], c[1]);
    std::string b = rooted_code(t, c[1], c[0]);
    if (b < a) std::swap(a, b);
    s = "E" + a + b;
  }
  return CanonicalCode(s.begin(), s.end());
}

std::string to_hex(const CanonicalCode& code) {
  static constexpr char digits[] = "0123456789abcdef";
  std::string out;
  out.reserve(code.size() * 2);
  for (auto b : code) {
    out += digits[b >> 4];
    out += digits[b & 0xf];
  }
  return out;
}

std::vector<TranspositionTree> enumerate_trees(int n) {
  if (n < 2 || n > 12)
    throw Error(ErrorCode::OutOfRange, "enumerate_trees supports 2 <= n <= 12, got " +
                                           std::to_string(n));
  const VertexPair first(1, 2);
  std::vector<TranspositionTree> level{build_tree(2, std::span(&first, 1))};
  // Every tree on m+1 vertices is some tree on m vertices plus one leaf.
  for (int m = 2; m < n; ++m) {
    std::map<CanonicalCode, TranspositionTree> next;
    for (const auto& t : level) {
      for (int v : t.vertices()) {
        std::vector<VertexPair> edges = t.edges();
        edges.emplace_back(v, m + 1);
        auto grown = build_tree(m + 1, edges);
        next.try_emplace(canonical_form(grown), std::move(grown));
      }
    }
    level.clear();
    for (auto& [code, tree] : next) level.push_back(std::move(tree));
  }
  return level;
}

TranspositionTree tree_from_pruefer(int n, std::span<const int> sequence) {
  if (n < 2 || static_cast<int>(sequence.size()) != n - 2)
    throw Error(ErrorCode::OutOfRange, "Pruefer sequence for n=" + std::to_string(n) +
                                           " must have length n-2");
  std::vector<int> degree(n + 1, 1);
  for (int v : sequence) {
    if (v < 1 || v > n) throw Error(ErrorCode::BadLabel, "Pruefer label out of range");
    ++degree[v];
  }
  std::priority_queue<int, std::vector<int>, std::greater<>> leaves;
  for (int v = 1; v <= n; ++v)
    if (degree[v] == 1) leaves.push(v);
  std::vector<VertexPair> edges;
  for (int v : sequence) {
    const int leaf = leaves.top();
    leaves.pop();
    edges.emplace_back(leaf, v);
    if (--degree[v] == 1) leaves.push(v);
  }
  const int a = leaves.top();
  leaves.pop();
  edges.emplace_back(a, leaves.top());
  return build_tree(n, edges);
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
  throw Error(ErrorCode::Parse, "cannot parse tree '" + std::string(text) + "': " + why);
}

int parse_int(std::string_view text, std::string_view token) {
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.front())))
    token.remove_prefix(1);
  while (!token.empty() && std::isspace(static_cast<unsigned char>(token.back())))
    token.remove_suffix(1);
  int value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() || token.empty())
    parse_fail(text, "'" + std::string(token) + "' is not an integer");
  return value;
}

}  // namespace

TranspositionTree parse_tree(std::string_view text) {
  std::string_view body = text;
  int n = 0;
  if (auto semi = body.find(';'); semi != std::string_view::npos) {
    std::string_view head = body.substr(0, semi);
    while (!head.empty() && std::isspace(static_cast<unsigned char>(head.front())))
      head.remove_prefix(1);
    if (head.substr(0, 2) != "n=") parse_fail(text, "prefix must be 'n=<int>;'");
    n = parse_int(text, head.substr(2));
    body = body.substr(semi + 1);
  }
  std::vector<VertexPair> edges;
  int max_label = 0;
  while (true) {
    const auto comma = body.find(',');
    std::string_view item = body.substr(0, comma);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) parse_fail(text, "edge '" + std::string(item) + "' lacks '-'");
    const int a = parse_int(text, item.substr(0, dash));
    const int b = parse_int(text, item.substr(dash + 1));
    if (a == b) throw Error(ErrorCode::BadLabel, "edge " + std::to_string(a) + "-" +
                                                     std::to_string(b) + " is a self-loop");
    edges.emplace_back(a, b);
    max_label = std::max({max_label, a, b});
    if (comma == std::string_view::npos) break;
    body = body.substr(comma + 1);
  }
  if (n == 0) n = max_label;
  return build_tree(n, edges);
}

std::string to_string(const TranspositionTree& t) {
  std::string s = "n=" + std::to_string(t.n()) + "; ";
  for (std::size_t k = 0; k < t.edges().size(); ++k) {
    if (k) s += ',';
    s += std::to_string(t.edges()[k].i) + "-" + std::to_string(t.edges()[k].j);
  }
  return s;
}

TranspositionTree make_path(int n) {
  std::vector<VertexPair> edges;
  for (int v = 1; v < n; ++v) edges.emplace_back(v, v + 1);
  return build_tree(n, edges);
}

TranspositionTree make_star(int n) {
  std::vector<VertexPair> edges;
  for (int v = 2; v <= n; ++v) edges.emplace_back(1, v);
  return build_tree(n, edges);
}

TranspositionTree make_caterpillar(int n) {
  if (n < 4) throw Error(ErrorCode::OutOfRange, "caterpillar needs n >= 4");
  std::vector<VertexPair> edges;
  for (int v = 1; v < n - 2; ++v) edges.emplace_back(v, v + 1);
  edges.emplace_back(n - 2, n - 1);
  edges.emplace_back(n - 2, n);
  return build_tree(n, edges);
}

}  // namespace tcayley
