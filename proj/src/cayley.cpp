#include "tcayley/cayley.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstring>
#include <fstream>
#include <unordered_map>

#include "tcayley/bounds.hpp"
#include "tcayley/error.hpp"

namespace tcayley {

namespace {

constexpr std::uint8_t kUnvisited = 0xff;

// Permutation packed four bits per position: nibble i holds p(i+1)-1.
using Packed = std::uint64_t;

struct Indexer {
  explicit Indexer(int n) : n(n) {
    fact[0] = 1;
    for (int k = 1; k <= 16; ++k) fact[k] = fact[k - 1] * static_cast<std::uint64_t>(k);
  }

  std::uint64_t rank(Packed p) const {
    std::uint64_t r = 0;
    unsigned used = 0;
    for (int i = 0; i < n; ++i) {
      const unsigned v = static_cast<unsigned>(p >> (4 * i)) & 0xfu;
      r += (v - static_cast<unsigned>(std::popcount(used & ((1u << v) - 1u)))) * fact[n - 1 - i];
      used |= 1u << v;
    }
    return r;
  }

  Packed unrank(std::uint64_t r) const {
    unsigned pool = (1u << n) - 1u;
    Packed p = 0;
    for (int i = 0; i < n; ++i) {
      auto digit = static_cast<unsigned>(r / fact[n - 1 - i]);
      r %= fact[n - 1 - i];
      unsigned bits = pool;
      for (unsigned k = 0; k < digit; ++k) bits &= bits - 1;
      const auto v = static_cast<unsigned>(std::countr_zero(bits));
      pool &= ~(1u << v);
      p |= static_cast<Packed>(v) << (4 * i);
    }
    return p;
  }

  int n;
  std::array<std::uint64_t, 17> fact{};
};

Packed pack(const Permutation& p) {
  Packed out = 0;
  for (int i = 0; i < p.size(); ++i)
    out |= static_cast<Packed>(p.one_line()[i] - 1) << (4 * i);
  return out;
}

Packed identity_packed(int n) {
  Packed p = 0;
  for (int i = 0; i < n; ++i) p |= static_cast<Packed>(i) << (4 * i);
  return p;
}

inline Packed swap_positions(Packed p, int a, int b) {
  const Packed x = ((p >> (4 * a)) ^ (p >> (4 * b))) & 0xfu;
  return p ^ (x << (4 * a)) ^ (x << (4 * b));
}

struct Generator {
  int a, b;  // 0-based positions
};

std::vector<Generator> generators_of(const TranspositionTree& t) {
  std::vector<Generator> gens;
  for (const auto& e : t.edges()) gens.push_back({e.i - 1, e.j - 1});
  return gens;
}

void check_bfs_size(const TranspositionTree& t, bool allow_n11) {
  const int limit = allow_n11 ? kMaxBfsNExtended : kMaxBfsN;
  if (t.n() > limit)
    throw Error(ErrorCode::TooLarge, "exhaustive BFS limited to n <= " + std::to_string(limit) +
                                         ", got " + std::to_string(t.n()));
  if (t.label_bound() != t.n())
    throw Error(ErrorCode::SizeMismatch, "Cayley graph needs a tree on {1..n}");
}

std::vector<std::uint8_t> bfs_from(const TranspositionTree& t, Packed source) {
  const int n = t.n();
  const Indexer idx(n);
  const auto gens = generators_of(t);
  std::vector<std::uint8_t> dist(idx.fact[n], kUnvisited);
  std::vector<Packed> frontier{source}, next;
  dist[idx.rank(source)] = 0;
  for (std::uint8_t level = 0; !frontier.empty(); ++level) {
    next.clear();
    for (Packed p : frontier) {
      for (const auto& g : gens) {
        const Packed q = swap_positions(p, g.a, g.b);
        const std::uint64_t r = idx.rank(q);
        if (dist[r] != kUnvisited) continue;
        dist[r] = static_cast<std::uint8_t>(level + 1);
        next.push_back(q);
      }
    }
    frontier.swap(next);
  }
  return dist;
}

}  // namespace

DistanceTable::DistanceTable(std::vector<VertexPair> edges, int n, std::vector<std::uint8_t> dist)
    : edges_(std::move(edges)), n_(n), dist_(std::move(dist)) {
  if (dist_.size() != factorial(n_))
    throw Error(ErrorCode::SizeMismatch, "distance table size is not n!");
}

int DistanceTable::distance(const Permutation& p) const {
  if (p.size() != n_)
    throw Error(ErrorCode::SizeMismatch, "permutation size " + std::to_string(p.size()) +
                                             " vs table n=" + std::to_string(n_));
  return dist_[Indexer(n_).rank(pack(p))];
}

DistanceTable build_distance_table(const TranspositionTree& t, bool allow_n11) {
  check_bfs_size(t, allow_n11);
  return DistanceTable(t.edges(), t.n(), bfs_from(t, identity_packed(t.n())));
}

CayleyMetrics metrics_of(const DistanceTable& table) {
  CayleyMetrics m;
  m.n = table.n();
  std::uint64_t witness_rank = 0;
  const auto raw = table.raw();
  for (std::uint64_t r = 0; r < raw.size(); ++r) {
    const int d = raw[r];
    if (d >= static_cast<int>(m.eccentricity_profile.size())) m.eccentricity_profile.resize(d + 1, 0);
    ++m.eccentricity_profile[d];
    if (d > m.diameter) {
      m.diameter = d;
      witness_rank = r;
    }
  }
  m.peripheral_witness = unrank(witness_rank, m.n);
  return m;
}

CayleyMetrics bfs_metrics(const TranspositionTree& t, bool allow_n11) {
  return metrics_of(build_distance_table(t, allow_n11));
}

int eccentricity_from(const TranspositionTree& t, const Permutation& source) {
  check_bfs_size(t, false);
  if (source.size() != t.n()) throw Error(ErrorCode::SizeMismatch, "source size mismatch");
  const auto dist = bfs_from(t, pack(source));
  return *std::max_element(dist.begin(), dist.end());
}

int distance(const TranspositionTree& t, const Permutation& p, const DistanceTable* table) {
  if (p.size() != t.n() || t.label_bound() != t.n())
    throw Error(ErrorCode::SizeMismatch, "tree and permutation sizes differ");
  if (table) return table->distance(p);
  if (t.n() > 16) throw Error(ErrorCode::TooLarge, "distance query limited to n <= 16");

  const Packed target = pack(p);
  const Packed source = identity_packed(t.n());
  if (target == source) return 0;
  const auto gens = generators_of(t);

  std::unordered_map<Packed, int> seen_fwd{{source, 0}}, seen_bwd{{target, 0}};
  std::vector<Packed> fwd{source}, bwd{target};
  int depth_fwd = 0, depth_bwd = 0;
  while (!fwd.empty() && !bwd.empty()) {
    const bool forward = fwd.size() <= bwd.size();
    auto& frontier = forward ? fwd : bwd;
    auto& mine = forward ? seen_fwd : seen_bwd;
    auto& other = forward ? seen_bwd : seen_fwd;
    int& depth = forward ? depth_fwd : depth_bwd;
    int best = -1;
    std::vector<Packed> next;
    for (Packed x : frontier) {
      for (const auto& g : gens) {
        const Packed y = swap_positions(x, g.a, g.b);
        if (auto it = other.find(y); it != other.end()) {
          const int total = depth + 1 + it->second;
          if (best < 0 || total < best) best = total;
        }
        if (mine.emplace(y, depth + 1).second) next.push_back(y);
      }
    }
    ++depth;
    if (best >= 0) return best;
    frontier.swap(next);
  }
  throw Error(ErrorCode::Disconnected, "permutation not reachable");
}

// --- Cache -----------------------------------------------------------------

namespace {

constexpr char kMagic[4] = {'T', 'C', 'D', 'T'};
constexpr std::uint32_t kVersion = 1;

template <typename T>
void write_pod(std::ostream& os, T value) {
  os.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T read_pod(std::istream& is) {
  T value{};
  is.read(reinterpret_cast<char*>(&value), sizeof(T));
  return value;
}

}  // namespace

void save_table(const DistanceTable& table, const std::filesystem::path& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw Error(ErrorCode::Io, "cannot write " + path.string());
  os.write(kMagic, 4);
  write_pod<std::uint32_t>(os, kVersion);
  write_pod<std::uint32_t>(os, static_cast<std::uint32_t>(table.n()));
  write_pod<std::uint32_t>(os, static_cast<std::uint32_t>(table.edges().size()));
  for (const auto& e : table.edges()) {
    write_pod<std::uint8_t>(os, static_cast<std::uint8_t>(e.i));
    write_pod<std::uint8_t>(os, static_cast<std::uint8_t>(e.j));
  }
  write_pod<std::uint64_t>(os, table.raw().size());
  os.write(reinterpret_cast<const char*>(table.raw().data()),
           static_cast<std::streamsize>(table.raw().size()));
  if (!os) throw Error(ErrorCode::Io, "short write to " + path.string());
}

DistanceTable load_table(const std::filesystem::path& path, const TranspositionTree& t) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw Error(ErrorCode::Io, "cannot open " + path.string());
  char magic[4]{};
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0)
    throw Error(ErrorCode::Io, path.string() + ": bad magic");
  if (read_pod<std::uint32_t>(is) != kVersion)
    throw Error(ErrorCode::Io, path.string() + ": unsupported version");
  const auto n = static_cast<int>(read_pod<std::uint32_t>(is));
  const auto edge_count = read_pod<std::uint32_t>(is);
  if (!is || n != t.n() || edge_count != t.edges().size())
    throw Error(ErrorCode::Io, path.string() + ": header does not match tree");
  std::vector<VertexPair> edges;
  for (std::uint32_t k = 0; k < edge_count; ++k) {
    const int a = read_pod<std::uint8_t>(is);
    const int b = read_pod<std::uint8_t>(is);
    if (!is || a == b) throw Error(ErrorCode::Io, path.string() + ": corrupt edge list");
    edges.emplace_back(a, b);
  }
  if (edges != t.edges()) throw Error(ErrorCode::Io, path.string() + ": edge list differs");
  const auto count = read_pod<std::uint64_t>(is);
  if (!is || count != factorial(n)) throw Error(ErrorCode::Io, path.string() + ": bad entry count");
  std::vector<std::uint8_t> dist(count);
  is.read(reinterpret_cast<char*>(dist.data()), static_cast<std::streamsize>(count));
  if (!is) throw Error(ErrorCode::Io, path.string() + ": truncated");
  return DistanceTable(std::move(edges), n, std::move(dist));
}

std::string cache_file_name(const TranspositionTree& t) {
  std::string name = "n" + std::to_string(t.n()) + "-" + to_hex(canonical_form(t)) + "-";
  for (std::size_t k = 0; k < t.edges().size(); ++k) {
    if (k) name += '_';
    name += std::to_string(t.edges()[k].i) + "-" + std::to_string(t.edges()[k].j);
  }
  return name + ".tcdt";
}

DistanceTable cached_distance_table(const TranspositionTree& t,
                                    const std::filesystem::path& cache_dir, bool allow_n11) {
  const auto path = cache_dir / cache_file_name(t);
  if (std::filesystem::exists(path)) {
    try {
      return load_table(path, t);
    } catch (const Error&) {
      // Corrupt or stale entry: rebuild below.
    }
  }
  auto table = build_distance_table(t, allow_n11);
  std::filesystem::create_directories(cache_dir);
  save_table(table, path);
  return table;
}

// --- Marker sorting ----------------------------------------------------------

std::string_view to_string(EdgeKind kind) {
  return kind == EdgeKind::TypeA ? "A" : "B";
}

std::optional<EdgeKind> classify_edge(const TranspositionTree& t, const Permutation& p,
                                      VertexPair edge) {
  if (!t.has_edge(edge.i, edge.j)) return std::nullopt;
  const int i = edge.i, j = edge.j;
  const int mi = p(i), mj = p(j);
  const bool i_improves = t.distance(j, mi) < t.distance(i, mi);
  const bool j_improves = t.distance(i, mj) < t.distance(j, mj);
  if (i_improves && j_improves) return EdgeKind::TypeA;
  if ((mi == i && j_improves) || (mj == j && i_improves)) return EdgeKind::TypeB;
  return std::nullopt;
}

std::vector<AdmissibleEdge> admissible_edges(const TranspositionTree& t, const Permutation& p) {
  if (p.size() != t.n() || t.label_bound() != t.n())
    throw Error(ErrorCode::SizeMismatch, "tree and permutation sizes differ");
  std::vector<AdmissibleEdge> out;
  for (const auto& e : t.edges())
    if (auto kind = classify_edge(t, p, e)) out.push_back({e, *kind});
  return out;
}

EdgeSelector default_edge_selector() {
  return [](const TranspositionTree&, const Permutation&,
            std::span<const AdmissibleEdge> candidates) {
    for (const auto& c : candidates)
      if (c.kind == EdgeKind::TypeA) return c;
    return candidates.front();
  };
}

AdmissibleEdge find_admissible_edge(const TranspositionTree& t, const Permutation& p) {
  const auto candidates = admissible_edges(t, p);
  if (candidates.empty())
    throw Error(ErrorCode::NoAdmissibleEdge, "no admissible edge for " + to_string(p));
  return default_edge_selector()(t, p, candidates);
}

AkTrace ak_sort(const TranspositionTree& t, const Permutation& p, const EdgeSelector& select) {
  AkTrace trace;
  trace.start = p;
  Permutation current = p;
  const int budget = distance_bound(t, p);
  while (!is_identity(current)) {
    const auto candidates = admissible_edges(t, current);
    if (candidates.empty())
      throw Error(ErrorCode::NoAdmissibleEdge, "no admissible edge for " + to_string(current));
    const AdmissibleEdge chosen = select(t, current, candidates);
    if (std::find(candidates.begin(), candidates.end(), chosen) == candidates.end())
      throw Error(ErrorCode::OutOfRange, "selector returned a non-admissible edge");
    current = apply_transposition(current, chosen.edge.i, chosen.edge.j);
    trace.edges_applied.push_back(chosen.edge);
    trace.edge_kinds.push_back(chosen.kind);
    trace.f_values.push_back(distance_bound(t, current));
    if (trace.word_length() > budget)
      throw Error(ErrorCode::NoAdmissibleEdge, "sorting exceeded f_T(start) steps");
  }
  return trace;
}

ReplayReport replay_word(const TranspositionTree& t, const Permutation& p,
                         std::span<const VertexPair> word) {
  ReplayReport report;
  Permutation current = p;
  for (std::size_t k = 0; k < word.size(); ++k) {
    const VertexPair e = word[k];
    if (!t.has_edge(e.i, e.j)) {
      report.all_admissible = false;
      report.first_failure = k;
      report.message = "step " + std::to_string(k + 1) + ": " + to_string(e) + " is not a tree edge";
      report.steps.push_back({e, std::nullopt, distance_bound(t, current)});
      return report;
    }
    const auto kind = classify_edge(t, current, e);
    current = apply_transposition(current, e.i, e.j);
    report.steps.push_back({e, kind, distance_bound(t, current)});
    if (!kind) {
      report.all_admissible = false;
      report.first_failure = k;
      report.message = "step " + std::to_string(k + 1) + ": " + to_string(e) + " is not admissible";
      return report;
    }
  }
  report.sorts = is_identity(current);
  if (!report.sorts) report.message = "word does not sort the permutation";
  return report;
}

std::vector<VertexPair> parse_word(std::string_view text) {
  std::vector<int> numbers;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const char c = text[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      int value = 0;
      auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
      if (ec != std::errc()) throw Error(ErrorCode::Parse, "bad number in word");
      numbers.push_back(value);
      pos = static_cast<std::size_t>(ptr - text.data());
    } else if (std::isspace(static_cast<unsigned char>(c)) || c == '(' || c == ')' || c == ',' ||
               c == '-') {
      ++pos;
    } else {
      throw Error(ErrorCode::Parse, std::string("unexpected '") + c + "' in word '" +
                                        std::string(text) + "'");
    }
  }
  if (numbers.size() % 2 != 0) throw Error(ErrorCode::Parse, "word has an odd number of labels");
  std::vector<VertexPair> word;
  for (std::size_t k = 0; k < numbers.size(); k += 2) word.emplace_back(numbers[k], numbers[k + 1]);
  return word;
}

}  // namespace tcayley
