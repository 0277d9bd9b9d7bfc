#include "tcayley/perm.hpp"

#include <algorithm>
#include <cctype>
#include <bit>
#include <charconv>

#include "tcayley/error.hpp"

namespace tcayley {

namespace {

void check_same_size(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size())
    throw Error(ErrorCode::SizeMismatch,
                "permutation sizes differ: " + std::to_string(p.size()) +
                    " vs " + std::to_string(q.size()));
}

void check_label(int label, int n) {
  if (label < 1 || label > n)
    throw Error(ErrorCode::OutOfRange, "label " + std::to_string(label) +
                                           " outside 1.." + std::to_string(n));
}

}  // namespace

Permutation Permutation::identity(int n) {
  if (n < 1) throw Error(ErrorCode::OutOfRange, "permutation size must be >= 1");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

Permutation::Permutation(std::vector<int> one_line) : image_(std::move(one_line)) {
  const int n = size();
  if (n < 1) throw Error(ErrorCode::OutOfRange, "permutation size must be >= 1");
  std::vector<bool> seen(n + 1, false);
  for (int v : image_) {
    if (v < 1 || v > n)
      throw Error(ErrorCode::BadLabel, "label " + std::to_string(v) +
                                           " outside 1.." + std::to_string(n));
    if (seen[v])
      throw Error(ErrorCode::BadLabel, "label " + std::to_string(v) + " repeated");
    seen[v] = true;
  }
}

int Permutation::operator()(int label) const {
  check_label(label, size());
  return image_[label - 1];
}

int cycle_count(const Permutation& p) {
  const int n = p.size();
  const auto& img = p.one_line();
  std::vector<bool> seen(n, false);
  int count = 0;
  for (int start = 0; start < n; ++start) {
    if (seen[start]) continue;
    ++count;
    for (int i = start; !seen[i]; i = img[i] - 1) seen[i] = true;
  }
  return count;
}

std::int64_t inversions(const Permutation& p) {
  // Fenwick tree over values.
  const int n = p.size();
  std::vector<int> bit(n + 1, 0);
  std::int64_t inv = 0;
  for (int i = n - 1; i >= 0; --i) {
    const int v = p.one_line()[i];
    for (int k = v - 1; k > 0; k -= k & -k) inv += bit[k];
    for (int k = v; k <= n; k += k & -k) ++bit[k];
  }
  return inv;
}

std::vector<int> fixed_points(const Permutation& p) {
  std::vector<int> out;
  for (int i = 1; i <= p.size(); ++i)
    if (p.one_line()[i - 1] == i) out.push_back(i);
  return out;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  check_same_size(p, q);
  std::vector<int> v(p.size());
  for (int i = 0; i < p.size(); ++i) v[i] = p.one_line()[q.one_line()[i] - 1];
  return Permutation(std::move(v));
}

Permutation inverse(const Permutation& p) {
  std::vector<int> v(p.size());
  for (int i = 0; i < p.size(); ++i) v[p.one_line()[i] - 1] = i + 1;
  return Permutation(std::move(v));
}

bool is_identity(const Permutation& p) {
  for (int i = 0; i < p.size(); ++i)
    if (p.one_line()[i] != i + 1) return false;
  return true;
}

Permutation apply_transposition(const Permutation& p, int i, int j) {
  check_label(i, p.size());
  check_label(j, p.size());
  if (i == j) throw Error(ErrorCode::BadLabel, "transposition needs two distinct labels");
  std::vector<int> v = p.one_line();
  std::swap(v[i - 1], v[j - 1]);
  return Permutation(std::move(v));
}

Permutation transposition(int n, int i, int j) {
  return apply_transposition(Permutation::identity(n), i, j);
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw Error(ErrorCode::TooLarge, "factorial defined here for 0..20");
  std::uint64_t f = 1;
  for (int k = 2; k <= n; ++k) f *= static_cast<std::uint64_t>(k);
  return f;
}

std::uint64_t rank(const Permutation& p) {
  const int n = p.size();
  if (n > 20) throw Error(ErrorCode::TooLarge, "rank supports n <= 20");
  std::uint64_t r = 0;
  std::uint32_t used = 0;
  for (int i = 0; i < n; ++i) {
    const int v = p.one_line()[i] - 1;
    const int smaller_unused = v - std::popcount(used & ((1u << v) - 1u));
    r += static_cast<std::uint64_t>(smaller_unused) * factorial(n - 1 - i);
    used |= 1u << v;
  }
  return r;
}

Permutation unrank(std::uint64_t r, int n) {
  if (n < 1 || n > 20) throw Error(ErrorCode::TooLarge, "unrank supports 1 <= n <= 20");
  if (r >= factorial(n))
    throw Error(ErrorCode::OutOfRange, "rank " + std::to_string(r) + " >= " +
                                           std::to_string(n) + "!");
  std::vector<int> pool(n);
  for (int i = 0; i < n; ++i) pool[i] = i + 1;
  std::vector<int> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t f = factorial(n - 1 - i);
    const auto digit = static_cast<std::size_t>(r / f);
    r %= f;
    out.push_back(pool[digit]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(digit));
  }
  return Permutation(std::move(out));
}

std::vector<std::vector<int>> cycles(const Permutation& p) {
  const int n = p.size();
  std::vector<bool> seen(n + 1, false);
  std::vector<std::vector<int>> out;
  for (int start = 1; start <= n; ++start) {
    if (seen[start] || p.one_line()[start - 1] == start) continue;
    std::vector<int> cyc;
    for (int i = start; !seen[i]; i = p.one_line()[i - 1]) {
      seen[i] = true;
      cyc.push_back(i);
    }
    out.push_back(std::move(cyc));
  }
  return out;
}

std::string to_string(const Permutation& p) {
  std::string s = "[";
  for (int i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p.one_line()[i]);
  }
  return s + "]";
}

std::string to_cycle_string(const Permutation& p) {
  const auto cs = cycles(p);
  if (cs.empty()) return "()";
  std::string s;
  for (const auto& c : cs) {
    s += '(';
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k) s += ',';
      s += std::to_string(c[k]);
    }
    s += ')';
  }
  return s;
}

namespace {

class Scanner {
 public:
  explicit Scanner(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool done() {
    skip_ws();
    return pos_ >= text_.size();
  }
  bool peek(char c) {
    skip_ws();
    return pos_ < text_.size() && text_[pos_] == c;
  }
  void expect(char c) {
    if (!peek(c)) fail(std::string("expected '") + c + "'");
    ++pos_;
  }
  int integer() {
    skip_ws();
    int value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + pos_, text_.data() + text_.size(), value);
    if (ec != std::errc()) fail("expected an integer");
    pos_ = static_cast<std::size_t>(ptr - text_.data());
    return value;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw Error(ErrorCode::Parse, "cannot parse permutation '" + std::string(text_) +
                                      "' at offset " + std::to_string(pos_) + ": " + why);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Permutation parse_permutation(std::string_view text, int n) {
  Scanner sc(text);
  if (sc.peek('[')) {
    sc.expect('[');
    std::vector<int> v;
    if (!sc.peek(']')) {
      v.push_back(sc.integer());
      while (sc.peek(',')) {
        sc.expect(',');
        v.push_back(sc.integer());
      }
    }
    sc.expect(']');
    if (!sc.done()) sc.fail("trailing characters");
    if (n != 0 && static_cast<int>(v.size()) != n)
      throw Error(ErrorCode::SizeMismatch, "permutation has " + std::to_string(v.size()) +
                                               " entries, expected " + std::to_string(n));
    return Permutation(std::move(v));
  }

  std::vector<std::vector<int>> cyc_list;
  int max_label = 0;
  while (!sc.done()) {
    sc.expect('(');
    std::vector<int> c;
    if (!sc.peek(')')) {
      c.push_back(sc.integer());
      while (sc.peek(',')) {
        sc.expect(',');
        c.push_back(sc.integer());
      }
    }
    sc.expect(')');
    for (int v : c) {
      if (v < 1) sc.fail("labels must be >= 1");
      max_label = std::max(max_label, v);
    }
    std::vector<int> sorted = c;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      sc.fail("label repeated inside a cycle");
    cyc_list.push_back(std::move(c));
  }
  if (n == 0) n = std::max(max_label, 1);
  if (max_label > n)
    throw Error(ErrorCode::BadLabel, "label " + std::to_string(max_label) +
                                         " exceeds degree " + std::to_string(n));
  Permutation result = Permutation::identity(n);
  // Rightmost cycle acts first: result = c1 * c2 * ... * ck.
  for (auto it = cyc_list.rbegin(); it != cyc_list.rend(); ++it) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    const auto& c = *it;
    for (std::size_t k = 0; k < c.size(); ++k) v[c[k] - 1] = c[(k + 1) % c.size()];
    result = compose(Permutation(std::move(v)), result);
  }
  return result;
}

}  // namespace tcayley
