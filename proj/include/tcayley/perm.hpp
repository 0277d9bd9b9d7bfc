#pragma once

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace tcayley {

/// A permutation of {1..n} in one-line notation: position i holds p(i).
///
/// Labels are 1-based everywhere in the public interface. Composition
/// follows the right-acts-first convention: `compose(p, q)(i) == p(q(i))`.
class Permutation {
 public:
  /// Identity on {1..n}. Throws OutOfRange if n < 1.
  static Permutation identity(int n);

  /// Validates that `one_line` is a bijection on {1..n}.
  explicit Permutation(std::vector<int> one_line);

  int size() const noexcept { return static_cast<int>(image_.size()); }

  /// p(label), both 1-based. Throws OutOfRange on a bad label.
  int operator()(int label) const;

  const std::vector<int>& one_line() const noexcept { return image_; }

  bool operator==(const Permutation&) const = default;
  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> image_;
};

int cycle_count(const Permutation& p);
std::int64_t inversions(const Permutation& p);
/// Sorted ascending.
std::vector<int> fixed_points(const Permutation& p);

Permutation compose(const Permutation& p, const Permutation& q);
Permutation inverse(const Permutation& p);
bool is_identity(const Permutation& p);

/// Right multiplication p·(i,j): swaps the entries at positions i and j.
Permutation apply_transposition(const Permutation& p, int i, int j);

/// The transposition (i,j) as a permutation of {1..n}.
Permutation transposition(int n, int i, int j);

/// Lexicographic rank in [0, n!). Supported for n <= 20.
std::uint64_t rank(const Permutation& p);
Permutation unrank(std::uint64_t r, int n);

std::uint64_t factorial(int n);

/// Cycles with length >= 2, each starting at its smallest label, ordered by
/// that label.
std::vector<std::vector<int>> cycles(const Permutation& p);

/// "[3,5,1,4,2]"
std::string to_string(const Permutation& p);
/// "(1,3)(2,5)"; "()" for the identity.
std::string to_cycle_string(const Permutation& p);

/// Accepts one-line notation "[3,5,1,4,2]" or a product of cycles
/// "(1,3)(2,5)". Cycles need not be disjoint; the product is evaluated
/// right-to-left (rightmost cycle acts first). For cycle input the degree
/// is `n` when given, otherwise the largest label mentioned.
Permutation parse_permutation(std::string_view text, int n = 0);

}  // namespace tcayley
