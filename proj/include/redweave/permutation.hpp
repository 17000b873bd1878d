#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace redweave {

/// A permutation of {1..n} in one-line notation w(1)..w(n).
///
/// Values are stored 1-based exactly as written; `operator[]` takes a
/// 0-based position.  Construction validates the bijection.
class Permutation {
 public:
  /// Throws InputError unless `values` is a bijection on {1..n}, n >= 1.
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);
  /// w_0 = n, n-1, ..., 1.
  static Permutation longest(int n);
  /// Accepts "3,4,2,1" or, for n <= 9, the compact "3421".
  static Permutation parse(std::string_view text);

  int size() const noexcept { return static_cast<int>(values_.size()); }
  int operator[](int position) const noexcept { return values_[position]; }
  std::span<const int> values() const noexcept { return values_; }

  /// Position (0-based) of each value; index 0 unused.
  std::vector<int> positions() const;
  Permutation inverse() const;
  bool is_identity() const noexcept;

  /// Compact digits when n <= 9, comma-separated otherwise.
  std::string to_string() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> values_;
};

/// l(w): number of pairs i < j with w(i) > w(j).
std::int64_t inversions(const Permutation& w);

/// N_p(w): number of index subsets of w order-isomorphic to p.  Returns 0
/// when p is longer than w.
std::int64_t pattern_count(const Permutation& w, const Permutation& p);

/// Calls `visit` with the 0-based positions of every occurrence of p in w.
void for_each_occurrence(const Permutation& w, const Permutation& p,
                         const std::function<void(std::span<const int>)>& visit);

bool avoids(const Permutation& w, const Permutation& p);

/// The relative order of w restricted to the given (sorted, 0-based)
/// positions, as a permutation of size |positions|.
Permutation standardize(const Permutation& w, std::span<const int> positions);

/// Cap on enumerate_sn unless the caller raises it.
inline constexpr int kDefaultSnCap = 8;

/// All n! permutations of size n in lexicographic order of one-line
/// notation.  Throws BudgetExceeded when n > cap.
std::vector<Permutation> enumerate_sn(int n, int cap = kDefaultSnCap);

}  // namespace redweave

template <>
struct std::hash<redweave::Permutation> {
  std::size_t operator()(const redweave::Permutation& w) const noexcept {
    std::size_t h = 1469598103934665603ull;
    for (int v : w.values()) {
      h = (h ^ static_cast<std::size_t>(v)) * 1099511628211ull;
    }
    return h;
  }
};
