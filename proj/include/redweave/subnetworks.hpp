#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "redweave/enumerate.hpp"
#include "redweave/permutation.hpp"
#include "redweave/word.hpp"

namespace redweave {

/// A strictly increasing set of values drawn from 1..n (the tracked wires).
class WireSubset {
 public:
  /// Throws InputError unless values are strictly increasing within 1..n.
  WireSubset(int n, std::vector<int> values);
  static WireSubset from_mask(int n, std::uint32_t mask);

  int n() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(values_.size()); }
  std::span<const int> values() const noexcept { return values_; }
  std::uint32_t mask() const noexcept { return mask_; }

 private:
  int n_;
  std::vector<int> values_;
  std::uint32_t mask_ = 0;
};

/// The word the tracked values see: whenever two tracked values cross at
/// relative positions j, j+1 (among the tracked values), emit j.
Word induced_word(const Word& word, const WireSubset& subset);

/// A finite set X of reduced words, all of one permutation p of size m.
class WordSet {
 public:
  /// Throws InputError if a word is not reduced or the words disagree on p.
  /// An empty set needs the pattern size explicitly.
  WordSet(int m, std::vector<std::vector<Letter>> words);

  /// "123212;321232" or a preset name (see `preset`).
  static WordSet parse(std::string_view text, std::optional<int> m = std::nullopt);
  /// "warrington-x": {123212, 321232, 212321, 232123}.
  static WordSet warrington();
  static WordSet singleton(const Word& word);
  static WordSet of_class(const Word& representative);
  /// Named sets; "warrington-x", or "s4-longest-classes:K" for the K-th
  /// (0-based) commutation class of 4321.
  static std::optional<WordSet> preset(std::string_view name);

  int m() const noexcept { return m_; }
  /// Null for an empty set.
  const std::optional<Permutation>& pattern() const noexcept { return pattern_; }
  const std::set<std::vector<Letter>>& words() const noexcept { return words_; }
  bool empty() const noexcept { return words_.empty(); }
  bool contains(std::span<const Letter> letters) const;
  std::string to_string() const;

 private:
  int m_;
  std::optional<Permutation> pattern_;
  std::set<std::vector<Letter>> words_;
};

/// Reference count: one replay per m-subset of values.
std::int64_t count_subnetworks(const Word& word, const WordSet& x);

/// Counts X-subnetworks of many words sharing one permutation w with a
/// single replay per word.  Only subsets whose restriction of w is the
/// pattern of X are tracked; each carries its position in a prefix trie of
/// X, advanced whenever two of its values cross.  State changes are undone
/// in LIFO order, so a ReducedWordWalker can drive it directly.
class SubnetworkTracker {
 public:
  SubnetworkTracker(const Permutation& w, const WordSet& x);

  /// Replays `letters` from the identity; they must be a reduced word of w.
  std::int64_t count(std::span<const Letter> letters);

  /// Walker protocol.  `enter` records the crossing of left_value and
  /// right_value at position `letter`.
  void push(int letter, int left_value, int right_value);
  void pop();
  std::int64_t matches() const noexcept { return matches_; }
  void reset();

  std::size_t tracked_subsets() const noexcept { return masks_.size(); }

 private:
  struct Undo {
    std::uint32_t subset;
    std::uint8_t state;
  };

  int n_;
  static constexpr std::uint8_t kDead = 0xff;
  std::vector<std::array<std::uint8_t, 8>> trie_next_;  // letter -> node
  std::vector<bool> trie_accept_;
  std::vector<std::uint32_t> masks_;
  std::vector<std::vector<std::uint32_t>> by_pair_;  // pair (a,b) -> subsets
  std::vector<std::uint8_t> state_;
  std::vector<std::uint32_t> prefix_;  // prefix_[k]: values at positions 1..k
  std::vector<int> arrangement_;
  std::vector<Undo> undo_;
  std::vector<std::size_t> frames_;
  std::vector<std::int64_t> match_frames_;
  std::int64_t matches_ = 0;
};

/// Number of 212-subnetworks: the rank statistic of P(w).
std::int64_t count_212(std::span<const Letter> letters);

struct AvoidanceCounts {
  std::uint64_t words = 0;
  std::optional<std::uint64_t> classes;
};

/// Reduced words of w with no X-subnetwork, and optionally the number of
/// commutation classes made of such words.  Prunes every prefix that has
/// already completed an X-subnetwork.
AvoidanceCounts count_x_avoiding_words(const Permutation& w, const WordSet& x,
                                       bool count_classes, const RunOptions& options = {});

enum class FriendlyStatus {
  Friendly,        // every 321-pattern lies in exactly k p-patterns
  NotFriendly,     // the containment count varies
  Vacuous,         // w has no 321-pattern; k reported as 0
  PatternLacks321  // p itself has no 321-pattern
};

struct Friendliness {
  FriendlyStatus status;
  std::int64_t k = 0;
  bool defined() const noexcept {
    return status == FriendlyStatus::Friendly || status == FriendlyStatus::Vacuous;
  }
};

Friendliness friendliness(const Permutation& w, const Permutation& p);

struct PredictedCount {
  std::int64_t predicted = 0;
  std::int64_t actual = 0;
  std::int64_t k = 0;
  std::int64_t c = 0;  // index sum of the lowest class of P(w)
};

/// For p with exactly one 321-pattern and w p-friendly with constant k:
/// X is the top class of P(p); the X-subnetwork count of `word` equals
/// k * (index_sum(word) - c).  Throws InputError naming the failed
/// precondition.
PredictedCount predicted_count_friendly(const Permutation& w, const Word& word,
                                        const Permutation& p, const RunOptions& options = {});

/// sum_j (i_j - 1)(n - i_j - 1) - 2 C(n, 4) alongside the direct count of
/// Warrington-X subnetworks.  Throws InputError unless `word` is a reduced
/// word of w_0.
PredictedCount predicted_count_w0_s4(const Word& word);

struct Transformed {
  Word word;
  bool same_permutation;
};

/// Letters reversed; always a reduced word of w^{-1}.
Transformed reverse_word(const Word& word, const Permutation& w);
/// Letters r -> n - r; always a reduced word of w_0 w w_0.
Transformed complement_word(const Word& word, const Permutation& w);

}  // namespace redweave
