#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "redweave/permutation.hpp"
#include "redweave/word.hpp"

namespace redweave {

inline constexpr std::uint64_t kDefaultWordBudget = 100'000'000;

/// Knobs shared by every enumeration-backed computation.
struct RunOptions {
  std::uint64_t budget_words = kDefaultWordBudget;
  unsigned threads = 1;
};

/// |R(w)| by the descent recursion |R(w)| = sum over descents i of
/// |R(w s_i)|, memoized over the lower interval.  Saturates at UINT64_MAX.
std::uint64_t count_reduced_words(const Permutation& w);

/// Throws BudgetExceeded when |R(w)| exceeds `budget`.
void require_word_budget(const Permutation& w, std::uint64_t budget);

/// Depth-first walk over the reduced words of w in lexicographic order.
///
/// The walk replays letters from the identity: letter i is admissible when
/// the values at positions i, i+1 are still in increasing order and appear
/// inverted in w.  The visitor sees every step:
///
///   bool enter(int letter, int left_value, int right_value)
///       about to swap left_value (at position letter) with right_value;
///       `false` prunes the subtree (no matching leave()).
///   void leave()           undo the last accepted enter().
///   void leaf(std::span<const Letter> letters)   a complete reduced word.
///
/// `prefix` fixes the first letters; it must itself be admissible.
template <class Visitor>
class ReducedWordWalker {
 public:
  ReducedWordWalker(const Permutation& w, Visitor& visitor)
      : n_(w.size()), length_(static_cast<int>(inversions(w))), visitor_(visitor) {
    target_pos_ = w.positions();
    current_.resize(n_ + 2);
    for (int i = 1; i <= n_; ++i) current_[i] = i;
    letters_.reserve(length_);
  }

  /// Returns false if the prefix is not admissible for w.
  bool run(std::span<const Letter> prefix = {}) {
    std::size_t accepted = 0;
    bool ok = true;
    for (Letter letter : prefix) {
      if (!admissible(letter)) {
        ok = false;
        break;
      }
      if (!step_in(letter)) break;
      ++accepted;
    }
    if (ok && accepted == prefix.size()) descend();
    while (accepted-- > 0) step_out();
    return ok;
  }

 private:
  bool admissible(int i) const noexcept {
    if (i < 1 || i >= n_) return false;
    const int a = current_[i];
    const int b = current_[i + 1];
    return a < b && target_pos_[a] > target_pos_[b];
  }

  bool step_in(int i) {
    const int a = current_[i];
    const int b = current_[i + 1];
    if (!visitor_.enter(i, a, b)) return false;
    current_[i] = b;
    current_[i + 1] = a;
    letters_.push_back(static_cast<Letter>(i));
    return true;
  }

  void step_out() {
    const int i = letters_.back();
    letters_.pop_back();
    std::swap(current_[i], current_[i + 1]);
    visitor_.leave();
  }

  void descend() {
    if (static_cast<int>(letters_.size()) == length_) {
      visitor_.leaf(std::span<const Letter>(letters_));
      return;
    }
    for (int i = 1; i < n_; ++i) {
      if (!admissible(i)) continue;
      if (!step_in(i)) continue;
      descend();
      step_out();
    }
  }

  int n_;
  int length_;
  Visitor& visitor_;
  std::vector<int> target_pos_;
  std::vector<int> current_;  // 1-based positions
  std::vector<Letter> letters_;
};

/// Calls `leaf` for every reduced word of w, lexicographically.
void for_each_reduced_word(const Permutation& w,
                           const std::function<void(std::span<const Letter>)>& leaf);

/// All reduced words of w, lexicographically.  Respects the word budget.
std::vector<Word> enumerate_reduced_words(const Permutation& w,
                                          std::uint64_t budget = kDefaultWordBudget);

/// Admissible prefixes of length `depth` (or complete words, if shorter),
/// lexicographically.  Used to split a walk into independent tasks.
std::vector<std::vector<Letter>> word_prefixes(const Permutation& w, int depth);

/// Splits the walk into prefix tasks and runs `task(prefix)` on up to
/// `threads` workers.  Tasks are returned in fixed prefix order so callers
/// can reduce deterministically.
std::vector<std::vector<Letter>> partition_walk(const Permutation& w, unsigned threads);
void run_tasks(std::size_t task_count, unsigned threads,
               const std::function<void(std::size_t)>& task);

/// Resolves a thread count: 0 means hardware concurrency.
unsigned resolve_threads(unsigned requested);

}  // namespace redweave
