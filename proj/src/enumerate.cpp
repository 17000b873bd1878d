#include "redweave/enumerate.hpp"

#include <atomic>
#include <limits>
#include <thread>
#include <unordered_map>

#include "redweave/error.hpp"

namespace redweave {

namespace {

std::uint64_t saturating_add(std::uint64_t a, std::uint64_t b) {
  return a > std::numeric_limits<std::uint64_t>::max() - b
             ? std::numeric_limits<std::uint64_t>::max()
             : a + b;
}

std::uint64_t count_memo(std::vector<int>& v,
                         std::unordered_map<Permutation, std::uint64_t>& memo) {
  bool any_descent = false;
  for (std::size_t i = 0; i + 1 < v.size() && !any_descent; ++i) {
    any_descent = v[i] > v[i + 1];
  }
  if (!any_descent) return 1;
  Permutation key{v};
  if (auto it = memo.find(key); it != memo.end()) return it->second;
  std::uint64_t total = 0;
  for (std::size_t i = 0; i + 1 < v.size(); ++i) {
    if (v[i] > v[i + 1]) {
      // The last letter of a reduced word of w can be any descent i; the
      // rest is a reduced word of w with positions i, i+1 swapped back.
      std::swap(v[i], v[i + 1]);
      total = saturating_add(total, count_memo(v, memo));
      std::swap(v[i], v[i + 1]);
    }
  }
  memo.emplace(std::move(key), total);
  return total;
}

struct LeafOnly {
  const std::function<void(std::span<const Letter>)>& leaf_fn;
  bool enter(int, int, int) { return true; }
  void leave() {}
  void leaf(std::span<const Letter> w) { leaf_fn(w); }
};

struct PrefixCollector {
  int depth;
  int current = 0;
  std::vector<Letter> letters;
  std::vector<std::vector<Letter>>& out;
  bool enter(int letter, int, int) {
    letters.push_back(static_cast<Letter>(letter));
    if (current + 1 == depth) {
      out.push_back(letters);
      letters.pop_back();
      return false;
    }
    ++current;
    return true;
  }
  void leave() {
    letters.pop_back();
    --current;
  }
  void leaf(std::span<const Letter> w) { out.emplace_back(w.begin(), w.end()); }
};

}  // namespace

std::uint64_t count_reduced_words(const Permutation& w) {
  std::unordered_map<Permutation, std::uint64_t> memo;
  std::vector<int> v(w.values().begin(), w.values().end());
  return count_memo(v, memo);
}

void require_word_budget(const Permutation& w, std::uint64_t budget) {
  const std::uint64_t words = count_reduced_words(w);
  if (words > budget) {
    throw BudgetExceeded(w.to_string() + " has " + std::to_string(words) +
                         " reduced words, above the budget of " + std::to_string(budget));
  }
}

void for_each_reduced_word(const Permutation& w,
                           const std::function<void(std::span<const Letter>)>& leaf) {
  LeafOnly visitor{leaf};
  ReducedWordWalker<LeafOnly> walker(w, visitor);
  walker.run();
}

std::vector<Word> enumerate_reduced_words(const Permutation& w, std::uint64_t budget) {
  require_word_budget(w, budget);
  std::vector<Word> out;
  for_each_reduced_word(w, [&](std::span<const Letter> letters) {
    out.emplace_back(w.size(), std::vector<Letter>(letters.begin(), letters.end()));
  });
  return out;
}

std::vector<std::vector<Letter>> word_prefixes(const Permutation& w, int depth) {
  std::vector<std::vector<Letter>> out;
  PrefixCollector visitor{depth, 0, {}, out};
  ReducedWordWalker<PrefixCollector> walker(w, visitor);
  walker.run();
  return out;
}

std::vector<std::vector<Letter>> partition_walk(const Permutation& w, unsigned threads) {
  if (threads <= 1) return {std::vector<Letter>{}};
  // Deepen until there are comfortably more tasks than workers.
  const int length = static_cast<int>(inversions(w));
  std::vector<std::vector<Letter>> tasks{std::vector<Letter>{}};
  for (int depth = 1; depth <= std::min(length, 6); ++depth) {
    tasks = word_prefixes(w, depth);
    if (tasks.size() >= 8 * static_cast<std::size_t>(threads)) break;
  }
  return tasks;
}

void run_tasks(std::size_t task_count, unsigned threads,
               const std::function<void(std::size_t)>& task) {
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(task_count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < task_count; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < task_count && !failed; i = next++) {
          try {
            task(i);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

unsigned resolve_threads(unsigned requested) {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace redweave
