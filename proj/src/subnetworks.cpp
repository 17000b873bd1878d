#include "redweave/subnetworks.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <map>
#include <numeric>
#include <unordered_set>

#include "redweave/classes.hpp"
#include "redweave/error.hpp"
#include "text.hpp"

namespace redweave {

WireSubset::WireSubset(int n, std::vector<int> values) : n_(n), values_(std::move(values)) {
  if (values_.empty()) throw InputError("wire subset must be non-empty");
  if (n > 31) throw InputError("wire subsets support n <= 31");
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (values_[i] < 1 || values_[i] > n || (i > 0 && values_[i] <= values_[i - 1])) {
      throw InputError("wire subset must be strictly increasing within 1.." + std::to_string(n));
    }
    mask_ |= 1u << values_[i];
  }
}

WireSubset WireSubset::from_mask(int n, std::uint32_t mask) {
  std::vector<int> values;
  for (int v = 1; v <= n; ++v) {
    if (mask & (1u << v)) values.push_back(v);
  }
  return WireSubset(n, std::move(values));
}

namespace {

// Induced letters of the subset `mask` under `letters`, appended to `out`.
void induced_letters(int n, std::span<const Letter> letters, std::uint32_t mask,
                     std::vector<Letter>& out) {
  out.clear();
  Letter arrangement[32];
  for (int i = 0; i < n; ++i) arrangement[i] = static_cast<Letter>(i + 1);
  for (Letter l : letters) {
    const int a = arrangement[l - 1];
    const int b = arrangement[l];
    if ((mask >> a & 1u) && (mask >> b & 1u)) {
      int left = 0;
      for (int p = 0; p < l - 1; ++p) left += (mask >> arrangement[p]) & 1u;
      out.push_back(static_cast<Letter>(left + 1));
    }
    std::swap(arrangement[l - 1], arrangement[l]);
  }
}

template <class F>
void for_each_mask_of_size(int n, int m, F&& f) {
  if (m < 1 || m > n) return;
  // Gosper's hack over bits 1..n.
  std::uint32_t comb = (1u << m) - 1;
  const std::uint32_t limit = 1u << n;
  while (comb < limit) {
    f(comb << 1);
    const std::uint32_t c = comb & -comb;
    const std::uint32_t r = comb + c;
    comb = (((r ^ comb) >> 2) / c) | r;
  }
}

}  // namespace

Word induced_word(const Word& word, const WireSubset& subset) {
  if (subset.n() != word.n()) throw InputError("wire subset and word disagree on n");
  std::vector<Letter> out;
  induced_letters(word.n(), word.letters(), subset.mask(), out);
  return Word(std::max(1, subset.size()), std::move(out));
}

WordSet::WordSet(int m, std::vector<std::vector<Letter>> words) : m_(m) {
  if (m < 1) throw InputError("word set pattern size must be positive");
  for (auto& letters : words) {
    Word word(m, letters);
    auto eval = evaluate(word);
    if (!eval.reduced) throw InputError("word set member " + word.to_string() + " is not reduced");
    if (pattern_ && !(*pattern_ == eval.result)) {
      throw InputError("word set members evaluate to different permutations (" +
                       pattern_->to_string() + " vs " + eval.result.to_string() + ")");
    }
    pattern_ = eval.result;
    words_.insert(std::move(letters));
  }
}

WordSet WordSet::parse(std::string_view text, std::optional<int> m) {
  if (auto named = preset(text)) return *named;
  std::vector<std::vector<int>> raw;
  int max_letter = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    auto piece = text.substr(start, end - start);
    auto values = detail::parse_int_list(piece, "word", /*allow_compact=*/true);
    if (!values.empty()) {
      for (int v : values) max_letter = std::max(max_letter, v);
      raw.push_back(std::move(values));
    }
    start = end + 1;
  }
  const int size = m.value_or(max_letter + 1);
  std::vector<std::vector<Letter>> words;
  for (const auto& r : raw) {
    std::vector<Letter> letters;
    for (int v : r) {
      if (v < 1 || v >= size) throw InputError("word set letter out of range for m=" + std::to_string(size));
      letters.push_back(static_cast<Letter>(v));
    }
    words.push_back(std::move(letters));
  }
  return WordSet(size, std::move(words));
}

WordSet WordSet::warrington() {
  return WordSet(4, {{1, 2, 3, 2, 1, 2}, {3, 2, 1, 2, 3, 2}, {2, 1, 2, 3, 2, 1}, {2, 3, 2, 1, 2, 3}});
}

WordSet WordSet::singleton(const Word& word) {
  return WordSet(word.n(), {std::vector<Letter>(word.letters().begin(), word.letters().end())});
}

WordSet WordSet::of_class(const Word& representative) {
  std::vector<std::vector<Letter>> words;
  for (const auto& member : class_members(representative)) {
    words.emplace_back(member.letters().begin(), member.letters().end());
  }
  return WordSet(representative.n(), std::move(words));
}

std::optional<WordSet> WordSet::preset(std::string_view name) {
  if (name == "warrington-x") return warrington();
  constexpr std::string_view kClasses = "s4-longest-classes:";
  if (name.starts_with(kClasses)) {
    const int index = detail::parse_int(name.substr(kClasses.size()), "class index");
    auto classes = enumerate_classes(Permutation::longest(4));
    if (index < 0 || index >= static_cast<int>(classes.size())) {
      throw InputError("s4-longest-classes index must be in 0.." + std::to_string(classes.size() - 1));
    }
    return of_class(classes[index].canonical);
  }
  return std::nullopt;
}

bool WordSet::contains(std::span<const Letter> letters) const {
  return words_.count(std::vector<Letter>(letters.begin(), letters.end())) > 0;
}

std::string WordSet::to_string() const {
  std::string out;
  for (const auto& w : words_) {
    if (!out.empty()) out += ';';
    out += Word(m_, w).to_string();
  }
  return out;
}

std::int64_t count_subnetworks(const Word& word, const WordSet& x) {
  if (x.empty() || x.m() > word.n()) return 0;
  std::int64_t count = 0;
  std::vector<Letter> buffer;
  for_each_mask_of_size(word.n(), x.m(), [&](std::uint32_t mask) {
    induced_letters(word.n(), word.letters(), mask, buffer);
    if (x.contains(buffer)) ++count;
  });
  return count;
}

std::int64_t count_212(std::span<const Letter> letters) {
  if (letters.empty()) return 0;
  const int n = *std::max_element(letters.begin(), letters.end()) + 1;
  std::int64_t count = 0;
  std::vector<Letter> buffer;
  for_each_mask_of_size(n, 3, [&](std::uint32_t mask) {
    induced_letters(n, letters, mask, buffer);
    if (buffer.size() == 3 && buffer[0] == 2 && buffer[1] == 1 && buffer[2] == 2) ++count;
  });
  return count;
}

SubnetworkTracker::SubnetworkTracker(const Permutation& w, const WordSet& x) : n_(w.size()) {
  if (n_ > 30) throw InputError("subnetwork tracking supports n <= 30");
  if (x.m() > 8 && !x.empty()) throw InputError("subnetwork tracking supports patterns of size <= 8");
  // Prefix trie of X; node 0 is the root.
  trie_next_.push_back({});
  trie_next_[0].fill(kDead);
  trie_accept_.push_back(false);
  for (const auto& word : x.words()) {
    std::size_t node = 0;
    for (Letter l : word) {
      if (trie_next_[node][l] == kDead) {
        if (trie_next_.size() >= kDead) throw InputError("word set too large for the prefix trie");
        trie_next_[node][l] = static_cast<std::uint8_t>(trie_next_.size());
        trie_next_.push_back({});
        trie_next_.back().fill(kDead);
        trie_accept_.push_back(false);
      }
      node = trie_next_[node][l];
    }
    trie_accept_[node] = true;
  }
  by_pair_.resize(static_cast<std::size_t>(n_ + 1) * (n_ + 1));
  if (!x.empty() && x.m() <= n_) {
    const auto pos = w.positions();
    const Permutation& p = *x.pattern();
    for_each_mask_of_size(n_, x.m(), [&](std::uint32_t mask) {
      // Track only subsets on which w restricts to p.
      std::vector<int> where;
      for (int v = 1; v <= n_; ++v) {
        if (mask >> v & 1u) where.push_back(pos[v]);
      }
      std::sort(where.begin(), where.end());
      if (!(standardize(w, where) == p)) return;
      const auto index = static_cast<std::uint32_t>(masks_.size());
      masks_.push_back(mask);
      for (int a = 1; a <= n_; ++a) {
        if (!(mask >> a & 1u)) continue;
        for (int b = a + 1; b <= n_; ++b) {
          if (mask >> b & 1u) by_pair_[a * (n_ + 1) + b].push_back(index);
        }
      }
    });
  }
  state_.assign(masks_.size(), 0);
  prefix_.assign(n_ + 1, 0);
  arrangement_.resize(n_ + 2);
  reset();
}

void SubnetworkTracker::reset() {
  std::fill(state_.begin(), state_.end(), std::uint8_t{0});
  prefix_[0] = 0;
  for (int k = 1; k <= n_; ++k) prefix_[k] = prefix_[k - 1] | (1u << k);
  for (int i = 1; i <= n_; ++i) arrangement_[i] = i;
  undo_.clear();
  frames_.clear();
  match_frames_.clear();
  matches_ = 0;
}

void SubnetworkTracker::push(int letter, int left_value, int right_value) {
  frames_.push_back(undo_.size());
  match_frames_.push_back(matches_);
  const int lo = std::min(left_value, right_value);
  const int hi = std::max(left_value, right_value);
  const std::uint32_t before = prefix_[letter - 1];
  for (std::uint32_t s : by_pair_[lo * (n_ + 1) + hi]) {
    const std::uint8_t st = state_[s];
    if (st == kDead) continue;
    const int j = std::popcount(masks_[s] & before) + 1;
    const std::uint8_t next = trie_next_[st][j];
    undo_.push_back({s, st});
    state_[s] = next;
    if (next != kDead && trie_accept_[next]) ++matches_;
  }
  prefix_[letter] ^= (1u << left_value) | (1u << right_value);
  std::swap(arrangement_[letter], arrangement_[letter + 1]);
  // The letter is recoverable from the frame; keep it alongside.
  undo_.push_back({static_cast<std::uint32_t>(letter) | 0x80000000u, 0});
}

void SubnetworkTracker::pop() {
  const std::uint32_t letter = undo_.back().subset & 0x7fffffffu;
  undo_.pop_back();
  const int a = arrangement_[letter];
  const int b = arrangement_[letter + 1];
  std::swap(arrangement_[letter], arrangement_[letter + 1]);
  prefix_[letter] ^= (1u << a) | (1u << b);
  const std::size_t frame = frames_.back();
  frames_.pop_back();
  while (undo_.size() > frame) {
    state_[undo_.back().subset] = undo_.back().state;
    undo_.pop_back();
  }
  matches_ = match_frames_.back();
  match_frames_.pop_back();
}

std::int64_t SubnetworkTracker::count(std::span<const Letter> letters) {
  reset();
  for (Letter l : letters) push(l, arrangement_[l], arrangement_[l + 1]);
  const std::int64_t result = matches_;
  reset();
  return result;
}

namespace {

struct AvoidingVisitor {
  SubnetworkTracker& tracker;
  std::unordered_set<std::string>* classes;
  std::uint64_t words = 0;
  std::vector<Letter> canonical;

  bool enter(int letter, int a, int b) {
    tracker.push(letter, a, b);
    if (tracker.matches() > 0) {
      tracker.pop();
      return false;
    }
    return true;
  }
  void leave() { tracker.pop(); }
  void leaf(std::span<const Letter> letters) {
    ++words;
    if (classes) {
      canonical.resize(letters.size());
      canonical_form_into(letters, canonical);
      classes->emplace(canonical.begin(), canonical.end());
    }
  }
};

}  // namespace

AvoidanceCounts count_x_avoiding_words(const Permutation& w, const WordSet& x,
                                       bool count_classes, const RunOptions& options) {
  require_word_budget(w, options.budget_words);
  const unsigned threads = resolve_threads(options.threads);
  const auto tasks = partition_walk(w, threads);
  std::vector<std::uint64_t> words(tasks.size(), 0);
  std::vector<std::unordered_set<std::string>> classes(count_classes ? tasks.size() : 0);
  run_tasks(tasks.size(), threads, [&](std::size_t t) {
    SubnetworkTracker tracker(w, x);
    AvoidingVisitor visitor{tracker, count_classes ? &classes[t] : nullptr, 0, {}};
    ReducedWordWalker<AvoidingVisitor> walker(w, visitor);
    walker.run(tasks[t]);
    words[t] = visitor.words;
  });
  AvoidanceCounts out;
  for (auto c : words) out.words += c;
  if (count_classes) {
    std::unordered_set<std::string> merged;
    for (auto& s : classes) merged.merge(s);
    out.classes = merged.size();
  }
  return out;
}

Friendliness friendliness(const Permutation& w, const Permutation& p) {
  const Permutation p321({3, 2, 1});
  if (pattern_count(p, p321) == 0) return {FriendlyStatus::PatternLacks321, 0};
  std::map<std::array<int, 3>, std::int64_t> containing;
  for_each_occurrence(w, p321, [&](std::span<const int> t) {
    containing[{t[0], t[1], t[2]}] = 0;
  });
  if (containing.empty()) return {FriendlyStatus::Vacuous, 0};
  for_each_occurrence(w, p, [&](std::span<const int> occ) {
    const int k = static_cast<int>(occ.size());
    for (int a = 0; a < k; ++a) {
      for (int b = a + 1; b < k; ++b) {
        for (int c = b + 1; c < k; ++c) {
          auto it = containing.find({occ[a], occ[b], occ[c]});
          if (it != containing.end()) ++it->second;
        }
      }
    }
  });
  const std::int64_t k = containing.begin()->second;
  for (const auto& [triple, count] : containing) {
    if (count != k) return {FriendlyStatus::NotFriendly, 0};
  }
  return {FriendlyStatus::Friendly, k};
}

PredictedCount predicted_count_friendly(const Permutation& w, const Word& word,
                                        const Permutation& p, const RunOptions& options) {
  if (pattern_count(p, Permutation({3, 2, 1})) != 1) {
    throw InputError("precondition failed: p must contain exactly one 321-pattern");
  }
  const auto f = friendliness(w, p);
  if (!f.defined()) throw InputError("precondition failed: w is not p-friendly");
  if (!is_reduced_word_of(word, w)) {
    throw InputError("precondition failed: word is not a reduced word of w");
  }

  const auto gp = build_graph(p, options);
  const auto pp = build_poset(gp);
  const auto top = std::max_element(pp.rank.begin(), pp.rank.end()) - pp.rank.begin();
  const WordSet x = WordSet::of_class(gp.vertices()[top].canonical);

  const auto gw = build_graph(w, options);
  const auto pw = build_poset(gw);
  std::int64_t c = std::numeric_limits<std::int64_t>::max();
  for (const auto& cls : gw.vertices()) {
    if (pw.rank[cls.id] == 0) c = std::min(c, cls.index_sum);
  }

  PredictedCount out;
  out.k = f.k;
  out.c = c;
  out.predicted = f.k * (index_sum(word) - c);
  out.actual = count_subnetworks(word, x);
  return out;
}

PredictedCount predicted_count_w0_s4(const Word& word) {
  const int n = word.n();
  if (!is_reduced_word_of(word, Permutation::longest(n))) {
    throw InputError("word is not a reduced word of the longest element of S_" + std::to_string(n));
  }
  std::int64_t sum = 0;
  for (Letter i : word.letters()) sum += static_cast<std::int64_t>(i - 1) * (n - i - 1);
  const std::int64_t n64 = n;
  const std::int64_t choose4 = n < 4 ? 0 : n64 * (n64 - 1) * (n64 - 2) * (n64 - 3) / 24;
  PredictedCount out;
  out.predicted = sum - 2 * choose4;
  out.actual = count_subnetworks(word, WordSet::warrington());
  return out;
}

Transformed reverse_word(const Word& word, const Permutation& w) {
  std::vector<Letter> letters(word.letters().rbegin(), word.letters().rend());
  Word out(word.n(), std::move(letters));
  const bool same = is_reduced_word_of(out, w);
  return {std::move(out), same};
}

Transformed complement_word(const Word& word, const Permutation& w) {
  std::vector<Letter> letters;
  letters.reserve(word.length());
  for (Letter l : word.letters()) letters.push_back(static_cast<Letter>(word.n() - l));
  Word out(word.n(), std::move(letters));
  const bool same = is_reduced_word_of(out, w);
  return {std::move(out), same};
}

}  // namespace redweave
