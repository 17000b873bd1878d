#include "redweave/permutation.hpp"

#include <algorithm>
#include <numeric>

#include "redweave/error.hpp"
#include "text.hpp"

namespace redweave {

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  const int n = size();
  if (n < 1) throw InputError("permutation must have at least one entry");
  std::vector<bool> seen(n + 1, false);
  for (int v : values_) {
    if (v < 1 || v > n || seen[v]) {
      throw InputError("not a permutation of 1.." + std::to_string(n));
    }
    seen[v] = true;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 1) throw InputError("permutation size must be positive");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  return Permutation(std::move(v));
}

Permutation Permutation::longest(int n) {
  if (n < 1) throw InputError("permutation size must be positive");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = n - i;
  return Permutation(std::move(v));
}

Permutation Permutation::parse(std::string_view text) {
  // Compact notation is only unambiguous below 10.
  auto values = detail::parse_int_list(text, "permutation", /*allow_compact=*/true);
  if (values.size() > 9) {
    bool compact = text.find_first_of(", \t") == std::string_view::npos;
    if (compact) throw InputError("compact permutation notation requires n <= 9");
  }
  return Permutation(std::move(values));
}

std::vector<int> Permutation::positions() const {
  std::vector<int> pos(size() + 1, -1);
  for (int i = 0; i < size(); ++i) pos[values_[i]] = i;
  return pos;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(size());
  for (int i = 0; i < size(); ++i) inv[values_[i] - 1] = i + 1;
  return Permutation(std::move(inv));
}

bool Permutation::is_identity() const noexcept {
  for (int i = 0; i < size(); ++i) {
    if (values_[i] != i + 1) return false;
  }
  return true;
}

std::string Permutation::to_string() const {
  std::string out;
  for (int i = 0; i < size(); ++i) {
    if (size() > 9 && i > 0) out += ',';
    out += std::to_string(values_[i]);
  }
  return out;
}

std::int64_t inversions(const Permutation& w) {
  std::int64_t count = 0;
  for (int i = 0; i < w.size(); ++i) {
    for (int j = i + 1; j < w.size(); ++j) {
      if (w[i] > w[j]) ++count;
    }
  }
  return count;
}

Permutation standardize(const Permutation& w, std::span<const int> positions) {
  std::vector<int> order(positions.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return w[positions[a]] < w[positions[b]]; });
  std::vector<int> values(positions.size());
  for (std::size_t rank = 0; rank < order.size(); ++rank) {
    values[order[rank]] = static_cast<int>(rank) + 1;
  }
  return Permutation(std::move(values));
}

namespace {

// Plain subset enumeration: choose positions left to right, pruning as soon
// as a chosen prefix disagrees with the pattern's relative order.
void occurrences_from(const Permutation& w, const Permutation& p, std::vector<int>& chosen,
                      int next_position,
                      const std::function<void(std::span<const int>)>& visit) {
  const int k = p.size();
  const int depth = static_cast<int>(chosen.size());
  if (depth == k) {
    visit(chosen);
    return;
  }
  for (int pos = next_position; pos <= w.size() - (k - depth); ++pos) {
    bool consistent = true;
    for (int h = 0; h < depth && consistent; ++h) {
      consistent = (w[chosen[h]] < w[pos]) == (p[h] < p[depth]);
    }
    if (!consistent) continue;
    chosen.push_back(pos);
    occurrences_from(w, p, chosen, pos + 1, visit);
    chosen.pop_back();
  }
}

}  // namespace

void for_each_occurrence(const Permutation& w, const Permutation& p,
                         const std::function<void(std::span<const int>)>& visit) {
  if (p.size() > w.size()) return;
  std::vector<int> chosen;
  chosen.reserve(p.size());
  occurrences_from(w, p, chosen, 0, visit);
}

std::int64_t pattern_count(const Permutation& w, const Permutation& p) {
  std::int64_t count = 0;
  for_each_occurrence(w, p, [&](std::span<const int>) { ++count; });
  return count;
}

bool avoids(const Permutation& w, const Permutation& p) { return pattern_count(w, p) == 0; }

std::vector<Permutation> enumerate_sn(int n, int cap) {
  if (n < 1) throw InputError("n must be at least 1");
  if (n > cap) {
    throw BudgetExceeded("refusing to enumerate S_" + std::to_string(n) + " (cap is " +
                         std::to_string(cap) + ")");
  }
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(v);
  } while (std::next_permutation(v.begin(), v.end()));
  return out;
}

}  // namespace redweave
