#include "redweave/bounds.hpp"

#include <cmath>
#include <unordered_set>

#include "redweave/classes.hpp"
#include "redweave/error.hpp"
#include "redweave/structure.hpp"

namespace redweave {

BigInt power(int base, int exponent) {
  BigInt out = 1;
  for (int i = 0; i < exponent; ++i) out *= base;
  return out;
}

BigInt binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  BigInt out = 1;
  for (int i = 1; i <= k; ++i) {
    out *= n - k + i;
    out /= i;
  }
  return out;
}

BigInt catalan_recurrence(int m) {
  std::vector<BigInt> c(m + 1);
  c[0] = 1;
  for (int k = 1; k <= m; ++k) {
    for (int j = 0; j < k; ++j) c[k] += c[j] * c[k - 1 - j];
  }
  return c[m];
}

BigInt catalan_closed_form(int m) { return binomial(2 * m, m) / (m + 1); }

bool BoundsReport::holds() const {
  if (!actual) return true;
  if (lower > *actual) return false;
  return length == 0 || *actual < upper;
}

BoundsReport size_bounds(const Permutation& w, bool compute_actual, const RunOptions& options) {
  BoundsReport r;
  r.length = inversions(w);
  r.n321 = pattern_count(w, Permutation({3, 2, 1}));
  r.y = max_braid_moves(w, options);
  const int half = (r.y + 1) / 2;
  r.lower = power(2, half) + r.n321 - half;
  r.upper = power(3, static_cast<int>(r.length));
  r.refined = std::pow(2.487, static_cast<double>(r.length));
  if (compute_actual) {
    try {
      r.actual = BigInt(enumerate_classes(w, options).size());
    } catch (const BudgetExceeded& e) {
      r.notice = e.what();
    }
  }
  return r;
}

std::string paren_encoding(std::span<const Letter> letters) {
  if (!is_representative(letters)) {
    throw InputError("paren encoding needs a representative word (larger letter left)");
  }
  std::string out;
  if (letters.empty()) return out;
  out.append(letters.front(), '(');
  for (std::size_t k = 0; k + 1 < letters.size(); ++k) {
    const int closing = letters[k] - letters[k + 1] + 1;
    if (closing < 0) throw InputError("paren encoding needs i_k - i_{k+1} + 1 >= 0");
    out.append(closing, ')');
    out.push_back('(');
  }
  out.append(letters.back(), ')');
  return out;
}

bool is_balanced(std::string_view s) {
  long depth = 0;
  for (char c : s) {
    if (c == '(') {
      ++depth;
    } else if (c == ')') {
      if (--depth < 0) return false;
    } else {
      return false;
    }
  }
  return depth == 0;
}

bool AggregateReport::holds() const {
  const bool left = l == 0 ? sum_classes <= catalan : sum_classes < catalan;
  return left && catalan < four_power && injective && balanced && catalan_agrees;
}

AggregateReport aggregate_bound_check(int n, int l, const RunOptions& options, int max_n) {
  if (n < 1) throw InputError("n must be at least 1");
  if (l < 0) throw InputError("l must be non-negative");
  if (n > max_n) {
    throw BudgetExceeded("aggregate check limited to n <= " + std::to_string(max_n));
  }
  AggregateReport r;
  r.n = n;
  r.l = l;
  const int m = l + n - 1;
  r.catalan = catalan_recurrence(m);
  r.catalan_agrees = r.catalan == catalan_closed_form(m);
  r.four_power = power(4, l + n);
  std::unordered_set<std::string> seen;
  for (const auto& w : enumerate_sn(n, max_n)) {
    if (inversions(w) != l) continue;
    ++r.count_perms;
    const auto classes = enumerate_classes(w, options);
    r.sum_classes += classes.size();
    for (const auto& c : classes) {
      const auto code = paren_encoding(c.canonical);
      const std::size_t pairs = c.canonical.empty() ? 0 : l + c.canonical[0] - 1;
      r.balanced = r.balanced && is_balanced(code) && code.size() == 2 * pairs;
      r.injective = seen.insert(code).second && r.injective;
    }
  }
  return r;
}

}  // namespace redweave
