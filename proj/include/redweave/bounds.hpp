#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

#include "redweave/enumerate.hpp"
#include "redweave/permutation.hpp"
#include "redweave/word.hpp"

namespace redweave {

using BigInt = boost::multiprecision::cpp_int;

struct BoundsReport {
  int y = 0;
  std::int64_t n321 = 0;
  std::int64_t length = 0;
  BigInt lower;
  BigInt upper;        // 3^l(w)
  double refined = 0;  // 2.487^l(w), informational
  std::optional<BigInt> actual;
  std::string notice;  // why `actual` is missing, if requested

  /// lower <= actual, and actual < upper when l(w) >= 1.
  bool holds() const;
};

/// lower = 2^ceil(Y/2) + N_321(w) - ceil(Y/2), upper = 3^l(w).  With
/// `compute_actual`, |G(w)| is filled in unless the word budget refuses;
/// Y itself always needs the words of w and throws BudgetExceeded.
BoundsReport size_bounds(const Permutation& w, bool compute_actual,
                         const RunOptions& options = {});

/// Starts with i_1 '(' then, for each consecutive pair, i_k - i_{k+1} + 1
/// ')' and one '('; closes with i_l ')'.  Throws InputError unless the word
/// has the larger-left property (checked via `is_representative`).
std::string paren_encoding(std::span<const Letter> letters);
inline std::string paren_encoding(const Word& word) { return paren_encoding(word.letters()); }

/// True iff s is a balanced string of '(' and ')'.
bool is_balanced(std::string_view s);

BigInt catalan_recurrence(int m);
/// 1/(m+1) * C(2m, m).
BigInt catalan_closed_form(int m);
BigInt binomial(int n, int k);
BigInt power(int base, int exponent);

struct AggregateReport {
  int n = 0;
  int l = 0;
  std::int64_t count_perms = 0;
  BigInt sum_classes;
  BigInt catalan;     // C_{l+n-1}
  BigInt four_power;  // 4^{l+n}
  bool injective = true;
  bool balanced = true;  // every encoding balanced with l + i_1 - 1 pairs
  bool catalan_agrees = true;

  /// sum_classes < catalan < four_power (strict left inequality only for l >= 1).
  bool holds() const;
};

/// Every w in S_n with l(w) = l: sums |G(w)| and checks the parenthesis
/// encodings of all canonical words are distinct and balanced.  Throws
/// BudgetExceeded when n exceeds `max_n` or a word budget is hit.
AggregateReport aggregate_bound_check(int n, int l, const RunOptions& options = {}, int max_n = 6);

}  // namespace redweave
