#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "redweave/permutation.hpp"

namespace redweave {

using Letter = std::uint8_t;

/// A word over the adjacent transpositions s_1..s_{n-1} of S_n.  Letter i
/// swaps the entries at positions i and i+1 (left-to-right action from the
/// identity).  Reducedness is not enforced by the type; see `is_reduced`.
class Word {
 public:
  Word() = default;
  /// Throws InputError if n < 1 or a letter lies outside 1..n-1.
  Word(int n, std::vector<Letter> letters);
  Word(int n, std::initializer_list<int> letters);

  /// Comma/space-separated letters; compact digits allowed when n <= 10.
  static Word parse(int n, std::string_view text);

  int n() const noexcept { return n_; }
  std::size_t length() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Letter operator[](std::size_t i) const noexcept { return letters_[i]; }
  std::span<const Letter> letters() const noexcept { return letters_; }

  /// Byte string of letters, used as a hash key.
  std::string key() const { return {letters_.begin(), letters_.end()}; }
  static Word from_key(int n, std::string_view key);

  /// Compact digits when every letter is a single digit, else commas.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word& a, const Word& b) {
    return a.letters_ <=> b.letters_;
  }

 private:
  int n_ = 1;
  std::vector<Letter> letters_;
};

struct Evaluation {
  Permutation result;
  bool reduced;
};

/// Applies the letters to 1..n; reduced means length == l(result).
Evaluation evaluate(const Word& word);
bool is_reduced(const Word& word);
/// True iff `word` is a reduced word of exactly `w`.
bool is_reduced_word_of(const Word& word, const Permutation& w);

std::int64_t index_sum(std::span<const Letter> letters);
inline std::int64_t index_sum(const Word& word) { return index_sum(word.letters()); }

enum class MoveKind : std::uint8_t { Commutation, BraidUp, BraidDown };

/// A rewrite available at a 1-based window start.  Commutation windows
/// span two letters, braid windows three.
struct Move {
  MoveKind kind;
  int position;

  friend bool operator==(const Move&, const Move&) = default;
};

const char* to_string(MoveKind kind);

/// Every commutation and every (i,i+1,i) / (i+1,i,i+1) window, in order of
/// position.  Overlapping braid windows are each reported.
std::vector<Move> list_moves(const Word& word);
/// Only the braid windows of `list_moves`.
std::vector<Move> list_braid_moves(std::span<const Letter> letters);

/// Throws InputError when `move` does not match the word at its position.
Word apply_move(const Word& word, const Move& move);
/// In-place variant for hot loops; `move` must be valid.
void apply_move_in_place(std::span<Letter> letters, const Move& move) noexcept;

/// Smallest letter of a braid window, i.e. the i of s_i s_{i+1} s_i.
inline int braid_letter(std::span<const Letter> letters, const Move& move) {
  return std::min(letters[move.position - 1], letters[move.position]);
}

/// Lexicographically greatest word reachable by commutations.  Unique per
/// commutation class; adjacent commuting letters appear larger-first.
Word canonical_form(const Word& word);
/// Writes the canonical form of `letters` into `out` (same length).
void canonical_form_into(std::span<const Letter> letters, std::span<Letter> out) noexcept;

/// True iff no adjacent pair (a, b) has |a - b| >= 2 and a < b.
bool is_representative(std::span<const Letter> letters) noexcept;

}  // namespace redweave
