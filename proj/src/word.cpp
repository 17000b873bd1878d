#include "redweave/word.hpp"

#include <algorithm>
#include <numeric>

#include "redweave/error.hpp"
#include "text.hpp"

namespace redweave {

namespace {

bool commutes(int a, int b) { return a - b >= 2 || b - a >= 2; }

}  // namespace

Word::Word(int n, std::vector<Letter> letters) : n_(n), letters_(std::move(letters)) {
  if (n < 1) throw InputError("word ambient size must be positive");
  for (Letter l : letters_) {
    if (l < 1 || l >= n) {
      throw InputError("letter " + std::to_string(l) + " out of range 1.." +
                       std::to_string(n - 1));
    }
  }
}

Word::Word(int n, std::initializer_list<int> letters) : n_(n) {
  if (n < 1) throw InputError("word ambient size must be positive");
  for (int l : letters) {
    if (l < 1 || l >= n) {
      throw InputError("letter " + std::to_string(l) + " out of range 1.." +
                       std::to_string(n - 1));
    }
    letters_.push_back(static_cast<Letter>(l));
  }
}

Word Word::parse(int n, std::string_view text) {
  auto values = detail::parse_int_list(text, "word", /*allow_compact=*/n <= 10);
  std::vector<Letter> letters;
  letters.reserve(values.size());
  for (int v : values) {
    if (v < 1 || v >= n) {
      throw InputError("letter " + std::to_string(v) + " out of range 1.." +
                       std::to_string(n - 1));
    }
    letters.push_back(static_cast<Letter>(v));
  }
  return Word(n, std::move(letters));
}

Word Word::from_key(int n, std::string_view key) {
  return Word(n, std::vector<Letter>(key.begin(), key.end()));
}

std::string Word::to_string() const {
  bool compact = std::all_of(letters_.begin(), letters_.end(), [](Letter l) { return l <= 9; });
  std::string out;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (!compact && i > 0) out += ',';
    out += std::to_string(letters_[i]);
  }
  return out;
}

Evaluation evaluate(const Word& word) {
  std::vector<int> v(word.n());
  std::iota(v.begin(), v.end(), 1);
  for (Letter l : word.letters()) std::swap(v[l - 1], v[l]);
  Permutation result(std::move(v));
  const bool reduced = inversions(result) == static_cast<std::int64_t>(word.length());
  return {std::move(result), reduced};
}

bool is_reduced(const Word& word) { return evaluate(word).reduced; }

bool is_reduced_word_of(const Word& word, const Permutation& w) {
  if (word.n() != w.size()) return false;
  auto e = evaluate(word);
  return e.reduced && e.result == w;
}

std::int64_t index_sum(std::span<const Letter> letters) {
  std::int64_t sum = 0;
  for (Letter l : letters) sum += l;
  return sum;
}

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::Commutation:
      return "commutation";
    case MoveKind::BraidUp:
      return "braid-up";
    case MoveKind::BraidDown:
      return "braid-down";
  }
  return "?";
}

std::vector<Move> list_braid_moves(std::span<const Letter> w) {
  std::vector<Move> out;
  for (std::size_t k = 0; k + 2 < w.size(); ++k) {
    if (w[k] != w[k + 2]) continue;
    if (w[k + 1] == w[k] + 1) {
      out.push_back({MoveKind::BraidUp, static_cast<int>(k) + 1});
    } else if (w[k + 1] + 1 == w[k]) {
      out.push_back({MoveKind::BraidDown, static_cast<int>(k) + 1});
    }
  }
  return out;
}

std::vector<Move> list_moves(const Word& word) {
  auto w = word.letters();
  std::vector<Move> out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    if (k + 1 < w.size() && commutes(w[k], w[k + 1])) {
      out.push_back({MoveKind::Commutation, static_cast<int>(k) + 1});
    }
    if (k + 2 < w.size() && w[k] == w[k + 2]) {
      if (w[k + 1] == w[k] + 1) out.push_back({MoveKind::BraidUp, static_cast<int>(k) + 1});
      if (w[k + 1] + 1 == w[k]) out.push_back({MoveKind::BraidDown, static_cast<int>(k) + 1});
    }
  }
  return out;
}

void apply_move_in_place(std::span<Letter> w, const Move& move) noexcept {
  const std::size_t k = move.position - 1;
  if (move.kind == MoveKind::Commutation) {
    std::swap(w[k], w[k + 1]);
  } else {
    // (a, b, a) -> (b, a, b)
    const Letter a = w[k];
    const Letter b = w[k + 1];
    w[k] = b;
    w[k + 1] = a;
    w[k + 2] = b;
  }
}

Word apply_move(const Word& word, const Move& move) {
  auto w = word.letters();
  const int k = move.position - 1;
  bool valid = false;
  switch (move.kind) {
    case MoveKind::Commutation:
      valid = k >= 0 && k + 1 < static_cast<int>(w.size()) && commutes(w[k], w[k + 1]);
      break;
    case MoveKind::BraidUp:
      valid = k >= 0 && k + 2 < static_cast<int>(w.size()) && w[k] == w[k + 2] &&
              w[k + 1] == w[k] + 1;
      break;
    case MoveKind::BraidDown:
      valid = k >= 0 && k + 2 < static_cast<int>(w.size()) && w[k] == w[k + 2] &&
              w[k + 1] + 1 == w[k];
      break;
  }
  if (!valid) {
    throw InputError(std::string("no ") + to_string(move.kind) + " window at position " +
                     std::to_string(move.position) + " of " + word.to_string());
  }
  std::vector<Letter> out(w.begin(), w.end());
  apply_move_in_place(out, move);
  return Word(word.n(), std::move(out));
}

void canonical_form_into(std::span<const Letter> letters, std::span<Letter> out) noexcept {
  // Repeatedly emit the largest letter that commutes with everything still
  // ahead of it.  Words here are at most a few dozen letters long.
  constexpr std::size_t kInline = 64;
  Letter buffer[kInline];
  std::vector<Letter> heap;
  Letter* rest = buffer;
  if (letters.size() > kInline) {
    heap.assign(letters.begin(), letters.end());
    rest = heap.data();
  } else {
    std::copy(letters.begin(), letters.end(), buffer);
  }
  std::size_t remaining = letters.size();
  for (std::size_t o = 0; o < letters.size(); ++o) {
    std::size_t best = 0;
    Letter best_letter = 0;
    for (std::size_t j = 0; j < remaining; ++j) {
      const Letter c = rest[j];
      if (c <= best_letter) continue;
      bool free = true;
      for (std::size_t k = 0; k < j && free; ++k) free = commutes(rest[k], c);
      if (free) {
        best = j;
        best_letter = c;
      }
    }
    out[o] = best_letter;
    std::copy(rest + best + 1, rest + remaining, rest + best);
    --remaining;
  }
}

Word canonical_form(const Word& word) {
  std::vector<Letter> out(word.length());
  canonical_form_into(word.letters(), out);
  return Word(word.n(), std::move(out));
}

bool is_representative(std::span<const Letter> w) noexcept {
  for (std::size_t k = 0; k + 1 < w.size(); ++k) {
    if (w[k] + 2 <= w[k + 1]) return false;
  }
  return true;
}

}  // namespace redweave
