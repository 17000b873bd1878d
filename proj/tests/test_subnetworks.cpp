#include <doctest.h>

#include "oracle.hpp"
#include "redweave/classes.hpp"
#include "redweave/error.hpp"
#include "redweave/subnetworks.hpp"

using namespace redweave;

namespace {

std::set<std::vector<int>> oracle_set(const WordSet& x) {
  std::set<std::vector<int>> out;
  for (const auto& w : x.words()) out.insert(std::vector<int>(w.begin(), w.end()));
  return out;
}

}  // namespace

TEST_SUITE("subnetworks") {
  TEST_CASE("wire subsets validate") {
    CHECK_THROWS_AS(WireSubset(4, {2, 1}), InputError);
    CHECK_THROWS_AS(WireSubset(4, {0, 1}), InputError);
    CHECK_THROWS_AS(WireSubset(4, {5}), InputError);
    CHECK(WireSubset::from_mask(5, 0b10110).values().size() == 3);
  }

  TEST_CASE("induced word of the full set is the word itself") {
    const Word rho(4, {2, 3, 2, 1, 2, 3});
    CHECK(induced_word(rho, WireSubset(4, {1, 2, 3, 4})) == Word(4, {2, 3, 2, 1, 2, 3}));
  }

  TEST_CASE("induced word on a singleton is empty") {
    CHECK(induced_word(Word(4, {1, 2, 1, 3, 2}), WireSubset(4, {3})).empty());
  }

  TEST_CASE("induced word on a 321-triple has length three") {
    const auto induced = induced_word(Word(4, {1, 2, 1, 3, 2}), WireSubset(4, {1, 2, 4}));
    CHECK(induced.length() == 3);
    CHECK(is_reduced_word_of(induced, Permutation({3, 2, 1})));
  }

  TEST_CASE("induced word inside a longer word") {
    // Values 1, 2, 4 of the 5-wire word 1,2,3,1,2,4,3 cross as a 321.
    const Word rho(5, {1, 2, 3, 1, 2, 4, 3});
    const auto e = evaluate(rho);
    REQUIRE(e.reduced);
    const auto ind = induced_word(rho, WireSubset(5, {1, 2, 4}));
    CHECK(is_reduced(ind));
  }

  TEST_CASE("word sets validate their pattern") {
    CHECK_THROWS_AS(WordSet(3, {{1, 2, 1}, {1, 2}}), InputError);
    CHECK_THROWS_AS(WordSet(3, {{1, 1}}), InputError);
    CHECK_NOTHROW(WordSet(3, {{1, 2, 1}, {2, 1, 2}}));
    const auto w = WordSet::warrington();
    CHECK(w.words().size() == 4);
    CHECK(w.pattern() == Permutation::longest(4));
    CHECK(WordSet::parse("123212;321232;212321;232123").words() == w.words());
    CHECK(WordSet::parse("warrington-x").words() == w.words());
    CHECK(WordSet::parse("212").m() == 3);
    CHECK(WordSet::parse("s4-longest-classes:0").pattern() == Permutation::longest(4));
    CHECK_THROWS_AS(WordSet::parse("s4-longest-classes:8"), InputError);
    CHECK(WordSet(4, {}).empty());
  }

  TEST_CASE("count_subnetworks examples") {
    CHECK(count_subnetworks(Word(4, {2, 3, 2, 1, 2, 3}), WordSet::warrington()) == 1);
    CHECK(count_subnetworks(Word(4, {1, 2, 3, 1, 2, 1}), WordSet(3, {{2, 1, 2}})) == 0);
    CHECK(count_subnetworks(Word(4, {1, 2, 3, 1, 2, 1}), WordSet(4, {})) == 0);
  }

  TEST_CASE("count_212 examples") {
    CHECK(count_212(Word(4, {1, 2, 3, 1, 2, 1}).letters()) == 0);
    CHECK(count_212(Word(3, {2, 1, 2}).letters()) == 1);
    CHECK(count_212(Word(4, {2, 1, 3, 2, 3}).letters()) == 2);
  }

  TEST_CASE("tracker and reference count agree with brute force") {
    std::vector<WordSet> sets{WordSet::warrington(), WordSet(3, {{2, 1, 2}}), WordSet(3, {{1, 2, 1}}),
                              WordSet(4, {{1, 3}}), WordSet(4, {{2, 1, 3, 2}})};
    for (const auto& c : enumerate_classes(Permutation::longest(4))) sets.push_back(WordSet::of_class(c.canonical));
    for (const auto& w : enumerate_sn(5)) {
      const auto words = enumerate_reduced_words(w);
      for (const auto& x : sets) {
        SubnetworkTracker tracker(w, x);
        const auto reference = oracle_set(x);
        for (const auto& rho : words) {
          const auto brute = oracle::subnetworks(5, oracle::letters(rho), reference, x.m());
          REQUIRE(count_subnetworks(rho, x) == brute);
          REQUIRE(tracker.count(rho.letters()) == brute);
        }
      }
    }
  }

  TEST_CASE("induced words are reduced") {
    for (const auto& rho : enumerate_reduced_words(Permutation::longest(5))) {
      for (std::uint32_t mask = 2; mask < 64; mask += 2) {
        const auto s = WireSubset::from_mask(5, mask);
        CHECK(is_reduced(induced_word(rho, s)));
      }
    }
  }

  TEST_CASE("Warrington counts for n = 3..6") {
    const std::uint64_t expected[] = {2, 12, 328, 54520};
    for (int n = 3; n <= 6; ++n) {
      CHECK(count_x_avoiding_words(Permutation::longest(n), WordSet::warrington(), false).words == expected[n - 3]);
    }
  }

  TEST_CASE("Warrington counts agree with brute force on n = 4, 5") {
    for (int n = 4; n <= 5; ++n) {
      std::uint64_t brute = 0;
      const auto reference = oracle_set(WordSet::warrington());
      for (const auto& rho : oracle::reduced_words(oracle::values(Permutation::longest(n)))) {
        brute += oracle::subnetworks(n, rho, reference, 4) == 0;
      }
      CHECK(count_x_avoiding_words(Permutation::longest(n), WordSet::warrington(), false).words == brute);
    }
  }

  TEST_CASE("avoiding counts under several threads match") {
    RunOptions one;
    RunOptions four;
    four.threads = 4;
    const auto a = count_x_avoiding_words(Permutation::longest(6), WordSet::warrington(), true, one);
    const auto b = count_x_avoiding_words(Permutation::longest(6), WordSet::warrington(), true, four);
    CHECK(a.words == b.words);
    CHECK(a.classes == b.classes);
  }

  TEST_CASE("avoiding classes agree with a member scan") {
    for (int n = 4; n <= 5; ++n) {
      const auto w = Permutation::longest(n);
      std::uint64_t expected = 0;
      for (const auto& c : enumerate_classes(w)) {
        bool all = true;
        for (const auto& m : class_members(c.canonical)) all = all && count_subnetworks(m, WordSet::warrington()) == 0;
        expected += all;
      }
      CHECK(count_x_avoiding_words(w, WordSet::warrington(), true).classes == expected);
    }
  }

  TEST_CASE("friendliness") {
    const auto a = friendliness(Permutation::longest(5), Permutation::longest(4));
    CHECK(a.status == FriendlyStatus::Friendly);
    CHECK(a.k == 2);
    for (int n = 3; n <= 6; ++n) {
      const auto b = friendliness(Permutation::longest(n), Permutation({3, 2, 1}));
      CHECK(b.status == FriendlyStatus::Friendly);
      CHECK(b.k == 1);
    }
    const auto c = friendliness(Permutation::parse("3412"), Permutation::longest(4));
    CHECK(c.status == FriendlyStatus::Vacuous);
    CHECK(c.k == 0);
    CHECK(c.defined());
    CHECK(friendliness(Permutation::parse("4321"), Permutation::parse("2143")).status ==
          FriendlyStatus::PatternLacks321);
    CHECK(friendliness(Permutation::parse("43521"), Permutation::parse("4321")).status == FriendlyStatus::NotFriendly);
  }

  TEST_CASE("friendly prediction examples") {
    const auto w = Permutation::parse("3421");
    const auto a = predicted_count_friendly(w, Word(4, {2, 1, 3, 2, 3}), Permutation({3, 2, 1}));
    CHECK(a.predicted == 2);
    CHECK(a.actual == 2);
    CHECK(a.c == 9);
    const auto b = predicted_count_friendly(w, Word(4, {1, 2, 1, 3, 2}), Permutation({3, 2, 1}));
    CHECK(b.predicted == 0);
    CHECK(b.actual == 0);
    const auto id = predicted_count_friendly(Permutation::identity(3), Word(3, std::vector<Letter>{}),
                                             Permutation({3, 2, 1}));
    CHECK(id.predicted == 0);
    CHECK(id.actual == 0);
    CHECK(id.c == 0);
  }

  TEST_CASE("friendly prediction rejects failed preconditions") {
    CHECK_THROWS_AS(predicted_count_friendly(Permutation::longest(4), Word(4, {1, 2, 1, 3, 2, 1}),
                                             Permutation::longest(4)),
                    InputError);
    CHECK_THROWS_AS(predicted_count_friendly(Permutation::parse("43521"), Word(5, {1, 2, 1, 3, 2, 1, 4, 3}),
                                             Permutation::parse("3421")),
                    InputError);
    CHECK_THROWS_AS(predicted_count_friendly(Permutation::parse("3421"), Word(4, {1, 2}), Permutation({3, 2, 1})),
                    InputError);
  }

  TEST_CASE("friendly prediction holds wherever it applies, n <= 5") {
    std::vector<Permutation> patterns;
    for (int m = 3; m <= 4; ++m) {
      for (const auto& p : enumerate_sn(m)) {
        if (pattern_count(p, Permutation({3, 2, 1})) == 1) patterns.push_back(p);
      }
    }
    int applied = 0;
    for (int n = 3; n <= 5; ++n) {
      for (const auto& w : enumerate_sn(n)) {
        for (const auto& p : patterns) {
          if (p.size() > n || !friendliness(w, p).defined()) continue;
          for (const auto& rho : enumerate_reduced_words(w)) {
            const auto pc = predicted_count_friendly(w, rho, p);
            REQUIRE(pc.predicted == pc.actual);
            ++applied;
          }
        }
      }
    }
    CHECK(applied > 1000);
  }

  TEST_CASE("non-unit k scales the difference of index sums") {
    // 32145 is friendly for p = 3214 with k = 2.
    const auto w = Permutation::parse("32145");
    const auto f = friendliness(w, Permutation::parse("3214"));
    REQUIRE(f.status == FriendlyStatus::Friendly);
    CHECK(f.k == 2);
    const auto pc = predicted_count_friendly(w, Word(5, {2, 1, 2}), Permutation::parse("3214"));
    CHECK(pc.actual == 2);
    CHECK(pc.predicted == 2);
    CHECK(pc.k * index_sum(Word(5, {2, 1, 2})) - pc.c != pc.actual);
  }

  TEST_CASE("longest-element formula") {
    CHECK(predicted_count_w0_s4(Word(4, {3, 2, 3, 1, 2, 3})).predicted == 0);
    CHECK(predicted_count_w0_s4(Word(4, {3, 2, 3, 1, 2, 3})).actual == 0);
    const auto b = predicted_count_w0_s4(Word(4, {2, 3, 2, 1, 2, 3}));
    CHECK(b.predicted == 1);
    CHECK(b.actual == 1);
    for (const auto& rho : enumerate_reduced_words(Permutation::longest(3))) {
      const auto c = predicted_count_w0_s4(rho);
      CHECK(c.predicted == 0);
      CHECK(c.actual == 0);
    }
    CHECK_THROWS_AS(predicted_count_w0_s4(Word(4, {1, 2, 1})), InputError);
  }

  TEST_CASE("longest-element formula on every word of w_0, n = 4..6") {
    for (int n = 4; n <= 6; ++n) {
      for (const auto& rho : enumerate_reduced_words(Permutation::longest(n))) {
        const auto pc = predicted_count_w0_s4(rho);
        REQUIRE(pc.predicted == pc.actual);
      }
    }
  }

  TEST_CASE("a braid move on w_0 shifts the count by 2i - n + 1") {
    for (int n = 4; n <= 5; ++n) {
      SubnetworkTracker tracker(Permutation::longest(n), WordSet::warrington());
      for (const auto& rho : enumerate_reduced_words(Permutation::longest(n))) {
        const auto before = tracker.count(rho.letters());
        for (const auto& m : list_braid_moves(rho.letters())) {
          if (m.kind != MoveKind::BraidDown) continue;
          const int i = braid_letter(rho.letters(), m);
          CHECK(tracker.count(apply_move(rho, m).letters()) - before == 2 * i - n + 1);
        }
      }
    }
  }

  TEST_CASE("reverse and complement") {
    const auto a = reverse_word(Word(3, {1, 2, 1}), Permutation({3, 2, 1}));
    CHECK(a.word == Word(3, {1, 2, 1}));
    CHECK(a.same_permutation);
    const auto b = reverse_word(Word(4, {2, 1, 2, 3, 2, 1}), Permutation::longest(4));
    CHECK(b.word == Word(4, {1, 2, 3, 2, 1, 2}));
    CHECK(b.same_permutation);
    const auto c = reverse_word(Word(3, {1, 2}), Permutation::parse("231"));
    CHECK(c.word == Word(3, {2, 1}));
    CHECK_FALSE(c.same_permutation);
    CHECK(evaluate(c.word).result == Permutation::parse("312"));

    const auto d = complement_word(Word(4, {1, 2, 1, 3, 2, 1}), Permutation::longest(4));
    CHECK(d.word == Word(4, {3, 2, 3, 1, 2, 3}));
    CHECK(d.same_permutation);
    const auto e = complement_word(Word(3, {2, 1, 2}), Permutation({3, 2, 1}));
    CHECK(e.word == Word(3, {1, 2, 1}));
    CHECK(e.same_permutation);
    const auto f = complement_word(Word(3, {1}), Permutation::parse("213"));
    CHECK(f.word == Word(3, {2}));
    CHECK_FALSE(f.same_permutation);
    CHECK(evaluate(f.word).result == Permutation::parse("132"));
  }

  TEST_CASE("reversal carries totals from w to its inverse") {
    for (int n = 3; n <= 5; ++n) {
      for (const auto& w : enumerate_sn(n)) {
        const auto words = enumerate_reduced_words(w);
        const auto inverse_words = enumerate_reduced_words(w.inverse());
        for (const auto& p : enumerate_sn(3)) {
          for (const auto& x : enumerate_reduced_words(p)) {
            const auto xr = reverse_word(x, p);
            std::int64_t a = 0;
            std::int64_t b = 0;
            for (const auto& rho : words) a += count_subnetworks(rho, WordSet::singleton(x));
            for (const auto& rho : inverse_words) {
              b += count_subnetworks(rho, WordSet::singleton(xr.word));
            }
            REQUIRE(a == b);
          }
        }
      }
    }
  }

  TEST_CASE("reverse totals agree when w is an involution") {
    for (int n = 3; n <= 5; ++n) {
      for (const auto& w : enumerate_sn(n)) {
        if (w != w.inverse()) continue;
        const auto words = enumerate_reduced_words(w);
        for (int m = 3; m <= std::min(n, 4); ++m) {
          for (const auto& p : enumerate_sn(m)) {
            if (p != p.inverse()) continue;
            for (const auto& x : enumerate_reduced_words(p)) {
              const auto xr = reverse_word(x, p);
              REQUIRE(xr.same_permutation);
              std::int64_t a = 0;
              std::int64_t b = 0;
              for (const auto& rho : words) {
                a += count_subnetworks(rho, WordSet::singleton(x));
                b += count_subnetworks(rho, WordSet::singleton(xr.word));
              }
              CHECK(a == b);
            }
          }
        }
      }
    }
  }

  TEST_CASE("reverse totals can differ when w is not an involution") {
    // 24153 is not an involution; x = 13 and its reverse 31 are words of 2143.
    const auto w = Permutation::parse("24153");
    std::int64_t a = 0;
    std::int64_t b = 0;
    for (const auto& rho : enumerate_reduced_words(w)) {
      a += count_subnetworks(rho, WordSet(4, {{1, 3}}));
      b += count_subnetworks(rho, WordSet(4, {{3, 1}}));
    }
    CHECK(a == 4);
    CHECK(b == 1);
  }

  TEST_CASE("complement totals over w_0") {
    for (int n = 3; n <= 5; ++n) {
      const auto words = enumerate_reduced_words(Permutation::longest(n));
      for (int m = 3; m <= std::min(n, 4); ++m) {
        const auto p = Permutation::longest(m);
        for (const auto& x : enumerate_reduced_words(p)) {
          const auto xc = complement_word(x, p);
          REQUIRE(xc.same_permutation);
          std::int64_t a = 0;
          std::int64_t b = 0;
          for (const auto& rho : words) {
            a += count_subnetworks(rho, WordSet::singleton(x));
            b += count_subnetworks(rho, WordSet::singleton(xc.word));
          }
          CHECK(a == b);
        }
      }
    }
  }

  TEST_CASE("class invariance of subnetwork counts on S_5") {
    std::vector<WordSet> sets;
    for (int m = 3; m <= 4; ++m) {
      for (const auto& p : enumerate_sn(m)) {
        for (const auto& c : enumerate_classes(p)) sets.push_back(WordSet::of_class(c.canonical));
      }
    }
    for (const auto& w : enumerate_sn(5)) {
      const auto oc = oracle::commutation_classes(oracle::reduced_words(oracle::values(w)));
      for (const auto& x : sets) {
        const auto reference = oracle_set(x);
        std::vector<std::int64_t> seen(oc.count, -1);
        for (std::size_t i = 0; i < oc.words.size(); ++i) {
          const auto c = oracle::subnetworks(5, oc.words[i], reference, x.m());
          auto& s = seen[oc.component[i]];
          if (s < 0) s = c;
          REQUIRE(s == c);
        }
      }
    }
  }
}
