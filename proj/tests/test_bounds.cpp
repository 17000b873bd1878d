#include <doctest.h>

#include "oracle.hpp"
#include "redweave/bounds.hpp"
#include "redweave/classes.hpp"
#include "redweave/error.hpp"
#include "redweave/structure.hpp"

using namespace redweave;

TEST_SUITE("bounds") {
  TEST_CASE("bounds of 3421") {
    const auto r = size_bounds(Permutation::parse("3421"), true);
    CHECK(r.y == 2);
    CHECK(r.n321 == 2);
    CHECK(r.length == 5);
    CHECK(r.lower == 3);
    CHECK(r.upper == 243);
    REQUIRE(r.actual.has_value());
    CHECK(*r.actual == 3);
    CHECK(r.holds());
  }

  TEST_CASE("bounds of the identity") {
    const auto r = size_bounds(Permutation::identity(4), true);
    CHECK(r.lower == 1);
    CHECK(r.upper == 1);
    CHECK(*r.actual == 1);
    CHECK(r.holds());
  }

  TEST_CASE("bounds of 4321") {
    const auto r = size_bounds(Permutation::parse("4321"), true);
    CHECK(r.y >= 2);
    CHECK(r.lower >= 5);
    CHECK(*r.actual == 8);
    CHECK(r.upper == 729);
    CHECK(r.holds());
    CHECK(r.refined == doctest::Approx(std::pow(2.487, 6)));
  }

  TEST_CASE("without --actual nothing is enumerated beyond Y") {
    const auto r = size_bounds(Permutation::parse("4321"), false);
    CHECK_FALSE(r.actual.has_value());
    CHECK(r.notice.empty());
  }

  TEST_CASE("Y needs the words, so a tight budget refuses") {
    RunOptions tight;
    tight.budget_words = 10;
    CHECK_THROWS_AS(size_bounds(Permutation::parse("4321"), false, tight), BudgetExceeded);
    CHECK_NOTHROW(size_bounds(Permutation::parse("3421"), true, tight));
  }

  TEST_CASE("bounds hold over S_n, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& w : enumerate_sn(n)) {
        const auto r = size_bounds(w, true);
        REQUIRE(r.actual.has_value());
        CHECK(r.holds());
        CHECK(*r.actual == static_cast<long>(oracle::commutation_classes(oracle::reduced_words(oracle::values(w))).count));
        if (r.length >= 1) CHECK(*r.actual < r.upper);
        if (avoids(w, Permutation({3, 2, 1}))) {
          CHECK(r.lower == 1);
          CHECK(*r.actual == 1);
        }
      }
    }
  }

  TEST_CASE("Y = 1 gives N_321 + 1 classes, n <= 5") {
    for (int n = 3; n <= 5; ++n) {
      for (const auto& w : enumerate_sn(n)) {
        const auto r = size_bounds(w, true);
        if (r.y == 1) CHECK(*r.actual == r.n321 + 1);
      }
    }
  }

  TEST_CASE("parenthesis encodings") {
    CHECK(paren_encoding(Word(4, {2, 1, 2, 3, 2})) == "(())((())())");
    CHECK(paren_encoding(Word(2, {1})) == "()");
    CHECK(paren_encoding(Word(3, std::vector<Letter>{})).empty());
    CHECK(paren_encoding(Word(4, {3, 1})) == "((()))()");
    CHECK_THROWS_AS(paren_encoding(Word(4, {1, 3})), InputError);
    CHECK(is_balanced("(())()"));
    CHECK(is_balanced(""));
    CHECK_FALSE(is_balanced("())("));
    CHECK_FALSE(is_balanced("(()"));
  }

  TEST_CASE("encodings are balanced with l + i_1 - 1 pairs") {
    for (int n = 2; n <= 5; ++n) {
      for (const auto& w : enumerate_sn(n)) {
        for (const auto& c : enumerate_classes(w)) {
          if (c.canonical.empty()) continue;
          const auto s = paren_encoding(c.canonical);
          CHECK(is_balanced(s));
          CHECK(s.size() == 2 * (c.canonical.length() + c.canonical[0] - 1));
        }
      }
    }
  }

  TEST_CASE("Catalan numbers") {
    for (int m = 0; m <= 30; ++m) {
      CHECK(catalan_recurrence(m) == catalan_closed_form(m));
      CHECK(catalan_recurrence(m) == oracle::catalan(m));
    }
    CHECK(catalan_closed_form(8) == 1430);
    CHECK(catalan_closed_form(60) == BigInt("1583850964596120042686772779038896"));
    CHECK(binomial(10, 3) == 120);
    CHECK(binomial(3, 5) == 0);
    CHECK(power(3, 40) == BigInt("12157665459056928801"));
  }

  TEST_CASE("aggregate examples") {
    const auto a = aggregate_bound_check(3, 2);
    CHECK(a.count_perms == 2);
    CHECK(a.sum_classes == 2);
    CHECK(a.catalan == 14);
    CHECK(a.four_power == 1024);
    CHECK(a.holds());
    const auto b = aggregate_bound_check(3, 3);
    CHECK(b.count_perms == 1);
    CHECK(b.sum_classes == 2);
    CHECK(b.catalan == 42);
    CHECK(b.holds());
    const auto c = aggregate_bound_check(4, 5);
    CHECK(c.catalan == 1430);
    BigInt sum = 0;
    for (const auto& w : enumerate_sn(4)) {
      if (inversions(w) == 5) sum += oracle::commutation_classes(oracle::reduced_words(oracle::values(w))).count;
    }
    CHECK(c.sum_classes == sum);
    CHECK(c.count_perms == 3);
    CHECK(c.holds());
    CHECK_THROWS_AS(aggregate_bound_check(7, 2), BudgetExceeded);
  }

  TEST_CASE("aggregate bound over every length, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
      for (int l = 0; l <= n * (n - 1) / 2; ++l) {
        const auto r = aggregate_bound_check(n, l);
        CAPTURE(n);
        CAPTURE(l);
        CHECK(r.injective);
        CHECK(r.balanced);
        CHECK(r.catalan_agrees);
        CHECK(r.holds());
        if (l >= 1) CHECK(r.sum_classes < r.catalan);
      }
    }
  }

  TEST_CASE("at length zero the sum can reach the Catalan number") {
    const auto r = aggregate_bound_check(1, 0);
    CHECK(r.sum_classes == 1);
    CHECK(r.catalan == 1);
    CHECK(r.holds());
  }
}
