#include <doctest.h>

#include "oracle.hpp"
#include "redweave/error.hpp"
#include "redweave/permutation.hpp"

using namespace redweave;

TEST_SUITE("perm_core") {
  TEST_CASE("parsing accepts comma and compact forms") {
    CHECK(Permutation::parse("3,4,2,1") == Permutation({3, 4, 2, 1}));
    CHECK(Permutation::parse("3421") == Permutation({3, 4, 2, 1}));
    CHECK(Permutation::parse(" 1, 2 ,3") == Permutation::identity(3));
    CHECK(Permutation::parse("4,3,2,1,5,6,7,11,10,8,9").size() == 11);
    CHECK(Permutation::parse("1") == Permutation::identity(1));
  }

  TEST_CASE("parsing rejects non-bijections") {
    CHECK_THROWS_AS(Permutation::parse("3321"), InputError);
    CHECK_THROWS_AS(Permutation::parse("1,3"), InputError);
    CHECK_THROWS_AS(Permutation::parse(""), InputError);
    CHECK_THROWS_AS(Permutation::parse("0,1"), InputError);
    CHECK_THROWS_AS(Permutation::parse("12a"), InputError);
    CHECK_THROWS_AS(Permutation({}), InputError);
  }

  TEST_CASE("to_string round trips") {
    CHECK(Permutation({3, 4, 2, 1}).to_string() == "3421");
    const auto big = Permutation::parse("4,3,2,1,5,6,7,11,10,8,9");
    CHECK(Permutation::parse(big.to_string()) == big);
  }

  TEST_CASE("inversions") {
    CHECK(inversions(Permutation::parse("3421")) == 5);
    CHECK(inversions(Permutation::identity(7)) == 0);
    CHECK(inversions(Permutation::parse("326514")) == 8);
    CHECK(inversions(Permutation::longest(6)) == 15);
  }

  TEST_CASE("pattern_count") {
    const Permutation p321({3, 2, 1});
    CHECK(pattern_count(Permutation::parse("4321"), p321) == 4);
    CHECK(pattern_count(Permutation::parse("3421"), p321) == 2);
    CHECK(pattern_count(Permutation::parse("326514"), p321) == 3);
    CHECK(pattern_count(Permutation::parse("12"), p321) == 0);
  }

  TEST_CASE("avoids") {
    CHECK(avoids(Permutation::parse("326514"), Permutation::parse("4321")));
    CHECK_FALSE(avoids(Permutation::parse("4321"), Permutation::parse("4321")));
    CHECK_FALSE(avoids(Permutation::parse("531642"), Permutation::parse("53142")));
  }

  TEST_CASE("occurrences are reported as positions") {
    std::vector<std::vector<int>> seen;
    for_each_occurrence(Permutation::parse("3421"), Permutation({3, 2, 1}),
                        [&](std::span<const int> t) { seen.emplace_back(t.begin(), t.end()); });
    CHECK(seen == std::vector<std::vector<int>>{{0, 2, 3}, {1, 2, 3}});
  }

  TEST_CASE("standardize restricts to positions") {
    const std::vector<int> positions{1, 2, 4};
    CHECK(standardize(Permutation::parse("326514"), positions) == Permutation({2, 3, 1}));
  }

  TEST_CASE("inverse and positions") {
    const auto w = Permutation::parse("35241");
    CHECK(w.inverse() == Permutation::parse("53142"));
    CHECK(w.inverse().inverse() == w);
    CHECK(Permutation::longest(4).is_identity() == false);
    CHECK(Permutation::identity(4).is_identity());
  }

  TEST_CASE("enumerate_sn") {
    CHECK(enumerate_sn(1) == std::vector<Permutation>{Permutation::identity(1)});
    const auto s3 = enumerate_sn(3);
    REQUIRE(s3.size() == 6);
    CHECK(s3.front().to_string() == "123");
    CHECK(s3.back().to_string() == "321");
    CHECK(enumerate_sn(5).size() == 120);
    CHECK(std::is_sorted(s3.begin(), s3.end()));
    CHECK_THROWS_AS(enumerate_sn(9), BudgetExceeded);
    CHECK_THROWS_AS(enumerate_sn(0), InputError);
  }

  TEST_CASE("pattern counts match brute force and respect the binomial bound") {
    for (int n = 1; n <= 5; ++n) {
      for (const auto& w : enumerate_sn(n)) {
        for (int k = 3; k <= 4; ++k) {
          for (const auto& p : enumerate_sn(k)) {
            const auto c = pattern_count(w, p);
            REQUIRE(c == oracle::pattern_count(oracle::values(w), oracle::values(p)));
            std::int64_t choose = 1;
            for (int i = 0; i < k; ++i) choose = choose * (n - i) / (i + 1);
            CHECK(c <= std::max<std::int64_t>(choose, 0));
            CHECK(avoids(w, p) == (c == 0));
          }
        }
      }
    }
  }

  TEST_CASE("inversions match brute force on S_6") {
    for (const auto& w : enumerate_sn(6)) REQUIRE(inversions(w) == oracle::inversions(oracle::values(w)));
  }
}
