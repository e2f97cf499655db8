#include "brute.hpp"

#include "parkpat/errors.hpp"
#include "parkpat/parking.hpp"

#include <doctest.h>

using namespace parkpat;

namespace {
const Preferences kFig{4, 4, 6, 4, 2, 2, 1};
}

TEST_CASE("simulation of the seven-car example") {
  const auto out = simulate(kFig);
  REQUIRE(out);
  CHECK(out->spot_of_car == std::vector<int>{4, 5, 6, 7, 2, 3, 1});
  CHECK(format_permutation(out->rho) == "7561234");
  CHECK(format_permutation(simulate({1, 1, 1, 1})->rho) == "1234");
  CHECK_FALSE(simulate({2, 3, 3}));
}

TEST_CASE("condition A") {
  CHECK(is_parking(kFig));
  CHECK(is_parking({2, 2, 1}));
  CHECK_FALSE(is_parking({2, 3, 3}));
  CHECK(is_parking({}));
}

TEST_CASE("condition A agrees with simulation, exhaustively") {
  for (int n = 1; n <= 6; ++n)
    brute::for_each_word(n, n, [](const std::vector<int>& f) {
      REQUIRE(is_parking(f) == simulate(f).has_value());
      REQUIRE(is_parking(f) == !brute::park(f).empty());
    });
}

TEST_CASE("block notation") {
  const ParkingFunction f(kFig);
  CHECK(format_blocks(to_blocks(f)) == "({7},{5,6},{},{1,2,4},{},{3},{})");
  CHECK(from_blocks(parse_blocks("({1},{2},{3})")).prefs() == Preferences{1, 2, 3});
  const auto rev = from_blocks(parse_blocks("({4},{3},{2},{1})"));
  CHECK(rev.prefs() == Preferences{4, 3, 2, 1});
  CHECK_THROWS_AS(parse_blocks("({1,2},{2},{})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_blocks("({},{1,2})"), std::invalid_argument);
  CHECK_THROWS_AS(parse_blocks("({1},{})"), std::invalid_argument);
  CHECK_THROWS_AS(ParkingFunction({2, 3, 3}), std::invalid_argument);
}

TEST_CASE("block and parking permutations") {
  const ParkingFunction f(kFig);
  CHECK(format_permutation(block_permutation(f)) == "7561243");
  CHECK(format_permutation(parking_permutation(f)) == "7561234");
  CHECK(format_permutation(block_permutation(parse_blocks("({1},{2},{3})"))) == "123");
  CHECK(format_permutation(block_permutation(parse_blocks("({2,3},{1},{})"))) == "231");
  CHECK(parking_permutation(ParkingFunction({1, 2, 3, 4, 5})) == Permutation::identity(5));
  CHECK(format_permutation(parking_permutation(ParkingFunction({1, 1, 2}))) == "123");
}

TEST_CASE("round trips and statistics over all parking functions") {
  for (int n = 0; n <= 6; ++n)
    for (const auto& f : enumerate_parking_functions(n)) {
      REQUIRE(from_blocks(to_blocks(f)) == f);
      REQUIRE(block_permutation(f).size() == n);
      REQUIRE(parking_permutation(f).size() == n);
      REQUIRE(parse_blocks(format_blocks(to_blocks(f))) == to_blocks(f));
    }
}

TEST_CASE("enumeration") {
  CHECK(enumerate_parking_functions(1).size() == 1);
  const auto two = enumerate_parking_functions(2);
  REQUIRE(two.size() == 3);
  CHECK(two[0].prefs() == Preferences{1, 1});
  CHECK(two[1].prefs() == Preferences{1, 2});
  CHECK(two[2].prefs() == Preferences{2, 1});
  CHECK(enumerate_parking_functions(0).size() == 1);
  for (int n = 1; n <= 7; ++n) {
    std::size_t filtered = 0;
    brute::for_each_word(n, n, [&](const std::vector<int>& f) { filtered += !brute::park(f).empty(); });
    const auto all = enumerate_parking_functions(n);
    CHECK(all.size() == filtered);
    CHECK(static_cast<long long>(all.size()) == brute::ipow(n + 1, n - 1));
    CHECK(std::is_sorted(all.begin(), all.end()));
  }
}

TEST_CASE("from_blocks accepts a disjoint cover iff condition B holds") {
  // Every assignment of cars to blocks is a word in [n]^n; condition B is the prefix count.
  for (int n = 1; n <= 5; ++n)
    brute::for_each_word(n, n, [n](const std::vector<int>& f) {
      Blocks b(n);
      for (int car = 1; car <= n; ++car) b[f[car - 1] - 1].push_back(car);
      bool cond_b = true;
      int seen = 0;
      for (int i = 0; i < n; ++i) cond_b = cond_b && (seen += static_cast<int>(b[i].size())) >= i + 1;
      bool accepted = true;
      try {
        from_blocks(BlockNotation(b));
      } catch (const std::invalid_argument&) {
        accepted = false;
      }
      REQUIRE(accepted == cond_b);
    });
}

TEST_CASE("preference text format") {
  CHECK(parse_preferences("4,4,6,4,2,2,1") == kFig);
  CHECK(format_preferences(kFig) == "4,4,6,4,2,2,1");
  CHECK_THROWS_AS(parse_preferences("4,,1"), ParseError);
  try {
    parse_blocks("({1},{x})");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.column() == 7);
  }
}
