#include "brute.hpp"

#include "parkpat/oracle.hpp"
#include "parkpat/parking.hpp"
#include "parkpat/permutation.hpp"

#include <doctest.h>

#include <random>

using namespace parkpat;

namespace {
Permutation P(const char* s) { return parse_permutation(s); }
}

TEST_CASE("identity and reverse identity") {
  CHECK(format_permutation(Permutation::identity(3)) == "123");
  CHECK(format_permutation(Permutation::reverse_identity(4)) == "4321");
  CHECK(Permutation::reverse_identity(0).empty());
  CHECK(Permutation::identity(0) == Permutation());
}

TEST_CASE("direct and skew sums") {
  CHECK(direct_sum(P("1"), P("21")) == P("132"));
  CHECK(skew_sum(P("12"), P("1")) == P("231"));
  CHECK(direct_sum(Permutation(), P("21")) == P("21"));
  CHECK(skew_sum(P("21"), Permutation()) == P("21"));
}

TEST_CASE("list_on_set builds the concatenation 256431") {
  CHECK(list_on_set({2, 5}, Order::Increasing) == std::vector<int>{2, 5});
  CHECK(list_on_set({1, 3, 4}, Order::Decreasing) == std::vector<int>{4, 3, 1});
  CHECK(list_on_set({}, Order::Increasing).empty());
  std::vector<int> e = list_on_set({2, 5}, Order::Increasing);
  e.push_back(6);
  for (int v : list_on_set({1, 3, 4}, Order::Decreasing)) e.push_back(v);
  CHECK(format_permutation(Permutation(e)) == "256431");
}

TEST_CASE("containment examples") {
  CHECK(contains(P("7561243"), P("132")));
  CHECK_FALSE(contains(P("7561234"), P("132")));
  CHECK(contains(P("123"), P("123")));
  CHECK(avoids(P("321"), P("12")));
}

TEST_CASE("containment agrees with subset search on S_6 against S_3") {
  for (const auto& pi : all_permutations(6))
    for (const auto& sigma : all_permutations(3))
      REQUIRE(contains(pi, sigma) == brute::contains(pi.entries(), sigma.entries()));
}

TEST_CASE("containment is transitive on random triples") {
  std::mt19937 rng(20240611);
  int chains = 0;
  for (int trial = 0; trial < 3000; ++trial) {
    auto rand_perm = [&](int n) {
      std::vector<int> v(n);
      std::iota(v.begin(), v.end(), 1);
      std::shuffle(v.begin(), v.end(), rng);
      return Permutation(v);
    };
    const auto pi = rand_perm(8), sigma = rand_perm(1 + rng() % 5), tau = rand_perm(1 + rng() % 3);
    if (contains(pi, sigma) && contains(sigma, tau)) {
      ++chains;
      REQUIRE(contains(pi, tau));
    }
  }
  CHECK(chains > 100);
}

TEST_CASE("avoidance classes") {
  const auto five = avoidance_class(3, parse_pattern_set("123,132,213,231,312"));
  REQUIRE(five.size() == 1);
  CHECK(five[0] == P("321"));
  std::size_t filtered = 0;
  for (const auto& p : all_permutations(4)) filtered += !brute::contains(p.entries(), {1, 2, 3});
  CHECK(avoidance_class(4, parse_pattern_set("123")).size() == filtered);
  CHECK(filtered == 14);
  CHECK(avoidance_class(5, parse_pattern_set("123,321")).empty());
  CHECK(avoidance_class(4, parse_pattern_set("123,321")).size() > 0);
  const auto empty = avoidance_class(0, parse_pattern_set("12"));
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].empty());
}

TEST_CASE("avoidance class of a union is the intersection") {
  const auto subsets = all_s3_subsets();
  for (int n = 0; n <= 6; ++n) {
    std::vector<std::vector<Permutation>> classes;
    for (const auto& s : subsets) classes.push_back(avoidance_class(n, s));
    for (std::size_t a = 0; a < subsets.size(); ++a)
      for (std::size_t b = a; b < subsets.size(); ++b) {
        std::vector<Permutation> inter;
        std::set_intersection(classes[a].begin(), classes[a].end(), classes[b].begin(), classes[b].end(),
                              std::back_inserter(inter));
        REQUIRE(avoidance_class(n, subsets[a].united(subsets[b])) == inter);
      }
  }
}

TEST_CASE("ell weights") {
  CHECK(ell_weight(Permutation::reverse_identity(5)) == 1);
  CHECK(ell_weight(Permutation::identity(5)) == 120);
  CHECK(ell_weight(P("7561234")) == 48);
  CHECK(ell_factor(P("7561234"), 1) == 1);
  CHECK(ell_factor(P("7561234"), 3) == 2);
}

TEST_CASE("ell_weight counts preference functions by direct simulation") {
  // 7561234 by brute force over all of [7]^7.
  std::uint64_t hits = 0;
  brute::for_each_word(7, 7, [&](const std::vector<int>& f) {
    if (brute::park(f) == std::vector<int>{7, 5, 6, 1, 2, 3, 4}) ++hits;
  });
  CHECK(hits == 48);

  for (int n = 1; n <= 7; ++n) {
    const auto h = parking_permutation_histogram(n);
    BigInt total = 0;
    for (const auto& rho : all_permutations(n)) {
      const BigInt w = ell_weight(rho);
      const auto it = h.find(rho);
      REQUIRE(w == BigInt(std::to_string(it == h.end() ? 0 : it->second)));
      total += w;
    }
    CHECK(total == ipow(n + 1, n - 1));
  }
}

TEST_CASE("pattern set canonical form") {
  const PatternSet a = parse_pattern_set("321,123,321");
  CHECK(a.size() == 2);
  CHECK(format_pattern_set(a) == "123,321");
  CHECK(a == parse_pattern_set("123,321"));
  CHECK(a.has(P("321")));
  CHECK_FALSE(a.has(P("132")));
  CHECK(all_s3_subsets().size() == 63);
}

TEST_CASE("permutation text format") {
  CHECK(format_permutation(P("7561234")) == "7561234");
  const auto big = parse_permutation("10,3,1,2,4,5,6,7,8,9");
  CHECK(big.size() == 10);
  CHECK(big(1) == 10);
  CHECK(format_permutation(big) == "10,3,1,2,4,5,6,7,8,9");
  CHECK_THROWS_AS(parse_permutation("112"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("14"), std::invalid_argument);
  CHECK_THROWS_AS(parse_permutation("1a2"), std::invalid_argument);
  CHECK_THROWS_AS(Permutation({2, 2}), std::invalid_argument);
}
