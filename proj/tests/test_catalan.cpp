#include "brute.hpp"

#include "parkpat/catalan.hpp"

#include <doctest.h>

#include <set>

using namespace parkpat;

namespace {
LatticePath L(const char* s, int m = 1) { return parse_path(s, m); }

// Every Up/Down word with the right step counts, filtered by the prefix condition.
std::size_t brute_path_count(int n, int m) {
  std::size_t count = 0;
  brute::for_each_word((m + 1) * n, 2, [&](const std::vector<int>& w) {
    int ups = 0, h = 0;
    for (int s : w) {
      if (s == 1) ++ups, h += m;
      else if (--h < 0) return;
    }
    count += ups == n && h == 0;
  });
  return count;
}
}

TEST_CASE("path enumeration") {
  CHECK(enumerate_paths(3, 1).size() == 5);
  CHECK(enumerate_paths(2, 2).size() == 3);
  const auto empty = enumerate_paths(0, 1);
  REQUIRE(empty.size() == 1);
  CHECK(empty[0].steps().empty());
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= (m == 1 ? 6 : 4); ++n) {
      const auto paths = enumerate_paths(n, m);
      CHECK(paths.size() == brute_path_count(n, m));
      CHECK(BigInt(paths.size()) == fuss_catalan(n, m));
      CHECK(std::is_sorted(paths.begin(), paths.end()));
      CHECK(std::set<LatticePath>(paths.begin(), paths.end()).size() == paths.size());
    }
}

TEST_CASE("ascent words") {
  CHECK(ascent_word(L("UDUUDUDD")) == AscentWord{1, 2, 1});
  CHECK(ascent_word(L("UUUUDDDD")) == AscentWord{4});
  CHECK(ascent_word(L("UDUDUD")) == AscentWord{1, 1, 1});
  std::size_t words = 0;
  for_each_ascent_word(5, 2, [&](const AscentWord& w) {
    REQUIRE(w == ascent_word(enumerate_paths(5, 2)[words]));
    ++words;
  });
  CHECK(words == enumerate_paths(5, 2).size());
}

TEST_CASE("canonical decomposition examples") {
  const auto a = canonical_decomposition(L("UUDDUD"));
  CHECK(a.k == 2);
  REQUIRE(a.parts.size() == 2);
  CHECK(format_path(a.parts[0]).empty());
  CHECK(format_path(a.parts[1]) == "UD");
  const auto b = canonical_decomposition(L("UUUDDD"));
  CHECK(b.k == 3);
  for (const auto& p : b.parts) CHECK(p.steps().empty());
  const auto c = canonical_decomposition(L("UDUD"));
  CHECK(c.k == 1);
  CHECK(format_path(c.parts.at(0)) == "UD");
}

TEST_CASE("canonical decomposition inverts and prefixes ascent words") {
  for (int n = 1; n <= 8; ++n)
    for (const auto& c : enumerate_paths(n)) {
      const auto d = canonical_decomposition(c);
      REQUIRE(compose_canonical(d) == c);
      AscentWord expect{d.k};
      for (const auto& p : d.parts)
        for (int r : ascent_word(p)) expect.push_back(r);
      // The first run of C merges with the first run of C_1 only when D_1 C_1 starts with U,
      // which cannot happen: D_1 always follows the initial run.
      REQUIRE(ascent_word(c) == expect);
    }
}

TEST_CASE("first peak deletion") {
  const auto a = delete_first_peak(L("UUDUDD"));
  CHECK(a.first_down_run == 1);
  CHECK(format_path(a.reduced) == "UUDD");
  const auto b = delete_first_peak(L("UDUD"));
  CHECK(b.first_down_run == 1);
  CHECK(format_path(b.reduced) == "UD");
  CHECK(format_path(insert_first_peak(L("UUDD"), 1, 2)) == "UUDUDD");
  CHECK_THROWS_AS(delete_first_peak(L("UUDD")), std::invalid_argument);
}

TEST_CASE("first peak deletion inverts") {
  for (int n = 2; n <= 8; ++n)
    for (const auto& c : enumerate_paths(n)) {
      const auto w = ascent_word(c);
      if (w.size() < 2) continue;
      const auto d = delete_first_peak(c);
      REQUIRE(d.reduced.n() == n - d.first_down_run);
      REQUIRE(ascent_word(d.reduced)[0] == w[0] + w[1] - d.first_down_run);
      REQUIRE(insert_first_peak(d.reduced, d.first_down_run, w[0]) == c);
    }
}

TEST_CASE("increasing parking functions") {
  CHECK(path_to_increasing_pf(L("UUDUDD")) == Preferences{1, 1, 2});
  CHECK(path_to_increasing_pf(L("UUUDDD")) == Preferences{1, 1, 1});
  const auto f = path_to_increasing_pf(L("UDUUDUDD"));
  std::vector<int> counts(4, 0);
  for (int v : f) ++counts[v - 1];
  std::vector<int> packed;
  for (int c : counts)
    if (c) packed.push_back(c);
  CHECK(packed == std::vector<int>{1, 2, 1});
}

TEST_CASE("paths biject onto increasing parking functions") {
  for (int n = 0; n <= 7; ++n) {
    std::set<Preferences> image;
    for (const auto& c : enumerate_paths(n)) {
      const auto f = path_to_increasing_pf(c);
      REQUIRE(std::is_sorted(f.begin(), f.end()));
      REQUIRE(is_parking(f));
      REQUIRE(increasing_pf_to_path(f) == c);
      image.insert(f);
    }
    std::size_t increasing = 0;
    for (const auto& pf : enumerate_parking_functions(n))
      increasing += std::is_sorted(pf.prefs().begin(), pf.prefs().end());
    CHECK(image.size() == increasing);
  }
  // m = 2 lands in the m-parking bound f(i) <= 1 + m(i-1).
  for (const auto& c : enumerate_paths(4, 2)) {
    const auto f = path_to_increasing_pf(c);
    for (std::size_t i = 0; i < f.size(); ++i) REQUIRE(f[i] <= 1 + 2 * static_cast<int>(i));
    REQUIRE(increasing_pf_to_path(f, 2) == c);
  }
}

TEST_CASE("m-Narayana numbers") {
  CHECK(m_narayana(3, 2, 1) == 3);
  CHECK(m_narayana(3, 1, 1) == 1);
  CHECK(m_narayana(2, 1, 2) + m_narayana(2, 2, 2) == 3);
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 6; ++n) {
      std::vector<long> by_peaks(n + 1, 0);
      for (const auto& c : enumerate_paths(n, m)) ++by_peaks[peak_count(c)];
      BigInt sum = 0;
      for (int k = 1; k <= n; ++k) {
        REQUIRE(m_narayana(n, k, m) == by_peaks[k]);
        sum += m_narayana(n, k, m);
      }
      CHECK(sum == fuss_catalan(n, m));
    }
}

TEST_CASE("path text format") {
  CHECK(format_path(L("UDUUDUDD")) == "UDUUDUDD");
  CHECK(L("UUDDDD", 2).n() == 2);
  CHECK(L("UDD", 2).n() == 1);
  CHECK_THROWS_AS(L("DU"), std::invalid_argument);
  CHECK_THROWS_AS(L("UUD"), std::invalid_argument);
  CHECK_THROWS_AS(L("UXD"), std::invalid_argument);
}
