#pragma once

#include "parkpat/bigint.hpp"

#include <compare>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace parkpat {

// One-line notation of a bijection on {1..n}.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> entries);

  static Permutation identity(int n);
  static Permutation reverse_identity(int n);

  int size() const { return static_cast<int>(entries_.size()); }
  bool empty() const { return entries_.empty(); }
  // 1-based, as in ρ(i).
  int operator()(int i) const { return entries_[i - 1]; }
  const std::vector<int>& entries() const { return entries_; }

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> entries_;
};

Permutation direct_sum(const Permutation& s, const Permutation& t);
Permutation skew_sum(const Permutation& s, const Permutation& t);

enum class Order { Increasing, Decreasing };
std::vector<int> list_on_set(const std::set<int>& s, Order order);

bool contains(const Permutation& pi, const Permutation& sigma);
inline bool avoids(const Permutation& pi, const Permutation& sigma) { return !contains(pi, sigma); }

class PatternSet {
 public:
  PatternSet() = default;
  explicit PatternSet(std::vector<Permutation> patterns);

  const std::vector<Permutation>& patterns() const { return patterns_; }
  std::size_t size() const { return patterns_.size(); }
  bool empty() const { return patterns_.empty(); }
  bool has(const Permutation& p) const;
  PatternSet united(const PatternSet& other) const;

  auto operator<=>(const PatternSet&) const = default;

 private:
  std::vector<Permutation> patterns_;
};

bool avoids_all(const Permutation& pi, const PatternSet& set);
std::vector<Permutation> avoidance_class(int n, const PatternSet& set);
// All permutations of [n] in lexicographic order.
std::vector<Permutation> all_permutations(int n);

int ell_factor(const Permutation& rho, int i);
BigInt ell_weight(const Permutation& rho);

Permutation parse_permutation(std::string_view text);
std::string format_permutation(const Permutation& p);
PatternSet parse_pattern_set(std::string_view text);
std::string format_pattern_set(const PatternSet& set);

// The 63 nonempty subsets of S_3, ordered by bitmask over the lexicographic S_3 listing.
std::vector<PatternSet> all_s3_subsets();

}  // namespace parkpat
