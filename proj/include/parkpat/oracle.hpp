#pragma once

#include "parkpat/bigint.hpp"
#include "parkpat/permutation.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace parkpat {

inline constexpr int kOracleMaxN = 8;

// Number of preference sequences in [n]^n that park with each ρ_f, by simulation.
std::map<Permutation, std::uint64_t> parking_permutation_histogram(int n, bool reverse_order = false);
// Same for π_f, over parking functions only.
std::map<Permutation, std::uint64_t> block_permutation_histogram(int n);

BigInt brute_pk(int n, const PatternSet& set);
BigInt brute_pf(int n, const PatternSet& set);

struct OracleReport {
  std::string quantity;
  int n = 0;
  std::optional<int> m;
  BigInt oracle_value;
  BigInt formula_value;
  bool agree = false;
};

enum class Family { PkAllS3Subsets, PfSupported, Generalized, Bijections };
std::vector<OracleReport> verify_all(int n_max, const std::vector<Family>& families);

}  // namespace parkpat
