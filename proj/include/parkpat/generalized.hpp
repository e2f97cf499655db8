#pragma once

#include "parkpat/bigint.hpp"
#include "parkpat/catalan.hpp"

#include <cstdint>
#include <vector>

namespace parkpat {

struct Evaluation {
  std::vector<int> counts;  // counts[j-1] = |f^{-1}(j)|
  std::vector<int> packed;  // nonzero counts, in order
};

Evaluation evaluation(const std::vector<int>& f, int codomain);
bool is_m_multiparking(const std::vector<int>& f, int m, int n);
bool is_m_parking(const std::vector<int>& f, int m, int n);

BigInt hyposylvester_multipark(int n, int m);
BigInt metasylvester_multipark(int n, int m);
BigInt hypoplactic_mpark(int n, int m);
BigInt hyposylvester_mpark(int n, int m);

inline constexpr std::uint64_t kDefaultPathCap = 10'000'000;
// Reads PARKPAT_PATH_CAP, falling back to the default.
std::uint64_t path_cap_from_env();
// Throws BudgetExceeded when the m-Catalan path count exceeds cap.
BigInt metasylvester_mpark(int n, int m, std::uint64_t cap = kDefaultPathCap);

// Per packed evaluation class counts.
BigInt hyposylvester_factor(const std::vector<int>& beta);
BigInt metasylvester_factor(const std::vector<int>& beta);
BigInt hypoplactic_factor(const std::vector<int>& beta);

// Direct path sums over m-Catalan paths of a factor of the ascent word.
enum class ClassFamily { HyposylvesterMulti, MetasylvesterMulti, MetasylvesterM, HypoplacticM, HyposylvesterM };
BigInt class_path_sum(ClassFamily family, int n, int m);
BigInt class_count(ClassFamily family, int n, int m, std::uint64_t cap = kDefaultPathCap);

}  // namespace parkpat
