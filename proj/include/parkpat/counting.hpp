#pragma once

#include "parkpat/bigint.hpp"
#include "parkpat/permutation.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace parkpat {

enum class Method { Formula, Recurrence, WeightedSum, BruteForce };
std::string method_name(Method m);

struct CountResult {
  BigInt value;
  Method method;
};

CountResult generic_weighted_pk(int n, const PatternSet& set);
// Closed form or recurrence when one is known, otherwise the weighted sum.
CountResult pk_count(const PatternSet& set, int n);
bool pk_has_dedicated_formula(const PatternSet& set);

// table[n][k] for 1 <= k <= n, indices 0 unused.
using TriangularTable = std::vector<std::vector<BigInt>>;
TriangularTable pk312_table(int n);
TriangularTable pk321_table(int n);
// The 312 table with factor (1 + m(n-k)) in place of (n-k+1).
TriangularTable metasylvester_table(int n, int m);

enum class PathWeight { P123, P213, P312, P321 };
PathWeight parse_path_weight(std::string_view name);
CountResult pk_sum_over_paths(int n, PathWeight weight);

CountResult pf_count(const PatternSet& set, int n);
CountResult pf312321_closed_form(int n);
// Sum over Catalan paths of prod_{i < |w|} (w_i + 1).
CountResult pf312321_path_sum(int n);
// Ordered rooted trees with the given number of edges and odd root degree.
BigInt odd_root_tree_count(int edges);

}  // namespace parkpat
