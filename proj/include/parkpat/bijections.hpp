#pragma once

#include "parkpat/parking.hpp"
#include "parkpat/trees.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace parkpat {

struct LabeledTree {
  OrderedTree tree;
  std::vector<int> labels;  // per preorder vertex; -1 on the root
  bool operator==(const LabeledTree&) const = default;
};

struct BijectionOptions {
  // Inputs of size at most this are answered from the base-case tables.
  int table_cutoff = 3;
};

// Block indices (0-based) of each size-2 block and the empty block that closes it.
std::vector<std::pair<int, int>> match_empty_blocks(const BlockNotation& f);

enum class Kind132 { Extend, Branch, Jump };
struct Cluster132 {
  Kind132 kind;
  int length = 0;
  int low = 0;  // elements are low+1 .. low+length
  std::vector<int> main_blocks;
  std::optional<int> empty_block;
};
std::vector<Cluster132> clusters_123_132(const BlockNotation& f);

enum class Kind213 { Closed, Open };
struct Cluster213 {
  Kind213 kind;
  int length = 0;
  int low = 0;
  int parameter = 0;  // closed clusters only
  std::vector<int> main_blocks;
  std::optional<int> empty_block;
};
std::vector<Cluster213> clusters_123_213(const BlockNotation& f);

// Creation step of every vertex (0 for the starting tree, s for the s-th cluster
// applied) and the vertex targeted by each step, both in preorder numbering.
struct Phi132Trace {
  std::vector<int> creation_step;
  std::vector<int> targets;
};

LabeledTree phi_123_132_labeled(const BlockNotation& f, const BijectionOptions& opt = {},
                                Phi132Trace* trace = nullptr);
OrderedTree phi_123_132(const BlockNotation& f, const BijectionOptions& opt = {});
BlockNotation psi_123_132(const OrderedTree& t, const BijectionOptions& opt = {});
// Throws std::invalid_argument when t is a path.
int find_target_vertex(const OrderedTree& t);

OrderedTree phi_123_213(const BlockNotation& f, const BijectionOptions& opt = {});
BlockNotation psi_123_213(const OrderedTree& t, const BijectionOptions& opt = {});

// All of Pf_n(P) in block notation, by depth-first search over block sequences
// with pruning on the prefix of π_f.
std::vector<BlockNotation> enumerate_block_avoiders(int n, const PatternSet& set);

}  // namespace parkpat
