#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace parkpat {

// Vertices are numbered in preorder; vertex 0 is the root.
class OrderedTree {
 public:
  OrderedTree();  // a single vertex
  // Builds from an arbitrary child-list representation, renumbering in preorder.
  static OrderedTree from_children(int root, const std::vector<std::vector<int>>& children,
                                   std::vector<int>* old_to_new = nullptr);

  int vertex_count() const { return static_cast<int>(children_.size()); }
  int edge_count() const { return vertex_count() - 1; }
  const std::vector<int>& children(int v) const { return children_[v]; }
  int parent(int v) const { return parent_[v]; }
  int root_degree() const { return static_cast<int>(children_[0].size()); }
  int depth(int v) const;
  bool is_path() const;
  // v and all its descendants, as a tree rooted at v.
  OrderedTree subtree(int v) const;
  bool operator==(const OrderedTree& o) const { return children_ == o.children_; }

 private:
  std::vector<std::vector<int>> children_;
  std::vector<int> parent_;
};

OrderedTree parse_tree(std::string_view parens);
std::string format_tree(const OrderedTree& t);

enum class TreeConstraint { All, OddRoot, RootAtLeast2 };
// Lexicographic on the parenthesis string with '(' < ')'.
void for_each_tree(int edges, TreeConstraint c, const std::function<void(const OrderedTree&)>& fn);
std::vector<OrderedTree> enumerate_trees(int edges, TreeConstraint c);

// A vertex together with a run of its child branches.
struct SubtreeSelection {
  int vertex = 0;
  std::vector<int> branches;  // child positions, left to right
};
bool is_full_right_subtree(const OrderedTree& t, const SubtreeSelection& s);
OrderedTree selected_subtree(const OrderedTree& t, const SubtreeSelection& s);
// Whether some full right subtree of t has exactly this shape.
bool has_full_right_subtree(const OrderedTree& t, const OrderedTree& shape);

}  // namespace parkpat
