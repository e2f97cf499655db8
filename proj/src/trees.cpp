#include "parkpat/trees.hpp"

#include "parkpat/errors.hpp"

#include <stdexcept>

namespace parkpat {

OrderedTree::OrderedTree() : children_(1), parent_(1, -1) {}

OrderedTree OrderedTree::from_children(int root, const std::vector<std::vector<int>>& children,
                                       std::vector<int>* old_to_new) {
  OrderedTree t;
  t.children_.clear();
  t.parent_.clear();
  std::vector<int> map(children.size(), -1);
  // Iterative preorder so deep paths do not exhaust the stack.
  std::vector<std::pair<int, int>> stack{{root, -1}};
  while (!stack.empty()) {
    auto [v, p] = stack.back();
    stack.pop_back();
    if (map[v] != -1) throw std::invalid_argument("child lists do not form a tree");
    const int id = static_cast<int>(t.children_.size());
    map[v] = id;
    t.children_.emplace_back();
    t.parent_.push_back(p);
    if (p >= 0) t.children_[p].push_back(id);
    for (auto it = children[v].rbegin(); it != children[v].rend(); ++it) stack.emplace_back(*it, id);
  }
  if (old_to_new) *old_to_new = std::move(map);
  return t;
}

int OrderedTree::depth(int v) const {
  int d = 0;
  while (parent_[v] >= 0) v = parent_[v], ++d;
  return d;
}

bool OrderedTree::is_path() const {
  for (const auto& c : children_)
    if (c.size() > 1) return false;
  return true;
}

OrderedTree OrderedTree::subtree(int v) const { return from_children(v, children_); }

OrderedTree parse_tree(std::string_view s) {
  std::vector<std::vector<int>> ch;
  std::vector<int> stack;
  int root = -1;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] == '(') {
      if (root != -1 && stack.empty()) throw ParseError("text after the tree", i + 1);
      const int id = static_cast<int>(ch.size());
      ch.emplace_back();
      if (stack.empty()) root = id;
      else ch[stack.back()].push_back(id);
      stack.push_back(id);
    } else if (s[i] == ')') {
      if (stack.empty()) throw ParseError("unbalanced ')'", i + 1);
      stack.pop_back();
    } else {
      throw ParseError("expected '(' or ')'", i + 1);
    }
  }
  if (root == -1) throw ParseError("empty tree", 1);
  if (!stack.empty()) throw ParseError("unbalanced '('", s.size() + 1);
  return OrderedTree::from_children(root, ch);
}

std::string format_tree(const OrderedTree& t) {
  std::string out;
  std::vector<std::pair<int, std::size_t>> stack{{0, 0}};
  out += '(';
  while (!stack.empty()) {
    auto& [v, i] = stack.back();
    if (i < t.children(v).size()) {
      const int c = t.children(v)[i++];
      out += '(';
      stack.emplace_back(c, 0);
    } else {
      out += ')';
      stack.pop_back();
    }
  }
  return out;
}

namespace {

void dyck(int edges, int open, int close, std::string& cur, TreeConstraint c,
          const std::function<void(const OrderedTree&)>& fn) {
  if (open == edges && close == edges) {
    OrderedTree t = parse_tree("(" + cur + ")");
    const int d = t.root_degree();
    if (c == TreeConstraint::All || (c == TreeConstraint::OddRoot && d % 2 == 1) ||
        (c == TreeConstraint::RootAtLeast2 && d >= 2))
      fn(t);
    return;
  }
  if (open < edges) {
    cur.push_back('(');
    dyck(edges, open + 1, close, cur, c, fn);
    cur.pop_back();
  }
  if (close < open) {
    cur.push_back(')');
    dyck(edges, open, close + 1, cur, c, fn);
    cur.pop_back();
  }
}

}  // namespace

void for_each_tree(int edges, TreeConstraint c, const std::function<void(const OrderedTree&)>& fn) {
  if (edges < 1) throw std::invalid_argument("need at least one edge");
  std::string cur;
  dyck(edges, 0, 0, cur, c, fn);
}

std::vector<OrderedTree> enumerate_trees(int edges, TreeConstraint c) {
  std::vector<OrderedTree> out;
  for_each_tree(edges, c, [&](const OrderedTree& t) { out.push_back(t); });
  return out;
}

bool is_full_right_subtree(const OrderedTree& t, const SubtreeSelection& s) {
  if (s.vertex < 0 || s.vertex >= t.vertex_count()) return false;
  int v = s.vertex;
  while (t.parent(v) >= 0) {
    const int p = t.parent(v);
    if (t.children(p).back() != v) return false;
    v = p;
  }
  const int deg = static_cast<int>(t.children(s.vertex).size());
  if (s.branches.empty()) return false;
  for (std::size_t i = 0; i < s.branches.size(); ++i)
    if (s.branches[i] != deg - static_cast<int>(s.branches.size()) + static_cast<int>(i)) return false;
  return true;
}

OrderedTree selected_subtree(const OrderedTree& t, const SubtreeSelection& s) {
  std::vector<std::vector<int>> ch(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) ch[v] = t.children(v);
  std::vector<int> keep;
  for (int b : s.branches) keep.push_back(t.children(s.vertex).at(b));
  ch[s.vertex] = keep;
  return OrderedTree::from_children(s.vertex, ch);
}

bool has_full_right_subtree(const OrderedTree& t, const OrderedTree& shape) {
  int v = 0;
  while (true) {
    const int deg = static_cast<int>(t.children(v).size());
    for (int r = 1; r <= deg; ++r) {
      SubtreeSelection s{v, {}};
      for (int i = deg - r; i < deg; ++i) s.branches.push_back(i);
      if (selected_subtree(t, s) == shape) return true;
    }
    if (deg == 0) return false;
    v = t.children(v).back();
  }
}

}  // namespace parkpat
