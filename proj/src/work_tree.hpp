#pragma once

#include "parkpat/bijections.hpp"

#include <vector>

namespace parkpat::detail {

// Mutable rooted tree with stable vertex ids, used while Φ grows a tree.
struct WorkTree {
  std::vector<std::vector<int>> ch;
  std::vector<int> par;
  std::vector<int> label;
  std::vector<int> born;
  int root = 0;

  int add(int lab, int when) {
    ch.emplace_back();
    par.push_back(-1);
    label.push_back(lab);
    born.push_back(when);
    return static_cast<int>(ch.size()) - 1;
  }

  void attach_front(int parent, int child) {
    ch[parent].insert(ch[parent].begin(), child);
    par[child] = parent;
  }

  static WorkTree from(const LabeledTree& t, int when) {
    WorkTree w;
    for (int v = 0; v < t.tree.vertex_count(); ++v) w.add(t.labels[v], when);
    for (int v = 0; v < t.tree.vertex_count(); ++v) {
      w.ch[v] = t.tree.children(v);
      w.par[v] = t.tree.parent(v);
    }
    w.root = 0;
    return w;
  }

  LabeledTree labeled(std::vector<int>* old_to_new = nullptr) const {
    std::vector<int> map;
    LabeledTree out{OrderedTree::from_children(root, ch, &map), {}};
    out.labels.assign(out.tree.vertex_count(), -1);
    for (std::size_t v = 0; v < ch.size(); ++v)
      if (map[v] >= 0) out.labels[map[v]] = label[v];
    if (old_to_new) *old_to_new = std::move(map);
    return out;
  }
};

// Blocks of f left after removing the given block indices, as a block notation.
BlockNotation remaining_blocks(const BlockNotation& f, const std::vector<char>& removed);

}  // namespace parkpat::detail
