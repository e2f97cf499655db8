#include "parkpat/bijections.hpp"

#include "work_tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace parkpat {

namespace detail {

BlockNotation remaining_blocks(const BlockNotation& f, const std::vector<char>& removed) {
  std::vector<int> kept;
  for (int j = 0; j < f.size(); ++j)
    if (!removed[j]) kept.push_back(j);
  // Surviving elements are exactly 1..size, so no relabelling is needed.
  Blocks b;
  for (int j : kept) b.push_back(f[j]);
  return BlockNotation(std::move(b));
}

}  // namespace detail

using detail::WorkTree;

std::vector<std::pair<int, int>> match_empty_blocks(const BlockNotation& f) {
  std::vector<std::pair<int, int>> pairs;
  std::vector<int> open;
  for (int j = 0; j < f.size(); ++j) {
    const auto sz = f[j].size();
    if (sz > 2) throw std::invalid_argument("block of size >= 3: block permutation contains 123");
    if (sz == 2) {
      open.push_back(j);
    } else if (sz == 0) {
      if (open.empty()) throw std::logic_error("unmatched empty block");
      pairs.emplace_back(open.back(), j);
      open.pop_back();
    }
  }
  if (!open.empty()) throw std::logic_error("unmatched size-2 block");
  std::sort(pairs.begin(), pairs.end());
  return pairs;
}

namespace {

const PatternSet& family132() {
  static const PatternSet s = parse_pattern_set("123,132");
  return s;
}

void require_family(const BlockNotation& f, const PatternSet& s) {
  if (!avoids_all(block_permutation(f), s))
    throw std::invalid_argument("block permutation contains " + format_pattern_set(s));
}

std::vector<int> partner_of(const BlockNotation& f) {
  std::vector<int> partner(f.size(), -1);
  for (auto [a, b] : match_empty_blocks(f)) partner[a] = b, partner[b] = a;
  return partner;
}

std::vector<int> nonempty_blocks(const BlockNotation& f) {
  std::vector<int> ne;
  for (int j = 0; j < f.size(); ++j)
    if (!f[j].empty()) ne.push_back(j);
  return ne;
}

}  // namespace

std::vector<Cluster132> clusters_123_132(const BlockNotation& f) {
  require_family(f, family132());
  const auto partner = partner_of(f);
  const auto ne = nonempty_blocks(f);
  const auto bad = [] { return std::invalid_argument("not a member of Pf(123,132)"); };
  std::vector<Cluster132> out;
  std::size_t pos = 0;
  int n = f.size();
  while (n > 0) {
    const auto& first = f[ne.at(pos)];
    Cluster132 c{};
    if (first.front() == n) {
      int len = 0;
      while (pos + len < ne.size() && f[ne[pos + len]] == std::vector<int>{n - len}) ++len;
      c.kind = Kind132::Extend;
      c.length = len;
      for (int i = 0; i < len; ++i) c.main_blocks.push_back(ne[pos + i]);
    } else if (first.front() == n - 1) {
      std::size_t j = 0;
      while (pos + j < ne.size() && f[ne[pos + j]].back() != n) ++j;
      if (pos + j == ne.size()) throw bad();
      const auto& last = f[ne[pos + j]];
      for (std::size_t i = 0; i < j; ++i)
        if (f[ne[pos + i]] != std::vector<int>{n - 1 - static_cast<int>(i)}) throw bad();
      if (last.size() == 1) {
        c.kind = Kind132::Branch;
        c.length = static_cast<int>(j) + 1;
      } else {
        c.kind = Kind132::Jump;
        c.length = n - last.front() + 1;
        if (c.length != static_cast<int>(j) + 2) throw bad();
        c.empty_block = partner[ne[pos + j]];
      }
      for (std::size_t i = 0; i <= j; ++i) c.main_blocks.push_back(ne[pos + i]);
    } else {
      throw bad();
    }
    c.low = n - c.length;
    pos += c.main_blocks.size();
    n -= c.length;
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

struct Base132 {
  const char* blocks;
  const char* tree;
  std::vector<int> labels;  // preorder, root first
};

const std::vector<Base132>& base_table_132() {
  static const std::vector<Base132> t = {
      {"()", "(())", {-1, 0}},
      {"({1})", "((()))", {-1, 0, 1}},
      {"({1},{2})", "((()()))", {-1, 0, 2, 1}},
      {"({1,2},{})", "(()()())", {-1, 2, 1, 0}},
      {"({2},{1})", "(((())))", {-1, 0, 1, 2}},
      {"({2},{1},{3})", "((()(())))", {-1, 0, 3, 1, 2}},
      {"({2},{1,3},{})", "(()(())())", {-1, 3, 1, 2, 0}},
      {"({2},{3},{1})", "(((()())))", {-1, 0, 1, 3, 2}},
      {"({2,3},{1},{})", "(()()(()))", {-1, 3, 2, 0, 1}},
      {"({2,3},{},{1})", "((()()()))", {-1, 0, 3, 2, 1}},
      {"({3},{2},{1})", "((((()))))", {-1, 0, 1, 2, 3}},
      {"({3},{1},{2})", "(((())()))", {-1, 0, 2, 3, 1}},
      {"({3},{1,2},{})", "((())()())", {-1, 2, 3, 1, 0}},
  };
  return t;
}

const LabeledTree* table_phi_132(const BlockNotation& f) {
  static const auto index = [] {
    std::map<std::string, LabeledTree> m;
    for (const auto& e : base_table_132()) m[e.blocks] = LabeledTree{parse_tree(e.tree), e.labels};
    return m;
  }();
  auto it = index.find(format_blocks(f));
  return it == index.end() ? nullptr : &it->second;
}

const BlockNotation* table_psi_132(const OrderedTree& t) {
  static const auto index = [] {
    std::map<std::string, BlockNotation> m;
    for (const auto& e : base_table_132()) m[e.tree] = parse_blocks(e.blocks);
    return m;
  }();
  auto it = index.find(format_tree(t));
  return it == index.end() ? nullptr : &it->second;
}

// Adds a path labelled lo..hi below `at`, as its new leftmost branch.
void attach_path(WorkTree& w, int at, int lo, int hi, int step) {
  int prev = -1;
  for (int lab = lo; lab <= hi; ++lab) {
    const int v = w.add(lab, step);
    if (prev < 0) w.attach_front(at, v);
    else w.attach_front(prev, v);
    prev = v;
  }
}

}  // namespace

LabeledTree phi_123_132_labeled(const BlockNotation& f, const BijectionOptions& opt, Phi132Trace* trace) {
  const auto clusters = clusters_123_132(f);
  const int n = f.size();
  std::vector<int> owner(n, -1);
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (int b : clusters[c].main_blocks) owner[b] = static_cast<int>(c);
    if (clusters[c].empty_block) owner[*clusters[c].empty_block] = static_cast<int>(c);
  }

  // First cluster index whose suffix is small enough for the tables.
  std::size_t start = 0;
  int suffix = n;
  const int cutoff = std::min(opt.table_cutoff, 3);
  while (suffix > std::max(cutoff, 0)) suffix -= clusters[start++].length;
  std::vector<char> removed(n, 0);
  for (int b = 0; b < n; ++b) removed[b] = owner[b] >= 0 && owner[b] < static_cast<int>(start);
  const BlockNotation base = detail::remaining_blocks(f, removed);
  WorkTree w;
  if (cutoff >= 0) {
    const LabeledTree* t = table_phi_132(base);
    if (!t) throw std::logic_error("missing base case " + format_blocks(base));
    w = WorkTree::from(*t, 0);
  } else {
    w.root = w.add(-1, 0);
    w.attach_front(w.root, w.add(0, 0));
  }
  std::vector<int> targets;

  int step = 0;
  for (std::size_t ci = start; ci-- > 0;) {
    ++step;
    const auto& c = clusters[ci];
    const int k = c.low, top = c.low + c.length;
    std::vector<int> vertex_of(top, -1);
    for (std::size_t v = 0; v < w.label.size(); ++v)
      if (w.label[v] >= 0) vertex_of[w.label[v]] = static_cast<int>(v);
    int target;
    if (c.kind != Kind132::Jump) {
      target = vertex_of[k];
    } else {
      int next = *c.empty_block + 1;
      while (next < n && f[next].empty()) ++next;
      if (next == n) {
        target = w.root;
      } else {
        const int oc = owner[next];
        if (oc <= static_cast<int>(ci)) throw std::logic_error("empty block precedes its own cluster");
        const auto& other = clusters[oc];
        const auto& blk = f[next];
        int lab;
        switch (other.kind) {
          case Kind132::Extend: lab = blk.front() - 1; break;
          case Kind132::Branch: lab = blk.front() == other.low + other.length ? other.low : blk.front(); break;
          default: lab = blk.front(); break;
        }
        target = vertex_of.at(lab);
      }
    }
    targets.push_back(target);
    if (c.kind == Kind132::Extend) {
      attach_path(w, target, k + 1, top, step);
    } else {
      attach_path(w, target, k + 1, top - 1, step);
      w.attach_front(target, w.add(top, step));
    }
  }

  std::vector<int> map;
  LabeledTree out = w.labeled(&map);
  if (trace) {
    trace->creation_step.assign(out.tree.vertex_count(), 0);
    for (std::size_t v = 0; v < w.born.size(); ++v) trace->creation_step[map[v]] = w.born[v];
    trace->targets.clear();
    for (int t : targets) trace->targets.push_back(map[t]);
  }
  return out;
}

OrderedTree phi_123_132(const BlockNotation& f, const BijectionOptions& opt) {
  return phi_123_132_labeled(f, opt).tree;
}

namespace {

bool has_branching(const OrderedTree& t, int v) {
  for (;;) {
    const auto& c = t.children(v);
    if (c.size() >= 2) return true;
    if (c.empty()) return false;
    v = c[0];
  }
}

int descend_to_branching(const OrderedTree& t, int v) {
  while (t.children(v).size() == 1) v = t.children(v)[0];
  return v;
}

int path_length(const OrderedTree& t, int v) {
  int len = 1;
  while (!t.children(v).empty()) v = t.children(v)[0], ++len;
  return len;
}

// T without the listed vertices and all their descendants.
OrderedTree prune(const OrderedTree& t, const std::vector<int>& cut, std::vector<int>* map) {
  std::vector<std::vector<int>> ch(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v)
    for (int c : t.children(v))
      if (std::find(cut.begin(), cut.end(), c) == cut.end()) ch[v].push_back(c);
  return OrderedTree::from_children(0, ch, map);
}

Blocks prefixed(Blocks head, const Blocks& tail) {
  head.insert(head.end(), tail.begin(), tail.end());
  return head;
}

}  // namespace

int find_target_vertex(const OrderedTree& t) {
  if (t.is_path()) throw std::invalid_argument("a path has no target vertex");
  int v = descend_to_branching(t, 0);
  for (;;) {
    const int b1 = t.children(v)[0], b2 = t.children(v)[1];
    if (has_branching(t, b2)) v = descend_to_branching(t, b2);
    else if (has_branching(t, b1)) v = descend_to_branching(t, b1);
    else return v;
  }
}

BlockNotation psi_123_132(const OrderedTree& t, const BijectionOptions& opt) {
  if (t.root_degree() % 2 == 0) throw std::invalid_argument("root degree must be odd");
  const int n = t.edge_count() - 1;
  if (n <= std::min(opt.table_cutoff, 3)) {
    const BlockNotation* f = table_psi_132(t);
    if (!f) throw std::logic_error("missing base case " + format_tree(t));
    return *f;
  }
  if (n == 0) return BlockNotation();
  if (t.is_path()) {
    Blocks b;
    for (int i = n; i >= 1; --i) b.push_back({i});
    return BlockNotation(std::move(b));
  }
  const int v = find_target_vertex(t);
  const int c1 = t.children(v)[0], c2 = t.children(v)[1];
  const int l1 = path_length(t, c1);
  if (l1 > 1) {
    const OrderedTree t1 = prune(t, {t.children(c1)[0]}, nullptr);
    Blocks head;
    for (int i = n; i >= n - l1 + 2; --i) head.push_back({i});
    return BlockNotation(prefixed(std::move(head), psi_123_132(t1, opt).blocks()));
  }
  const int l2 = path_length(t, c2);
  const int k = n - 1 - l2;
  std::vector<int> map;
  const OrderedTree tp = prune(t, {c1, c2}, &map);
  const BlockNotation fp = psi_123_132(tp, opt);
  const LabeledTree lt = phi_123_132_labeled(fp, opt);
  if (!(lt.tree == tp)) throw std::logic_error("Φ does not invert Ψ on a smaller tree");
  const int lab = lt.labels[map[v]];

  if (lab == k) {
    Blocks head;
    for (int i = n - 1; i >= k + 1; --i) head.push_back({i});
    head.push_back({n});
    return BlockNotation(prefixed(std::move(head), fp.blocks()));
  }
  Blocks tail = fp.blocks();
  std::size_t insert_at = tail.size();
  if (lab >= 0) {
    const auto clusters = clusters_123_132(fp);
    const auto it = std::find_if(clusters.begin(), clusters.end(),
                                 [&](const Cluster132& c) { return c.low < lab + 1 && lab + 1 <= c.low + c.length; });
    auto block_with = [&](int x) {
      for (std::size_t j = 0; j < tail.size(); ++j)
        if (std::find(tail[j].begin(), tail[j].end(), x) != tail[j].end()) return j;
      throw std::logic_error("element not found");
    };
    switch (it->kind) {
      case Kind132::Extend: insert_at = block_with(lab + 1); break;
      case Kind132::Branch:
        insert_at = lab + 1 == it->low + 1 ? block_with(it->low + it->length) : block_with(lab);
        break;
      case Kind132::Jump:
        if (lab <= it->low) throw std::logic_error("jump cluster target outside its cluster");
        insert_at = block_with(lab);
        break;
    }
  }
  tail.insert(tail.begin() + static_cast<long>(insert_at), std::vector<int>{});
  Blocks head;
  for (int i = n - 1; i >= k + 2; --i) head.push_back({i});
  head.push_back({k + 1, n});
  return BlockNotation(prefixed(std::move(head), tail));
}

}  // namespace parkpat
