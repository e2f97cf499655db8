#include "parkpat/bijections.hpp"

#include "work_tree.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

namespace parkpat {

using detail::WorkTree;

std::vector<Cluster213> clusters_123_213(const BlockNotation& f) {
  static const PatternSet family = parse_pattern_set("123,213");
  if (!avoids_all(block_permutation(f), family)) throw std::invalid_argument("block permutation contains 123 or 213");
  std::vector<int> partner(f.size(), -1);
  for (auto [a, b] : match_empty_blocks(f)) partner[a] = b;
  const auto bad = [] { return std::invalid_argument("not a member of Pf(123,213)"); };

  // Block indices still present, in order; clusters are peeled off the front.
  std::vector<int> live(f.size());
  for (int j = 0; j < f.size(); ++j) live[j] = j;
  std::vector<Cluster213> out;
  int n = f.size();
  while (n > 0) {
    std::size_t p = 0;
    while (f[live[p]].empty()) ++p;
    if (p != 0) throw bad();
    const auto& first = f[live[0]];
    const int k = first.front() - 1;
    Cluster213 c{};
    c.low = k;
    c.length = n - k;
    std::vector<std::size_t> taken;
    if (first.size() == 1) {
      for (int i = 1; i <= n - k - 1; ++i)
        if (i >= static_cast<int>(live.size()) || f[live[i]] != std::vector<int>{n + 1 - i}) throw bad();
      c.kind = Kind213::Closed;
      c.parameter = n - k - 1;
      for (int i = 0; i < n - k; ++i) taken.push_back(i), c.main_blocks.push_back(live[i]);
    } else {
      if (first.back() != n) throw bad();
      for (int i = 1; i <= n - k - 2; ++i) {
        std::size_t q = 0;
        int seen = 0;
        // i-th nonempty block after the first, skipping empties in between.
        for (q = 1; q < live.size(); ++q)
          if (!f[live[q]].empty() && ++seen == i) break;
        if (q == live.size() || f[live[q]] != std::vector<int>{n - i}) throw bad();
      }
      const int e = partner[live[0]];
      const auto epos = static_cast<std::size_t>(std::find(live.begin(), live.end(), e) - live.begin());
      const int last_main_pos = [&] {
        int seen = 0;
        for (std::size_t q = 0; q < live.size(); ++q)
          if (!f[live[q]].empty() && seen++ == n - k - 2) return static_cast<int>(q);
        throw bad();
      }();
      c.empty_block = e;
      if (static_cast<int>(epos) <= last_main_pos + 1 && f[live[epos - 1]].size() > 0) {
        const auto& before = f[live[epos - 1]];
        const int value = before.size() == 2 ? n : before.front();
        c.kind = Kind213::Closed;
        c.parameter = value - k - 2;
        if (static_cast<int>(epos) > last_main_pos + 1 || c.parameter < 0) throw bad();
        for (std::size_t q = 0; q < static_cast<std::size_t>(n - k); ++q) {
          taken.push_back(q);
          if (!f[live[q]].empty()) c.main_blocks.push_back(live[q]);
        }
      } else {
        c.kind = Kind213::Open;
        for (int q = 0; q <= last_main_pos; ++q) {
          if (f[live[q]].empty()) continue;
          taken.push_back(q);
          c.main_blocks.push_back(live[q]);
        }
        taken.push_back(epos);
      }
    }
    std::sort(taken.begin(), taken.end());
    for (std::size_t i = taken.size(); i-- > 0;) live.erase(live.begin() + static_cast<long>(taken[i]));
    n = k;
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

struct Base213 {
  const char* blocks;
  const char* tree;
};

const std::vector<Base213>& base_table_213() {
  static const std::vector<Base213> t = {
      {"()", "(())"},
      {"({1})", "(()())"},
      {"({1},{2})", "(()(()))"},
      {"({1,2},{})", "((())())"},
      {"({2},{1})", "(()()())"},
      {"({1},{3},{2})", "(()((())))"},
      {"({1,3},{},{2})", "((())(()))"},
      {"({1,3},{2},{})", "(((()))())"},
      {"({2},{3},{1})", "(()(()()))"},
      {"({2,3},{},{1})", "((())()())"},
      {"({2,3},{1},{})", "((()())())"},
      {"({3},{1},{2})", "(()()(()))"},
      {"({3},{1,2},{})", "(()(())())"},
      {"({3},{2},{1})", "(()()()())"},
  };
  return t;
}

template <class K, class V, class F>
const std::map<K, V>& lazy_index(F build) {
  static const std::map<K, V> m = build();
  return m;
}

const OrderedTree* table_phi_213(const BlockNotation& f) {
  static const auto index = [] {
    std::map<std::string, OrderedTree> m;
    for (const auto& e : base_table_213()) m[e.blocks] = parse_tree(e.tree);
    return m;
  }();
  auto it = index.find(format_blocks(f));
  return it == index.end() ? nullptr : &it->second;
}

const BlockNotation* table_psi_213(const OrderedTree& t) {
  static const auto index = [] {
    std::map<std::string, BlockNotation> m;
    for (const auto& e : base_table_213()) m[e.tree] = parse_blocks(e.blocks);
    return m;
  }();
  auto it = index.find(format_tree(t));
  return it == index.end() ? nullptr : &it->second;
}

void attach_left_path(WorkTree& w, int at, int length, int when) {
  int prev = at;
  for (int i = 0; i < length; ++i) {
    const int v = w.add(-1, when);
    if (prev == at) w.attach_front(at, v);
    else w.attach_front(prev, v);
    prev = v;
  }
}

[[noreturn]] void defect(const std::string& what) { throw std::logic_error("Φ(123,213) invariant violated: " + what); }

}  // namespace

OrderedTree phi_123_213(const BlockNotation& f, const BijectionOptions& opt) {
  const int n = f.size();
  if (n <= std::min(opt.table_cutoff, 3)) {
    static_cast<void>(clusters_123_213(f));
    if (const OrderedTree* t = table_phi_213(f)) return *t;
    throw std::logic_error("missing base case " + format_blocks(f));
  }
  const auto clusters = clusters_123_213(f);
  std::vector<int> owner(n, -1);
  for (std::size_t c = 0; c < clusters.size(); ++c) {
    for (int b : clusters[c].main_blocks) owner[b] = static_cast<int>(c);
    if (clusters[c].empty_block) owner[*clusters[c].empty_block] = static_cast<int>(c);
  }

  // Open clusters refer back to the root of the tree built at an earlier stage,
  // so the tree is always grown from the single edge.
  WorkTree w;
  w.root = w.add(-1, 0);
  w.attach_front(w.root, w.add(-1, 0));
  std::map<int, int> stage_root{{0, w.root}};

  for (std::size_t ci = clusters.size(); ci-- > 0;) {
    const auto& c = clusters[ci];
    const int top = c.low + c.length;
    if (c.kind == Kind213::Closed) {
      for (int i = 0; i < c.parameter; ++i) {
        const int x = w.add(-1, top);
        w.ch[x] = {w.root};
        w.par[w.root] = x;
        w.root = x;
      }
      attach_left_path(w, w.root, c.length - c.parameter, top);
      stage_root[top] = w.root;
      continue;
    }

    // The cluster C' owning the last nonempty block before the empty block.
    int prev = *c.empty_block - 1;
    while (prev >= 0 && f[prev].empty()) --prev;
    if (prev < 0) defect("empty block before any nonempty block");
    const int oc = owner[prev];
    if (oc <= static_cast<int>(ci)) defect("empty block lies inside an earlier cluster");
    const auto& other = clusters[oc];
    if (other.kind != Kind213::Closed) defect("C' is an open cluster");
    int ell = 0;
    for (int b : other.main_blocks)
      if (b > *c.empty_block) ++ell;
    if (ell > other.parameter) defect("C' parameter smaller than the blocks to its right");

    const int rb = stage_root.at(other.low);
    int v = rb, toward = -1;
    for (int i = 0; i < ell; ++i) toward = v, v = w.par[v];
    if (v < 0) defect("path above the stage root too short");
    for (int x = v; w.par[x] >= 0; x = w.par[x])
      if (w.ch[w.par[x]].back() != x) defect("subtree root not on the right-most chain");

    const auto& vc = w.ch[v];
    std::size_t split = vc.size();
    if (ell >= 1) {
      if (vc.back() != toward) defect("path is not the right-most branch");
      split = vc.size() - 1;
    } else {
      while (split > 0 && w.born[vc[split - 1]] <= other.low) --split;
      for (std::size_t i = 0; i < split; ++i)
        if (w.born[vc[i]] <= other.low) defect("stage branches are not right-most");
      if (split == vc.size()) defect("no branches from the earlier stage");
    }
    const std::vector<int> left(vc.begin(), vc.begin() + static_cast<long>(split));
    const std::vector<int> right(vc.begin() + static_cast<long>(split), vc.end());

    std::vector<int> up;  // v, parent(v), ..., old root
    for (int x = v; x >= 0; x = w.par[x]) up.push_back(x);
    const int old_root = w.root;
    const int u = w.add(-1, top);
    std::vector<int> uch;
    if (up.size() > 1) uch.push_back(up[1]);
    uch.insert(uch.end(), left.begin(), left.end());
    for (std::size_t i = 1; i < up.size(); ++i) {
      const int p = up[i];
      const auto& pc = w.ch[p];
      const auto j = static_cast<std::size_t>(std::find(pc.begin(), pc.end(), up[i - 1]) - pc.begin());
      std::vector<int> nc(pc.begin() + static_cast<long>(j) + 1, pc.end());
      if (i + 1 < up.size()) nc.push_back(up[i + 1]);
      nc.insert(nc.end(), pc.begin(), pc.begin() + static_cast<long>(j));
      w.ch[p] = nc;
    }
    w.ch[u] = uch;
    std::vector<int> vch{u};
    vch.insert(vch.end(), right.begin(), right.end());
    w.ch[v] = vch;
    // Rebuild parent links for everything touched.
    for (int x : up)
      for (int y : w.ch[x]) w.par[y] = x;
    for (int y : w.ch[u]) w.par[y] = u;
    w.par[v] = -1;
    w.root = v;
    attach_left_path(w, old_root == v ? u : old_root, c.length - 1, top);
    stage_root[top] = w.root;
  }
  return w.labeled().tree;
}

namespace {

BlockNotation closed_cluster_then(int low, int length, int parameter, const Blocks& tail) {
  const int top = low + length;
  Blocks b;
  if (parameter == length - 1) {
    b.push_back({low + 1});
    for (int x = top; x >= low + 2; --x) b.push_back({x});
  } else {
    b.push_back({low + 1, top});
    for (int x = top - 1; x >= low + 2; --x) b.push_back({x});
    const int mark = low + 2 + parameter;  // empty block follows the block holding this value
    const auto it = std::find_if(b.begin(), b.end(),
                                 [&](const std::vector<int>& blk) { return blk.back() == mark; });
    b.insert(it + 1, std::vector<int>{});
  }
  b.insert(b.end(), tail.begin(), tail.end());
  return BlockNotation(std::move(b));
}

// Copy of t with each vertex's child list supplied by `children`, rooted at `root`.
OrderedTree rebuild(int root, const std::vector<std::vector<int>>& children) {
  return OrderedTree::from_children(root, children);
}

}  // namespace

BlockNotation psi_123_213(const OrderedTree& t, const BijectionOptions& opt) {
  const int n = t.edge_count() - 1;
  if (n >= 1 && t.root_degree() < 2) throw std::invalid_argument("root degree must be at least 2");
  if (n <= std::min(opt.table_cutoff, 3)) {
    if (const BlockNotation* f = table_psi_213(t)) return *f;
    throw std::logic_error("missing base case " + format_tree(t));
  }
  if (n == 0) return BlockNotation();

  std::vector<int> spine{0};
  while (!t.children(spine.back()).empty()) spine.push_back(t.children(spine.back())[0]);
  const int L = static_cast<int>(spine.size()) - 1;
  int wi = -1;
  for (int i = L - 1; i >= 1; --i)
    if (t.children(spine[i]).size() >= 2) {
      wi = i;
      break;
    }

  const auto& rc = t.children(0);
  // Right-hand structure: depth of the first branching vertex on the right branch.
  auto right_branch = [&](int& ell, int& u) {
    int x = rc[1], d = 1;
    while (t.children(x).size() == 1) x = t.children(x)[0], ++d;
    if (t.children(x).empty()) {
      ell = d - 1;
      u = -1;
    } else {
      ell = d;
      u = x;
    }
  };

  if (wi < 0) {
    const int k = n - L;
    if (rc.size() == 2) {
      int ell, u;
      right_branch(ell, u);
      if (u < 0) {
        if (ell != k) throw std::logic_error("right path length mismatch");
        return closed_cluster_then(0, n, k, {});
      }
      const BlockNotation rest = psi_123_213(t.subtree(u), opt);
      return closed_cluster_then(k - ell, n - k + ell, ell, rest.blocks());
    }
    std::vector<std::vector<int>> ch(t.vertex_count());
    for (int v = 0; v < t.vertex_count(); ++v) ch[v] = t.children(v);
    ch[0].erase(ch[0].begin());
    const BlockNotation rest = psi_123_213(rebuild(0, ch), opt);
    return closed_cluster_then(k, n - k, 0, rest.blocks());
  }

  const int k = n - 1 - (L - wi);
  int ell, b;
  if (rc.size() == 2) {
    int u;
    right_branch(ell, u);
    b = u < 0 ? 0 : t.subtree(u).edge_count() - 1;
  } else {
    ell = 0;
    b = t.edge_count() - t.subtree(rc[0]).edge_count() - 1 - 1;
  }

  // T': drop the path below w, merge the first left vertex into the root, re-root at w.
  std::vector<std::vector<int>> ch(t.vertex_count());
  for (int v = 0; v < t.vertex_count(); ++v) ch[v] = t.children(v);
  const int u = spine[1];
  ch[spine[wi]].erase(ch[spine[wi]].begin());
  // When the branching vertex is the merged one, the new root is the root itself.
  const int w = spine[wi] == u ? 0 : spine[wi];
  std::vector<int> merged = ch[u];
  merged.insert(merged.end(), ch[0].begin() + 1, ch[0].end());
  ch[0] = merged;
  std::vector<int> par(t.vertex_count(), -1);
  for (int v = 0; v < t.vertex_count(); ++v)
    if (v != u)
      for (int c : ch[v]) par[c] = v;
  std::vector<int> down;  // w, parent(w), ..., root
  for (int x = w; x >= 0; x = par[x]) down.push_back(x);
  for (std::size_t i = down.size(); i-- > 1;) {
    // down[i] loses its child down[i-1] and gains its former parent down[i+1].
    const int p = down[i];
    auto& pc = ch[p];
    const auto j = static_cast<std::size_t>(std::find(pc.begin(), pc.end(), down[i - 1]) - pc.begin());
    std::vector<int> nc(pc.begin() + static_cast<long>(j) + 1, pc.end());
    if (i + 1 < down.size()) nc.push_back(down[i + 1]);
    nc.insert(nc.end(), pc.begin(), pc.begin() + static_cast<long>(j));
    pc = nc;
  }
  if (down.size() > 1) ch[w].push_back(down[1]);
  const OrderedTree tp = rebuild(w, ch);
  if (tp.edge_count() != k + 1) throw std::logic_error("T' has the wrong size");

  const BlockNotation fp = psi_123_213(tp, opt);
  const auto cl = clusters_123_213(fp);
  const auto it = std::find_if(cl.begin(), cl.end(), [&](const Cluster213& c) { return c.low == b; });
  if (it == cl.end() || it->kind != Kind213::Closed || it->parameter < ell)
    throw std::logic_error("no closed cluster of sufficient parameter before the right subtree");
  Blocks tail = fp.blocks();
  std::size_t at;
  const auto& mains = it->main_blocks;
  if (ell >= 1) {
    at = static_cast<std::size_t>(mains[mains.size() - static_cast<std::size_t>(ell)]);
  } else {
    at = static_cast<std::size_t>(mains.back()) + 1;
    while (at < tail.size() && tail[at].empty()) ++at;
  }
  tail.insert(tail.begin() + static_cast<long>(at), std::vector<int>{});
  Blocks head{{k + 1, n}};
  for (int x = n - 1; x >= k + 2; --x) head.push_back({x});
  head.insert(head.end(), tail.begin(), tail.end());
  return BlockNotation(std::move(head));
}

}  // namespace parkpat
