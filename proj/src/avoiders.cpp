#include "parkpat/bijections.hpp"

#include <stdexcept>

namespace parkpat {

namespace {

struct AvoiderSearch {
  int n;
  const PatternSet& set;
  std::vector<char> used;
  std::vector<int> word;
  Blocks blocks;
  int placed = 0;
  std::vector<BlockNotation> out;

  bool prefix_ok() const {
    const Permutation p = [&] {
      // Order-isomorphic copy of the prefix, so it is a genuine permutation.
      std::vector<int> r(word.size());
      for (std::size_t i = 0; i < word.size(); ++i) {
        int rank = 1;
        for (int x : word) rank += x < word[i];
        r[i] = rank;
      }
      return Permutation(std::move(r));
    }();
    return avoids_all(p, set);
  }

  void next_block() {
    const int idx = static_cast<int>(blocks.size());
    if (idx == n) {
      if (placed == n) out.emplace_back(blocks);
      return;
    }
    blocks.emplace_back();
    grow(0);
    blocks.pop_back();
  }

  // Extends the current block with elements larger than `after`, or closes it.
  void grow(int after) {
    const int idx = static_cast<int>(blocks.size());
    if (placed >= idx) next_block();
    for (int x = after + 1; x <= n; ++x) {
      if (used[x]) continue;
      used[x] = 1;
      word.push_back(x);
      blocks.back().push_back(x);
      ++placed;
      if (prefix_ok()) grow(x);
      --placed;
      blocks.back().pop_back();
      word.pop_back();
      used[x] = 0;
    }
  }
};

}  // namespace

std::vector<BlockNotation> enumerate_block_avoiders(int n, const PatternSet& set) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  AvoiderSearch s{n, set, std::vector<char>(n + 1, 0), {}, {}, 0, {}};
  s.next_block();
  return s.out;
}

}  // namespace parkpat
