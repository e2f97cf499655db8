#include "parkpat/parking.hpp"

#include "parkpat/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace parkpat {

namespace {

void check_range(const Preferences& prefs) {
  const int n = static_cast<int>(prefs.size());
  for (int v : prefs)
    if (v < 1 || v > n) throw std::invalid_argument("preference out of range");
}

}  // namespace

std::optional<ParkingOutcome> simulate(const Preferences& prefs) {
  check_range(prefs);
  const int n = static_cast<int>(prefs.size());
  std::vector<int> occupant(n + 1, 0), spot(n);
  for (int car = 1; car <= n; ++car) {
    int s = prefs[car - 1];
    while (s <= n && occupant[s]) ++s;
    if (s > n) return std::nullopt;
    occupant[s] = car;
    spot[car - 1] = s;
  }
  return ParkingOutcome{std::move(spot), Permutation(std::vector<int>(occupant.begin() + 1, occupant.end()))};
}

bool is_parking(const Preferences& prefs) {
  check_range(prefs);
  const int n = static_cast<int>(prefs.size());
  std::vector<int> count(n + 1, 0);
  for (int v : prefs) ++count[v];
  int acc = 0;
  for (int i = 1; i <= n; ++i) {
    acc += count[i];
    if (acc < i) return false;
  }
  return true;
}

ParkingFunction::ParkingFunction(Preferences prefs) : prefs_(std::move(prefs)) {
  if (!is_parking(prefs_)) throw std::invalid_argument("not a parking function");
}

bool satisfies_condition_b(const Blocks& blocks) {
  std::size_t acc = 0;
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    acc += blocks[i].size();
    if (acc < i + 1) return false;
  }
  return true;
}

BlockNotation::BlockNotation(Blocks blocks) : blocks_(std::move(blocks)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  int total = 0;
  for (auto& b : blocks_) {
    std::sort(b.begin(), b.end());
    for (int v : b) {
      if (v < 1 || v > n || seen[v]) throw std::invalid_argument("blocks must partition [n]");
      seen[v] = 1;
      ++total;
    }
  }
  if (total != n) throw std::invalid_argument("blocks must partition [n]");
  if (!satisfies_condition_b(blocks_)) throw std::invalid_argument("condition B fails");
}

BlockNotation to_blocks(const ParkingFunction& f) {
  Blocks b(f.size());
  for (int i = 0; i < f.size(); ++i) b[f.prefs()[i] - 1].push_back(i + 1);
  return BlockNotation(std::move(b));
}

ParkingFunction from_blocks(const BlockNotation& b) {
  Preferences p(b.size());
  for (int j = 0; j < b.size(); ++j)
    for (int car : b[j]) p[car - 1] = j + 1;
  return ParkingFunction(std::move(p));
}

Permutation block_permutation(const BlockNotation& b) {
  std::vector<int> e;
  for (const auto& blk : b.blocks()) e.insert(e.end(), blk.begin(), blk.end());
  return Permutation(std::move(e));
}

Permutation block_permutation(const ParkingFunction& f) { return block_permutation(to_blocks(f)); }

Permutation parking_permutation(const ParkingFunction& f) {
  auto out = simulate(f.prefs());
  if (!out) throw std::logic_error("simulation disagrees with condition A");
  return out->rho;
}

ParkingFunctionEnumerator::ParkingFunctionEnumerator(int n) : n_(n), cur_(n, 1) {}

// Can positions [upto, n) still be filled so that condition A holds?
bool ParkingFunctionEnumerator::feasible(int upto) const {
  std::vector<int> count(n_ + 1, 0);
  for (int j = 0; j < upto; ++j) ++count[cur_[j]];
  int acc = 0;
  const int free = n_ - upto;
  for (int i = 1; i <= n_; ++i) {
    acc += count[i];
    if (acc + free < i) return false;
  }
  return true;
}

bool ParkingFunctionEnumerator::next() {
  if (done_) return false;
  if (!started_) {
    started_ = true;
    return true;  // (1,...,1) is always the lexicographically first
  }
  // Odometer step from the right, re-filling the tail with its minimum.
  for (int pos = n_ - 1; pos >= 0; --pos) {
    while (cur_[pos] < n_) {
      ++cur_[pos];
      if (!feasible(pos + 1)) continue;
      std::fill(cur_.begin() + pos + 1, cur_.end(), 1);
      return true;
    }
  }
  done_ = true;
  return false;
}

std::vector<ParkingFunction> enumerate_parking_functions(int n) {
  std::vector<ParkingFunction> out;
  ParkingFunctionEnumerator it(n);
  while (it.next()) out.emplace_back(it.current());
  return out;
}

Preferences parse_preferences(std::string_view text) {
  Preferences p;
  if (text.empty()) return p;
  std::size_t i = 0;
  while (true) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t start = i;
    long v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9' && v < 1'000'000) v = v * 10 + (text[i++] - '0');
    if (i == start) throw ParseError("expected a number", i + 1);
    p.push_back(static_cast<int>(v));
    while (i < text.size() && text[i] == ' ') ++i;
    if (i == text.size()) break;
    if (text[i] != ',') throw ParseError("expected ','", i + 1);
    ++i;
  }
  const int n = static_cast<int>(p.size());
  for (int v : p)
    if (v < 1 || v > n) throw ParseError("preference out of range 1.." + std::to_string(n), 1);
  return p;
}

std::string format_preferences(const Preferences& prefs) {
  std::string s;
  for (std::size_t i = 0; i < prefs.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(prefs[i]);
  }
  return s;
}

BlockNotation parse_blocks(std::string_view text) {
  std::size_t i = 0;
  auto skip = [&] {
    while (i < text.size() && (text[i] == ' ' || text[i] == '\t')) ++i;
  };
  auto expect = [&](char c) {
    skip();
    if (i >= text.size() || text[i] != c) throw ParseError(std::string("expected '") + c + "'", i + 1);
    ++i;
  };
  Blocks blocks;
  expect('(');
  skip();
  if (i < text.size() && text[i] == ')') {
    ++i;
  } else {
    while (true) {
      expect('{');
      std::vector<int> blk;
      skip();
      if (i < text.size() && text[i] == '}') {
        ++i;
      } else {
        while (true) {
          skip();
          std::size_t start = i;
          long v = 0;
          while (i < text.size() && text[i] >= '0' && text[i] <= '9' && v < 1'000'000) v = v * 10 + (text[i++] - '0');
          if (i == start) throw ParseError("expected a number", i + 1);
          blk.push_back(static_cast<int>(v));
          skip();
          if (i < text.size() && text[i] == ',') {
            ++i;
            continue;
          }
          expect('}');
          break;
        }
      }
      blocks.push_back(std::move(blk));
      skip();
      if (i < text.size() && text[i] == ',') {
        ++i;
        continue;
      }
      expect(')');
      break;
    }
  }
  skip();
  if (i != text.size()) throw ParseError("trailing characters", i + 1);
  try {
    return BlockNotation(std::move(blocks));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1);
  }
}

std::string format_blocks(const BlockNotation& b) {
  std::string s = "(";
  for (int j = 0; j < b.size(); ++j) {
    if (j) s += ',';
    s += '{';
    for (std::size_t t = 0; t < b[j].size(); ++t) {
      if (t) s += ',';
      s += std::to_string(b[j][t]);
    }
    s += '}';
  }
  return s + ")";
}

}  // namespace parkpat
