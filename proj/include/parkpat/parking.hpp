#pragma once

#include "parkpat/permutation.hpp"

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace parkpat {

using Preferences = std::vector<int>;
using Blocks = std::vector<std::vector<int>>;

struct ParkingOutcome {
  std::vector<int> spot_of_car;  // spot_of_car[i-1] = spot taken by car i
  Permutation rho;               // rho(s) = car in spot s
};

// nullopt when some car drives off the end.
std::optional<ParkingOutcome> simulate(const Preferences& prefs);
bool is_parking(const Preferences& prefs);

class ParkingFunction {
 public:
  ParkingFunction() = default;
  explicit ParkingFunction(Preferences prefs);

  int size() const { return static_cast<int>(prefs_.size()); }
  const Preferences& prefs() const { return prefs_; }
  bool operator==(const ParkingFunction&) const = default;
  auto operator<=>(const ParkingFunction&) const = default;

 private:
  Preferences prefs_;
};

class BlockNotation {
 public:
  BlockNotation() = default;
  explicit BlockNotation(Blocks blocks);

  int size() const { return static_cast<int>(blocks_.size()); }
  const Blocks& blocks() const { return blocks_; }
  const std::vector<int>& operator[](int i) const { return blocks_[i]; }
  bool operator==(const BlockNotation&) const = default;

 private:
  Blocks blocks_;
};

BlockNotation to_blocks(const ParkingFunction& f);
ParkingFunction from_blocks(const BlockNotation& b);
bool satisfies_condition_b(const Blocks& blocks);

Permutation block_permutation(const ParkingFunction& f);
Permutation block_permutation(const BlockNotation& b);
Permutation parking_permutation(const ParkingFunction& f);

// Lexicographic on preferences.
class ParkingFunctionEnumerator {
 public:
  explicit ParkingFunctionEnumerator(int n);
  bool next();
  const Preferences& current() const { return cur_; }

 private:
  bool feasible(int upto) const;
  int n_;
  Preferences cur_;
  bool started_ = false;
  bool done_ = false;
};

std::vector<ParkingFunction> enumerate_parking_functions(int n);

Preferences parse_preferences(std::string_view text);
std::string format_preferences(const Preferences& prefs);
BlockNotation parse_blocks(std::string_view text);
std::string format_blocks(const BlockNotation& b);

}  // namespace parkpat
