#pragma once

#include "parkpat/bigint.hpp"
#include "parkpat/parking.hpp"

#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace parkpat {

enum class Step : std::uint8_t { Up, Down };

// n up-steps of height m and m*n down-steps of height 1, never below the axis.
class LatticePath {
 public:
  LatticePath() = default;
  LatticePath(std::vector<Step> steps, int m);

  int m() const { return m_; }
  int n() const { return n_; }
  const std::vector<Step>& steps() const { return steps_; }
  bool operator==(const LatticePath&) const = default;
  auto operator<=>(const LatticePath&) const = default;

 private:
  std::vector<Step> steps_;
  int m_ = 1;
  int n_ = 0;
};

using AscentWord = std::vector<int>;

// Lexicographic with Up < Down; the callback sees each path once.
void for_each_path(int n, int m, const std::function<void(const LatticePath&)>& fn);
std::vector<LatticePath> enumerate_paths(int n, int m = 1);
// Ascent words only, same order, without materialising paths.
void for_each_ascent_word(int n, int m, const std::function<void(const AscentWord&)>& fn);
BigInt fuss_catalan(int n, int m);

AscentWord ascent_word(const LatticePath& c);
int peak_count(const LatticePath& c);
BigInt m_narayana(int n, int k, int m);

struct CanonicalDecomposition {
  int k = 0;
  std::vector<LatticePath> parts;
};
CanonicalDecomposition canonical_decomposition(const LatticePath& c);
LatticePath compose_canonical(const CanonicalDecomposition& d);

struct FirstPeakDeletion {
  int first_down_run = 0;
  LatticePath reduced;
};
FirstPeakDeletion delete_first_peak(const LatticePath& c);
LatticePath insert_first_peak(const LatticePath& reduced, int first_down_run, int first_run);

// Up-steps drawn immediately before the j-th down-step become f^{-1}(j).
// For m = 1 this is an increasing parking function.
Preferences path_to_increasing_pf(const LatticePath& c);
LatticePath increasing_pf_to_path(const Preferences& f, int m = 1);

LatticePath parse_path(std::string_view text, int m = 1);
std::string format_path(const LatticePath& c);

}  // namespace parkpat
