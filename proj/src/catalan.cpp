#include "parkpat/catalan.hpp"

#include "parkpat/errors.hpp"

#include <algorithm>
#include <stdexcept>

namespace parkpat {

LatticePath::LatticePath(std::vector<Step> steps, int m) : steps_(std::move(steps)), m_(m) {
  if (m < 1) throw std::invalid_argument("m must be positive");
  long h = 0;
  int downs = 0;
  for (Step s : steps_) {
    if (s == Step::Up) {
      h += m;
      ++n_;
    } else {
      --h;
      ++downs;
    }
    if (h < 0) throw std::invalid_argument("path goes below the axis");
  }
  if (h != 0 || downs != m * n_) throw std::invalid_argument("path does not return to the axis");
}

namespace {

void paths_rec(int n, int m, int ups, int downs, std::vector<Step>& cur,
               const std::function<void(const LatticePath&)>& fn) {
  if (ups == n && downs == m * n) {
    fn(LatticePath(cur, m));
    return;
  }
  if (ups < n) {
    cur.push_back(Step::Up);
    paths_rec(n, m, ups + 1, downs, cur, fn);
    cur.pop_back();
  }
  if (downs < m * ups) {
    cur.push_back(Step::Down);
    paths_rec(n, m, ups, downs + 1, cur, fn);
    cur.pop_back();
  }
}

void words_rec(int n, int m, int ups, int downs, bool in_run, AscentWord& w,
               const std::function<void(const AscentWord&)>& fn) {
  if (ups == n && downs == m * n) {
    fn(w);
    return;
  }
  if (ups < n) {
    if (in_run) {
      ++w.back();
      words_rec(n, m, ups + 1, downs, true, w, fn);
      --w.back();
    } else {
      w.push_back(1);
      words_rec(n, m, ups + 1, downs, true, w, fn);
      w.pop_back();
    }
  }
  if (downs < m * ups) words_rec(n, m, ups, downs + 1, false, w, fn);
}

}  // namespace

void for_each_path(int n, int m, const std::function<void(const LatticePath&)>& fn) {
  std::vector<Step> cur;
  paths_rec(n, m, 0, 0, cur, fn);
}

std::vector<LatticePath> enumerate_paths(int n, int m) {
  std::vector<LatticePath> out;
  for_each_path(n, m, [&](const LatticePath& p) { out.push_back(p); });
  return out;
}

void for_each_ascent_word(int n, int m, const std::function<void(const AscentWord&)>& fn) {
  AscentWord w;
  words_rec(n, m, 0, 0, false, w, fn);
}

BigInt fuss_catalan(int n, int m) { return binomial(static_cast<long>(m + 1) * n, n) / (m * n + 1); }

AscentWord ascent_word(const LatticePath& c) {
  AscentWord w;
  bool in_run = false;
  for (Step s : c.steps()) {
    if (s == Step::Up) {
      if (in_run) ++w.back();
      else w.push_back(1);
      in_run = true;
    } else {
      in_run = false;
    }
  }
  return w;
}

int peak_count(const LatticePath& c) { return static_cast<int>(ascent_word(c).size()); }

BigInt m_narayana(int n, int k, int m) {
  if (k < 1 || k > n) throw std::invalid_argument("m_narayana needs 1 <= k <= n");
  return binomial(static_cast<long>(m) * n, k - 1) * binomial(n, k) / n;
}

CanonicalDecomposition canonical_decomposition(const LatticePath& c) {
  if (c.m() != 1 || c.n() < 1) throw std::invalid_argument("canonical decomposition needs a Catalan path with n >= 1");
  const auto& s = c.steps();
  int k = 0;
  while (s[k] == Step::Up) ++k;
  CanonicalDecomposition d{k, {}};
  // Part i runs from the first descent k-i+1 -> k-i until the first descent k-i -> k-i-1.
  std::size_t pos = k;
  int h = k;
  for (int i = 1; i <= k; ++i) {
    ++pos;  // D_i
    --h;
    std::vector<Step> part;
    while (pos < s.size()) {
      if (s[pos] == Step::Down && h == k - i) break;
      h += s[pos] == Step::Up ? 1 : -1;
      part.push_back(s[pos++]);
    }
    d.parts.emplace_back(std::move(part), 1);
  }
  return d;
}

LatticePath compose_canonical(const CanonicalDecomposition& d) {
  if (static_cast<int>(d.parts.size()) != d.k) throw std::invalid_argument("need exactly k parts");
  std::vector<Step> s(d.k, Step::Up);
  for (const auto& p : d.parts) {
    s.push_back(Step::Down);
    s.insert(s.end(), p.steps().begin(), p.steps().end());
  }
  return LatticePath(std::move(s), 1);
}

FirstPeakDeletion delete_first_peak(const LatticePath& c) {
  if (c.m() != 1) throw std::invalid_argument("first-peak deletion needs m = 1");
  if (ascent_word(c).size() < 2) throw std::invalid_argument("first-peak deletion needs at least two runs");
  const auto& s = c.steps();
  std::size_t j = 0;
  while (s[j] == Step::Up) ++j;
  std::size_t d = j;
  while (s[d] == Step::Down) ++d;
  const int i = static_cast<int>(d - j);
  std::vector<Step> r(s.begin(), s.begin() + (j - i));
  r.insert(r.end(), s.begin() + d, s.end());
  return {i, LatticePath(std::move(r), 1)};
}

LatticePath insert_first_peak(const LatticePath& reduced, int first_down_run, int first_run) {
  const auto& s = reduced.steps();
  int j = 0;
  while (j < static_cast<int>(s.size()) && s[j] == Step::Up) ++j;
  const int tail_ups = j - (first_run - first_down_run);
  if (first_down_run < 1 || first_run < first_down_run || tail_ups < 1)
    throw std::invalid_argument("invalid first-peak insertion");
  std::vector<Step> r(first_run, Step::Up);
  r.insert(r.end(), first_down_run, Step::Down);
  r.insert(r.end(), tail_ups, Step::Up);
  r.insert(r.end(), s.begin() + j, s.end());
  return LatticePath(std::move(r), 1);
}

Preferences path_to_increasing_pf(const LatticePath& c) {
  Preferences f;
  int j = 1;
  int pending = 0;
  for (Step s : c.steps()) {
    if (s == Step::Up) {
      ++pending;
    } else {
      f.insert(f.end(), pending, j);
      pending = 0;
      ++j;
    }
  }
  return f;
}

LatticePath increasing_pf_to_path(const Preferences& f, int m) {
  if (!std::is_sorted(f.begin(), f.end())) throw std::invalid_argument("function must be increasing");
  const int n = static_cast<int>(f.size());
  std::vector<Step> s;
  std::size_t idx = 0;
  for (int j = 1; j <= m * n; ++j) {
    while (idx < f.size() && f[idx] == j) {
      s.push_back(Step::Up);
      ++idx;
    }
    s.push_back(Step::Down);
  }
  if (idx != f.size()) throw std::invalid_argument("value exceeds codomain");
  return LatticePath(std::move(s), m);
}

LatticePath parse_path(std::string_view text, int m) {
  std::vector<Step> s;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == 'U') s.push_back(Step::Up);
    else if (text[i] == 'D') s.push_back(Step::Down);
    else throw ParseError("expected 'U' or 'D'", i + 1);
  }
  try {
    return LatticePath(std::move(s), m);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), 1);
  }
}

std::string format_path(const LatticePath& c) {
  std::string s;
  for (Step st : c.steps()) s += st == Step::Up ? 'U' : 'D';
  return s;
}

}  // namespace parkpat
