#include "parkpat/permutation.hpp"

#include "parkpat/errors.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace parkpat {

BigInt factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt catalan_number(unsigned n) { return binomial(2 * n, n) / (n + 1); }

BigInt ipow(const BigInt& base, unsigned e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Permutation::Permutation(std::vector<int> entries) : entries_(std::move(entries)) {
  const int n = size();
  std::vector<char> seen(n + 1, 0);
  for (int v : entries_) {
    if (v < 1 || v > n || seen[v]) throw std::invalid_argument("not a permutation of [n]");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  return Permutation(std::move(e));
}

Permutation Permutation::reverse_identity(int n) {
  std::vector<int> e(n);
  for (int i = 0; i < n; ++i) e[i] = n - i;
  return Permutation(std::move(e));
}

Permutation direct_sum(const Permutation& s, const Permutation& t) {
  std::vector<int> e = s.entries();
  for (int v : t.entries()) e.push_back(v + s.size());
  return Permutation(std::move(e));
}

Permutation skew_sum(const Permutation& s, const Permutation& t) {
  std::vector<int> e;
  for (int v : s.entries()) e.push_back(v + t.size());
  for (int v : t.entries()) e.push_back(v);
  return Permutation(std::move(e));
}

std::vector<int> list_on_set(const std::set<int>& s, Order order) {
  std::vector<int> out(s.begin(), s.end());
  if (order == Order::Decreasing) std::reverse(out.begin(), out.end());
  return out;
}

namespace {

// Chooses positions for sigma left to right, checking order relations against
// every previously chosen value.
bool embed(const std::vector<int>& pi, const std::vector<int>& sigma, std::size_t depth,
           std::size_t from, std::vector<int>& chosen) {
  const std::size_t m = sigma.size();
  if (depth == m) return true;
  for (std::size_t i = from; i + (m - depth) <= pi.size(); ++i) {
    bool ok = true;
    for (std::size_t d = 0; d < depth && ok; ++d)
      ok = (sigma[d] < sigma[depth]) == (chosen[d] < pi[i]);
    if (!ok) continue;
    chosen[depth] = pi[i];
    if (embed(pi, sigma, depth + 1, i + 1, chosen)) return true;
  }
  return false;
}

}  // namespace

bool contains(const Permutation& pi, const Permutation& sigma) {
  if (sigma.size() > pi.size()) return false;
  std::vector<int> chosen(sigma.size());
  return embed(pi.entries(), sigma.entries(), 0, 0, chosen);
}

PatternSet::PatternSet(std::vector<Permutation> patterns) : patterns_(std::move(patterns)) {
  for (const auto& p : patterns_)
    if (p.empty()) throw std::invalid_argument("patterns must be nonempty");
  std::sort(patterns_.begin(), patterns_.end());
  patterns_.erase(std::unique(patterns_.begin(), patterns_.end()), patterns_.end());
}

bool PatternSet::has(const Permutation& p) const {
  return std::binary_search(patterns_.begin(), patterns_.end(), p);
}

PatternSet PatternSet::united(const PatternSet& other) const {
  std::vector<Permutation> all = patterns_;
  all.insert(all.end(), other.patterns_.begin(), other.patterns_.end());
  return PatternSet(std::move(all));
}

bool avoids_all(const Permutation& pi, const PatternSet& set) {
  for (const auto& s : set.patterns())
    if (contains(pi, s)) return false;
  return true;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  std::vector<int> e(n);
  std::iota(e.begin(), e.end(), 1);
  do out.emplace_back(e);
  while (std::next_permutation(e.begin(), e.end()));
  return out;
}

std::vector<Permutation> avoidance_class(int n, const PatternSet& set) {
  std::vector<Permutation> out;
  for (auto& p : all_permutations(n))
    if (avoids_all(p, set)) out.push_back(std::move(p));
  return out;
}

int ell_factor(const Permutation& rho, int i) {
  if (i < 1 || i > rho.size()) throw std::out_of_range("ell_factor index");
  int l = 1;
  while (i - l >= 1 && rho(i - l) <= rho(i)) ++l;
  return l;
}

BigInt ell_weight(const Permutation& rho) {
  BigInt w = 1;
  for (int i = 1; i <= rho.size(); ++i) w *= ell_factor(rho, i);
  return w;
}

namespace {

std::vector<int> parse_int_list(std::string_view text, std::size_t offset) {
  std::vector<int> out;
  std::size_t i = 0;
  while (i < text.size()) {
    while (i < text.size() && text[i] == ' ') ++i;
    std::size_t start = i;
    long v = 0;
    while (i < text.size() && text[i] >= '0' && text[i] <= '9') {
      v = v * 10 + (text[i] - '0');
      if (v > 1'000'000) throw ParseError("number too large", offset + start + 1);
      ++i;
    }
    if (i == start) throw ParseError("expected a number", offset + i + 1);
    out.push_back(static_cast<int>(v));
    while (i < text.size() && text[i] == ' ') ++i;
    if (i < text.size()) {
      if (text[i] != ',') throw ParseError("expected ','", offset + i + 1);
      ++i;
      if (i == text.size()) throw ParseError("trailing ','", offset + i + 1);
    }
  }
  return out;
}

}  // namespace

Permutation parse_permutation(std::string_view text) {
  std::vector<int> e;
  if (text.find(',') != std::string_view::npos) {
    e = parse_int_list(text, 0);
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (text[i] < '1' || text[i] > '9') throw ParseError("expected a digit 1-9", i + 1);
      e.push_back(text[i] - '0');
    }
  }
  try {
    return Permutation(std::move(e));
  } catch (const std::invalid_argument&) {
    throw ParseError("not a permutation: " + std::string(text), 1);
  }
}

std::string format_permutation(const Permutation& p) {
  std::string s;
  const bool commas = p.size() >= 10;
  for (int i = 1; i <= p.size(); ++i) {
    if (commas && i > 1) s += ',';
    s += std::to_string(p(i));
  }
  return s;
}

PatternSet parse_pattern_set(std::string_view text) {
  std::vector<Permutation> ps;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = text.find(',', start);
    std::string_view item = text.substr(start, comma == std::string_view::npos ? text.npos : comma - start);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1), ++start;
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (item.empty()) throw ParseError("empty pattern", start + 1);
    try {
      ps.push_back(parse_permutation(item));
    } catch (const ParseError& e) {
      throw ParseError(e.what(), start + e.column());
    }
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return PatternSet(std::move(ps));
}

std::string format_pattern_set(const PatternSet& set) {
  std::string s;
  for (const auto& p : set.patterns()) {
    if (!s.empty()) s += ',';
    s += format_permutation(p);
  }
  return s;
}

std::vector<PatternSet> all_s3_subsets() {
  const auto s3 = all_permutations(3);
  std::vector<PatternSet> out;
  for (int mask = 1; mask < 64; ++mask) {
    std::vector<Permutation> ps;
    for (int b = 0; b < 6; ++b)
      if (mask >> b & 1) ps.push_back(s3[b]);
    out.emplace_back(std::move(ps));
  }
  return out;
}

}  // namespace parkpat
