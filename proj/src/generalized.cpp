#include "parkpat/generalized.hpp"

#include "parkpat/counting.hpp"
#include "parkpat/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace parkpat {

Evaluation evaluation(const std::vector<int>& f, int codomain) {
  Evaluation e;
  e.counts.assign(codomain, 0);
  for (int v : f) {
    if (v < 1 || v > codomain) throw std::invalid_argument("value outside codomain");
    ++e.counts[v - 1];
  }
  for (int c : e.counts)
    if (c) e.packed.push_back(c);
  return e;
}

bool is_m_multiparking(const std::vector<int>& f, int m, int n) {
  if (static_cast<int>(f.size()) != m * n) return false;
  for (int v : f)
    if (v < 1 || v > n) return false;
  const auto e = evaluation(f, n);
  int acc = 0;
  for (int i = 1; i <= n; ++i) {
    if (e.counts[i - 1] % m) return false;
    acc += e.counts[i - 1] / m;
    if (acc < i) return false;
  }
  return true;
}

bool is_m_parking(const std::vector<int>& f, int m, int n) {
  if (static_cast<int>(f.size()) != n) return false;
  std::vector<int> s = f;
  std::sort(s.begin(), s.end());
  for (int i = 1; i <= n; ++i)
    if (s[i - 1] < 1 || s[i - 1] > 1 + m * (i - 1)) return false;
  return true;
}

namespace {

void check_nm(int n, int m) {
  if (n < 1 || m < 1) throw std::invalid_argument("need n >= 1 and m >= 1");
}

BigInt exact_div(const BigInt& num, const BigInt& den, const char* what) {
  if (num % den != 0) throw std::logic_error(std::string(what) + ": closed form not integral");
  return num / den;
}

}  // namespace

BigInt hyposylvester_multipark(int n, int m) {
  check_nm(n, m);
  BigInt s = 0;
  for (int k = 0; k < n; ++k) s += binomial(n, k) * binomial(3 * n - k, 2 * n + 1) * ipow(m - 1, k);
  return exact_div(s, n, "hyposylvester multiparking");
}

BigInt metasylvester_multipark(int n, int m) {
  check_nm(n, m);
  const auto t = metasylvester_table(n, m);
  BigInt s = 0;
  for (int k = 1; k <= n; ++k) s += t[n][k];
  return s;
}

BigInt hypoplactic_mpark(int n, int m) {
  check_nm(n, m);
  BigInt s = 0;
  for (int k = 1; k <= n; ++k) s += binomial(static_cast<long>(m) * n, k - 1) * binomial(n, k) * ipow(2, k - 1);
  return exact_div(s, n, "hypoplactic");
}

BigInt hyposylvester_mpark(int n, int m) {
  check_nm(n, m);
  return exact_div(binomial(static_cast<long>(2 * m + 1) * n, n), BigInt(2 * m * n + 1), "hyposylvester m-parking");
}

std::uint64_t path_cap_from_env() {
  const char* v = std::getenv("PARKPAT_PATH_CAP");
  if (!v || !*v) return kDefaultPathCap;
  char* end = nullptr;
  const unsigned long long cap = std::strtoull(v, &end, 10);
  if (*end) throw std::invalid_argument("PARKPAT_PATH_CAP must be a decimal integer");
  return cap;
}

namespace {

// Depth-first over m-Catalan paths tracking the running product. The factor for
// run i >= 2 is 1 + (ups from run i on) = 1 + n - (ups before run i).
template <class Int>
void meta_rec(int n, int m, int ups, int downs, bool in_run, const Int& prod, Int& total) {
  if (ups == n && downs == m * n) {
    total += prod;
    return;
  }
  if (ups < n) {
    if (in_run || ups == 0) meta_rec(n, m, ups + 1, downs, true, prod, total);
    else meta_rec(n, m, ups + 1, downs, true, Int(prod * (1 + n - ups)), total);
  }
  if (downs < m * ups) meta_rec(n, m, ups, downs + 1, false, prod, total);
}

BigInt from_u128(unsigned __int128 v) {
  BigInt hi = static_cast<unsigned long>(v >> 64);
  BigInt lo = static_cast<unsigned long>(static_cast<std::uint64_t>(v));
  return (hi << 64) + lo;
}

}  // namespace

BigInt metasylvester_mpark(int n, int m, std::uint64_t cap) {
  check_nm(n, m);
  const BigInt count = fuss_catalan(n, m);
  if (count > BigInt(std::to_string(cap))) {
    const std::uint64_t need = count.fits_ulong_p() ? count.get_ui() : UINT64_MAX;
    throw BudgetExceeded("metasylvester m-parking needs " + count.get_str() + " paths, cap is " +
                             std::to_string(cap) + " (raise PARKPAT_PATH_CAP)",
                         need, cap);
  }
  // Products stay below (n+1)^n, so 128-bit accumulation is exact for n <= 16
  // and any cap below 10^18.
  if (n <= 16 && cap < 1'000'000'000'000'000'000ULL) {
    unsigned __int128 total = 0;
    meta_rec<unsigned __int128>(n, m, 0, 0, false, 1, total);
    return from_u128(total);
  }
  BigInt total = 0;
  meta_rec<BigInt>(n, m, 0, 0, false, BigInt(1), total);
  return total;
}

BigInt hyposylvester_factor(const std::vector<int>& beta) {
  BigInt r = 1;
  for (std::size_t i = 1; i < beta.size(); ++i) r *= 1 + beta[i];
  return r;
}

BigInt metasylvester_factor(const std::vector<int>& beta) {
  BigInt r = 1;
  long suffix = 0;
  for (std::size_t i = beta.size(); i-- > 1;) {
    suffix += beta[i];
    r *= 1 + suffix;
  }
  return r;
}

BigInt hypoplactic_factor(const std::vector<int>& beta) {
  return beta.empty() ? BigInt(1) : ipow(2, static_cast<unsigned>(beta.size() - 1));
}

BigInt class_path_sum(ClassFamily family, int n, int m) {
  check_nm(n, m);
  BigInt total = 0;
  const bool multi = family == ClassFamily::HyposylvesterMulti || family == ClassFamily::MetasylvesterMulti;
  // m-multiparking classes run over ordinary Catalan paths with the word scaled by m.
  for_each_ascent_word(n, multi ? 1 : m, [&](const AscentWord& w) {
    AscentWord beta = w;
    if (multi)
      for (auto& b : beta) b *= m;
    switch (family) {
      case ClassFamily::HyposylvesterMulti:
      case ClassFamily::HyposylvesterM: total += hyposylvester_factor(beta); break;
      case ClassFamily::MetasylvesterMulti:
      case ClassFamily::MetasylvesterM: total += metasylvester_factor(beta); break;
      case ClassFamily::HypoplacticM: total += hypoplactic_factor(beta); break;
    }
  });
  return total;
}

BigInt class_count(ClassFamily family, int n, int m, std::uint64_t cap) {
  switch (family) {
    case ClassFamily::HyposylvesterMulti: return hyposylvester_multipark(n, m);
    case ClassFamily::MetasylvesterMulti: return metasylvester_multipark(n, m);
    case ClassFamily::MetasylvesterM: return metasylvester_mpark(n, m, cap);
    case ClassFamily::HypoplacticM: return hypoplactic_mpark(n, m);
    case ClassFamily::HyposylvesterM: return hyposylvester_mpark(n, m);
  }
  throw std::invalid_argument("unknown family");
}

}  // namespace parkpat
