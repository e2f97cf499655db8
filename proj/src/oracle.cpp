#include "parkpat/oracle.hpp"

#include "parkpat/bijections.hpp"
#include "parkpat/counting.hpp"
#include "parkpat/errors.hpp"
#include "parkpat/generalized.hpp"

#include <algorithm>
#include <thread>
#include <unordered_map>

namespace parkpat {

namespace {

void require_cap(int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  if (n > kOracleMaxN) {
    std::uint64_t need = 1;
    for (int i = 0; i < n; ++i) need *= static_cast<std::uint64_t>(n);
    throw BudgetExceeded("oracle enumeration of " + std::to_string(n) + "^" + std::to_string(n) +
                             " preference sequences exceeds the hard cap n <= " + std::to_string(kOracleMaxN),
                         need, 16'777'216);
  }
}

std::uint64_t pack(const std::vector<int>& e) {
  std::uint64_t key = 0;
  for (int v : e) key = key << 4 | static_cast<std::uint64_t>(v);
  return key;
}

std::vector<int> unpack(std::uint64_t key, int n) {
  std::vector<int> e(n);
  for (int i = n - 1; i >= 0; --i, key >>= 4) e[i] = static_cast<int>(key & 15);
  return e;
}

enum class Stat { Rho, Pi };

// Visits every sequence in [n]^n with the given first value; the odometer may run
// backwards so that order independence can be spot-checked.
std::unordered_map<std::uint64_t, std::uint64_t> shard(int n, int first, Stat stat, bool reverse) {
  std::unordered_map<std::uint64_t, std::uint64_t> counts;
  std::vector<int> f(n, reverse ? n : 1);
  f[0] = first;
  std::vector<int> occupant(n + 2), perm(n);
  std::vector<std::vector<int>> blocks(n + 1);
  while (true) {
    std::fill(occupant.begin(), occupant.end(), 0);
    bool ok = true;
    for (int car = 1; car <= n && ok; ++car) {
      int s = f[car - 1];
      while (s <= n && occupant[s]) ++s;
      if (s > n) ok = false;
      else occupant[s] = car;
    }
    if (ok) {
      if (stat == Stat::Rho) {
        for (int s = 1; s <= n; ++s) perm[s - 1] = occupant[s];
      } else {
        for (auto& b : blocks) b.clear();
        for (int car = 1; car <= n; ++car) blocks[f[car - 1]].push_back(car);
        int i = 0;
        for (int j = 1; j <= n; ++j)
          for (int car : blocks[j]) perm[i++] = car;
      }
      ++counts[pack(perm)];
    }
    int pos = n - 1;
    if (!reverse) {
      while (pos >= 1 && f[pos] == n) f[pos--] = 1;
      if (pos < 1) break;
      ++f[pos];
    } else {
      while (pos >= 1 && f[pos] == 1) f[pos--] = n;
      if (pos < 1) break;
      --f[pos];
    }
  }
  return counts;
}

std::map<Permutation, std::uint64_t> histogram(int n, Stat stat, bool reverse) {
  require_cap(n);
  std::map<Permutation, std::uint64_t> out;
  if (n == 0) {
    out[Permutation()] = 1;
    return out;
  }
  std::vector<std::unordered_map<std::uint64_t, std::uint64_t>> parts(n);
  std::vector<std::thread> workers;
  for (int first = 1; first <= n; ++first)
    workers.emplace_back([&, first] { parts[first - 1] = shard(n, first, stat, reverse); });
  for (auto& t : workers) t.join();
  for (int i = 0; i < n; ++i) {
    const auto& part = parts[reverse ? n - 1 - i : i];
    for (const auto& [key, c] : part) out[Permutation(unpack(key, n))] += c;
  }
  return out;
}

BigInt count_avoiding(const std::map<Permutation, std::uint64_t>& h, const PatternSet& set) {
  BigInt total = 0;
  for (const auto& [p, c] : h)
    if (avoids_all(p, set)) total += BigInt(std::to_string(c));
  return total;
}

}  // namespace

std::map<Permutation, std::uint64_t> parking_permutation_histogram(int n, bool reverse_order) {
  return histogram(n, Stat::Rho, reverse_order);
}

std::map<Permutation, std::uint64_t> block_permutation_histogram(int n) { return histogram(n, Stat::Pi, false); }

BigInt brute_pk(int n, const PatternSet& set) { return count_avoiding(parking_permutation_histogram(n), set); }

BigInt brute_pf(int n, const PatternSet& set) { return count_avoiding(block_permutation_histogram(n), set); }

namespace {

OracleReport report(std::string q, int n, std::optional<int> m, BigInt oracle, BigInt formula) {
  const bool agree = oracle == formula;
  return {std::move(q), n, m, std::move(oracle), std::move(formula), agree};
}

// Nondecreasing sequences of the given length with f(i) <= bound(i).
void increasing_sequences(int len, int hi, const std::function<int(int)>& bound,
                          const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> f;
  std::function<void(int)> rec = [&](int lo) {
    if (static_cast<int>(f.size()) == len) {
      fn(f);
      return;
    }
    const int cap = std::min(hi, bound(static_cast<int>(f.size()) + 1));
    for (int v = lo; v <= cap; ++v) {
      f.push_back(v);
      rec(v);
      f.pop_back();
    }
  };
  rec(1);
}

void verify_generalized(int n_max, std::vector<OracleReport>& out) {
  const int top = std::min(n_max, 5);
  for (int m = 1; m <= 2; ++m)
    for (int n = 1; n <= top; ++n) {
      BigInt hypo_multi = 0, meta_multi = 0;
      increasing_sequences(m * n, n, [](int) { return 1 << 30; }, [&](const std::vector<int>& f) {
        if (!is_m_multiparking(f, m, n)) return;
        const auto beta = evaluation(f, n).packed;
        hypo_multi += hyposylvester_factor(beta);
        meta_multi += metasylvester_factor(beta);
      });
      BigInt hypo_m = 0, meta_m = 0, plac_m = 0;
      const int codomain = 1 + m * (n - 1);
      increasing_sequences(n, codomain, [m](int i) { return 1 + m * (i - 1); }, [&](const std::vector<int>& f) {
        const auto beta = evaluation(f, codomain).packed;
        hypo_m += hyposylvester_factor(beta);
        meta_m += metasylvester_factor(beta);
        plac_m += hypoplactic_factor(beta);
      });
      out.push_back(report("hyposylvester-multi", n, m, hypo_multi, hyposylvester_multipark(n, m)));
      out.push_back(report("metasylvester-multi", n, m, meta_multi, metasylvester_multipark(n, m)));
      out.push_back(report("hyposylvester-m", n, m, hypo_m, hyposylvester_mpark(n, m)));
      out.push_back(report("metasylvester-m", n, m, meta_m, metasylvester_mpark(n, m)));
      out.push_back(report("hypoplactic-m", n, m, plac_m, hypoplactic_mpark(n, m)));
    }
}

void verify_bijections(int n_max, std::vector<OracleReport>& out) {
  const int top = std::min(n_max, 9);
  const PatternSet s132 = parse_pattern_set("123,132"), s213 = parse_pattern_set("123,213");
  for (int n = 0; n <= top; ++n) {
    const auto a132 = enumerate_block_avoiders(n, s132);
    const auto a213 = enumerate_block_avoiders(n, s213);
    const int size132 = static_cast<int>(a132.size()), size213 = static_cast<int>(a213.size());
    int fwd132 = 0, fwd213 = 0, bwd132 = 0, bwd213 = 0, odd = 0, ge2 = 0;
    for (const auto& f : a132) fwd132 += psi_123_132(phi_123_132(f)) == f;
    for (const auto& f : a213) fwd213 += psi_123_213(phi_123_213(f)) == f;
    for_each_tree(n + 1, TreeConstraint::OddRoot, [&](const OrderedTree& t) {
      ++odd;
      bwd132 += phi_123_132(psi_123_132(t)) == t;
    });
    for_each_tree(n + 1, n == 0 ? TreeConstraint::All : TreeConstraint::RootAtLeast2, [&](const OrderedTree& t) {
      ++ge2;
      bwd213 += phi_123_213(psi_123_213(t)) == t;
    });
    out.push_back(report("|Pf(123,132)| vs odd-root trees", n, {}, size132, odd));
    out.push_back(report("|Pf(123,213)| vs root-degree>=2 trees", n, {}, size213, ge2));
    out.push_back(report("psi(phi(f)) = f on Pf(123,132)", n, {}, size132, fwd132));
    out.push_back(report("phi(psi(T)) = T on odd-root trees", n, {}, odd, bwd132));
    out.push_back(report("psi(phi(f)) = f on Pf(123,213)", n, {}, size213, fwd213));
    out.push_back(report("phi(psi(T)) = T on root-degree>=2 trees", n, {}, ge2, bwd213));
  }
}

}  // namespace

std::vector<OracleReport> verify_all(int n_max, const std::vector<Family>& families) {
  std::vector<OracleReport> out;
  const auto has = [&](Family f) { return std::find(families.begin(), families.end(), f) != families.end(); };
  const int top = std::min(n_max, kOracleMaxN);
  if (has(Family::PkAllS3Subsets)) {
    const auto subsets = all_s3_subsets();
    for (int n = 1; n <= top; ++n) {
      const auto h = parking_permutation_histogram(n);
      for (const auto& p : subsets) {
        const BigInt oracle = count_avoiding(h, p);
        const std::string name = format_pattern_set(p);
        out.push_back(report("pk(" + name + ")", n, {}, oracle, pk_count(p, n).value));
        out.push_back(report("weighted pk(" + name + ")", n, {}, oracle, generic_weighted_pk(n, p).value));
      }
    }
  }
  if (has(Family::PfSupported)) {
    for (const char* s : {"12", "21", "123,132", "123,213", "312,321"}) {
      const PatternSet p = parse_pattern_set(s);
      for (int n = 1; n <= top; ++n)
        out.push_back(report(std::string("pf(") + s + ")", n, {}, brute_pf(n, p), pf_count(p, n).value));
    }
  }
  if (has(Family::Generalized)) verify_generalized(n_max, out);
  if (has(Family::Bijections)) verify_bijections(n_max, out);
  return out;
}

}  // namespace parkpat
