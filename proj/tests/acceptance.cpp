#include "tables.hpp"

#include "parkpat/bijections.hpp"
#include "parkpat/catalan.hpp"
#include "parkpat/counting.hpp"
#include "parkpat/generalized.hpp"
#include "parkpat/oracle.hpp"
#include "parkpat/series.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <set>

using namespace parkpat;

namespace {

using Clock = std::chrono::steady_clock;

struct Outcome {
  bool ok = true;
  std::string detail;
  void fail(const std::string& why) {
    if (ok) detail = why;
    ok = false;
  }
};

const std::map<std::string, ClassFamily> kFamilies{
    {"hyposylvester-multi", ClassFamily::HyposylvesterMulti}, {"metasylvester-multi", ClassFamily::MetasylvesterMulti},
    {"metasylvester-m", ClassFamily::MetasylvesterM},         {"hypoplactic-m", ClassFamily::HypoplacticM},
};

Outcome tables_reproduced() {
  Outcome o;
  const auto start = Clock::now();
  for (const auto& row : tables::read("pk_tables.txt"))
    for (int n = 1; n <= 8; ++n)
      if (pk_count(parse_pattern_set(row.key), n).value != BigInt(row.values[n - 1]))
        o.fail("pk(" + row.key + ") n=" + std::to_string(n));
  if (Clock::now() - start > std::chrono::seconds(10)) o.fail("took longer than 10 s");
  return o;
}

Outcome oracle_equivalence() {
  Outcome o;
  const auto subsets = all_s3_subsets();
  for (int n = 1; n <= 8; ++n) {
    const auto h = parking_permutation_histogram(n);
    for (const auto& p : subsets) {
      BigInt brute = 0;
      for (const auto& [rho, c] : h)
        if (avoids_all(rho, p)) brute += BigInt(std::to_string(c));
      if (brute != pk_count(p, n).value || brute != generic_weighted_pk(n, p).value)
        o.fail(format_pattern_set(p) + " n=" + std::to_string(n));
    }
  }
  return o;
}

Outcome pf_reproduced() {
  Outcome o;
  const PatternSet p = parse_pattern_set("312,321");
  const char* want[] = {"1", "3", "13", "63", "324", "1736", "9589", "54223"};
  for (int n = 1; n <= 8; ++n) {
    const BigInt w(want[n - 1]);
    if (pf312321_closed_form(n).value != w) o.fail("closed form n=" + std::to_string(n));
    if (pf312321_path_sum(n).value != w) o.fail("path sum n=" + std::to_string(n));
    if (pf_count(p, n).value != w) o.fail("pf_count n=" + std::to_string(n));
    if (n <= 7 && brute_pf(n, p) != w) o.fail("brute force n=" + std::to_string(n));
  }
  return o;
}

Outcome bijections_exhaustive() {
  Outcome o;
  const auto start = Clock::now();
  const PatternSet s132 = parse_pattern_set("123,132"), s213 = parse_pattern_set("123,213");
  for (int n = 0; n <= 9; ++n) {
    const std::string at = " n=" + std::to_string(n);
    const auto a132 = enumerate_block_avoiders(n, s132);
    const auto a213 = enumerate_block_avoiders(n, s213);
    std::set<std::string> img132, img213;
    for (const auto& f : a132) {
      const auto t = phi_123_132(f);
      img132.insert(format_tree(t));
      if (psi_123_132(t) != f) o.fail("psi(phi(f)) 123-132" + at);
    }
    for (const auto& f : a213) {
      const auto t = phi_123_213(f);
      img213.insert(format_tree(t));
      if (psi_123_213(t) != f) o.fail("psi(phi(f)) 123-213" + at);
    }
    std::size_t odd = 0, ge2 = 0;
    for_each_tree(n + 1, TreeConstraint::OddRoot, [&](const OrderedTree& t) {
      ++odd;
      if (phi_123_132(psi_123_132(t)) != t) o.fail("phi(psi(T)) 123-132" + at);
    });
    for_each_tree(n + 1, n == 0 ? TreeConstraint::All : TreeConstraint::RootAtLeast2, [&](const OrderedTree& t) {
      ++ge2;
      if (phi_123_213(psi_123_213(t)) != t) o.fail("phi(psi(T)) 123-213" + at);
    });
    if (img132.size() != odd || a132.size() != odd) o.fail("image size 123-132" + at);
    if (img213.size() != ge2 || a213.size() != ge2) o.fail("image size 123-213" + at);
    if (n >= 1 && BigInt(ge2) != catalan_number(n + 1) - catalan_number(n)) o.fail("C_{n+1}-C_n" + at);
  }
  if (format_tree(phi_123_132(parse_blocks(tables::slurp_line("phi132_n25.in")))) != tables::slurp_line("phi132_n25.out"))
    o.fail("size 25 golden");
  if (format_tree(phi_123_213(parse_blocks(tables::slurp_line("phi213_n20.in")))) != tables::slurp_line("phi213_n20.out"))
    o.fail("size 20 golden");
  if (Clock::now() - start > std::chrono::minutes(1)) o.fail("took longer than 1 min");
  return o;
}

Outcome class_tables() {
  Outcome o;
  for (const auto& row : tables::read("class_tables.txt")) {
    const auto space = row.key.find(' ');
    const auto fam = kFamilies.at(row.key.substr(0, space));
    const int m = std::stoi(row.key.substr(space + 1));
    const int top = fam == ClassFamily::MetasylvesterM && m >= 4 ? 6 : 8;
    for (int n = 1; n <= top; ++n)
      if (class_count(fam, n, m) != BigInt(row.values[n - 1])) o.fail(row.key + " n=" + std::to_string(n));
  }
  return o;
}

PowerSeries poly(const std::vector<long>& c, int order) {
  return PowerSeries::from_integers(std::vector<BigInt>(c.begin(), c.end()), order);
}

Outcome series_identities() {
  Outcome o;
  {
    const int order = 15;
    std::vector<BigInt> p(order + 1);
    for (int n = 0; n <= order; ++n) p[n] = n == 0 ? BigInt(1) : pk_count(parse_pattern_set("132"), n).value;
    const auto P = PowerSeries::from_integers(p, order);
    const auto x = PowerSeries::x(order);
    const auto lhs = x * x * P * derivative(P) + x * P * P - P + PowerSeries::constant(1, order);
    if (!check_identity(lhs, PowerSeries(order), order - 1)) o.fail("Chini equation");
  }
  for (int m = 1; m <= 3; ++m) {
    const int order = 12;
    const auto x = PowerSeries::x(order);
    const auto one = PowerSeries::constant(1, order);
    PowerSeries rhs(order), den = one;
    for (int n = 1; n <= order; ++n) {
      den = den * (one + Rational(m * n) * x);
      rhs = rhs + Rational(metasylvester_multipark(n, m)) * power(x * (one - x), n) * reciprocal(den);
    }
    if (!check_identity(x * reciprocal(one - x), rhs, order)) o.fail("metasylvester identity m=" + std::to_string(m));
  }
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<long> phi(5), psi(5);
    for (auto& c : phi) c = coef(rng);
    for (auto& c : psi) c = coef(rng);
    if (phi[0] == 0) phi[0] = 1;
    psi[0] = 0;
    const auto Phi = poly(phi, 12), Psi = poly(psi, 12);
    const auto composed = compose(Psi, solve_fixed_point(Phi, 12));
    for (int n = 1; n <= 12; ++n)
      if (lagrange_coefficient(Phi, Psi, n) != composed[n]) o.fail("Lagrange inversion trial " + std::to_string(trial));
  }
  return o;
}

Outcome consistency_triangle() {
  Outcome o;
  for (int n = 1; n <= 8; ++n) {
    const BigInt p = pk_count(parse_pattern_set("312"), n).value;
    if (metasylvester_multipark(n, 1) != p || metasylvester_mpark(n, 1) != p) o.fail("n=" + std::to_string(n));
  }
  return o;
}

Outcome property_sweeps() {
  Outcome o;
  // permutation
  for (int n = 1; n <= 7; ++n) {
    const auto h = parking_permutation_histogram(n);
    BigInt total = 0;
    for (const auto& rho : all_permutations(n)) {
      const auto it = h.find(rho);
      const BigInt w = ell_weight(rho);
      if (w != BigInt(std::to_string(it == h.end() ? 0 : it->second))) o.fail("ell weight " + format_permutation(rho));
      total += w;
    }
    if (total != ipow(n + 1, n - 1)) o.fail("ell weight total n=" + std::to_string(n));
  }
  const auto subsets = all_s3_subsets();
  for (int n = 0; n <= 6; ++n)
    for (const auto& a : subsets)
      for (const auto& b : subsets) {
        std::vector<Permutation> inter, ca = avoidance_class(n, a), cb = avoidance_class(n, b);
        std::set_intersection(ca.begin(), ca.end(), cb.begin(), cb.end(), std::back_inserter(inter));
        if (avoidance_class(n, a.united(b)) != inter) o.fail("avoidance union");
      }
  // parking
  for (int n = 1; n <= 6; ++n) {
    Preferences f(n, 1);
    while (true) {
      if (is_parking(f) != simulate(f).has_value()) o.fail("condition A vs simulation");
      int i = n - 1;
      while (i >= 0 && f[i] == n) f[i--] = 1;
      if (i < 0) break;
      ++f[i];
    }
    for (const auto& pf : enumerate_parking_functions(n))
      if (from_blocks(to_blocks(pf)) != pf) o.fail("block round trip");
  }
  for (int n = 1; n <= 7; ++n)
    if (BigInt(enumerate_parking_functions(n).size()) != ipow(n + 1, n - 1)) o.fail("parking function count");
  // catalan
  for (int n = 1; n <= 8; ++n)
    for (const auto& c : enumerate_paths(n)) {
      if (compose_canonical(canonical_decomposition(c)) != c) o.fail("canonical decomposition");
      const auto w = ascent_word(c);
      if (w.size() >= 2) {
        const auto d = delete_first_peak(c);
        if (insert_first_peak(d.reduced, d.first_down_run, w[0]) != c) o.fail("first peak");
      }
      if (n <= 7 && increasing_pf_to_path(path_to_increasing_pf(c)) != c) o.fail("increasing pf");
    }
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 6; ++n) {
      BigInt s = 0;
      for (int k = 1; k <= n; ++k) s += m_narayana(n, k, m);
      if (s != BigInt(enumerate_paths(n, m).size())) o.fail("Narayana sum");
    }
  // counting
  for (int n = 1; n <= 10; ++n) {
    if (pk_sum_over_paths(n, PathWeight::P312).value != pk_count(parse_pattern_set("312"), n).value ||
        pk_sum_over_paths(n, PathWeight::P321).value != pk_count(parse_pattern_set("321"), n).value)
      o.fail("path sums vs tables");
  }
  for (int n = 1; n <= 20; ++n) pf312321_closed_form(n);
  // bijections
  for (int n = 1; n <= 10; ++n)
    if (BigInt(enumerate_block_avoiders(n, parse_pattern_set("123,132")).size()) != odd_root_tree_count(n + 1))
      o.fail("odd root census");
  for (int n = 1; n <= 9; ++n)
    for (const auto& f : enumerate_block_avoiders(n, parse_pattern_set("123,132"))) {
      auto labels = phi_123_132_labeled(f).labels;
      std::sort(labels.begin(), labels.end());
      for (int i = 0; i <= n; ++i)
        if (labels[i + 1] != i) o.fail("labels");
    }
  // generalized
  for (int m = 1; m <= 3; ++m)
    for (int n = 1; n <= 6; ++n) {
      BigInt peaks = 0;
      for (const auto& c : enumerate_paths(n, m)) peaks += ipow(2, peak_count(c) - 1);
      if (peaks != hypoplactic_mpark(n, m)) o.fail("hypoplactic peaks");
      if (hyposylvester_mpark(n, m) != class_path_sum(ClassFamily::HyposylvesterM, n, m)) o.fail("hyposylvester m");
    }
  // oracle
  for (const auto& r : verify_all(7, {Family::PfSupported, Family::Generalized}))
    if (!r.agree) o.fail(r.quantity + " n=" + std::to_string(r.n));
  for (int n = 1; n <= 7; ++n)
    if (parking_permutation_histogram(n) != parking_permutation_histogram(n, true)) o.fail("iteration order");
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"pk tables for every listed pattern collection, n = 1..8", tables_reproduced},
      {"brute force = dispatch = weighted sum for all S3 subsets, n <= 8", oracle_equivalence},
      {"pf(312,321) by closed form, path sum and brute force", pf_reproduced},
      {"bijection roundtrips and image sizes n <= 9, size 25 and 20 goldens", bijections_exhaustive},
      {"generalized class tables m = 1..5", class_tables},
      {"series identities and Lagrange inversion", series_identities},
      {"metasylvester m = 1 equals 312 avoidance, n <= 8", consistency_triangle},
      {"module property sweeps", property_sweeps},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = Clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o.fail(std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
    std::cout << (o.ok ? "PASS" : "FAIL") << ' ' << i + 1 << ": " << criteria[i].first << " (" << ms << " ms)";
    if (!o.ok) std::cout << " [" << o.detail << ']';
    std::cout << '\n';
    failures += !o.ok;
  }
  return failures ? 1 : 0;
}
