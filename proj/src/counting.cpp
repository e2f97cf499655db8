#include "parkpat/counting.hpp"

#include "parkpat/catalan.hpp"
#include "parkpat/oracle.hpp"
#include "parkpat/series.hpp"

#include <functional>
#include <map>
#include <stdexcept>

namespace parkpat {

namespace {
// GMP rational arithmetic requires canonical operands.
Rational fraction(const BigInt& num, const BigInt& den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}
}  // namespace

std::string method_name(Method m) {
  switch (m) {
    case Method::Formula: return "formula";
    case Method::Recurrence: return "recurrence";
    case Method::WeightedSum: return "weighted_sum";
    case Method::BruteForce: return "brute_force";
  }
  return "unknown";
}

CountResult generic_weighted_pk(int n, const PatternSet& set) {
  BigInt total = 0;
  for (const auto& rho : avoidance_class(n, set)) total += ell_weight(rho);
  return {total, Method::WeightedSum};
}

namespace {

BigInt fact(int n) { return factorial(static_cast<unsigned>(n)); }

// c[N] = sum over compositions of N of the product of factorials of the parts,
// each composition signed by (-1)^(parts+1) when alternating is set.
std::vector<BigInt> factorial_compositions(int max, bool alternating) {
  std::vector<BigInt> c(max + 1, 0);
  c[0] = alternating ? -1 : 1;
  for (int N = 1; N <= max; ++N)
    for (int a = 1; a <= N; ++a) c[N] += (alternating ? -1 : 1) * fact(a) * c[N - a];
  return c;
}

BigInt pk132(int n) {
  std::vector<BigInt> p(n + 1, 0);
  p[0] = 1;
  for (int t = 1; t <= n; ++t)
    for (int k = 1; k <= t; ++k) p[t] += k * p[k - 1] * p[t - k];
  return p[n];
}

BigInt pk123(int n) {
  BigInt s = 0;
  for (int k = 1; k <= n; ++k) s += binomial(n + 1, k) * binomial(n + k - 1, 2 * k - 1);
  if (s % (n + 1) != 0) throw std::logic_error("pk(123) formula not integral");
  return s / (n + 1);
}

// (1/(n+1)) [x^n] (sum_k k! x^k)^(n+1), as a polynomial power with integer coefficients.
BigInt pk213(int n) {
  std::vector<BigInt> phi(n + 1), acc(n + 1, 0);
  for (int k = 0; k <= n; ++k) phi[k] = fact(k);
  acc[0] = 1;
  for (int r = 0; r < n + 1; ++r) {
    std::vector<BigInt> nxt(n + 1, 0);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; i + j <= n; ++j) nxt[i + j] += acc[i] * phi[j];
    acc = std::move(nxt);
  }
  if (acc[n] % (n + 1) != 0) throw std::logic_error("pk(213) formula not integral");
  return acc[n] / (n + 1);
}

BigInt table_total(const TriangularTable& t, int n, bool weighted_321) {
  BigInt s = 0;
  for (int k = 1; k <= n; ++k) s += (weighted_321 ? fact(k - 1) : BigInt(1)) * t[n][k];
  return s;
}

struct Entry {
  Method method;
  std::function<BigInt(int)> eval;
};

// Every subset of S_3 avoiding the 123/321 pair, keyed by canonical text.
const std::map<std::string, Entry>& formula_table() {
  static const std::map<std::string, Entry> table = [] {
    std::map<std::string, Entry> t;
    auto add = [&](std::initializer_list<const char*> keys, Method m, std::function<BigInt(int)> f) {
      for (const char* k : keys) t[format_pattern_set(parse_pattern_set(k))] = Entry{m, f};
    };
    const auto F = Method::Formula;
    const auto R = Method::Recurrence;

    add({"12"}, F, [](int) { return BigInt(1); });
    add({"21"}, F, [](int n) -> BigInt { return fact(n); });

    add({"123,132,213,231,312"}, F, [](int n) -> BigInt { return BigInt(n == 2 ? 3 : 1); });
    add({"132,213,231,312,321"}, F, [](int n) -> BigInt { return n == 2 ? BigInt(3) : fact(n); });

    add({"123,132,213,231", "123,132,213,312", "123,213,231,312"}, F,
        [](int n) -> BigInt { return BigInt(n == 1 ? 1 : 3); });
    add({"123,132,231,312"}, F, [](int n) -> BigInt { return BigInt(n == 1 ? 1 : n + 1); });
    add({"132,213,231,312"}, F, [](int n) -> BigInt { return n == 1 ? BigInt(1) : fact(n) + 1; });
    add({"132,213,231,321", "132,213,312,321", "213,231,312,321"}, F,
        [](int n) -> BigInt { return n == 1 ? BigInt(1) : fact(n) + fact(n - 1); });
    add({"132,231,312,321"}, F, [](int n) -> BigInt { return n == 1 ? BigInt(1) : 3 * fact(n) / 2; });

    add({"123,132,231", "123,132,312", "123,231,312"}, F, [](int n) -> BigInt { return binomial(n + 1, 2); });
    add({"123,213,231", "123,213,312"}, F, [](int n) -> BigInt { return BigInt(2 * n - 1); });
    add({"123,132,213"}, F, [](int n) -> BigInt { return (ipow(2, n + 1) + (n % 2 ? -1 : 1)) / 3; });
    add({"132,213,231", "132,213,312", "213,231,312"}, F, [](int n) -> BigInt {
      BigInt s = 0;
      for (int k = 1; k <= n; ++k) s += fact(k);
      return s;
    });
    add({"132,231,312"}, F, [](int n) -> BigInt {
      BigInt s = 0;
      for (int k = 1; k <= n; ++k) s += fact(n) / fact(k);
      return s;
    });
    add({"132,231,321", "132,312,321"}, F, [](int n) -> BigInt {
      BigInt s = 0;
      for (int k = 1; k <= n; ++k) s += fact(n) / k;
      return s;
    });
    add({"132,213,321", "213,231,321"}, F, [](int n) -> BigInt {
      BigInt s = 0;
      for (int k = 1; k <= n; ++k) s += fact(k) * fact(n - k);
      return s;
    });
    add({"213,312,321"}, F, [](int n) -> BigInt { return (2 * n - 1) * fact(n - 1); });
    add({"231,312,321"}, F, [](int n) -> BigInt {
      BigInt s = 0;
      for (int k = 0; k <= n; ++k) s += (k % 2 ? -1 : 1) * fact(n) / fact(k) * (n - k + 1);
      return s;
    });

    add({"123,231", "123,312"}, F, [](int n) -> BigInt { return BigInt(n) * (n - 1) * (n + 4) / 6 + 1; });
    add({"123,132"}, R, [](int n) -> BigInt {
      BigInt a = 1, b = 3;  // p_1, p_2
      if (n == 1) return a;
      for (int i = 3; i <= n; ++i) {
        BigInt c = 3 * b - a;
        a = b;
        b = c;
      }
      return b;
    });
    add({"123,213"}, R, [](int n) -> BigInt {
      BigInt a = 1, b = 3;
      if (n == 1) return a;
      for (int i = 3; i <= n; ++i) {
        BigInt c = 2 * b + a;
        a = b;
        b = c;
      }
      return b;
    });
    add({"132,231", "132,312", "231,312"}, F, [](int n) -> BigInt { return fact(n + 1) / 2; });
    add({"132,213", "213,231"}, F, [](int n) -> BigInt { return factorial_compositions(n, false)[n]; });
    add({"132,321"}, F, [](int n) -> BigInt {
      BigInt s = fact(n);
      for (int a = 1; a < n; ++a)
        for (int b = 1; a + b <= n; ++b) s += fact(a) * fact(b) * fact(n) / fact(a + b);
      return s;
    });
    add({"213,321"}, F, [](int n) -> BigInt {
      BigInt s = fact(n);
      for (int k = 1; k < n; ++k) s += k * fact(k) * fact(n - k);
      return s;
    });
    add({"213,312"}, F, [](int n) -> BigInt {
      BigInt s = 0;
      for (int k = 0; k < n; ++k) s += binomial(n - 1, k) * fact(k + 1);
      return s;
    });
    add({"231,321"}, F, [](int n) -> BigInt { return factorial_compositions(n + 1, true)[n + 1]; });
    add({"312,321"}, F, [](int n) -> BigInt {
      Rational s = 0;
      for (int k = 1; k <= n; ++k) s += fraction(binomial(n - 1, k - 1), fact(k));
      s *= fact(n);
      if (s.get_den() != 1) throw std::logic_error("pk(312,321) formula not integral");
      return BigInt(s.get_num());
    });

    add({"132", "231"}, R, pk132);
    add({"123"}, F, pk123);
    add({"213"}, F, pk213);
    add({"312"}, R, [](int n) -> BigInt { return table_total(pk312_table(n), n, false); });
    add({"321"}, R, [](int n) -> BigInt { return table_total(pk321_table(n), n, true); });
    return t;
  }();
  return table;
}

}  // namespace

bool pk_has_dedicated_formula(const PatternSet& set) {
  return formula_table().count(format_pattern_set(set)) > 0;
}

CountResult pk_count(const PatternSet& set, int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  auto it = formula_table().find(format_pattern_set(set));
  if (it == formula_table().end()) return generic_weighted_pk(n, set);
  if (n == 0) return {1, it->second.method};
  return {it->second.eval(n), it->second.method};
}

namespace {

TriangularTable triangular(int n, const std::function<BigInt(int, int)>& factor,
                           const std::function<BigInt(int, int, int, int)>& inner) {
  if (n < 1) throw std::invalid_argument("table needs n >= 1");
  TriangularTable p(n + 1, std::vector<BigInt>(n + 1, 0));
  for (int N = 1; N <= n; ++N) {
    p[N][N] = 1;
    for (int k = 1; k < N; ++k) {
      BigInt s = 0;
      for (int i = N - k; i <= N - 1; ++i)
        for (int j = k + 1 - N + i; j <= i; ++j) s += inner(N, k, i, j) * p[i][j];
      p[N][k] = factor(N, k) * s;
    }
  }
  return p;
}

}  // namespace

TriangularTable metasylvester_table(int n, int m) {
  return triangular(
      n, [m](int N, int k) { return BigInt(1 + m * (N - k)); }, [](int, int, int, int) { return BigInt(1); });
}

TriangularTable pk312_table(int n) { return metasylvester_table(n, 1); }

TriangularTable pk321_table(int n) {
  return triangular(
      n, [](int N, int k) { return BigInt(N - k + 1); },
      [](int N, int k, int i, int j) { return fact(N - i + j - k - 1); });
}

PathWeight parse_path_weight(std::string_view name) {
  if (name == "123" || name == "weight-123") return PathWeight::P123;
  if (name == "213" || name == "weight-213") return PathWeight::P213;
  if (name == "312" || name == "weight-312") return PathWeight::P312;
  if (name == "321" || name == "weight-321") return PathWeight::P321;
  throw std::invalid_argument("unknown path weight: " + std::string(name));
}

namespace {

BigInt suffix_product(const AscentWord& w) {
  BigInt r = 1;
  long suffix = 0;
  for (std::size_t i = w.size(); i-- > 1;) {
    suffix += w[i];
    r *= 1 + suffix;
  }
  return r;
}

}  // namespace

CountResult pk_sum_over_paths(int n, PathWeight weight) {
  if (n > 14) throw std::invalid_argument("path enumeration capped at n = 14");
  BigInt total = 0;
  for_each_ascent_word(n, 1, [&](const AscentWord& w) {
    BigInt t = 1;
    switch (weight) {
      case PathWeight::P123:
        for (int a : w) t *= a;
        break;
      case PathWeight::P213:
        for (int a : w) t *= fact(a);
        break;
      case PathWeight::P312:
        t = suffix_product(w);
        break;
      case PathWeight::P321:
        t = suffix_product(w);
        for (int a : w) t *= fact(a - 1);
        break;
    }
    total += t;
  });
  return {total, Method::WeightedSum};
}

BigInt odd_root_tree_count(int edges) {
  if (edges < 1) throw std::invalid_argument("need at least one edge");
  std::vector<BigInt> cat;
  for (int i = 0; i <= edges; ++i) cat.push_back(catalan_number(i));
  const PowerSeries c = PowerSeries::from_integers(cat, edges);
  BigInt total = 0;
  PowerSeries cd = PowerSeries::constant(1, edges);
  for (int d = 1; d <= edges; ++d) {
    cd = cd * c;
    if (d % 2) {
      const Rational q = cd[edges - d];
      total += q.get_num();
    }
  }
  return total;
}

CountResult pf312321_closed_form(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  Rational s = fraction(binomial(3 * n + 1, n), 2 * BigInt(n + 1));
  for (int k = 0; k <= n - 2; ++k)
    s -= fraction(binomial(3 * n - 2 - 3 * k, n - k - 1), ipow(2, k + 2) * (n - k));
  if (s.get_den() != 1) throw std::logic_error("pf(312,321) closed form not integral");
  return {s.get_num(), Method::Formula};
}

CountResult pf312321_path_sum(int n) {
  BigInt total = 0;
  for_each_ascent_word(n, 1, [&](const AscentWord& w) {
    BigInt t = 1;
    for (std::size_t i = 0; i + 1 < w.size(); ++i) t *= w[i] + 1;
    total += t;
  });
  return {total, Method::WeightedSum};
}

CountResult pf_count(const PatternSet& set, int n) {
  if (n < 0) throw std::invalid_argument("n must be nonnegative");
  const std::string key = format_pattern_set(set);
  if (key == "12") return {1, Method::Formula};
  if (key == "21") return {catalan_number(n), Method::Formula};
  if (n == 0) return {1, Method::Formula};
  if (key == "123,132") return {odd_root_tree_count(n + 1), Method::Formula};
  if (key == "123,213") return {catalan_number(n + 1) - catalan_number(n), Method::Formula};
  if (key == "312,321") return pf312321_closed_form(n);
  return {brute_pf(n, set), Method::BruteForce};
}

}  // namespace parkpat
