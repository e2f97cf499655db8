#include "parkpat/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace parkpat {

namespace {
const Rational kZero = 0;
}

PowerSeries::PowerSeries(int order) : c_(order + 1), order_(order) {
  if (order < 0) throw std::invalid_argument("negative order");
}

PowerSeries::PowerSeries(std::vector<Rational> coeffs, int order) : c_(std::move(coeffs)), order_(order) {
  if (order < 0) throw std::invalid_argument("negative order");
  c_.resize(order + 1);
  for (auto& q : c_) q.canonicalize();
}

PowerSeries PowerSeries::constant(const Rational& c, int order) {
  PowerSeries s(order);
  s.c_[0] = c;
  return s;
}

PowerSeries PowerSeries::x(int order) {
  PowerSeries s(order);
  if (order >= 1) s.c_[1] = 1;
  return s;
}

PowerSeries PowerSeries::from_integers(const std::vector<BigInt>& coeffs, int order) {
  std::vector<Rational> q;
  for (const auto& v : coeffs) q.emplace_back(v);
  return PowerSeries(std::move(q), order);
}

const Rational& PowerSeries::operator[](int i) const {
  if (i < 0 || i > order_) throw std::out_of_range("coefficient beyond truncation order");
  return c_[i];
}

PowerSeries PowerSeries::truncated(int order) const {
  if (order > order_) throw std::invalid_argument("cannot extend truncation order");
  return PowerSeries(std::vector<Rational>(c_.begin(), c_.begin() + order + 1), order);
}

PowerSeries PowerSeries::operator-() const {
  PowerSeries r = *this;
  for (auto& q : r.c_) q = -q;
  return r;
}

PowerSeries operator+(const PowerSeries& a, const PowerSeries& b) {
  const int o = std::min(a.order_, b.order_);
  PowerSeries r(o);
  for (int i = 0; i <= o; ++i) r.c_[i] = a.c_[i] + b.c_[i];
  return r;
}

PowerSeries operator-(const PowerSeries& a, const PowerSeries& b) { return a + (-b); }

PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) {
  const int o = std::min(a.order_, b.order_);
  PowerSeries r(o);
  for (int i = 0; i <= o; ++i) {
    if (a.c_[i] == 0) continue;
    for (int j = 0; i + j <= o; ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return r;
}

PowerSeries operator*(const Rational& s, const PowerSeries& a) {
  PowerSeries r = a;
  for (auto& q : r.c_) q *= s;
  return r;
}

PowerSeries derivative(const PowerSeries& a) {
  const int o = std::max(a.order() - 1, 0);
  PowerSeries r(o);
  for (int i = 1; i <= a.order(); ++i) r.at(i - 1) = a[i] * i;
  return r;
}

PowerSeries reciprocal(const PowerSeries& a) {
  if (a[0] == 0) throw std::domain_error("reciprocal of a series with zero constant term");
  const int o = a.order();
  PowerSeries r(o);
  const Rational inv = 1 / a[0];
  r.at(0) = inv;
  for (int i = 1; i <= o; ++i) {
    Rational acc = 0;
    for (int j = 1; j <= i; ++j) acc += a[j] * r[i - j];
    r.at(i) = -acc * inv;
  }
  return r;
}

PowerSeries power(const PowerSeries& a, unsigned e) {
  PowerSeries r = PowerSeries::constant(1, a.order());
  PowerSeries base = a;
  while (e) {
    if (e & 1) r = r * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return r;
}

PowerSeries compose(const PowerSeries& f, const PowerSeries& g) {
  if (g[0] != 0) throw std::domain_error("inner series must have zero constant term");
  const int o = std::min(f.order(), g.order());
  PowerSeries r(o);
  for (int i = o; i >= 0; --i) {
    r = r * g.truncated(o);
    r.at(0) += f[i];
  }
  return r;
}

PowerSeries exp_series(const PowerSeries& g) {
  if (g[0] != 0) throw std::domain_error("exp_series needs zero constant term");
  const int o = g.order();
  PowerSeries r = PowerSeries::constant(1, o);
  PowerSeries term = PowerSeries::constant(1, o);
  for (int k = 1; k <= o; ++k) {
    term = Rational(1, k) * (term * g);
    r = r + term;
  }
  return r;
}

PowerSeries solve_fixed_point(const PowerSeries& phi, int order) {
  if (phi[0] == 0) throw std::domain_error("phi(0) must be nonzero");
  if (phi.order() < order - 1) throw std::invalid_argument("phi known to too low an order");
  const PowerSeries x = PowerSeries::x(order);
  const PowerSeries f = phi.order() >= order ? phi.truncated(order) : PowerSeries(phi.coeffs(), order);
  PowerSeries p(order);
  // Each pass fixes at least one more coefficient.
  for (int it = 0; it < order; ++it) p = x * compose(f, p);
  return p;
}

Rational lagrange_coefficient(const PowerSeries& phi, const PowerSeries& psi, int n) {
  if (n < 1) throw std::invalid_argument("lagrange_coefficient needs n >= 1");
  if (phi[0] == 0) throw std::domain_error("phi(0) must be nonzero");
  const int o = n - 1;
  if (phi.order() < o || psi.order() < n) throw std::invalid_argument("inputs known to too low an order");
  const PowerSeries prod = derivative(psi.truncated(n)) * power(phi.truncated(o), static_cast<unsigned>(n));
  return prod[o] / n;
}

bool check_identity(const PowerSeries& lhs, const PowerSeries& rhs, int order) {
  if (lhs.order() < order || rhs.order() < order) throw std::invalid_argument("identity checked beyond known order");
  for (int i = 0; i <= order; ++i)
    if (lhs[i] != rhs[i]) return false;
  return true;
}

}  // namespace parkpat
