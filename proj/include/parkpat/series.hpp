#pragma once

#include "parkpat/bigint.hpp"

#include <vector>

namespace parkpat {

// Truncated power series: coefficients of x^0..x^order are exact, the rest unknown.
class PowerSeries {
 public:
  PowerSeries() = default;
  explicit PowerSeries(int order);
  PowerSeries(std::vector<Rational> coeffs, int order);

  static PowerSeries constant(const Rational& c, int order);
  static PowerSeries x(int order);
  static PowerSeries from_integers(const std::vector<BigInt>& coeffs, int order);

  int order() const { return order_; }
  // Zero beyond the stored prefix, up to the truncation order.
  const Rational& operator[](int i) const;
  Rational& at(int i) { return c_.at(i); }
  const std::vector<Rational>& coeffs() const { return c_; }
  PowerSeries truncated(int order) const;

  PowerSeries operator-() const;
  friend PowerSeries operator+(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator-(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);
  friend PowerSeries operator*(const Rational& s, const PowerSeries& a);

 private:
  std::vector<Rational> c_;
  int order_ = 0;
};

PowerSeries derivative(const PowerSeries& a);
PowerSeries reciprocal(const PowerSeries& a);
PowerSeries power(const PowerSeries& a, unsigned e);
// f(g(x)); g must have zero constant term.
PowerSeries compose(const PowerSeries& f, const PowerSeries& g);
// Sum of g^k/k! for k <= order; g must have zero constant term.
PowerSeries exp_series(const PowerSeries& g);

// P = x * phi(P), P(0) = 0, by iteration.
PowerSeries solve_fixed_point(const PowerSeries& phi, int order);
// (1/n) [x^{n-1}] psi'(x) phi(x)^n
Rational lagrange_coefficient(const PowerSeries& phi, const PowerSeries& psi, int n);

bool check_identity(const PowerSeries& lhs, const PowerSeries& rhs, int order);

}  // namespace parkpat
