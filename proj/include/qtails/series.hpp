#pragma once

#include "qtails/checked_int.hpp"

#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace qtails {

// Formal power series in q truncated at a fixed order Q. Exponents 0..Q are
// authoritative and exact; everything above Q is dropped. Value type,
// immutable after construction. Operations on two series require equal
// orders; mixing orders throws.
class Series {
 public:
  explicit Series(int order);  // zero series
  static Series one(int order);
  static Series monomial(int order, int exponent, Int coeff = 1);
  static Series from_coeffs(int order, std::span<const std::pair<int, Int>> entries);
  static Series from_coeffs(int order, std::initializer_list<std::pair<int, Int>> entries);

  int order() const { return order_; }
  const Int& operator[](int n) const;
  const std::vector<Int>& coeffs() const { return c_; }
  bool is_zero() const;
  std::string str() const;  // short diagnostic form, low terms only

  friend bool operator==(const Series&, const Series&) = default;

 private:
  int order_;
  std::vector<Int> c_;
  friend struct SeriesAccess;
};

Series operator+(const Series& a, const Series& b);
Series operator-(const Series& a, const Series& b);
Series operator-(const Series& a);

// Truncated Cauchy product.
Series mul(const Series& a, const Series& b);
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

// Multiplicative inverse; requires constant term +1 or -1 so that all
// coefficients stay integral.
Series invert(const Series& a);

// a / (1 - q^k) in one pass: r[n] = a[n] + r[n-k].
Series geometric_divide(const Series& a, int k);

Series shift(const Series& a, int k);  // a * q^k
Series scale(const Series& a, Int c);

// q-Pochhammer (q^start; q)_count = prod_{k=0}^{count-1} (1 - q^{start+k}).
Series pochhammer(int start, int count, int order);
Series pochhammer_inf(int start, int order);

// (q; q)_inf via the sparse pentagonal-number expansion.
Series euler_inf(int order);

// sum_{i=1}^{upper} q^i / (1 - q^i); coefficient of q^n counts divisors of n
// that are <= upper.
Series lambert_partial(int upper, int order);

// First-order jet a + eps*a' with eps^2 = 0: carries an exact derivative
// through series arithmetic.
struct DualSeries {
  Series val;
  Series der;
  DualSeries(Series v, Series d);
  friend bool operator==(const DualSeries&, const DualSeries&) = default;
};

DualSeries d_const(const Series& s);
DualSeries d_variable(const Series& s);  // derivative 1
DualSeries operator+(const DualSeries& a, const DualSeries& b);
DualSeries operator-(const DualSeries& a, const DualSeries& b);
DualSeries d_mul(const DualSeries& a, const DualSeries& b);
inline DualSeries operator*(const DualSeries& a, const DualSeries& b) { return d_mul(a, b); }
DualSeries d_invert(const DualSeries& x);

}  // namespace qtails
