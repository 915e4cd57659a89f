#include "qtails/series.hpp"

#include <sstream>
#include <stdexcept>

namespace qtails {

struct SeriesAccess {
  static Int& at(Series& s, int n) { return s.c_[static_cast<size_t>(n)]; }
};

namespace {

void require_order(int order) {
  if (order < 0) throw std::invalid_argument("Series: order must be >= 0");
}

void require_same_order(const Series& a, const Series& b, const char* op) {
  if (a.order() != b.order())
    throw std::invalid_argument(std::string(op) + ": operands have different orders");
}

}  // namespace

Series::Series(int order) : order_(order), c_(static_cast<size_t>(order) + 1) {
  require_order(order);
}

Series Series::one(int order) { return monomial(order, 0); }

Series Series::monomial(int order, int exponent, Int coeff) {
  require_order(order);
  if (exponent < 0 || exponent > order)
    throw std::invalid_argument("Series::monomial: exponent out of range");
  Series s(order);
  SeriesAccess::at(s, exponent) = coeff;
  return s;
}

Series Series::from_coeffs(int order, std::span<const std::pair<int, Int>> entries) {
  require_order(order);
  Series s(order);
  std::vector<bool> seen(static_cast<size_t>(order) + 1, false);
  for (const auto& [exponent, coeff] : entries) {
    if (exponent < 0 || exponent > order)
      throw std::invalid_argument("Series::from_coeffs: exponent out of range");
    if (seen[static_cast<size_t>(exponent)])
      throw std::invalid_argument("Series::from_coeffs: duplicate exponent");
    seen[static_cast<size_t>(exponent)] = true;
    SeriesAccess::at(s, exponent) = coeff;
  }
  return s;
}

Series Series::from_coeffs(int order, std::initializer_list<std::pair<int, Int>> entries) {
  return from_coeffs(order, std::span<const std::pair<int, Int>>(entries.begin(), entries.size()));
}

const Int& Series::operator[](int n) const {
  if (n < 0 || n > order_) throw std::out_of_range("Series: exponent out of range");
  return c_[static_cast<size_t>(n)];
}

bool Series::is_zero() const {
  for (const Int& v : c_)
    if (!(v == Int(0))) return false;
  return true;
}

std::string Series::str() const {
  std::ostringstream os;
  bool any = false;
  for (int n = 0; n <= order_ && n <= 12; ++n) {
    if (c_[static_cast<size_t>(n)] == Int(0)) continue;
    if (any) os << " + ";
    os << c_[static_cast<size_t>(n)].str() << "*q^" << n;
    any = true;
  }
  if (!any) os << "0";
  if (order_ > 12) os << " + O(q^13)";
  return os.str();
}

Series operator+(const Series& a, const Series& b) {
  require_same_order(a, b, "add");
  Series r(a.order());
  for (int n = 0; n <= a.order(); ++n) SeriesAccess::at(r, n) = a[n] + b[n];
  return r;
}

Series operator-(const Series& a, const Series& b) {
  require_same_order(a, b, "sub");
  Series r(a.order());
  for (int n = 0; n <= a.order(); ++n) SeriesAccess::at(r, n) = a[n] - b[n];
  return r;
}

Series operator-(const Series& a) {
  Series r(a.order());
  for (int n = 0; n <= a.order(); ++n) SeriesAccess::at(r, n) = -a[n];
  return r;
}

Series mul(const Series& a, const Series& b) {
  require_same_order(a, b, "mul");
  const int q = a.order();
  Series r(q);
  for (int i = 0; i <= q; ++i) {
    if (a[i] == Int(0)) continue;
    const Int ai = a[i];
    for (int j = 0; i + j <= q; ++j) {
      if (b[j] == Int(0)) continue;
      SeriesAccess::at(r, i + j) += ai * b[j];
    }
  }
  return r;
}

Series invert(const Series& a) {
  const int q = a.order();
  const Int c0 = a[0];
  if (!(c0 == Int(1) || c0 == Int(-1)))
    throw std::invalid_argument("invert: constant term must be +1 or -1");
  Series b(q);
  SeriesAccess::at(b, 0) = c0;  // (+-1)^-1 = +-1
  for (int n = 1; n <= q; ++n) {
    Int acc = 0;
    for (int k = 1; k <= n; ++k) acc += a[k] * b[n - k];
    SeriesAccess::at(b, n) = -(c0 * acc);
  }
  return b;
}

Series geometric_divide(const Series& a, int k) {
  if (k < 1) throw std::invalid_argument("geometric_divide: k must be >= 1");
  Series r = a;
  for (int n = k; n <= a.order(); ++n) SeriesAccess::at(r, n) += r[n - k];
  return r;
}

Series shift(const Series& a, int k) {
  if (k < 0) throw std::invalid_argument("shift: k must be >= 0");
  Series r(a.order());
  for (int n = k; n <= a.order(); ++n) SeriesAccess::at(r, n) = a[n - k];
  return r;
}

Series scale(const Series& a, Int c) {
  Series r(a.order());
  for (int n = 0; n <= a.order(); ++n) SeriesAccess::at(r, n) = c * a[n];
  return r;
}

Series pochhammer(int start, int count, int order) {
  require_order(order);
  if (start < 1) throw std::invalid_argument("pochhammer: start must be >= 1");
  if (count < 0) throw std::invalid_argument("pochhammer: count must be >= 0");
  Series r = Series::one(order);
  for (int k = 0; k < count; ++k) {
    const int s = start + k;
    if (s > order) break;  // later factors only touch exponents beyond Q
    r = r - shift(r, s);
  }
  return r;
}

Series pochhammer_inf(int start, int order) {
  require_order(order);
  if (start < 1) throw std::invalid_argument("pochhammer_inf: start must be >= 1");
  Series r = Series::one(order);
  for (int s = start; s <= order; ++s) r = r - shift(r, s);
  return r;
}

Series euler_inf(int order) {
  require_order(order);
  Series r(order);
  SeriesAccess::at(r, 0) = 1;
  for (long long k = 1;; ++k) {
    const long long e1 = k * (3 * k - 1) / 2;
    const long long e2 = k * (3 * k + 1) / 2;
    if (e1 > order) break;
    const Int sign = (k % 2 == 0) ? 1 : -1;
    SeriesAccess::at(r, static_cast<int>(e1)) += sign;
    if (e2 <= order) SeriesAccess::at(r, static_cast<int>(e2)) += sign;
  }
  return r;
}

Series lambert_partial(int upper, int order) {
  require_order(order);
  if (upper < 0) throw std::invalid_argument("lambert_partial: upper must be >= 0");
  Series r(order);
  for (int i = 1; i <= upper && i <= order; ++i)
    for (int n = i; n <= order; n += i) SeriesAccess::at(r, n) += 1;
  return r;
}

DualSeries::DualSeries(Series v, Series d) : val(std::move(v)), der(std::move(d)) {
  if (val.order() != der.order())
    throw std::invalid_argument("DualSeries: value and derivative orders differ");
}

DualSeries d_const(const Series& s) { return {s, Series(s.order())}; }

DualSeries d_variable(const Series& s) { return {s, Series::one(s.order())}; }

DualSeries operator+(const DualSeries& a, const DualSeries& b) {
  return {a.val + b.val, a.der + b.der};
}

DualSeries operator-(const DualSeries& a, const DualSeries& b) {
  return {a.val - b.val, a.der - b.der};
}

DualSeries d_mul(const DualSeries& a, const DualSeries& b) {
  return {mul(a.val, b.val), mul(a.val, b.der) + mul(a.der, b.val)};
}

DualSeries d_invert(const DualSeries& x) {
  Series iv = invert(x.val);
  return {iv, -mul(mul(iv, iv), x.der)};
}

}  // namespace qtails
