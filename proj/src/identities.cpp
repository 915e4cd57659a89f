#include "qtails/identities.hpp"

#include "qtails/partitions.hpp"

#include <algorithm>
#include <chrono>
#include <stdexcept>

namespace qtails {

// ---------------------------------------------------------------------------
// EvalContext

EvalContext::EvalContext(int order) : order_(order) {
  if (order < 0) throw std::invalid_argument("EvalContext: order must be >= 0");
}

const Series& EvalContext::euler() {
  if (!euler_) euler_ = euler_inf(order_);
  return *euler_;
}

const Series& EvalContext::inv_euler() {
  if (!inv_euler_) inv_euler_ = invert(euler());
  return *inv_euler_;
}

const Series& EvalContext::poch(int k) {
  if (k < 0) throw std::invalid_argument("poch: k must be >= 0");
  if (poch_.empty()) poch_.push_back(Series::one(order_));
  while (static_cast<int>(poch_.size()) <= k) {
    const int next = static_cast<int>(poch_.size());
    Series v = poch_.back();
    if (next <= order_) v = v - shift(v, next);
    poch_.push_back(std::move(v));
  }
  return poch_[static_cast<size_t>(k)];
}

const Series& EvalContext::inv_poch(int k) {
  if (k < 0) throw std::invalid_argument("inv_poch: k must be >= 0");
  if (inv_poch_.empty()) inv_poch_.push_back(Series::one(order_));
  while (static_cast<int>(inv_poch_.size()) <= k) {
    const int next = static_cast<int>(inv_poch_.size());
    Series v = inv_poch_.back();
    if (next <= order_) v = geometric_divide(v, next);
    inv_poch_.push_back(std::move(v));
  }
  return inv_poch_[static_cast<size_t>(k)];
}

const Series& EvalContext::lambert(int upper) {
  if (upper < 0) throw std::invalid_argument("lambert: upper must be >= 0");
  const int clamped = std::min(upper, order_);
  if (lambert_.empty()) lambert_.push_back(Series(order_));
  while (static_cast<int>(lambert_.size()) <= clamped) {
    const int next = static_cast<int>(lambert_.size());
    Series v = lambert_.back() + geometric_divide(Series::monomial(order_, next), next);
    lambert_.push_back(std::move(v));
  }
  return lambert_[static_cast<size_t>(clamped)];
}

const Series& EvalContext::tail_product(int n) {
  if (n < 0) throw std::invalid_argument("tail_product: n must be >= 0");
  const int clamped = std::min(n, order_);
  if (tail_.empty()) tail_.push_back(euler());
  while (static_cast<int>(tail_.size()) <= clamped) {
    const int next = static_cast<int>(tail_.size());
    tail_.push_back(geometric_divide(tail_.back(), next));
  }
  return tail_[static_cast<size_t>(clamped)];
}

const DualSeries& EvalContext::dual_poch_shifted(int n) {
  if (n < 0) throw std::invalid_argument("dual_poch_shifted: n must be >= 0");
  if (dual_poch_.empty()) dual_poch_.push_back(d_const(Series::one(order_)));
  while (static_cast<int>(dual_poch_.size()) <= n) {
    const int k = static_cast<int>(dual_poch_.size());
    // factor 1 - b q^k at b = 1 + eps: value 1 - q^k, derivative -q^k
    Series fval = Series::one(order_);
    Series fder(order_);
    if (k <= order_) {
      fval = fval - Series::monomial(order_, k);
      fder = -Series::monomial(order_, k);
    }
    dual_poch_.push_back(d_mul(dual_poch_.back(), DualSeries(fval, fder)));
  }
  return dual_poch_[static_cast<size_t>(n)];
}

const DualSeries& EvalContext::dual_inv_poch_shifted(int n) {
  if (n < 0) throw std::invalid_argument("dual_inv_poch_shifted: n must be >= 0");
  while (static_cast<int>(dual_inv_poch_.size()) <= n) {
    const int k = static_cast<int>(dual_inv_poch_.size());
    dual_inv_poch_.push_back(d_invert(dual_poch_shifted(k)));
  }
  return dual_inv_poch_[static_cast<size_t>(n)];
}

const DualSeries& EvalContext::dual_poch_plain(int n) {
  if (n < 0) throw std::invalid_argument("dual_poch_plain: n must be >= 0");
  if (dual_plain_.empty()) dual_plain_.push_back(d_const(Series::one(order_)));
  while (static_cast<int>(dual_plain_.size()) <= n) {
    const int k = static_cast<int>(dual_plain_.size()) - 1;
    // factor 1 - b q^k at b = 1 + eps; for k = 0 this is -eps
    Series fval(order_);
    Series fder(order_);
    if (k == 0) {
      fder = -Series::one(order_);
    } else {
      fval = Series::one(order_);
      if (k <= order_) {
        fval = fval - Series::monomial(order_, k);
        fder = -Series::monomial(order_, k);
      }
    }
    dual_plain_.push_back(d_mul(dual_plain_.back(), DualSeries(fval, fder)));
  }
  return dual_plain_[static_cast<size_t>(n)];
}

const std::vector<Int>& EvalContext::p() {
  if (!p_) p_ = partition_table(order_);
  return *p_;
}
const std::vector<Int>& EvalContext::p2() {
  if (!p2_) p2_ = p2_table(order_);
  return *p2_;
}
const std::vector<Int>& EvalContext::n2() {
  if (!n2_) n2_ = rank_moment2_table(order_);
  return *n2_;
}
const std::vector<Int>& EvalContext::m2() {
  if (!m2_) m2_ = crank_moment2_table(order_);
  return *m2_;
}
const std::vector<Int>& EvalContext::d() {
  if (!d_) d_ = divisor_count_table(order_);
  return *d_;
}
const std::vector<Int>& EvalContext::sigma1() {
  if (!sigma1_) sigma1_ = sigma1_table(order_);
  return *sigma1_;
}
const std::vector<Int>& EvalContext::b2() {
  if (!b2_) b2_ = b2_table(order_);
  return *b2_;
}
const std::vector<Int>& EvalContext::spt() {
  if (!spt_) spt_ = spt_table(order_);
  return *spt_;
}
const std::vector<Int>& EvalContext::alternating_p() {
  if (!alt_p_) alt_p_ = alternating_weighted_P_table(order_);
  return *alt_p_;
}
const std::vector<std::vector<Int>>& EvalContext::f2d() {
  if (!f2d_) {
    const auto pam = parts_at_most_table(order_);
    const auto& pt = p();
    std::vector<std::vector<Int>> f(static_cast<size_t>(order_) + 1,
                                    std::vector<Int>(static_cast<size_t>(order_) + 1));
    for (int bound = 0; bound <= order_; ++bound)
      for (int k = 0; k <= order_; ++k)
        f[static_cast<size_t>(bound)][static_cast<size_t>(k)] =
            pt[static_cast<size_t>(k)] - pam[static_cast<size_t>(bound)][static_cast<size_t>(k)];
    f2d_ = std::move(f);
  }
  return *f2d_;
}
const std::vector<std::vector<int>>& EvalContext::g2d() {
  if (!g2d_) g2d_ = g_table(order_);
  return *g2d_;
}
const std::vector<std::vector<Int>>& EvalContext::parity2d() {
  if (!parity2d_) parity2d_ = distinct_parity_table(order_);
  return *parity2d_;
}

const Series& EvalContext::memo_series(const std::string& key,
                                       const std::function<Series()>& make) {
  auto it = memo_.find(key);
  if (it == memo_.end()) it = memo_.emplace(key, make()).first;
  return it->second;
}

// ---------------------------------------------------------------------------
// Shared producer bodies

namespace {

std::vector<Int> stream(const Series& s) { return s.coeffs(); }

// S(n) = sum_{k,N>=1} f(k, N) g(n-k, N) from the oracle tables. f(k, N)
// vanishes for N >= k and g needs n-k >= 1, which makes the sum finite.
std::vector<Int> fg_convolution(EvalContext& c) {
  const int q = c.order();
  const auto& f = c.f2d();
  const auto& g = c.g2d();
  std::vector<Int> out(static_cast<size_t>(q) + 1);
  for (int n = 0; n <= q; ++n) {
    Int acc = 0;
    for (int k = 2; k < n; ++k)
      for (int bound = 1; bound < k; ++bound) {
        const Int fv = f[static_cast<size_t>(bound)][static_cast<size_t>(k)];
        if (fv == Int(0)) continue;
        const int gv = g[static_cast<size_t>(n - k)][static_cast<size_t>(bound)];
        if (gv != 0) acc += fv * Int(gv);
      }
    out[static_cast<size_t>(n)] = acc;
  }
  return out;
}

// Left side of the double-sum identity: terms with 1+2+...+(n1+n2) <= Q,
// each q^{T(n1+n2)} / ((q)_{n1+n2} (1-q^{n1}) (1-q^{n2})) with sign
// (-1)^{n1+n2}. Higher pairs start beyond the window.
const Series& bailey_double_sum(EvalContext& c) {
  return c.memo_series("bailey_double_sum", [&c] {
    const int q = c.order();
    Series out(q);
    for (int total = 2; total * (total + 1) / 2 <= q; ++total) {
      const Series base = shift(c.inv_poch(total), total * (total + 1) / 2);
      for (int n1 = 1; n1 < total; ++n1) {
        const Series term = geometric_divide(geometric_divide(base, n1), total - n1);
        out = total % 2 == 0 ? out + term : out - term;
      }
    }
    return out;
  });
}

// sum_{N>=1} ((q^{N+1}; q)_inf - 1) * lambert(N); the N-th summand starts at
// q^{N+2}, so N <= Q exhausts the window.
const Series& tails_times_lambert(EvalContext& c) {
  return c.memo_series("tails_times_lambert", [&c] {
    const int q = c.order();
    const Series unit = Series::one(q);
    Series out(q);
    for (int n = 1; n <= q; ++n) out = out + mul(c.tail_product(n) - unit, c.lambert(n));
    return out;
  });
}

// sum_{N>=1} (1/(q)_inf - 1/(q)_N) * lambert(N); summand N starts at q^{N+2}.
const Series& sum_of_tails_times_partial_lambert(EvalContext& c) {
  return c.memo_series("sum_of_tails_times_partial_lambert", [&c] {
    const int q = c.order();
    Series out(q);
    for (int n = 1; n <= q; ++n)
      out = out + mul(c.inv_euler() - c.inv_poch(n), c.lambert(n));
    return out;
  });
}

// Smallest-parts generating function sum_{s>=1} q^s/(1-q^s)^2 / (q^{s+1};q)_inf.
const Series& smallest_parts_gf(EvalContext& c) {
  return c.memo_series("smallest_parts_gf", [&c] {
    const int q = c.order();
    Series out(q);
    for (int s = 1; s <= q; ++s) {
      Series term = mul(c.poch(s), c.inv_euler());  // 1/(q^{s+1}; q)_inf
      term = geometric_divide(geometric_divide(shift(term, s), s), s);
      out = out + term;
    }
    return out;
  });
}

// sum_i i q^i/(1-q^i) = sum_n sigma_1(n) q^n.
const Series& sigma1_lambert(EvalContext& c) {
  return c.memo_series("sigma1_lambert", [&c] {
    const int q = c.order();
    Series out(q);
    for (int i = 1; i <= q; ++i)
      out = out + scale(geometric_divide(Series::monomial(q, i), i), Int(i));
    return out;
  });
}

std::vector<Int> moment_formula_stream(EvalContext& c) {
  const int q = c.order();
  std::vector<Int> out(static_cast<size_t>(q) + 1);
  for (int n = 0; n <= q; ++n)
    out[static_cast<size_t>(n)] = c.p2()[static_cast<size_t>(n)] -
                                  Int(n) * c.p()[static_cast<size_t>(n)] -
                                  c.n2()[static_cast<size_t>(n)].half_exact();
  return out;
}

// Rogers-Fine style ratio (1-q^j)/(1-q^{j+n}), used for both Pochhammer
// quotients appearing in the Fine specializations.
Series telescoped_ratio(int j, int n, int order) {
  Series base = Series::one(order);
  if (j <= order) base = base - Series::monomial(order, j);
  return geometric_divide(base, j + n);
}

Series fine_lhs(EvalContext& c, int j, int m) {
  const int q = c.order();
  Series sum(q);
  Series ratio = Series::one(q);  // (q)_n (q)_j / (q)_{n+j}
  for (int n = 0; static_cast<long long>(n) * m <= q; ++n) {
    if (n > 0) {
      ratio = ratio - shift(ratio, n);
      ratio = geometric_divide(ratio, n + j);
    }
    sum = sum + shift(ratio, n * m);
  }
  const Series prefactor = c.inv_poch(m) - shift(c.inv_poch(m), m);  // (1-q^m)/(q)_m
  return mul(prefactor, sum);
}

Series fine_rhs(EvalContext& c, int j, int m) {
  const int q = c.order();
  Series out(q);
  for (int n = 0;; ++n) {
    const long long exponent = static_cast<long long>(n) * (n + 1) / 2 +
                               static_cast<long long>(n) * m;
    if (exponent > q) break;
    // (q^j; q)_n / (q^{j+1}; q)_n telescopes to (1-q^j)/(1-q^{j+n})
    Series term = mul(telescoped_ratio(j, n, q), c.inv_poch(n + m));
    term = shift(term, static_cast<int>(exponent));
    out = n % 2 == 0 ? out + term : out - term;
  }
  return out;
}

DualSeries fine_lhs_dual(EvalContext& c, int m) {
  const int q = c.order();
  DualSeries sum = d_const(Series(q));
  for (int n = 0; static_cast<long long>(n) * m <= q; ++n) {
    const Series coeff = shift(c.poch(n), n * m);  // (q)_n q^{nm}
    sum = sum + d_mul(d_const(coeff), c.dual_inv_poch_shifted(n));
  }
  const Series prefactor = c.inv_poch(m) - shift(c.inv_poch(m), m);
  return d_mul(d_const(prefactor), sum);
}

DualSeries fine_rhs_dual(EvalContext& c, int m) {
  const int q = c.order();
  DualSeries out = d_const(Series(q));
  for (int n = 0;; ++n) {
    const long long exponent = static_cast<long long>(n) * (n + 1) / 2 +
                               static_cast<long long>(n) * m;
    if (exponent > q) break;
    Series coeff = shift(c.inv_poch(n + m), static_cast<int>(exponent));
    if (n % 2 == 1) coeff = -coeff;
    const DualSeries term =
        d_mul(d_mul(c.dual_poch_plain(n), c.dual_inv_poch_shifted(n)), d_const(coeff));
    out = out + term;
  }
  return out;
}

Relation all_equal_relation() {
  return [](int, std::span<const Int> values) {
    for (size_t i = 1; i < values.size(); ++i)
      if (!(values[i] == values[0])) return false;
    return true;
  };
}

std::string pair_label(int n1, int n2) {
  return "n1=" + std::to_string(n1) + ",n2=" + std::to_string(n2);
}

// ---------------------------------------------------------------------------
// Catalog

std::vector<IdentityCheck> build_catalog() {
  std::vector<IdentityCheck> cat;

  cat.push_back(IdentityCheck{
      "eq1.1",
      "sum_{n>=0} (1/(q)_inf - 1/(q)_n) = (1/(q)_inf) sum_{n>=1} q^n/(1-q^n)",
      CheckKind::equality,
      1,
      [](EvalContext&) {
        Component comp;
        comp.producers = {
            {"sum_of_tails",
             [](EvalContext& c) {
               const int q = c.order();
               // summand n is supported on exponents > n, so n <= Q suffices
               Series out(q);
               for (int n = 0; n <= q; ++n) out = out + (c.inv_euler() - c.inv_poch(n));
               return stream(out);
             }},
            {"divisor_gf_over_euler",
             [](EvalContext& c) { return stream(mul(c.inv_euler(), c.lambert(c.order()))); }},
            {"p_conv_d",
             [](EvalContext& c) {
               const int q = c.order();
               std::vector<Int> out(static_cast<size_t>(q) + 1);
               for (int n = 0; n <= q; ++n) {
                 Int acc = 0;
                 for (int k = 1; k <= n; ++k)
                   acc += c.d()[static_cast<size_t>(k)] * c.p()[static_cast<size_t>(n - k)];
                 out[static_cast<size_t>(n)] = acc;
               }
               return out;
             }},
        };
        return std::vector<Component>{std::move(comp)};
      },
      nullptr});

  cat.push_back(IdentityCheck{
      "thm1.1",
      "sum_n S(n) q^n three ways: f*g convolution, tails * partial Lambert, "
      "p2(n) - n p(n) - N2(n)/2",
      CheckKind::equality,
      1,
      [](EvalContext&) {
        Component comp;
        comp.producers = {
            {"fg_convolution", [](EvalContext& c) { return fg_convolution(c); }},
            {"tails_times_partial_lambert",
             [](EvalContext& c) { return stream(sum_of_tails_times_partial_lambert(c)); }},
            {"moment_formula", [](EvalContext& c) { return moment_formula_stream(c); }},
        };
        return std::vector<Component>{std::move(comp)};
      },
      nullptr});

  cat.push_back(IdentityCheck{
      "thm1.2",
      "M2(n) + N2(n) <= 2 p2(n), with N2(n) <= p2(n) and S(n) >= 0",
      CheckKind::inequality,
      1,
      [](EvalContext&) {
        Component comp;
        comp.producers = {
            {"M2_plus_N2",
             [](EvalContext& c) {
               std::vector<Int> out(static_cast<size_t>(c.order()) + 1);
               for (int n = 0; n <= c.order(); ++n)
                 out[static_cast<size_t>(n)] =
                     c.m2()[static_cast<size_t>(n)] + c.n2()[static_cast<size_t>(n)];
               return out;
             }},
            {"two_p2",
             [](EvalContext& c) {
               std::vector<Int> out(static_cast<size_t>(c.order()) + 1);
               for (int n = 0; n <= c.order(); ++n)
                 out[static_cast<size_t>(n)] = Int(2) * c.p2()[static_cast<size_t>(n)];
               return out;
             }},
            {"N2", [](EvalContext& c) { return c.n2(); }},
            {"p2", [](EvalContext& c) { return c.p2(); }},
            {"S_formula", [](EvalContext& c) { return moment_formula_stream(c); }},
        };
        comp.relation = [](int, std::span<const Int> v) {
          return v[0] <= v[1] && v[2] <= v[3] && v[4] >= Int(0);
        };
        return std::vector<Component>{std::move(comp)};
      },
      [](EvalContext& c) {
        Int best = 0;
        int argmin = 0;
        for (int n = 0; n <= c.order(); ++n) {
          const Int slack = Int(2) * c.p2()[static_cast<size_t>(n)] -
                            c.m2()[static_cast<size_t>(n)] - c.n2()[static_cast<size_t>(n)];
          if (n == 0 || slack < best) {
            best = slack;
            argmin = n;
          }
        }
        return std::vector<std::pair<std::string, std::string>>{
            {"min_slack", best.str()}, {"argmin_n", std::to_string(argmin)}};
      }});

  cat.push_back(IdentityCheck{
      "thm1.3",
      "sum (-1)^{n1+n2} P-weighted partitions = distinct-parity * divisor "
      "convolution = -sum_N ((q^{N+1})_inf - 1) lambert(N)",
      CheckKind::equality,
      1,
      [](EvalContext&) {
        Component comp;
        comp.producers = {
            {"alternating_weighted_P", [](EvalContext& c) { return c.alternating_p(); }},
            {"parity_conv_divisors",
             [](EvalContext& c) {
               const int q = c.order();
               std::vector<Int> out(static_cast<size_t>(q) + 1);
               for (int n = 0; n <= q; ++n) {
                 Int acc = 0;
                 for (int k = 2; k < n; ++k)
                   for (int bound = 1; bound < k; ++bound) {
                     const Int dp = c.parity2d()[static_cast<size_t>(k)][static_cast<size_t>(bound)];
                     if (dp == Int(0)) continue;
                     const int gv = c.g2d()[static_cast<size_t>(n - k)][static_cast<size_t>(bound)];
                     if (gv != 0) acc += dp * Int(gv);
                   }
                 out[static_cast<size_t>(n)] = acc;
               }
               return out;
             }},
            {"tails_series", [](EvalContext& c) { return stream(-tails_times_lambert(c)); }},
        };
        return std::vector<Component>{std::move(comp)};
      },
      nullptr});

  cat.push_back(IdentityCheck{
      "eq2.5",
      "double Bailey sum = (sum q^n/(1-q^n))^2 + sum (-1)^n (1+q^n) "
      "q^{n(3n+1)/2}/(1-q^n)^2",
      CheckKind::equality,
      1,
      [](EvalContext&) {
        Component comp;
        comp.producers = {
            {"bailey_double_sum", [](EvalContext& c) { return stream(bailey_double_sum(c)); }},
            {"lambert_square_plus_pentagonal",
             [](EvalContext& c) {
               const int q = c.order();
               const Series l = c.lambert(q);
               Series out = mul(l, l);
               for (int n = 1;; ++n) {
                 const long long e1 = static_cast<long long>(n) * (3 * n + 1) / 2;
                 if (e1 > q) break;
                 const long long e2 = e1 + n;
                 Series numerator = Series::monomial(q, static_cast<int>(e1));
                 if (e2 <= q) numerator = numerator + Series::monomial(q, static_cast<int>(e2));
                 const Series term = geometric_divide(geometric_divide(numerator, n), n);
                 out = n % 2 == 0 ? out + term : out - term;
               }
               return stream(out);
             }},
        };
        return std::vector<Component>{std::move(comp)};
      },
      nullptr});

  cat.push_back(IdentityCheck{
      "eq2.5-tails",
      "double Bailey sum = -sum_{N>=1} ((q^{N+1})_inf - 1) lambert(N)",
      CheckKind::equality,
      1,
      [](EvalContext&) {
        Component comp;
        comp.producers = {
            {"bailey_double_sum", [](EvalContext& c) { return stream(bailey_double_sum(c)); }},
            {"neg_tails_times_lambert",
             [](EvalContext& c) { return stream(-tails_times_lambert(c)); }},
        };
        return std::vector<Component>{std::move(comp)};
      },
      nullptr});

  cat.push_back(IdentityCheck{
      "bailey2.1",
      "beta_{n1,n2} = sum_r alpha_{r,r} / ((q)_{n1+r} (q)_{n1-r} (q)_{n2+r} "
      "(q)_{n2-r}) for the diagonal pair, 0 <= n1, n2 <= 8",
      CheckKind::equality,
      1,
      [](EvalContext&) {
        std::vector<Component> comps;
        for (int n1 = 0; n1 <= 8; ++n1)
          for (int n2 = 0; n2 <= 8; ++n2) {
            Component comp;
            comp.label = pair_label(n1, n2);
            comp.producers = {
                {"beta",
                 [n1, n2](EvalContext& c) {
                   Series out = mul(mul(c.inv_poch(n1), c.inv_poch(n2)), c.inv_poch(n1 + n2));
                   const long long e = static_cast<long long>(n1) * n2;
                   if (e > c.order()) return stream(Series(c.order()));
                   return stream(shift(out, static_cast<int>(e)));
                 }},
                {"alpha_sum",
                 [n1, n2](EvalContext& c) {
                   const int q = c.order();
                   Series out(q);
                   for (int r = 0; r <= std::min(n1, n2); ++r) {
                     const Series term = mul(mul(c.inv_poch(n1 + r), c.inv_poch(n1 - r)),
                                             mul(c.inv_poch(n2 + r), c.inv_poch(n2 - r)));
                     if (r == 0) {
                       out = out + term;
                       continue;
                     }
                     // alpha_r = (-1)^r q^{r(r-1)/2} (1 + q^r)
                     const long long e1 = static_cast<long long>(r) * (r - 1) / 2;
                     const long long e2 = e1 + r;
                     Series contribution(q);
                     if (e1 <= q) contribution = contribution + shift(term, static_cast<int>(e1));
                     if (e2 <= q) contribution = contribution + shift(term, static_cast<int>(e2));
                     out = r % 2 == 0 ? out + contribution : out - contribution;
                   }
                   return stream(out);
                 }},
            };
            comps.push_back(std::move(comp));
          }
        return comps;
      },
      nullptr});

  cat.push_back(IdentityCheck{
      "fine2.6",
      "(1-q^m)/(q)_m sum_n (q)_n/(bq)_n q^{nm} = sum_n (b)_n (-1)^n "
      "q^{n(n+1)/2+nm}/((bq)_n (q)_{n+m}) at b = q, q^2, q^3 and as a "
      "derivative at b = 1",
      CheckKind::equality,
      1,
      [](EvalContext&) {
        std::vector<Component> comps;
        for (int j = 1; j <= 3; ++j)
          for (int m = 1; m <= 6; ++m) {
            Component comp;
            comp.label = "b=q^" + std::to_string(j) + ",m=" + std::to_string(m);
            comp.producers = {
                {"lhs", [j, m](EvalContext& c) { return stream(fine_lhs(c, j, m)); }},
                {"rhs", [j, m](EvalContext& c) { return stream(fine_rhs(c, j, m)); }},
            };
            comps.push_back(std::move(comp));
          }
        for (int m = 1; m <= 6; ++m) {
          Component value_part;
          value_part.label = "b=1+eps,m=" + std::to_string(m) + ",value";
          value_part.producers = {
              {"lhs_value", [m](EvalContext& c) { return stream(fine_lhs_dual(c, m).val); }},
              {"rhs_value", [m](EvalContext& c) { return stream(fine_rhs_dual(c, m).val); }},
          };
          comps.push_back(std::move(value_part));
          Component derivative_part;
          derivative_part.label = "b=1+eps,m=" + std::to_string(m) + ",derivative";
          derivative_part.producers = {
              {"lhs_derivative", [m](EvalContext& c) { return stream(fine_lhs_dual(c, m).der); }},
              {"rhs_derivative", [m](EvalContext& c) { return stream(fine_rhs_dual(c, m).der); }},
          };
          comps.push_back(std::move(derivative_part));
        }
        return comps;
      },
      nullptr});

  cat.push_back(IdentityCheck{
      "euler-aux",
      "sum_{m>=1} (-1)^{m-1} q^{Nm + m(m+1)/2}/(q)_m = 1 - (q^{N+1}; q)_inf "
      "for every tail index N",
      CheckKind::equality,
      1,
      [](EvalContext& outer) {
        std::vector<Component> comps;
        for (int tail = 0; tail <= outer.order(); ++tail) {
          Component comp;
          comp.label = "N=" + std::to_string(tail);
          comp.producers = {
              {"alternating_sum",
               [tail](EvalContext& c) {
                 const int q = c.order();
                 Series out(q);
                 for (int m = 1;; ++m) {
                   const long long e = static_cast<long long>(tail) * m +
                                       static_cast<long long>(m) * (m + 1) / 2;
                   if (e > q) break;
                   const Series term = shift(c.inv_poch(m), static_cast<int>(e));
                   out = m % 2 == 1 ? out + term : out - term;
                 }
                 return stream(out);
               }},
              {"one_minus_tail_product",
               [tail](EvalContext& c) {
                 return stream(Series::one(c.order()) - c.tail_product(tail));
               }},
          };
          comps.push_back(std::move(comp));
        }
        return comps;
      },
      nullptr});

  cat.push_back(IdentityCheck{
      "onedim",
      "sum_{n>=1} (-1)^n q^{n(n+1)/2}/((q)_n (1-q^n)) = sum_{n>=0} "
      "((q^{n+1})_inf - 1)",
      CheckKind::equality,
      1,
      [](EvalContext&) {
        Component comp;
        comp.producers = {
            {"alternating_sum",
             [](EvalContext& c) {
               const int q = c.order();
               Series out(q);
               for (int n = 1;; ++n) {
                 const long long e = static_cast<long long>(n) * (n + 1) / 2;
                 if (e > q) break;
                 const Series term =
                     geometric_divide(shift(c.inv_poch(n), static_cast<int>(e)), n);
                 out = n % 2 == 0 ? out + term : out - term;
               }
               return stream(out);
             }},
            {"tail_sum",
             [](EvalContext& c) {
               const int q = c.order();
               const Series unit = Series::one(q);
               Series out(q);
               for (int n = 0; n <= q; ++n) out = out + (c.tail_product(n) - unit);
               return stream(out);
             }},
            {"parity_tables",
             [](EvalContext& c) {
               const int q = c.order();
               std::vector<Int> out(static_cast<size_t>(q) + 1);
               for (int k = 1; k <= q; ++k) {
                 Int acc = 0;
                 for (int bound = 0; bound < k; ++bound)
                   acc += c.parity2d()[static_cast<size_t>(k)][static_cast<size_t>(bound)];
                 out[static_cast<size_t>(k)] = -acc;
               }
               return out;
             }},
        };
        return std::vector<Component>{std::move(comp)};
      },
      nullptr});

  cat.push_back(IdentityCheck{
      "kim1.3",
      "sum_{k=1}^{n-1} d(k) d(n-k) = sigma1(n) - sigma0(n) + 2 b2(n) for n >= 2",
      CheckKind::equality,
      2,
      [](EvalContext&) {
        Component comp;
        comp.min_n = 2;
        comp.producers = {
            {"d_conv_d",
             [](EvalContext& c) {
               const int q = c.order();
               std::vector<Int> out(static_cast<size_t>(q) + 1);
               for (int n = 0; n <= q; ++n) {
                 Int acc = 0;
                 for (int k = 1; k < n; ++k)
                   acc += c.d()[static_cast<size_t>(k)] * c.d()[static_cast<size_t>(n - k)];
                 out[static_cast<size_t>(n)] = acc;
               }
               return out;
             }},
            {"sigma_formula",
             [](EvalContext& c) {
               const int q = c.order();
               std::vector<Int> out(static_cast<size_t>(q) + 1);
               for (int n = 1; n <= q; ++n)
                 out[static_cast<size_t>(n)] = c.sigma1()[static_cast<size_t>(n)] -
                                               c.d()[static_cast<size_t>(n)] +
                                               Int(2) * c.b2()[static_cast<size_t>(n)];
               return out;
             }},
            {"lambert_squared",
             [](EvalContext& c) {
               const Series l = c.lambert(c.order());
               return stream(mul(l, l));
             }},
        };
        return std::vector<Component>{std::move(comp)};
      },
      nullptr});

  cat.push_back(IdentityCheck{
      "eq1.4",
      "S(n) = n p(n) + sum_k p(n-k) (2 b2(k) - d(k)) - N2(n)/2",
      CheckKind::equality,
      1,
      [](EvalContext&) {
        Component comp;
        comp.producers = {
            {"fg_convolution", [](EvalContext& c) { return fg_convolution(c); }},
            {"kim_substituted",
             [](EvalContext& c) {
               const int q = c.order();
               std::vector<Int> out(static_cast<size_t>(q) + 1);
               for (int n = 0; n <= q; ++n) {
                 Int acc = Int(n) * c.p()[static_cast<size_t>(n)];
                 for (int k = 1; k <= n; ++k)
                   acc += c.p()[static_cast<size_t>(n - k)] *
                          (Int(2) * c.b2()[static_cast<size_t>(k)] - c.d()[static_cast<size_t>(k)]);
                 out[static_cast<size_t>(n)] = acc - c.n2()[static_cast<size_t>(n)].half_exact();
               }
               return out;
             }},
        };
        return std::vector<Component>{std::move(comp)};
      },
      nullptr});

  cat.push_back(IdentityCheck{
      "euler-np",
      "n p(n) = sum_k sigma1(k) p(n-k)",
      CheckKind::equality,
      1,
      [](EvalContext&) {
        Component comp;
        comp.producers = {
            {"n_times_p",
             [](EvalContext& c) {
               std::vector<Int> out(static_cast<size_t>(c.order()) + 1);
               for (int n = 0; n <= c.order(); ++n)
                 out[static_cast<size_t>(n)] = Int(n) * c.p()[static_cast<size_t>(n)];
               return out;
             }},
            {"sigma1_conv_p",
             [](EvalContext& c) {
               const int q = c.order();
               std::vector<Int> out(static_cast<size_t>(q) + 1);
               for (int n = 0; n <= q; ++n) {
                 Int acc = 0;
                 for (int k = 1; k <= n; ++k)
                   acc += c.sigma1()[static_cast<size_t>(k)] * c.p()[static_cast<size_t>(n - k)];
                 out[static_cast<size_t>(n)] = acc;
               }
               return out;
             }},
            {"derivative_series",
             [](EvalContext& c) { return stream(mul(c.inv_euler(), sigma1_lambert(c))); }},
        };
        return std::vector<Component>{std::move(comp)};
      },
      nullptr});

  cat.push_back(IdentityCheck{
      "spt",
      "spt(n) = (M2(n) - N2(n))/2, and M2(n) > N2(n) for n >= 1",
      CheckKind::equality,
      1,
      [](EvalContext&) {
        Component comp;
        comp.producers = {
            {"smallest_parts_dp", [](EvalContext& c) { return c.spt(); }},
            {"moment_difference_halved",
             [](EvalContext& c) {
               std::vector<Int> out(static_cast<size_t>(c.order()) + 1);
               for (int n = 0; n <= c.order(); ++n)
                 out[static_cast<size_t>(n)] =
                     (c.m2()[static_cast<size_t>(n)] - c.n2()[static_cast<size_t>(n)]).half_exact();
               return out;
             }},
            {"smallest_parts_gf", [](EvalContext& c) { return stream(smallest_parts_gf(c)); }},
        };
        comp.relation = [](int n, std::span<const Int> v) {
          if (!(v[0] == v[1] && v[1] == v[2])) return false;
          return n == 0 || v[0] >= Int(1);  // strict M2 > N2 for n >= 1
        };
        return std::vector<Component>{std::move(comp)};
      },
      nullptr});

  cat.push_back(IdentityCheck{
      "mod2",
      "S(n) == n p(n) - sum_k p(n-k) d(k) - N2(n)/2 (mod 2)",
      CheckKind::congruence,
      1,
      [](EvalContext&) {
        Component comp;
        comp.producers = {
            {"S_oracle", [](EvalContext& c) { return fg_convolution(c); }},
            {"parity_formula",
             [](EvalContext& c) {
               const int q = c.order();
               std::vector<Int> out(static_cast<size_t>(q) + 1);
               for (int n = 0; n <= q; ++n) {
                 Int acc = Int(n) * c.p()[static_cast<size_t>(n)];
                 for (int k = 1; k <= n; ++k)
                   acc -= c.p()[static_cast<size_t>(n - k)] * c.d()[static_cast<size_t>(k)];
                 out[static_cast<size_t>(n)] = acc - c.n2()[static_cast<size_t>(n)].half_exact();
               }
               return out;
             }},
        };
        return std::vector<Component>{std::move(comp)};
      },
      nullptr});

  return cat;
}

Relation relation_for(const Component& comp, CheckKind kind) {
  if (comp.relation) return comp.relation;
  if (kind == CheckKind::congruence)
    return [](int, std::span<const Int> v) { return (v[0] - v[1]).is_even(); };
  return all_equal_relation();
}

}  // namespace

// ---------------------------------------------------------------------------
// Checker

const std::vector<IdentityCheck>& catalog() {
  static const std::vector<IdentityCheck> cat = build_catalog();
  return cat;
}

const IdentityCheck* find_check(std::string_view id) {
  for (const auto& entry : catalog())
    if (entry.id == id) return &entry;
  return nullptr;
}

namespace {

const IdentityCheck& require_check(const std::string& id) {
  const IdentityCheck* entry = find_check(id);
  if (entry == nullptr) throw std::invalid_argument("unknown identity id: " + id);
  return *entry;
}

void require_order_at_least(const IdentityCheck& entry, int order) {
  if (order < 1 || order < entry.min_order)
    throw std::invalid_argument("order " + std::to_string(order) + " below minimum " +
                                std::to_string(std::max(entry.min_order, 1)) + " for " + entry.id);
}

CheckReport run_check_in(EvalContext& ctx, const IdentityCheck& entry, int order,
                         const std::optional<Mutation>& mutation) {
  const auto started = std::chrono::steady_clock::now();
  CheckReport report;
  report.id = entry.id;
  report.order = order;

  auto comps = entry.components(ctx);
  std::vector<std::vector<std::vector<Int>>> streams(comps.size());
  for (size_t i = 0; i < comps.size(); ++i) {
    streams[i].reserve(comps[i].producers.size());
    for (const auto& producer : comps[i].producers) {
      auto values = producer.eval(ctx);
      if (static_cast<int>(values.size()) != order + 1)
        throw std::logic_error("producer " + producer.name + " returned wrong stream length");
      streams[i].push_back(std::move(values));
    }
  }

  if (mutation) {
    const auto& m = *mutation;
    if (m.component < 0 || m.component >= static_cast<int>(comps.size()) || m.producer < 0 ||
        m.producer >= static_cast<int>(comps[static_cast<size_t>(m.component)].producers.size()) ||
        m.exponent < 0 || m.exponent > order)
      throw std::invalid_argument("mutation indices out of range");
    auto& cell =
        streams[static_cast<size_t>(m.component)][static_cast<size_t>(m.producer)][static_cast<size_t>(m.exponent)];
    cell += m.delta;
  }

  std::vector<Relation> relations;
  relations.reserve(comps.size());
  for (const auto& comp : comps) relations.push_back(relation_for(comp, entry.kind));

  report.pass = true;
  std::vector<Int> at_n;
  for (int n = 0; n <= order && report.pass; ++n) {
    for (size_t i = 0; i < comps.size(); ++i) {
      if (n < comps[i].min_n) continue;
      at_n.clear();
      for (const auto& s : streams[i]) at_n.push_back(s[static_cast<size_t>(n)]);
      if (!relations[i](n, at_n)) {
        report.pass = false;
        report.first_bad_n = n;
        report.component = comps[i].label;
        for (size_t j = 0; j < comps[i].producers.size(); ++j)
          report.values.emplace_back(comps[i].producers[j].name, at_n[j]);
        break;
      }
    }
  }

  if (entry.metrics) report.notes = entry.metrics(ctx);
  report.elapsed_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started).count();
  return report;
}

}  // namespace

CheckReport run_check(const std::string& id, int order) { return run_check(id, order, std::nullopt); }

CheckReport run_check(const std::string& id, int order, const std::optional<Mutation>& mutation) {
  const IdentityCheck& entry = require_check(id);
  require_order_at_least(entry, order);
  EvalContext ctx(order);
  return run_check_in(ctx, entry, order, mutation);
}

std::vector<CheckReport> run_all(int order) {
  if (order < 2) throw std::invalid_argument("run_all: order must be >= 2");
  EvalContext ctx(order);
  std::vector<CheckReport> reports;
  for (const auto& entry : catalog()) reports.push_back(run_check_in(ctx, entry, order, std::nullopt));
  std::sort(reports.begin(), reports.end(),
            [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
  return reports;
}

std::vector<std::pair<std::string, std::vector<Int>>> entry_streams(const std::string& id,
                                                                    int order) {
  const IdentityCheck& entry = require_check(id);
  require_order_at_least(entry, order);
  EvalContext ctx(order);
  auto comps = entry.components(ctx);
  std::vector<std::pair<std::string, std::vector<Int>>> out;
  for (const auto& comp : comps)
    for (const auto& producer : comp.producers) {
      std::string name = comp.label.empty() ? producer.name : comp.label + "/" + producer.name;
      out.emplace_back(std::move(name), producer.eval(ctx));
    }
  return out;
}

std::vector<std::pair<std::string, int>> entry_shape(const std::string& id, int order) {
  const IdentityCheck& entry = require_check(id);
  require_order_at_least(entry, order);
  EvalContext ctx(order);
  auto comps = entry.components(ctx);
  std::vector<std::pair<std::string, int>> out;
  for (const auto& comp : comps)
    out.emplace_back(comp.label, static_cast<int>(comp.producers.size()));
  return out;
}

}  // namespace qtails
