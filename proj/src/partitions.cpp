#include "qtails/partitions.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtails {

namespace {

void require_nonneg(int n, const char* what) {
  if (n < 0) throw std::invalid_argument(std::string(what) + " must be >= 0");
}

void require_within_cap(int n, int cap) {
  require_nonneg(n, "n");
  if (n > cap)
    throw std::invalid_argument("enumeration request exceeds the cap (" + std::to_string(cap) +
                                "); raise the cap explicitly if this is intended");
}

void enumerate_rec(int remaining, int max_part, std::vector<int>& parts,
                   const PartitionVisitor& visit) {
  if (remaining == 0) {
    visit(parts);
    return;
  }
  for (int part = std::min(remaining, max_part); part >= 1; --part) {
    parts.push_back(part);
    enumerate_rec(remaining - part, part, parts, visit);
    parts.pop_back();
  }
}

}  // namespace

void enumerate_partitions(int n, const PartitionVisitor& visit, int cap) {
  require_within_cap(n, cap);
  std::vector<int> parts;
  parts.reserve(static_cast<size_t>(n));
  enumerate_rec(n, n == 0 ? 1 : n, parts, visit);
}

std::vector<Int> partition_table(int n_max) {
  require_nonneg(n_max, "n_max");
  std::vector<Int> p(static_cast<size_t>(n_max) + 1);
  p[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    Int acc = 0;
    for (long long k = 1;; ++k) {
      const long long g1 = k * (3 * k - 1) / 2;
      const long long g2 = k * (3 * k + 1) / 2;
      if (g1 > n) break;
      const bool plus = k % 2 == 1;
      Int term = p[static_cast<size_t>(n - g1)];
      if (g2 <= n) term += p[static_cast<size_t>(n - g2)];
      acc = plus ? acc + term : acc - term;
    }
    p[static_cast<size_t>(n)] = acc;
  }
  return p;
}

Int p_of(int n) { return partition_table(n).back(); }

std::vector<std::vector<Int>> exact_part_count_table(int n_max) {
  require_nonneg(n_max, "n_max");
  std::vector<std::vector<Int>> pm(static_cast<size_t>(n_max) + 1,
                                   std::vector<Int>(static_cast<size_t>(n_max) + 1));
  pm[0][0] = 1;
  for (int m = 1; m <= n_max; ++m)
    for (int n = 1; n <= n_max; ++n) {
      Int v = pm[static_cast<size_t>(m - 1)][static_cast<size_t>(n - 1)];
      if (n >= m) v += pm[static_cast<size_t>(m)][static_cast<size_t>(n - m)];
      pm[static_cast<size_t>(m)][static_cast<size_t>(n)] = v;
    }
  return pm;
}

Int p_exact_parts(int m, int n) {
  require_nonneg(m, "m");
  require_nonneg(n, "n");
  if (m > n) return m == 0 && n == 0 ? 1 : 0;
  const auto pm = exact_part_count_table(n);
  return pm[static_cast<size_t>(m)][static_cast<size_t>(n)];
}

std::vector<std::vector<Int>> parts_at_most_table(int n_max) {
  require_nonneg(n_max, "n_max");
  std::vector<std::vector<Int>> pam(static_cast<size_t>(n_max) + 1,
                                    std::vector<Int>(static_cast<size_t>(n_max) + 1));
  pam[0][0] = 1;
  for (int bound = 1; bound <= n_max; ++bound) {
    pam[static_cast<size_t>(bound)] = pam[static_cast<size_t>(bound - 1)];
    auto& row = pam[static_cast<size_t>(bound)];
    for (int n = bound; n <= n_max; ++n)
      row[static_cast<size_t>(n)] += row[static_cast<size_t>(n - bound)];
  }
  return pam;
}

Int p_parts_at_most(int n, int bound) {
  require_nonneg(n, "n");
  require_nonneg(bound, "bound");
  if (n == 0) return 1;
  if (bound == 0) return 0;
  const auto pam = parts_at_most_table(n);
  return pam[static_cast<size_t>(std::min(bound, n))][static_cast<size_t>(n)];
}

Int f_of(int n, int bound) { return p_of(n) - p_parts_at_most(n, bound); }

std::vector<Int> p2_table(int n_max) {
  const auto pm = exact_part_count_table(n_max);
  std::vector<Int> out(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    Int acc = 0;
    for (int m = 1; m <= n; ++m)
      acc += Int(static_cast<long long>(m) * m) * pm[static_cast<size_t>(m)][static_cast<size_t>(n)];
    out[static_cast<size_t>(n)] = acc;
  }
  return out;
}

Int p2_of(int n) { return p2_table(n).back(); }

std::vector<Int> rank_moment2_table(int n_max) {
  require_nonneg(n_max, "n_max");
  std::vector<Int> n2(static_cast<size_t>(n_max) + 1);
  // cur[x][j] = #partitions of x into at most j parts, each part <= a, for
  // the current largest-part bound a. Updated in place as a grows:
  //   r(x, a, j) = r(x, a-1, j) + r(x-a, a, j-1).
  std::vector<std::vector<Int>> cur(static_cast<size_t>(n_max) + 1);
  for (int x = 0; x <= n_max; ++x)
    cur[static_cast<size_t>(x)] = std::vector<Int>(static_cast<size_t>(x) + 1, x == 0 ? Int(1) : Int(0));
  for (int a = 1; a <= n_max; ++a) {
    for (int x = a; x <= n_max; ++x) {
      auto& row = cur[static_cast<size_t>(x)];
      const auto& prev = cur[static_cast<size_t>(x - a)];
      const int jmax = static_cast<int>(row.size()) - 1;
      for (int j = 1; j <= jmax; ++j) {
        const int pj = std::min(j - 1, x - a);
        row[static_cast<size_t>(j)] += prev[static_cast<size_t>(pj)];
      }
    }
    // Partitions whose largest part is exactly a: remove one copy of a, leave
    // exactly m-1 parts each <= a. Contribution (a - m)^2 per partition.
    for (int n = a; n <= n_max; ++n) {
      const int x = n - a;
      const auto& row = cur[static_cast<size_t>(x)];
      Int acc = 0;
      for (int m = 1; m <= x + 1; ++m) {
        Int exact = row[static_cast<size_t>(std::min(m - 1, x))];
        if (m >= 2) exact -= row[static_cast<size_t>(std::min(m - 2, x))];
        if (exact == Int(0)) continue;
        const long long rank = static_cast<long long>(a) - m;
        acc += Int(rank * rank) * exact;
      }
      n2[static_cast<size_t>(n)] += acc;
    }
  }
  return n2;
}

Int rank_moment2(int n) { return rank_moment2_table(n).back(); }

Int rank_moment2_enum(int n, int cap) {
  Int acc = 0;
  enumerate_partitions(
      n,
      [&](std::span<const int> parts) {
        if (parts.empty()) return;
        const long long rank = parts.front() - static_cast<long long>(parts.size());
        acc += Int(rank * rank);
      },
      cap);
  return acc;
}

Int crank_of(std::span<const int> parts) {
  long long ones = 0;
  long long above = 0;
  for (int part : parts) {
    if (part == 1) ++ones;
  }
  for (int part : parts) {
    if (part > ones) ++above;
  }
  if (ones == 0) return parts.empty() ? Int(0) : Int(parts.front());
  return Int(above - ones);
}

std::vector<Int> crank_moment2_table(int n_max) {
  const auto p = partition_table(n_max);
  std::vector<Int> out(static_cast<size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n)
    out[static_cast<size_t>(n)] = Int(2LL * n) * p[static_cast<size_t>(n)];
  return out;
}

Int M2_of(int n) { return crank_moment2_table(n).back(); }

Int crank_moment2_enum(int n, int cap) {
  if (n < 2)
    throw std::invalid_argument("crank_moment2_enum: n >= 2 required (n = 1 is degenerate)");
  Int acc = 0;
  enumerate_partitions(
      n,
      [&](std::span<const int> parts) {
        const Int c = crank_of(parts);
        acc += c * c;
      },
      cap);
  return acc;
}

std::vector<Int> spt_table(int n_max) {
  require_nonneg(n_max, "n_max");
  // low[s][x] = #partitions of x into parts >= s; spt(n) then counts, for
  // each smallest part s and multiplicity >= j, the partitions left after
  // removing j copies of s.
  std::vector<std::vector<Int>> low(static_cast<size_t>(n_max) + 2,
                                    std::vector<Int>(static_cast<size_t>(n_max) + 1));
  for (int s = n_max + 1; s >= 1; --s) {
    auto& row = low[static_cast<size_t>(s)];
    row[0] = 1;
    if (s <= n_max) {
      const auto& next = low[static_cast<size_t>(s + 1)];
      for (int x = 1; x <= n_max; ++x) {
        Int v = next[static_cast<size_t>(x)];
        if (x >= s) v += row[static_cast<size_t>(x - s)];
        row[static_cast<size_t>(x)] = v;
      }
    }
  }
  std::vector<Int> out(static_cast<size_t>(n_max) + 1);
  for (int n = 1; n <= n_max; ++n) {
    Int acc = 0;
    for (int s = 1; s <= n; ++s)
      for (int j = 1; j * s <= n; ++j) acc += low[static_cast<size_t>(s)][static_cast<size_t>(n - j * s)];
    out[static_cast<size_t>(n)] = acc;
  }
  return out;
}

Int spt_enum(int n, int cap) {
  if (n < 1) throw std::invalid_argument("spt_enum: n must be >= 1");
  Int acc = 0;
  enumerate_partitions(
      n,
      [&](std::span<const int> parts) {
        const int smallest = parts.back();
        long long mult = 0;
        for (auto it = parts.rbegin(); it != parts.rend() && *it == smallest; ++it) ++mult;
        acc += Int(mult);
      },
      cap);
  return acc;
}

std::vector<Int> divisor_count_table(int n_max) {
  require_nonneg(n_max, "n_max");
  std::vector<Int> d(static_cast<size_t>(n_max) + 1);
  for (int i = 1; i <= n_max; ++i)
    for (int n = i; n <= n_max; n += i) d[static_cast<size_t>(n)] += 1;
  return d;
}

std::vector<Int> sigma1_table(int n_max) {
  require_nonneg(n_max, "n_max");
  std::vector<Int> s(static_cast<size_t>(n_max) + 1);
  for (int i = 1; i <= n_max; ++i)
    for (int n = i; n <= n_max; n += i) s[static_cast<size_t>(n)] += Int(i);
  return s;
}

Int d_of(int n) {
  if (n < 1) throw std::invalid_argument("d_of: n must be >= 1");
  return Int(g_of(n, n));
}

Int sigma1_of(int n) {
  if (n < 1) throw std::invalid_argument("sigma1_of: n must be >= 1");
  long long acc = 0;
  for (int d = 1; d <= n; ++d)
    if (n % d == 0) acc += d;
  return Int(acc);
}

int g_of(int n, int bound) {
  if (n < 1) throw std::invalid_argument("g_of: n must be >= 1");
  require_nonneg(bound, "bound");
  int count = 0;
  for (int d = 1; d <= std::min(n, bound); ++d)
    if (n % d == 0) ++count;
  return count;
}

std::vector<std::vector<int>> g_table(int n_max) {
  require_nonneg(n_max, "n_max");
  std::vector<std::vector<int>> g(static_cast<size_t>(n_max) + 1,
                                  std::vector<int>(static_cast<size_t>(n_max) + 1, 0));
  for (int n = 1; n <= n_max; ++n)
    for (int bound = 1; bound <= n_max; ++bound)
      g[static_cast<size_t>(n)][static_cast<size_t>(bound)] =
          g[static_cast<size_t>(n)][static_cast<size_t>(bound - 1)] +
          ((bound <= n && n % bound == 0) ? 1 : 0);
  return g;
}

std::vector<Int> b2_table(int n_max) {
  require_nonneg(n_max, "n_max");
  std::vector<Int> out(static_cast<size_t>(n_max) + 1);
  // Count solutions m1*v1 + m2*v2 = n with v1 > v2 >= 1 and m1, m2 >= 1.
  for (int v1 = 2; v1 <= n_max; ++v1)
    for (int m1 = 1; m1 * v1 < n_max; ++m1) {
      const int base = m1 * v1;
      for (int v2 = 1; v2 < v1 && base + v2 <= n_max; ++v2)
        for (int n = base + v2; n <= n_max; n += v2) out[static_cast<size_t>(n)] += 1;
    }
  return out;
}

Int b2_of(int n) {
  require_nonneg(n, "n");
  return b2_table(n).back();
}

Int b2_enum(int n, int cap) {
  Int acc = 0;
  enumerate_partitions(
      n,
      [&](std::span<const int> parts) {
        int distinct = 0;
        int prev = 0;
        for (int part : parts) {
          if (part != prev) ++distinct;
          prev = part;
        }
        if (distinct == 2) acc += 1;
      },
      cap);
  return acc;
}

std::vector<std::vector<Int>> distinct_parity_table(int n_max) {
  require_nonneg(n_max, "n_max");
  // t[x][m] = sum of (-1)^(#parts) over partitions of x into distinct parts
  // all >= m; the signed count wanted is -t[n][N+1] for n >= 1.
  std::vector<std::vector<Int>> t(static_cast<size_t>(n_max) + 1,
                                  std::vector<Int>(static_cast<size_t>(n_max) + 2));
  for (int m = n_max + 1; m >= 1; --m) {
    for (int x = 0; x <= n_max; ++x) {
      if (x == 0) {
        t[0][static_cast<size_t>(m)] = 1;
        continue;
      }
      if (m > x) {
        t[static_cast<size_t>(x)][static_cast<size_t>(m)] = 0;
        continue;
      }
      t[static_cast<size_t>(x)][static_cast<size_t>(m)] =
          t[static_cast<size_t>(x)][static_cast<size_t>(m + 1)] -
          t[static_cast<size_t>(x - m)][static_cast<size_t>(std::min(m + 1, n_max + 1))];
    }
  }
  std::vector<std::vector<Int>> out(static_cast<size_t>(n_max) + 1,
                                    std::vector<Int>(static_cast<size_t>(n_max) + 1));
  for (int n = 1; n <= n_max; ++n)
    for (int bound = 0; bound <= n_max; ++bound)
      out[static_cast<size_t>(n)][static_cast<size_t>(bound)] =
          bound + 1 <= n_max + 1 ? -t[static_cast<size_t>(n)][static_cast<size_t>(bound + 1)] : Int(0);
  return out;
}

Int distinct_parity(int n, int bound) {
  if (n < 1) throw std::invalid_argument("distinct_parity: n must be >= 1");
  require_nonneg(bound, "bound");
  if (bound >= n) return 0;
  return distinct_parity_table(n)[static_cast<size_t>(n)][static_cast<size_t>(bound)];
}

Int distinct_parity_enum(int n, int bound, int cap) {
  if (n < 1) throw std::invalid_argument("distinct_parity_enum: n must be >= 1");
  Int acc = 0;
  enumerate_partitions(
      n,
      [&](std::span<const int> parts) {
        for (size_t i = 0; i < parts.size(); ++i) {
          if (parts[i] < bound + 1) return;
          if (i > 0 && parts[i] == parts[i - 1]) return;
        }
        if (parts.empty()) return;
        acc += parts.size() % 2 == 1 ? Int(1) : Int(-1);
      },
      cap);
  return acc;
}

namespace {

// Shared driver for the weighted counts: partitions of n that contain every
// value 1..total at least once, parts <= total. Equivalent to distributing
// extra = n - total(total+1)/2 over multiplicities; mult(v) = 1 + extra(v).
struct WeightedEnumerator {
  int total;
  int n_max;
  std::vector<int> mult;                      // current multiplicities, 1-based
  std::function<void(int n, const std::vector<int>&)> leaf;

  // Recurse over extra copies of values 1..total-1; copies of `total` are
  // handled by the caller so weights independent of mult(total) can be
  // accumulated with one pass.
  void run(int value, int used) {
    if (value == total) {
      leaf(used, mult);
      return;
    }
    for (int extra = 0;; ++extra) {
      const int next_used = used + extra * value;
      if (next_used > n_max) break;
      mult[static_cast<size_t>(value)] = 1 + extra;
      run(value + 1, next_used);
    }
    mult[static_cast<size_t>(value)] = 1;
  }
};

Int pair_weight(const std::vector<int>& mult, int n1, int n2) {
  if (n1 != n2) return Int(mult[static_cast<size_t>(n1)]) * Int(mult[static_cast<size_t>(n2)]);
  const long long t = mult[static_cast<size_t>(n1)];
  return Int(t * (t + 1) / 2);
}

}  // namespace

Int weighted_P_sum(int n1, int n2, int n) {
  if (n1 < 1 || n2 < 1) throw std::invalid_argument("weighted_P_sum: n1, n2 must be >= 1");
  if (n < 1) throw std::invalid_argument("weighted_P_sum: n must be >= 1");
  const int total = n1 + n2;
  const long long staircase = static_cast<long long>(total) * (total + 1) / 2;
  if (staircase > n) return 0;
  Int acc = 0;
  WeightedEnumerator enumerator{total, n, std::vector<int>(static_cast<size_t>(total) + 1, 1), {}};
  enumerator.leaf = [&](int used, const std::vector<int>& mult) {
    // remaining weight must be taken as extra copies of `total`
    const int rest = n - used;
    if (rest % total != 0) return;
    auto with_top = mult;
    with_top[static_cast<size_t>(total)] += rest / total;
    acc += pair_weight(with_top, n1, n2);
  };
  enumerator.run(1, static_cast<int>(staircase));
  return acc;
}

std::vector<Int> alternating_weighted_P_table(int n_max) {
  require_nonneg(n_max, "n_max");
  std::vector<Int> out(static_cast<size_t>(n_max) + 1);
  for (int total = 2; static_cast<long long>(total) * (total + 1) / 2 <= n_max; ++total) {
    const int staircase = total * (total + 1) / 2;
    const bool positive = total % 2 == 0;  // sign (-1)^(n1+n2) = (-1)^total
    // weight over all ordered pairs (n1, n2 = total - n1), maintained
    // incrementally: bumping mult(v) by one changes it by 2*mult(total-v),
    // or by mult(v)+1 on the diagonal where the triangular weight applies.
    // mult(total) never enters, so extra copies of `total` reuse it.
    std::vector<long long> mult(static_cast<size_t>(total) + 1, 1);
    long long weight = total - 1;  // all multiplicities 1
    auto recurse = [&](auto&& self, int value, int used) -> void {
      if (value == total) {
        const Int contribution = positive ? Int(weight) : Int(-weight);
        for (int n = used; n <= n_max; n += total) out[static_cast<size_t>(n)] += contribution;
        return;
      }
      self(self, value + 1, used);  // no extra copies of `value`
      const int partner = total - value;
      int extra = 0;
      while (used + (extra + 1) * value <= n_max) {
        ++extra;
        weight += partner == value ? mult[static_cast<size_t>(value)] + 1
                                   : 2 * mult[static_cast<size_t>(partner)];
        mult[static_cast<size_t>(value)] += 1;
        self(self, value + 1, used + extra * value);
      }
      while (mult[static_cast<size_t>(value)] > 1) {
        mult[static_cast<size_t>(value)] -= 1;
        weight -= partner == value ? mult[static_cast<size_t>(value)] + 1
                                   : 2 * mult[static_cast<size_t>(partner)];
      }
    };
    recurse(recurse, 1, staircase);
  }
  return out;
}

std::vector<std::string> stat_table_names() {
  return {"p", "d", "sigma1", "p2", "N2", "M2", "spt", "S", "b2"};
}

bool is_stat_table_name(std::string_view name) {
  for (const auto& known : stat_table_names())
    if (name == known) return true;
  return false;
}

StatTable build_stat_table(std::string_view name, int n_max) {
  require_nonneg(n_max, "n_max");
  StatTable table;
  table.name = std::string(name);
  if (name == "p") {
    table.values = partition_table(n_max);
  } else if (name == "d") {
    table.first_index = 1;
    table.values = divisor_count_table(n_max);
  } else if (name == "sigma1") {
    table.first_index = 1;
    table.values = sigma1_table(n_max);
  } else if (name == "p2") {
    table.values = p2_table(n_max);
  } else if (name == "N2") {
    table.values = rank_moment2_table(n_max);
  } else if (name == "M2") {
    table.values = crank_moment2_table(n_max);
  } else if (name == "spt") {
    table.first_index = 1;
    const auto m2 = crank_moment2_table(n_max);
    const auto n2 = rank_moment2_table(n_max);
    table.values.resize(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
      table.values[static_cast<size_t>(n)] =
          (m2[static_cast<size_t>(n)] - n2[static_cast<size_t>(n)]).half_exact();
  } else if (name == "S") {
    const auto p = partition_table(n_max);
    const auto p2 = p2_table(n_max);
    const auto n2 = rank_moment2_table(n_max);
    table.values.resize(static_cast<size_t>(n_max) + 1);
    for (int n = 0; n <= n_max; ++n)
      table.values[static_cast<size_t>(n)] = p2[static_cast<size_t>(n)] -
                                             Int(n) * p[static_cast<size_t>(n)] -
                                             n2[static_cast<size_t>(n)].half_exact();
  } else if (name == "b2") {
    table.first_index = 1;
    table.values = b2_table(n_max);
  } else {
    throw std::invalid_argument("unknown sequence name: " + std::string(name));
  }
  return table;
}

}  // namespace qtails
