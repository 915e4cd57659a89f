#pragma once

#include "qtails/checked_int.hpp"

#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

// Enumeration- and recurrence-based partition statistics. Everything here is
// deliberately independent of the series module so the two can serve as
// cross-checks of one another.
namespace qtails {

// Full enumeration visits every partition of n; kept behind a cap because
// p(n) grows super-polynomially (p(40) = 37338 partitions).
inline constexpr int kDefaultEnumerationCap = 40;

using PartitionVisitor = std::function<void(std::span<const int>)>;

// Visits every partition of n exactly once as a non-increasing part list, in
// lexicographically decreasing order ([4], [3,1], [2,2], [2,1,1], [1,1,1,1]).
void enumerate_partitions(int n, const PartitionVisitor& visit,
                          int cap = kDefaultEnumerationCap);

// p(n) for n = 0..n_max via Euler's pentagonal recurrence.
std::vector<Int> partition_table(int n_max);
Int p_of(int n);

// p(m, n): partitions of n with exactly m parts. Table is indexed [m][n].
std::vector<std::vector<Int>> exact_part_count_table(int n_max);
Int p_exact_parts(int m, int n);

// Partitions of n with all parts <= bound. Table indexed [bound][n].
std::vector<std::vector<Int>> parts_at_most_table(int n_max);
Int p_parts_at_most(int n, int bound);

// f(n, N) = p(n) - #partitions of n with parts <= N; zero whenever N >= n.
Int f_of(int n, int bound);

// p2(n) = sum_m m^2 p(m, n).
std::vector<Int> p2_table(int n_max);
Int p2_of(int n);

// Second rank moment N2(n) = sum over partitions of (largest - #parts)^2.
// The table route is a DP over the joint (largest part, #parts) distribution;
// the _enum route recomputes by full enumeration for cross-checking.
std::vector<Int> rank_moment2_table(int n_max);
Int rank_moment2(int n);
Int rank_moment2_enum(int n, int cap = kDefaultEnumerationCap);

// Crank of a non-increasing part list: the largest part when no part equals
// 1, otherwise (#parts greater than omega) - omega with omega = #ones.
Int crank_of(std::span<const int> parts);

// Second crank moment. M2(n) is 2*n*p(n); the enumeration oracle sums
// crank^2 and matches it for n >= 2 (n = 1 is the known degenerate case).
std::vector<Int> crank_moment2_table(int n_max);
Int M2_of(int n);
Int crank_moment2_enum(int n, int cap = kDefaultEnumerationCap);

// spt(n): total multiplicity of smallest parts over all partitions of n.
// Table route: DP over partitions with bounded-below parts; _enum route is
// direct enumeration.
std::vector<Int> spt_table(int n_max);
Int spt_enum(int n, int cap = kDefaultEnumerationCap);

// Divisor statistics by trial division / sieving.
std::vector<Int> divisor_count_table(int n_max);  // d(n), d(0) = 0
std::vector<Int> sigma1_table(int n_max);         // sigma_1(n), 0 at n = 0
Int d_of(int n);
Int sigma1_of(int n);
int g_of(int n, int bound);                       // #divisors of n that are <= bound
std::vector<std::vector<int>> g_table(int n_max); // [n][N], N clamped at n_max

// b2(n): partitions of n using exactly two distinct part values.
std::vector<Int> b2_table(int n_max);
Int b2_of(int n);
Int b2_enum(int n, int cap = kDefaultEnumerationCap);

// Signed count D_odd(n, N) - D_even(n, N) over partitions of n into distinct
// parts all >= N+1, by parity of the number of parts.
std::vector<std::vector<Int>> distinct_parity_table(int n_max);  // [n][N]
Int distinct_parity(int n, int bound);
Int distinct_parity_enum(int n, int bound, int cap = kDefaultEnumerationCap);

// Weighted count over partitions of n that use every value 1..n1+n2 at least
// once with no part exceeding n1+n2: each partition contributes
// mult(n1)*mult(n2) when n1 != n2, and t(t+1)/2 with t = mult(n1) when
// n1 == n2 (the convention forced by the generating function; the equal-index
// case needs the triangular weight, not t^2).
Int weighted_P_sum(int n1, int n2, int n);

// sum over ordered pairs n1, n2 >= 1 of (-1)^(n1+n2) * weighted_P_sum, as a
// table in n. Pairs with 1+2+...+(n1+n2) > n contribute nothing.
std::vector<Int> alternating_weighted_P_table(int n_max);

// Named integer sequence with its first meaningful index (emission starts
// there; storage always starts at 0 with the documented convention value).
struct StatTable {
  std::string name;
  int first_index = 0;
  std::vector<Int> values;
};

// Known names: p, d, sigma1, p2, N2, M2, spt, S, b2.
std::vector<std::string> stat_table_names();
bool is_stat_table_name(std::string_view name);
StatTable build_stat_table(std::string_view name, int n_max);

}  // namespace qtails
