#pragma once

#include "qtails/checked_int.hpp"
#include "qtails/series.hpp"

#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qtails {

// Shared evaluation state for one truncation order: memoized series building
// blocks and oracle tables. Producers pull what they need lazily, so a check
// only pays for the machinery it actually uses.
class EvalContext {
 public:
  explicit EvalContext(int order);
  int order() const { return order_; }

  // series-side building blocks
  const Series& euler();            // (q; q)_inf
  const Series& inv_euler();        // 1/(q; q)_inf
  const Series& poch(int k);        // (q; q)_k
  const Series& inv_poch(int k);    // 1/(q; q)_k
  const Series& lambert(int upper); // sum_{i<=upper} q^i/(1-q^i)
  const Series& tail_product(int n);// (q^{n+1}; q)_inf
  // dual-number blocks at b = 1 + eps
  const DualSeries& dual_poch_shifted(int n);      // (bq; q)_n
  const DualSeries& dual_inv_poch_shifted(int n);  // 1/(bq; q)_n
  const DualSeries& dual_poch_plain(int n);        // (b; q)_n

  // oracle-side tables (all indexed 0..order)
  const std::vector<Int>& p();
  const std::vector<Int>& p2();
  const std::vector<Int>& n2();
  const std::vector<Int>& m2();
  const std::vector<Int>& d();
  const std::vector<Int>& sigma1();
  const std::vector<Int>& b2();
  const std::vector<Int>& spt();
  const std::vector<Int>& alternating_p();
  const std::vector<std::vector<Int>>& f2d();     // [bound][k]
  const std::vector<std::vector<int>>& g2d();     // [n][bound]
  const std::vector<std::vector<Int>>& parity2d();// [n][bound]

  // generic memo for derived series shared between catalog entries
  const Series& memo_series(const std::string& key, const std::function<Series()>& make);

 private:
  int order_;
  std::optional<Series> euler_, inv_euler_;
  std::vector<Series> poch_, inv_poch_, lambert_, tail_;
  std::vector<DualSeries> dual_poch_, dual_inv_poch_, dual_plain_;
  std::optional<std::vector<Int>> p_, p2_, n2_, m2_, d_, sigma1_, b2_, spt_, alt_p_;
  std::optional<std::vector<std::vector<Int>>> f2d_, parity2d_;
  std::optional<std::vector<std::vector<int>>> g2d_;
  std::map<std::string, Series> memo_;
};

enum class CheckKind { equality, inequality, congruence };

struct Producer {
  std::string name;
  std::function<std::vector<Int>(EvalContext&)> eval;  // stream for n = 0..order
};

// Pointwise relation over producer values at one exponent. Null means the
// kind default: all-equal for equality, first-two-difference-even for
// congruence.
using Relation = std::function<bool(int n, std::span<const Int>)>;

struct Component {
  std::string label;  // empty for single-component entries
  std::vector<Producer> producers;
  Relation relation;
  int min_n = 0;
};

// Test hook: adds delta to one producer's stream at one exponent before the
// comparison runs, to confirm the checker notices single-coefficient damage.
struct Mutation {
  int component = 0;
  int producer = 0;
  int exponent = 0;
  Int delta = 1;
};

struct CheckReport {
  std::string id;
  int order = 0;
  bool pass = false;
  std::optional<int> first_bad_n;
  std::string component;  // label of the offending component on failure
  std::vector<std::pair<std::string, Int>> values;  // producer values at first_bad_n
  std::vector<std::pair<std::string, std::string>> notes;
  double elapsed_ms = 0.0;
};

struct IdentityCheck {
  std::string id;
  std::string statement;  // human-readable form of the relation
  CheckKind kind = CheckKind::equality;
  int min_order = 1;
  std::function<std::vector<Component>(EvalContext&)> components;
  std::function<std::vector<std::pair<std::string, std::string>>(EvalContext&)> metrics;
};

// The fixed catalog, in presentation order. run_all reports sorted by id.
const std::vector<IdentityCheck>& catalog();
const IdentityCheck* find_check(std::string_view id);

CheckReport run_check(const std::string& id, int order);
CheckReport run_check(const std::string& id, int order, const std::optional<Mutation>& mutation);
std::vector<CheckReport> run_all(int order);

// Flattened producer streams of one entry ("label/name" naming), mainly for
// the CLI coeff: escape hatch and for stream-level tests.
std::vector<std::pair<std::string, std::vector<Int>>> entry_streams(const std::string& id, int order);
// (component label, #producers) for every component of an entry.
std::vector<std::pair<std::string, int>> entry_shape(const std::string& id, int order);

}  // namespace qtails
