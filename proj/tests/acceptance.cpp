// Acceptance suite: exercises the workbench end to end and prints one
// PASS/FAIL line per criterion. Exits nonzero if any criterion fails.

#include "qtails/identities.hpp"
#include "qtails/partitions.hpp"
#include "qtails/series.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <vector>

using namespace qtails;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::cout << (ok ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << label;
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

double run_suite_ms(int order, bool& all_pass) {
  const auto start = std::chrono::steady_clock::now();
  const auto reports = run_all(order);
  const auto elapsed =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  all_pass = reports.size() == 15;
  for (const auto& report : reports) all_pass = all_pass && report.pass;
  return elapsed;
}

// Streams of an entry must agree exactly at every index of the window.
bool streams_agree(const std::string& id, int order, std::string& detail) {
  const auto streams = entry_streams(id, order);
  for (int n = 0; n <= order; ++n)
    for (size_t i = 1; i < streams.size(); ++i)
      if (!(streams[i].second[static_cast<size_t>(n)] == streams[0].second[static_cast<size_t>(n)])) {
        detail = "divergence at n=" + std::to_string(n);
        return false;
      }
  return true;
}

}  // namespace

int main() {
  criterion(1, "full suite passes at order 100 in <60s and order 150 in <300s", [](std::string& d) {
    bool pass100 = false;
    bool pass150 = false;
    const double ms100 = run_suite_ms(100, pass100);
    const double ms150 = run_suite_ms(150, pass150);
    std::ostringstream os;
    os << "order 100: " << ms100 / 1000.0 << "s, order 150: " << ms150 / 1000.0 << "s";
    d = os.str();
    return pass100 && ms100 < 60'000.0 && pass150 && ms150 < 300'000.0;
  });

  criterion(2, "three-way agreement for S(n) to n=100 with S(3)=1, S(4)=4", [](std::string& d) {
    if (!streams_agree("thm1.1", 100, d)) return false;
    const auto streams = entry_streams("thm1.1", 100);
    if (streams.size() != 3) {
      d = "expected 3 producers";
      return false;
    }
    for (const auto& [name, values] : streams)
      if (!(values[3] == Int(1) && values[4] == Int(4))) {
        d = "spot values wrong for " + name;
        return false;
      }
    return true;
  });

  criterion(3, "M2+N2 <= 2 p2 and N2 <= p2 for n <= 150, spot 40+20 <= 68", [](std::string& d) {
    EvalContext ctx(150);
    for (int n = 0; n <= 150; ++n) {
      const Int m2 = ctx.m2()[static_cast<size_t>(n)];
      const Int n2 = ctx.n2()[static_cast<size_t>(n)];
      const Int p2 = ctx.p2()[static_cast<size_t>(n)];
      if (!(m2 + n2 <= Int(2) * p2 && n2 <= p2)) {
        d = "violated at n=" + std::to_string(n);
        return false;
      }
    }
    if (!(ctx.m2()[4] == Int(40) && ctx.n2()[4] == Int(20) && ctx.p2()[4] == Int(34))) {
      d = "spot values at n=4 wrong";
      return false;
    }
    return run_check("thm1.2", 150).pass;
  });

  criterion(4, "triple agreement for the weighted P identity to n=100, spots 1 and 3",
            [](std::string& d) {
              if (!streams_agree("thm1.3", 100, d)) return false;
              const auto streams = entry_streams("thm1.3", 100);
              for (const auto& [name, values] : streams)
                if (!(values[3] == Int(1) && values[4] == Int(3))) {
                  d = "spot values wrong for " + name;
                  return false;
                }
              return true;
            });

  criterion(5, "oracle equivalences (p, crank M2, spt, Lambert)", [](std::string& d) {
    const auto p = partition_table(40);
    for (int n = 0; n <= 40; ++n) {
      Int count = 0;
      enumerate_partitions(n, [&](std::span<const int>) { count += 1; });
      if (!(p[static_cast<size_t>(n)] == count)) {
        d = "p mismatch at n=" + std::to_string(n);
        return false;
      }
    }
    const auto m2 = crank_moment2_table(40);
    for (int n = 2; n <= 40; ++n)
      if (!(crank_moment2_enum(n) == m2[static_cast<size_t>(n)])) {
        d = "crank mismatch at n=" + std::to_string(n);
        return false;
      }
    const auto n2 = rank_moment2_table(40);
    for (int n = 1; n <= 40; ++n)
      if (!(spt_enum(n) == (m2[static_cast<size_t>(n)] - n2[static_cast<size_t>(n)]).half_exact())) {
        d = "spt mismatch at n=" + std::to_string(n);
        return false;
      }
    const Series lambert = lambert_partial(150, 150);
    for (int n = 1; n <= 150; ++n)
      if (!(lambert[n] == d_of(n))) {
        d = "Lambert mismatch at n=" + std::to_string(n);
        return false;
      }
    return true;
  });

  criterion(6, "divisor convolution formula for 2 <= n <= 150, spot 20 = 12-4+2*6",
            [](std::string& d) {
              EvalContext ctx(150);
              for (int n = 2; n <= 150; ++n) {
                Int conv = 0;
                for (int k = 1; k < n; ++k)
                  conv += ctx.d()[static_cast<size_t>(k)] * ctx.d()[static_cast<size_t>(n - k)];
                const Int rhs = ctx.sigma1()[static_cast<size_t>(n)] -
                                ctx.d()[static_cast<size_t>(n)] +
                                Int(2) * ctx.b2()[static_cast<size_t>(n)];
                if (!(conv == rhs)) {
                  d = "violated at n=" + std::to_string(n);
                  return false;
                }
              }
              const Int spot = sigma1_of(6) - d_of(6) + Int(2) * b2_of(6);
              if (!(spot == Int(20))) {
                d = "spot value wrong";
                return false;
              }
              return run_check("kim1.3", 150).pass;
            });

  criterion(7, "Fine specializations at b = q, q^2, q^3 (m <= 6) and the b = 1 derivative, Q = 100",
            [](std::string& d) {
              const auto report = run_check("fine2.6", 100);
              if (!report.pass) {
                d = "failed at n=" + std::to_string(*report.first_bad_n) + " [" + report.component +
                    "]";
                return false;
              }
              const auto shape = entry_shape("fine2.6", 100);
              size_t dual_components = 0;
              for (const auto& [label, producers] : shape)
                if (label.find("b=1+eps") != std::string::npos) ++dual_components;
              if (dual_components != 12) {
                d = "expected 12 dual components";
                return false;
              }
              return true;
            });

  criterion(8, "mutation sensitivity over 60 random single-coefficient flips", [](std::string& d) {
    const int order = 60;
    const Int big = Int(1LL << 60);
    std::mt19937_64 rng(0xACCE5511);
    int tried = 0;
    for (const auto& entry : catalog()) {
      const auto shape = entry_shape(entry.id, order);
      const int rounds = shape.size() > 1 ? 6 : 3;  // >= 45 total over 15 entries
      for (int round = 0; round < rounds; ++round) {
        Mutation mutation;
        mutation.component = static_cast<int>(rng() % shape.size());
        const int producers = shape[static_cast<size_t>(mutation.component)].second;
        mutation.producer = static_cast<int>(rng() % static_cast<size_t>(producers));
        const int min_n = entry.id == "kim1.3" ? 2 : 0;
        mutation.exponent = min_n + static_cast<int>(rng() % static_cast<size_t>(order - min_n + 1));
        if (entry.id == "thm1.2") {
          // push the bounded side of each inequality the wrong way
          const bool upper = mutation.producer == 1 || mutation.producer == 3 ||
                             mutation.producer == 4;
          mutation.delta = upper ? -big : big;
        } else {
          mutation.delta = rng() % 2 == 0 ? Int(1) : Int(-1);
        }
        const auto report = run_check(entry.id, order, mutation);
        ++tried;
        if (report.pass || !report.first_bad_n || *report.first_bad_n != mutation.exponent) {
          d = entry.id + " mutation at n=" + std::to_string(mutation.exponent) + " not caught";
          return false;
        }
      }
    }
    d = std::to_string(tried) + " mutations, all caught at the flipped index";
    return tried >= 50;
  });

  criterion(9, "evenness guards on N2 and M2 up to 150, with hard abort on odd halving",
            [](std::string& d) {
              const auto n2 = rank_moment2_table(150);
              const auto m2 = crank_moment2_table(150);
              for (int n = 0; n <= 150; ++n)
                if (!n2[static_cast<size_t>(n)].is_even() || !m2[static_cast<size_t>(n)].is_even()) {
                  d = "odd moment at n=" + std::to_string(n);
                  return false;
                }
              try {
                Int(7).half_exact();
                d = "odd halving did not abort";
                return false;
              } catch (const safety_error&) {
              }
              return true;
            });

  std::cout << (failures == 0 ? "acceptance suite passed" : "acceptance suite FAILED") << " ("
            << 9 - failures << "/9)" << std::endl;
  return failures == 0 ? 0 : 1;
}
