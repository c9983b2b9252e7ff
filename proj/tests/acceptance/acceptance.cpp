// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "richman/analysis.hpp"
#include "richman/automaton.hpp"
#include "richman/general_game.hpp"
#include "richman/io.hpp"
#include "richman/oracle.hpp"
#include "richman/unitary_solver.hpp"

using namespace richman;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;

  void Require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      detail = what;
    }
  }
};

using Clock = std::chrono::steady_clock;

double Millis(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

std::vector<Score> Reversed(std::span<const Score> row) {
  return {row.rbegin(), row.rend()};
}

std::vector<Score> Sorted(std::vector<Score> v) {
  std::sort(v.begin(), v.end());
  return v;
}

Outcome GoldenTb5() {
  Outcome o;
  auto start = Clock::now();
  UnitaryTable t = solve(TotalBudget(5), 2);
  const double ms = Millis(start);
  o.Require(Reversed(t.row(0)) == std::vector<Score>{0, 0, 0, 0, 0, 0}, "row 0");
  o.Require(Reversed(t.row(1)) == std::vector<Score>{1, 1, 1, -1, -1, -1}, "row 1");
  o.Require(Reversed(t.row(2)) == std::vector<Score>{2, 2, 0, 0, 0, -2}, "row 2");
  o.Require(t.with_marker(2, 1) == 0, "o^_1(2) != 0");
  o.Require(ms < 1.0, "took " + std::to_string(ms) + " ms");
  return o;
}

Outcome GoldenTb9Matrices() {
  Outcome o;
  auto start = Clock::now();
  TotalBudget tb(9);
  BidMatrix first = bid_matrix(tb, RichmanPosition(tb, 9, 6, Side::kLeft));
  o.Require(first.entries == std::vector<std::vector<Score>>{{1, 1, 1, 1, -1, -1, -3},
                                                            {1, 1, 1, 1, -1, -1, -3},
                                                            {3, 3, 1, 1, -1, -1, -3},
                                                            {3, 3, 3, -1, -1, -1, -3}},
            "first table entries");
  o.Require(first.row_maxes == std::vector<Score>{1, 1, 3, 3}, "first max column");
  o.Require(first.column_mins == std::vector<Score>{1, 1, 1, -1, -1, -1, -3},
            "first min row");
  o.Require(first.maximin == 1 && first.minimax == 1, "first equilibrium");
  // The second table is the matrix of heap 5 with Left holding 4 dollars and
  // the marker; heap 9 with the same split and Right holding the marker has
  // the same shape and equilibrium.
  BidMatrix second = bid_matrix(tb, RichmanPosition(tb, 5, 4, Side::kLeft));
  o.Require(second.entries == std::vector<std::vector<Score>>{{1, 1, -1, -1, -1},
                                                             {-1, 1, -1, -1, -1},
                                                             {-1, -1, -1, -1, -1},
                                                             {1, 1, 1, -1, -1},
                                                             {1, 1, 1, 1, -3},
                                                             {3, 3, 3, 3, 3}},
            "second table entries");
  o.Require(second.column_mins == std::vector<Score>{-1, -1, -1, -1, -3},
            "second min row");
  o.Require(second.maximin == -1 && second.minimax == -1, "second equilibrium");
  BidMatrix nine = bid_matrix(tb, RichmanPosition(tb, 9, 4, Side::kRight));
  o.Require(nine.entries.size() == 6 && nine.entries[0].size() == 5 &&
                nine.maximin == -1 && nine.minimax == -1,
            "heap 9 marker-Right equilibrium");
  const double ms = Millis(start);
  o.Require(ms < 1000.0, "took " + std::to_string(ms) + " ms");
  return o;
}

Outcome LimitsTb8() {
  Outcome o;
  auto start = Clock::now();
  TotalBudget tb(8);
  LimitRows l = limit_rows(tb);
  o.Require(Reversed(l.even_row) == std::vector<Score>{4, 4, 2, 2, 0, 0, -2, -2, -4},
            "even row");
  o.Require(Reversed(l.odd_row) == std::vector<Score>{5, 3, 3, 1, 1, -1, -1, -3, -3},
            "odd row");
  for (int p = 0; p <= 8; ++p) {
    o.Require(l.even_row[p] == alpha_even(2 * p - 8), "alpha_even at p=" + std::to_string(p));
    o.Require(l.odd_row[p] == alpha_odd(2 * p - 8), "alpha_odd at p=" + std::to_string(p));
  }
  o.Require(l.x_star <= convergence_bound(tb) + 2, "x_star " + std::to_string(l.x_star));
  o.Require(Millis(start) < 1000.0, "too slow");
  return o;
}

Outcome LimitsTb9() {
  Outcome o;
  auto start = Clock::now();
  TotalBudget tb(9);
  LimitRows l = limit_rows(tb);
  o.Require(Sorted(l.even_row) == Sorted({6, 4, 4, 2, 2, 0, -2, -2, -4, -4}),
            "even-heap multiset");
  o.Require(Sorted(l.odd_row) == Sorted({5, 5, 3, 3, 1, -1, -1, -3, -3, -5}),
            "odd-heap multiset");
  for (int p = 0; p <= 9; ++p) {
    o.Require(l.even_row[p] == 1 - l.odd_row[9 - p], "update rule at p=" + std::to_string(p));
    o.Require(l.odd_row[p] == 1 - l.even_row[9 - p], "update rule at p=" + std::to_string(p));
  }
  o.Require(Millis(start) < 1000.0, "too slow");
  return o;
}

Outcome OracleEquivalence() {
  Outcome o;
  auto start = Clock::now();
  long long cells = 0;
  for (int tb = 0; tb <= 8; ++tb) {
    TotalBudget total(tb);
    UnitaryTable t = solve(total, 40);
    Oracle oracle{total};
    for (int x = 0; x <= 40; ++x) {
      for (int p = 0; p <= tb; ++p) {
        for (Side m : {Side::kLeft, Side::kRight}) {
          RichmanPosition pos(total, x, p, m);
          ++cells;
          if (value(t, pos) != oracle.value(pos)) {
            o.Require(false, "tb " + std::to_string(tb) + " " + ToString(pos));
          }
        }
      }
    }
  }
  const double ms = Millis(start);
  o.Require(ms < 30000.0, "took " + std::to_string(ms) + " ms");
  if (o.ok) o.detail = std::to_string(cells) + " cells";
  return o;
}

Outcome InvariantSuite() {
  Outcome o;
  auto start = Clock::now();
  for (int tb = 0; tb <= 12; ++tb) {
    TotalBudget total(tb);
    for (const InvariantReport& r : run_invariant_suite(total, convergence_bound(total) + 2)) {
      o.Require(r.passed, "tb " + std::to_string(tb) + " " + r.name + ": " +
                              (r.counterexample ? r.counterexample->values : ""));
    }
  }
  const double ms = Millis(start);
  o.Require(ms < 60000.0, "took " + std::to_string(ms) + " ms");
  return o;
}

Outcome Convergence() {
  Outcome o;
  for (int tb = 0; tb <= 12; ++tb) {
    TotalBudget total(tb);
    const int b = convergence_bound(total);
    LimitRows l;
    try {
      l = limit_rows(total);
    } catch (const Error& e) {
      o.Require(false, e.what());
      continue;
    }
    o.Require(l.x_star <= b + 2, "tb " + std::to_string(tb) + " x_star " + std::to_string(l.x_star));
    UnitaryTable t = solve(total, b + 3);
    for (int x : {b, b + 1}) {
      o.Require(std::ranges::equal(t.row(x), t.row(x + 2)),
                "tb " + std::to_string(tb) + " rows " + std::to_string(x) + " and " +
                    std::to_string(x + 2));
    }
  }
  return o;
}

Outcome ForcedWins() {
  Outcome o;
  auto start = Clock::now();
  for (int x = 1; x <= 4; ++x) {
    for (int q = 0; q <= 6; ++q) {
      for (Side m : {Side::kLeft, Side::kRight}) {
        const long long t = forced_win_threshold(x, q, m).threshold;
        const std::string where = "x=" + std::to_string(x) + " q=" + std::to_string(q) +
                                  " marker " + SideName(m);
        o.Require(forced_win_search(x, static_cast<int>(t), q, m), where + ": threshold loses");
        if (t >= 1) {
          o.Require(!forced_win_search(x, static_cast<int>(t) - 1, q, m),
                    where + ": threshold - 1 wins");
        }
      }
    }
  }
  for (int q = 0; q <= 6; ++q) {
    o.Require(forced_win_threshold(2, q, Side::kLeft).threshold == 3 * q + 1, "3q+1");
    o.Require(forced_win_threshold(3, q, Side::kLeft).threshold == 7 * q + 3, "7q+3");
    o.Require(forced_win_threshold(2, q, Side::kRight).threshold == 3 * q + 3, "3q+3");
    o.Require(forced_win_threshold(3, q, Side::kRight).threshold == 7 * q + 7, "7q+7");
  }
  o.Require(Millis(start) < 10000.0, "too slow");
  return o;
}

Outcome PropertyUCounterexample() {
  Outcome o;
  std::istringstream in(
      "tb 1\n"
      "bids all\n"
      "node x1\n"
      "node x2 terminal 0\n"
      "edge R x1 x2 1\n");
  GeneralRuleset g = parse_ruleset(in);
  auto start = Clock::now();
  UReport r = check_property_U(g);
  const double ms = Millis(start);
  o.Require(!r.holds, "property U reported as holding");
  o.Require(r.violations.size() == 1, std::to_string(r.violations.size()) + " violations");
  if (r.violations.size() == 1) {
    const UViolation& v = r.violations[0];
    o.Require(v.property == UProperty::kB, std::string("property ") + UPropertyName(v.property));
    o.Require(v.node_name == "x1" && v.witness_budget == 1, "witness position");
    o.Require(v.lhs == 0 && v.rhs == 1,
              "witness " + std::to_string(v.lhs) + " < " + std::to_string(v.rhs));
  }
  o.Require(ms < 1.0, "took " + std::to_string(ms) + " ms");
  return o;
}

Outcome AlphaDuality() {
  Outcome o;
  for (int d = -100; d <= 100; d += 2) {
    o.Require(alpha_even(d) == 1 - alpha_odd(-d), "delta " + std::to_string(d));
  }
  return o;
}

Outcome ConjectureHarness() {
  Outcome o;
  std::string summary;
  for (int tb = 0; tb <= 12; ++tb) {
    ConvergenceReport r = test_conjecture(TotalBudget(tb));
    std::string matched;
    for (const AutomatonComparison& c : r.comparisons) {
      if (c.match) matched += " " + c.convention + (c.swapped_labels ? "(swapped)" : "");
    }
    std::printf("      tb=%-2d x_star=%-3d bound=%-3d update-rule=%s match:%s\n", r.tb,
                r.x_star, r.bound, r.update_rule_closed ? "closed" : "open",
                matched.empty() ? " none" : matched.c_str());
    summary += " " + std::to_string(tb) + ":" + (r.limits_match_automaton ? "match" : "mismatch");
    if (tb == 8) {
      o.Require(!r.bound_exceeded && !r.comparisons.empty() && r.comparisons.front().match,
                "tb 8 alpha does not match the limits");
    }
  }
  if (o.ok) o.detail = summary.substr(1);
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria = {
      {"golden table tb=5", GoldenTb5},
      {"golden bid matrices tb=9 x=9", GoldenTb9Matrices},
      {"limit rows tb=8", LimitsTb8},
      {"limit rows tb=9", LimitsTb9},
      {"oracle equivalence tb<=8 x<=40", OracleEquivalence},
      {"invariant suite tb<=12", InvariantSuite},
      {"convergence tb<=12", Convergence},
      {"forced-win thresholds x<=4 q<=6", ForcedWins},
      {"property U counterexample", PropertyUCounterexample},
      {"alpha duality", AlphaDuality},
      {"conjecture harness tb<=12", ConjectureHarness},
  };
  int failures = 0;
  int index = 1;
  for (const auto& [name, run] : criteria) {
    Outcome o;
    try {
      o = run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    std::printf("%s %2d %s%s%s\n", o.ok ? "PASS" : "FAIL", index++, name,
                o.detail.empty() ? "" : " -- ", o.detail.c_str());
    std::fflush(stdout);
    if (!o.ok) ++failures;
  }
  return failures == 0 ? 0 : 1;
}
