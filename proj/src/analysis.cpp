#include "richman/analysis.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <tuple>

namespace richman {

namespace {

// A cell check returns an empty string when it holds, otherwise the values
// that break it.
using CellCheck = std::function<std::string(const UnitaryTable&, int x, int p)>;

std::string Hat(int p, int x, Score v) {
  return "o^_" + std::to_string(p) + "(" + std::to_string(x) + ")=" +
         std::to_string(v);
}
std::string Plain(int p, int x, Score v) {
  return "o_" + std::to_string(p) + "(" + std::to_string(x) + ")=" +
         std::to_string(v);
}

struct NamedCheck {
  const char* name;
  CellCheck check;
};

std::vector<NamedCheck> Checks() {
  std::vector<NamedCheck> out;
  out.push_back({"budget-monotonicity", [](const UnitaryTable& t, int x, int p) {
    if (p == 0) return std::string();
    const Score a = t.with_marker(x, p), b = t.with_marker(x, p - 1);
    if (a >= b) return std::string();
    return Hat(p, x, a) + " < " + Hat(p - 1, x, b);
  }});
  out.push_back({"tie-monotonicity", [](const UnitaryTable& t, int x, int p) {
    if (x == 0) return std::string();
    const int q = t.tb() - p;
    for (int l = 1; l <= std::min(p, q); ++l) {
      const Score a = 1 - t.with_marker(x - 1, q + l);
      const Score b = 1 - t.with_marker(x - 1, q + l - 1);
      if (a > b) {
        return "tie " + std::to_string(l) + " gives " + std::to_string(a) +
               ", tie " + std::to_string(l - 1) + " gives " + std::to_string(b);
      }
    }
    return std::string();
  }});
  out.push_back({"marker-inequalities", [](const UnitaryTable& t, int x, int p) {
    const Score hat = t.with_marker(x, p), plain = t.without_marker(x, p);
    if (plain <= hat && hat <= plain + 2) return std::string();
    return Hat(p, x, hat) + ", " + Plain(p, x, plain);
  }});
  out.push_back({"marker-dominance", [](const UnitaryTable& t, int x, int p) {
    const int q = t.tb() - p;
    const Score hat = t.with_marker(x, p);
    for (int l = 0; l <= p; ++l) {
      const Score other = -t.with_marker(x, q + l);
      if (hat < other) {
        return Hat(p, x, hat) + " < -" + Hat(q + l, x, -other);
      }
    }
    return std::string();
  }});
  out.push_back({"marker-worth", [](const UnitaryTable& t, int x, int p) {
    if (p == t.tb()) return std::string();
    const Score hat = t.with_marker(x, p), next = t.without_marker(x, p + 1);
    if (hat <= next) return std::string();
    return Hat(p, x, hat) + " > " + Plain(p + 1, x, next);
  }});
  out.push_back({"sign-border", [](const UnitaryTable& t, int x, int p) {
    const Score v = t.with_marker(x, p);
    const bool strict = x % 2 == 1;
    const bool upper_half = 2 * p >= t.tb();
    bool ok;
    if (upper_half) {
      ok = strict ? v > 0 : v >= 0;
    } else {
      ok = strict ? v < 0 : v <= 0;
    }
    return ok ? std::string() : Hat(p, x, v);
  }});
  out.push_back({"bounded-outcome", [](const UnitaryTable& t, int x, int p) {
    const Score v = t.with_marker(x, p);
    const int lo = -(t.tb() / 2), hi = (t.tb() + 1) / 2 + 1;
    if (lo <= v && v <= hi) return std::string();
    return Hat(p, x, v) + " outside [" + std::to_string(lo) + ", " +
           std::to_string(hi) + "]";
  }});
  out.push_back({"parity", [](const UnitaryTable& t, int x, int p) {
    const Score v = t.with_marker(x, p);
    if (((v % 2) + 2) % 2 == x % 2) return std::string();
    return Hat(p, x, v);
  }});
  out.push_back({"heap-monotonicity", [](const UnitaryTable& t, int x, int p) {
    if (x < 2) return std::string();
    const Score now = t.with_marker(x, p), before = t.with_marker(x - 2, p);
    const bool ok = 2 * p >= t.tb() ? now >= before : now <= before;
    if (ok) return std::string();
    return Hat(p, x, now) + ", " + Hat(p, x - 2, before);
  }});
  out.push_back({"two-lipschitz", [](const UnitaryTable& t, int x, int p) {
    if (p == t.tb()) return std::string();
    const Score a = t.with_marker(x, p + 1), b = t.with_marker(x, p);
    if (a <= b + 2) return std::string();
    return Hat(p + 1, x, a) + " > " + Hat(p, x, b) + " + 2";
  }});
  return out;
}

}  // namespace

std::vector<InvariantReport> check_invariants(const UnitaryTable& table) {
  std::vector<InvariantReport> reports;
  for (const NamedCheck& c : Checks()) {
    InvariantReport r{c.name, table.tb(), table.x_max(), true, std::nullopt};
    for (int x = 0; x <= table.x_max() && r.passed; ++x) {
      for (int p = 0; p <= table.tb(); ++p) {
        std::string bad = c.check(table, x, p);
        if (!bad.empty()) {
          r.passed = false;
          r.counterexample = Counterexample{x, p, std::move(bad)};
          break;
        }
      }
    }
    reports.push_back(std::move(r));
  }
  return reports;
}

std::vector<InvariantReport> run_invariant_suite(TotalBudget tb, int x_max) {
  return check_invariants(solve(tb, x_max));
}

ForcedWinThreshold forced_win_threshold(int x, int q, Side marker) {
  if (x < 1) throw Error(ErrorKind::kHeapNegative, "x must be at least 1");
  if (q < 0) throw Error(ErrorKind::kBudgetOutOfRange, "q must be >= 0");
  const long long pow = 1LL << x;
  const long long t = marker == Side::kLeft
                          ? (pow - 1) * q + pow / 2 - 1
                          : (pow - 1) * (q + 1LL);
  return {x, q, marker, t};
}

namespace {

class ForcedWinSearch {
 public:
  bool Wins(int k, int p, int q, Side marker) {
    if (k == 0) return true;
    auto key = std::make_tuple(k, p, q, marker);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    bool result = false;
    for (int l = 0; l <= p && !result; ++l) {
      // Right may answer with any r <= q; Left survives only if no answer
      // takes the auction and every answer leaves a won continuation.
      bool all = true;
      for (int r = 0; r <= q && all; ++r) {
        if (r > l || (r == l && marker == Side::kRight)) {
          all = false;
        } else if (r == l) {
          all = Wins(k - 1, p - l, q + l, Side::kRight);
        } else {
          all = Wins(k - 1, p - l, q + l, marker);
        }
      }
      result = all;
    }
    memo_.emplace(key, result);
    return result;
  }

 private:
  std::map<std::tuple<int, int, int, Side>, bool> memo_;
};

}  // namespace

bool forced_win_search(int x, int p, int q, Side marker) {
  if (x < 0) throw Error(ErrorKind::kHeapNegative, "x must be >= 0");
  if (p < 0 || q < 0) {
    throw Error(ErrorKind::kBudgetOutOfRange, "budgets must be >= 0");
  }
  return ForcedWinSearch().Wins(x, p, q, marker);
}

InvariantReport verify_forced_wins(TotalBudget tb, int x) {
  InvariantReport r{"forced-win-threshold", tb.value(), x, true, std::nullopt};
  ForcedWinSearch search;
  for (Side m : {Side::kLeft, Side::kRight}) {
    for (int p = 0; p <= tb.value(); ++p) {
      const int q = tb.value() - p;
      const bool predicted = p >= forced_win_threshold(x, q, m).threshold;
      const bool found = search.Wins(x, p, q, m);
      if (predicted != found) {
        std::ostringstream os;
        os << "marker " << SideName(m) << ", q=" << q << ": threshold says "
           << (predicted ? "forced" : "not forced") << ", search says "
           << (found ? "forced" : "not forced");
        r.passed = false;
        r.counterexample = Counterexample{x, p, os.str()};
        return r;
      }
    }
  }
  return r;
}

const char* BidKindName(BidKind kind) {
  switch (kind) {
    case BidKind::kTie: return "tie";
    case BidKind::kHolderWin: return "holder-win";
    case BidKind::kOpponentWin: return "opponent-win";
  }
  return "?";
}

BidGraph bid_graph(TotalBudget tb, BidKind kind, int bid, bool reduced) {
  const int n = tb.value();
  if (bid < 0 || bid > n) {
    throw Error(ErrorKind::kInfeasibleBid,
                "bid " + std::to_string(bid) + " outside 0.." +
                    std::to_string(n));
  }
  BidGraph g{n, kind, bid, reduced, {}};
  for (int m = 0; m <= n; ++m) {
    const int opp = n - m;
    BidEdge e{m, m, false};
    switch (kind) {
      case BidKind::kTie:
        if (bid > m || bid > opp) continue;
        e.to = opp + bid;
        break;
      case BidKind::kHolderWin:
        if (bid < 1 || bid > m) continue;
        e.to = m - bid;
        e.dominated = bid > opp + 1;
        break;
      case BidKind::kOpponentWin:
        if (bid < 1 || bid > opp) continue;
        e.to = m + bid;
        e.dominated = bid > m + 1;
        break;
    }
    if (reduced && e.dominated) continue;
    g.edges.push_back(e);
  }
  return g;
}

}  // namespace richman
