#pragma once

#include <optional>
#include <string>
#include <vector>

#include "richman/core.hpp"
#include "richman/unitary_solver.hpp"

namespace richman {

struct Counterexample {
  int x = 0;
  int p = 0;
  std::string values;  // e.g. "o^_3(7)=1, o_3(7)=2"
};

struct InvariantReport {
  std::string name;
  int tb = 0;
  int x_max = 0;
  bool passed = true;
  std::optional<Counterexample> counterexample;  // set iff !passed
};

/// Checks every invariant on every cell of `table`, one report per
/// invariant in a fixed order. The first counterexample in (x, p) order is
/// kept.
std::vector<InvariantReport> check_invariants(const UnitaryTable& table);
std::vector<InvariantReport> run_invariant_suite(TotalBudget tb, int x_max);

/// Smallest Left budget that forces a win of the final x auctions against
/// an opponent holding q dollars.
struct ForcedWinThreshold {
  int x = 0;
  int q = 0;
  Side marker = Side::kLeft;
  long long threshold = 0;
};

ForcedWinThreshold forced_win_threshold(int x, int q, Side marker);

/// Exhaustive search: can Left, with p dollars against q, win each of the
/// next x auctions whatever Right bids? Works on budgets directly and does
/// not consult the solver.
bool forced_win_search(int x, int p, int q, Side marker);

/// Compares the search with the closed-form threshold at every split of tb
/// and both marker sides.
InvariantReport verify_forced_wins(TotalBudget tb, int x);

enum class BidKind { kTie, kHolderWin, kOpponentWin };
const char* BidKindName(BidKind kind);

/// Nodes are the marker holder's budget. After a tie the other player holds
/// the marker, so the edge leads to the new holder's budget.
struct BidEdge {
  int from = 0;
  int to = 0;
  bool dominated = false;
};

struct BidGraph {
  int tb = 0;
  BidKind kind = BidKind::kTie;
  int bid = 0;
  bool reduced = false;
  std::vector<BidEdge> edges;  // ordered by from
};

/// A winning bid b is dominated when it exceeds the opponent's budget by
/// more than one. `reduced` drops dominated edges.
BidGraph bid_graph(TotalBudget tb, BidKind kind, int bid, bool reduced);

}  // namespace richman
