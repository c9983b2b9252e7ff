#pragma once

#include <mutex>
#include <vector>

#include "richman/core.hpp"

namespace richman {

/// Continuation values for every bid pair at one position.
/// entries[r][l]: Right bids r (rows), Left bids l (columns).
struct BidMatrix {
  int heap = 0;
  int left_budget = 0;
  Side marker = Side::kLeft;
  std::vector<std::vector<Score>> entries;
  std::vector<Score> column_mins;  // per Left bid
  std::vector<Score> row_maxes;    // per Right bid
  Score maximin = 0;
  Score minimax = 0;
};

struct PlayStep {
  RichmanPosition position;
  BidPair bid;
  /// +1 when Left took the pebble, -1 when Right did.
  Score removal = 0;
};

struct PlayTrace {
  std::vector<PlayStep> steps;
  RichmanPosition final_position;
  Score utility = 0;
};

/// Brute-force evaluator of unitary BCS over the complete bid matrix,
/// including strict Left wins, with both marker sides computed directly.
/// Rows are memoized by heap size; safe to share between threads.
class Oracle {
 public:
  /// `max_winning_bid_slack`, when set, drops every bid larger than the
  /// opponent's budget plus that slack. Such a bid always wins strictly, so a
  /// slack of 1 removes exactly the dominated bids.
  explicit Oracle(TotalBudget tb,
                  std::optional<int> max_winning_bid_slack = std::nullopt);

  int tb() const { return tb_.value(); }

  Score value(const RichmanPosition& pos);
  Score value(int heap, int left_budget, Side marker);
  BidMatrix bid_matrix(const RichmanPosition& pos);

 private:
  struct Row {
    std::vector<Score> with_marker;     // Left holds the marker
    std::vector<Score> without_marker;  // Right holds the marker
  };

  const Row& RowLocked(int heap);
  BidMatrix MatrixFrom(const Row& prev, int heap, int p, Side marker) const;
  int MaxBid(int own_budget, int opponent_budget) const;

  TotalBudget tb_;
  std::optional<int> slack_;
  std::mutex mu_;
  std::vector<Row> rows_;
};

Score oracle_value(TotalBudget tb, const RichmanPosition& pos);
BidMatrix bid_matrix(TotalBudget tb, const RichmanPosition& pos);

/// Applies `bids` one auction at a time from `start`, removing one pebble
/// per auction. Errors carry the index of the offending bid pair.
PlayTrace replay(TotalBudget tb, const RichmanPosition& start,
                 const std::vector<std::pair<int, int>>& bids);

}  // namespace richman
