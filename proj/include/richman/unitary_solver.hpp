#pragma once

#include <span>
#include <vector>

#include "richman/core.hpp"

namespace richman {

struct EquilibriumCell {
  Score value = 0;
  /// Sorted by (left_bid, right_bid). Empty only on the empty heap.
  std::vector<BidPair> equilibrium_bids;
  std::optional<BidPair> canonical_bid;
};

/// Equilibrium values of unitary BCS (subtract one pebble, bid set 0..tb).
/// Only marker-Left values are stored; marker-Right values come from the
/// zero-sum flip o_p(x) = -o^_{tb-p}(x).
class UnitaryTable {
 public:
  UnitaryTable(TotalBudget tb, std::vector<std::vector<Score>> rows);

  int tb() const { return tb_.value(); }
  int x_max() const { return static_cast<int>(rows_.size()) - 1; }

  /// o^_p(x): Left holds the marker and p dollars.
  Score with_marker(int x, int p) const;
  /// o_p(x): Left holds p dollars, Right holds the marker.
  Score without_marker(int x, int p) const;

  std::span<const Score> row(int x) const;
  const std::vector<std::vector<Score>>& rows() const { return rows_; }

  /// Value and equilibrium bids of (x, p^).
  EquilibriumCell cell(int x, int p) const;

 private:
  void CheckIndex(int x, int p) const;

  TotalBudget tb_;
  std::vector<std::vector<Score>> rows_;
};

/// One step of the reduced recursion: row x from row x-1 (both marker-Left).
/// Only ties and strict Right wins are considered; Left's bid is capped at
/// min(p, q) so a tie is always available to Right.
std::vector<Score> next_row(std::span<const Score> prev);

UnitaryTable solve(TotalBudget tb, int x_max);

Score value(const UnitaryTable& table, const RichmanPosition& pos);

/// All equilibrium bid pairs of the reduced form at `pos`. For a
/// Right-marker position the bids are mirrored from (x, q^).
std::vector<BidPair> equilibrium_bids(const UnitaryTable& table,
                                      const RichmanPosition& pos);

/// 1 - o^_{q+bid}(x-1): the outcome when both sides bid `bid` at (x, p^)
/// and play continues in equilibrium.
Score tie_conditioned_value(const UnitaryTable& table,
                            const RichmanPosition& pos, int bid);

/// Smallest bid of the marker holder that attains the maximin.
int holder_canonical_bid(const UnitaryTable& table, int x, int holder_budget);

/// Smallest bid of the non-holder that attains the minimax over the full
/// bid matrix, i.e. a bid that guarantees the equilibrium value without
/// seeing the holder's bid.
int opponent_canonical_bid(const UnitaryTable& table, int x,
                           int holder_budget);

struct LimitRows {
  int tb = 0;
  std::vector<Score> even_row;  // indexed by p
  std::vector<Score> odd_row;
  /// Smallest x with row(y) == row(y + 2) for every y in [x, bound + 1].
  int x_star = 0;
  int bound = 0;
};

/// Streams rows up to bound + 3 keeping three rows in memory. Throws
/// kConvergenceBoundExceeded unless rows bound/bound+2 and
/// bound+1/bound+3 coincide.
LimitRows limit_rows(TotalBudget tb);

}  // namespace richman
