#include "richman/unitary_solver.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <string>

#include "richman/automaton.hpp"

namespace richman {

namespace {

constexpr Score kNoOption = std::numeric_limits<Score>::max();

// Right's best reply to a holder bid `bid`, given the previous row.
// Tie: 1 - prev[q + bid]. Strict Right win with r in (bid, q]: prev[p + r] - 1.
Score ColumnMin(std::span<const Score> prev, int p, int bid) {
  const int tb = static_cast<int>(prev.size()) - 1;
  const int q = tb - p;
  Score best = 1 - prev[q + bid];
  for (int r = bid + 1; r <= q; ++r) best = std::min(best, prev[p + r] - 1);
  return best;
}

}  // namespace

UnitaryTable::UnitaryTable(TotalBudget tb, std::vector<std::vector<Score>> rows)
    : tb_(tb), rows_(std::move(rows)) {
  for (const auto& r : rows_) {
    if (static_cast<int>(r.size()) != tb.value() + 1) {
      throw Error(ErrorKind::kOutOfRange, "row length does not match tb + 1");
    }
  }
}

void UnitaryTable::CheckIndex(int x, int p) const {
  if (x < 0 || x > x_max()) {
    throw Error(ErrorKind::kOutOfRange,
                "heap " + std::to_string(x) + " outside solved range 0.." +
                    std::to_string(x_max()));
  }
  if (p < 0 || p > tb()) {
    throw Error(ErrorKind::kBudgetOutOfRange,
                "budget " + std::to_string(p) + " outside 0.." +
                    std::to_string(tb()));
  }
}

Score UnitaryTable::with_marker(int x, int p) const {
  CheckIndex(x, p);
  return rows_[x][p];
}

Score UnitaryTable::without_marker(int x, int p) const {
  CheckIndex(x, p);
  return -rows_[x][tb() - p];
}

std::span<const Score> UnitaryTable::row(int x) const {
  CheckIndex(x, 0);
  return rows_[x];
}

EquilibriumCell UnitaryTable::cell(int x, int p) const {
  CheckIndex(x, p);
  EquilibriumCell c;
  c.value = rows_[x][p];
  if (x == 0) return c;

  std::span<const Score> prev = rows_[x - 1];
  const int q = tb() - p;
  for (int bid = 0; bid <= std::min(p, q); ++bid) {
    if (ColumnMin(prev, p, bid) != c.value) continue;
    if (1 - prev[q + bid] == c.value) {
      c.equilibrium_bids.push_back({bid, bid, BidWinner::kLeftTie});
    }
    for (int r = bid + 1; r <= q; ++r) {
      if (prev[p + r] - 1 == c.value) {
        c.equilibrium_bids.push_back({bid, r, BidWinner::kRightStrict});
      }
    }
  }
  if (!c.equilibrium_bids.empty()) c.canonical_bid = c.equilibrium_bids.front();
  return c;
}

std::vector<Score> next_row(std::span<const Score> prev) {
  const int tb = static_cast<int>(prev.size()) - 1;
  // suffix[i] = min prev[i..tb]; suffix[tb + 1] is the empty minimum.
  std::vector<Score> suffix(tb + 2, kNoOption);
  for (int i = tb; i >= 0; --i) suffix[i] = std::min(suffix[i + 1], prev[i]);

  std::vector<Score> row(tb + 1);
  for (int p = 0; p <= tb; ++p) {
    const int q = tb - p;
    Score best = std::numeric_limits<Score>::min();
    for (int bid = 0; bid <= std::min(p, q); ++bid) {
      Score col = 1 - prev[q + bid];
      if (bid < q) col = std::min(col, suffix[p + bid + 1] - 1);
      best = std::max(best, col);
    }
    row[p] = best;
  }
  return row;
}

UnitaryTable solve(TotalBudget tb, int x_max) {
  if (x_max < 0) {
    throw Error(ErrorKind::kHeapNegative,
                "x_max must be non-negative, got " + std::to_string(x_max));
  }
  std::vector<std::vector<Score>> rows;
  rows.reserve(x_max + 1);
  rows.emplace_back(tb.value() + 1, 0);
  for (int x = 1; x <= x_max; ++x) rows.push_back(next_row(rows.back()));
  return UnitaryTable(tb, std::move(rows));
}

Score value(const UnitaryTable& table, const RichmanPosition& pos) {
  if (pos.tb().value() != table.tb()) {
    throw Error(ErrorKind::kOutOfRange, "position and table disagree on tb");
  }
  return pos.marker() == Side::kLeft
             ? table.with_marker(pos.heap(), pos.left_budget())
             : table.without_marker(pos.heap(), pos.left_budget());
}

std::vector<BidPair> equilibrium_bids(const UnitaryTable& table,
                                      const RichmanPosition& pos) {
  if (pos.tb().value() != table.tb()) {
    throw Error(ErrorKind::kOutOfRange, "position and table disagree on tb");
  }
  if (pos.marker() == Side::kLeft) {
    return table.cell(pos.heap(), pos.left_budget()).equilibrium_bids;
  }
  // Swap roles: Right holding q dollars and the marker is the mirror image of
  // (x, q^) with the sign of the score flipped.
  std::vector<BidPair> mirrored =
      table.cell(pos.heap(), pos.right_budget()).equilibrium_bids;
  std::vector<BidPair> out;
  out.reserve(mirrored.size());
  for (const BidPair& b : mirrored) {
    out.push_back({b.right_bid, b.left_bid,
                   b.winner == BidWinner::kLeftTie ? BidWinner::kRightTie
                                                   : BidWinner::kLeftStrict});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Score tie_conditioned_value(const UnitaryTable& table,
                            const RichmanPosition& pos, int bid) {
  if (pos.marker() != Side::kLeft) {
    throw Error(ErrorKind::kOutOfRange,
                "tie-conditioned values are defined for (x, p^) positions");
  }
  if (pos.heap() < 1) {
    throw Error(ErrorKind::kGameAlreadyOver, "no bid on an empty heap");
  }
  const int p = pos.left_budget();
  const int q = pos.right_budget();
  if (bid < 0 || bid > p || bid > q) {
    throw Error(ErrorKind::kInfeasibleBid,
                "tie at " + std::to_string(bid) + " needs bid <= min(" +
                    std::to_string(p) + ", " + std::to_string(q) + ")");
  }
  return 1 - table.with_marker(pos.heap() - 1, q + bid);
}

int holder_canonical_bid(const UnitaryTable& table, int x, int holder_budget) {
  EquilibriumCell c = table.cell(x, holder_budget);
  if (!c.canonical_bid) {
    throw Error(ErrorKind::kGameAlreadyOver, "no bid on an empty heap");
  }
  return c.canonical_bid->left_bid;
}

int opponent_canonical_bid(const UnitaryTable& table, int x,
                           int holder_budget) {
  if (x < 1) throw Error(ErrorKind::kGameAlreadyOver, "no bid on an empty heap");
  std::span<const Score> prev = table.row(x - 1);
  const int p = holder_budget;
  const int q = table.tb() - p;
  int best_bid = 0;
  Score best = kNoOption;
  for (int r = 0; r <= q; ++r) {
    Score row_max = std::numeric_limits<Score>::min();
    for (int l = 0; l <= p; ++l) {
      Score v;
      if (l > r) {
        v = 1 + prev[p - l];
      } else if (l == r) {
        v = 1 - prev[q + l];
      } else {
        v = prev[p + r] - 1;
      }
      row_max = std::max(row_max, v);
    }
    if (row_max < best) {
      best = row_max;
      best_bid = r;
    }
  }
  return best_bid;
}

LimitRows limit_rows(TotalBudget tb) {
  LimitRows out;
  out.tb = tb.value();
  out.bound = convergence_bound(tb);
  const int last = out.bound + 3;

  // ring[x % 3] holds row x; rows x - 1 and x - 2 stay available.
  std::array<std::vector<Score>, 3> ring;
  ring[0].assign(tb.value() + 1, 0);
  int last_change = -1;
  for (int x = 1; x <= last; ++x) {
    ring[x % 3] = next_row(ring[(x - 1) % 3]);
    if (x >= 2 && ring[x % 3] != ring[(x - 2) % 3]) last_change = x - 2;
  }
  if (last_change >= out.bound) {
    throw Error(ErrorKind::kConvergenceBoundExceeded,
                "tb=" + std::to_string(tb.value()) + ": rows " +
                    std::to_string(last_change) + " and " +
                    std::to_string(last_change + 2) +
                    " differ beyond the bound " + std::to_string(out.bound));
  }
  out.x_star = last_change + 1;
  const int even_x = (last % 2 == 0) ? last : last - 1;
  out.even_row = ring[even_x % 3];
  out.odd_row = ring[(even_x == last ? last - 1 : last) % 3];
  return out;
}

}  // namespace richman
