#include "richman/oracle.hpp"

#include <algorithm>
#include <limits>
#include <string>

namespace richman {

Oracle::Oracle(TotalBudget tb, std::optional<int> max_winning_bid_slack)
    : tb_(tb), slack_(max_winning_bid_slack) {
  rows_.push_back({std::vector<Score>(tb.value() + 1, 0),
                   std::vector<Score>(tb.value() + 1, 0)});
}

int Oracle::MaxBid(int own_budget, int opponent_budget) const {
  if (!slack_) return own_budget;
  return std::min(own_budget, opponent_budget + *slack_);
}

BidMatrix Oracle::MatrixFrom(const Row& prev, int heap, int p,
                             Side marker) const {
  const int q = tb() - p;
  const int max_l = MaxBid(p, q);
  const int max_r = MaxBid(q, p);

  BidMatrix m;
  m.heap = heap;
  m.left_budget = p;
  m.marker = marker;
  m.entries.assign(max_r + 1, std::vector<Score>(max_l + 1, 0));
  for (int r = 0; r <= max_r; ++r) {
    for (int l = 0; l <= max_l; ++l) {
      Score v;
      if (marker == Side::kLeft) {
        if (l > r) {
          v = 1 + prev.with_marker[p - l];
        } else if (l == r) {
          v = 1 + prev.without_marker[p - l];  // marker goes to Right
        } else {
          v = -1 + prev.with_marker[p + r];
        }
      } else {
        if (l > r) {
          v = 1 + prev.without_marker[p - l];
        } else if (l == r) {
          v = -1 + prev.with_marker[p + r];  // marker goes to Left
        } else {
          v = -1 + prev.without_marker[p + r];
        }
      }
      m.entries[r][l] = v;
    }
  }

  m.column_mins.assign(max_l + 1, std::numeric_limits<Score>::max());
  m.row_maxes.assign(max_r + 1, std::numeric_limits<Score>::min());
  for (int r = 0; r <= max_r; ++r) {
    for (int l = 0; l <= max_l; ++l) {
      m.column_mins[l] = std::min(m.column_mins[l], m.entries[r][l]);
      m.row_maxes[r] = std::max(m.row_maxes[r], m.entries[r][l]);
    }
  }
  m.maximin = *std::max_element(m.column_mins.begin(), m.column_mins.end());
  m.minimax = *std::min_element(m.row_maxes.begin(), m.row_maxes.end());
  return m;
}

const Oracle::Row& Oracle::RowLocked(int heap) {
  while (static_cast<int>(rows_.size()) <= heap) {
    const int x = static_cast<int>(rows_.size());
    // Copy: push_back below may reallocate.
    const Row prev = rows_.back();
    Row next;
    next.with_marker.resize(tb() + 1);
    next.without_marker.resize(tb() + 1);
    for (int p = 0; p <= tb(); ++p) {
      next.with_marker[p] = MatrixFrom(prev, x, p, Side::kLeft).maximin;
      next.without_marker[p] = MatrixFrom(prev, x, p, Side::kRight).maximin;
    }
    rows_.push_back(std::move(next));
  }
  return rows_[heap];
}

Score Oracle::value(int heap, int left_budget, Side marker) {
  return value(make_position(tb_, heap, left_budget, marker));
}

Score Oracle::value(const RichmanPosition& pos) {
  if (pos.tb() != tb_) {
    throw Error(ErrorKind::kOutOfRange, "position and oracle disagree on tb");
  }
  std::lock_guard<std::mutex> lock(mu_);
  const Row& row = RowLocked(pos.heap());
  return pos.marker() == Side::kLeft ? row.with_marker[pos.left_budget()]
                                     : row.without_marker[pos.left_budget()];
}

BidMatrix Oracle::bid_matrix(const RichmanPosition& pos) {
  if (pos.tb() != tb_) {
    throw Error(ErrorKind::kOutOfRange, "position and oracle disagree on tb");
  }
  if (pos.heap() < 1) {
    throw Error(ErrorKind::kGameAlreadyOver, "no bidding on an empty heap");
  }
  std::lock_guard<std::mutex> lock(mu_);
  const Row prev = RowLocked(pos.heap() - 1);
  return MatrixFrom(prev, pos.heap(), pos.left_budget(), pos.marker());
}

Score oracle_value(TotalBudget tb, const RichmanPosition& pos) {
  return Oracle(tb).value(pos);
}

BidMatrix bid_matrix(TotalBudget tb, const RichmanPosition& pos) {
  return Oracle(tb).bid_matrix(pos);
}

PlayTrace replay(TotalBudget tb, const RichmanPosition& start,
                 const std::vector<std::pair<int, int>>& bids) {
  if (start.tb() != tb) {
    throw Error(ErrorKind::kOutOfRange, "start position disagrees on tb");
  }
  PlayTrace trace{{}, start, 0};
  RichmanPosition pos = start;
  for (std::size_t i = 0; i < bids.size(); ++i) {
    if (pos.heap() < 1) {
      throw Error(ErrorKind::kGameAlreadyOver,
                  "bid pair " + std::to_string(i) + " after the heap emptied",
                  i);
    }
    BidResolution res;
    try {
      res = classify_bid(pos, bids[i].first, bids[i].second);
    } catch (const Error& e) {
      throw Error(e.kind(), "bid pair " + std::to_string(i) + ": " + e.what(),
                  i);
    }
    const Score removal = WinningSide(res.bid.winner) == Side::kLeft ? 1 : -1;
    trace.steps.push_back({pos, res.bid, removal});
    trace.utility += removal;
    pos = make_position(tb, pos.heap() - 1, res.next_left_budget,
                        res.next_marker);
  }
  trace.final_position = pos;
  return trace;
}

}  // namespace richman
