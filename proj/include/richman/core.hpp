#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace richman {

/// Score in pebble-difference units, Left-positive.
using Score = int;

enum class ErrorKind {
  kHeapNegative,
  kBudgetOutOfRange,
  kInfeasibleBid,
  kInvalidRuleset,
  kCyclicRuleset,
  kOutOfRange,
  kConvergenceBoundExceeded,
  kParityError,
  kGameAlreadyOver,
  kParse,
};

const char* ErrorKindName(ErrorKind kind);

/// Every failure raised by the library. `index` carries the offending step
/// for errors that arise while replaying a bid sequence.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message,
        std::optional<std::size_t> index = std::nullopt);

  ErrorKind kind() const { return kind_; }
  std::optional<std::size_t> index() const { return index_; }

 private:
  ErrorKind kind_;
  std::optional<std::size_t> index_;
};

class TotalBudget {
 public:
  explicit TotalBudget(int tb);
  int value() const { return tb_; }
  friend bool operator==(TotalBudget, TotalBudget) = default;

 private:
  int tb_;
};

enum class Side { kLeft, kRight };

constexpr Side Other(Side s) {
  return s == Side::kLeft ? Side::kRight : Side::kLeft;
}
const char* SideName(Side s);

/// A heap size plus a budget partition and the marker. Right's budget is
/// always tb - left_budget; it is never stored.
class RichmanPosition {
 public:
  RichmanPosition(TotalBudget tb, int heap, int left_budget, Side marker);

  TotalBudget tb() const { return tb_; }
  int heap() const { return heap_; }
  int left_budget() const { return p_; }
  int right_budget() const { return tb_.value() - p_; }
  int budget(Side s) const { return s == Side::kLeft ? p_ : right_budget(); }
  Side marker() const { return marker_; }

  friend bool operator==(const RichmanPosition&,
                         const RichmanPosition&) = default;

 private:
  TotalBudget tb_;
  int heap_;
  int p_;
  Side marker_;
};

std::string ToString(const RichmanPosition& pos);

RichmanPosition make_position(TotalBudget tb, int heap, int p, Side marker);

enum class BidWinner { kLeftStrict, kLeftTie, kRightStrict, kRightTie };

constexpr Side WinningSide(BidWinner w) {
  return (w == BidWinner::kLeftStrict || w == BidWinner::kLeftTie)
             ? Side::kLeft
             : Side::kRight;
}
constexpr bool IsTie(BidWinner w) {
  return w == BidWinner::kLeftTie || w == BidWinner::kRightTie;
}
const char* BidWinnerName(BidWinner w);

struct BidPair {
  int left_bid = 0;
  int right_bid = 0;
  BidWinner winner = BidWinner::kLeftTie;

  friend bool operator==(const BidPair&, const BidPair&) = default;
  friend auto operator<=>(const BidPair& a, const BidPair& b) {
    if (auto c = a.left_bid <=> b.left_bid; c != 0) return c;
    return a.right_bid <=> b.right_bid;
  }
};

/// Result of one auction: who won, and the budget/marker state afterwards.
/// The heap is not touched here; the winner's move is applied by the caller.
struct BidResolution {
  BidPair bid;
  int next_left_budget = 0;
  Side next_marker = Side::kLeft;
};

/// Winner pays their bid to the loser; on a tie the marker travels with the
/// payment.
BidResolution classify_bid(const RichmanPosition& pos, int left_bid,
                           int right_bid);

}  // namespace richman
