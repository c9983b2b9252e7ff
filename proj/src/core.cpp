#include "richman/core.hpp"

#include <string>

namespace richman {

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kHeapNegative: return "HeapNegative";
    case ErrorKind::kBudgetOutOfRange: return "BudgetOutOfRange";
    case ErrorKind::kInfeasibleBid: return "InfeasibleBid";
    case ErrorKind::kInvalidRuleset: return "InvalidRuleset";
    case ErrorKind::kCyclicRuleset: return "CyclicRuleset";
    case ErrorKind::kOutOfRange: return "OutOfRange";
    case ErrorKind::kConvergenceBoundExceeded: return "ConvergenceBoundExceeded";
    case ErrorKind::kParityError: return "ParityError";
    case ErrorKind::kGameAlreadyOver: return "GameAlreadyOver";
    case ErrorKind::kParse: return "Parse";
  }
  return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& message,
             std::optional<std::size_t> index)
    : std::runtime_error(std::string(ErrorKindName(kind)) + ": " + message),
      kind_(kind),
      index_(index) {}

TotalBudget::TotalBudget(int tb) : tb_(tb) {
  if (tb < 0) {
    throw Error(ErrorKind::kBudgetOutOfRange,
                "total budget must be non-negative, got " + std::to_string(tb));
  }
}

const char* SideName(Side s) { return s == Side::kLeft ? "L" : "R"; }

const char* BidWinnerName(BidWinner w) {
  switch (w) {
    case BidWinner::kLeftStrict: return "LeftStrict";
    case BidWinner::kLeftTie: return "LeftTie";
    case BidWinner::kRightStrict: return "RightStrict";
    case BidWinner::kRightTie: return "RightTie";
  }
  return "?";
}

RichmanPosition::RichmanPosition(TotalBudget tb, int heap, int left_budget,
                                 Side marker)
    : tb_(tb), heap_(heap), p_(left_budget), marker_(marker) {
  if (heap < 0) {
    throw Error(ErrorKind::kHeapNegative,
                "heap must be non-negative, got " + std::to_string(heap));
  }
  if (left_budget < 0 || left_budget > tb.value()) {
    throw Error(ErrorKind::kBudgetOutOfRange,
                "left budget " + std::to_string(left_budget) +
                    " outside 0.." + std::to_string(tb.value()));
  }
}

std::string ToString(const RichmanPosition& pos) {
  // (x, p^) when Left holds the marker, (x, p) otherwise.
  std::string s = "(" + std::to_string(pos.heap()) + ", " +
                  std::to_string(pos.left_budget());
  if (pos.marker() == Side::kLeft) s += "^";
  return s + ")";
}

RichmanPosition make_position(TotalBudget tb, int heap, int p, Side marker) {
  return RichmanPosition(tb, heap, p, marker);
}

BidResolution classify_bid(const RichmanPosition& pos, int left_bid,
                           int right_bid) {
  const int p = pos.left_budget();
  const int q = pos.right_budget();
  if (left_bid < 0 || left_bid > p) {
    throw Error(ErrorKind::kInfeasibleBid,
                "Left bid " + std::to_string(left_bid) + " outside 0.." +
                    std::to_string(p));
  }
  if (right_bid < 0 || right_bid > q) {
    throw Error(ErrorKind::kInfeasibleBid,
                "Right bid " + std::to_string(right_bid) + " outside 0.." +
                    std::to_string(q));
  }

  BidResolution res;
  res.bid.left_bid = left_bid;
  res.bid.right_bid = right_bid;
  res.next_marker = pos.marker();
  if (left_bid > right_bid) {
    res.bid.winner = BidWinner::kLeftStrict;
  } else if (right_bid > left_bid) {
    res.bid.winner = BidWinner::kRightStrict;
  } else {
    res.bid.winner = pos.marker() == Side::kLeft ? BidWinner::kLeftTie
                                                 : BidWinner::kRightTie;
    res.next_marker = Other(pos.marker());
  }
  res.next_left_budget = WinningSide(res.bid.winner) == Side::kLeft
                             ? p - left_bid
                             : p + right_bid;
  return res;
}

}  // namespace richman
