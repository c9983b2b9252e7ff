#pragma once

#include <cstddef>
#include <istream>
#include <string>
#include <string_view>
#include <vector>

#include "richman/core.hpp"

namespace richman {

/// A move edge. `weight` is the signed change to the Left-positive score
/// when the move is played, for either player.
struct Move {
  std::size_t to = 0;
  Score weight = 0;
};

struct GameNode {
  std::string name;
  std::vector<Move> left_moves;
  std::vector<Move> right_moves;
  /// Score added when the winner of an auction here has no move.
  Score penalty = 0;
};

/// Finite acyclic ruleset with per-player moves, a total budget and a bid
/// set. The constructor rejects cycles, malformed bid sets, and rulesets in
/// which some movable state admits no bid from either side.
class GeneralRuleset {
 public:
  GeneralRuleset(std::vector<GameNode> nodes, TotalBudget tb,
                 std::vector<int> bid_set);

  int tb() const { return tb_.value(); }
  std::size_t size() const { return nodes_.size(); }
  const GameNode& node(std::size_t i) const { return nodes_.at(i); }
  const std::vector<GameNode>& nodes() const { return nodes_; }
  const std::vector<int>& bid_set() const { return bids_; }
  bool allows_bid(int b) const;
  /// Throws kOutOfRange for unknown names.
  std::size_t index_of(std::string_view name) const;

  /// Successors precede predecessors.
  const std::vector<std::size_t>& evaluation_order() const { return order_; }

  /// Same move sets for both players, Right's weights the negation of
  /// Left's, and zero penalties.
  bool is_symmetric() const;

 private:
  std::vector<GameNode> nodes_;
  TotalBudget tb_;
  std::vector<int> bids_;
  std::vector<std::size_t> order_;
};

/// Line-oriented format:
///   tb N
///   bids all | bids B1 B2 ...
///   node NAME [terminal PENALTY]
///   edge L|R FROM TO WEIGHT
/// `#` starts a comment. Nodes may be referenced before they are declared.
GeneralRuleset parse_ruleset(std::istream& in);
GeneralRuleset parse_ruleset_file(const std::string& path);

/// Cumulative subtraction on heaps 0..x_max: either player removes s in
/// `subtraction_set`, scoring +s for Left and -s for Right. An empty
/// `bid_set` means 0..tb.
GeneralRuleset subtraction_ruleset(TotalBudget tb,
                                   const std::vector<int>& subtraction_set,
                                   int x_max, std::vector<int> bid_set = {});

struct NodePosition {
  std::size_t node = 0;
  int left_budget = 0;
  Side marker = Side::kLeft;
};

/// Values for every node and budget, both marker sides.
struct GeneralValues {
  int tb = 0;
  std::vector<std::vector<Score>> with_marker;     // [node][p], Left has it
  std::vector<std::vector<Score>> without_marker;  // [node][p], Right has it

  Score at(const NodePosition& pos) const;
};

enum class DeclarationOrder {
  kMaximin,  // Left declares bid and move first
  kMinimax,  // Right declares first
};

GeneralValues evaluate(const GeneralRuleset& ruleset, DeclarationOrder order);

/// Ties-and-Right-wins recursion for symmetric rulesets with 0 in the bid
/// set; marker-Right values by the zero-sum flip. Throws kInvalidRuleset
/// otherwise.
GeneralValues evaluate_reduced(const GeneralRuleset& ruleset);

Score general_maximin(const GeneralRuleset& ruleset, const NodePosition& pos);
Score general_minimax(const GeneralRuleset& ruleset, const NodePosition& pos);

enum class UProperty { kA, kB, kC };
const char* UPropertyName(UProperty prop);

/// One violated inequality at one node. (A) is checked between adjacent
/// budgets separately for each marker side. `budgets` lists every budget
/// that violates it, ascending; `witness_budget` is the last of them and
/// lhs/rhs are the values there.
///   (A) lhs = v(p),   rhs = v(p - 1)   expected lhs >= rhs
///   (B) lhs = v^(p),  rhs = v(p)       expected lhs >= rhs
///   (C) lhs = v^(p),  rhs = v(p + 1)   expected lhs <= rhs
struct UViolation {
  UProperty property = UProperty::kA;
  std::size_t node = 0;
  std::string node_name;
  Side marker = Side::kLeft;  // only meaningful for (A)
  int witness_budget = 0;
  Score lhs = 0;
  Score rhs = 0;
  std::vector<int> budgets;
};

struct UReport {
  bool holds = true;
  std::vector<UViolation> violations;
};

UReport check_property_U(const GeneralValues& maximin,
                         const GeneralRuleset& ruleset);
UReport check_property_U(const GeneralRuleset& ruleset);

}  // namespace richman
