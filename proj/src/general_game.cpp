#include "richman/general_game.hpp"

#include <algorithm>
#include <fstream>
#include <limits>
#include <map>
#include <queue>
#include <sstream>
#include <utility>

namespace richman {

namespace {

constexpr Score kPlusInf = std::numeric_limits<Score>::max();
constexpr Score kMinusInf = std::numeric_limits<Score>::min();

std::vector<int> FeasibleBids(const std::vector<int>& bids, int budget) {
  std::vector<int> out;
  for (int b : bids) {
    if (b <= budget) out.push_back(b);
  }
  return out;
}

// A winner's choice: one of its moves, or nothing when it has none (the game
// then ends with the node's penalty).
std::vector<const Move*> Actions(const std::vector<Move>& moves) {
  std::vector<const Move*> out;
  for (const Move& m : moves) out.push_back(&m);
  if (out.empty()) out.push_back(nullptr);
  return out;
}

class Evaluator {
 public:
  Evaluator(const GeneralRuleset& g, DeclarationOrder order)
      : g_(g), order_(order) {
    vals_.tb = g.tb();
    vals_.with_marker.assign(g.size(), std::vector<Score>(g.tb() + 1, 0));
    vals_.without_marker = vals_.with_marker;
  }

  GeneralValues Run() {
    for (std::size_t x : g_.evaluation_order()) {
      for (int p = 0; p <= g_.tb(); ++p) {
        vals_.with_marker[x][p] = Solve(x, p, Side::kLeft);
        vals_.without_marker[x][p] = Solve(x, p, Side::kRight);
      }
    }
    return std::move(vals_);
  }

 private:
  Score Value(std::size_t node, int p, Side marker) const {
    return marker == Side::kLeft ? vals_.with_marker[node][p]
                                 : vals_.without_marker[node][p];
  }

  Score Continue(std::size_t x, const Move* move, int next_p,
                 Side next_marker) const {
    if (move == nullptr) return g_.node(x).penalty;
    return move->weight + Value(move->to, next_p, next_marker);
  }

  Score Outcome(std::size_t x, int p, Side marker, int l, const Move* a,
                int r, const Move* z) const {
    if (l > r || (l == r && marker == Side::kLeft)) {
      const Side next = l == r ? Side::kRight : marker;
      return Continue(x, a, p - l, next);
    }
    const Side next = l == r ? Side::kLeft : marker;
    return Continue(x, z, p + r, next);
  }

  Score Solve(std::size_t x, int p, Side marker) const {
    const GameNode& n = g_.node(x);
    if (n.left_moves.empty() && n.right_moves.empty()) return n.penalty;

    const int q = g_.tb() - p;
    const auto lbids = FeasibleBids(g_.bid_set(), p);
    const auto rbids = FeasibleBids(g_.bid_set(), q);
    const auto lacts = Actions(n.left_moves);
    const auto racts = Actions(n.right_moves);

    if (lbids.empty() && rbids.empty()) {
      throw Error(ErrorKind::kInvalidRuleset,
                  "no bid available to either side at node '" + n.name +
                      "' with budgets (" + std::to_string(p) + ", " +
                      std::to_string(q) + ")");
    }
    // One side cannot bid: the other moves unopposed and keeps the marker
    // situation unchanged.
    if (rbids.empty()) {
      Score best = kMinusInf;
      for (int l : lbids)
        for (const Move* a : lacts)
          best = std::max(best, Continue(x, a, p - l, marker));
      return best;
    }
    if (lbids.empty()) {
      Score best = kPlusInf;
      for (int r : rbids)
        for (const Move* z : racts)
          best = std::min(best, Continue(x, z, p + r, marker));
      return best;
    }

    if (order_ == DeclarationOrder::kMaximin) {
      Score best = kMinusInf;
      for (int l : lbids) {
        for (const Move* a : lacts) {
          Score worst = kPlusInf;
          for (int r : rbids)
            for (const Move* z : racts)
              worst = std::min(worst, Outcome(x, p, marker, l, a, r, z));
          best = std::max(best, worst);
        }
      }
      return best;
    }
    Score best = kPlusInf;
    for (int r : rbids) {
      for (const Move* z : racts) {
        Score worst = kMinusInf;
        for (int l : lbids)
          for (const Move* a : lacts)
            worst = std::max(worst, Outcome(x, p, marker, l, a, r, z));
        best = std::min(best, worst);
      }
    }
    return best;
  }

  const GeneralRuleset& g_;
  DeclarationOrder order_;
  GeneralValues vals_;
};

std::vector<std::size_t> TopologicalOrder(const std::vector<GameNode>& nodes) {
  const std::size_t n = nodes.size();
  std::vector<int> indegree(n, 0);
  for (const GameNode& node : nodes) {
    for (const Move& m : node.left_moves) ++indegree[m.to];
    for (const Move& m : node.right_moves) ++indegree[m.to];
  }
  std::queue<std::size_t> ready;
  for (std::size_t i = 0; i < n; ++i)
    if (indegree[i] == 0) ready.push(i);
  std::vector<std::size_t> order;
  while (!ready.empty()) {
    std::size_t i = ready.front();
    ready.pop();
    order.push_back(i);
    for (const auto* moves : {&nodes[i].left_moves, &nodes[i].right_moves}) {
      for (const Move& m : *moves)
        if (--indegree[m.to] == 0) ready.push(m.to);
    }
  }
  if (order.size() != n) {
    throw Error(ErrorKind::kCyclicRuleset, "the move graph contains a cycle");
  }
  std::reverse(order.begin(), order.end());
  return order;
}

void AddViolation(UReport& report, UProperty prop, std::size_t node,
                  const std::string& name, Side marker, int p, Score lhs,
                  Score rhs) {
  for (UViolation& v : report.violations) {
    if (v.property == prop && v.node == node && v.marker == marker) {
      v.budgets.push_back(p);
      v.witness_budget = p;
      v.lhs = lhs;
      v.rhs = rhs;
      return;
    }
  }
  report.violations.push_back({prop, node, name, marker, p, lhs, rhs, {p}});
}

}  // namespace

GeneralRuleset::GeneralRuleset(std::vector<GameNode> nodes, TotalBudget tb,
                               std::vector<int> bid_set)
    : nodes_(std::move(nodes)), tb_(tb), bids_(std::move(bid_set)) {
  std::sort(bids_.begin(), bids_.end());
  bids_.erase(std::unique(bids_.begin(), bids_.end()), bids_.end());
  if (bids_.empty()) {
    throw Error(ErrorKind::kInvalidRuleset, "the bid set is empty");
  }
  if (bids_.front() < 0 || bids_.back() > tb.value()) {
    throw Error(ErrorKind::kInvalidRuleset, "bids must lie in 0..tb");
  }
  for (const GameNode& n : nodes_) {
    for (const auto* moves : {&n.left_moves, &n.right_moves}) {
      for (const Move& m : *moves) {
        if (m.to >= nodes_.size()) {
          throw Error(ErrorKind::kInvalidRuleset,
                      "move from '" + n.name + "' to an unknown node");
        }
      }
    }
  }
  order_ = TopologicalOrder(nodes_);

  // Every state with a move on offer needs at least one bidder.
  const int min_bid = bids_.front();
  for (const GameNode& n : nodes_) {
    if (n.left_moves.empty() && n.right_moves.empty()) continue;
    for (int p = 0; p <= tb.value(); ++p) {
      if (p < min_bid && tb.value() - p < min_bid) {
        throw Error(ErrorKind::kInvalidRuleset,
                    "no bid available to either side at node '" + n.name +
                        "' with Left budget " + std::to_string(p));
      }
    }
  }
}

bool GeneralRuleset::allows_bid(int b) const {
  return std::binary_search(bids_.begin(), bids_.end(), b);
}

std::size_t GeneralRuleset::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < nodes_.size(); ++i)
    if (nodes_[i].name == name) return i;
  throw Error(ErrorKind::kOutOfRange,
              "unknown node '" + std::string(name) + "'");
}

bool GeneralRuleset::is_symmetric() const {
  for (const GameNode& n : nodes_) {
    std::vector<std::pair<std::size_t, Score>> left, right;
    for (const Move& m : n.left_moves) left.emplace_back(m.to, m.weight);
    for (const Move& m : n.right_moves) right.emplace_back(m.to, -m.weight);
    std::sort(left.begin(), left.end());
    std::sort(right.begin(), right.end());
    if (left != right) return false;
    if (n.penalty != 0) return false;
  }
  return true;
}

GeneralRuleset parse_ruleset(std::istream& in) {
  struct PendingEdge {
    Side side;
    std::string from, to;
    Score weight;
    int line;
  };
  std::vector<GameNode> nodes;
  std::map<std::string, std::size_t> index;
  std::vector<PendingEdge> edges;
  std::optional<int> tb;
  std::optional<std::vector<int>> bids;  // nullopt + all_bids => 0..tb
  bool all_bids = false;

  auto fail = [](int line, const std::string& msg) {
    return Error(ErrorKind::kParse, "line " + std::to_string(line) + ": " + msg);
  };

  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
    std::istringstream ls(raw);
    std::string keyword;
    if (!(ls >> keyword)) continue;

    if (keyword == "tb") {
      int v;
      if (!(ls >> v) || v < 0) throw fail(line_no, "expected 'tb N' with N >= 0");
      tb = v;
    } else if (keyword == "bids") {
      std::string tok;
      std::vector<int> list;
      while (ls >> tok) {
        if (tok == "all") {
          all_bids = true;
          continue;
        }
        try {
          std::size_t used = 0;
          int b = std::stoi(tok, &used);
          if (used != tok.size()) throw std::invalid_argument(tok);
          list.push_back(b);
        } catch (const std::exception&) {
          throw fail(line_no, "bad bid '" + tok + "'");
        }
      }
      if (!all_bids && list.empty()) throw fail(line_no, "empty bid list");
      bids = list;
    } else if (keyword == "node") {
      GameNode n;
      if (!(ls >> n.name)) throw fail(line_no, "expected 'node NAME'");
      std::string tok;
      if (ls >> tok) {
        if (tok != "terminal" || !(ls >> n.penalty)) {
          throw fail(line_no, "expected 'node NAME [terminal PENALTY]'");
        }
      }
      if (index.count(n.name)) throw fail(line_no, "duplicate node '" + n.name + "'");
      index[n.name] = nodes.size();
      nodes.push_back(std::move(n));
    } else if (keyword == "edge") {
      std::string side;
      PendingEdge e;
      if (!(ls >> side >> e.from >> e.to >> e.weight) ||
          (side != "L" && side != "R")) {
        throw fail(line_no, "expected 'edge L|R FROM TO WEIGHT'");
      }
      e.side = side == "L" ? Side::kLeft : Side::kRight;
      e.line = line_no;
      edges.push_back(std::move(e));
    } else {
      throw fail(line_no, "unknown keyword '" + keyword + "'");
    }
    std::string extra;
    if (keyword != "bids" && ls >> extra) {
      throw fail(line_no, "trailing token '" + extra + "'");
    }
  }

  if (!tb) throw fail(line_no, "missing 'tb' line");
  for (const PendingEdge& e : edges) {
    auto from = index.find(e.from);
    auto to = index.find(e.to);
    if (from == index.end() || to == index.end()) {
      throw fail(e.line, "edge refers to an undeclared node");
    }
    auto& moves = e.side == Side::kLeft ? nodes[from->second].left_moves
                                        : nodes[from->second].right_moves;
    moves.push_back({to->second, e.weight});
  }
  std::vector<int> bid_set;
  if (!bids || all_bids) {
    for (int b = 0; b <= *tb; ++b) bid_set.push_back(b);
  } else {
    bid_set = *bids;
  }
  return GeneralRuleset(std::move(nodes), TotalBudget(*tb), std::move(bid_set));
}

GeneralRuleset parse_ruleset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  return parse_ruleset(in);
}

GeneralRuleset subtraction_ruleset(TotalBudget tb,
                                   const std::vector<int>& subtraction_set,
                                   int x_max, std::vector<int> bid_set) {
  if (x_max < 0) throw Error(ErrorKind::kHeapNegative, "x_max must be >= 0");
  for (int s : subtraction_set) {
    if (s < 1) {
      throw Error(ErrorKind::kInvalidRuleset,
                  "subtraction values must be positive");
    }
  }
  std::vector<GameNode> nodes(x_max + 1);
  for (int x = 0; x <= x_max; ++x) {
    nodes[x].name = std::to_string(x);
    for (int s : subtraction_set) {
      if (x - s < 0) continue;
      nodes[x].left_moves.push_back({static_cast<std::size_t>(x - s), s});
      nodes[x].right_moves.push_back({static_cast<std::size_t>(x - s), -s});
    }
  }
  if (bid_set.empty()) {
    for (int b = 0; b <= tb.value(); ++b) bid_set.push_back(b);
  }
  return GeneralRuleset(std::move(nodes), tb, std::move(bid_set));
}

Score GeneralValues::at(const NodePosition& pos) const {
  if (pos.node >= with_marker.size() || pos.left_budget < 0 ||
      pos.left_budget > tb) {
    throw Error(ErrorKind::kOutOfRange, "position outside the ruleset");
  }
  return pos.marker == Side::kLeft ? with_marker[pos.node][pos.left_budget]
                                   : without_marker[pos.node][pos.left_budget];
}

GeneralValues evaluate(const GeneralRuleset& ruleset, DeclarationOrder order) {
  return Evaluator(ruleset, order).Run();
}

GeneralValues evaluate_reduced(const GeneralRuleset& ruleset) {
  if (!ruleset.is_symmetric()) {
    throw Error(ErrorKind::kInvalidRuleset,
                "the reduced recursion needs a symmetric ruleset");
  }
  if (!ruleset.allows_bid(0)) {
    throw Error(ErrorKind::kInvalidRuleset,
                "the reduced recursion needs 0 in the bid set");
  }
  const int tb = ruleset.tb();
  GeneralValues v;
  v.tb = tb;
  v.with_marker.assign(ruleset.size(), std::vector<Score>(tb + 1, 0));
  for (std::size_t x : ruleset.evaluation_order()) {
    const auto& moves = ruleset.node(x).left_moves;
    if (moves.empty()) continue;
    for (int p = 0; p <= tb; ++p) {
      const int q = tb - p;
      Score best = kMinusInf;
      for (int l : ruleset.bid_set()) {
        if (l > std::min(p, q)) break;
        for (const Move& y : moves) {
          // Right either ties l (Left moves to y, marker passes) or wins with
          // r in (l, q] and picks his own move.
          Score worst = y.weight - v.with_marker[y.to][q + l];
          for (int r : ruleset.bid_set()) {
            if (r <= l || r > q) continue;
            for (const Move& z : moves)
              worst = std::min(worst, v.with_marker[z.to][p + r] - z.weight);
          }
          best = std::max(best, worst);
        }
      }
      v.with_marker[x][p] = best;
    }
  }
  v.without_marker.assign(ruleset.size(), std::vector<Score>(tb + 1, 0));
  for (std::size_t x = 0; x < ruleset.size(); ++x)
    for (int p = 0; p <= tb; ++p)
      v.without_marker[x][p] = -v.with_marker[x][tb - p];
  return v;
}

Score general_maximin(const GeneralRuleset& ruleset, const NodePosition& pos) {
  return evaluate(ruleset, DeclarationOrder::kMaximin).at(pos);
}

Score general_minimax(const GeneralRuleset& ruleset, const NodePosition& pos) {
  return evaluate(ruleset, DeclarationOrder::kMinimax).at(pos);
}

const char* UPropertyName(UProperty prop) {
  switch (prop) {
    case UProperty::kA: return "A";
    case UProperty::kB: return "B";
    case UProperty::kC: return "C";
  }
  return "?";
}

UReport check_property_U(const GeneralValues& v, const GeneralRuleset& g) {
  UReport report;
  const int tb = g.tb();
  for (std::size_t x = 0; x < g.size(); ++x) {
    const std::string& name = g.node(x).name;
    const auto& hat = v.with_marker[x];
    const auto& plain = v.without_marker[x];
    for (Side s : {Side::kLeft, Side::kRight}) {
      const auto& vals = s == Side::kLeft ? hat : plain;
      for (int p = 1; p <= tb; ++p) {
        if (vals[p] < vals[p - 1]) {
          AddViolation(report, UProperty::kA, x, name, s, p, vals[p],
                       vals[p - 1]);
        }
      }
    }
    for (int p = 0; p <= tb; ++p) {
      if (hat[p] < plain[p]) {
        AddViolation(report, UProperty::kB, x, name, Side::kLeft, p, hat[p],
                     plain[p]);
      }
    }
    for (int p = 0; p < tb; ++p) {
      if (hat[p] > plain[p + 1]) {
        AddViolation(report, UProperty::kC, x, name, Side::kLeft, p, hat[p],
                     plain[p + 1]);
      }
    }
  }
  std::stable_sort(report.violations.begin(), report.violations.end(),
                   [](const UViolation& a, const UViolation& b) {
                     return std::tie(a.property, a.node) <
                            std::tie(b.property, b.node);
                   });
  report.holds = report.violations.empty();
  return report;
}

UReport check_property_U(const GeneralRuleset& ruleset) {
  return check_property_U(evaluate(ruleset, DeclarationOrder::kMaximin),
                          ruleset);
}

}  // namespace richman
