#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "richman/general_game.hpp"
#include "richman/unitary_solver.hpp"

namespace richman {
namespace {

GeneralRuleset Parse(const std::string& text) {
  std::istringstream in(text);
  return parse_ruleset(in);
}

const char* kExampleB =
    "tb 1\n"
    "bids all\n"
    "node x1\n"
    "node x2 terminal 0\n"
    "edge R x1 x2 1\n";

ErrorKind KindOf(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error";
  return ErrorKind::kParse;
}

TEST(Parse, ExampleB) {
  GeneralRuleset g = Parse(kExampleB);
  EXPECT_EQ(g.tb(), 1);
  EXPECT_EQ(g.size(), 2u);
  EXPECT_EQ(g.bid_set(), (std::vector<int>{0, 1}));
  const GameNode& x1 = g.node(g.index_of("x1"));
  ASSERT_EQ(x1.right_moves.size(), 1u);
  EXPECT_EQ(x1.right_moves[0].weight, 1);
  EXPECT_TRUE(x1.left_moves.empty());
}

TEST(Parse, ForwardReferencesAndComments) {
  GeneralRuleset g = Parse(
      "# two moves\n"
      "tb 2\n"
      "bids 0 2\n"
      "edge L a b 3   # declared before the nodes\n"
      "node a\n"
      "node b terminal -1\n");
  EXPECT_EQ(g.bid_set(), (std::vector<int>{0, 2}));
  EXPECT_EQ(g.node(g.index_of("b")).penalty, -1);
}

TEST(Parse, Errors) {
  EXPECT_EQ(KindOf([] { Parse("node a\n"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { Parse("tb 1\nnode a\nnode a\n"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { Parse("tb 1\nedge X a b 1\n"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { Parse("tb 1\nnode a\nedge L a b 1\n"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { Parse("tb 1\nfoo\n"); }), ErrorKind::kParse);
  EXPECT_EQ(KindOf([] { Parse("tb 1\nbids 0 5\nnode a\n"); }),
            ErrorKind::kInvalidRuleset);
  EXPECT_EQ(KindOf([] { Parse("tb 1\nnode a\nnode b\nedge L a b 0\nedge R b a 0\n"); }),
            ErrorKind::kCyclicRuleset);
  EXPECT_EQ(KindOf([] { Parse("tb 2\nbids 2\nnode a\nnode b\nedge L a b 1\n"); }),
            ErrorKind::kInvalidRuleset);
}

TEST(Evaluate, ExampleB) {
  GeneralRuleset g = Parse(kExampleB);
  const std::size_t x1 = g.index_of("x1");
  EXPECT_EQ(general_maximin(g, {x1, 1, Side::kLeft}), 0);
  EXPECT_EQ(general_maximin(g, {x1, 1, Side::kRight}), 1);
  EXPECT_EQ(general_minimax(g, {x1, 1, Side::kRight}), 1);
}

TEST(Evaluate, TerminalIsPenalty) {
  GeneralRuleset g = Parse("tb 3\nnode t terminal 4\n");
  GeneralValues v = evaluate(g, DeclarationOrder::kMaximin);
  for (int p = 0; p <= 3; ++p) {
    EXPECT_EQ(v.with_marker[0][p], 4);
    EXPECT_EQ(v.without_marker[0][p], 4);
  }
}

TEST(Evaluate, UnitaryEncodingMatchesSolver) {
  for (int tb = 0; tb <= 6; ++tb) {
    GeneralRuleset g = subtraction_ruleset(TotalBudget(tb), {1}, 10);
    GeneralValues full = evaluate(g, DeclarationOrder::kMaximin);
    GeneralValues mini = evaluate(g, DeclarationOrder::kMinimax);
    GeneralValues red = evaluate_reduced(g);
    UnitaryTable t = solve(TotalBudget(tb), 10);
    for (int x = 0; x <= 10; ++x) {
      for (int p = 0; p <= tb; ++p) {
        EXPECT_EQ(full.with_marker[x][p], t.with_marker(x, p));
        EXPECT_EQ(full.without_marker[x][p], t.without_marker(x, p));
        EXPECT_EQ(mini.with_marker[x][p], t.with_marker(x, p));
        EXPECT_EQ(red.with_marker[x][p], t.with_marker(x, p));
        EXPECT_EQ(red.without_marker[x][p], t.without_marker(x, p));
      }
    }
  }
  GeneralRuleset g = subtraction_ruleset(TotalBudget(5), {1}, 2);
  EXPECT_EQ(general_maximin(g, {2, 1, Side::kLeft}), 0);
  EXPECT_EQ(general_minimax(g, {2, 1, Side::kLeft}), 0);
}

TEST(Evaluate, ZeroBudgetIsAlternatingPlay) {
  // With no money the marker holder moves, and the marker passes each turn.
  GeneralRuleset g = subtraction_ruleset(TotalBudget(0), {1, 2}, 8, {0});
  GeneralValues v = evaluate(g, DeclarationOrder::kMaximin);
  // Alternating cumulative subtraction with {1, 2}: first player's best net
  // score, computed directly.
  std::vector<int> first(9, 0);
  for (int x = 1; x <= 8; ++x) {
    int best = std::numeric_limits<int>::min();
    for (int s : {1, 2})
      if (x >= s) best = std::max(best, s - first[x - s]);
    first[x] = best;
  }
  for (int x = 0; x <= 8; ++x) {
    EXPECT_EQ(v.with_marker[x][0], first[x]);
    EXPECT_EQ(v.without_marker[x][0], -first[x]);
  }
}

TEST(Evaluate, UnopposedBidder) {
  // Right cannot bid 1 with an empty purse and 0 is not allowed, so Left
  // moves unopposed.
  GeneralRuleset g = Parse("tb 1\nbids 1\nnode a\nnode b\nedge L a b 5\nedge R a b -5\n");
  GeneralValues v = evaluate(g, DeclarationOrder::kMaximin);
  EXPECT_EQ(v.with_marker[g.index_of("a")][1], 5);
  EXPECT_EQ(v.without_marker[g.index_of("a")][0], -5);
}

TEST(Evaluate, ReducedNeedsSymmetryAndZeroBid) {
  EXPECT_THROW(evaluate_reduced(Parse(kExampleB)), Error);
  EXPECT_THROW(evaluate_reduced(subtraction_ruleset(TotalBudget(3), {1}, 4, {1, 2})),
               Error);
  EXPECT_NO_THROW(evaluate_reduced(subtraction_ruleset(TotalBudget(3), {1}, 4, {0, 1})));
}

TEST(PropertyU, ExampleBHasSingleMarkerViolation) {
  UReport r = check_property_U(Parse(kExampleB));
  EXPECT_FALSE(r.holds);
  ASSERT_EQ(r.violations.size(), 1u);
  const UViolation& v = r.violations[0];
  EXPECT_EQ(v.property, UProperty::kB);
  EXPECT_EQ(v.node_name, "x1");
  EXPECT_EQ(v.witness_budget, 1);
  EXPECT_EQ(v.lhs, 0);
  EXPECT_EQ(v.rhs, 1);
  EXPECT_EQ(v.budgets, (std::vector<int>{0, 1}));
}

TEST(PropertyU, UnitaryHolds) {
  for (int tb = 0; tb <= 8; ++tb) {
    EXPECT_TRUE(check_property_U(subtraction_ruleset(TotalBudget(tb), {1}, 20)).holds) << tb;
  }
}

TEST(PropertyU, SingleTerminalHolds) {
  EXPECT_TRUE(check_property_U(Parse("tb 2\nnode t\n")).holds);
}

GeneralRuleset RandomRuleset(std::mt19937& rng, bool sign_constrained) {
  std::uniform_int_distribution<int> n_nodes(2, 6), tb_dist(0, 5), w(-3, 3),
      coin(0, 2), tau(-2, 2);
  const int n = n_nodes(rng);
  const int tb = tb_dist(rng);
  std::vector<GameNode> nodes(n);
  for (int i = 0; i < n; ++i) {
    nodes[i].name = "n" + std::to_string(i);
    for (int j = 0; j < i; ++j) {
      if (coin(rng) == 0) {
        int wl = w(rng);
        nodes[i].left_moves.push_back({static_cast<std::size_t>(j),
                                       sign_constrained ? std::abs(wl) : wl});
      }
      if (coin(rng) == 0) {
        int wr = w(rng);
        nodes[i].right_moves.push_back({static_cast<std::size_t>(j),
                                        sign_constrained ? -std::abs(wr) : wr});
      }
    }
    nodes[i].penalty = tau(rng);
  }
  std::vector<int> bids{0};
  for (int b = 1; b <= tb; ++b)
    if (coin(rng) != 0) bids.push_back(b);
  return GeneralRuleset(std::move(nodes), TotalBudget(tb), bids);
}

TEST(PropertyU, HoldsImpliesMaximinEqualsMinimax) {
  std::mt19937 rng(12345);
  int with_u = 0;
  for (int trial = 0; trial < 400; ++trial) {
    GeneralRuleset g = RandomRuleset(rng, trial % 2 == 0);
    GeneralValues lo = evaluate(g, DeclarationOrder::kMaximin);
    GeneralValues hi = evaluate(g, DeclarationOrder::kMinimax);
    for (std::size_t x = 0; x < g.size(); ++x) {
      for (int p = 0; p <= g.tb(); ++p) {
        ASSERT_LE(lo.with_marker[x][p], hi.with_marker[x][p]);
        ASSERT_LE(lo.without_marker[x][p], hi.without_marker[x][p]);
      }
    }
    if (!check_property_U(lo, g).holds) continue;
    ++with_u;
    EXPECT_EQ(lo.with_marker, hi.with_marker) << "trial " << trial;
    EXPECT_EQ(lo.without_marker, hi.without_marker) << "trial " << trial;
  }
  EXPECT_GT(with_u, 0);
}

TEST(PropertyU, SignConstrainedSubtractionGamesHold) {
  // Symmetric subtraction games with 0 as a bid: Left scores positive,
  // Right negative.
  const std::vector<std::vector<int>> sets = {{1}, {1, 2}, {2, 3}, {1, 3, 4}};
  for (const auto& s : sets) {
    for (int tb = 0; tb <= 5; ++tb) {
      GeneralRuleset g = subtraction_ruleset(TotalBudget(tb), s, 12);
      UReport r = check_property_U(g);
      EXPECT_TRUE(r.holds) << "tb " << tb << " set size " << s.size();
      if (r.holds) {
        GeneralValues red = evaluate_reduced(g);
        GeneralValues full = evaluate(g, DeclarationOrder::kMaximin);
        EXPECT_EQ(red.with_marker, full.with_marker);
        EXPECT_EQ(red.without_marker, full.without_marker);
      }
    }
  }
}

TEST(PropertyU, SignConstraintAloneDoesNotGiveU) {
  // Left scores only positive, Right only negative, 0 is a bid, yet holding
  // the marker at `a` forces Left to move into a costly reply.
  GeneralRuleset g = Parse(
      "tb 0\n"
      "node a\nnode b\nnode end\n"
      "edge L a b 1\nedge R a end -1\n"
      "edge L b end 1\nedge R b end -3\n");
  GeneralValues v = evaluate(g, DeclarationOrder::kMaximin);
  const std::size_t a = g.index_of("a");
  EXPECT_EQ(v.with_marker[a][0], -2);
  EXPECT_EQ(v.without_marker[a][0], -1);
  UReport r = check_property_U(v, g);
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.violations[0].property, UProperty::kB);
}

TEST(PropertyU, SignConstrainedFuzzFindsViolations) {
  std::mt19937 rng(99);
  int violations = 0;
  for (int trial = 0; trial < 300; ++trial) {
    if (!check_property_U(RandomRuleset(rng, true)).holds) ++violations;
  }
  EXPECT_GT(violations, 0);
}

TEST(PropertyU, ZeroSumForSymmetricRulesets) {
  GeneralRuleset g = subtraction_ruleset(TotalBudget(6), {1, 2}, 10);
  GeneralValues v = evaluate(g, DeclarationOrder::kMaximin);
  for (std::size_t x = 0; x < g.size(); ++x)
    for (int p = 0; p <= 6; ++p)
      EXPECT_EQ(v.without_marker[x][p], -v.with_marker[x][6 - p]);
}

}  // namespace
}  // namespace richman
