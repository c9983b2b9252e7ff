#pragma once

#include <string>
#include <vector>

#include "richman/core.hpp"

namespace richman {

enum class Parity { kEven, kOdd };

constexpr Parity ParityOf(int x) { return x % 2 == 0 ? Parity::kEven : Parity::kOdd; }
constexpr Parity Complement(Parity j) {
  return j == Parity::kEven ? Parity::kOdd : Parity::kEven;
}
const char* ParityName(Parity j);

/// How "delta = 1 (mod 4)" is decided for negative odd delta in beta.
///   kNonNegative: mathematical residue, ((delta % 4) + 4) % 4 == 1.
///   kTruncated:   C++ remainder, delta % 4 is +1 or -1 (|delta| = 1 mod 4).
enum class ResidueMode { kNonNegative, kTruncated };
const char* ResidueModeName(ResidueMode mode);

/// floor((d+1)/2) if d = 0 (mod 4), ceil((d+1)/2) otherwise. d must be even.
int alpha_even(int delta);
/// ceil((d+1)/2) if d = 0 (mod 4), floor((d+1)/2) otherwise. d must be even.
int alpha_odd(int delta);
/// floor(d/2) + [d > 0] on the first residue branch, ceil(d/2) + [d > 0]
/// otherwise. d must be odd.
int beta(int delta, ResidueMode mode = ResidueMode::kNonNegative);

/// The 0-bidding automaton: node p, state j, with A(j, p) = 1 - A(j^c, tb - p).
struct AutomatonTable {
  int tb = 0;
  std::vector<Score> even_state;
  std::vector<Score> odd_state;

  Score at(Parity j, int p) const {
    return j == Parity::kEven ? even_state.at(p) : odd_state.at(p);
  }
  /// True when every entry satisfies the update rule.
  bool update_consistent() const;
};

enum class AutomatonSeed { kAlphaBeta, kFromSolverLimits };

/// kAlphaBeta: even states from alpha_even (even tb) or beta (odd tb, using
/// `mode`), odd states from the update rule. kFromSolverLimits: the solver's
/// limit rows, even heaps in the even state.
AutomatonTable automaton_fixed_point(
    TotalBudget tb, AutomatonSeed seed,
    ResidueMode mode = ResidueMode::kNonNegative);

/// Closed-form automaton whose states carry the parity of the heap they
/// bound: alpha for even tb; for odd tb the truncated-residue beta row
/// (all odd values) bounds odd heaps and its update image bounds even heaps.
AutomatonTable parity_consistent_automaton(TotalBudget tb);

/// A(parity, p) of the parity-consistent automaton. For 2p >= tb it is an
/// upper bound on o^_p(x) over heaps x of that parity, otherwise a lower one.
Score outcome_bounds(TotalBudget tb, int p, Parity parity);

/// Explicit convergence bound: 1 + (tb/2 + 1)(tb/2) - tb/2 for even tb and
/// 1 + ceil(tb/2)^2 - floor(tb/2) for odd tb.
int convergence_bound(TotalBudget tb);

struct CellDiff {
  Parity parity = Parity::kEven;
  int p = 0;
  Score expected = 0;  // automaton
  Score actual = 0;    // solver limit
};

struct AutomatonComparison {
  std::string convention;       // "alpha", "beta/non-negative", ...
  bool swapped_labels = false;  // automaton even state compared to odd heaps
  bool update_consistent = false;
  bool match = false;
  std::vector<CellDiff> diffs;
};

struct ConvergenceReport {
  int tb = 0;
  int bound = 0;
  int x_star = 0;
  bool bound_exceeded = false;
  std::string error;
  /// Some closed-form convention reproduces the limits exactly.
  bool limits_match_automaton = false;
  std::vector<AutomatonComparison> comparisons;
  /// Limits satisfy A(j, p) = 1 - A(j^c, tb - p).
  bool update_rule_closed = false;
  std::vector<CellDiff> update_rule_diffs;
};

/// Never throws on mismatch; a failing convergence check is recorded in the
/// report instead.
ConvergenceReport test_conjecture(TotalBudget tb);

}  // namespace richman
