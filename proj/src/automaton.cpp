#include "richman/automaton.hpp"

#include <string>

#include "richman/unitary_solver.hpp"

namespace richman {

namespace {

int FloorDiv2(int a) { return a >= 0 ? a / 2 : -((-a + 1) / 2); }
int CeilDiv2(int a) { return -FloorDiv2(-a); }
int Mod4(int a) { return ((a % 4) + 4) % 4; }

void RequireParity(int delta, int want, const char* fn) {
  if (Mod4(delta) % 2 != want) {
    throw Error(ErrorKind::kParityError,
                std::string(fn) + " needs an " + (want ? "odd" : "even") +
                    " argument, got " + std::to_string(delta));
  }
}

AutomatonTable FromEvenState(int tb, std::vector<Score> even_state) {
  AutomatonTable a;
  a.tb = tb;
  a.even_state = std::move(even_state);
  a.odd_state.resize(tb + 1);
  for (int p = 0; p <= tb; ++p) a.odd_state[p] = 1 - a.even_state[tb - p];
  return a;
}

AutomatonComparison Compare(const std::string& convention, bool swapped,
                            const AutomatonTable& a, const LimitRows& lim) {
  AutomatonComparison c;
  c.convention = convention;
  c.swapped_labels = swapped;
  c.update_consistent = a.update_consistent();
  for (Parity heap : {Parity::kEven, Parity::kOdd}) {
    const auto& limit = heap == Parity::kEven ? lim.even_row : lim.odd_row;
    const Parity state = swapped ? Complement(heap) : heap;
    for (int p = 0; p <= a.tb; ++p) {
      if (a.at(state, p) != limit[p]) {
        c.diffs.push_back({heap, p, a.at(state, p), limit[p]});
      }
    }
  }
  c.match = c.diffs.empty();
  return c;
}

}  // namespace

const char* ParityName(Parity j) { return j == Parity::kEven ? "even" : "odd"; }

const char* ResidueModeName(ResidueMode mode) {
  return mode == ResidueMode::kNonNegative ? "non-negative" : "truncated";
}

int alpha_even(int delta) {
  RequireParity(delta, 0, "alpha_even");
  return Mod4(delta) == 0 ? FloorDiv2(delta + 1) : CeilDiv2(delta + 1);
}

int alpha_odd(int delta) {
  RequireParity(delta, 0, "alpha_odd");
  return Mod4(delta) == 0 ? CeilDiv2(delta + 1) : FloorDiv2(delta + 1);
}

int beta(int delta, ResidueMode mode) {
  RequireParity(delta, 1, "beta");
  const bool first_branch = mode == ResidueMode::kNonNegative
                                ? Mod4(delta) == 1
                                : (delta % 4 == 1 || delta % 4 == -1);
  const int iota = delta > 0 ? 1 : 0;
  return (first_branch ? FloorDiv2(delta) : CeilDiv2(delta)) + iota;
}

bool AutomatonTable::update_consistent() const {
  for (int p = 0; p <= tb; ++p) {
    if (even_state[p] != 1 - odd_state[tb - p]) return false;
    if (odd_state[p] != 1 - even_state[tb - p]) return false;
  }
  return true;
}

AutomatonTable automaton_fixed_point(TotalBudget tb, AutomatonSeed seed,
                                     ResidueMode mode) {
  const int n = tb.value();
  if (seed == AutomatonSeed::kFromSolverLimits) {
    LimitRows lim = limit_rows(tb);
    AutomatonTable a;
    a.tb = n;
    a.even_state = lim.even_row;
    a.odd_state = lim.odd_row;
    return a;
  }
  std::vector<Score> even(n + 1);
  for (int p = 0; p <= n; ++p) {
    const int delta = 2 * p - n;
    even[p] = n % 2 == 0 ? alpha_even(delta) : beta(delta, mode);
  }
  return FromEvenState(n, std::move(even));
}

AutomatonTable parity_consistent_automaton(TotalBudget tb) {
  const int n = tb.value();
  if (n % 2 == 0) return automaton_fixed_point(tb, AutomatonSeed::kAlphaBeta);
  // The truncated-residue beta row is odd everywhere, so it sits in the odd
  // state; the even state is its update image.
  std::vector<Score> odd(n + 1);
  for (int p = 0; p <= n; ++p) odd[p] = beta(2 * p - n, ResidueMode::kTruncated);
  AutomatonTable a;
  a.tb = n;
  a.even_state.resize(n + 1);
  for (int p = 0; p <= n; ++p) a.even_state[p] = 1 - odd[n - p];
  a.odd_state = std::move(odd);
  return a;
}

Score outcome_bounds(TotalBudget tb, int p, Parity parity) {
  if (p < 0 || p > tb.value()) {
    throw Error(ErrorKind::kBudgetOutOfRange,
                "budget " + std::to_string(p) + " outside 0.." +
                    std::to_string(tb.value()));
  }
  return parity_consistent_automaton(tb).at(parity, p);
}

int convergence_bound(TotalBudget tb) {
  const int n = tb.value();
  const int half = n / 2;
  if (n % 2 == 0) return 1 + (half + 1) * half - half;
  const int up = (n + 1) / 2;
  return 1 + up * up - half;
}

ConvergenceReport test_conjecture(TotalBudget tb) {
  ConvergenceReport r;
  r.tb = tb.value();
  r.bound = convergence_bound(tb);
  LimitRows lim;
  try {
    lim = limit_rows(tb);
  } catch (const Error& e) {
    r.bound_exceeded = true;
    r.error = e.what();
    return r;
  }
  r.x_star = lim.x_star;

  const int n = tb.value();
  if (n % 2 == 0) {
    AutomatonTable a = automaton_fixed_point(tb, AutomatonSeed::kAlphaBeta);
    r.comparisons.push_back(Compare("alpha", false, a, lim));
    r.comparisons.push_back(Compare("alpha", true, a, lim));
  } else {
    for (ResidueMode mode : {ResidueMode::kNonNegative, ResidueMode::kTruncated}) {
      AutomatonTable a =
          automaton_fixed_point(tb, AutomatonSeed::kAlphaBeta, mode);
      const std::string name = std::string("beta/") + ResidueModeName(mode);
      r.comparisons.push_back(Compare(name, false, a, lim));
      r.comparisons.push_back(Compare(name, true, a, lim));
    }
  }
  for (const auto& c : r.comparisons) r.limits_match_automaton |= c.match;

  for (int p = 0; p <= n; ++p) {
    const Score expected = 1 - lim.even_row[n - p];
    if (lim.odd_row[p] != expected) {
      r.update_rule_diffs.push_back({Parity::kOdd, p, expected, lim.odd_row[p]});
    }
  }
  r.update_rule_closed = r.update_rule_diffs.empty();
  return r;
}

}  // namespace richman
