#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "richman/analysis.hpp"
#include "richman/automaton.hpp"
#include "richman/core.hpp"
#include "richman/general_game.hpp"
#include "richman/io.hpp"
#include "richman/oracle.hpp"
#include "richman/unitary_solver.hpp"

namespace {

using namespace richman;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;
constexpr int kExitConvergence = 3;

struct Output {
  std::string path;

  int Write(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return 0;
    }
    std::ofstream out(path);
    if (!out) {
      std::cerr << "error: cannot write '" << path << "'\n";
      return kExitUsage;
    }
    out << text;
    return 0;
  }
};

Side ParseSide(const std::string& s) {
  return s == "L" ? Side::kLeft : Side::kRight;
}

std::string ReadFile(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct SolveArgs {
  int tb = 0;
  int x_max = -1;
  std::string format = "table";
  Output out;
};

int RunSolve(const SolveArgs& a) {
  TotalBudget tb(a.tb);
  const int x_max = a.x_max >= 0 ? a.x_max : convergence_bound(tb) + 2;
  UnitaryTable t = solve(tb, x_max);
  if (a.format == "csv") return a.out.Write(render_table_csv(t));
  if (a.format == "json") return a.out.Write(render_table_json(t));
  return a.out.Write(render_table_text(t));
}

struct FormatArgs {
  int tb = 0;
  std::string format = "table";
};

int RunLimits(const FormatArgs& a) {
  LimitRows lim = limit_rows(TotalBudget(a.tb));
  std::cout << (a.format == "json" ? render_limits_json(lim)
                                   : render_limits_text(lim));
  return 0;
}

struct AutomatonArgs {
  int tb = 0;
  std::string format = "table";
  std::string form = "parity";
  std::string residue = "non-negative";
};

int RunAutomaton(const AutomatonArgs& a) {
  TotalBudget tb(a.tb);
  AutomatonTable t =
      a.form == "parity"
          ? parity_consistent_automaton(tb)
          : automaton_fixed_point(tb, AutomatonSeed::kAlphaBeta,
                                  a.residue == "truncated"
                                      ? ResidueMode::kTruncated
                                      : ResidueMode::kNonNegative);
  const int bound = convergence_bound(tb);
  std::cout << (a.format == "json" ? render_automaton_json(t, bound)
                                   : render_automaton_text(t, bound));
  return 0;
}

int RunConjecture(const FormatArgs& a) {
  ConvergenceReport r = test_conjecture(TotalBudget(a.tb));
  std::cout << (a.format == "json" ? render_conjecture_json(r)
                                   : render_conjecture_text(r));
  return r.bound_exceeded ? kExitConvergence : 0;
}

struct CheckArgs {
  int tb = 0;
  int x_max = -1;
  bool with_oracle = false;
  std::string ruleset;
  std::string from_json;
  std::string format = "text";
};

int RunCheck(const CheckArgs& a) {
  const bool json_out = a.format == "json";
  if (!a.ruleset.empty()) {
    GeneralRuleset g = parse_ruleset_file(a.ruleset);
    UReport r = check_property_U(g);
    std::cout << (json_out ? render_u_report_json(r) : render_u_report_text(r));
    return r.holds ? 0 : kExitFailure;
  }

  std::optional<UnitaryTable> table;
  if (!a.from_json.empty()) {
    table = parse_table_json(ReadFile(a.from_json));
  } else {
    TotalBudget tb(a.tb);
    table = solve(tb, a.x_max >= 0 ? a.x_max : convergence_bound(tb) + 2);
  }
  std::vector<InvariantReport> reports = check_invariants(*table);
  bool passed = true;
  for (const auto& r : reports) passed &= r.passed;

  nlohmann::json oracle_json;
  std::string oracle_text;
  if (a.with_oracle) {
    Oracle oracle{TotalBudget(table->tb())};
    long long cells = 0;
    std::optional<std::string> mismatch;
    for (int x = 0; x <= table->x_max() && !mismatch; ++x) {
      for (int p = 0; p <= table->tb() && !mismatch; ++p) {
        for (Side m : {Side::kLeft, Side::kRight}) {
          RichmanPosition pos(TotalBudget(table->tb()), x, p, m);
          const Score fast = value(*table, pos);
          const Score slow = oracle.value(pos);
          ++cells;
          if (fast != slow) {
            mismatch = ToString(pos) + " marker " + SideName(m) + ": table " +
                       std::to_string(fast) + ", oracle " + std::to_string(slow);
            break;
          }
        }
      }
    }
    passed &= !mismatch;
    oracle_json = {{"cells", cells}, {"passed", !mismatch}};
    if (mismatch) oracle_json["mismatch"] = *mismatch;
    oracle_text = std::string(mismatch ? "FAIL " : "PASS ") +
                  "oracle-equivalence (" + std::to_string(cells) + " cells)" +
                  (mismatch ? ": " + *mismatch : "") + "\n";
  }

  if (json_out) {
    nlohmann::json j = {{"schema_version", kSchemaVersion},
                        {"tb", table->tb()},
                        {"x_max", table->x_max()},
                        {"invariants", to_json(reports)},
                        {"passed", passed}};
    if (a.with_oracle) j["oracle"] = oracle_json;
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << render_invariants_text(reports) << oracle_text;
  }
  return passed ? 0 : kExitFailure;
}

struct BidsArgs {
  int tb = 0;
  std::string kind = "tie";
  int bid = 0;
  bool reduced = false;
  std::string format = "dot";
  Output out;
};

int RunBids(const BidsArgs& a) {
  BidKind kind = a.kind == "tie"          ? BidKind::kTie
                 : a.kind == "holder-win" ? BidKind::kHolderWin
                                          : BidKind::kOpponentWin;
  BidGraph g = bid_graph(TotalBudget(a.tb), kind, a.bid, a.reduced);
  return a.out.Write(a.format == "json" ? render_bid_graph_json(g)
                                        : render_bid_graph_dot(g));
}

struct PlayArgs {
  int tb = 0;
  int x = 1;
  int p = 0;
  std::string marker = "L";
  std::string engine = "L";
  std::string transcript;
};

int EngineBid(const UnitaryTable& t, const RichmanPosition& pos, Side engine) {
  const int holder_budget = pos.budget(pos.marker());
  return pos.marker() == engine
             ? holder_canonical_bid(t, pos.heap(), holder_budget)
             : opponent_canonical_bid(t, pos.heap(), holder_budget);
}

int RunPlay(const PlayArgs& a) {
  TotalBudget tb(a.tb);
  RichmanPosition pos(tb, a.x, a.p, ParseSide(a.marker));
  const Side engine = ParseSide(a.engine);
  const Side human = Other(engine);
  UnitaryTable table = solve(tb, a.x);

  std::ofstream transcript;
  if (!a.transcript.empty()) {
    transcript.open(a.transcript);
    if (!transcript) {
      std::cerr << "error: cannot write '" << a.transcript << "'\n";
      return kExitUsage;
    }
    transcript << "tb " << a.tb << "\nstart " << a.x << ' ' << a.p << ' '
               << a.marker << '\n';
  }

  std::cout << "engine plays " << SideName(engine) << ", value "
            << value(table, pos) << '\n';
  Score score = 0;
  while (pos.heap() > 0) {
    std::cout << "heap " << pos.heap() << "  L $" << pos.left_budget()
              << "  R $" << pos.right_budget() << "  marker "
              << SideName(pos.marker()) << "  score " << score << '\n';
    // The engine commits before the human's bid is read.
    const int engine_bid = EngineBid(table, pos, engine);
    int human_bid = -1;
    while (true) {
      std::cout << "your bid (0.." << pos.budget(human) << "): " << std::flush;
      std::string line;
      if (!std::getline(std::cin, line)) {
        std::cout << '\n';
        std::cerr << "input closed, game aborted\n";
        return 0;
      }
      std::istringstream ls(line);
      std::string rest;
      if (ls >> human_bid && !(ls >> rest) && human_bid >= 0 &&
          human_bid <= pos.budget(human)) {
        break;
      }
      std::cout << "infeasible bid, try again\n";
    }
    const int l = engine == Side::kLeft ? engine_bid : human_bid;
    const int r = engine == Side::kLeft ? human_bid : engine_bid;
    BidResolution res = classify_bid(pos, l, r);
    const Side winner = WinningSide(res.bid.winner);
    score += winner == Side::kLeft ? 1 : -1;
    std::cout << "L bid " << l << ", R bid " << r << ": "
              << BidWinnerName(res.bid.winner) << ", " << SideName(winner)
              << " takes a pebble\n";
    if (transcript.is_open()) transcript << l << ' ' << r << '\n';
    pos = RichmanPosition(tb, pos.heap() - 1, res.next_left_budget,
                          res.next_marker);
  }
  std::cout << "final score " << score << '\n';
  return 0;
}

struct ReplayArgs {
  std::string transcript;
};

int RunReplay(const ReplayArgs& a) {
  std::istringstream in(ReadFile(a.transcript));
  std::string key, marker;
  int tb = 0, x = 0, p = 0;
  if (!(in >> key >> tb) || key != "tb" ||
      !(in >> key >> x >> p >> marker) || key != "start" ||
      (marker != "L" && marker != "R")) {
    throw Error(ErrorKind::kParse, "transcript must start with 'tb N' and "
                                   "'start X P L|R'");
  }
  std::vector<std::pair<int, int>> bids;
  int l, r;
  while (in >> l >> r) bids.emplace_back(l, r);
  if (!in.eof()) throw Error(ErrorKind::kParse, "malformed bid line");
  TotalBudget total(tb);
  PlayTrace trace =
      replay(total, RichmanPosition(total, x, p, ParseSide(marker)), bids);
  for (const PlayStep& s : trace.steps) {
    std::cout << ToString(s.position) << " marker " << SideName(s.position.marker())
              << "  L " << s.bid.left_bid << " R " << s.bid.right_bid << "  "
              << BidWinnerName(s.bid.winner) << '\n';
  }
  std::cout << "final " << ToString(trace.final_position) << " marker "
            << SideName(trace.final_position.marker()) << "  score "
            << trace.utility << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Equilibrium engine for discrete-bidding subtraction games"};
  app.require_subcommand(1);
  int rc = 0;

  const std::vector<std::string> table_formats{"table", "csv", "json"};
  const std::vector<std::string> report_formats{"table", "json"};

  SolveArgs solve_args;
  auto* solve_cmd = app.add_subcommand("solve", "Outcome table for heaps 0..x-max");
  solve_cmd->add_option("--tb", solve_args.tb, "Total budget")
      ->required()->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--x-max", solve_args.x_max,
                        "Largest heap (default: convergence bound + 2)")
      ->check(CLI::NonNegativeNumber);
  solve_cmd->add_option("--format", solve_args.format)
      ->check(CLI::IsMember(table_formats));
  solve_cmd->add_option("--out", solve_args.out.path, "Output file");
  solve_cmd->callback([&] { rc = RunSolve(solve_args); });

  FormatArgs limits_args;
  auto* limits_cmd = app.add_subcommand("limits", "Stabilized rows per heap parity");
  limits_cmd->add_option("--tb", limits_args.tb)->required()->check(CLI::NonNegativeNumber);
  limits_cmd->add_option("--format", limits_args.format)
      ->check(CLI::IsMember(report_formats));
  limits_cmd->callback([&] { rc = RunLimits(limits_args); });

  AutomatonArgs auto_args;
  auto* auto_cmd = app.add_subcommand("automaton", "Closed-form 0-bidding automaton");
  auto_cmd->add_option("--tb", auto_args.tb)->required()->check(CLI::NonNegativeNumber);
  auto_cmd->add_option("--format", auto_args.format)
      ->check(CLI::IsMember(report_formats));
  auto_cmd->add_option("--form", auto_args.form,
                       "parity: states match heap parity; raw: closed form as stated")
      ->check(CLI::IsMember({"parity", "raw"}));
  auto_cmd->add_option("--residue", auto_args.residue, "Residue rule for raw odd tb")
      ->check(CLI::IsMember({"non-negative", "truncated"}));
  auto_cmd->callback([&] { rc = RunAutomaton(auto_args); });

  FormatArgs conj_args;
  auto* conj_cmd = app.add_subcommand("conjecture", "Compare solver limits with the automaton");
  conj_cmd->add_option("--tb", conj_args.tb)->required()->check(CLI::NonNegativeNumber);
  conj_cmd->add_option("--format", conj_args.format)
      ->check(CLI::IsMember(report_formats));
  conj_cmd->callback([&] { rc = RunConjecture(conj_args); });

  CheckArgs check_args;
  auto* check_cmd = app.add_subcommand("check", "Run the invariant suite or a property-U check");
  auto* tb_opt = check_cmd->add_option("--tb", check_args.tb)->check(CLI::NonNegativeNumber);
  check_cmd->add_option("--x-max", check_args.x_max)->check(CLI::NonNegativeNumber);
  check_cmd->add_flag("--with-oracle", check_args.with_oracle,
                      "Also compare every cell with the brute-force oracle");
  auto* ruleset_opt = check_cmd->add_option("--ruleset", check_args.ruleset,
                                            "General ruleset file")
                          ->check(CLI::ExistingFile);
  auto* json_opt = check_cmd->add_option("--from-json", check_args.from_json,
                                         "Table written by solve --format json")
                       ->check(CLI::ExistingFile);
  check_cmd->add_option("--format", check_args.format)
      ->check(CLI::IsMember({"text", "json"}));
  tb_opt->excludes(ruleset_opt)->excludes(json_opt);
  ruleset_opt->excludes(json_opt);
  check_cmd->callback([&] {
    if (!tb_opt->count() && !ruleset_opt->count() && !json_opt->count()) {
      throw CLI::ValidationError("check", "one of --tb, --ruleset, --from-json is required");
    }
    rc = RunCheck(check_args);
  });

  BidsArgs bids_args;
  auto* bids_cmd = app.add_subcommand("bids", "Feasible-bid graph over marker-holder budgets");
  bids_cmd->add_option("--tb", bids_args.tb)->required()->check(CLI::NonNegativeNumber);
  bids_cmd->add_option("--kind", bids_args.kind)
      ->check(CLI::IsMember({"tie", "holder-win", "opponent-win"}));
  bids_cmd->add_option("--bid", bids_args.bid)->required()->check(CLI::NonNegativeNumber);
  bids_cmd->add_flag("--reduced", bids_args.reduced, "Drop dominated edges");
  bids_cmd->add_option("--format", bids_args.format)->check(CLI::IsMember({"dot", "json"}));
  bids_cmd->add_option("--out", bids_args.out.path);
  bids_cmd->callback([&] { rc = RunBids(bids_args); });

  PlayArgs play_args;
  auto* play_cmd = app.add_subcommand("play", "Play against the equilibrium engine");
  play_cmd->add_option("--tb", play_args.tb)->required()->check(CLI::NonNegativeNumber);
  play_cmd->add_option("--x", play_args.x)->required()->check(CLI::NonNegativeNumber);
  play_cmd->add_option("--p", play_args.p, "Left's budget")->required()
      ->check(CLI::NonNegativeNumber);
  play_cmd->add_option("--marker", play_args.marker)->check(CLI::IsMember({"L", "R"}));
  play_cmd->add_option("--engine", play_args.engine)->check(CLI::IsMember({"L", "R"}));
  play_cmd->add_option("--transcript", play_args.transcript,
                       "Write the bids to a file readable by replay");
  play_cmd->callback([&] { rc = RunPlay(play_args); });

  ReplayArgs replay_args;
  auto* replay_cmd = app.add_subcommand("replay", "Replay a transcript written by play");
  replay_cmd->add_option("transcript", replay_args.transcript)->required()
      ->check(CLI::ExistingFile);
  replay_cmd->callback([&] { rc = RunReplay(replay_args); });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.kind() == ErrorKind::kConvergenceBoundExceeded ? kExitConvergence
                                                            : kExitUsage;
  }
  return rc;
}
