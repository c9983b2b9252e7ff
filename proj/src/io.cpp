#include "richman/io.hpp"

#include <algorithm>
#include <iomanip>
#include <map>
#include <set>
#include <sstream>

namespace richman {

using nlohmann::json;

namespace {

std::string RowText(const std::string& label, const std::vector<Score>& row,
                    int label_width) {
  std::ostringstream os;
  os << std::setw(label_width) << std::left << label << std::right;
  for (int p = static_cast<int>(row.size()) - 1; p >= 0; --p) {
    os << ' ' << std::setw(3) << row[p];
  }
  os << '\n';
  return os.str();
}

std::string BudgetHeader(int tb, int label_width, const char* label) {
  std::ostringstream os;
  os << std::setw(label_width) << std::left << label << std::right;
  for (int p = tb; p >= 0; --p) os << ' ' << std::setw(3) << p;
  os << '\n';
  return os.str();
}

std::string Dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace

json to_json(const UnitaryTable& table) {
  json rows = json::array();
  for (int x = 0; x <= table.x_max(); ++x) {
    rows.push_back({{"x", x}, {"values", table.rows()[x]}});
  }
  return {{"schema_version", kSchemaVersion}, {"tb", table.tb()}, {"rows", rows}};
}

json to_json(const LimitRows& lim) {
  return {{"schema_version", kSchemaVersion},
          {"tb", lim.tb},
          {"even_row", lim.even_row},
          {"odd_row", lim.odd_row},
          {"x_star", lim.x_star},
          {"bound", lim.bound}};
}

json to_json(const AutomatonTable& a, int bound) {
  return {{"schema_version", kSchemaVersion},
          {"tb", a.tb},
          {"even_state", a.even_state},
          {"odd_state", a.odd_state},
          {"update_consistent", a.update_consistent()},
          {"bound", bound}};
}

namespace {

json DiffsJson(const std::vector<CellDiff>& diffs) {
  json out = json::array();
  for (const CellDiff& d : diffs) {
    out.push_back({{"parity", ParityName(d.parity)},
                   {"p", d.p},
                   {"expected", d.expected},
                   {"actual", d.actual}});
  }
  return out;
}

}  // namespace

json to_json(const ConvergenceReport& r) {
  json comparisons = json::array();
  for (const AutomatonComparison& c : r.comparisons) {
    comparisons.push_back({{"convention", c.convention},
                           {"swapped_labels", c.swapped_labels},
                           {"update_consistent", c.update_consistent},
                           {"match", c.match},
                           {"diffs", DiffsJson(c.diffs)}});
  }
  json j = {{"schema_version", kSchemaVersion},
            {"tb", r.tb},
            {"bound", r.bound},
            {"x_star", r.x_star},
            {"bound_exceeded", r.bound_exceeded},
            {"limits_match_automaton", r.limits_match_automaton},
            {"comparisons", comparisons},
            {"update_rule_closed", r.update_rule_closed},
            {"update_rule_diffs", DiffsJson(r.update_rule_diffs)}};
  if (r.bound_exceeded) j["error"] = r.error;
  return j;
}

json to_json(const std::vector<InvariantReport>& reports) {
  json out = json::array();
  for (const InvariantReport& r : reports) {
    json j = {{"name", r.name},
              {"tb", r.tb},
              {"x_max", r.x_max},
              {"passed", r.passed}};
    if (r.counterexample) {
      j["counterexample"] = {{"x", r.counterexample->x},
                             {"p", r.counterexample->p},
                             {"values", r.counterexample->values}};
    }
    out.push_back(std::move(j));
  }
  return out;
}

json to_json(const UReport& r) {
  json violations = json::array();
  for (const UViolation& v : r.violations) {
    violations.push_back({{"property", UPropertyName(v.property)},
                          {"node", v.node_name},
                          {"marker", SideName(v.marker)},
                          {"witness_budget", v.witness_budget},
                          {"lhs", v.lhs},
                          {"rhs", v.rhs},
                          {"budgets", v.budgets}});
  }
  return {{"holds", r.holds}, {"violations", violations}};
}

json to_json(const BidGraph& g) {
  json edges = json::array();
  for (const BidEdge& e : g.edges) {
    edges.push_back({{"from", e.from}, {"to", e.to}, {"dominated", e.dominated}});
  }
  json nodes = json::array();
  for (int m = 0; m <= g.tb; ++m) nodes.push_back(m);
  return {{"schema_version", kSchemaVersion},
          {"tb", g.tb},
          {"kind", BidKindName(g.kind)},
          {"bid", g.bid},
          {"reduced", g.reduced},
          {"nodes", nodes},
          {"edges", edges}};
}

std::string render_table_text(const UnitaryTable& table) {
  const int width = 4 + static_cast<int>(std::to_string(table.x_max()).size());
  std::string out = BudgetHeader(table.tb(), width, "p^");
  for (int x = 0; x <= table.x_max(); ++x) {
    out += RowText("x=" + std::to_string(x), table.rows()[x], width);
  }
  return out;
}

std::string render_table_csv(const UnitaryTable& table) {
  std::ostringstream os;
  os << "x,p,marker,value\n";
  for (int x = 0; x <= table.x_max(); ++x) {
    for (int p = 0; p <= table.tb(); ++p) {
      os << x << ',' << p << ",L," << table.with_marker(x, p) << '\n';
    }
  }
  return os.str();
}

std::string render_table_json(const UnitaryTable& table) {
  return Dump(to_json(table));
}

UnitaryTable parse_table_json(std::string_view text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
  try {
    if (j.value("schema_version", 0) != kSchemaVersion) {
      throw Error(ErrorKind::kParse, "unsupported schema_version");
    }
    const int tb = j.at("tb").get<int>();
    if (tb < 0) throw Error(ErrorKind::kParse, "tb must be >= 0");
    const json& rows = j.at("rows");
    if (!rows.is_array() || rows.empty()) {
      throw Error(ErrorKind::kParse, "rows must be a non-empty array");
    }
    std::vector<std::vector<Score>> values;
    for (const json& row : rows) {
      if (row.at("x").get<int>() != static_cast<int>(values.size())) {
        throw Error(ErrorKind::kParse, "rows must be listed for x = 0, 1, ...");
      }
      auto v = row.at("values").get<std::vector<Score>>();
      if (static_cast<int>(v.size()) != tb + 1) {
        throw Error(ErrorKind::kParse, "row length does not match tb + 1");
      }
      values.push_back(std::move(v));
    }
    return UnitaryTable(TotalBudget(tb), std::move(values));
  } catch (const json::exception& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
}

std::string render_limits_text(const LimitRows& lim) {
  std::string out = BudgetHeader(lim.tb, 7, "p^");
  out += RowText("even", lim.even_row, 7);
  out += RowText("odd", lim.odd_row, 7);
  out += "x_star " + std::to_string(lim.x_star) + "\n";
  out += "bound  " + std::to_string(lim.bound) + "\n";
  return out;
}

std::string render_limits_json(const LimitRows& lim) {
  return Dump(to_json(lim));
}

std::string render_automaton_text(const AutomatonTable& a, int bound) {
  std::string out = BudgetHeader(a.tb, 7, "p^");
  out += RowText("even", a.even_state, 7);
  out += RowText("odd", a.odd_state, 7);
  out += "bound  " + std::to_string(bound) + "\n";
  out += std::string("update ") +
         (a.update_consistent() ? "consistent" : "inconsistent") + "\n";
  return out;
}

std::string render_automaton_json(const AutomatonTable& a, int bound) {
  return Dump(to_json(a, bound));
}

std::string render_conjecture_text(const ConvergenceReport& r) {
  std::ostringstream os;
  os << "tb " << r.tb << "  bound " << r.bound;
  if (r.bound_exceeded) {
    os << "\nconvergence: FAILED (" << r.error << ")\n";
    return os.str();
  }
  os << "  x_star " << r.x_star << '\n';
  for (const AutomatonComparison& c : r.comparisons) {
    os << std::setw(20) << std::left << c.convention << std::right
       << (c.swapped_labels ? " swapped " : " direct  ")
       << (c.match ? "match" : "mismatch");
    if (!c.match) os << " (" << c.diffs.size() << " cells)";
    os << '\n';
  }
  os << "limits match automaton: " << (r.limits_match_automaton ? "yes" : "no")
     << '\n';
  os << "update rule closed on limits: " << (r.update_rule_closed ? "yes" : "no")
     << '\n';
  return os.str();
}

std::string render_conjecture_json(const ConvergenceReport& r) {
  return Dump(to_json(r));
}

std::string render_invariants_text(const std::vector<InvariantReport>& reports) {
  std::ostringstream os;
  for (const InvariantReport& r : reports) {
    os << (r.passed ? "PASS " : "FAIL ") << r.name << " (tb=" << r.tb
       << ", x<=" << r.x_max << ")";
    if (r.counterexample) {
      os << ": x=" << r.counterexample->x << " p=" << r.counterexample->p
         << " " << r.counterexample->values;
    }
    os << '\n';
  }
  return os.str();
}

std::string render_invariants_json(const std::vector<InvariantReport>& reports) {
  return Dump(to_json(reports));
}

std::string render_u_report_text(const UReport& r) {
  std::ostringstream os;
  os << "property U " << (r.holds ? "holds" : "fails") << '\n';
  for (const UViolation& v : r.violations) {
    os << "  (" << UPropertyName(v.property) << ") node " << v.node_name;
    if (v.property == UProperty::kA) os << " marker " << SideName(v.marker);
    os << " p=" << v.witness_budget << ": " << v.lhs << " vs " << v.rhs;
    if (v.budgets.size() > 1) {
      os << " (budgets";
      for (int p : v.budgets) os << ' ' << p;
      os << ')';
    }
    os << '\n';
  }
  return os.str();
}

std::string render_u_report_json(const UReport& r) {
  return Dump(to_json(r));
}

std::string render_bid_graph_dot(const BidGraph& g) {
  const char suffix = g.kind == BidKind::kTie ? 'T' : 'W';
  const std::string label = std::to_string(g.bid) + suffix;
  std::set<std::pair<int, int>> present;
  for (const BidEdge& e : g.edges) present.insert({e.from, e.to});

  std::ostringstream os;
  os << "digraph bids {\n";
  for (int m = 0; m <= g.tb; ++m) {
    os << "  n" << m << " [label=\"" << m << "\"];\n";
  }
  std::set<std::pair<int, int>> emitted;
  for (const BidEdge& e : g.edges) {
    if (emitted.count({e.from, e.to})) continue;
    const bool both = e.from != e.to && present.count({e.to, e.from});
    os << "  n" << e.from << " -> n" << e.to << " [label=\"" << label << "\"";
    if (both) os << ", dir=both";
    if (e.dominated) os << ", style=dashed";
    os << "];\n";
    emitted.insert({e.from, e.to});
    if (both) emitted.insert({e.to, e.from});
  }
  os << "}\n";
  return os.str();
}

std::string render_bid_graph_json(const BidGraph& g) {
  return Dump(to_json(g));
}

}  // namespace richman
