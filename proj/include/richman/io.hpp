#pragma once

#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "richman/analysis.hpp"
#include "richman/automaton.hpp"
#include "richman/general_game.hpp"
#include "richman/unitary_solver.hpp"

namespace richman {

inline constexpr int kSchemaVersion = 1;

/// Marker-Left rows, budgets from tb down to 0 as column headers.
nlohmann::json to_json(const UnitaryTable& table);
nlohmann::json to_json(const LimitRows& lim);
nlohmann::json to_json(const AutomatonTable& a, int bound);
nlohmann::json to_json(const ConvergenceReport& r);
nlohmann::json to_json(const std::vector<InvariantReport>& reports);
nlohmann::json to_json(const UReport& r);
nlohmann::json to_json(const BidGraph& g);

std::string render_table_text(const UnitaryTable& table);
/// Header `x,p,marker,value`, one line per marker-Left cell in (x, p) order.
std::string render_table_csv(const UnitaryTable& table);
/// {"schema_version":1,"tb":..,"rows":[{"x":..,"values":[..]}]}; values are
/// indexed by p.
std::string render_table_json(const UnitaryTable& table);
/// Inverse of render_table_json. Throws kParse on malformed input.
UnitaryTable parse_table_json(std::string_view text);

std::string render_limits_text(const LimitRows& lim);
std::string render_limits_json(const LimitRows& lim);

std::string render_automaton_text(const AutomatonTable& a, int bound);
std::string render_automaton_json(const AutomatonTable& a, int bound);

std::string render_conjecture_text(const ConvergenceReport& r);
std::string render_conjecture_json(const ConvergenceReport& r);

std::string render_invariants_text(const std::vector<InvariantReport>& reports);
std::string render_invariants_json(const std::vector<InvariantReport>& reports);

std::string render_u_report_text(const UReport& r);
std::string render_u_report_json(const UReport& r);

/// Reciprocal edges are merged into one `dir=both` edge.
std::string render_bid_graph_dot(const BidGraph& g);
std::string render_bid_graph_json(const BidGraph& g);

}  // namespace richman
