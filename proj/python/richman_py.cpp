#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "richman/analysis.hpp"
#include "richman/automaton.hpp"
#include "richman/general_game.hpp"
#include "richman/io.hpp"
#include "richman/oracle.hpp"
#include "richman/unitary_solver.hpp"

namespace py = pybind11;
using namespace richman;

namespace {

Side ToSide(const std::string& s) {
  if (s == "L") return Side::kLeft;
  if (s == "R") return Side::kRight;
  throw py::value_error("marker must be 'L' or 'R'");
}

Parity ToParity(const std::string& s) {
  if (s == "even") return Parity::kEven;
  if (s == "odd") return Parity::kOdd;
  throw py::value_error("parity must be 'even' or 'odd'");
}

BidKind ToKind(const std::string& s) {
  if (s == "tie") return BidKind::kTie;
  if (s == "holder-win") return BidKind::kHolderWin;
  if (s == "opponent-win") return BidKind::kOpponentWin;
  throw py::value_error("kind must be tie, holder-win or opponent-win");
}

RichmanPosition Pos(int tb, int x, int p, const std::string& marker) {
  return RichmanPosition(TotalBudget(tb), x, p, ToSide(marker));
}

py::tuple BidTuple(const BidPair& b) {
  return py::make_tuple(b.left_bid, b.right_bid, BidWinnerName(b.winner));
}

}  // namespace

PYBIND11_MODULE(_richman, m) {
  m.doc() = "Equilibrium values of discrete-bidding subtraction games";

  py::register_exception<Error>(m, "RichmanError", PyExc_ValueError);

  py::class_<UnitaryTable>(m, "UnitaryTable")
      .def_property_readonly("tb", &UnitaryTable::tb)
      .def_property_readonly("x_max", &UnitaryTable::x_max)
      .def("with_marker", &UnitaryTable::with_marker, py::arg("x"), py::arg("p"))
      .def("without_marker", &UnitaryTable::without_marker, py::arg("x"),
           py::arg("p"))
      .def("rows", &UnitaryTable::rows)
      .def("value",
           [](const UnitaryTable& t, int x, int p, const std::string& marker) {
             return value(t, Pos(t.tb(), x, p, marker));
           },
           py::arg("x"), py::arg("p"), py::arg("marker") = "L")
      .def("equilibrium_bids",
           [](const UnitaryTable& t, int x, int p, const std::string& marker) {
             py::list out;
             for (const BidPair& b : equilibrium_bids(t, Pos(t.tb(), x, p, marker)))
               out.append(BidTuple(b));
             return out;
           },
           py::arg("x"), py::arg("p"), py::arg("marker") = "L")
      .def("to_json", [](const UnitaryTable& t) { return render_table_json(t); })
      .def("to_csv", [](const UnitaryTable& t) { return render_table_csv(t); })
      .def("__repr__", [](const UnitaryTable& t) {
        std::ostringstream os;
        os << "<UnitaryTable tb=" << t.tb() << " x_max=" << t.x_max() << ">";
        return os.str();
      });

  m.def("solve", [](int tb, int x_max) { return solve(TotalBudget(tb), x_max); },
        py::arg("tb"), py::arg("x_max"));
  m.def("table_from_json",
        [](const std::string& text) { return parse_table_json(text); });

  m.def("oracle_value",
        [](int tb, int x, int p, const std::string& marker) {
          return oracle_value(TotalBudget(tb), Pos(tb, x, p, marker));
        },
        py::arg("tb"), py::arg("x"), py::arg("p"), py::arg("marker") = "L");
  m.def("bid_matrix",
        [](int tb, int x, int p, const std::string& marker) {
          BidMatrix bm = bid_matrix(TotalBudget(tb), Pos(tb, x, p, marker));
          py::dict d;
          d["entries"] = bm.entries;
          d["column_mins"] = bm.column_mins;
          d["row_maxes"] = bm.row_maxes;
          d["maximin"] = bm.maximin;
          d["minimax"] = bm.minimax;
          return d;
        },
        py::arg("tb"), py::arg("x"), py::arg("p"), py::arg("marker") = "L");
  m.def("replay",
        [](int tb, int x, int p, const std::string& marker,
           const std::vector<std::pair<int, int>>& bids) {
          PlayTrace t = replay(TotalBudget(tb), Pos(tb, x, p, marker), bids);
          py::list steps;
          for (const PlayStep& s : t.steps) steps.append(BidTuple(s.bid));
          return py::make_tuple(steps, t.utility);
        },
        py::arg("tb"), py::arg("x"), py::arg("p"), py::arg("marker"),
        py::arg("bids"));

  m.def("limit_rows",
        [](int tb) {
          LimitRows l = limit_rows(TotalBudget(tb));
          py::dict d;
          d["even_row"] = l.even_row;
          d["odd_row"] = l.odd_row;
          d["x_star"] = l.x_star;
          d["bound"] = l.bound;
          return d;
        },
        py::arg("tb"));
  m.def("convergence_bound",
        [](int tb) { return convergence_bound(TotalBudget(tb)); });
  m.def("alpha_even", &alpha_even);
  m.def("alpha_odd", &alpha_odd);
  m.def("beta",
        [](int delta, bool truncated) {
          return beta(delta, truncated ? ResidueMode::kTruncated
                                       : ResidueMode::kNonNegative);
        },
        py::arg("delta"), py::arg("truncated") = false);
  m.def("outcome_bounds",
        [](int tb, int p, const std::string& parity) {
          return outcome_bounds(TotalBudget(tb), p, ToParity(parity));
        },
        py::arg("tb"), py::arg("p"), py::arg("parity"));
  m.def("test_conjecture", [](int tb) {
    return nlohmann::to_string(to_json(test_conjecture(TotalBudget(tb))));
  });

  m.def("run_invariant_suite",
        [](int tb, int x_max) {
          py::dict d;
          for (const InvariantReport& r : run_invariant_suite(TotalBudget(tb), x_max))
            d[py::str(r.name)] = r.passed;
          return d;
        },
        py::arg("tb"), py::arg("x_max"));
  m.def("forced_win_threshold",
        [](int x, int q, const std::string& marker) {
          return forced_win_threshold(x, q, ToSide(marker)).threshold;
        },
        py::arg("x"), py::arg("q"), py::arg("marker"));
  m.def("forced_win_search",
        [](int x, int p, int q, const std::string& marker) {
          return forced_win_search(x, p, q, ToSide(marker));
        },
        py::arg("x"), py::arg("p"), py::arg("q"), py::arg("marker"));
  m.def("bid_graph",
        [](int tb, const std::string& kind, int bid, bool reduced) {
          std::vector<std::pair<int, int>> edges;
          for (const BidEdge& e : bid_graph(TotalBudget(tb), ToKind(kind), bid, reduced).edges)
            edges.emplace_back(e.from, e.to);
          return edges;
        },
        py::arg("tb"), py::arg("kind"), py::arg("bid"), py::arg("reduced") = false);
  m.def("bid_graph_dot",
        [](int tb, const std::string& kind, int bid, bool reduced) {
          return render_bid_graph_dot(bid_graph(TotalBudget(tb), ToKind(kind), bid, reduced));
        },
        py::arg("tb"), py::arg("kind"), py::arg("bid"), py::arg("reduced") = false);

  m.def("check_property_u",
        [](const std::string& ruleset_text) {
          std::istringstream in(ruleset_text);
          UReport r = check_property_U(parse_ruleset(in));
          py::list out;
          for (const UViolation& v : r.violations) {
            out.append(py::make_tuple(UPropertyName(v.property), v.node_name,
                                      v.witness_budget, v.lhs, v.rhs));
          }
          return py::make_tuple(r.holds, out);
        },
        py::arg("ruleset_text"));
}
