#ifndef QCHROM_CLI_HPP
#define QCHROM_CLI_HPP

#include <string>
#include <vector>

#include "qchrom/unigraphs.hpp"

namespace qchrom {

// Parsed form of the graph DSL:
//   complete:7 | path:5 | lollipop:6,5 | melting:6,5,2 | kdel:7,3
//   | mseq:2,3,4 | glue:(expr,expr,...) | union:(expr,expr,...)
// The tree is kept so closed forms can be dispatched on the family.
struct GraphExpr {
  enum class Kind { Complete, Path, Lollipop, Melting, KDel, MSeq, Glue, Union };
  Kind kind;
  std::vector<int> args;
  std::vector<GraphExpr> children;
};

GraphExpr parse_graph_expr(const std::string& text);
UnitIntervalGraph build_graph(const GraphExpr& expr);
UnitIntervalGraph parse_graph_dsl(const std::string& text);

// exit codes: 0 ok, 2 parse/usage, 3 invalid graph, 4 domain error,
// 5 brute-force bound, 6 exactness alarm, 7 verification failure
int run_cli(int argc, const char* const* argv);

}  // namespace qchrom

#endif
