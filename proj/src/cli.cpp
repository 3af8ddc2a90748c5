#include "qchrom/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "qchrom/chromaticq.hpp"
#include "qchrom/lltuni.hpp"
#include "qchrom/relcheck.hpp"
#include "qchrom/render.hpp"

namespace qchrom {

namespace {

constexpr const char* kVersion = "0.1.0";

struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  explicit Parser(const std::string& t) : text(t) {}

  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError(msg + " at position " + std::to_string(pos), pos);
  }
  char peek() const { return pos < text.size() ? text[pos] : '\0'; }
  bool eat(char c) {
    if (peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) fail(std::string("expected '") + c + "'");
  }
  std::string ident() {
    std::size_t start = pos;
    while (pos < text.size() && std::isalpha(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected a family name");
    return text.substr(start, pos - start);
  }
  int integer() {
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start) fail("expected an integer");
    return std::stoi(text.substr(start, pos - start));
  }
  bool integer_ahead() const {
    return pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]));
  }

  GraphExpr expr() {
    std::string name = ident();
    GraphExpr e;
    if (name == "glue" || name == "union") {
      e.kind = name == "glue" ? GraphExpr::Kind::Glue : GraphExpr::Kind::Union;
      expect(':');
      expect('(');
      e.children.push_back(expr());
      while (eat(',')) e.children.push_back(expr());
      expect(')');
      if (e.children.size() < 2) fail("glue/union need at least two operands");
      return e;
    }
    int arity;
    if (name == "complete") {
      e.kind = GraphExpr::Kind::Complete;
      arity = 1;
    } else if (name == "path") {
      e.kind = GraphExpr::Kind::Path;
      arity = 1;
    } else if (name == "lollipop") {
      e.kind = GraphExpr::Kind::Lollipop;
      arity = 2;
    } else if (name == "melting") {
      e.kind = GraphExpr::Kind::Melting;
      arity = 3;
    } else if (name == "kdel") {
      e.kind = GraphExpr::Kind::KDel;
      arity = 2;
    } else if (name == "mseq") {
      e.kind = GraphExpr::Kind::MSeq;
      arity = -1;
    } else {
      fail("unknown family '" + name + "'");
    }
    expect(':');
    if (arity < 0) {
      e.args.push_back(integer());
      // consume integers while the next comma is followed by a digit
      while (peek() == ',' && pos + 1 < text.size() &&
             std::isdigit(static_cast<unsigned char>(text[pos + 1]))) {
        ++pos;
        e.args.push_back(integer());
      }
    } else {
      for (int i = 0; i < arity; ++i) {
        if (i) expect(',');
        if (!integer_ahead()) fail("expected an integer argument");
        e.args.push_back(integer());
      }
    }
    return e;
  }
};

}  // namespace

GraphExpr parse_graph_expr(const std::string& text) {
  Parser p(text);
  GraphExpr e = p.expr();
  if (p.pos != text.size()) p.fail("trailing input");
  return e;
}

UnitIntervalGraph build_graph(const GraphExpr& e) {
  switch (e.kind) {
    case GraphExpr::Kind::Complete: return complete(e.args[0]);
    case GraphExpr::Kind::Path: return path(e.args[0]);
    case GraphExpr::Kind::Lollipop: {
      if (e.args[0] == 1) throw RangeError("lollipop: m >= 2 required");
      return lollipop(e.args[0], e.args[1]);
    }
    case GraphExpr::Kind::Melting:
      return melting_lollipop(e.args[0], e.args[1], e.args[2]);
    case GraphExpr::Kind::KDel: return complete_deleted(e.args[0], e.args[1]);
    case GraphExpr::Kind::MSeq: return UnitIntervalGraph::from_mseq(e.args);
    case GraphExpr::Kind::Glue: {
      UnitIntervalGraph g = build_graph(e.children[0]);
      for (std::size_t i = 1; i < e.children.size(); ++i)
        g = glue_sum(g, build_graph(e.children[i]));
      return g;
    }
    case GraphExpr::Kind::Union: {
      UnitIntervalGraph g = build_graph(e.children[0]);
      for (std::size_t i = 1; i < e.children.size(); ++i)
        g = disjoint_union(g, build_graph(e.children[i]));
      return g;
    }
  }
  throw ParseError("unreachable", 0);
}

UnitIntervalGraph parse_graph_dsl(const std::string& text) {
  return build_graph(parse_graph_expr(text));
}

namespace {

// Closed-form chromatic quasisymmetric function for family expressions;
// nullopt when only the brute force applies.
std::optional<SymExpansion> closed_form(const GraphExpr& e) {
  switch (e.kind) {
    case GraphExpr::Kind::Complete: return x_complete(e.args[0]);
    case GraphExpr::Kind::Path: return x_path(e.args[0]);
    case GraphExpr::Kind::Lollipop:
      if (e.args[0] == 1) return std::nullopt;
      return x_lollipop(e.args[0], e.args[1]);
    case GraphExpr::Kind::Melting:
      return x_melting_lollipop(e.args[0], e.args[1], e.args[2]);
    case GraphExpr::Kind::KDel:
      if (e.args[0] < 2) return std::nullopt;
      return x_melting_lollipop(e.args[0], 0, e.args[1]);
    case GraphExpr::Kind::Glue: {
      if (e.children.size() != 2) return std::nullopt;
      const GraphExpr& a = e.children[0];
      const GraphExpr& b = e.children[1];
      if (a.kind != GraphExpr::Kind::Complete) return std::nullopt;
      int r = a.args[0];
      if (b.kind == GraphExpr::Kind::Complete) {
        int s = b.args[0];
        if (s == 1) return x_complete(r);
        if (r == 1) return x_complete(s);
        return x_join_complete_complete(r, r + s - 1);
      }
      if (b.kind == GraphExpr::Kind::Lollipop) {
        int m = b.args[0], n = b.args[1];
        if (m >= 3 && r >= 1 && r <= m) return x_join_complete_lollipop(r, m, n);
      }
      return std::nullopt;
    }
    case GraphExpr::Kind::Union: {
      std::optional<SymExpansion> acc;
      for (const auto& child : e.children) {
        auto part = closed_form(child);
        if (!part) return std::nullopt;
        acc = acc ? multiply(change_basis(*acc, Basis::e),
                             change_basis(*part, Basis::e))
                  : *part;
      }
      return acc ? std::optional<SymExpansion>(change_basis(*acc, Basis::e))
                 : std::nullopt;
    }
    default: return std::nullopt;
  }
}

struct Output {
  std::string out_path;
  void emit(const std::string& s) const {
    if (out_path.empty()) {
      std::cout << s << "\n";
    } else {
      std::ofstream f(out_path, std::ios::binary);
      f << s << "\n";
    }
  }
  void emit(const Json& j) const { emit(j.dump(2)); }
};

Json manifest(const BruteForceOptions& opts) {
  Json m;
  m["tool"] = "qchrom";
  m["version"] = kVersion;
  m["bounds"]["max_brute"] = opts.max_chromatic_n;
  m["bounds"]["max_words"] = opts.max_word_n;
  m["bounds"]["max_perms"] = opts.max_perm_n;
  m["bounds"]["workers"] = opts.workers;
  return m;
}

std::vector<int> parse_int_list(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(std::stoi(item));
  return out;
}

QPoly parse_poly(const std::string& s) {
  // ascending integer coefficients, comma separated
  std::vector<Int> cs;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) cs.emplace_back(item);
  return QPoly(std::move(cs));
}

std::pair<int, int> parse_edge(const std::string& s) {
  auto dash = s.find('-');
  if (dash == std::string::npos)
    throw ParseError("edge must look like u-v", 0);
  return {std::stoi(s.substr(0, dash)), std::stoi(s.substr(dash + 1))};
}

int report_exit(const RelationReport& rep, bool assertion) {
  if (!rep.identity_ok && (!assertion || rep.hypothesis_ok)) return 7;
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv) {
  CLI::App app{"exact chromatic quasisymmetric functions and unicellular LLT polynomials"};
  app.require_subcommand(1);

  BruteForceOptions opts;
  std::string out_path;
  app.add_option("--max-brute", opts.max_chromatic_n,
                 "largest n for the coloring brute force")
      ->envname("QCHROM_MAX_BRUTE");
  app.add_option("--workers", opts.workers, "worker threads for brute forces")
      ->envname("QCHROM_WORKERS");
  app.add_option("--out", out_path, "write output to a file instead of stdout")
      ->envname("QCHROM_OUT");

  std::string graph_text, basis = "e", format = "json", route = "f";
  int hook_k = 0;
  std::string area_text;
  int rel_i = 0, rel_l = 2, rel_k = 1, scan_n = 4;
  std::string coeffs_text, graphs_text, edges_text;
  std::string llt_basis = "s";

  auto* compute = app.add_subcommand("compute", "compute an expansion");
  auto* cchrom = compute->add_subcommand("chromatic", "chromatic quasisymmetric function");
  cchrom->add_option("graph", graph_text, "graph DSL")->required();
  cchrom->add_option("--basis", basis, "e|s|m");
  cchrom->add_option("--format", format, "json|latex");
  auto* cllt = compute->add_subcommand("llt", "unicellular LLT polynomial");
  cllt->add_option("graph", graph_text, "graph DSL")->required();
  cllt->add_option("--basis", llt_basis, "s|m");
  cllt->add_option("--route", route, "f|words|wt");
  cllt->add_option("--format", format, "json|latex");

  auto* coeff = app.add_subcommand("coeff", "extract a single coefficient");
  auto* chook = coeff->add_subcommand("hook", "hook-shape Schur coefficient");
  chook->add_option("graph", graph_text, "graph DSL")->required();
  chook->add_option("--k", hook_k, "hook arm length (lambda = (k,1^{n-k}))")->required();
  std::string hook_route = "all";
  chook->add_option("--route", hook_route, "shuffle|wt|elw|all");
  chook->add_option("--format", format, "json|latex");

  auto* verify = app.add_subcommand("verify", "verify an identity");
  auto* vlee = verify->add_subcommand("lee", "local linear relation");
  vlee->add_option("--area", area_text, "area sequence a_1,..,a_n")->required();
  vlee->add_option("--i", rel_i, "lowered index")->required();
  auto* vkdel = verify->add_subcommand("kdel", "k-deletion relation");
  vkdel->add_option("--area", area_text)->required();
  vkdel->add_option("--i", rel_i)->required();
  vkdel->add_option("--l", rel_l)->required();
  vkdel->add_option("--k", rel_k)->required();
  auto* vequiv = verify->add_subcommand("equiv", "linear relation equivalence");
  vequiv->add_option("--coeffs", coeffs_text, "';'-separated ascending coefficient lists")->required();
  vequiv->add_option("--graphs", graphs_text, "';'-separated graph DSL expressions")->required();
  auto* vtriple = verify->add_subcommand("triple", "triple deletion at q=1");
  vtriple->add_option("graph", graph_text, "graph DSL")->required();
  vtriple->add_option("--edges", edges_text, "triangle edges u-v,u-v,u-v")->required();
  auto* vpleth = verify->add_subcommand("plethysm", "plethysm bridge");
  vpleth->add_option("graph", graph_text, "graph DSL")->required();
  auto* vscan = verify->add_subcommand("scan", "exhaustive relation scan");
  vscan->add_option("--n", scan_n, "vertex count")->required();
  auto* vconj = verify->add_subcommand("conjecture", "e-positivity/palindromicity/unimodality");
  vconj->add_option("graph", graph_text, "graph DSL")->required();
  auto* vchrom = verify->add_subcommand("chromatic", "closed form vs brute force");
  vchrom->add_option("graph", graph_text, "graph DSL")->required();

  auto* render = app.add_subcommand("render", "render as LaTeX");
  auto* rlatex = render->add_subcommand("latex", "LaTeX output");
  rlatex->add_option("graph", graph_text, "graph DSL")->required();
  rlatex->add_option("--basis", basis, "e|s|m");
  std::string render_what = "chromatic";
  rlatex->add_option("--what", render_what, "chromatic|llt");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  Output out{out_path};
  try {
    if (cchrom->parsed() || rlatex->parsed()) {
      bool want_llt = rlatex->parsed() && render_what == "llt";
      if (rlatex->parsed()) format = "latex";
      GraphExpr expr = parse_graph_expr(graph_text);
      UnitIntervalGraph g = build_graph(expr);
      SymExpansion f(0, Basis::e);
      std::string source;
      if (want_llt) {
        f = llt_schur_via_F(g.to_area(), opts);
        source = "llt_via_F";
      } else if (auto cf = closed_form(expr)) {
        f = *cf;
        source = "closed_form";
      } else {
        f = chromatic_bruteforce(g, opts);
        source = "brute_force";
      }
      f = change_basis(f, basis_from_name(basis));
      if (format == "latex") {
        out.emit(latex(f));
      } else {
        Json j = manifest(opts);
        j["graph"] = to_json(g);
        j["source"] = source;
        j["expansion"] = to_json(f);
        out.emit(j);
      }
      return 0;
    }
    if (cllt->parsed()) {
      GraphExpr expr = parse_graph_expr(graph_text);
      UnitIntervalGraph g = build_graph(expr);
      DyckDiagram d = g.to_area();
      SymExpansion f(0, Basis::s);
      Json extra;
      if (route == "f") {
        f = llt_schur_via_F(d, opts);
      } else if (route == "words") {
        f = llt_bruteforce_words(d, opts);
      } else if (route == "wt") {
        f = schur_via_wt(d);
        extra["wt_route_status"] =
            wt_formula_proved(d) ? "proved-family" : "conjectural";
      } else {
        throw RangeError("unknown LLT route '" + route + "'");
      }
      f = change_basis(f, basis_from_name(llt_basis));
      if (format == "latex") {
        out.emit(latex(f));
      } else {
        Json j = manifest(opts);
        j["graph"] = to_json(g);
        j["route"] = route;
        for (auto& [k2, v] : extra.items()) j[k2] = v;
        j["expansion"] = to_json(f);
        out.emit(j);
      }
      return 0;
    }
    if (chook->parsed()) {
      UnitIntervalGraph g = parse_graph_dsl(graph_text);
      DyckDiagram d = g.to_area();
      Json j = manifest(opts);
      j["graph"] = to_json(g);
      j["k"] = hook_k;
      QPoly value;
      bool agree = true;
      if (hook_route == "all") {
        QPoly a = hook_coefficient_shuffle(d, hook_k);
        QPoly b = hook_coefficient_wt(d, hook_k);
        QPoly c = hook_coefficient_elw(d, hook_k, opts);
        j["routes"]["shuffle"] = to_json(a);
        j["routes"]["wt"] = to_json(b);
        j["routes"]["elw"] = to_json(c);
        agree = (a == b && b == c);
        j["routes_agree"] = agree;
        value = a;
      } else if (hook_route == "shuffle") {
        value = hook_coefficient_shuffle(d, hook_k);
      } else if (hook_route == "wt") {
        value = hook_coefficient_wt(d, hook_k);
      } else if (hook_route == "elw") {
        value = hook_coefficient_elw(d, hook_k, opts);
      } else {
        throw RangeError("unknown hook route '" + hook_route + "'");
      }
      if (format == "latex") {
        out.emit(latex(value));
      } else {
        j["coefficient"] = to_json(value);
        out.emit(j);
      }
      return agree ? 0 : 7;
    }
    if (vlee->parsed()) {
      RelationReport rep = verify_lee(parse_int_list(area_text), rel_i, opts);
      out.emit(to_json(rep));
      return report_exit(rep, true);
    }
    if (vkdel->parsed()) {
      RelationReport rep =
          verify_k_deletion(parse_int_list(area_text), rel_i, rel_l, rel_k, opts);
      out.emit(to_json(rep));
      return report_exit(rep, true);
    }
    if (vequiv->parsed()) {
      std::vector<QPoly> cs;
      std::vector<UnitIntervalGraph> gs;
      std::stringstream sc(coeffs_text), sg(graphs_text);
      std::string item;
      while (std::getline(sc, item, ';')) cs.push_back(parse_poly(item));
      while (std::getline(sg, item, ';')) gs.push_back(parse_graph_dsl(item));
      RelationReport rep = verify_equivalence(cs, gs, opts);
      out.emit(to_json(rep));
      return report_exit(rep, false);
    }
    if (vtriple->parsed()) {
      UnitIntervalGraph g = parse_graph_dsl(graph_text);
      std::vector<std::pair<int, int>> tri;
      std::stringstream ss(edges_text);
      std::string item;
      while (std::getline(ss, item, ','))
        if (!item.empty()) tri.push_back(parse_edge(item));
      if (tri.size() != 3) throw ParseError("--edges needs three edges", 0);
      RelationReport rep =
          verify_triple_deletion(g.n(), g.edges(), tri[0], tri[1], tri[2], opts);
      out.emit(to_json(rep));
      return report_exit(rep, false);
    }
    if (vpleth->parsed()) {
      RelationReport rep = plethysm_bridge_check(parse_graph_dsl(graph_text), opts);
      out.emit(to_json(rep));
      return report_exit(rep, false);
    }
    if (vscan->parsed()) {
      auto reports = scan_relations(scan_n, opts);
      int failures = 0, hyp = 0;
      Json arr = Json::array();
      for (const auto& rep : reports) {
        if (rep.hypothesis_ok) {
          ++hyp;
          if (!rep.identity_ok) ++failures;
        }
        if (!rep.passed()) arr.push_back(to_json(rep));
      }
      Json j = manifest(opts);
      j["n"] = scan_n;
      j["instances"] = reports.size();
      j["hypothesis_satisfied"] = hyp;
      j["identity_failures"] = failures;
      j["failures"] = arr;
      out.emit(j);
      return failures == 0 ? 0 : 7;
    }
    if (vconj->parsed()) {
      GraphExpr expr = parse_graph_expr(graph_text);
      UnitIntervalGraph g = build_graph(expr);
      SymExpansion f(0, Basis::e);
      auto cf = closed_form(expr);
      f = cf ? *cf : chromatic_bruteforce(g, opts);
      RelationReport rep = check_conjecture_sw(f, g.edge_count());
      Json j = to_json(rep);
      j["graph"] = to_json(g);
      out.emit(j);
      return report_exit(rep, false);
    }
    if (vchrom->parsed()) {
      GraphExpr expr = parse_graph_expr(graph_text);
      UnitIntervalGraph g = build_graph(expr);
      MonomialTable table = chromatic_quasimonomials(g.n(), g.edges(), opts);
      RelationReport rep;
      rep.relation = "chromatic";
      Json j = manifest(opts);
      j["graph"] = to_json(g);
      if (auto s = table.asymmetry_witness()) {
        rep.identity_ok = false;
        Witness w;
        w.what = "quasimonomial table not symmetric at " + s->to_string();
        rep.witness = w;
      } else {
        SymExpansion brute = table.to_sym();
        j["symmetric"] = true;
        bool palin = true;
        for (const auto& [lam, c] : brute.integral_coeffs())
          if (!c.is_palindromic(g.edge_count())) palin = false, (void)lam;
        j["palindromic"] = palin;
        if (!palin) {
          rep.identity_ok = false;
          Witness w;
          w.what = "coefficients not palindromic about |E|/2";
          rep.witness = w;
        }
        if (auto cf = closed_form(expr)) {
          bool match = change_basis(*cf, Basis::m) == brute;
          j["closed_form_matches"] = match;
          if (!match) {
            rep.identity_ok = false;
            Witness w;
            w.what = "closed form disagrees with brute force";
            rep.witness = w;
          }
        } else {
          j["closed_form_matches"] = nullptr;
        }
      }
      j["report"] = to_json(rep);
      out.emit(j);
      return rep.identity_ok ? 0 : 7;
    }
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const InvalidMSeq& e) {
    std::cerr << "invalid m-sequence: " << e.what() << "\n";
    return 3;
  } catch (const InvalidArea& e) {
    std::cerr << "invalid area sequence: " << e.what() << "\n";
    return 3;
  } catch (const NotUnitInterval& e) {
    std::cerr << "not a unit interval graph: " << e.what() << "\n";
    return 3;
  } catch (const NotATriangle& e) {
    std::cerr << "not a triangle: " << e.what() << "\n";
    return 3;
  } catch (const BruteForceBound& e) {
    std::cerr << "bound exceeded: " << e.what() << "\n";
    return 5;
  } catch (const NonzeroRemainder& e) {
    std::cerr << "exactness alarm: " << e.what() << "\n";
    return 6;
  } catch (const NonIntegral& e) {
    std::cerr << "exactness alarm: " << e.what() << "\n";
    return 6;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  std::cerr << "no verb matched\n";
  return 2;
}

}  // namespace qchrom
