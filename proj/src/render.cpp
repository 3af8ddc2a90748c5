#include "qchrom/render.hpp"

#include <sstream>

namespace qchrom {

Json to_json(const QPoly& p) {
  Json arr = Json::array();
  for (const auto& s : p.coeff_strings()) arr.push_back(s);
  return arr;
}

Json to_json(const SymExpansion& f) {
  Json out;
  out["degree"] = f.degree();
  out["basis"] = basis_name(f.basis());
  Json coeffs = Json::array();
  for (const auto& [lam, c] : f.integral_coeffs()) {
    Json entry;
    entry["partition"] = lam.parts();
    entry["poly"] = to_json(c);
    coeffs.push_back(entry);
  }
  out["coeffs"] = coeffs;
  return out;
}

Json to_json(const QuasiExpansion& f) {
  Json out;
  out["degree"] = f.degree();
  out["basis"] = "F";
  Json coeffs = Json::array();
  for (const auto& [alpha, c] : f.coeffs()) {
    Json entry;
    entry["composition"] = alpha.parts();
    entry["poly"] = to_json(c);
    coeffs.push_back(entry);
  }
  out["coeffs"] = coeffs;
  return out;
}

Json to_json(const RelationReport& rep) {
  Json out;
  out["relation"] = rep.relation;
  if (!rep.area.empty()) out["area"] = rep.area;
  if (rep.i) out["i"] = rep.i;
  if (rep.ell) out["l"] = rep.ell;
  if (rep.k) out["k"] = rep.k;
  out["hypothesis_ok"] = rep.hypothesis_ok;
  out["identity_ok"] = rep.identity_ok;
  if (rep.witness) {
    Json w;
    w["what"] = rep.witness->what;
    if (rep.witness->partition) w["partition"] = rep.witness->partition->parts();
    if (rep.witness->q_power) w["q_power"] = *rep.witness->q_power;
    if (!rep.witness->values.empty()) w["values"] = rep.witness->values;
    out["witness"] = w;
  }
  return out;
}

Json to_json(const UnitIntervalGraph& g) {
  Json out;
  out["n"] = g.n();
  out["mseq"] = g.mseq();
  out["area"] = g.to_area().area();
  out["edges"] = g.edge_count();
  return out;
}

namespace {

bool try_divide(QPoly& r, const QPoly& d) {
  try {
    r = exact_div(r, d);
    return true;
  } catch (const NonzeroRemainder&) {
    return false;
  }
}

}  // namespace

std::string latex(const QPoly& p) {
  if (p.is_zero()) return "0";
  int shift = 0;
  while (p.coeff(shift) == 0) ++shift;
  QPoly r = shift ? exact_div(p, q_power<Int>(shift)) : p;

  std::vector<std::string> factors;
  // greedy: factorials first (largest), then single brackets (largest)
  for (int f = r.degree() + 1; f >= 3; --f) {
    if (f * (f - 1) / 2 > r.degree()) continue;
    QPoly fact = q_factorial(f);
    while (try_divide(r, fact)) factors.push_back("[" + std::to_string(f) + "]_q!");
  }
  for (int f = r.degree() + 1; f >= 2; --f) {
    QPoly bracket = q_int(f);
    while (try_divide(r, bracket)) factors.push_back("[" + std::to_string(f) + "]_q");
  }

  std::ostringstream ss;
  bool emitted = false;
  if (r.degree() == 0) {
    if (r.coeff(0) != 1 || (factors.empty() && shift == 0)) {
      ss << r.coeff(0);
      emitted = true;
    }
  }
  if (shift > 0) {
    if (emitted) ss << " ";
    ss << "q";
    if (shift > 1) ss << "^{" << shift << "}";
    emitted = true;
  }
  for (const auto& f : factors) {
    if (emitted) ss << " ";
    ss << f;
    emitted = true;
  }
  if (r.degree() > 0) {
    if (emitted) ss << " ";
    ss << "(" << r.to_string() << ")";
  }
  return ss.str();
}

namespace {

std::string subscript(const Partition& lam) {
  bool wide = false;
  for (int p : lam.parts())
    if (p >= 10) wide = true;
  std::ostringstream ss;
  for (std::size_t i = 0; i < lam.parts().size(); ++i) {
    if (i && wide) ss << ",";
    ss << lam.parts()[i];
  }
  std::string body = ss.str();
  if (body.empty()) body = "\\varnothing";
  if (body.size() == 1) return "_" + body;
  return "_{" + body + "}";
}

}  // namespace

std::string latex(const SymExpansion& f) {
  auto coeffs = f.integral_coeffs();
  if (coeffs.empty()) return "0";
  std::ostringstream ss;
  bool first = true;
  for (const auto& [lam, c] : coeffs) {
    if (!first) ss << " + ";
    first = false;
    std::string cs = latex(c);
    if (cs == "1") cs.clear();  // sums come back parenthesized already
    if (!cs.empty()) ss << cs << " ";
    ss << basis_name(f.basis()) << subscript(lam);
  }
  return ss.str();
}

}  // namespace qchrom
