#ifndef QCHROM_RENDER_HPP
#define QCHROM_RENDER_HPP

#include <json.hpp>

#include "qchrom/report.hpp"
#include "qchrom/symfunc.hpp"
#include "qchrom/unigraphs.hpp"

namespace qchrom {

using Json = nlohmann::ordered_json;

Json to_json(const QPoly& p);  // ascending coefficient list of decimal strings
Json to_json(const SymExpansion& f);      // integral coefficients required
Json to_json(const QuasiExpansion& f);
Json to_json(const RelationReport& rep);
Json to_json(const UnitIntervalGraph& g);

// LaTeX with q-bracket folding: recognizable factors become q^a [n]_q [m]_q!
// by greedy matching (factorials first, largest brackets first); anything
// left over is emitted as a parenthesized raw polynomial.
std::string latex(const QPoly& p);
std::string latex(const SymExpansion& f);

}  // namespace qchrom

#endif
