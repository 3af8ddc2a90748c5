#ifndef QCHROM_REPORT_HPP
#define QCHROM_REPORT_HPP

#include <optional>
#include <string>
#include <vector>

#include "qchrom/partitions.hpp"

namespace qchrom {

// Machine-readable witness of a failed check: enough to replay the single
// failing instance.
struct Witness {
  std::string what;                      // which sub-check tripped
  std::optional<Partition> partition;    // offending basis element, if any
  std::optional<int> q_power;            // offending q-power, if any
  std::vector<std::string> values;       // exact values involved, as strings
};

struct RelationReport {
  std::string relation;                  // "lee", "kdel", "equiv", ...
  std::vector<int> area;                 // area sequence parameter, if any
  int i = 0;
  int ell = 0;
  int k = 0;
  // identity_ok is only meaningful when hypothesis_ok
  bool hypothesis_ok = true;
  bool identity_ok = true;
  std::optional<Witness> witness;

  bool passed() const { return !hypothesis_ok || identity_ok; }
};

}  // namespace qchrom

#endif
