#ifndef QCHROM_PARTITIONS_HPP
#define QCHROM_PARTITIONS_HPP

#include <set>
#include <vector>

#include "qchrom/errors.hpp"

namespace qchrom {

// Weakly decreasing sequence of positive integers. The empty partition is
// the unique partition of 0.
class Partition {
public:
  Partition() = default;
  explicit Partition(std::vector<int> parts);

  int size() const;                  // sum of parts
  int length() const { return static_cast<int>(parts_.size()); }
  int part(int i) const;             // 1-based; 0 beyond the length
  const std::vector<int>& parts() const { return parts_; }

  Partition conjugate() const;
  bool contains(const Partition& inner) const;  // cellwise inclusion

  // canonical order: lexicographically decreasing part lists. For partitions
  // of equal size this is a linear extension of dominance, which is what the
  // triangular basis changes rely on.
  bool operator<(const Partition& o) const { return parts_ > o.parts_; }
  bool operator==(const Partition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Partition& o) const { return parts_ != o.parts_; }

  std::string to_string() const;

private:
  std::vector<int> parts_;
};

// Sequence of positive integers (order matters).
class Composition {
public:
  Composition() = default;
  explicit Composition(std::vector<int> parts);

  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  const std::vector<int>& parts() const { return parts_; }

  Partition sorted() const;  // rearrange into a partition

  bool operator<(const Composition& o) const { return parts_ < o.parts_; }
  bool operator==(const Composition& o) const { return parts_ == o.parts_; }
  bool operator!=(const Composition& o) const { return parts_ != o.parts_; }

  std::string to_string() const;

private:
  std::vector<int> parts_;
};

// complete enumerations, in the canonical orders of the types above
std::vector<Partition> partitions_of(int n);
std::vector<Composition> compositions_of(int n);

// descent set D of {1..n-1} <-> composition of n
Composition composition_of_descents(const std::set<int>& descents, int n);
std::set<int> descents_of_composition(const Composition& alpha);

// all compositions refining alpha (beta finer than alpha, including alpha)
std::vector<Composition> refinements(const Composition& alpha);
// all compositions coarsened from beta by merging adjacent parts (incl. beta)
std::vector<Composition> coarsenings(const Composition& beta);
bool refines(const Composition& beta, const Composition& alpha);

// helper used by the e-basis expansions: sort a part list into a Partition,
// dropping zero parts
Partition partition_from_parts(std::vector<int> parts);

}  // namespace qchrom

#endif
