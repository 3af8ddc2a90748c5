#ifndef QCHROM_UNIGRAPHS_HPP
#define QCHROM_UNIGRAPHS_HPP

#include <functional>
#include <utility>
#include <vector>

#include "qchrom/errors.hpp"

namespace qchrom {

// Area sequence (a_1..a_n) of a Dyck diagram: a_n = 0, 0 <= a_i <= n-i and
// a_{i+1} >= a_i - 1. Row i of the diagram, read from the top, has a_i
// cells; equivalently the graph below has edges {i,j} for i < j <= i + a_i.
class DyckDiagram {
public:
  DyckDiagram() = default;
  explicit DyckDiagram(std::vector<int> area);

  int n() const { return static_cast<int>(area_.size()); }
  const std::vector<int>& area() const { return area_; }
  int cell_count() const;

  // positions index the diagonal in content reading order (bottom-left = 1);
  // the pair (i,j), i<j, is a cell of the diagram iff i >= j - a_{n+1-j}
  bool has_position_pair(int i, int j) const;

  bool operator==(const DyckDiagram& o) const { return area_ == o.area_; }
  bool operator!=(const DyckDiagram& o) const { return area_ != o.area_; }
  bool operator<(const DyckDiagram& o) const { return area_ < o.area_; }

private:
  std::vector<int> area_;
};

// Natural unit interval order on [n], canonically encoded by its m-sequence
// (m_1..m_{n-1}): nondecreasing with i <= m_i <= n. The incomparability
// graph has edges {i,j} for i < j <= m_i. The area sequence and edge set are
// derived views.
class UnitIntervalGraph {
public:
  UnitIntervalGraph() = default;  // the empty graph (n = 0)

  // n is inferred as len(mseq) + 1; use empty() for the 0-vertex graph
  static UnitIntervalGraph from_mseq(std::vector<int> mseq);
  static UnitIntervalGraph from_area(const std::vector<int>& area);
  static UnitIntervalGraph from_area(const DyckDiagram& d);
  static UnitIntervalGraph empty() { return UnitIntervalGraph(); }

  int n() const { return n_; }
  const std::vector<int>& mseq() const { return mseq_; }
  DyckDiagram to_area() const;
  std::vector<std::pair<int, int>> edges() const;
  int edge_count() const;

  bool operator==(const UnitIntervalGraph& o) const {
    return n_ == o.n_ && mseq_ == o.mseq_;
  }
  bool operator!=(const UnitIntervalGraph& o) const { return !(*this == o); }

private:
  int n_ = 0;
  std::vector<int> mseq_;
};

UnitIntervalGraph complete(int n);
UnitIntervalGraph path(int n);

// P_{n+1} glued to K_m at vertex n+1; m = 0 degenerates to the path P_n and
// m = 1 is rejected (use path directly)
UnitIntervalGraph lollipop(int m, int n);

// lollipop with the k highest edges at the junction vertex n+1 removed
UnitIntervalGraph melting_lollipop(int m, int n, int k);

// K_n with edges {1, n-k+1}, ..., {1, n} removed
UnitIntervalGraph complete_deleted(int n, int k);

// G + H: H's first vertex is identified with G's last; edge sets united.
// Throws NotUnitInterval when the union is not of m-sequence form.
UnitIntervalGraph glue_sum(const UnitIntervalGraph& g, const UnitIntervalGraph& h);

UnitIntervalGraph disjoint_union(const UnitIntervalGraph& g,
                                 const UnitIntervalGraph& h);

// all natural unit interval graphs on n vertices (Catalan-many), in
// lexicographic m-sequence order
std::vector<UnitIntervalGraph> enumerate_nuio(int n);
void enumerate_nuio(int n, const std::function<void(const UnitIntervalGraph&)>& fn);

}  // namespace qchrom

#endif
