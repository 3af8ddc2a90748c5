#include "qchrom/unigraphs.hpp"

#include <algorithm>
#include <numeric>

namespace qchrom {

DyckDiagram::DyckDiagram(std::vector<int> area) : area_(std::move(area)) {
  int n = static_cast<int>(area_.size());
  if (n == 0) return;
  if (area_[n - 1] != 0)
    throw InvalidArea("area sequence must end with 0", n);
  for (int i = 1; i <= n; ++i) {
    if (area_[i - 1] < 0 || area_[i - 1] > n - i)
      throw InvalidArea("area entry out of range", i);
    if (i < n && area_[i] < area_[i - 1] - 1)
      throw InvalidArea("area sequence drops by more than 1", i + 1);
  }
}

int DyckDiagram::cell_count() const {
  return std::accumulate(area_.begin(), area_.end(), 0);
}

bool DyckDiagram::has_position_pair(int i, int j) const {
  int n = this->n();
  if (i < 1 || j > n || i >= j) return false;
  return i >= j - area_[n - j];  // a_{n+1-j}, 0-based
}

UnitIntervalGraph UnitIntervalGraph::from_mseq(std::vector<int> mseq) {
  UnitIntervalGraph g;
  g.n_ = static_cast<int>(mseq.size()) + 1;
  for (int i = 1; i <= static_cast<int>(mseq.size()); ++i) {
    if (mseq[i - 1] < i || mseq[i - 1] > g.n_)
      throw InvalidMSeq("m-sequence entry outside [i, n]", i);
    if (i > 1 && mseq[i - 1] < mseq[i - 2])
      throw InvalidMSeq("m-sequence must be nondecreasing", i);
  }
  g.mseq_ = std::move(mseq);
  return g;
}

UnitIntervalGraph UnitIntervalGraph::from_area(const std::vector<int>& area) {
  return from_area(DyckDiagram(area));
}

UnitIntervalGraph UnitIntervalGraph::from_area(const DyckDiagram& d) {
  if (d.n() == 0) return empty();
  std::vector<int> mseq(d.n() - 1);
  for (int i = 1; i < d.n(); ++i) mseq[i - 1] = i + d.area()[i - 1];
  return from_mseq(std::move(mseq));
}

DyckDiagram UnitIntervalGraph::to_area() const {
  if (n_ == 0) return DyckDiagram();
  std::vector<int> a(n_, 0);
  for (int i = 1; i < n_; ++i) a[i - 1] = mseq_[i - 1] - i;
  return DyckDiagram(std::move(a));
}

std::vector<std::pair<int, int>> UnitIntervalGraph::edges() const {
  std::vector<std::pair<int, int>> e;
  for (int i = 1; i < n_; ++i)
    for (int j = i + 1; j <= mseq_[i - 1]; ++j) e.emplace_back(i, j);
  return e;
}

int UnitIntervalGraph::edge_count() const {
  int c = 0;
  for (int i = 1; i < n_; ++i) c += mseq_[i - 1] - i;
  return c;
}

UnitIntervalGraph complete(int n) {
  if (n < 0) throw RangeError("complete: n must be >= 0");
  if (n == 0) return UnitIntervalGraph::empty();
  std::vector<int> mseq(n - 1, n);
  return UnitIntervalGraph::from_mseq(std::move(mseq));
}

UnitIntervalGraph path(int n) {
  if (n < 0) throw RangeError("path: n must be >= 0");
  if (n == 0) return UnitIntervalGraph::empty();
  std::vector<int> mseq(n - 1);
  for (int i = 1; i < n; ++i) mseq[i - 1] = i + 1;
  return UnitIntervalGraph::from_mseq(std::move(mseq));
}

UnitIntervalGraph lollipop(int m, int n) {
  if (m == 0) return path(n);
  if (m < 2 || n < 0) throw RangeError("lollipop: need m >= 2 (or 0), n >= 0");
  std::vector<int> mseq(m + n - 1);
  for (int i = 1; i <= n; ++i) mseq[i - 1] = i + 1;
  for (int i = n + 1; i <= m + n - 1; ++i) mseq[i - 1] = m + n;
  return UnitIntervalGraph::from_mseq(std::move(mseq));
}

UnitIntervalGraph melting_lollipop(int m, int n, int k) {
  if (m < 2 || n < 0) throw RangeError("melting_lollipop: need m >= 2, n >= 0");
  if (k < 0 || k > m - 1)
    throw RangeError("melting_lollipop: need 0 <= k <= m-1");
  std::vector<int> mseq(m + n - 1);
  for (int i = 1; i <= n; ++i) mseq[i - 1] = i + 1;
  mseq[n] = m + n - k;
  for (int i = n + 2; i <= m + n - 1; ++i) mseq[i - 1] = m + n;
  return UnitIntervalGraph::from_mseq(std::move(mseq));
}

UnitIntervalGraph complete_deleted(int n, int k) {
  if (n < 1) throw RangeError("complete_deleted: need n >= 1");
  if (k < 0 || k > n - 1)
    throw RangeError("complete_deleted: need 0 <= k <= n-1");
  if (n == 1) return complete(1);
  std::vector<int> mseq(n - 1, n);
  mseq[0] = n - k;
  return UnitIntervalGraph::from_mseq(std::move(mseq));
}

namespace {

UnitIntervalGraph from_edge_set(int n, const std::vector<std::pair<int, int>>& edges) {
  // recover the m-sequence and check the edge set is exactly of interval form
  std::vector<int> mseq(std::max(n - 1, 0));
  for (int i = 1; i < n; ++i) mseq[i - 1] = i;
  for (auto [u, v] : edges) {
    if (u < 1 || v > n || u >= v) throw NotUnitInterval("bad edge endpoints");
    mseq[u - 1] = std::max(mseq[u - 1], v);
  }
  std::vector<std::vector<bool>> adj(n + 1, std::vector<bool>(n + 1, false));
  for (auto [u, v] : edges) adj[u][v] = true;
  for (int i = 1; i < n; ++i) {
    if (i > 1 && mseq[i - 1] < mseq[i - 2])
      throw NotUnitInterval("edge set has no nondecreasing m-sequence");
    for (int j = i + 1; j <= n; ++j) {
      bool want = j <= mseq[i - 1];
      if (adj[i][j] != want)
        throw NotUnitInterval("edge set is not an interval at vertex " +
                              std::to_string(i));
    }
  }
  return UnitIntervalGraph::from_mseq(std::move(mseq));
}

}  // namespace

UnitIntervalGraph glue_sum(const UnitIntervalGraph& g, const UnitIntervalGraph& h) {
  if (g.n() == 0 || h.n() == 0)
    throw RangeError("glue_sum: both operands need a vertex to share");
  int n = g.n(), total = g.n() + h.n() - 1;
  std::vector<std::pair<int, int>> edges = g.edges();
  for (auto [u, v] : h.edges()) edges.emplace_back(u + n - 1, v + n - 1);
  return from_edge_set(total, edges);
}

UnitIntervalGraph disjoint_union(const UnitIntervalGraph& g,
                                 const UnitIntervalGraph& h) {
  std::vector<int> area = g.to_area().area();
  const auto& hb = h.to_area().area();
  area.insert(area.end(), hb.begin(), hb.end());
  return UnitIntervalGraph::from_area(area);
}

void enumerate_nuio(int n, const std::function<void(const UnitIntervalGraph&)>& fn) {
  if (n == 0) {
    fn(UnitIntervalGraph::empty());
    return;
  }
  std::vector<int> mseq(n - 1);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      fn(UnitIntervalGraph::from_mseq(mseq));
      return;
    }
    int lo = std::max(i, i == 1 ? 1 : mseq[i - 2]);
    for (int v = lo; v <= n; ++v) {
      mseq[i - 1] = v;
      rec(i + 1);
    }
  };
  rec(1);
}

std::vector<UnitIntervalGraph> enumerate_nuio(int n) {
  std::vector<UnitIntervalGraph> out;
  enumerate_nuio(n, [&](const UnitIntervalGraph& g) { out.push_back(g); });
  return out;
}

}  // namespace qchrom
