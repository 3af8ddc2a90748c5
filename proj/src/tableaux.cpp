#include "qchrom/tableaux.hpp"

#include <algorithm>
#include <sstream>

namespace qchrom {

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.contains(inner_))
    throw ShapeMismatch("SkewShape: inner shape not contained in outer");
}

bool SkewShape::has_cell(int row, int col) const {
  return row >= 1 && row <= outer_.length() && col > inner_.part(row) &&
         col <= outer_.part(row);
}

Tableau::Tableau(SkewShape shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.outer().length())
    throw ShapeMismatch("Tableau: row count does not match shape");
  for (int i = 1; i <= shape_.outer().length(); ++i) {
    int expect = shape_.outer().part(i) - shape_.inner().part(i);
    if (static_cast<int>(rows_[i - 1].size()) != expect)
      throw ShapeMismatch("Tableau: row length does not match shape");
  }
}

int Tableau::at(int row, int col) const {
  if (!shape_.has_cell(row, col))
    throw ShapeMismatch("Tableau::at: no such cell");
  return rows_[row - 1][col - shape_.inner().part(row) - 1];
}

bool Tableau::is_semistandard() const {
  const auto& out = shape_.outer();
  const auto& in = shape_.inner();
  for (int i = 1; i <= out.length(); ++i) {
    for (int j = in.part(i) + 1; j <= out.part(i); ++j) {
      int v = at(i, j);
      if (v < 1) return false;
      if (shape_.has_cell(i, j + 1) && at(i, j + 1) < v) return false;
      if (shape_.has_cell(i + 1, j) && at(i + 1, j) <= v) return false;
    }
  }
  return true;
}

bool Tableau::is_standard() const {
  if (!is_semistandard()) return false;
  int n = cell_count();
  std::vector<bool> seen(n + 1, false);
  for (const auto& row : rows_)
    for (int v : row) {
      if (v < 1 || v > n || seen[v]) return false;
      seen[v] = true;
    }
  return true;
}

std::vector<int> Tableau::weight() const {
  int maxv = 0;
  for (const auto& row : rows_)
    for (int v : row) maxv = std::max(maxv, v);
  std::vector<int> w(maxv, 0);
  for (const auto& row : rows_)
    for (int v : row) ++w[v - 1];
  return w;
}

std::pair<int, int> Tableau::find(int value) const {
  for (int i = 1; i <= shape_.outer().length(); ++i)
    for (int j = shape_.inner().part(i) + 1; j <= shape_.outer().part(i); ++j)
      if (at(i, j) == value) return {i, j};
  throw ShapeMismatch("Tableau::find: value not present");
}

std::vector<int> Tableau::row_reading_word() const {
  std::vector<int> w;
  for (const auto& row : rows_) w.insert(w.end(), row.begin(), row.end());
  return w;
}

bool Tableau::operator==(const Tableau& o) const {
  return shape_ == o.shape_ && rows_ == o.rows_;
}

bool Tableau::operator<(const Tableau& o) const {
  if (!(shape_.outer() == o.shape_.outer()))
    return shape_.outer() < o.shape_.outer();
  if (!(shape_.inner() == o.shape_.inner()))
    return shape_.inner() < o.shape_.inner();
  return rows_ < o.rows_;
}

std::string Tableau::to_string() const {
  std::ostringstream ss;
  for (int i = 1; i <= shape_.outer().length(); ++i) {
    if (i > 1) ss << " / ";
    for (int j = 1; j <= shape_.outer().part(i); ++j) {
      if (j > 1) ss << " ";
      if (j <= shape_.inner().part(i)) ss << ".";
      else ss << at(i, j);
    }
  }
  return ss.str();
}

namespace {

struct CellList {
  std::vector<std::pair<int, int>> cells;  // row-major order
  explicit CellList(const SkewShape& s) {
    for (int i = 1; i <= s.outer().length(); ++i)
      for (int j = s.inner().part(i) + 1; j <= s.outer().part(i); ++j)
        cells.emplace_back(i, j);
  }
};

Tableau from_entries(const SkewShape& shape,
                     const std::map<std::pair<int, int>, int>& entries) {
  std::vector<std::vector<int>> rows(shape.outer().length());
  for (int i = 1; i <= shape.outer().length(); ++i)
    for (int j = shape.inner().part(i) + 1; j <= shape.outer().part(i); ++j)
      rows[i - 1].push_back(entries.at({i, j}));
  return Tableau(shape, std::move(rows));
}

void ssyt_rec(const SkewShape& shape, const CellList& cl, int max_entry,
              std::size_t idx, std::map<std::pair<int, int>, int>& entries,
              const std::function<void(const Tableau&)>& fn) {
  if (idx == cl.cells.size()) {
    fn(from_entries(shape, entries));
    return;
  }
  auto [i, j] = cl.cells[idx];
  int lo = 1;
  auto left = entries.find({i, j - 1});
  if (left != entries.end()) lo = std::max(lo, left->second);
  auto up = entries.find({i - 1, j});
  if (up != entries.end()) lo = std::max(lo, up->second + 1);
  for (int v = lo; v <= max_entry; ++v) {
    entries[{i, j}] = v;
    ssyt_rec(shape, cl, max_entry, idx + 1, entries, fn);
  }
  entries.erase({i, j});
}

void syt_rec(const SkewShape& shape, int value, int total,
             std::map<std::pair<int, int>, int>& entries,
             const std::function<void(const Tableau&)>& fn) {
  if (value > total) {
    fn(from_entries(shape, entries));
    return;
  }
  for (int i = 1; i <= shape.outer().length(); ++i) {
    for (int j = shape.inner().part(i) + 1; j <= shape.outer().part(i); ++j) {
      if (entries.count({i, j})) continue;
      bool left_ok = j == shape.inner().part(i) + 1 || entries.count({i, j - 1});
      bool up_ok = !shape.has_cell(i - 1, j) || entries.count({i - 1, j});
      if (left_ok && up_ok) {
        entries[{i, j}] = value;
        syt_rec(shape, value + 1, total, entries, fn);
        entries.erase({i, j});
      }
    }
  }
}

}  // namespace

void ssyt_enumerate(const SkewShape& shape, int max_entry,
                    const std::function<void(const Tableau&)>& fn) {
  CellList cl(shape);
  std::map<std::pair<int, int>, int> entries;
  ssyt_rec(shape, cl, max_entry, 0, entries, fn);
}

std::vector<Tableau> ssyt_enumerate(const SkewShape& shape, int max_entry) {
  std::vector<Tableau> out;
  ssyt_enumerate(shape, max_entry, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

void syt_enumerate(const SkewShape& shape,
                   const std::function<void(const Tableau&)>& fn) {
  std::map<std::pair<int, int>, int> entries;
  syt_rec(shape, 1, shape.cell_count(), entries, fn);
}

std::vector<Tableau> syt_enumerate(const SkewShape& shape) {
  std::vector<Tableau> out;
  syt_enumerate(shape, [&](const Tableau& t) { out.push_back(t); });
  return out;
}

std::set<int> descent_set(const Tableau& T) {
  int n = T.cell_count();
  std::vector<int> row_of(n + 1, 0);
  for (int i = 1; i <= T.shape().outer().length(); ++i)
    for (int j = T.shape().inner().part(i) + 1; j <= T.shape().outer().part(i); ++j)
      row_of[T.at(i, j)] = i;
  std::set<int> d;
  for (int i = 1; i < n; ++i)
    if (row_of[i + 1] > row_of[i]) d.insert(i);
  return d;
}

namespace {

// One inward slide on an entry map. Returns the final hole position. The
// hole moves toward whichever of the south/east neighbours must fill it:
// south when its value is <= east (ties go south), east otherwise.
std::pair<int, int> jdt_slide(std::map<std::pair<int, int>, int>& entries,
                              std::pair<int, int> hole) {
  for (;;) {
    auto south = entries.find({hole.first + 1, hole.second});
    auto east = entries.find({hole.first, hole.second + 1});
    if (south == entries.end() && east == entries.end()) return hole;
    bool move_south =
        south != entries.end() &&
        (east == entries.end() || south->second <= east->second);
    auto pick = move_south ? south : east;
    auto pos = pick->first;
    entries[hole] = pick->second;
    entries.erase(pick);
    hole = pos;
  }
}

std::vector<std::pair<int, int>> inner_corners(const Partition& mu) {
  std::vector<std::pair<int, int>> out;
  for (int i = 1; i <= mu.length(); ++i)
    if (mu.part(i) > mu.part(i + 1)) out.emplace_back(i, mu.part(i));
  return out;
}

Partition remove_cell(const Partition& p, std::pair<int, int> cell) {
  std::vector<int> parts = p.parts();
  parts[cell.first - 1] -= 1;
  return partition_from_parts(std::move(parts));
}

}  // namespace

Tableau jdt_rectify_with_choices(
    const Tableau& T,
    const std::function<std::size_t(const std::vector<std::pair<int, int>>&)>& chooser) {
  std::map<std::pair<int, int>, int> entries;
  const auto& sh = T.shape();
  for (int i = 1; i <= sh.outer().length(); ++i)
    for (int j = sh.inner().part(i) + 1; j <= sh.outer().part(i); ++j)
      entries[{i, j}] = T.at(i, j);
  Partition outer = sh.outer(), inner = sh.inner();
  while (inner.length() > 0) {
    auto corners = inner_corners(inner);
    auto corner = corners[chooser(corners) % corners.size()];
    auto exit = jdt_slide(entries, corner);
    inner = remove_cell(inner, corner);
    outer = remove_cell(outer, exit);
  }
  return from_entries(SkewShape(outer), entries);
}

Tableau jdt_rectify(const Tableau& T) {
  return jdt_rectify_with_choices(
      T, [](const std::vector<std::pair<int, int>>& corners) {
        return corners.size() - 1;  // bottom-most corner
      });
}

Tableau row_tableau(const Partition& lambda) {
  std::vector<std::vector<int>> rows;
  int next = 1;
  for (int i = 1; i <= lambda.length(); ++i) {
    std::vector<int> row(lambda.part(i));
    for (int& v : row) v = next++;
    rows.push_back(std::move(row));
  }
  return Tableau(SkewShape(lambda), std::move(rows));
}

long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu) {
  if (nu.size() != lambda.size() + mu.size())
    throw ShapeMismatch("lr_coefficient: |nu| != |lambda| + |mu|");
  if (!nu.contains(lambda))
    throw ShapeMismatch("lr_coefficient: lambda not contained in nu");
  Tableau target = row_tableau(mu);
  long long count = 0;
  syt_enumerate(SkewShape(nu, lambda), [&](const Tableau& t) {
    if (jdt_rectify(t) == target) ++count;
  });
  return count;
}

std::pair<Tableau, Tableau> tableau_switch(const Tableau& T, const Tableau& S) {
  if (!(T.shape().outer() == S.shape().inner()))
    throw ShapeMismatch("tableau_switch: shapes do not nest");
  const Partition& lambda = T.shape().inner();
  const Partition& nu = S.shape().outer();
  if (!T.is_standard() || !S.is_standard())
    throw ShapeMismatch("tableau_switch: inputs must be standard");

  // Entries of S slide through the holes left by T, largest T entry first.
  // Cells already re-occupied by T block later slides.
  std::map<std::pair<int, int>, int> s_cells, t_cells;
  for (int i = 1; i <= S.shape().outer().length(); ++i)
    for (int j = S.shape().inner().part(i) + 1; j <= S.shape().outer().part(i); ++j)
      s_cells[{i, j}] = S.at(i, j);
  std::vector<std::pair<int, int>> t_pos(T.cell_count() + 1);
  for (int i = 1; i <= T.shape().outer().length(); ++i)
    for (int j = T.shape().inner().part(i) + 1; j <= T.shape().outer().part(i); ++j)
      t_pos[T.at(i, j)] = {i, j};

  for (int t = T.cell_count(); t >= 1; --t) {
    auto hole = t_pos[t];
    for (;;) {
      auto south = s_cells.find({hole.first + 1, hole.second});
      auto east = s_cells.find({hole.first, hole.second + 1});
      if (south == s_cells.end() && east == s_cells.end()) break;
      bool move_south =
          south != s_cells.end() &&
          (east == s_cells.end() || south->second <= east->second);
      auto pick = move_south ? south : east;
      auto pos = pick->first;
      s_cells[hole] = pick->second;
      s_cells.erase(pick);
      hole = pos;
    }
    t_cells[hole] = t;
  }

  // The S material now fills sigma/lambda for a partition sigma.
  std::vector<int> sigma_rows(nu.length());
  for (int i = 1; i <= nu.length(); ++i) sigma_rows[i - 1] = lambda.part(i);
  for (const auto& [cell, v] : s_cells) {
    (void)v;
    sigma_rows[cell.first - 1] = std::max(sigma_rows[cell.first - 1], cell.second);
  }
  while (!sigma_rows.empty() && sigma_rows.back() == 0) sigma_rows.pop_back();
  Partition sigma(std::move(sigma_rows));
  SkewShape s_shape(sigma, lambda), t_shape(nu, sigma);
  if (static_cast<int>(s_cells.size()) != s_shape.cell_count() ||
      static_cast<int>(t_cells.size()) != t_shape.cell_count())
    throw ShapeMismatch("tableau_switch: result cells do not form skew shapes");
  for (const auto& [cell, v] : s_cells) {
    (void)v;
    if (!s_shape.has_cell(cell.first, cell.second))
      throw ShapeMismatch("tableau_switch: S material is not a skew shape");
  }
  return {from_entries(s_shape, s_cells), from_entries(t_shape, t_cells)};
}

std::pair<Tableau, Tableau> rsk(const std::vector<int>& word) {
  std::vector<std::vector<int>> p_rows, q_rows;
  for (std::size_t step = 0; step < word.size(); ++step) {
    int x = word[step];
    std::size_t r = 0;
    for (;; ++r) {
      if (r == p_rows.size()) {
        p_rows.emplace_back();
        q_rows.emplace_back();
      }
      auto& row = p_rows[r];
      auto it = std::upper_bound(row.begin(), row.end(), x);
      if (it == row.end()) {
        row.push_back(x);
        q_rows[r].push_back(static_cast<int>(step) + 1);
        break;
      }
      std::swap(*it, x);
    }
  }
  std::vector<int> shape;
  for (const auto& row : p_rows) shape.push_back(static_cast<int>(row.size()));
  SkewShape sh((Partition(shape)));
  return {Tableau(sh, std::move(p_rows)), Tableau(sh, std::move(q_rows))};
}

std::vector<int> standardize(const std::vector<int>& word) {
  std::vector<std::pair<int, int>> keyed;
  keyed.reserve(word.size());
  for (std::size_t i = 0; i < word.size(); ++i)
    keyed.emplace_back(word[i], static_cast<int>(i));
  std::sort(keyed.begin(), keyed.end());
  std::vector<int> out(word.size());
  for (std::size_t rank = 0; rank < keyed.size(); ++rank)
    out[keyed[rank].second] = static_cast<int>(rank) + 1;
  return out;
}

std::set<int> word_descents(const std::vector<int>& word) {
  std::set<int> d;
  for (std::size_t i = 0; i + 1 < word.size(); ++i)
    if (word[i] > word[i + 1]) d.insert(static_cast<int>(i) + 1);
  return d;
}

int cocharge(const Tableau& T) {
  if (!T.shape().is_straight() || !T.is_standard())
    throw ShapeMismatch("cocharge: standard straight tableau required");
  int n = T.cell_count();
  std::vector<int> word;
  for (int i = T.shape().outer().length(); i >= 1; --i)
    for (int j = 1; j <= T.shape().outer().part(i); ++j)
      word.push_back(T.at(i, j));
  std::vector<int> pos(n + 1, 0);
  for (int i = 0; i < n; ++i) pos[word[i]] = i;
  int total = 0, cc = 0;
  for (int v = 2; v <= n; ++v) {
    if (pos[v] < pos[v - 1]) ++cc;
    total += cc;
  }
  return total;
}

}  // namespace qchrom
