#ifndef QCHROM_TABLEAUX_HPP
#define QCHROM_TABLEAUX_HPP

#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "qchrom/partitions.hpp"

namespace qchrom {

// Rows are indexed 1..len(outer) starting at the row of length outer_1,
// columns 1..outer_i; the cell set is {(i,j) : inner_i < j <= outer_i}.
// All drawings in this codebase are index-based; renderers pick their own
// visual convention.
class SkewShape {
public:
  SkewShape() = default;
  SkewShape(Partition outer, Partition inner);
  explicit SkewShape(Partition straight) : SkewShape(std::move(straight), Partition()) {}

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  bool is_straight() const { return inner_.length() == 0; }
  int cell_count() const { return outer_.size() - inner_.size(); }
  bool has_cell(int row, int col) const;
  // content of cell (i,j) is i - j
  static int content(int row, int col) { return row - col; }

  bool operator==(const SkewShape& o) const {
    return outer_ == o.outer_ && inner_ == o.inner_;
  }

private:
  Partition outer_, inner_;
};

// Filling of a skew shape: rows weakly increasing, columns strictly
// increasing. Standard means the entries are a bijection onto {1..n}.
class Tableau {
public:
  Tableau() = default;
  // rows[i] holds entries of row i+1, columns inner_{i+1}+1 .. outer_{i+1}
  Tableau(SkewShape shape, std::vector<std::vector<int>> rows);

  const SkewShape& shape() const { return shape_; }
  int cell_count() const { return shape_.cell_count(); }
  int at(int row, int col) const;  // requires the cell to exist
  bool is_semistandard() const;
  bool is_standard() const;
  std::vector<int> weight() const;

  // position of a value (standard tableaux only)
  std::pair<int, int> find(int value) const;

  // row-reading word: rows top to bottom, left to right (used for the
  // deterministic enumeration order)
  std::vector<int> row_reading_word() const;

  bool operator==(const Tableau& o) const;
  bool operator<(const Tableau& o) const;  // container order

  std::string to_string() const;

private:
  SkewShape shape_;
  std::vector<std::vector<int>> rows_;
};

// every semistandard filling with entries <= max_entry, in lexicographic
// order of the row-reading word
std::vector<Tableau> ssyt_enumerate(const SkewShape& shape, int max_entry);
// callback form, for streams that would be large
void ssyt_enumerate(const SkewShape& shape, int max_entry,
                    const std::function<void(const Tableau&)>& fn);

std::vector<Tableau> syt_enumerate(const SkewShape& shape);
void syt_enumerate(const SkewShape& shape,
                   const std::function<void(const Tableau&)>& fn);

// D(T) = {i : i+1 lies in a strictly lower row than i}; rows are indexed
// from the row of length lambda_1 outward, which makes the reading-order
// phrasing and the lower-row phrasing coincide.
std::set<int> descent_set(const Tableau& T);

// jeu de taquin rectification; the result is independent of the order in
// which inside corners are chosen
Tableau jdt_rectify(const Tableau& T);

// rectification with an explicit corner-choice policy, used to test order
// independence: chooser receives the list of available inner corners and
// returns an index into it
Tableau jdt_rectify_with_choices(
    const Tableau& T,
    const std::function<std::size_t(const std::vector<std::pair<int, int>>&)>& chooser);

Tableau row_tableau(const Partition& lambda);

// number of SYT of shape nu/lambda rectifying to the row tableau of mu
long long lr_coefficient(const Partition& lambda, const Partition& mu,
                         const Partition& nu);

// Benkart-Sottile-Stroomer switching: T standard of mu/lambda, S standard of
// nu/mu; returns (S_out of shape sigma/lambda, T_out of shape nu/sigma).
std::pair<Tableau, Tableau> tableau_switch(const Tableau& T, const Tableau& S);

// RSK row insertion of a word; P semistandard with the word's content,
// Q standard of the same shape
std::pair<Tableau, Tableau> rsk(const std::vector<int>& word);

std::vector<int> standardize(const std::vector<int>& word);

// word descents {i : w_i > w_{i+1}}
std::set<int> word_descents(const std::vector<int>& word);

// cocharge of a standard tableau of straight shape: cocharge of the reading
// word (rows bottom to top, left to right within each row)
int cocharge(const Tableau& T);

}  // namespace qchrom

#endif
