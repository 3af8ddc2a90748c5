#include "qchrom/rimhooks.hpp"

#include <algorithm>
#include <functional>

namespace qchrom {

namespace {

// Remaining cells of lambda, 1-based access.
struct Grid {
  explicit Grid(const Partition& lambda) : rows(lambda.parts()) {
    taken.resize(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
      taken[i].assign(rows[i], false);
  }
  bool free(int r, int c) const {
    return r >= 1 && r <= static_cast<int>(rows.size()) && c >= 1 &&
           c <= rows[r - 1] && !taken[r - 1][c - 1];
  }
  void set(int r, int c, bool v) { taken[r - 1][c - 1] = v; }
  std::vector<int> rows;
  std::vector<std::vector<bool>> taken;
};

// Lowest free cell in column 1, or 0 if none.
int lowest_free_anchor(const Grid& g) {
  for (int r = static_cast<int>(g.rows.size()); r >= 1; --r)
    if (g.free(r, 1)) return r;
  return 0;
}

// A special rim hook anchored at (r0,1) is a snake of east/north steps: the
// skew form of a rim hook forces every cell below the anchor row into column
// 1, and column-1 cells are consumed bottom-up, so east/north extension from
// the anchor is exhaustive. The snake cells are marked in `g` while the DFS
// holds them. flat_only forbids a second cell in column 1.
template <typename Fn>
void enumerate_hooks(Grid& g, int length, bool flat_only,
                     std::vector<std::pair<int, int>>& hook, const Fn& fn) {
  if (static_cast<int>(hook.size()) == length) {
    fn(hook);
    return;
  }
  auto [r, c] = hook.back();
  if (g.free(r, c + 1)) {
    g.set(r, c + 1, true);
    hook.emplace_back(r, c + 1);
    enumerate_hooks(g, length, flat_only, hook, fn);
    hook.pop_back();
    g.set(r, c + 1, false);
  }
  if (g.free(r - 1, c) && !(flat_only && c == 1)) {
    g.set(r - 1, c, true);
    hook.emplace_back(r - 1, c);
    enumerate_hooks(g, length, flat_only, hook, fn);
    hook.pop_back();
    g.set(r - 1, c, false);
  }
}

long long count_tabloids(Grid& g, const std::vector<int>& alpha, std::size_t idx,
                         bool flat_only) {
  if (idx == alpha.size()) return 1;  // sizes guarantee full coverage here
  int r0 = lowest_free_anchor(g);
  if (r0 == 0) return 0;
  long long total = 0;
  std::vector<std::pair<int, int>> hook{{r0, 1}};
  g.set(r0, 1, true);
  enumerate_hooks(g, alpha[idx], flat_only, hook,
                  [&](const std::vector<std::pair<int, int>>& h) {
                    // rows are non-increasing along the snake
                    int height = h.front().first - h.back().first + 1;
                    int sign = (height % 2 == 0) ? -1 : 1;
                    total += sign * count_tabloids(g, alpha, idx + 1, flat_only);
                  });
  g.set(r0, 1, false);
  return total;
}

}  // namespace

long long special_rim_hook_count(const Composition& alpha, const Partition& lambda) {
  if (alpha.size() != lambda.size())
    throw SizeMismatch("special_rim_hook_count: |alpha| != |lambda|");
  if (lambda.size() == 0) return 1;
  Grid g(lambda);
  return count_tabloids(g, alpha.parts(), 0, /*flat_only=*/false);
}

bool is_flat(const Composition& alpha, const Partition& lambda) {
  if (alpha.size() != lambda.size())
    throw SizeMismatch("is_flat: |alpha| != |lambda|");
  if (alpha.length() != lambda.length()) return false;
  if (lambda.size() == 0) return true;
  Grid g(lambda);
  return count_tabloids(g, alpha.parts(), 0, /*flat_only=*/true) != 0;
}

long long k_star_refinement_sum(const Composition& alpha, const Partition& lambda) {
  long long total = 0;
  for (const auto& beta : refinements(alpha))
    total += special_rim_hook_count(beta, lambda);
  return total;
}

long long k_star(const Composition& alpha, const Partition& lambda) {
  if (alpha.size() != lambda.size())
    throw SizeMismatch("k_star: |alpha| != |lambda|");
  if (is_flat(alpha, lambda)) return special_rim_hook_count(alpha, lambda);
  return k_star_refinement_sum(alpha, lambda);
}

namespace {

long long kostka_rec(const Partition& lambda, int row, std::vector<int>& prev_row,
                     std::vector<int>& remaining) {
  if (row > lambda.length()) {
    for (int r : remaining)
      if (r != 0) return 0;
    return 1;
  }
  int len = lambda.part(row);
  std::vector<int> cur(len, 0);
  long long total = 0;
  std::function<void(int)> place = [&](int col) {
    if (col == len) {
      std::vector<int> saved = std::move(prev_row);
      prev_row = cur;
      total += kostka_rec(lambda, row + 1, prev_row, remaining);
      prev_row = std::move(saved);
      return;
    }
    int lo = col > 0 ? cur[col - 1] : 1;
    if (row > 1) lo = std::max(lo, prev_row[col] + 1);
    for (int v = lo; v <= static_cast<int>(remaining.size()); ++v) {
      if (remaining[v - 1] == 0) continue;
      --remaining[v - 1];
      cur[col] = v;
      place(col + 1);
      ++remaining[v - 1];
    }
  };
  place(0);
  return total;
}

}  // namespace

long long kostka(const Partition& lambda, const std::vector<int>& mu) {
  int musz = 0;
  for (int m : mu) {
    if (m < 0) throw SizeMismatch("kostka: negative weight entry");
    musz += m;
  }
  if (musz != lambda.size()) throw SizeMismatch("kostka: |lambda| != |mu|");
  std::vector<int> remaining = mu;
  std::vector<int> prev;
  return kostka_rec(lambda, 1, prev, remaining);
}

namespace {

void shuffles(const std::vector<int>& a, const std::vector<int>& b,
              std::size_t ia, std::size_t ib, std::vector<int>& acc,
              std::vector<std::vector<int>>& out) {
  if (ia == a.size() && ib == b.size()) {
    out.push_back(acc);
    return;
  }
  if (ia < a.size()) {
    acc.push_back(a[ia]);
    shuffles(a, b, ia + 1, ib, acc, out);
    acc.pop_back();
  }
  if (ib < b.size()) {
    acc.push_back(b[ib]);
    shuffles(a, b, ia, ib + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::vector<std::vector<int>> shuffle_words_Dk(int n, int k) {
  if (k < 1 || k > n) throw RangeError("shuffle_words_Dk: need 1 <= k <= n");
  std::vector<int> dec, inc;
  for (int v = n; v >= k + 1; --v) dec.push_back(v);
  for (int v = 1; v <= k - 1; ++v) inc.push_back(v);
  std::vector<std::vector<int>> out;
  std::vector<int> acc;
  shuffles(dec, inc, 0, 0, acc, out);
  for (auto& w : out) w.push_back(k);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace qchrom
