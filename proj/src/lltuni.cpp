#include "qchrom/lltuni.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "qchrom/rimhooks.hpp"

namespace qchrom {

namespace {

// pair-presence table: cell(i,j) for positions i < j
std::vector<std::vector<bool>> pair_table(const DyckDiagram& d) {
  int n = d.n();
  std::vector<std::vector<bool>> t(n + 1, std::vector<bool>(n + 1, false));
  for (int j = 2; j <= n; ++j)
    for (int i = 1; i < j; ++i) t[i][j] = d.has_position_pair(i, j);
  return t;
}

}  // namespace

int inv_count(const std::vector<int>& word, const DyckDiagram& d) {
  int n = d.n();
  if (static_cast<int>(word.size()) != n)
    throw LengthMismatch("inv_count: word length != diagram size");
  int c = 0;
  for (int j = 2; j <= n; ++j) {
    int lo = std::max(1, j - d.area()[n - j]);
    for (int i = lo; i < j; ++i)
      if (word[i - 1] > word[j - 1]) ++c;
  }
  return c;
}

MonomialTable llt_quasimonomials(const DyckDiagram& d, const BruteForceOptions& opts) {
  int n = d.n();
  if (n > opts.max_word_n)
    throw BruteForceBound("LLT word oracle limited to n <= " +
                          std::to_string(opts.max_word_n));
  MonomialTable table(n);
  if (n == 0) {
    table.add(Composition(), QPoly(1));
    return table;
  }
  auto pairs = pair_table(d);
  std::vector<int> w(n + 1, 0);
  // incremental inversion count against earlier positions
  std::function<void(int, int)> rec = [&](int pos, int inv) {
    if (pos > n) {
      std::vector<int> cnt(n, 0);
      for (int p = 1; p <= n; ++p) ++cnt[w[p] - 1];
      int k = n;
      while (k > 0 && cnt[k - 1] == 0) --k;
      for (int i = 0; i < k; ++i)
        if (cnt[i] == 0) return;
      cnt.resize(k);
      table.add(Composition(std::move(cnt)), q_power<Int>(inv));
      return;
    }
    for (int c = 1; c <= n; ++c) {
      int delta = 0;
      for (int i = 1; i < pos; ++i)
        if (pairs[i][pos] && w[i] > c) ++delta;
      w[pos] = c;
      rec(pos + 1, inv + delta);
      w[pos] = 0;
    }
  };
  rec(1, 0);
  return table;
}

SymExpansion llt_bruteforce_words(const DyckDiagram& d, const BruteForceOptions& opts) {
  return llt_quasimonomials(d, opts).to_sym();
}

QuasiExpansion llt_via_F(const DyckDiagram& d, const BruteForceOptions& opts) {
  int n = d.n();
  if (n > opts.max_perm_n)
    throw BruteForceBound("LLT permutation route limited to n <= " +
                          std::to_string(opts.max_perm_n));
  QuasiExpansion out(n);
  if (n == 0) {
    out.add(Composition(), QPoly(1));
    return out;
  }
  std::vector<int> sigma(n);
  std::iota(sigma.begin(), sigma.end(), 1);
  std::vector<int> pos(n + 1);
  do {
    int inv = inv_count(sigma, d);
    for (int i = 0; i < n; ++i) pos[sigma[i]] = i;
    std::set<int> desc;  // descents of the inverse word
    for (int v = 1; v < n; ++v)
      if (pos[v + 1] < pos[v]) desc.insert(v);
    out.add(composition_of_descents(desc, n), q_power<Int>(inv));
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return out;
}

SymExpansion llt_schur_via_F(const DyckDiagram& d, const BruteForceOptions& opts) {
  return quasi_to_schur_elw(llt_via_F(d, opts));
}

QPoly wt_polynomial(const DyckDiagram& d, const Partition& lambda) {
  QPoly out;
  syt_enumerate(SkewShape(lambda), [&](const Tableau& T) {
    int wt = 0;
    for (int i : descent_set(T)) wt += d.area()[i - 1];
    out += q_power<Int>(wt);
  });
  return out;
}

SymExpansion schur_via_wt(const DyckDiagram& d) {
  int n = d.n();
  SymExpansion out(n, Basis::s);
  for (const auto& lam : partitions_of(n))
    out.add(lam, to_rational(wt_polynomial(d, lam)));
  return out;
}

namespace {

// block matches a_i = 1 (i <= n'), a_{n'+1} = m-k-1, a_i = m+n'-i after,
// for some m >= 2, 0 <= k <= m-1, n' >= 0 -- or the K^{(k)} pattern
// a_1 = n-k-1, a_i = n-i.
bool block_is_proved(const std::vector<int>& a) {
  int n = static_cast<int>(a.size());
  if (n <= 2) return true;  // single vertex or an edge/no edge
  // K_n^{(k)}: a_i = n-i for i >= 2, a_1 anywhere in [0, n-1]
  bool kdel = true;
  for (int i = 2; i <= n; ++i)
    if (a[i - 1] != n - i) kdel = false;
  if (kdel) return true;
  // melting lollipop: 1,...,1 (np times), m-k-1, then full staircase m+np-i
  int np = 0;
  while (np < n && a[np] == 1) ++np;
  if (np == 0) return false;
  // a[np] (entry n'+1) is free in [0, m-1]; the tail fixes m = n - np
  int m = n - np;
  if (m < 2) return np == n - 1 && a[n - 1] == 0;  // pure path handled above
  for (int i = np + 2; i <= n; ++i)
    if (a[i - 1] != m + np - i) return false;
  int junction = a[np];
  return junction >= 0 && junction <= m - 1;
}

}  // namespace

bool wt_formula_proved(const DyckDiagram& d) {
  const auto& a = d.area();
  int n = d.n();
  // split into disjoint-union blocks: position j ends a block when no edge
  // crosses it
  int start = 0, reach = 0;
  for (int j = 1; j <= n; ++j) {
    reach = std::max(reach, j + a[j - 1]);
    if (reach <= j) {
      std::vector<int> block(a.begin() + start, a.begin() + j);
      if (!block_is_proved(block)) return false;
      start = j;
    }
  }
  return true;
}

SymExpansion llt_complete_cocharge(int n) {
  SymExpansion out(n, Basis::s);
  for (const auto& lam : partitions_of(n)) {
    QPoly c;
    syt_enumerate(SkewShape(lam),
                  [&](const Tableau& T) { c += q_power<Int>(cocharge(T)); });
    out.add(lam, to_rational(c));
  }
  return out;
}

QPoly hook_coefficient_shuffle(const DyckDiagram& d, int k) {
  int n = d.n();
  if (k < 1 || k > n) throw RangeError("hook_coefficient: need 1 <= k <= n");
  QPoly out;
  for (const auto& w : shuffle_words_Dk(n, k)) out += q_power<Int>(inv_count(w, d));
  return out;
}

QPoly hook_coefficient_wt(const DyckDiagram& d, int k) {
  int n = d.n();
  if (k < 1 || k > n) throw RangeError("hook_coefficient: need 1 <= k <= n");
  std::vector<int> parts{k};
  for (int i = 0; i < n - k; ++i) parts.push_back(1);
  return wt_polynomial(d, Partition(std::move(parts)));
}

QPoly hook_coefficient_elw(const DyckDiagram& d, int k, const BruteForceOptions& opts) {
  int n = d.n();
  if (k < 1 || k > n) throw RangeError("hook_coefficient: need 1 <= k <= n");
  std::vector<int> parts{k};
  for (int i = 0; i < n - k; ++i) parts.push_back(1);
  Partition hook(std::move(parts));
  QuasiExpansion f = llt_via_F(d, opts);
  QPoly c;
  for (const auto& [alpha, da] : f.coeffs()) {
    long long ks = k_star(alpha, hook);
    if (ks) c += da * QPoly(Int(ks));
  }
  return c;
}

RelationReport plethysm_bridge_check(const UnitIntervalGraph& g,
                                     const BruteForceOptions& opts) {
  RelationReport rep;
  rep.relation = "plethysm";
  rep.area = g.to_area().area();
  SymExpansion lhs = chromatic_bruteforce(g, opts);
  MonomialTable llt_m = quasi_to_monomials(llt_via_F(g.to_area(), opts));
  SymExpansion rhs = plethysm_q_shift(llt_m.to_sym());
  if (lhs != rhs) {
    rep.identity_ok = false;
    Witness w;
    w.what = "plethysm bridge mismatch";
    for (const auto& lam : partitions_of(g.n())) {
      if (lhs.coeff(lam) != rhs.coeff(lam)) {
        w.partition = lam;
        w.values.push_back(lhs.coeff(lam).to_string());
        w.values.push_back(rhs.coeff(lam).to_string());
        break;
      }
    }
    rep.witness = w;
  }
  return rep;
}

}  // namespace qchrom
