#include "qchrom/chromaticq.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace qchrom {

namespace {

struct Enumerator {
  int n;
  std::vector<std::vector<int>> earlier;  // earlier[v] = neighbours u < v
  MonomialTable table;
  std::vector<int> color;

  explicit Enumerator(int n_, const std::vector<std::pair<int, int>>& edges)
      : n(n_), earlier(n_ + 1), table(n_), color(n_ + 1, 0) {
    for (auto [u, v] : edges) {
      if (u > v) std::swap(u, v);
      if (u < 1 || v > n || u == v)
        throw RangeError("coloring enumerator: bad edge");
      earlier[v].push_back(u);
    }
  }

  void leaf(int asc) {
    std::vector<int> cnt(n, 0);
    for (int v = 1; v <= n; ++v) ++cnt[color[v] - 1];
    int k = n;
    while (k > 0 && cnt[k - 1] == 0) --k;
    for (int i = 0; i < k; ++i)
      if (cnt[i] == 0) return;  // support not packed
    cnt.resize(k);
    table.add(Composition(std::move(cnt)), q_power<Int>(asc));
  }

  // vertices v..n, accumulating the ascent count
  void extend(int v, int asc, int first_color_lo, int first_color_hi) {
    if (v > n) {
      leaf(asc);
      return;
    }
    int lo = 1, hi = n;
    if (v == 1) {
      lo = first_color_lo;
      hi = first_color_hi;
    }
    for (int c = lo; c <= hi; ++c) {
      int delta = 0;
      bool ok = true;
      for (int u : earlier[v]) {
        if (color[u] == c) {
          ok = false;
          break;
        }
        if (color[u] < c) ++delta;
      }
      if (!ok) continue;
      color[v] = c;
      extend(v + 1, asc + delta, 0, 0);
      color[v] = 0;
    }
  }
};

}  // namespace

MonomialTable chromatic_quasimonomials(int n,
                                       const std::vector<std::pair<int, int>>& edges,
                                       const BruteForceOptions& opts) {
  if (n > opts.max_chromatic_n)
    throw BruteForceBound("chromatic brute force limited to n <= " +
                          std::to_string(opts.max_chromatic_n));
  if (n == 0) {
    MonomialTable t(0);
    t.add(Composition(), QPoly(1));  // the empty coloring
    return t;
  }
  int workers = std::max(1, std::min(opts.workers, n));
  if (workers == 1) {
    Enumerator e(n, edges);
    e.extend(1, 0, 1, n);
    return e.table;
  }
  // partition the search by the color of vertex 1; merge in color order
  std::vector<MonomialTable> parts(n, MonomialTable(n));
  std::vector<std::thread> pool;
  std::size_t next = 0;
  std::mutex mu;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&]() {
      for (;;) {
        std::size_t c;
        {
          std::lock_guard<std::mutex> lock(mu);
          if (next >= static_cast<std::size_t>(n)) return;
          c = next++;
        }
        Enumerator e(n, edges);
        e.extend(1, 0, static_cast<int>(c) + 1, static_cast<int>(c) + 1);
        parts[c] = std::move(e.table);
      }
    });
  }
  for (auto& t : pool) t.join();
  MonomialTable out(n);
  for (const auto& p : parts) out.merge(p);
  return out;
}

SymExpansion chromatic_bruteforce(int n,
                                  const std::vector<std::pair<int, int>>& edges,
                                  const BruteForceOptions& opts) {
  return chromatic_quasimonomials(n, edges, opts).to_sym();
}

SymExpansion chromatic_bruteforce(const UnitIntervalGraph& g,
                                  const BruteForceOptions& opts) {
  return chromatic_bruteforce(g.n(), g.edges(), opts);
}

namespace {

// multiply an e-basis expansion by e_k (concatenate the index and resort)
SymExpansion times_ek(const SymExpansion& f, int k) {
  SymExpansion out(f.degree() + k, Basis::e);
  for (const auto& [lam, c] : f.coeffs()) {
    std::vector<int> parts = lam.parts();
    parts.push_back(k);
    out.add(partition_from_parts(std::move(parts)), c);
  }
  return out;
}

void compositions_min2(int total, std::vector<int>& acc,
                       const std::function<void(const std::vector<int>&)>& fn) {
  if (total == 0) {
    if (!acc.empty()) fn(acc);
    return;
  }
  for (int k = 2; k <= total; ++k) {
    acc.push_back(k);
    compositions_min2(total - k, acc, fn);
    acc.pop_back();
  }
}

}  // namespace

SymExpansion x_complete(int m) {
  if (m < 0) throw RangeError("x_complete: need m >= 0");
  if (m == 0) return SymExpansion::one(Basis::e);
  return SymExpansion::single(m, Basis::e, Partition({m}),
                              to_rational(q_factorial(m)));
}

SymExpansion x_path(int n) {
  if (n < 0) throw RangeError("x_path: need n >= 0");
  if (n == 0) return SymExpansion::one(Basis::e);
  SymExpansion out(n, Basis::e);
  std::vector<int> acc;
  compositions_min2(n + 1, acc, [&](const std::vector<int>& ks) {
    int m = static_cast<int>(ks.size());
    QPoly coeff = q_power<Int>(m - 1);
    for (int ki : ks) coeff *= q_int(ki - 1);
    std::vector<int> index = ks;
    index[0] -= 1;  // (k_1 - 1, k_2, ..., k_m)
    out.add(partition_from_parts(std::move(index)), to_rational(coeff));
  });
  return out;
}

SymExpansion x_lollipop(int m, int n) {
  if (m == 0) return x_path(n);
  if (m == 1) return x_path(n + 1);  // L_{1,n} is the path on n+1 vertices
  if (m < 2 || n < 0) throw RangeError("x_lollipop: need m >= 2, n >= 0");
  SymExpansion inner = SymExpansion::single(m + n, Basis::e, Partition({m + n}),
                                            to_rational(q_int(m + n)));
  for (int i = 0; i <= n - 1; ++i) {
    QPoly c = q_int(m + i - 1).shifted(1);  // q [m+i-1]_q
    inner = inner + times_ek(x_path(n - i), m + i).scaled(to_rational(c));
  }
  return inner.scaled(to_rational(q_factorial(m - 1)));
}

SymExpansion x_join_complete_complete(int r, int n) {
  if (r < 1 || r > n - 1)
    throw RangeError("x_join_complete_complete: need 1 <= r <= n-1");
  SymExpansion out(n, Basis::e);
  int top = std::min(n - r, r - 1);
  for (int i = 0; i <= top; ++i) {
    QPoly c = q_factorial(n - r) * q_factorial(r - 1) * q_int(n - 2 * i);
    c = c.shifted(i);
    out.add(partition_from_parts({n - i, i}), to_rational(c));
  }
  return out;
}

SymExpansion x_join_complete_lollipop(int r, int m, int n) {
  if (m < 3 || r < 1 || r > m || n < 0)
    throw RangeError("x_join_complete_lollipop: need m >= 3, 1 <= r <= m, n >= 0");
  int d = n + m + r - 1;
  SymExpansion inner(d, Basis::e);
  for (int i = 0; i <= r - 1; ++i) {
    QPoly c = (q_factorial(r - 1) * q_int(d - 2 * i)).shifted(i);
    inner.add(partition_from_parts({d - i, i}), to_rational(c));
  }
  for (int j = 0; j <= n - 1; ++j) {
    QPoly c = q_int(n + m - j - 2).shifted(1);  // q [n+m-j-2]_q
    inner = inner + times_ek(x_lollipop(r, j), n + m - j - 1).scaled(to_rational(c));
  }
  return inner.scaled(to_rational(q_factorial(m - 1)));
}

SymExpansion x_melting_lollipop(int m, int n, int k) {
  if (m < 2 || n < 0) throw RangeError("x_melting_lollipop: need m >= 2, n >= 0");
  if (k < 0 || k > m - 1)
    throw RangeError("x_melting_lollipop: need 0 <= k <= m-1");
  SymExpansion inner = SymExpansion::single(m + n, Basis::e, Partition({m + n}),
                                            to_rational(q_int(m + n)));
  for (int i = 0; i <= n - 1; ++i) {
    QPoly c = q_int(m + i - 1).shifted(1);
    inner = inner + times_ek(x_path(n - i), m + i).scaled(to_rational(c));
  }
  QPoly head = q_factorial(m - 2) * q_int(m - k - 1);
  SymExpansion out = inner.scaled(to_rational(head));
  QPoly tailc = (q_int(k) * q_factorial(m - 2)).shifted(m - k - 1);
  out = out + times_ek(x_path(n + 1), m - 1).scaled(to_rational(tailc));
  return out;
}

RelationReport verify_triple_deletion(int n,
                                      std::vector<std::pair<int, int>> edges,
                                      std::pair<int, int> e1,
                                      std::pair<int, int> e2,
                                      std::pair<int, int> e3,
                                      const BruteForceOptions& opts) {
  auto norm = [](std::pair<int, int> e) {
    if (e.first > e.second) std::swap(e.first, e.second);
    return e;
  };
  e1 = norm(e1);
  e2 = norm(e2);
  e3 = norm(e3);
  for (auto& e : edges) e = norm(e);
  auto has = [&](std::pair<int, int> e) {
    return std::find(edges.begin(), edges.end(), e) != edges.end();
  };
  if (!has(e1) || !has(e2) || !has(e3))
    throw NotATriangle("triple deletion: edge not in graph");
  std::vector<int> verts{e1.first, e1.second, e2.first, e2.second,
                         e3.first, e3.second};
  std::sort(verts.begin(), verts.end());
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());
  if (verts.size() != 3 || e1 == e2 || e1 == e3 || e2 == e3)
    throw NotATriangle("triple deletion: edges do not form a triangle");

  auto without = [&](std::vector<std::pair<int, int>> which) {
    auto es = edges;
    for (auto e : which)
      es.erase(std::remove(es.begin(), es.end(), e), es.end());
    return es;
  };
  auto at1 = [](const MonomialTable& t) {
    std::map<Composition, Int> out;
    for (const auto& [a, c] : t.coeffs()) out[a] = c.eval_at_one();
    return out;
  };
  auto full = at1(chromatic_quasimonomials(n, edges, opts));
  auto d1 = at1(chromatic_quasimonomials(n, without({e1}), opts));
  auto d2 = at1(chromatic_quasimonomials(n, without({e2}), opts));
  auto d12 = at1(chromatic_quasimonomials(n, without({e1, e2}), opts));

  RelationReport rep;
  rep.relation = "triple";
  std::map<Composition, Int> rhs;
  for (const auto& [a, v] : d1) rhs[a] += v;
  for (const auto& [a, v] : d2) rhs[a] += v;
  for (const auto& [a, v] : d12) rhs[a] -= v;
  const std::map<Composition, Int>& lhs = full;
  auto differs = [&]() -> std::optional<Composition> {
    for (const auto& [a, v] : lhs)
      if (rhs.count(a) ? rhs.at(a) != v : v != 0) return a;
    for (const auto& [a, v] : rhs)
      if (!lhs.count(a) && v != 0) return a;
    return std::nullopt;
  };
  if (auto bad = differs()) {
    rep.identity_ok = false;
    Witness w;
    w.what = "triple deletion identity fails at monomial " + bad->to_string();
    std::ostringstream ss;
    ss << (lhs.count(*bad) ? lhs.at(*bad) : Int(0)) << " vs "
       << (rhs.count(*bad) ? rhs.at(*bad) : Int(0));
    w.values.push_back(ss.str());
    rep.witness = w;
  }
  return rep;
}

}  // namespace qchrom
