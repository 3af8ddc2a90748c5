#include "qchrom/symfunc.hpp"

#include <algorithm>
#include <functional>
#include <memory>
#include <mutex>
#include <sstream>

#include "qchrom/rimhooks.hpp"
#include "qchrom/tableaux.hpp"

namespace qchrom {

std::string basis_name(Basis b) {
  switch (b) {
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::s: return "s";
    case Basis::p: return "p";
  }
  return "?";
}

Basis basis_from_name(const std::string& name) {
  if (name == "m") return Basis::m;
  if (name == "e") return Basis::e;
  if (name == "s") return Basis::s;
  if (name == "p") return Basis::p;
  throw RangeError("unknown basis '" + name + "'");
}

SymExpansion SymExpansion::single(int degree, Basis basis,
                                  const Partition& lambda, QPolyQ coeff) {
  SymExpansion f(degree, basis);
  f.add(lambda, coeff);
  return f;
}

SymExpansion SymExpansion::one(Basis basis) {
  return single(0, basis, Partition(), QPolyQ(1));
}

QPolyQ SymExpansion::coeff(const Partition& lambda) const {
  auto it = coeffs_.find(lambda);
  return it == coeffs_.end() ? QPolyQ() : it->second;
}

void SymExpansion::add(const Partition& lambda, const QPolyQ& c) {
  if (c.is_zero()) return;
  if (lambda.size() != degree_)
    throw SizeMismatch("SymExpansion::add: partition size != degree");
  auto it = coeffs_.find(lambda);
  if (it == coeffs_.end()) {
    coeffs_.emplace(lambda, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

SymExpansion SymExpansion::operator+(const SymExpansion& o) const {
  if (degree_ != o.degree_ || basis_ != o.basis_)
    throw SizeMismatch("SymExpansion: degree/basis mismatch in +");
  SymExpansion r = *this;
  for (const auto& [lam, c] : o.coeffs_) r.add(lam, c);
  return r;
}

SymExpansion SymExpansion::operator-(const SymExpansion& o) const {
  if (degree_ != o.degree_ || basis_ != o.basis_)
    throw SizeMismatch("SymExpansion: degree/basis mismatch in -");
  SymExpansion r = *this;
  for (const auto& [lam, c] : o.coeffs_) r.add(lam, -c);
  return r;
}

SymExpansion SymExpansion::scaled(const QPolyQ& c) const {
  SymExpansion r(degree_, basis_);
  if (c.is_zero()) return r;
  for (const auto& [lam, v] : coeffs_) r.add(lam, v * c);
  return r;
}

bool SymExpansion::operator==(const SymExpansion& o) const {
  return degree_ == o.degree_ && basis_ == o.basis_ && coeffs_ == o.coeffs_;
}

bool SymExpansion::is_integral() const {
  for (const auto& [lam, c] : coeffs_) {
    (void)lam;
    for (const auto& x : c.coeffs())
      if (denominator(x) != 1) return false;
  }
  return true;
}

std::map<Partition, QPoly> SymExpansion::integral_coeffs() const {
  std::map<Partition, QPoly> out;
  for (const auto& [lam, c] : coeffs_) out.emplace(lam, to_integral(c));
  return out;
}

std::map<Partition, Rat> SymExpansion::eval_q(const Rat& x) const {
  std::map<Partition, Rat> out;
  for (const auto& [lam, c] : coeffs_) {
    Rat v = c.eval(x);
    if (v != 0) out.emplace(lam, v);
  }
  return out;
}

std::string SymExpansion::to_string() const {
  if (coeffs_.empty()) return "0";
  std::ostringstream ss;
  bool first = true;
  for (const auto& [lam, c] : coeffs_) {
    if (!first) ss << " + ";
    first = false;
    ss << "(" << c.to_string() << ")*" << basis_name(basis_) << lam.to_string();
  }
  return ss.str();
}

QPoly QuasiExpansion::coeff(const Composition& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? QPoly() : it->second;
}

void QuasiExpansion::add(const Composition& alpha, const QPoly& c) {
  if (c.is_zero()) return;
  if (alpha.size() != degree_)
    throw SizeMismatch("QuasiExpansion::add: composition size != degree");
  auto it = coeffs_.find(alpha);
  if (it == coeffs_.end()) {
    coeffs_.emplace(alpha, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

QuasiExpansion QuasiExpansion::operator+(const QuasiExpansion& o) const {
  if (degree_ != o.degree_)
    throw SizeMismatch("QuasiExpansion: degree mismatch in +");
  QuasiExpansion r = *this;
  for (const auto& [a, c] : o.coeffs_) r.add(a, c);
  return r;
}

QuasiExpansion QuasiExpansion::operator-(const QuasiExpansion& o) const {
  if (degree_ != o.degree_)
    throw SizeMismatch("QuasiExpansion: degree mismatch in -");
  QuasiExpansion r = *this;
  for (const auto& [a, c] : o.coeffs_) r.add(a, -c);
  return r;
}

QuasiExpansion QuasiExpansion::scaled(const QPoly& c) const {
  QuasiExpansion r(degree_);
  if (c.is_zero()) return r;
  for (const auto& [a, v] : coeffs_) r.add(a, v * c);
  return r;
}

bool QuasiExpansion::operator==(const QuasiExpansion& o) const {
  return degree_ == o.degree_ && coeffs_ == o.coeffs_;
}

QPoly MonomialTable::coeff(const Composition& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? QPoly() : it->second;
}

void MonomialTable::add(const Composition& alpha, const QPoly& c) {
  if (c.is_zero()) return;
  auto it = coeffs_.find(alpha);
  if (it == coeffs_.end()) {
    coeffs_.emplace(alpha, c);
  } else {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void MonomialTable::merge(const MonomialTable& o) {
  for (const auto& [a, c] : o.coeffs_) add(a, c);
}

MonomialTable MonomialTable::operator+(const MonomialTable& o) const {
  MonomialTable r = *this;
  r.merge(o);
  return r;
}

MonomialTable MonomialTable::operator-(const MonomialTable& o) const {
  MonomialTable r = *this;
  for (const auto& [a, c] : o.coeffs_) r.add(a, -c);
  return r;
}

MonomialTable MonomialTable::scaled(const QPoly& c) const {
  MonomialTable r(degree_);
  if (c.is_zero()) return r;
  for (const auto& [a, v] : coeffs_) r.add(a, v * c);
  return r;
}

bool MonomialTable::operator==(const MonomialTable& o) const {
  return degree_ == o.degree_ && coeffs_ == o.coeffs_;
}

bool MonomialTable::is_symmetric() const { return !asymmetry_witness(); }

std::optional<Composition> MonomialTable::asymmetry_witness() const {
  for (const auto& [alpha, c] : coeffs_) {
    Composition sorted(alpha.sorted().parts());
    if (coeff(sorted) != c) return alpha;
  }
  return std::nullopt;
}

SymExpansion MonomialTable::to_sym() const {
  SymExpansion f(degree_, Basis::m);
  for (const auto& [alpha, c] : coeffs_) {
    if (alpha.sorted().parts() == alpha.parts())
      f.add(Partition(alpha.parts()), to_rational(c));
  }
  return f;
}

// ---------------------------------------------------------------------------
// transition tables between the classical bases, per degree
// ---------------------------------------------------------------------------

namespace {

using Matrix = std::vector<std::vector<Rat>>;

// number of 0/1 matrices with row sums lambda and column sums mu; rows are
// processed one at a time over classes of columns with equal remaining
// capacity
Int zero_one_matrices(const std::vector<int>& lambda, const std::vector<int>& mu) {
  std::map<std::pair<std::size_t, std::vector<int>>, Int> memo;
  std::function<Int(std::size_t, std::vector<int>)> go =
      [&](std::size_t row, std::vector<int> caps) -> Int {
    std::sort(caps.begin(), caps.end());
    while (!caps.empty() && caps.front() == 0) caps.erase(caps.begin());
    if (row == lambda.size()) {
      return caps.empty() ? Int(1) : Int(0);
    }
    auto key = std::make_pair(row, caps);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    // group capacities into (value, count) classes
    std::vector<std::pair<int, int>> classes;
    for (int c : caps) {
      if (!classes.empty() && classes.back().first == c) classes.back().second++;
      else classes.emplace_back(c, 1);
    }
    Int total = 0;
    int need = lambda[row];
    std::function<void(std::size_t, int, Int, std::vector<int>&)> pick =
        [&](std::size_t ci, int left, Int ways, std::vector<int>& chosen) {
          if (ci == classes.size()) {
            if (left != 0) return;
            std::vector<int> next;
            for (std::size_t i = 0; i < classes.size(); ++i) {
              for (int j = 0; j < chosen[i]; ++j)
                next.push_back(classes[i].first - 1);
              for (int j = 0; j < classes[i].second - chosen[i]; ++j)
                next.push_back(classes[i].first);
            }
            total += ways * go(row + 1, next);
            return;
          }
          auto [cap, cnt] = classes[ci];
          for (int t = 0; t <= std::min(cnt, left); ++t) {
            if (t > 0 && cap == 0) break;
            // binomial(cnt, t)
            Int b = 1;
            for (int j = 0; j < t; ++j) b = b * (cnt - j) / (j + 1);
            chosen.push_back(t);
            pick(ci + 1, left - t, ways * b, chosen);
            chosen.pop_back();
          }
        };
    std::vector<int> chosen;
    pick(0, need, Int(1), chosen);
    memo.emplace(key, total);
    return total;
  };
  return go(0, mu);
}

// number of maps from the multiset of parts of lambda (as an ordered list)
// onto columns with prescribed sums mu
Int part_assignments(const std::vector<int>& lambda, const std::vector<int>& mu) {
  std::function<Int(std::size_t, std::vector<int>&)> go =
      [&](std::size_t idx, std::vector<int>& caps) -> Int {
    if (idx == lambda.size()) {
      for (int c : caps)
        if (c != 0) return 0;
      return 1;
    }
    Int total = 0;
    for (std::size_t j = 0; j < caps.size(); ++j) {
      if (caps[j] >= lambda[idx]) {
        caps[j] -= lambda[idx];
        total += go(idx + 1, caps);
        caps[j] += lambda[idx];
      }
    }
    return total;
  };
  std::vector<int> caps = mu;
  return go(0, caps);
}

struct BasisTables {
  std::vector<Partition> parts;          // canonical (lex-decreasing) order
  std::map<Partition, int> index;
  // to_m[B][mu][lambda] = coefficient of m_mu in B_lambda
  Matrix e2m, s2m, p2m;
  Matrix m2e, m2s, m2p;
};

Matrix invert(Matrix a) {
  std::size_t n = a.size();
  Matrix inv(n, std::vector<Rat>(n, 0));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = 1;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && a[piv][col] == 0) ++piv;
    if (piv == n) throw NonIntegral("basis transition matrix is singular");
    std::swap(a[piv], a[col]);
    std::swap(inv[piv], inv[col]);
    Rat d = a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] /= d;
      inv[col][j] /= d;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rat f = a[i][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[i][j] -= f * a[col][j];
        inv[i][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

const BasisTables& basis_tables(int n) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<BasisTables>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return *it->second;

  auto t = std::make_unique<BasisTables>();
  t->parts = partitions_of(n);
  std::size_t k = t->parts.size();
  for (std::size_t i = 0; i < k; ++i) t->index.emplace(t->parts[i], i);
  t->s2m.assign(k, std::vector<Rat>(k, 0));
  t->e2m.assign(k, std::vector<Rat>(k, 0));
  t->p2m.assign(k, std::vector<Rat>(k, 0));
  for (std::size_t lam = 0; lam < k; ++lam) {
    for (std::size_t mu_ = 0; mu_ < k; ++mu_) {
      const auto& L = t->parts[lam].parts();
      const auto& M = t->parts[mu_].parts();
      t->s2m[mu_][lam] = Rat(Int(kostka(t->parts[lam], M)));
      t->e2m[mu_][lam] = Rat(zero_one_matrices(L, M));
      t->p2m[mu_][lam] = Rat(part_assignments(L, M));
    }
  }
  t->m2s = invert(t->s2m);
  t->m2e = invert(t->e2m);
  t->m2p = invert(t->p2m);
  auto& ref = *t;
  cache.emplace(n, std::move(t));
  return ref;
}

std::vector<QPolyQ> to_vector(const SymExpansion& f, const BasisTables& t) {
  std::vector<QPolyQ> v(t.parts.size());
  for (const auto& [lam, c] : f.coeffs()) v[t.index.at(lam)] = c;
  return v;
}

std::vector<QPolyQ> apply(const Matrix& m, const std::vector<QPolyQ>& v) {
  std::vector<QPolyQ> out(v.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j)
      if (m[i][j] != 0 && !v[j].is_zero()) out[i] += v[j] * QPolyQ(m[i][j]);
  return out;
}

}  // namespace

SymExpansion change_basis(const SymExpansion& f, Basis target) {
  if (f.basis() == target) return f;
  const BasisTables& t = basis_tables(f.degree());
  std::vector<QPolyQ> v = to_vector(f, t);
  if (f.basis() != Basis::m) {
    const Matrix& fwd = f.basis() == Basis::e   ? t.e2m
                        : f.basis() == Basis::s ? t.s2m
                                                : t.p2m;
    v = apply(fwd, v);
  }
  if (target != Basis::m) {
    const Matrix& bwd = target == Basis::e   ? t.m2e
                        : target == Basis::s ? t.m2s
                                             : t.m2p;
    v = apply(bwd, v);
  }
  SymExpansion out(f.degree(), target);
  for (std::size_t i = 0; i < v.size(); ++i)
    if (!v[i].is_zero()) out.add(t.parts[i], v[i]);
  // leaving the power-sum basis must land back in integer coefficients
  if (f.basis() == Basis::p && target != Basis::p && !out.is_integral())
    throw NonIntegral("change_basis: conversion out of p gave fractions");
  return out;
}

SymExpansion multiply(const SymExpansion& f, const SymExpansion& g) {
  int deg = f.degree() + g.degree();
  if (f.basis() == Basis::s && g.basis() == Basis::s) {
    SymExpansion out(deg, Basis::s);
    for (const auto& [lam, cf] : f.coeffs()) {
      for (const auto& [mu, cg] : g.coeffs()) {
        QPolyQ c = cf * cg;
        for (const auto& nu : partitions_of(deg)) {
          if (!nu.contains(lam)) continue;
          long long lr = lr_coefficient(lam, mu, nu);
          if (lr) out.add(nu, c * QPolyQ(Rat(lr)));
        }
      }
    }
    return out;
  }
  SymExpansion fp = change_basis(f, Basis::p);
  SymExpansion gp = change_basis(g, Basis::p);
  SymExpansion prod(deg, Basis::p);
  for (const auto& [lam, cf] : fp.coeffs()) {
    for (const auto& [mu, cg] : gp.coeffs()) {
      std::vector<int> parts = lam.parts();
      parts.insert(parts.end(), mu.parts().begin(), mu.parts().end());
      prod.add(partition_from_parts(std::move(parts)), cf * cg);
    }
  }
  return change_basis(prod, f.basis());
}

QuasiExpansion sym_to_quasi(const SymExpansion& f) {
  SymExpansion fs = change_basis(f, Basis::s);
  QuasiExpansion out(f.degree());
  for (const auto& [lam, c] : fs.coeffs()) {
    QPoly ci = to_integral(c);
    syt_enumerate(SkewShape(lam), [&](const Tableau& T) {
      out.add(composition_of_descents(descent_set(T), f.degree()), ci);
    });
  }
  return out;
}

SymExpansion quasi_to_schur_elw(const QuasiExpansion& d) {
  int n = d.degree();
  SymExpansion out(n, Basis::s);
  for (const auto& lam : partitions_of(n)) {
    QPoly c;
    for (const auto& [alpha, da] : d.coeffs()) {
      long long ks = k_star(alpha, lam);
      if (ks) c += da * QPoly(Int(ks));
    }
    if (!c.is_zero()) out.add(lam, to_rational(c));
  }
  return out;
}

MonomialTable quasi_to_monomials(const QuasiExpansion& d) {
  MonomialTable out(d.degree());
  for (const auto& [alpha, c] : d.coeffs())
    for (const auto& beta : refinements(alpha)) out.add(beta, c);
  return out;
}

SymExpansion plethysm_q_shift(const SymExpansion& f) {
  int n = f.degree();
  SymExpansion fp = change_basis(f, Basis::p);
  SymExpansion mapped(n, Basis::p);
  for (const auto& [lam, c] : fp.coeffs()) {
    QPolyQ factor(1);
    for (int part : lam.parts()) {
      // q^part - 1
      QPolyQ t = q_power<Rat>(part) - QPolyQ(1);
      factor *= t;
    }
    mapped.add(lam, c * factor);
  }
  SymExpansion back = change_basis(mapped, f.basis());
  // divide by (q-1)^n, exactly
  QPolyQ qm1 = q_power<Rat>(1) - QPolyQ(1);
  QPolyQ den(1);
  for (int i = 0; i < n; ++i) den *= qm1;
  SymExpansion out(n, f.basis());
  for (const auto& [lam, c] : back.coeffs()) out.add(lam, exact_div(c, den));
  if (!out.is_integral())
    throw NonIntegral("plethysm_q_shift: non-integral result");
  return out;
}

EPositivity e_positive(const SymExpansion& f) {
  SymExpansion fe = change_basis(f, Basis::e);
  EPositivity r;
  for (const auto& [lam, c] : fe.coeffs()) {
    for (int i = 0; i <= c.degree(); ++i) {
      if (c.coeff(i) < 0) {
        r.positive = false;
        Witness w;
        w.what = "negative e-coefficient";
        w.partition = lam;
        w.q_power = i;
        std::ostringstream ss;
        ss << c.coeff(i);
        w.values.push_back(ss.str());
        r.witness = w;
        return r;
      }
    }
  }
  return r;
}

RelationReport check_conjecture_sw(const SymExpansion& f, int edge_count) {
  SymExpansion fe = change_basis(f, Basis::e);
  RelationReport rep;
  rep.relation = "conjecture_sw";
  rep.i = edge_count;

  auto fail = [&](const std::string& what, const Partition& lam, int power,
                  std::initializer_list<Rat> vals) {
    rep.identity_ok = false;
    Witness w;
    w.what = what;
    w.partition = lam;
    w.q_power = power;
    for (const auto& v : vals) {
      std::ostringstream ss;
      ss << v;
      w.values.push_back(ss.str());
    }
    rep.witness = w;
  };

  // slice coefficients a_i(x): partition -> scalar at q^i
  int maxdeg = 0;
  for (const auto& [lam, c] : fe.coeffs()) {
    (void)lam;
    maxdeg = std::max(maxdeg, c.degree());
  }
  if (maxdeg > edge_count) {
    fail("q-degree exceeds edge count", Partition(), maxdeg, {});
    return rep;
  }
  for (const auto& [lam, c] : fe.coeffs()) {
    for (int i = 0; i <= c.degree(); ++i) {
      if (c.coeff(i) < 0) {
        fail("a_i not e-positive", lam, i, {c.coeff(i)});
        return rep;
      }
    }
    // palindromicity with twice_center = edge count
    for (int i = 0; i <= edge_count; ++i) {
      if (c.coeff(i) != c.coeff(edge_count - i)) {
        fail("a_i != a_{m-i}", lam, i, {c.coeff(i), c.coeff(edge_count - i)});
        return rep;
      }
    }
    // e-unimodality: a_{i+1} - a_i e-positive for 0 <= i < (m-1)/2
    for (int i = 0; 2 * i < edge_count - 1; ++i) {
      if (c.coeff(i + 1) < c.coeff(i)) {
        fail("a_{i+1} - a_i not e-positive", lam, i,
             {c.coeff(i + 1), c.coeff(i)});
        return rep;
      }
    }
  }
  return rep;
}

}  // namespace qchrom
