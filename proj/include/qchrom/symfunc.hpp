#ifndef QCHROM_SYMFUNC_HPP
#define QCHROM_SYMFUNC_HPP

#include <map>
#include <optional>
#include <string>

#include "qchrom/partitions.hpp"
#include "qchrom/qpoly.hpp"
#include "qchrom/report.hpp"

namespace qchrom {

enum class Basis { m, e, s, p };

std::string basis_name(Basis b);
Basis basis_from_name(const std::string& name);

// Symmetric function of a fixed homogeneous degree n, stored as a finite
// coefficient map in one of the classical bases. Coefficients are exact
// q-polynomials with rational scalars; everything outside the power-sum
// pipeline stays integral and can be narrowed with integral_coeffs().
class SymExpansion {
public:
  SymExpansion() : degree_(0), basis_(Basis::m) {}
  SymExpansion(int degree, Basis basis) : degree_(degree), basis_(basis) {}

  static SymExpansion single(int degree, Basis basis, const Partition& lambda,
                             QPolyQ coeff);
  // the constant 1 = empty-partition expansion of degree 0
  static SymExpansion one(Basis basis = Basis::m);

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const std::map<Partition, QPolyQ>& coeffs() const { return coeffs_; }
  QPolyQ coeff(const Partition& lambda) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add(const Partition& lambda, const QPolyQ& c);

  SymExpansion operator+(const SymExpansion& o) const;
  SymExpansion operator-(const SymExpansion& o) const;
  SymExpansion scaled(const QPolyQ& c) const;

  bool operator==(const SymExpansion& o) const;
  bool operator!=(const SymExpansion& o) const { return !(*this == o); }

  bool is_integral() const;
  std::map<Partition, QPoly> integral_coeffs() const;  // throws NonIntegral

  // substitute a rational value for q in every coefficient
  std::map<Partition, Rat> eval_q(const Rat& x) const;

  std::string to_string() const;

private:
  int degree_;
  Basis basis_;
  std::map<Partition, QPolyQ> coeffs_;
};

// Fundamental quasisymmetric expansion of degree n: composition -> QPoly.
class QuasiExpansion {
public:
  QuasiExpansion() : degree_(0) {}
  explicit QuasiExpansion(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<Composition, QPoly>& coeffs() const { return coeffs_; }
  QPoly coeff(const Composition& alpha) const;
  bool is_zero() const { return coeffs_.empty(); }

  void add(const Composition& alpha, const QPoly& c);

  QuasiExpansion operator+(const QuasiExpansion& o) const;
  QuasiExpansion operator-(const QuasiExpansion& o) const;
  QuasiExpansion scaled(const QPoly& c) const;

  bool operator==(const QuasiExpansion& o) const;
  bool operator!=(const QuasiExpansion& o) const { return !(*this == o); }

private:
  int degree_;
  std::map<Composition, QPoly> coeffs_;
};

// Table of packed monomial (M-basis quasisymmetric) coefficients, as filled
// in by the brute-force generators. In n variables the lambda-keyed entries
// determine a degree-n symmetric function.
class MonomialTable {
public:
  MonomialTable() : degree_(0) {}
  explicit MonomialTable(int degree) : degree_(degree) {}

  int degree() const { return degree_; }
  const std::map<Composition, QPoly>& coeffs() const { return coeffs_; }
  QPoly coeff(const Composition& alpha) const;

  void add(const Composition& alpha, const QPoly& c);
  void merge(const MonomialTable& o);

  MonomialTable operator+(const MonomialTable& o) const;
  MonomialTable operator-(const MonomialTable& o) const;
  MonomialTable scaled(const QPoly& c) const;
  bool operator==(const MonomialTable& o) const;
  bool operator!=(const MonomialTable& o) const { return !(*this == o); }
  bool is_zero() const { return coeffs_.empty(); }

  // every composition coefficient equals that of its sorted rearrangement
  bool is_symmetric() const;
  std::optional<Composition> asymmetry_witness() const;

  // read off the partition-keyed entries as an m-basis expansion
  SymExpansion to_sym() const;

private:
  int degree_;
  std::map<Composition, QPoly> coeffs_;
};

SymExpansion change_basis(const SymExpansion& f, Basis target);

// product; in the Schur basis the structure constants are the LR
// coefficients, otherwise the factors are routed through the power sums
SymExpansion multiply(const SymExpansion& f, const SymExpansion& g);

// F-expansion through the Schur basis: s_lambda = sum over SYT(lambda) of
// F_{co(D(T))}
QuasiExpansion sym_to_quasi(const SymExpansion& f);

// Egge-Loehr-Warrington extraction: c_lambda = sum_alpha d_alpha K*(alpha,lambda)
SymExpansion quasi_to_schur_elw(const QuasiExpansion& d);

// expand F into packed monomials
MonomialTable quasi_to_monomials(const QuasiExpansion& d);

// plethystic substitution X -> (q-1)X followed by division by (q-1)^n:
// p_k -> (q^k - 1) p_k on the power-sum side, result checked integral
SymExpansion plethysm_q_shift(const SymExpansion& f);

struct EPositivity {
  bool positive = true;
  std::optional<Witness> witness;
};
EPositivity e_positive(const SymExpansion& f);

// Shareshian-Wachs property check for X = sum_i a_i(x) q^i with m = edge
// count: every a_i e-positive, a_i = a_{m-i}, and a_{i+1} - a_i e-positive
// for 0 <= i < (m-1)/2.
RelationReport check_conjecture_sw(const SymExpansion& f, int edge_count);

}  // namespace qchrom

#endif
