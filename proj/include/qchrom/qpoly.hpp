#ifndef QCHROM_QPOLY_HPP
#define QCHROM_QPOLY_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "qchrom/errors.hpp"

namespace qchrom {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Dense univariate polynomial in q with exact coefficients, ascending degree.
// The zero polynomial is the empty coefficient vector; otherwise the top
// coefficient is nonzero. All polynomials in this project have small degree
// (bounded by the edge count of a graph) and are dense, so no sparse storage.
template <typename C>
class BasicQPoly {
public:
  BasicQPoly() = default;
  BasicQPoly(std::initializer_list<C> cs) : coeffs_(cs) { normalize(); }
  explicit BasicQPoly(std::vector<C> cs) : coeffs_(std::move(cs)) { normalize(); }
  BasicQPoly(const C& c) : coeffs_{c} { normalize(); }  // NOLINT: implicit scalar lift
  BasicQPoly(int c) : coeffs_{C(c)} { normalize(); }    // NOLINT

  static BasicQPoly monomial(const C& c, int degree) {
    std::vector<C> v(degree + 1, C(0));
    v[degree] = c;
    return BasicQPoly(std::move(v));
  }

  bool is_zero() const { return coeffs_.empty(); }
  // degree of the zero polynomial is -1 by convention
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  C coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return C(0);
    return coeffs_[i];
  }
  const std::vector<C>& coeffs() const { return coeffs_; }

  bool operator==(const BasicQPoly& o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const BasicQPoly& o) const { return !(*this == o); }
  // lexicographic on (degree, coefficients); only used as a container order
  bool operator<(const BasicQPoly& o) const { return coeffs_ < o.coeffs_; }

  BasicQPoly operator+(const BasicQPoly& o) const {
    std::vector<C> v(std::max(coeffs_.size(), o.coeffs_.size()), C(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] += o.coeffs_[i];
    return BasicQPoly(std::move(v));
  }
  BasicQPoly operator-(const BasicQPoly& o) const {
    std::vector<C> v(std::max(coeffs_.size(), o.coeffs_.size()), C(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i] = coeffs_[i];
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) v[i] -= o.coeffs_[i];
    return BasicQPoly(std::move(v));
  }
  BasicQPoly operator-() const {
    std::vector<C> v = coeffs_;
    for (auto& c : v) c = -c;
    return BasicQPoly(std::move(v));
  }
  BasicQPoly operator*(const BasicQPoly& o) const {
    if (is_zero() || o.is_zero()) return BasicQPoly();
    std::vector<C> v(coeffs_.size() + o.coeffs_.size() - 1, C(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
      for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
        v[i + j] += coeffs_[i] * o.coeffs_[j];
    return BasicQPoly(std::move(v));
  }
  BasicQPoly& operator+=(const BasicQPoly& o) { return *this = *this + o; }
  BasicQPoly& operator-=(const BasicQPoly& o) { return *this = *this - o; }
  BasicQPoly& operator*=(const BasicQPoly& o) { return *this = *this * o; }

  // multiply by q^k
  BasicQPoly shifted(int k) const {
    if (is_zero()) return *this;
    std::vector<C> v(coeffs_.size() + k, C(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + k] = coeffs_[i];
    return BasicQPoly(std::move(v));
  }

  C eval(const C& x) const {  // Horner
    C r(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) r = r * x + *it;
    return r;
  }
  C eval_at_one() const {
    C r(0);
    for (const auto& c : coeffs_) r += c;
    return r;
  }

  bool nonnegative() const {
    for (const auto& c : coeffs_)
      if (c < 0) return false;
    return true;
  }

  // coefficient of q^i equals coefficient of q^{twice_center - i} for all i;
  // twice_center is 2*center so half-integral centers stay in the integers
  bool is_palindromic(int twice_center) const {
    int top = std::max(degree(), twice_center - 0);
    for (int i = 0; i <= top; ++i)
      if (coeff(i) != coeff(twice_center - i)) return false;
    return true;
  }

  std::vector<std::string> coeff_strings() const {
    std::vector<std::string> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
      std::ostringstream ss;
      ss << c;
      out.push_back(ss.str());
    }
    return out;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::ostringstream ss;
    bool first = true;
    for (int i = 0; i <= degree(); ++i) {
      C c = coeff(i);
      if (c == 0) continue;
      if (!first) ss << (c > 0 ? " + " : " - ");
      else if (c < 0) ss << "-";
      first = false;
      C ac = c < 0 ? C(-c) : c;
      if (ac != 1 || i == 0) ss << ac;
      if (i >= 1) {
        if (ac != 1) ss << "*";
        ss << "q";
        if (i > 1) ss << "^" << i;
      }
    }
    return ss.str();
  }

private:
  void normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
  std::vector<C> coeffs_;
};

using QPoly = BasicQPoly<Int>;
using QPolyQ = BasicQPoly<Rat>;

// [n]_q = 1 + q + ... + q^{n-1};  [0]_q = 0
template <typename C = Int>
BasicQPoly<C> q_int(int n) {
  std::vector<C> v(std::max(n, 0), C(1));
  return BasicQPoly<C>(std::move(v));
}

// [n]_q! = [1]_q [2]_q ... [n]_q;  [0]_q! = 1
template <typename C = Int>
BasicQPoly<C> q_factorial(int n) {
  BasicQPoly<C> r(1);
  for (int i = 1; i <= n; ++i) r *= q_int<C>(i);
  return r;
}

template <typename C = Int>
BasicQPoly<C> q_power(int k) {
  return BasicQPoly<C>::monomial(C(1), k);
}

// Exact quotient in the polynomial ring over the coefficient ring.  Throws
// NonzeroRemainder when the division is inexact (either a nonzero remainder
// or, over the integers, a leading-coefficient division that does not land
// in Z). Never falls back to rational arithmetic silently.
template <typename C>
BasicQPoly<C> exact_div(const BasicQPoly<C>& num, const BasicQPoly<C>& den) {
  if (den.is_zero()) throw NonzeroRemainder("exact_div: division by zero polynomial");
  if (num.is_zero()) return BasicQPoly<C>();
  if (num.degree() < den.degree())
    throw NonzeroRemainder("exact_div: degree of numerator below denominator");
  std::vector<C> rem(num.coeffs());
  int dn = den.degree();
  C lead = den.coeff(dn);
  std::vector<C> quot(num.degree() - dn + 1, C(0));
  for (int k = num.degree() - dn; k >= 0; --k) {
    C top = rem[k + dn];
    if (top == 0) continue;
    C qc = top / lead;
    if (qc * lead != top)
      throw NonzeroRemainder("exact_div: leading coefficient does not divide");
    quot[k] = qc;
    for (int j = 0; j <= dn; ++j) rem[k + j] -= qc * den.coeff(j);
  }
  for (const auto& c : rem)
    if (c != 0) throw NonzeroRemainder("exact_div: nonzero remainder");
  return BasicQPoly<C>(std::move(quot));
}

inline QPolyQ to_rational(const QPoly& p) {
  std::vector<Rat> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) v.emplace_back(c);
  return QPolyQ(std::move(v));
}

// checked narrowing back to integer coefficients
inline QPoly to_integral(const QPolyQ& p) {
  std::vector<Int> v;
  v.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    if (denominator(c) != 1)
      throw NonIntegral("to_integral: coefficient " + c.str() + " is not an integer");
    v.push_back(numerator(c));
  }
  return QPoly(std::move(v));
}

}  // namespace qchrom

#endif
