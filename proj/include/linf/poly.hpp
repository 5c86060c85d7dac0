#pragma once

// Polynomial Cartan calculus on R^N.

#include "linf/arith.hpp"
#include "linf/linalg.hpp"

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace linf {

constexpr int kMaxVars = 8;

// Exponent vector packed one byte per variable.
using Mono = std::uint64_t;
inline int mono_exp(Mono m, int i) { return static_cast<int>((m >> (8 * i)) & 0xff); }
inline Mono mono_var(int i) { return Mono(1) << (8 * i); }
int mono_degree(Mono m);
Mono make_mono(const std::vector<int>& exps);

class Poly {
 public:
  Poly() = default;
  Poly(const Q& c);  // NOLINT: constants convert implicitly
  static Poly var(int i);
  static Poly monomial(Mono m, const Q& c = 1);

  const std::map<Mono, Q>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int degree() const;  // -1 for zero
  Q coeff(Mono m) const;
  void add(Mono m, const Q& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Q& c);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(const Q& c, Poly a) { return a *= c; }
  Poly operator-() const { Poly r = *this; r *= -1; return r; }
  bool operator==(const Poly& o) const { return terms_ == o.terms_; }

  Poly derivative(int i) const;
  Q eval(const std::vector<Q>& point) const;
  // y_j -> subs[j]
  Poly substitute(const std::vector<Poly>& subs) const;
  std::string str() const;

 private:
  std::map<Mono, Q> terms_;
};

using IndexSet = std::uint32_t;  // bit i set means dx_i (or d/dx_i) present
int popcount(IndexSet s);
std::vector<int> indices_of(IndexSet s);
IndexSet make_index_set(const std::vector<int>& idx);
// sign of merging the sorted sets a, b into a|b; 0 if they intersect
int merge_sign(IndexSet a, IndexSet b);

class PolyForm {
 public:
  PolyForm() = default;
  PolyForm(int n, int p) : n_(n), p_(p) {}
  static PolyForm function(int n, const Poly& f);
  static PolyForm basic(int n, const std::vector<int>& idx, const Poly& c = Poly(1));
  static PolyForm volume(int n);

  int dim() const { return n_; }
  int degree() const { return p_; }
  const std::map<IndexSet, Poly>& comps() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  Poly comp(IndexSet s) const;
  void add(IndexSet s, const Poly& c);

  PolyForm& operator+=(const PolyForm& o);
  PolyForm& operator-=(const PolyForm& o);
  PolyForm& operator*=(const Q& c);
  friend PolyForm operator+(PolyForm a, const PolyForm& b) { return a += b; }
  friend PolyForm operator-(PolyForm a, const PolyForm& b) { return a -= b; }
  friend PolyForm operator*(const Q& c, PolyForm a) { return a *= c; }
  friend PolyForm operator*(const Poly& f, const PolyForm& a);
  PolyForm operator-() const { PolyForm r = *this; r *= -1; return r; }
  bool operator==(const PolyForm& o) const;

  // Max coefficient degree, -1 for zero.
  int poly_degree() const;
  std::map<IndexSet, Q> eval(const std::vector<Q>& point) const;
  std::string str() const;

 private:
  void adopt(const PolyForm& o);
  int n_ = 0;
  int p_ = 0;
  std::map<IndexSet, Poly> comps_;
};

// Multivector field; q = 1 is an ordinary vector field.
class PolyField {
 public:
  PolyField() = default;
  PolyField(int n, int q) : n_(n), q_(q) {}
  static PolyField coordinate(int n, int i, const Poly& c = Poly(1));
  static PolyField euler(int n);
  // Sum_i a[i][j] x_j d/dx_i
  static PolyField linear(const Matrix& a);

  int dim() const { return n_; }
  int degree() const { return q_; }
  const std::map<IndexSet, Poly>& comps() const { return comps_; }
  bool is_zero() const { return comps_.empty(); }
  Poly comp(IndexSet s) const;
  // component along d/dx_i of a vector field
  Poly operator[](int i) const { return comp(IndexSet(1) << i); }
  void add(IndexSet s, const Poly& c);

  PolyField& operator+=(const PolyField& o);
  PolyField& operator-=(const PolyField& o);
  PolyField& operator*=(const Q& c);
  friend PolyField operator+(PolyField a, const PolyField& b) { return a += b; }
  friend PolyField operator-(PolyField a, const PolyField& b) { return a -= b; }
  friend PolyField operator*(const Q& c, PolyField a) { return a *= c; }
  friend PolyField operator*(const Poly& f, const PolyField& a);
  PolyField operator-() const { PolyField r = *this; r *= -1; return r; }
  bool operator==(const PolyField& o) const;

  int poly_degree() const;
  std::string str() const;

 private:
  void adopt(const PolyField& o);
  int n_ = 0;
  int q_ = 1;
  std::map<IndexSet, Poly> comps_;
};

PolyForm wedge(const PolyForm& a, const PolyForm& b);
PolyField wedge(const PolyField& a, const PolyField& b);
PolyForm d(const PolyForm& a);
// iota_{d_{i_q}} ... iota_{d_{i_1}} on each component, extended linearly
PolyForm iota(const PolyField& p, const PolyForm& a);
// iota_{x_m} ... iota_{x_1} a
PolyForm iota_seq(const std::vector<PolyField>& xs, const PolyForm& a);
// L_p a = d iota_p a - (-1)^q iota_p d a
PolyForm lie(const PolyField& p, const PolyForm& a);
// Lie bracket of vector fields
PolyField bracket(const PolyField& x, const PolyField& y);
// Schouten bracket via the expansion on decomposables; q <= 2
PolyField schouten(const PolyField& a, const PolyField& b);
// x(f) = sum_i x^i df/dx_i
Poly directional(const PolyField& x, const Poly& f);

// Decomposable multivector x_1 ^ ... ^ x_m as a list of vector fields.
using FieldList = std::vector<PolyField>;
// d(x_1 ^ ... ^ x_m) = sum_{i<j} (-1)^{i+j} [x_i,x_j] ^ ... as decomposable terms
std::vector<std::pair<int, FieldList>> boundary_terms(const FieldList& xs);
PolyForm multicartan_defect(const FieldList& xs, const PolyForm& a);

// Radial homotopy: d(h a) = a for closed a of positive degree.
PolyForm homotopy_operator(const PolyForm& a);
PolyForm poincare_primitive(const PolyForm& a);

// Pullback along x -> A x with A of shape N' x N; a lives on R^{N'}.
PolyForm pullback(const Matrix& a_map, const PolyForm& a);

// Monomials in n variables of total degree <= deg.
std::vector<Mono> monomials_up_to(int n, int deg);

}  // namespace linf
