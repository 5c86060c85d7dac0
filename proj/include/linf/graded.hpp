#pragma once

#include "linf/arith.hpp"

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace linf {

class GradedSpace;
using SpacePtr = std::shared_ptr<const GradedSpace>;

// Finite graded space with an ordered, labelled basis. Instances are interned:
// two spaces with equal labels and degrees share one pointer, so pointer
// comparison is value comparison.
class GradedSpace {
 public:
  static SpacePtr make(const std::vector<std::pair<std::string, int>>& basis);

  size_t dim() const { return labels_.size(); }
  const std::string& label(int i) const { return labels_[i]; }
  int degree(int i) const { return degrees_[i]; }
  const std::vector<int>& degrees() const { return degrees_; }
  // -1 when absent
  int index(const std::string& label) const;

  // V[k]: the same basis with every degree lowered by k.
  SpacePtr shifted(int k) const;

 private:
  GradedSpace() = default;
  std::vector<std::string> labels_;
  std::vector<int> degrees_;
  std::map<std::string, int> index_;
};

// Sparse vector in a GradedSpace. A default constructed Element is the zero
// vector of no particular space and adopts the space of whatever it meets.
class Element {
 public:
  Element() = default;
  explicit Element(SpacePtr s) : space_(std::move(s)) {}
  static Element basis(SpacePtr s, int i, const Q& c = 1);

  const SpacePtr& space() const { return space_; }
  const std::map<int, Q>& terms() const { return terms_; }
  Q coeff(int i) const;
  void add(int i, const Q& c);

  bool is_zero() const { return terms_.empty(); }
  bool is_homogeneous() const;
  // Degree of a nonzero homogeneous element; throws otherwise.
  int degree() const;

  Element& operator+=(const Element& o);
  Element& operator-=(const Element& o);
  Element& operator*=(const Q& c);
  friend Element operator+(Element a, const Element& b) { return a += b; }
  friend Element operator-(Element a, const Element& b) { return a -= b; }
  friend Element operator*(const Q& c, Element a) { return a *= c; }
  friend Element operator*(Element a, const Q& c) { return a *= c; }
  Element operator-() const { Element r = *this; r *= -1; return r; }
  bool operator==(const Element& o) const;

  std::string str() const;

 private:
  void adopt(const SpacePtr& s);
  SpacePtr space_;
  std::map<int, Q> terms_;
};

// Element-type interface used by the generic multilinear engine.
inline bool is_zero(const Element& e) { return e.is_zero(); }
inline bool is_homogeneous(const Element& e) { return e.is_homogeneous(); }
inline int degree(const Element& e) { return e.degree(); }
std::vector<Element> homogeneous_parts(const Element& e);
// Moves x from V[s] to V[s+k]; coefficients unchanged, degrees drop by k.
Element regrade(const Element& e, int k);

// Permutation of {1..n} in one-line notation, 1-based.
struct Permutation {
  std::vector<int> images;

  static Permutation identity(int n);
  int size() const { return static_cast<int>(images.size()); }
  bool valid() const;
  int parity() const;  // +1 even, -1 odd
  // (a * b)(i) = a(b(i))
  Permutation operator*(const Permutation& b) const;
  bool operator==(const Permutation& o) const = default;
  bool operator<(const Permutation& o) const { return images < o.images; }
};

// act(s, x)_i = x_{s(i)}: the reordering performed by B_s.
std::vector<int> act(const Permutation& s, const std::vector<int>& degrees);

// eps(s; x): sign of the subpermutation of odd-degree entries.
int koszul_sign(const Permutation& s, const std::vector<int>& degrees);
// chi(s; x) = parity(s) eps(s; x)
int odd_koszul_sign(const Permutation& s, const std::vector<int>& degrees);

// Same signs on a 0-based index list idx (idx[i] = s(i+1) - 1).
int koszul_sign_idx(const std::vector<int>& idx, const std::vector<int>& degrees);
int parity_idx(const std::vector<int>& idx);

std::vector<Permutation> unshuffles(const std::vector<int>& blocks);
std::vector<Permutation> ordered_unshuffles(const std::vector<int>& blocks);

// Cached 0-based variants used by the evaluation engine.
const std::vector<std::vector<int>>& unshuffles_idx(const std::vector<int>& blocks);
const std::vector<std::vector<int>>& ordered_unshuffles_idx(const std::vector<int>& blocks);

// Total Koszul sign -(-1)^{k(k+1)/2}.
int varsigma(int k);

// (-1)^{sum_i (n-i)|u_i|}
int dec_sign(const std::vector<int>& degrees);

}  // namespace linf
