#pragma once

// Table-backed multilinear maps between finite graded spaces.

#include "linf/multilinear.hpp"

#include <random>

namespace linf {

using EMulti = Endo<Element>;

// Whether a tuple with this repeated basis vector is forced to vanish.
bool forced_zero(Symmetry s, int repeated_degree);

// Basis tuples on which a map of this symmetry is determined: all tuples for
// Symmetry::none, otherwise nondecreasing tuples that are not forced to vanish.
std::vector<std::vector<int>> canonical_tuples(const GradedSpace& v, int arity, Symmetry s);

struct MultiMap {
  SpacePtr source;
  SpacePtr target;
  int arity = 1;
  int degree = 0;
  Symmetry symmetry = Symmetry::none;
  std::map<std::vector<int>, Element> table;

  static MultiMap zero(SpacePtr v, int arity, int degree, Symmetry s, SpacePtr w = nullptr);

  // Value on basis vectors, applying the permutation rule to reach the
  // stored canonical tuple.
  Element on_basis(const std::vector<int>& idx) const;
  Element operator()(const std::vector<Element>& xs) const;
  void set(const std::vector<int>& idx, const Element& value);

  EMulti as_multi() const;
  bool operator==(const MultiMap& o) const;
};

MultiMap tabulate(const EMulti& f, SpacePtr source, SpacePtr target = nullptr);

// Basis vector i of v as an Element.
inline Element bvec(const SpacePtr& v, int i) { return Element::basis(v, i); }

// First basis tuple on which two maps differ, empty when equal. When both maps
// are known to share a symmetry, passing it restricts the scan to canonical
// tuples.
std::vector<int> first_difference(const EMulti& f, const EMulti& g, const SpacePtr& v,
                                  Symmetry s = Symmetry::none);

// Deterministic random data for property tests.
SpacePtr random_space(std::mt19937_64& rng, int dim, int min_deg = -2, int max_deg = 2);
Q random_rational(std::mt19937_64& rng, int range = 3);
MultiMap random_multimap(std::mt19937_64& rng, SpacePtr v, int arity, int degree, Symmetry s,
                         double density = 0.6);

}  // namespace linf
