#pragma once

// L-infinity structures and morphisms, generic over the element type.

#include "linf/multimap.hpp"

#include <chrono>
#include <optional>
#include <set>
#include <tuple>
#include <sstream>

namespace linf {

enum class Presentation { skew, sym };

inline std::string to_text(const Element& e) { return e.str(); }

template <class E>
struct LInftyStructure {
  Presentation presentation = Presentation::skew;
  Family<E> brackets;
  int max_arity = 4;

  bool skew() const { return presentation == Presentation::skew; }
  Endo<E> bracket(int k) const {
    auto it = brackets.find(k);
    if (it != brackets.end()) return it->second;
    return Endo<E>::zero(k, skew() ? 2 - k : 1, skew() ? Symmetry::skew : Symmetry::symmetric);
  }
};

template <class In, class Out = In>
struct LInftyMorphism {
  Presentation presentation = Presentation::skew;
  Family<In, Out> components;
  int max_arity = 4;

  bool skew() const { return presentation == Presentation::skew; }
  Multi<In, Out> component(int k) const {
    auto it = components.find(k);
    if (it != components.end()) return it->second;
    return Multi<In, Out>::zero(k, skew() ? 1 - k : 0, skew() ? Symmetry::skew : Symmetry::symmetric);
  }
};

// J_n = sum_{k=1}^{n} mu_k o mu_{n-k+1}, with the product of the presentation.
template <class E>
Endo<E> jacobiator(const LInftyStructure<E>& mu, int n) {
  Symmetry s = mu.skew() ? Symmetry::skew : Symmetry::symmetric;
  Endo<E> acc = Endo<E>::zero(n, mu.skew() ? 3 - n : 2, s);
  for (int k = 1; k <= n; ++k) {
    auto a = mu.bracket(k), b = mu.bracket(n - k + 1);
    if (a.is_zero_map() || b.is_zero_map()) continue;
    acc = add(acc, mu.skew() ? nr_skew(a, b) : nr_sym(a, b));
  }
  return acc;
}

struct CheckFailure {
  int arity = 0;
  std::vector<int> tuple;  // corpus indices
  std::string residual;
};

struct CheckReport {
  bool ok = true;
  std::vector<int> checked_arities;
  long tuples_checked = 0;
  std::optional<CheckFailure> failure;
  double seconds = 0;
};

using TupleFilter = std::function<bool(const std::vector<int>&)>;

// Multisets of corpus indices of size k, skipping those forced to vanish for
// a map of the given symmetry.
template <class E>
std::vector<std::vector<int>> corpus_tuples(const std::vector<E>& corpus, int k, Symmetry s) {
  std::vector<std::vector<int>> out;
  std::vector<int> t;
  int n = static_cast<int>(corpus.size());
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(t.size()) == k) {
      out.push_back(t);
      return;
    }
    for (int i = (s == Symmetry::none ? 0 : from); i < n; ++i) {
      if (s != Symmetry::none && !t.empty() && t.back() == i && forced_zero(s, degree(corpus[i]))) continue;
      t.push_back(i);
      rec(i);
      t.pop_back();
    }
  };
  rec(0);
  return out;
}

// Evaluates each map on every corpus tuple of its arity and reports the first
// nonzero value. Inputs of the corpus must be homogeneous and nonzero.
template <class In, class Out>
CheckReport check_vanishing(const std::vector<std::pair<int, Multi<In, Out>>>& maps, const std::vector<In>& corpus,
                            Symmetry s, const TupleFilter& skip = nullptr) {
  auto start = std::chrono::steady_clock::now();
  CheckReport rep;
  for (const auto& [arity, f] : maps) {
    rep.checked_arities.push_back(arity);
    if (f.is_zero_map()) continue;
    for (const auto& t : corpus_tuples(corpus, arity, s)) {
      if (skip && skip(t)) continue;
      std::vector<In> xs;
      for (int i : t) xs.push_back(corpus[i]);
      Out r = f.raw(xs);
      ++rep.tuples_checked;
      if (!is_zero(r)) {
        rep.ok = false;
        rep.failure = CheckFailure{arity, t, to_text(r)};
        rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        return rep;
      }
    }
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

template <class E>
CheckReport check_linfty(const LInftyStructure<E>& mu, int up_to_arity, const std::vector<E>& corpus,
                         const TupleFilter& skip = nullptr) {
  std::vector<std::pair<int, Endo<E>>> maps;
  for (int n = 1; n <= up_to_arity; ++n) maps.emplace_back(n, jacobiator(mu, n));
  return check_vanishing(maps, corpus, mu.skew() ? Symmetry::skew : Symmetry::symmetric, skip);
}

// K_m = sum_l f_{m-l+1} o mu_l - mu'_l o S_{l,m}(f)
template <class In, class Out>
Multi<In, Out> morphism_defect(const LInftyMorphism<In, Out>& f, const LInftyStructure<In>& src,
                               const LInftyStructure<Out>& tgt, int m) {
  if (f.presentation != src.presentation || f.presentation != tgt.presentation)
    throw std::invalid_argument("morphism_defect: presentation mismatch");
  bool skew = f.skew();
  Symmetry s = skew ? Symmetry::skew : Symmetry::symmetric;
  Multi<In, Out> acc = Multi<In, Out>::zero(m, skew ? 2 - m : 1, s);
  for (int l = 1; l <= m; ++l) {
    auto fk = f.component(m - l + 1);
    auto mu = src.bracket(l);
    if (!fk.is_zero_map() && !mu.is_zero_map()) acc = add(acc, skew ? nr_skew(fk, mu) : nr_sym(fk, mu));
    auto nu = tgt.bracket(l);
    if (!nu.is_zero_map()) {
      auto t = compose_S(nu, f.components, m, skew);
      if (!t.is_zero_map()) acc = add(acc, t, Q(-1));
    }
  }
  return acc;
}

template <class In, class Out>
CheckReport check_morphism(const LInftyMorphism<In, Out>& f, const LInftyStructure<In>& src,
                           const LInftyStructure<Out>& tgt, int up_to_arity, const std::vector<In>& corpus,
                           const TupleFilter& skip = nullptr) {
  std::vector<std::pair<int, Multi<In, Out>>> maps;
  for (int m = 1; m <= up_to_arity; ++m) maps.emplace_back(m, morphism_defect(f, src, tgt, m));
  return check_vanishing(maps, corpus, f.skew() ? Symmetry::skew : Symmetry::symmetric, skip);
}

// (g o f)_m = sum_l g_l o S_{l,m}(f)
template <class A, class B, class C>
LInftyMorphism<A, C> compose_morphisms(const LInftyMorphism<B, C>& g, const LInftyMorphism<A, B>& f) {
  if (g.presentation != f.presentation) throw std::invalid_argument("compose_morphisms: presentation mismatch");
  LInftyMorphism<A, C> out;
  out.presentation = f.presentation;
  out.max_arity = std::min(f.max_arity, g.max_arity);
  for (int m = 1; m <= out.max_arity; ++m) {
    Multi<A, C> acc = Multi<A, C>::zero(m, f.skew() ? 1 - m : 0, f.skew() ? Symmetry::skew : Symmetry::symmetric);
    for (int l = 1; l <= m; ++l) {
      auto gl = g.component(l);
      if (gl.is_zero_map()) continue;
      auto t = compose_S(gl, f.components, m, f.skew());
      if (!t.is_zero_map()) acc = add(acc, t);
    }
    if (!acc.is_zero_map()) out.components.emplace(m, acc);
  }
  return out;
}

// Iterative inverse given an inverse of the unary component:
// g_m = -(f1^{-1} o f_m + sum_{l=2}^{m-1} g_l o S_{l,m}(f)) o (f1^{-1})^{(x)m}.
template <class E>
LInftyMorphism<E> invert_morphism(const LInftyMorphism<E>& f, const Endo<E>& f1_inverse) {
  LInftyMorphism<E> g;
  g.presentation = f.presentation;
  g.max_arity = f.max_arity;
  bool skew = f.skew();
  g.components.emplace(1, f1_inverse);
  Family<E> inv_only{{1, f1_inverse}};
  for (int m = 2; m <= f.max_arity; ++m) {
    Endo<E> inner = Endo<E>::zero(m, skew ? 1 - m : 0, skew ? Symmetry::skew : Symmetry::symmetric);
    auto fm = f.component(m);
    if (!fm.is_zero_map()) inner = add(inner, gerstenhaber_i(f1_inverse, fm, 1));
    for (int l = 2; l < m; ++l) {
      auto gl = g.component(l);
      if (gl.is_zero_map()) continue;
      auto t = compose_S(gl, f.components, m, skew);
      if (!t.is_zero_map()) inner = add(inner, t);
    }
    if (inner.is_zero_map()) continue;
    // precompose with (f1^{-1})^{(x)m}: a single ordered (1,...,1)-unshuffle
    Endo<E> gm = scale(Q(-1), compose_S(inner, inv_only, m, skew));
    // compose_S treats its outer map as having arity l = m with unit blocks
    if (!gm.is_zero_map()) g.components.emplace(m, gm);
  }
  return g;
}

// Exponential pushforward along p (degree 0, no unary part), sym presentation:
// mu' = sum_k ad_p^k(mu)/k!, f = pr + sum_{k>=1} (p o ... o p)/k! (left nested).
template <class E>
Family<E> family_product(const Family<E>& a, const Family<E>& b, int max_arity) {
  Family<E> out;
  for (const auto& [i, fa] : a)
    for (const auto& [j, fb] : b) {
      int n = i + j - 1;
      if (n > max_arity || fa.is_zero_map() || fb.is_zero_map()) continue;
      auto t = nr_sym(fa, fb);
      auto it = out.find(n);
      if (it == out.end())
        out.emplace(n, t);
      else
        it->second = add(it->second, t);
    }
  return out;
}

template <class E>
Family<E> family_add(const Family<E>& a, const Family<E>& b, const Q& c = 1) {
  Family<E> out = a;
  for (const auto& [k, fb] : b) {
    if (fb.is_zero_map()) continue;
    auto it = out.find(k);
    if (it == out.end())
      out.emplace(k, scale(c, fb));
    else
      it->second = add(it->second, fb, c);
  }
  return out;
}

template <class E>
std::pair<LInftyStructure<E>, LInftyMorphism<E>> pushforward_structure(const LInftyStructure<E>& mu,
                                                                       const Family<E>& p) {
  if (mu.skew()) throw std::invalid_argument("pushforward_structure: sym presentation required");
  for (const auto& [k, pk] : p) {
    if (pk.is_zero_map()) continue;
    if (k == 1) throw std::invalid_argument("pushforward_structure: p must have no unary component");
    if (pk.degree() != 0) throw std::invalid_argument("pushforward_structure: p must have degree 0");
  }
  int top = mu.max_arity;
  LInftyStructure<E> out = mu;
  Family<E> term = mu.brackets;
  Q fact = 1;
  for (int k = 1; k < top; ++k) {
    // [p, term] = p o term - term o p
    term = family_add(family_product(p, term, top), family_product(term, p, top), Q(-1));
    if (term.empty()) break;
    fact *= k;
    out.brackets = family_add(out.brackets, term, Q(1) / fact);
  }
  LInftyMorphism<E> f;
  f.presentation = Presentation::sym;
  f.max_arity = top;
  f.components.emplace(1, identity_map<E>());
  Family<E> power = p;
  fact = 1;
  for (int k = 1; k < top && !power.empty(); ++k) {
    fact *= k;
    f.components = family_add(f.components, power, Q(1) / fact);
    power = family_product(power, p, top);
  }
  return {out, f};
}

// Finite-dimensional data ----------------------------------------------------

using Chain = std::map<std::vector<int>, Q>;  // increasing generator tuples

struct LieAlgebraData {
  SpacePtr space;  // all degrees 0
  // bracket of basis vectors i < j
  std::map<std::pair<int, int>, Element> table;

  // Validates antisymmetry (structural) and the Jacobi identity.
  static LieAlgebraData make(const std::vector<std::string>& labels,
                             const std::vector<std::tuple<int, int, int, Q>>& constants);
  int dim() const { return static_cast<int>(space->dim()); }
  Element bracket_basis(int i, int j) const;
  Element bracket(const Element& x, const Element& y) const;
  // Degree-0 skew bracket as a map, and the L-infinity structure it defines.
  EMulti bracket_map() const;
  LInftyStructure<Element> as_linfty() const;
};

// so(n) with basis A_ab = (-1)^{1+a+b} (E_ab - E_ba), 1-based a < b, so that
// [A_ka, A_kb] = A_ab.
std::vector<std::pair<int, int>> so_pairs(int n);  // 0-based (a, b), a < b
std::vector<std::vector<Q>> so_matrix(int n, int a, int b);
LieAlgebraData so_algebra(int n);

// Sorting sign of a generator sequence into an increasing tuple; 0 on repeats.
std::pair<int, std::vector<int>> alternating_sort(const std::vector<int>& seq);
void add_chain(Chain& c, const std::vector<int>& t, const Q& v);
Chain ce_boundary(const LieAlgebraData& g, const Chain& p);
// All increasing k-tuples of generators.
std::vector<std::vector<int>> wedge_basis(int dim, int k);
// (delta c)(p) = c(d p) for a cochain given on increasing tuples.
using Cochain = std::function<Q(const std::vector<int>&)>;
Q ce_coboundary(const LieAlgebraData& g, const Cochain& c, const std::vector<int>& p);

// Differential graded Lie algebra on a finite graded space.
struct Dgla {
  SpacePtr space;
  EMulti d;        // arity 1, degree 1
  EMulti bracket;  // arity 2, degree 0, graded skew
  // Throws with a witness when d^2, Leibniz, antisymmetry or Jacobi fail.
  void validate() const;
};

// L-infinity[1] structure on the negative part with Bernoulli coefficients.
LInftyStructure<Element> getzler_truncate(const Dgla& L, int max_arity = 4);
// The negative-degree subspace used by getzler_truncate.
SpacePtr negative_part(const SpacePtr& v);

// Concatenated space with componentwise brackets.
std::pair<SpacePtr, LInftyStructure<Element>> direct_sum(const SpacePtr& v, const LInftyStructure<Element>& a,
                                                         const SpacePtr& w, const LInftyStructure<Element>& b);

// Inverse of a finite morphism, inverting the unary component by row reduction.
std::optional<LInftyMorphism<Element>> invert_morphism(const LInftyMorphism<Element>& f, const SpacePtr& v);

std::vector<Element> basis_corpus(const SpacePtr& v);

}  // namespace linf
