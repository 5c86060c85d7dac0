#pragma once

// Multisymplectic data on R^N: Hamiltonian pairs, the Rogers observables,
// the pairings, the twisted Vinogradov brackets, gauge transformations and
// the Bernoulli embedding Phi.

#include "linf/linfty.hpp"
#include "linf/poly.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace linf {

// A vector field X together with differential forms of several degrees. A
// p-form sits in degree p - top - shift and X sits in degree -shift, so X and
// the top-form make up the degree-shift component. top = n - 1 for the
// observables of an n-plectic form.
struct FormVec {
  int N = 0;
  int top = 0;
  int shift = 0;
  PolyField X;
  std::map<int, PolyForm> forms;  // keyed by form degree, zero forms erased

  static FormVec pair(int top, const PolyField& x, const PolyForm& alpha);
  static FormVec field(int N, int top, const PolyField& x);
  // A single form, placed as a pair with X = 0 when its degree is top.
  static FormVec form(int top, const PolyForm& f);

  bool has_field() const { return !X.is_zero(); }
  PolyForm form_part(int p) const;
  // Sum of all form components, as a list.
  std::vector<PolyForm> all_forms() const;

  FormVec& operator+=(const FormVec& o);
  FormVec& operator-=(const FormVec& o);
  FormVec& operator*=(const Q& c);
  friend FormVec operator+(FormVec a, const FormVec& b) { return a += b; }
  friend FormVec operator-(FormVec a, const FormVec& b) { return a -= b; }
  friend FormVec operator*(const Q& c, FormVec a) { return a *= c; }
  bool operator==(const FormVec& o) const;

 private:
  void adopt(const FormVec& o);
};

bool is_zero(const FormVec& v);
bool is_homogeneous(const FormVec& v);
int degree(const FormVec& v);
std::vector<FormVec> homogeneous_parts(const FormVec& v);
FormVec regrade(const FormVec& v, int k);
std::string to_text(const FormVec& v);

using FormMap = Endo<FormVec>;

struct MssSpace {
  int N = 0;
  int n = 0;  // omega has form degree n + 1
  PolyForm omega;
  int D = 2;  // polynomial degree bound

  // Validates closedness and nondegeneracy (origin plus sample points).
  static MssSpace make(const PolyForm& omega, int D = 2);
  static MssSpace volume(int N, int D = 2);
  // dx_0^dx_1 + dx_2^dx_3 + ...
  static MssSpace symplectic(int N, int D = 2);
  int top() const { return n - 1; }
};

// X with d alpha = -iota_X omega and polynomial degree within the bound.
std::optional<PolyField> hamiltonian_field(const PolyForm& alpha, const MssSpace& M);
// Throws when alpha is not Hamiltonian.
FormVec ham_pair(const PolyForm& alpha, const MssSpace& M);
// alpha = -h(iota_X omega) for X with iota_X omega closed; nullopt otherwise.
std::optional<FormVec> pair_for_field(const PolyField& x, const MssSpace& M);

struct CorpusOptions {
  bool constant_fields = true;
  bool linear_fields = true;
  int closed_pairs = 3;         // pairs (0, d beta) with beta a monomial form
  int lower_per_degree = -1;    // monomial lower forms per form degree, -1 for all
  int lower_poly_degree = -1;   // -1 uses M.D
};

// Hamiltonian pairs first, then lower forms by increasing form degree.
std::vector<FormVec> observable_corpus(const MssSpace& M, const CorpusOptions& opt = {});
// Pairs (X, alpha) with unconstrained alpha, for the Vinogradov structure.
std::vector<FormVec> vinogradov_corpus(const MssSpace& M, int alphas, int lower_per_degree);

// Number of entries of nonzero degree in a tuple.
TupleFilter skip_if_lower_at_least(const std::vector<FormVec>& corpus, int count);

// Rogers brackets, skew presentation, arity 1..n+1.
FormMap rogers_bracket(const MssSpace& M, int k);
LInftyStructure<FormVec> rogers_structure(const MssSpace& M);

// <e1,e2>_- = 1/2 (iota_X1 F2 - iota_X2 F1), <e1,e2>_+ with +.
FormMap pairing_minus();
FormMap pairing_plus();

// Skew brackets of the omega-twisted Vinogradov algebroid.
FormMap vinogradov_bracket(const MssSpace& M, int k);
// Same, for an arbitrary closed (n+1)-form (omega = 0 allowed).
FormMap vinogradov_bracket(const PolyForm& omega, int k);
LInftyStructure<FormVec> vinogradov_structure(const MssSpace& M);
// Odd k >= 3 from the Bernoulli formula, without the k = 3 special case.
FormMap vinogradov_bracket_general(const PolyForm& omega, int k);

// (X, alpha) -> (X, alpha + iota_X B), identity on lower forms.
FormMap gauge_tau(const PolyForm& B);
LInftyMorphism<FormVec> gauge_morphism(const PolyForm& B, int max_arity);

// Phi_k = phi_k <>_-^(k-1); overrides replace phi_k for chosen k.
FormMap phi_component(int k, const std::map<int, Q>& overrides = {});
LInftyMorphism<FormVec> phi_morphism(int max_arity, const std::map<int, Q>& overrides = {});

// Degree-wise decalage of a skew structure or morphism.
template <class E>
LInftyStructure<E> decalage(const LInftyStructure<E>& mu) {
  LInftyStructure<E> out{Presentation::sym, {}, mu.max_arity};
  for (const auto& [k, m] : mu.brackets) out.brackets.emplace(k, dec_map(m));
  return out;
}

}  // namespace linf
