#pragma once

// Lie algebra actions by polynomial vector fields and homotopy comoment maps.

#include "linf/linfty.hpp"
#include "linf/multisymplectic.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace linf {

struct ActionData {
  LieAlgebraData algebra;
  std::vector<PolyField> fields;  // fundamental field of each generator
  int N = 0;

  // Checks v_[a,b] = [v_a, v_b] on all basis pairs.
  static ActionData make(const LieAlgebraData& g, const std::vector<PolyField>& fields);
  PolyField field(const Element& x) const;
  // The fields of a generator tuple, in order.
  std::vector<PolyField> fields_of(const std::vector<int>& t) const;
  // iota(v_p) a = iota_{v_k} ... iota_{v_1} a, extended linearly over a chain.
  PolyForm contract(const Chain& p, const PolyForm& a) const;
  // Index of a generator with L_v a != 0, if any.
  std::optional<int> non_preserving(const PolyForm& a) const;
};

// so(n) on R^n with v_A = -(A x).d/dx, so v_{A_ab} = (-1)^{1+a+b} (x_a d_b - x_b d_a).
ActionData so_n_action(int n);
// Block sum of actions on the product R^N1 x R^N2.
ActionData product_action(const ActionData& a, const ActionData& b);
// The Lie algebra spanned by linearly independent fields closed under the bracket.
ActionData action_from_fields(const std::vector<std::string>& labels, const std::vector<PolyField>& fields);

// Components f_k on increasing generator tuples, 1 <= k <= n, form degree n - k.
struct Comoment {
  int n = 0;
  int N = 0;
  std::map<std::vector<int>, PolyForm> values;

  // Alternating lookup on any generator sequence.
  PolyForm eval(const std::vector<int>& seq) const;
  PolyForm eval(const Chain& p, int k) const;
  bool operator==(const Comoment& o) const;
};

struct ComomentFailure {
  int k = 0;
  std::vector<int> tuple;
  std::string residual;
};

struct ComomentReport {
  bool ok = true;
  long tuples_checked = 0;
  std::optional<ComomentFailure> failure;
};

// -f_{k-1}(d p) = d f_k(p) + s(k) iota(v_p) omega for all increasing p, 1 <= k <= n+1.
ComomentReport verify_comoment(const Comoment& f, const ActionData& A, const PolyForm& omega);
ComomentReport verify_comoment(const Comoment& f, const ActionData& A, const MssSpace& M);

// f_{k-1}(d p) + s(k) iota(v_p) omega; throws if the result is not closed.
PolyForm mu_aux(const Comoment& f, const ActionData& A, const PolyForm& omega, int k, const std::vector<int>& p);

// f_k(q) = (-1)^{k-1} s(k) iota(v_q) alpha for an invariant potential alpha of omega.
Comoment comoment_from_potential(const PolyForm& alpha, const ActionData& A, const MssSpace& M);

// Comoment for omega + dB: f_k + s(k+1) iota(v_p) B. Throws unless L_v B = 0.
Comoment gauge_shift_comoment(const Comoment& f, const ActionData& A, const PolyForm& B);

// L_{v_a} f_k(p) - f_k([a, p]) over generators a and increasing p.
struct EquivarianceReport {
  bool equivariant = true;
  long checked = 0;
  std::optional<ComomentFailure> failure;  // k, (a, p...), residual
};
EquivarianceReport equivariance(const Comoment& f, const ActionData& A);
// [a, x_1 ^ ... ^ x_k] = sum_i x_1 ^ .. [a, x_i] .. ^ x_k
Chain adjoint_action(const LieAlgebraData& g, int a, const Chain& p);

// A subalgebra spanned by the rows of basis (coordinates in g); the rows are
// returned as the inclusion. Throws if the span is not closed under the bracket.
std::pair<LieAlgebraData, Matrix> subalgebra(const LieAlgebraData& g, const Matrix& basis,
                                             const std::string& prefix = "h");

struct InducedComoment {
  ActionData action;
  PolyForm omega;
  Comoment f;
};

enum class KernelVariant { wedge, contract };

// f o j for the subalgebra spanned by the rows of basis.
InducedComoment induce_subalgebra(const Comoment& f, const ActionData& A, const PolyForm& omega,
                                  const Matrix& basis);
// i^* f for the linear subspace spanned by the columns of E (N x N').
InducedComoment induce_submanifold(const Comoment& f, const ActionData& A, const PolyForm& omega, const Matrix& E);
// Lie-kernel comoment for a cycle p of degree k on the centralizer g_p and iota(v_p) omega,
// with iota(v_p) = iota_{v_k}..iota_{v_1}:
//   wedge:    s(i) s(i+k) f_{i+k}(p ^ q) = -s(k) f_{i+k}(q ^ p)
//   contract: (-1)^i s(i) s(k) iota(v_q) f_k(p), which needs f equivariant.
InducedComoment induce_lie_kernel(const Comoment& f, const ActionData& A, const PolyForm& omega, const Chain& p,
                                  KernelVariant variant);

// contract minus wedge on each increasing tuple of the centralizer where they differ.
std::map<std::vector<int>, PolyForm> lie_kernel_discrepancy(const Comoment& f, const ActionData& A,
                                                            const PolyForm& omega, const Chain& p);

// c(x_1..x_{n+1}) = (iota(v_1 ^ .. ^ v_{n+1}) omega)(point) on increasing tuples.
std::map<std::vector<int>, Q> obstruction_cocycle(const ActionData& A, const PolyForm& omega,
                                                  const std::vector<Q>& point);

// The comoment as a skew L-infinity morphism g -> observables.
LInftyMorphism<Element, FormVec> comoment_morphism(const Comoment& f, const ActionData& A, int max_arity);
// The same check as verify_comoment, phrased through morphism_defect.
CheckReport check_comoment_morphism(const Comoment& f, const ActionData& A, const MssSpace& M);

// (tau_B o Phi o f)_m - (Phi o f~)_m on a generator tuple of length m.
struct PentagonReport {
  bool ok = true;
  std::vector<int> arities;
  std::vector<long> tuples;  // per arity
  std::optional<ComomentFailure> failure;
};
FormVec pentagon_defect(const MssSpace& M, const ActionData& A, const Comoment& f, const PolyForm& B,
                        const std::vector<int>& tuple, const std::map<int, Q>& phi_overrides = {});
PentagonReport check_pentagon(const MssSpace& M, const ActionData& A, const Comoment& f, const PolyForm& B,
                              int max_m, const std::map<int, Q>& phi_overrides = {});

}  // namespace linf
