#include "linf/comoment.hpp"

#include <stdexcept>

namespace linf {

namespace {

std::string tuple_text(const std::vector<int>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + std::to_string(t[i]);
  return s + ")";
}

Poly shift_poly(const Poly& p, int offset) {
  Poly r;
  for (const auto& [m, c] : p.terms()) r.add(m << (8 * offset), c);
  return r;
}

PolyField embed_field(const PolyField& x, int N, int offset) {
  PolyField r(N, 1);
  for (const auto& [s, c] : x.comps()) r.add(s << offset, shift_poly(c, offset));
  return r;
}

// x_1 ^ ... ^ x_k for coordinate vectors x_i in g.
Chain wedge_of(const std::vector<std::vector<Q>>& vecs) {
  Chain out;
  std::vector<int> seq(vecs.size());
  std::function<void(size_t, Q)> rec = [&](size_t i, Q c) {
    if (i == vecs.size()) {
      add_chain(out, seq, c);
      return;
    }
    for (size_t a = 0; a < vecs[i].size(); ++a) {
      if (vecs[i][a] == 0) continue;
      seq[i] = static_cast<int>(a);
      rec(i + 1, c * vecs[i][a]);
    }
  };
  rec(0, Q(1));
  return out;
}

std::vector<Q> coords(const Element& x, int dim) {
  std::vector<Q> v(dim, Q(0));
  for (const auto& [i, c] : x.terms()) v[i] = c;
  return v;
}

int chain_degree(const Chain& p) {
  if (p.empty()) throw std::invalid_argument("empty chain");
  int k = static_cast<int>(p.begin()->first.size());
  for (const auto& [t, c] : p)
    if (static_cast<int>(t.size()) != k) throw std::invalid_argument("chain is not homogeneous");
  return k;
}

}  // namespace

// ---- actions ----

ActionData ActionData::make(const LieAlgebraData& g, const std::vector<PolyField>& fields) {
  if (static_cast<int>(fields.size()) != g.dim()) throw std::invalid_argument("action: one field per generator required");
  int N = 0;
  for (const auto& v : fields) {
    if (v.degree() != 1) throw std::invalid_argument("action: fundamental fields must be vector fields");
    if (v.dim()) {
      if (N && v.dim() != N) throw std::invalid_argument("action: fields on different spaces");
      N = v.dim();
    }
  }
  ActionData A{g, fields, N};
  for (int i = 0; i < g.dim(); ++i)
    for (int j = i + 1; j < g.dim(); ++j) {
      PolyField lhs = A.field(g.bracket_basis(i, j));
      PolyField rhs = bracket(fields[i], fields[j]);
      if (!(lhs == rhs))
        throw std::invalid_argument("action: not a Lie algebra morphism at (" + g.space->label(i) + "," +
                                    g.space->label(j) + "): " + (lhs - rhs).str());
    }
  return A;
}

PolyField ActionData::field(const Element& x) const {
  PolyField r(N, 1);
  for (const auto& [i, c] : x.terms()) r += c * fields[i];
  return r;
}

std::vector<PolyField> ActionData::fields_of(const std::vector<int>& t) const {
  std::vector<PolyField> out;
  for (int i : t) out.push_back(fields[i]);
  return out;
}

PolyForm ActionData::contract(const Chain& p, const PolyForm& a) const {
  PolyForm r;
  for (const auto& [t, c] : p) r += c * iota_seq(fields_of(t), a);
  return r;
}

std::optional<int> ActionData::non_preserving(const PolyForm& a) const {
  for (int i = 0; i < algebra.dim(); ++i)
    if (!lie(fields[i], a).is_zero()) return i;
  return std::nullopt;
}

ActionData so_n_action(int n) {
  if (n < 2) throw std::invalid_argument("so_n_action: n >= 2 required");
  LieAlgebraData g = so_algebra(n);
  std::vector<PolyField> fields;
  for (auto [a, b] : so_pairs(n)) {
    Matrix m = so_matrix(n, a, b);
    for (auto& row : m)
      for (auto& v : row) v = -v;
    fields.push_back(PolyField::linear(m));
  }
  return ActionData::make(g, fields);
}

ActionData product_action(const ActionData& a, const ActionData& b) {
  int da = a.algebra.dim(), db = b.algebra.dim();
  std::vector<std::string> labels;
  for (int i = 0; i < da; ++i) labels.push_back(a.algebra.space->label(i));
  for (int i = 0; i < db; ++i) {
    std::string l = b.algebra.space->label(i);
    while (std::find(labels.begin(), labels.end(), l) != labels.end()) l += "'";
    labels.push_back(l);
  }
  std::vector<std::tuple<int, int, int, Q>> c;
  for (const auto& [ij, v] : a.algebra.table)
    for (const auto& [k, q] : v.terms()) c.emplace_back(ij.first, ij.second, k, q);
  for (const auto& [ij, v] : b.algebra.table)
    for (const auto& [k, q] : v.terms()) c.emplace_back(ij.first + da, ij.second + da, k + da, q);
  LieAlgebraData g = LieAlgebraData::make(labels, c);
  int N = a.N + b.N;
  std::vector<PolyField> fields;
  for (const auto& v : a.fields) fields.push_back(embed_field(v, N, 0));
  for (const auto& v : b.fields) fields.push_back(embed_field(v, N, a.N));
  return ActionData::make(g, fields);
}

ActionData action_from_fields(const std::vector<std::string>& labels, const std::vector<PolyField>& fields) {
  if (labels.size() != fields.size()) throw std::invalid_argument("action_from_fields: one label per field");
  // coordinates of a field in the (component, monomial) basis
  std::map<std::pair<IndexSet, Mono>, int> key;
  auto flatten = [&key](const PolyField& v, bool grow) {
    std::map<int, Q> out;
    for (const auto& [s, p] : v.comps())
      for (const auto& [m, c] : p.terms()) {
        auto it = key.find({s, m});
        if (it == key.end()) {
          if (!grow) return std::optional<std::map<int, Q>>{};
          it = key.emplace(std::make_pair(s, m), static_cast<int>(key.size())).first;
        }
        out[it->second] = c;
      }
    return std::optional<std::map<int, Q>>{out};
  };
  std::vector<std::map<int, Q>> cols;
  for (const auto& v : fields) cols.push_back(*flatten(v, true));
  int dim = static_cast<int>(fields.size());
  Matrix F(key.size(), std::vector<Q>(dim, Q(0)));
  for (int j = 0; j < dim; ++j)
    for (const auto& [r, c] : cols[j]) F[r][j] = c;
  if (rank(F) != dim) throw std::invalid_argument("action_from_fields: fields are linearly dependent");
  std::vector<std::tuple<int, int, int, Q>> consts;
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j) {
      auto b = flatten(bracket(fields[i], fields[j]), false);
      std::optional<std::vector<Q>> sol;
      if (b) {
        std::vector<Q> rhs(key.size(), Q(0));
        for (const auto& [r, c] : *b) rhs[r] = c;
        sol = solve_linear(F, rhs);
      }
      if (!sol) throw std::invalid_argument("action_from_fields: [" + labels[i] + "," + labels[j] + "] leaves the span");
      for (int k = 0; k < dim; ++k)
        if ((*sol)[k] != 0) consts.emplace_back(i, j, k, (*sol)[k]);
    }
  return ActionData::make(LieAlgebraData::make(labels, consts), fields);
}

// ---- comoments ----

PolyForm Comoment::eval(const std::vector<int>& seq) const {
  int k = static_cast<int>(seq.size());
  PolyForm zero(N, n - k);
  auto [sign, t] = alternating_sort(seq);
  if (sign == 0) return zero;
  auto it = values.find(t);
  if (it == values.end()) return zero;
  PolyForm r = it->second;
  if (sign < 0) r *= Q(-1);
  return r;
}

PolyForm Comoment::eval(const Chain& p, int k) const {
  PolyForm r(N, n - k);
  for (const auto& [t, c] : p) r += c * eval(t);
  return r;
}

bool Comoment::operator==(const Comoment& o) const {
  if (n != o.n) return false;
  auto covers = [](const Comoment& a, const Comoment& b) {
    for (const auto& [t, v] : a.values)
      if (!(b.eval(t) == v)) return false;
    return true;
  };
  return covers(*this, o) && covers(o, *this);
}

namespace {

PolyForm residual_at(const Comoment& f, const ActionData& A, const PolyForm& omega, const std::vector<int>& p) {
  int k = static_cast<int>(p.size());
  Chain ch;
  add_chain(ch, p, 1);
  PolyForm r(A.N, f.n + 1 - k);
  if (k >= 2) r -= f.eval(ce_boundary(A.algebra, ch), k - 1);
  if (k <= f.n) r -= d(f.eval(p));
  PolyForm t = iota_seq(A.fields_of(p), omega);
  if (varsigma(k) > 0)
    r -= t;
  else
    r += t;
  return r;
}

}  // namespace

ComomentReport verify_comoment(const Comoment& f, const ActionData& A, const PolyForm& omega) {
  if (omega.degree() != f.n + 1) throw std::invalid_argument("verify_comoment: omega degree does not match n + 1");
  ComomentReport rep;
  for (int k = 1; k <= f.n + 1; ++k)
    for (const auto& p : wedge_basis(A.algebra.dim(), k)) {
      ++rep.tuples_checked;
      PolyForm r = residual_at(f, A, omega, p);
      if (!r.is_zero()) {
        rep.ok = false;
        rep.failure = ComomentFailure{k, p, r.str()};
        return rep;
      }
    }
  return rep;
}

ComomentReport verify_comoment(const Comoment& f, const ActionData& A, const MssSpace& M) {
  if (auto i = A.non_preserving(M.omega))
    throw std::invalid_argument("verify_comoment: generator " + A.algebra.space->label(*i) + " does not preserve omega");
  return verify_comoment(f, A, M.omega);
}

PolyForm mu_aux(const Comoment& f, const ActionData& A, const PolyForm& omega, int k, const std::vector<int>& p) {
  if (k < 2 || k > f.n + 1 || static_cast<int>(p.size()) != k) throw std::invalid_argument("mu_aux: arity out of range");
  Chain ch;
  add_chain(ch, p, 1);
  PolyForm r = f.eval(ce_boundary(A.algebra, ch), k - 1);
  PolyForm t = iota_seq(A.fields_of(p), omega);
  if (varsigma(k) < 0) t *= Q(-1);
  r += t;
  if (!d(r).is_zero()) throw std::logic_error("mu_aux: form is not closed at " + tuple_text(p));
  return r;
}

Comoment comoment_from_potential(const PolyForm& alpha, const ActionData& A, const MssSpace& M) {
  if (!(d(alpha) == M.omega)) throw std::invalid_argument("comoment_from_potential: d alpha != omega");
  if (auto i = A.non_preserving(alpha))
    throw std::invalid_argument("comoment_from_potential: alpha not invariant under " + A.algebra.space->label(*i));
  Comoment f{M.n, M.N, {}};
  for (int k = 1; k <= M.n; ++k)
    for (const auto& q : wedge_basis(A.algebra.dim(), k)) {
      PolyForm v = iota_seq(A.fields_of(q), alpha);
      if (sign_pow(k - 1) * varsigma(k) < 0) v *= Q(-1);
      if (!v.is_zero()) f.values.emplace(q, v);
    }
  return f;
}

Comoment gauge_shift_comoment(const Comoment& f, const ActionData& A, const PolyForm& B) {
  if (B.degree() != f.n) throw std::invalid_argument("gauge_shift_comoment: B must have form degree n");
  if (auto i = A.non_preserving(B))
    throw std::invalid_argument("gauge_shift_comoment: B not conserved by " + A.algebra.space->label(*i));
  Comoment g = f;
  for (int k = 1; k <= f.n; ++k)
    for (const auto& p : wedge_basis(A.algebra.dim(), k)) {
      PolyForm b = iota_seq(A.fields_of(p), B);
      if (varsigma(k + 1) < 0) b *= Q(-1);
      PolyForm v = f.eval(p) + b;
      g.values.erase(p);
      if (!v.is_zero()) g.values.emplace(p, v);
    }
  return g;
}

Chain adjoint_action(const LieAlgebraData& g, int a, const Chain& p) {
  Chain out;
  for (const auto& [t, c] : p)
    for (size_t i = 0; i < t.size(); ++i) {
      Element br = g.bracket_basis(a, t[i]);
      for (const auto& [j, q] : br.terms()) {
        std::vector<int> s = t;
        s[i] = j;
        add_chain(out, s, c * q);
      }
    }
  return out;
}

EquivarianceReport equivariance(const Comoment& f, const ActionData& A) {
  EquivarianceReport rep;
  int dim = A.algebra.dim();
  for (int k = 1; k <= f.n; ++k)
    for (const auto& p : wedge_basis(dim, k)) {
      Chain ch;
      add_chain(ch, p, 1);
      for (int a = 0; a < dim; ++a) {
        ++rep.checked;
        PolyForm r = lie(A.fields[a], f.eval(p)) - f.eval(adjoint_action(A.algebra, a, ch), k);
        if (!r.is_zero()) {
          std::vector<int> t{a};
          t.insert(t.end(), p.begin(), p.end());
          rep.equivariant = false;
          rep.failure = ComomentFailure{k, t, r.str()};
          return rep;
        }
      }
    }
  return rep;
}

std::pair<LieAlgebraData, Matrix> subalgebra(const LieAlgebraData& g, const Matrix& basis, const std::string& prefix) {
  int m = static_cast<int>(basis.size()), dim = g.dim();
  if (m == 0) throw std::invalid_argument("subalgebra: empty basis");
  Matrix cols(dim, std::vector<Q>(m, Q(0)));
  for (int i = 0; i < m; ++i) {
    if (static_cast<int>(basis[i].size()) != dim) throw std::invalid_argument("subalgebra: basis vector of wrong size");
    for (int a = 0; a < dim; ++a) cols[a][i] = basis[i][a];
  }
  if (rank(cols) < m) throw std::invalid_argument("subalgebra: basis vectors are dependent");
  auto as_element = [&](const std::vector<Q>& v) {
    Element e(g.space);
    for (int a = 0; a < dim; ++a)
      if (v[a] != 0) e.add(a, v[a]);
    return e;
  };
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.push_back(prefix + std::to_string(i + 1));
  std::vector<std::tuple<int, int, int, Q>> c;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto br = coords(g.bracket(as_element(basis[i]), as_element(basis[j])), dim);
      auto x = solve_linear(cols, br);
      if (!x) throw std::invalid_argument("subalgebra: span is not closed under the bracket");
      for (int k = 0; k < m; ++k)
        if ((*x)[k] != 0) c.emplace_back(i, j, k, (*x)[k]);
    }
  return {LieAlgebraData::make(labels, c), basis};
}

namespace {

ActionData restrict_action(const ActionData& A, const LieAlgebraData& h, const Matrix& J) {
  std::vector<PolyField> fields;
  for (const auto& row : J) {
    PolyField v(A.N, 1);
    for (size_t a = 0; a < row.size(); ++a)
      if (row[a] != 0) v += row[a] * A.fields[a];
    fields.push_back(v);
  }
  return ActionData::make(h, fields);
}

std::vector<std::vector<Q>> rows_of(const Matrix& J, const std::vector<int>& t) {
  std::vector<std::vector<Q>> out;
  for (int i : t) out.push_back(J[i]);
  return out;
}

}  // namespace

InducedComoment induce_subalgebra(const Comoment& f, const ActionData& A, const PolyForm& omega, const Matrix& basis) {
  auto [h, J] = subalgebra(A.algebra, basis);
  InducedComoment out{restrict_action(A, h, J), omega, Comoment{f.n, f.N, {}}};
  for (int k = 1; k <= f.n; ++k)
    for (const auto& q : wedge_basis(h.dim(), k)) {
      PolyForm v = f.eval(wedge_of(rows_of(J, q)), k);
      if (!v.is_zero()) out.f.values.emplace(q, v);
    }
  return out;
}

InducedComoment induce_submanifold(const Comoment& f, const ActionData& A, const PolyForm& omega, const Matrix& E) {
  int N = A.N;
  if (static_cast<int>(E.size()) != N || E.empty()) throw std::invalid_argument("induce_submanifold: E must have N rows");
  int k = static_cast<int>(E[0].size());
  if (rank(E) < k) throw std::invalid_argument("induce_submanifold: columns of E are dependent");
  std::vector<Poly> subs(N);
  for (int j = 0; j < N; ++j)
    for (int i = 0; i < k; ++i)
      if (E[j][i] != 0) subs[j] += E[j][i] * Poly::var(i);
  std::vector<PolyField> fields;
  for (int g = 0; g < A.algebra.dim(); ++g) {
    // v(E y) = E c(y), solved monomial by monomial
    std::map<Mono, std::vector<Q>> rhs;
    for (int j = 0; j < N; ++j) {
      Poly comp = A.fields[g][j].substitute(subs);
      for (const auto& [m, c] : comp.terms()) {
        auto& v = rhs[m];
        v.resize(N, Q(0));
        v[j] = c;
      }
    }
    PolyField v(k, 1);
    for (const auto& [m, b] : rhs) {
      auto c = solve_linear(E, b);
      if (!c) throw std::invalid_argument("induce_submanifold: subspace not invariant under " + A.algebra.space->label(g));
      for (int i = 0; i < k; ++i)
        if ((*c)[i] != 0) v.add(IndexSet(1) << i, Poly::monomial(m, (*c)[i]));
    }
    fields.push_back(v);
  }
  InducedComoment out{ActionData::make(A.algebra, fields), pullback(E, omega), Comoment{f.n, k, {}}};
  for (const auto& [t, v] : f.values) {
    PolyForm w = pullback(E, v);
    if (!w.is_zero()) out.f.values.emplace(t, w);
  }
  return out;
}

InducedComoment induce_lie_kernel(const Comoment& f, const ActionData& A, const PolyForm& omega, const Chain& p,
                                  KernelVariant variant) {
  int k = chain_degree(p);
  if (!ce_boundary(A.algebra, p).empty()) throw std::invalid_argument("induce_lie_kernel: p is not a cycle");
  if (k > f.n) throw std::invalid_argument("induce_lie_kernel: degree of p exceeds n");
  int dim = A.algebra.dim();
  // centralizer {x : [x, p] = 0}
  auto basis_k = wedge_basis(dim, k);
  std::map<std::vector<int>, int> row_of;
  for (size_t i = 0; i < basis_k.size(); ++i) row_of[basis_k[i]] = static_cast<int>(i);
  Matrix ad(basis_k.size(), std::vector<Q>(dim, Q(0)));
  for (int a = 0; a < dim; ++a)
    for (const auto& [t, c] : adjoint_action(A.algebra, a, p)) ad[row_of[t]][a] = c;
  Matrix cent = nullspace(ad, dim);
  auto [h, J] = subalgebra(A.algebra, cent, "c");
  int n2 = f.n - k;
  InducedComoment out{restrict_action(A, h, J), A.contract(p, omega), Comoment{n2, f.N, {}}};
  for (int i = 1; i <= n2; ++i)
    for (const auto& q : wedge_basis(h.dim(), i)) {
      Chain qc = wedge_of(rows_of(J, q));
      PolyForm v(f.N, n2 - i);
      if (variant == KernelVariant::wedge) {
        Chain qp;
        for (const auto& [tq, cq] : qc)
          for (const auto& [tp, cp] : p) {
            std::vector<int> s = tp;
            s.insert(s.end(), tq.begin(), tq.end());
            add_chain(qp, s, cq * cp);
          }
        v = f.eval(qp, i + k);
        v *= Q(varsigma(i) * varsigma(i + k));
      } else {
        // f_k(p) is an invariant potential of -s(k) iota(v_p) omega
        v = out.action.contract(Chain{{q, Q(1)}}, f.eval(p, k));
        v *= Q(sign_pow(i) * varsigma(i) * varsigma(k));
      }
      if (!v.is_zero()) out.f.values.emplace(q, v);
    }
  return out;
}

std::map<std::vector<int>, PolyForm> lie_kernel_discrepancy(const Comoment& f, const ActionData& A,
                                                            const PolyForm& omega, const Chain& p) {
  auto w = induce_lie_kernel(f, A, omega, p, KernelVariant::wedge);
  auto c = induce_lie_kernel(f, A, omega, p, KernelVariant::contract);
  std::map<std::vector<int>, PolyForm> out;
  for (int i = 1; i <= w.f.n; ++i)
    for (const auto& q : wedge_basis(w.action.algebra.dim(), i)) {
      PolyForm diff = c.f.eval(q) - w.f.eval(q);
      if (!diff.is_zero()) out.emplace(q, diff);
    }
  return out;
}

std::map<std::vector<int>, Q> obstruction_cocycle(const ActionData& A, const PolyForm& omega,
                                                  const std::vector<Q>& point) {
  if (static_cast<int>(point.size()) != A.N) throw std::invalid_argument("obstruction_cocycle: point has wrong size");
  std::map<std::vector<int>, Q> c;
  for (const auto& t : wedge_basis(A.algebra.dim(), omega.degree())) {
    auto vals = iota_seq(A.fields_of(t), omega).eval(point);
    auto it = vals.find(0);
    Q v = it == vals.end() ? Q(0) : it->second;
    if (v != 0) c.emplace(t, v);
  }
  Cochain cc = [&c](const std::vector<int>& t) {
    auto it = c.find(t);
    return it == c.end() ? Q(0) : it->second;
  };
  for (const auto& t : wedge_basis(A.algebra.dim(), omega.degree() + 1))
    if (ce_coboundary(A.algebra, cc, t) != 0)
      throw std::logic_error("obstruction_cocycle: coboundary does not vanish at " + tuple_text(t));
  return c;
}

// ---- as a morphism ----

LInftyMorphism<Element, FormVec> comoment_morphism(const Comoment& f, const ActionData& A, int max_arity) {
  using M = Multi<Element, FormVec>;
  LInftyMorphism<Element, FormVec> out{Presentation::skew, {}, max_arity};
  int top = f.n - 1, N = A.N, dim = A.algebra.dim();
  out.components.emplace(1, M(1, 0, Symmetry::skew, [f, A, top, N](const std::vector<Element>& xs) {
    FormVec r;
    for (const auto& [i, c] : xs[0].terms()) {
      FormVec t = FormVec::pair(top, A.fields[i], f.eval(std::vector<int>{i}));
      t.N = N;
      r += c * t;
    }
    return r;
  }));
  for (int k = 2; k <= std::min(f.n, max_arity); ++k)
    out.components.emplace(k, M(k, 1 - k, Symmetry::skew, [f, top, dim, k](const std::vector<Element>& xs) {
      std::vector<std::vector<Q>> vecs;
      for (const auto& x : xs) vecs.push_back(coords(x, dim));
      return FormVec::form(top, f.eval(wedge_of(vecs), k));
    }));
  return out;
}

CheckReport check_comoment_morphism(const Comoment& f, const ActionData& A, const MssSpace& M) {
  auto F = comoment_morphism(f, A, M.n + 1);
  return check_morphism(F, A.algebra.as_linfty(), rogers_structure(M), M.n + 1, basis_corpus(A.algebra.space));
}

// ---- pentagon ----

namespace {

struct PentagonMaps {
  LInftyMorphism<Element, FormVec> left, right;
};

PentagonMaps pentagon_maps(const MssSpace& M, const ActionData& A, const Comoment& f, const PolyForm& B, int max_m,
                           const std::map<int, Q>& overrides) {
  if (auto i = A.non_preserving(B))
    throw std::invalid_argument("pentagon: B not conserved by " + A.algebra.space->label(*i));
  auto rep = verify_comoment(f, A, M);
  if (!rep.ok)
    throw std::invalid_argument("pentagon: f is not a comoment, k=" + std::to_string(rep.failure->k) + " at " +
                                tuple_text(rep.failure->tuple) + ": " + rep.failure->residual);
  MssSpace tilde = MssSpace::make(M.omega + d(B), M.D);
  Comoment ft = gauge_shift_comoment(f, A, B);
  auto F = comoment_morphism(f, A, max_m);
  auto Ft = comoment_morphism(ft, A, max_m);
  auto phi = phi_morphism(max_m, overrides);
  auto tau = gauge_morphism(B, max_m);
  auto left = compose_morphisms<Element, FormVec, FormVec>(tau, compose_morphisms<Element, FormVec, FormVec>(phi, F));
  auto right = compose_morphisms<Element, FormVec, FormVec>(phi, Ft);
  return {left, right};
}

FormVec defect_on(const PentagonMaps& pm, const SpacePtr& g, const std::vector<int>& t) {
  std::vector<Element> xs;
  for (int i : t) xs.push_back(Element::basis(g, i));
  int m = static_cast<int>(t.size());
  return pm.left.component(m)(xs) - pm.right.component(m)(xs);
}

}  // namespace

FormVec pentagon_defect(const MssSpace& M, const ActionData& A, const Comoment& f, const PolyForm& B,
                        const std::vector<int>& tuple, const std::map<int, Q>& phi_overrides) {
  auto pm = pentagon_maps(M, A, f, B, static_cast<int>(tuple.size()), phi_overrides);
  return defect_on(pm, A.algebra.space, tuple);
}

PentagonReport check_pentagon(const MssSpace& M, const ActionData& A, const Comoment& f, const PolyForm& B, int max_m,
                              const std::map<int, Q>& phi_overrides) {
  auto pm = pentagon_maps(M, A, f, B, max_m, phi_overrides);
  PentagonReport rep;
  for (int m = 1; m <= max_m; ++m) {
    rep.arities.push_back(m);
    long count = 0;
    for (const auto& t : wedge_basis(A.algebra.dim(), m)) {
      ++count;
      FormVec r = defect_on(pm, A.algebra.space, t);
      if (!is_zero(r)) {
        rep.ok = false;
        rep.tuples.push_back(count);
        rep.failure = ComomentFailure{m, t, to_text(r)};
        return rep;
      }
    }
    rep.tuples.push_back(count);
  }
  return rep;
}

}  // namespace linf
