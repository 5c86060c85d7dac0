#include "linf/multisymplectic.hpp"

#include <sstream>
#include <stdexcept>

namespace linf {

// ---- FormVec ----

FormVec FormVec::pair(int top, const PolyField& x, const PolyForm& alpha) {
  if (!alpha.is_zero() && alpha.degree() != top) throw std::invalid_argument("FormVec::pair: alpha has wrong degree");
  FormVec v;
  v.N = x.dim() ? x.dim() : alpha.dim();
  v.top = top;
  if (!x.is_zero()) v.X = x;
  if (!alpha.is_zero()) v.forms.emplace(top, alpha);
  return v;
}

FormVec FormVec::field(int N, int top, const PolyField& x) {
  FormVec v;
  v.N = N;
  v.top = top;
  if (!x.is_zero()) v.X = x;
  return v;
}

FormVec FormVec::form(int top, const PolyForm& f) {
  FormVec v;
  v.N = f.dim();
  v.top = top;
  if (!f.is_zero()) v.forms.emplace(f.degree(), f);
  return v;
}

PolyForm FormVec::form_part(int p) const {
  auto it = forms.find(p);
  return it == forms.end() ? PolyForm(N, p) : it->second;
}

std::vector<PolyForm> FormVec::all_forms() const {
  std::vector<PolyForm> out;
  for (const auto& [p, f] : forms) out.push_back(f);
  return out;
}

void FormVec::adopt(const FormVec& o) {
  if (is_zero(o)) return;
  if (is_zero(*this)) {
    N = o.N;
    top = o.top;
    shift = o.shift;
    return;
  }
  if (N != o.N || top != o.top || shift != o.shift)
    throw std::invalid_argument("FormVec: adding elements of different spaces");
}

FormVec& FormVec::operator+=(const FormVec& o) {
  adopt(o);
  X += o.X;
  for (const auto& [p, f] : o.forms) {
    auto [it, fresh] = forms.emplace(p, f);
    if (!fresh) {
      it->second += f;
      if (it->second.is_zero()) forms.erase(it);
    }
  }
  return *this;
}

FormVec& FormVec::operator-=(const FormVec& o) {
  FormVec t = o;
  t *= Q(-1);
  return *this += t;
}

FormVec& FormVec::operator*=(const Q& c) {
  if (c == 0) {
    X = PolyField();
    forms.clear();
    return *this;
  }
  X *= c;
  for (auto& [p, f] : forms) f *= c;
  return *this;
}

bool FormVec::operator==(const FormVec& o) const {
  if (is_zero(*this) || is_zero(o)) return is_zero(*this) && is_zero(o);
  return shift == o.shift && top == o.top && X == o.X && forms == o.forms;
}

bool is_zero(const FormVec& v) { return v.X.is_zero() && v.forms.empty(); }

int degree(const FormVec& v) {
  if (v.has_field() || v.forms.empty()) return -v.shift;
  return v.forms.begin()->first - v.top - v.shift;
}

bool is_homogeneous(const FormVec& v) {
  int count = 0;
  for (const auto& [p, f] : v.forms)
    if (p != v.top) ++count;
  bool mid = v.has_field() || v.forms.count(v.top);
  return count + (mid ? 1 : 0) <= 1;
}

std::vector<FormVec> homogeneous_parts(const FormVec& v) {
  std::vector<FormVec> out;
  for (const auto& [p, f] : v.forms) {
    if (p == v.top) continue;
    FormVec t = FormVec::form(v.top, f);
    t.N = v.N;
    t.shift = v.shift;
    out.push_back(t);
  }
  if (v.has_field() || v.forms.count(v.top)) {
    FormVec t = FormVec::pair(v.top, v.X, v.form_part(v.top));
    t.N = v.N;
    t.shift = v.shift;
    out.push_back(t);
  }
  return out;
}

FormVec regrade(const FormVec& v, int k) {
  FormVec r = v;
  r.shift += k;
  return r;
}

std::string to_text(const FormVec& v) {
  if (is_zero(v)) return "0";
  std::ostringstream os;
  bool first = true;
  if (v.has_field()) {
    os << "X=" << v.X.str();
    first = false;
  }
  for (const auto& [p, f] : v.forms) {
    if (!first) os << " + ";
    os << "[" << p << "]" << f.str();
    first = false;
  }
  if (v.shift) os << " (shift " << v.shift << ")";
  return os.str();
}

// ---- MssSpace ----

namespace {

// Matrix of the flat map on constant fields, evaluated at a point.
Matrix flat_matrix(const PolyForm& omega, int N, const std::vector<Q>& point) {
  std::vector<std::map<IndexSet, Q>> cols;
  std::map<IndexSet, int> row_of;
  for (int i = 0; i < N; ++i) {
    auto vals = iota(PolyField::coordinate(N, i), omega).eval(point);
    for (const auto& [s, c] : vals) row_of.emplace(s, 0);
    cols.push_back(vals);
  }
  int r = 0;
  for (auto& [s, idx] : row_of) idx = r++;
  Matrix m(row_of.size(), std::vector<Q>(N, Q(0)));
  for (int i = 0; i < N; ++i)
    for (const auto& [s, c] : cols[i]) m[row_of[s]][i] = c;
  return m;
}

}  // namespace

MssSpace MssSpace::make(const PolyForm& omega, int D) {
  int N = omega.dim();
  if (N < 1 || N > kMaxVars) throw std::invalid_argument("MssSpace: dimension out of range");
  if (omega.degree() < 2) throw std::invalid_argument("MssSpace: omega must have form degree at least 2");
  if (D < 0) throw std::invalid_argument("MssSpace: negative degree bound");
  if (!d(omega).is_zero()) throw std::invalid_argument("MssSpace: omega is not closed");
  std::vector<std::vector<Q>> points{std::vector<Q>(N, Q(0))};
  if (omega.poly_degree() > 0)
    for (int s = 1; s <= 10; ++s) {
      std::vector<Q> pt(N);
      for (int i = 0; i < N; ++i) pt[i] = Q((s * (i + 3) * 7) % 11 - 5, (s + i) % 4 + 1);
      points.push_back(pt);
    }
  for (const auto& pt : points)
    if (rank(flat_matrix(omega, N, pt)) < N) throw std::invalid_argument("MssSpace: omega is degenerate");
  return MssSpace{N, omega.degree() - 1, omega, D};
}

MssSpace MssSpace::volume(int N, int D) { return make(PolyForm::volume(N), D); }

MssSpace MssSpace::symplectic(int N, int D) {
  if (N % 2) throw std::invalid_argument("symplectic: odd dimension");
  PolyForm w(N, 2);
  for (int i = 0; i + 1 < N; i += 2) w += PolyForm::basic(N, {i, i + 1});
  return make(w, D);
}

std::optional<PolyField> hamiltonian_field(const PolyForm& alpha, const MssSpace& M) {
  if (!alpha.is_zero() && alpha.degree() != M.top())
    throw std::invalid_argument("hamiltonian_field: alpha must have form degree n-1");
  PolyForm rhs = -d(alpha);
  int deg = std::max(M.D, rhs.poly_degree());
  std::vector<PolyField> unknowns;
  for (int i = 0; i < M.N; ++i)
    for (Mono m : monomials_up_to(M.N, deg)) unknowns.push_back(PolyField::coordinate(M.N, i, Poly::monomial(m)));
  // one equation per (component, monomial)
  std::map<std::pair<IndexSet, Mono>, int> row_of;
  std::vector<PolyForm> images;
  for (const auto& u : unknowns) {
    images.push_back(iota(u, M.omega));
    for (const auto& [s, c] : images.back().comps())
      for (const auto& [m, q] : c.terms()) row_of.emplace(std::make_pair(s, m), 0);
  }
  for (const auto& [s, c] : rhs.comps())
    for (const auto& [m, q] : c.terms()) row_of.emplace(std::make_pair(s, m), 0);
  int r = 0;
  for (auto& [key, idx] : row_of) idx = r++;
  Matrix a(row_of.size(), std::vector<Q>(unknowns.size(), Q(0)));
  std::vector<Q> b(row_of.size(), Q(0));
  for (size_t j = 0; j < images.size(); ++j)
    for (const auto& [s, c] : images[j].comps())
      for (const auto& [m, q] : c.terms()) a[row_of[{s, m}]][j] = q;
  for (const auto& [s, c] : rhs.comps())
    for (const auto& [m, q] : c.terms()) b[row_of[{s, m}]] = q;
  auto x = solve_linear(a, b);
  if (!x) return std::nullopt;
  PolyField out(M.N, 1);
  for (size_t j = 0; j < unknowns.size(); ++j)
    if ((*x)[j] != 0) out += (*x)[j] * unknowns[j];
  return out;
}

FormVec ham_pair(const PolyForm& alpha, const MssSpace& M) {
  auto x = hamiltonian_field(alpha, M);
  if (!x) throw std::invalid_argument("ham_pair: form is not Hamiltonian within the degree bound: " + alpha.str());
  FormVec v = FormVec::pair(M.top(), *x, alpha);
  v.N = M.N;
  return v;
}

std::optional<FormVec> pair_for_field(const PolyField& x, const MssSpace& M) {
  PolyForm c = iota(x, M.omega);
  if (!d(c).is_zero()) return std::nullopt;
  FormVec v = FormVec::pair(M.top(), x, -homotopy_operator(c));
  v.N = M.N;
  return v;
}

// ---- corpora ----

namespace {

// Basic p-forms dx_I with I increasing.
std::vector<std::vector<int>> index_subsets(int N, int p) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(cur.size()) == p) {
      out.push_back(cur);
      return;
    }
    for (int i = from; i < N; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

std::vector<PolyForm> monomial_forms(int N, int p, int deg, int limit) {
  std::vector<PolyForm> out;
  for (Mono m : monomials_up_to(N, deg))
    for (const auto& idx : index_subsets(N, p)) {
      if (limit >= 0 && static_cast<int>(out.size()) >= limit) return out;
      out.push_back(PolyForm::basic(N, idx, Poly::monomial(m)));
    }
  return out;
}

}  // namespace

std::vector<FormVec> observable_corpus(const MssSpace& M, const CorpusOptions& opt) {
  std::vector<FormVec> out;
  int N = M.N, top = M.top();
  auto admit = [&](const std::optional<FormVec>& v) {
    if (!v || is_zero(*v)) return;
    if (v->form_part(top).poly_degree() > M.D) return;
    out.push_back(*v);
  };
  if (opt.constant_fields)
    for (int i = 0; i < N; ++i) admit(pair_for_field(PolyField::coordinate(N, i), M));
  if (opt.linear_fields) {
    // linear fields A x with d iota_{Ax} omega = 0
    std::vector<PolyField> units;
    std::map<std::pair<IndexSet, Mono>, int> row_of;
    std::vector<PolyForm> images;
    for (int i = 0; i < N; ++i)
      for (int j = 0; j < N; ++j) {
        units.push_back(PolyField::coordinate(N, i, Poly::var(j)));
        images.push_back(d(iota(units.back(), M.omega)));
        for (const auto& [s, c] : images.back().comps())
          for (const auto& [m, q] : c.terms()) row_of.emplace(std::make_pair(s, m), 0);
      }
    int r = 0;
    for (auto& [key, idx] : row_of) idx = r++;
    Matrix a(row_of.size(), std::vector<Q>(units.size(), Q(0)));
    for (size_t j = 0; j < images.size(); ++j)
      for (const auto& [s, c] : images[j].comps())
        for (const auto& [m, q] : c.terms()) a[row_of[{s, m}]][j] = q;
    for (const auto& v : nullspace(a, static_cast<int>(units.size()))) {
      PolyField x(N, 1);
      for (size_t j = 0; j < v.size(); ++j)
        if (v[j] != 0) x += v[j] * units[j];
      admit(pair_for_field(x, M));
    }
  }
  int closed = 0;
  if (top == 0) {
    if (opt.closed_pairs > 0) {
      out.push_back(FormVec::pair(0, PolyField(), PolyForm::function(N, Poly(1))));
      out.back().N = N;
    }
  } else {
    for (const auto& beta : monomial_forms(N, top - 1, M.D + 1, -1)) {
      if (closed >= opt.closed_pairs) break;
      if (beta.poly_degree() == 0) continue;
      PolyForm db = d(beta);
      if (db.is_zero()) continue;
      FormVec v = FormVec::pair(top, PolyField(), db);
      v.N = N;
      out.push_back(v);
      ++closed;
    }
  }
  int deg = opt.lower_poly_degree < 0 ? M.D : opt.lower_poly_degree;
  for (int p = top - 1; p >= 0; --p)
    for (const auto& f : monomial_forms(N, p, deg, opt.lower_per_degree)) out.push_back(FormVec::form(top, f));
  return out;
}

std::vector<FormVec> vinogradov_corpus(const MssSpace& M, int alphas, int lower_per_degree) {
  std::vector<FormVec> out;
  int N = M.N, top = M.top();
  for (int i = 0; i < N; ++i) out.push_back(FormVec::field(N, top, PolyField::coordinate(N, i)));
  for (int i = 0; i < N; ++i)
    out.push_back(FormVec::field(N, top, PolyField::coordinate(N, i, Poly::var((i + 1) % N))));
  // a non-Hamiltonian pair and a few bare forms
  out.push_back(FormVec::pair(top, PolyField::coordinate(N, 0, Poly::var(0) * Poly::var(N - 1)),
                              PolyForm::basic(N, index_subsets(N, top).back(), Poly::var(0))));
  for (const auto& a : monomial_forms(N, top, 1, alphas)) {
    FormVec v = FormVec::pair(top, PolyField(), a);
    v.N = N;
    out.push_back(v);
  }
  for (int p = top - 1; p >= 0; --p)
    for (const auto& f : monomial_forms(N, p, 1, lower_per_degree)) out.push_back(FormVec::form(top, f));
  return out;
}

TupleFilter skip_if_lower_at_least(const std::vector<FormVec>& corpus, int count) {
  std::vector<bool> lower(corpus.size());
  for (size_t i = 0; i < corpus.size(); ++i) lower[i] = degree(corpus[i]) != 0;
  return [lower, count](const std::vector<int>& t) {
    int c = 0;
    for (int i : t) c += lower[i] ? 1 : 0;
    return c >= count;
  };
}

// ---- brackets ----

namespace {

struct Entry {
  bool mid;  // degree zero
  PolyField X;
  PolyForm F;  // alpha, or the lower form
};

Entry entry(const FormVec& v) {
  if (v.shift != 0) throw std::invalid_argument("skew bracket applied to a shifted element");
  if (degree(v) == 0) return {true, v.X, v.form_part(v.top)};
  return {false, PolyField(), v.forms.begin()->second};
}

FormVec with_space(FormVec v, const FormVec& like) {
  if (!is_zero(v)) {
    v.N = like.N;
    v.top = like.top;
  }
  return v;
}

PolyForm half(PolyForm f) { return f *= Q(1, 2); }

PolyForm pair_minus(const Entry& a, const Entry& b) { return half(iota(a.X, b.F) - iota(b.X, a.F)); }
PolyForm pair_plus(const Entry& a, const Entry& b) { return half(iota(a.X, b.F) + iota(b.X, a.F)); }

FormMap pairing(bool plus) {
  return FormMap(2, -1, plus ? Symmetry::symmetric : Symmetry::skew, [plus](const std::vector<FormVec>& xs) {
    Entry a = entry(xs[0]), b = entry(xs[1]);
    if (a.X.is_zero() && b.X.is_zero()) return FormVec{};
    return with_space(FormVec::form(xs[0].top, plus ? pair_plus(a, b) : pair_minus(a, b)), xs[0]);
  });
}

// mu_2 on two degree-zero entries
FormVec mu2_pairs(const PolyForm& omega, const Entry& a, const Entry& b, const FormVec& like) {
  PolyForm s = d(pair_minus(a, b));
  s += iota(a.X, d(b.F));
  s -= iota(b.X, d(a.F));
  if (!omega.is_zero()) s += iota_seq({b.X, a.X}, omega);
  PolyField br = a.X.is_zero() || b.X.is_zero() ? PolyField() : bracket(a.X, b.X);
  FormVec r = FormVec::pair(like.top, br, s.is_zero() ? PolyForm() : s);
  return with_space(r, like);
}

FormVec mu2_entries(const PolyForm& omega, const Entry& a, const Entry& b, const FormVec& like) {
  if (a.mid && b.mid) return mu2_pairs(omega, a, b, like);
  if (!a.mid && !b.mid) return FormVec{};
  if (a.mid) return with_space(FormVec::form(like.top, half(lie(a.X, b.F))), like);
  return with_space(FormVec::form(like.top, -half(lie(b.X, a.F))), like);
}

// -1/6 (1/2 (i_X1 L_X2 - i_X2 L_X1) + i_[X1,X2]) f
PolyForm mu3_lower(const PolyForm& f, const PolyField& x1, const PolyField& x2) {
  PolyForm r = half(iota(x1, lie(x2, f)) - iota(x2, lie(x1, f)));
  if (!x1.is_zero() && !x2.is_zero()) r += iota(bracket(x1, x2), f);
  r *= Q(-1, 6);
  return r;
}

FormVec mu3_entries(const PolyForm& omega, const std::vector<Entry>& e, const FormVec& like) {
  int lower = 0, pos = -1;
  for (int i = 0; i < 3; ++i)
    if (!e[i].mid) {
      ++lower;
      pos = i;
    }
  if (lower >= 2) return FormVec{};
  if (lower == 1) {
    std::vector<const Entry*> rest;
    for (int i = 0; i < 3; ++i)
      if (i != pos) rest.push_back(&e[i]);
    PolyForm r = mu3_lower(e[pos].F, rest[0]->X, rest[1]->X);
    if (pos == 1) r *= Q(-1);
    return with_space(FormVec::form(like.top, r), like);
  }
  // -T_omega = -1/3 (<[e1,e2], e3>_+ + cyc)
  PolyForm acc;
  for (int c = 0; c < 3; ++c) {
    const Entry& a = e[c];
    const Entry& b = e[(c + 1) % 3];
    const Entry& z = e[(c + 2) % 3];
    FormVec ab = mu2_pairs(omega, a, b, like);
    Entry eab{true, ab.X, ab.form_part(like.top)};
    acc += pair_plus(eab, z);
  }
  acc *= Q(-1, 3);
  return with_space(FormVec::form(like.top, acc), like);
}

// Inner term c_k sum_{a<b} (-1)^{a+b+1} iota(rest) [F, Y_a, Y_b]_3, 1-based a, b.
PolyForm general_inner(int k, const PolyForm& F, const std::vector<PolyField>& ys, const FormVec& like) {
  PolyForm acc;
  if (F.is_zero()) return acc;
  Entry f0{F.degree() == like.top, PolyField(), F};
  int m = static_cast<int>(ys.size());
  for (int a = 0; a < m; ++a)
    for (int b = a + 1; b < m; ++b) {
      if (ys[a].is_zero() || ys[b].is_zero()) continue;
      std::vector<Entry> es{f0, {true, ys[a], PolyForm()}, {true, ys[b], PolyForm()}};
      FormVec t = mu3_entries(PolyForm(), es, like);
      if (is_zero(t)) continue;
      PolyForm v = t.forms.begin()->second;
      std::vector<PolyField> rest;
      for (int j = 0; j < m; ++j)
        if (j != a && j != b) rest.push_back(ys[j]);
      v = iota_seq(rest, v);
      // 1-based a+1, b+1: (-1)^{a+b+3}
      if ((a + b + 3) % 2) v *= Q(-1);
      acc += v;
    }
  acc *= vinogradov_coeff(k);
  return acc;
}

FormVec general_odd(const PolyForm& omega, int k, const std::vector<FormVec>& xs) {
  std::vector<Entry> e;
  int lower = 0;
  for (const auto& x : xs) {
    e.push_back(entry(x));
    if (!e.back().mid) ++lower;
  }
  if (lower >= 2) return FormVec{};
  const FormVec& like = xs[0];
  PolyForm acc;
  for (int i = 0; i < k; ++i) {
    std::vector<PolyField> ys;
    for (int j = 0; j < k; ++j)
      if (j != i) ys.push_back(e[j].X);
    PolyForm t = general_inner(k, e[i].F, ys, like);
    // (-1)^{i-1} counted from i = 1: the first entry enters with +, which
    // reproduces mu_3 at k = 3 and gives J_5 = 0 at k = 5
    if (i % 2 == 1) t *= Q(-1);
    acc += t;
  }
  bool fields = true;
  for (const auto& en : e) fields = fields && !en.X.is_zero();
  if (fields && !omega.is_zero()) {
    std::vector<PolyField> all;
    for (const auto& en : e) all.push_back(en.X);
    PolyForm t = iota_seq(all, omega);
    t *= Q(sign_pow((k + 1) / 2) * k) * bernoulli(k - 1);
    acc += t;
  }
  return with_space(FormVec::form(like.top, acc), like);
}

FormVec differential(const FormVec& x) {
  if (degree(x) == 0) return FormVec{};
  return with_space(FormVec::form(x.top, d(x.forms.begin()->second)), x);
}

}  // namespace

FormMap pairing_minus() { return pairing(false); }
FormMap pairing_plus() { return pairing(true); }

FormMap rogers_bracket(const MssSpace& M, int k) {
  if (k < 1 || k > M.n + 1) throw std::invalid_argument("rogers_bracket: arity out of range");
  if (k == 1) return FormMap(1, 1, Symmetry::skew, [](const std::vector<FormVec>& xs) { return differential(xs[0]); });
  PolyForm omega = M.omega;
  return FormMap(k, 2 - k, Symmetry::skew, [omega, k](const std::vector<FormVec>& xs) {
    std::vector<PolyField> fields;
    for (const auto& x : xs) {
      if (degree(x) != 0 || !x.has_field()) return FormVec{};
      fields.push_back(x.X);
    }
    PolyForm r = iota_seq(fields, omega);
    if (varsigma(k) < 0) r *= Q(-1);
    if (k == 2) return with_space(FormVec::pair(xs[0].top, bracket(fields[0], fields[1]), r), xs[0]);
    return with_space(FormVec::form(xs[0].top, r), xs[0]);
  });
}

LInftyStructure<FormVec> rogers_structure(const MssSpace& M) {
  LInftyStructure<FormVec> s{Presentation::skew, {}, M.n + 2};
  for (int k = 1; k <= M.n + 1; ++k) s.brackets.emplace(k, rogers_bracket(M, k));
  return s;
}

FormMap vinogradov_bracket(const PolyForm& omega, int k) {
  if (k < 1) throw std::invalid_argument("vinogradov_bracket: arity must be positive");
  if (k == 1) return FormMap(1, 1, Symmetry::skew, [](const std::vector<FormVec>& xs) { return differential(xs[0]); });
  if (k == 2)
    return FormMap(2, 0, Symmetry::skew, [omega](const std::vector<FormVec>& xs) {
      return mu2_entries(omega, entry(xs[0]), entry(xs[1]), xs[0]);
    });
  if (k == 3)
    return FormMap(3, -1, Symmetry::skew, [omega](const std::vector<FormVec>& xs) {
      return mu3_entries(omega, {entry(xs[0]), entry(xs[1]), entry(xs[2])}, xs[0]);
    });
  if (k % 2 == 0) return FormMap::zero(k, 2 - k, Symmetry::skew);
  return vinogradov_bracket_general(omega, k);
}

FormMap vinogradov_bracket(const MssSpace& M, int k) { return vinogradov_bracket(M.omega, k); }

FormMap vinogradov_bracket_general(const PolyForm& omega, int k) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("vinogradov_bracket_general: odd arity >= 3 required");
  return FormMap(k, 2 - k, Symmetry::skew,
                 [omega, k](const std::vector<FormVec>& xs) { return general_odd(omega, k, xs); });
}

LInftyStructure<FormVec> vinogradov_structure(const MssSpace& M) {
  LInftyStructure<FormVec> s{Presentation::skew, {}, M.n + 2};
  for (int k = 1; k <= M.n + 1; ++k)
    if (k <= 3 || k % 2 == 1) s.brackets.emplace(k, vinogradov_bracket(M, k));
  return s;
}

FormMap gauge_tau(const PolyForm& B) {
  return FormMap(1, 0, Symmetry::symmetric, [B](const std::vector<FormVec>& xs) {
    FormVec r = xs[0];
    if (r.has_field() && !B.is_zero()) {
      FormVec t = FormVec::form(r.top, iota(r.X, B));
      t.N = r.N;
      t.shift = r.shift;
      r += t;
    }
    return r;
  });
}

LInftyMorphism<FormVec> gauge_morphism(const PolyForm& B, int max_arity) {
  return LInftyMorphism<FormVec>{Presentation::skew, {{1, gauge_tau(B)}}, max_arity};
}

FormMap phi_component(int k, const std::map<int, Q>& overrides) {
  if (k < 1) throw std::invalid_argument("phi_component: arity must be positive");
  auto it = overrides.find(k);
  Q c = it != overrides.end() ? it->second : phi_coeff(k);
  if (k == 1) return scale(c, identity_map<FormVec>());
  if (c == 0) return FormMap::zero(k, 1 - k, Symmetry::skew);
  return scale(c, power(Product::skew, pairing_minus(), k - 1));
}

LInftyMorphism<FormVec> phi_morphism(int max_arity, const std::map<int, Q>& overrides) {
  LInftyMorphism<FormVec> f{Presentation::skew, {}, max_arity};
  for (int k = 1; k <= max_arity; ++k) {
    auto c = phi_component(k, overrides);
    if (!c.is_zero_map()) f.components.emplace(k, c);
  }
  return f;
}

}  // namespace linf
