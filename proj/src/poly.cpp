#include "linf/poly.hpp"

#include <functional>
#include <sstream>
#include <stdexcept>

namespace linf {

int mono_degree(Mono m) {
  int s = 0;
  for (int i = 0; i < kMaxVars; ++i) s += mono_exp(m, i);
  return s;
}

Mono make_mono(const std::vector<int>& exps) {
  if (exps.size() > static_cast<size_t>(kMaxVars)) throw std::invalid_argument("too many variables");
  Mono m = 0;
  for (size_t i = 0; i < exps.size(); ++i) {
    if (exps[i] < 0 || exps[i] > 255) throw std::invalid_argument("exponent out of range");
    m |= Mono(exps[i]) << (8 * i);
  }
  return m;
}

Poly::Poly(const Q& c) {
  if (c != 0) terms_[0] = c;
}

Poly Poly::var(int i) { return monomial(mono_var(i)); }

Poly Poly::monomial(Mono m, const Q& c) {
  Poly p;
  p.add(m, c);
  return p;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, mono_degree(m));
  return d;
}

Q Poly::coeff(Mono m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Q(0) : it->second;
}

void Poly::add(Mono m, const Q& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

Poly& Poly::operator*=(const Q& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [m1, c1] : a.terms_)
    for (const auto& [m2, c2] : b.terms_) r.add(m1 + m2, c1 * c2);
  return r;
}

Poly Poly::derivative(int i) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int e = mono_exp(m, i);
    if (e > 0) r.add(m - mono_var(i), c * e);
  }
  return r;
}

Q Poly::eval(const std::vector<Q>& point) const {
  Q s = 0;
  for (const auto& [m, c] : terms_) {
    Q t = c;
    for (int i = 0; i < kMaxVars; ++i)
      for (int e = mono_exp(m, i); e > 0; --e) t *= point.at(i);
    s += t;
  }
  return s;
}

Poly Poly::substitute(const std::vector<Poly>& subs) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    Poly t(c);
    for (int i = 0; i < kMaxVars; ++i)
      for (int e = mono_exp(m, i); e > 0; --e) t = t * subs.at(i);
    r += t;
  }
  return r;
}

std::string Poly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c);
    for (int i = 0; i < kMaxVars; ++i) {
      int e = mono_exp(m, i);
      if (e == 1) os << "*x" << i;
      if (e > 1) os << "*x" << i << "^" << e;
    }
  }
  return os.str();
}

int popcount(IndexSet s) { return __builtin_popcount(s); }

std::vector<int> indices_of(IndexSet s) {
  std::vector<int> out;
  for (int i = 0; s; ++i, s >>= 1)
    if (s & 1) out.push_back(i);
  return out;
}

IndexSet make_index_set(const std::vector<int>& idx) {
  IndexSet s = 0;
  for (int i : idx) {
    if (i < 0 || i >= kMaxVars) throw std::invalid_argument("index out of range");
    if (s & (IndexSet(1) << i)) throw std::invalid_argument("repeated index");
    s |= IndexSet(1) << i;
  }
  return s;
}

int merge_sign(IndexSet a, IndexSet b) {
  if (a & b) return 0;
  int inv = 0;
  for (int i : indices_of(a)) inv += popcount(b & ((IndexSet(1) << i) - 1));
  return inv % 2 ? -1 : 1;
}

namespace {

// iota_{d/dx_i} dx_I as (sign, I \ i); sign 0 if i not in I
std::pair<int, IndexSet> contract_basis(int i, IndexSet s) {
  IndexSet bit = IndexSet(1) << i;
  if (!(s & bit)) return {0, 0};
  int below = popcount(s & (bit - 1));
  return {below % 2 ? -1 : 1, s & ~bit};
}

void add_comp(std::map<IndexSet, Poly>& comps, IndexSet s, const Poly& c) {
  if (c.is_zero()) return;
  auto [it, fresh] = comps.emplace(s, c);
  if (!fresh) {
    it->second += c;
    if (it->second.is_zero()) comps.erase(it);
  }
}

}  // namespace

PolyForm PolyForm::function(int n, const Poly& f) {
  PolyForm a(n, 0);
  a.add(0, f);
  return a;
}

PolyForm PolyForm::basic(int n, const std::vector<int>& idx, const Poly& c) {
  // dx_{i1} ^ ... ^ dx_{ik} in the given order
  PolyForm a = function(n, c);
  for (int i : idx) {
    PolyForm b(n, 1);
    b.add(IndexSet(1) << i, Poly(1));
    a = wedge(a, b);
  }
  a.p_ = static_cast<int>(idx.size());
  return a;
}

PolyForm PolyForm::volume(int n) {
  std::vector<int> idx(n);
  for (int i = 0; i < n; ++i) idx[i] = i;
  return basic(n, idx);
}

Poly PolyForm::comp(IndexSet s) const {
  auto it = comps_.find(s);
  return it == comps_.end() ? Poly() : it->second;
}

void PolyForm::add(IndexSet s, const Poly& c) {
  if (popcount(s) != p_) throw std::invalid_argument("PolyForm: component of wrong degree");
  if (n_ > 0 && s >> n_) throw std::invalid_argument("PolyForm: index beyond dimension");
  add_comp(comps_, s, c);
}

void PolyForm::adopt(const PolyForm& o) {
  if (o.comps_.empty()) return;
  if (comps_.empty()) {
    n_ = o.n_;
    p_ = o.p_;
    return;
  }
  if (n_ != o.n_ || p_ != o.p_) throw std::invalid_argument("PolyForm: adding forms of different type");
}

PolyForm& PolyForm::operator+=(const PolyForm& o) {
  adopt(o);
  for (const auto& [s, c] : o.comps_) add_comp(comps_, s, c);
  return *this;
}

PolyForm& PolyForm::operator-=(const PolyForm& o) {
  adopt(o);
  for (const auto& [s, c] : o.comps_) add_comp(comps_, s, -c);
  return *this;
}

PolyForm& PolyForm::operator*=(const Q& c) {
  if (c == 0) {
    comps_.clear();
    return *this;
  }
  for (auto& [s, v] : comps_) v *= c;
  return *this;
}

PolyForm operator*(const Poly& f, const PolyForm& a) {
  PolyForm r(a.n_, a.p_);
  for (const auto& [s, c] : a.comps_) add_comp(r.comps_, s, f * c);
  return r;
}

bool PolyForm::operator==(const PolyForm& o) const {
  if (comps_.empty() || o.comps_.empty()) return comps_.empty() && o.comps_.empty();
  return n_ == o.n_ && p_ == o.p_ && comps_ == o.comps_;
}

int PolyForm::poly_degree() const {
  int d = -1;
  for (const auto& [s, c] : comps_) d = std::max(d, c.degree());
  return d;
}

std::map<IndexSet, Q> PolyForm::eval(const std::vector<Q>& point) const {
  std::map<IndexSet, Q> out;
  for (const auto& [s, c] : comps_) {
    Q v = c.eval(point);
    if (v != 0) out[s] = v;
  }
  return out;
}

std::string PolyForm::str() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : comps_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i : indices_of(s)) os << " dx" << i;
  }
  return os.str();
}

PolyField PolyField::coordinate(int n, int i, const Poly& c) {
  PolyField x(n, 1);
  x.add(IndexSet(1) << i, c);
  return x;
}

PolyField PolyField::euler(int n) {
  PolyField x(n, 1);
  for (int i = 0; i < n; ++i) x.add(IndexSet(1) << i, Poly::var(i));
  return x;
}

PolyField PolyField::linear(const Matrix& a) {
  int n = static_cast<int>(a.size());
  PolyField x(n, 1);
  for (int i = 0; i < n; ++i) {
    Poly c;
    for (int j = 0; j < n; ++j) c += a[i][j] * Poly::var(j);
    x.add(IndexSet(1) << i, c);
  }
  return x;
}

Poly PolyField::comp(IndexSet s) const {
  auto it = comps_.find(s);
  return it == comps_.end() ? Poly() : it->second;
}

void PolyField::add(IndexSet s, const Poly& c) {
  if (popcount(s) != q_) throw std::invalid_argument("PolyField: component of wrong degree");
  if (n_ > 0 && s >> n_) throw std::invalid_argument("PolyField: index beyond dimension");
  add_comp(comps_, s, c);
}

void PolyField::adopt(const PolyField& o) {
  if (o.comps_.empty()) return;
  if (comps_.empty()) {
    n_ = o.n_;
    q_ = o.q_;
    return;
  }
  if (n_ != o.n_ || q_ != o.q_) throw std::invalid_argument("PolyField: adding fields of different type");
}

PolyField& PolyField::operator+=(const PolyField& o) {
  adopt(o);
  for (const auto& [s, c] : o.comps_) add_comp(comps_, s, c);
  return *this;
}

PolyField& PolyField::operator-=(const PolyField& o) {
  adopt(o);
  for (const auto& [s, c] : o.comps_) add_comp(comps_, s, -c);
  return *this;
}

PolyField& PolyField::operator*=(const Q& c) {
  if (c == 0) {
    comps_.clear();
    return *this;
  }
  for (auto& [s, v] : comps_) v *= c;
  return *this;
}

PolyField operator*(const Poly& f, const PolyField& a) {
  PolyField r(a.n_, a.q_);
  for (const auto& [s, c] : a.comps_) add_comp(r.comps_, s, f * c);
  return r;
}

bool PolyField::operator==(const PolyField& o) const {
  if (comps_.empty() || o.comps_.empty()) return comps_.empty() && o.comps_.empty();
  return n_ == o.n_ && q_ == o.q_ && comps_ == o.comps_;
}

int PolyField::poly_degree() const {
  int d = -1;
  for (const auto& [s, c] : comps_) d = std::max(d, c.degree());
  return d;
}

std::string PolyField::str() const {
  if (comps_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [s, c] : comps_) {
    if (!first) os << " + ";
    first = false;
    os << "(" << c.str() << ")";
    for (int i : indices_of(s)) os << " d/dx" << i;
  }
  return os.str();
}

namespace {

int common_dim(int a, int b) {
  if (a && b && a != b) throw std::invalid_argument("dimension mismatch");
  return a ? a : b;
}

}  // namespace

PolyForm wedge(const PolyForm& a, const PolyForm& b) {
  int n = common_dim(a.dim(), b.dim());
  PolyForm r(n, a.degree() + b.degree());
  for (const auto& [s1, c1] : a.comps())
    for (const auto& [s2, c2] : b.comps()) {
      int sg = merge_sign(s1, s2);
      if (sg == 0) continue;
      Poly c = c1 * c2;
      if (sg < 0) c *= -1;
      r.add(s1 | s2, c);
    }
  return r;
}

PolyField wedge(const PolyField& a, const PolyField& b) {
  int n = common_dim(a.dim(), b.dim());
  PolyField r(n, a.degree() + b.degree());
  for (const auto& [s1, c1] : a.comps())
    for (const auto& [s2, c2] : b.comps()) {
      int sg = merge_sign(s1, s2);
      if (sg == 0) continue;
      Poly c = c1 * c2;
      if (sg < 0) c *= -1;
      r.add(s1 | s2, c);
    }
  return r;
}

PolyForm d(const PolyForm& a) {
  PolyForm r(a.dim(), a.degree() + 1);
  for (const auto& [s, c] : a.comps())
    for (int i = 0; i < a.dim(); ++i) {
      IndexSet bit = IndexSet(1) << i;
      if (s & bit) continue;
      Poly di = c.derivative(i);
      if (di.is_zero()) continue;
      if (merge_sign(bit, s) < 0) di *= -1;
      r.add(s | bit, di);
    }
  return r;
}

namespace {

PolyForm contract_coordinate(int i, const Poly& f, const PolyForm& a) {
  PolyForm r(a.dim(), a.degree() - 1);
  if (f.is_zero()) return r;
  for (const auto& [s, c] : a.comps()) {
    auto [sg, rest] = contract_basis(i, s);
    if (sg == 0) continue;
    Poly t = f * c;
    if (sg < 0) t *= -1;
    r.add(rest, t);
  }
  return r;
}

}  // namespace

PolyForm iota(const PolyField& p, const PolyForm& a) {
  int n = common_dim(p.dim(), a.dim());
  PolyForm r(n, a.degree() - p.degree());
  if (p.degree() > a.degree()) return r;
  for (const auto& [s, f] : p.comps()) {
    PolyForm t = a;
    for (int i : indices_of(s)) t = contract_coordinate(i, Poly(1), t);
    r += f * t;
  }
  return r;
}

PolyForm iota_seq(const std::vector<PolyField>& xs, const PolyForm& a) {
  PolyForm t = a;
  for (const auto& x : xs) {
    if (t.is_zero()) return PolyForm(a.dim(), a.degree() - static_cast<int>(xs.size()));
    t = iota(x, t);
  }
  return t;
}

PolyForm lie(const PolyField& p, const PolyForm& a) {
  PolyForm r = d(iota(p, a));
  PolyForm t = iota(p, d(a));
  if (p.degree() % 2 == 0)
    r -= t;
  else
    r += t;
  return r;
}

Poly directional(const PolyField& x, const Poly& f) {
  if (x.degree() != 1) throw std::invalid_argument("directional: vector field required");
  Poly r;
  for (const auto& [s, c] : x.comps()) r += c * f.derivative(indices_of(s)[0]);
  return r;
}

PolyField bracket(const PolyField& x, const PolyField& y) {
  if (x.degree() != 1 || y.degree() != 1) throw std::invalid_argument("bracket: vector fields required");
  int n = common_dim(x.dim(), y.dim());
  PolyField r(n, 1);
  for (int i = 0; i < n; ++i) {
    Poly c = directional(x, y[i]) - directional(y, x[i]);
    r.add(IndexSet(1) << i, c);
  }
  return r;
}

namespace {

// Component f d_I as the decomposable (f d_{i1}) ^ d_{i2} ^ ...
std::vector<PolyField> decompose(int n, IndexSet s, const Poly& f) {
  std::vector<PolyField> out;
  bool first = true;
  for (int i : indices_of(s)) {
    out.push_back(PolyField::coordinate(n, i, first ? f : Poly(1)));
    first = false;
  }
  return out;
}

PolyField wedge_all(int n, const std::vector<PolyField>& xs) {
  PolyField r(n, 0);
  r.add(0, Poly(1));
  for (const auto& x : xs) r = wedge(r, x);
  return r;
}

}  // namespace

PolyField schouten(const PolyField& a, const PolyField& b) {
  if (a.degree() > 2 || b.degree() > 2 || a.degree() < 1 || b.degree() < 1)
    throw std::invalid_argument("schouten: fields of degree 1 or 2 required");
  int n = common_dim(a.dim(), b.dim());
  PolyField r(n, a.degree() + b.degree() - 1);
  for (const auto& [s1, f1] : a.comps())
    for (const auto& [s2, f2] : b.comps()) {
      auto xs = decompose(n, s1, f1);
      auto ys = decompose(n, s2, f2);
      for (size_t i = 0; i < xs.size(); ++i)
        for (size_t j = 0; j < ys.size(); ++j) {
          std::vector<PolyField> rest{bracket(xs[i], ys[j])};
          for (size_t k = 0; k < xs.size(); ++k)
            if (k != i) rest.push_back(xs[k]);
          for (size_t k = 0; k < ys.size(); ++k)
            if (k != j) rest.push_back(ys[k]);
          PolyField t = wedge_all(n, rest);
          if ((i + j) % 2) t *= -1;
          r += t;
        }
    }
  return r;
}

std::vector<std::pair<int, FieldList>> boundary_terms(const FieldList& xs) {
  std::vector<std::pair<int, FieldList>> out;
  int m = static_cast<int>(xs.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      FieldList t{bracket(xs[i], xs[j])};
      for (int k = 0; k < m; ++k)
        if (k != i && k != j) t.push_back(xs[k]);
      // 1-based exponent i+j
      out.emplace_back(sign_pow((i + 1) + (j + 1)), std::move(t));
    }
  return out;
}

PolyForm multicartan_defect(const FieldList& xs, const PolyForm& a) {
  int m = static_cast<int>(xs.size());
  PolyForm lhs = d(iota_seq(xs, a));
  if (m % 2) lhs *= -1;
  PolyForm rhs = iota_seq(xs, d(a));
  for (const auto& [sg, t] : boundary_terms(xs)) {
    PolyForm c = iota_seq(t, a);
    if (sg < 0) c *= -1;
    rhs += c;
  }
  for (int k = 0; k < m; ++k) {
    FieldList rest;
    for (int j = 0; j < m; ++j)
      if (j != k) rest.push_back(xs[j]);
    PolyForm c = iota_seq(rest, lie(xs[k], a));
    if ((k + 1) % 2) c *= -1;
    rhs += c;
  }
  return lhs - rhs;
}

PolyForm homotopy_operator(const PolyForm& a) {
  int n = a.dim(), p = a.degree();
  PolyForm r(n, p - 1);
  if (p < 1) return r;
  for (const auto& [s, c] : a.comps())
    for (const auto& [m, coef] : c.terms()) {
      Q w = coef / Q(mono_degree(m) + p);
      for (int i : indices_of(s)) {
        auto [sg, rest] = contract_basis(i, s);
        r.add(rest, Poly::monomial(m + mono_var(i), sg * w));
      }
    }
  return r;
}

PolyForm poincare_primitive(const PolyForm& a) {
  if (a.is_zero()) return PolyForm(a.dim(), a.degree() - 1);
  if (a.degree() < 1) throw std::invalid_argument("poincare_primitive: positive degree required");
  if (!d(a).is_zero()) throw std::invalid_argument("poincare_primitive: form is not closed");
  return homotopy_operator(a);
}

PolyForm pullback(const Matrix& m, const PolyForm& a) {
  int np = static_cast<int>(m.size());
  if (np == 0) throw std::invalid_argument("pullback: empty matrix");
  int n = static_cast<int>(m[0].size());
  for (const auto& row : m)
    if (static_cast<int>(row.size()) != n) throw std::invalid_argument("pullback: ragged matrix");
  if (a.dim() && a.dim() != np) throw std::invalid_argument("pullback: form dimension does not match matrix rows");
  std::vector<Poly> subs(np);
  std::vector<PolyForm> dy(np);
  for (int j = 0; j < np; ++j) {
    dy[j] = PolyForm(n, 1);
    for (int k = 0; k < n; ++k) {
      subs[j] += m[j][k] * Poly::var(k);
      dy[j].add(IndexSet(1) << k, Poly(m[j][k]));
    }
  }
  PolyForm r(n, a.degree());
  for (const auto& [s, c] : a.comps()) {
    PolyForm t = PolyForm::function(n, c.substitute(subs));
    for (int j : indices_of(s)) t = wedge(t, dy[j]);
    r += t;
  }
  return r;
}

std::vector<Mono> monomials_up_to(int n, int deg) {
  std::vector<Mono> out;
  std::vector<int> e(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n) {
      out.push_back(make_mono(e));
      return;
    }
    for (int k = 0; k <= left; ++k) {
      e[i] = k;
      rec(i + 1, left - k);
    }
    e[i] = 0;
  };
  rec(0, deg);
  return out;
}

}  // namespace linf
