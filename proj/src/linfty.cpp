#include "linf/linfty.hpp"

#include "linf/linalg.hpp"

#include <numeric>

namespace linf {

LieAlgebraData LieAlgebraData::make(const std::vector<std::string>& labels,
                                    const std::vector<std::tuple<int, int, int, Q>>& constants) {
  int n = static_cast<int>(labels.size());
  if (n == 0) throw std::invalid_argument("Lie algebra: empty basis");
  std::vector<std::pair<std::string, int>> b;
  for (const auto& l : labels) b.emplace_back(l, 0);
  LieAlgebraData g;
  g.space = GradedSpace::make(b);
  if (static_cast<int>(g.space->dim()) != n) throw std::invalid_argument("Lie algebra: duplicate labels");
  std::map<std::pair<int, int>, Element> given;
  for (const auto& [i, j, k, v] : constants) {
    if (i < 0 || j < 0 || k < 0 || i >= n || j >= n || k >= n)
      throw std::invalid_argument("Lie algebra: structure constant index out of range");
    if (i == j && v != 0) throw std::invalid_argument("Lie algebra: [e_i, e_i] must vanish");
    given[{i, j}] += Element::basis(g.space, k, v);
  }
  for (const auto& [ij, val] : given) {
    auto [i, j] = ij;
    if (i == j) continue;
    auto other = given.find({j, i});
    if (other != given.end() && !(other->second + val).is_zero())
      throw std::invalid_argument("Lie algebra: structure constants are not antisymmetric at (" +
                                  std::to_string(i + 1) + "," + std::to_string(j + 1) + ")");
    if (i < j)
      g.table[{i, j}] = val;
    else if (other == given.end())
      g.table[{j, i}] = -val;
  }
  for (auto it = g.table.begin(); it != g.table.end();)
    it = it->second.is_zero() ? g.table.erase(it) : std::next(it);
  for (int a = 0; a < n; ++a)
    for (int c = a + 1; c < n; ++c)
      for (int e = c + 1; e < n; ++e) {
        auto x = bvec(g.space, a), y = bvec(g.space, c), z = bvec(g.space, e);
        Element j = g.bracket(x, g.bracket(y, z)) + g.bracket(y, g.bracket(z, x)) + g.bracket(z, g.bracket(x, y));
        if (!j.is_zero())
          throw std::invalid_argument("Lie algebra: Jacobi identity fails on (" + labels[a] + "," + labels[c] + "," +
                                      labels[e] + "): " + j.str());
      }
  return g;
}

Element LieAlgebraData::bracket_basis(int i, int j) const {
  if (i == j) return Element(space);
  if (i < j) {
    auto it = table.find({i, j});
    return it == table.end() ? Element(space) : it->second;
  }
  return -bracket_basis(j, i);
}

Element LieAlgebraData::bracket(const Element& x, const Element& y) const {
  Element r(space);
  for (const auto& [i, a] : x.terms())
    for (const auto& [j, b] : y.terms())
      if (i != j) r += (a * b) * bracket_basis(i, j);
  return r;
}

EMulti LieAlgebraData::bracket_map() const {
  LieAlgebraData g = *this;
  return EMulti(2, 0, Symmetry::skew, [g](const std::vector<Element>& xs) { return g.bracket(xs[0], xs[1]); });
}

LInftyStructure<Element> LieAlgebraData::as_linfty() const {
  LInftyStructure<Element> mu;
  mu.presentation = Presentation::skew;
  mu.brackets.emplace(2, bracket_map());
  return mu;
}

std::vector<std::pair<int, int>> so_pairs(int n) {
  std::vector<std::pair<int, int>> out;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) out.emplace_back(a, b);
  return out;
}

std::vector<std::vector<Q>> so_matrix(int n, int a, int b) {
  // A_ab = (-1)^{1+a+b} (E_ab - E_ba) with 1-based a, b
  Matrix m(n, std::vector<Q>(n, Q(0)));
  int s = sign_pow(1 + (a + 1) + (b + 1));
  m[a][b] = s;
  m[b][a] = -s;
  return m;
}

LieAlgebraData so_algebra(int n) {
  auto pairs = so_pairs(n);
  std::vector<std::string> labels;
  for (auto [a, b] : pairs) labels.push_back("A" + std::to_string(a + 1) + std::to_string(b + 1));
  std::vector<std::tuple<int, int, int, Q>> c;
  int m = static_cast<int>(pairs.size());
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) {
      auto x = so_matrix(n, pairs[i].first, pairs[i].second), y = so_matrix(n, pairs[j].first, pairs[j].second);
      auto xy = multiply(x, y), yx = multiply(y, x);
      // read off the coefficient of A_ab from the (a, b) entry
      for (int k = 0; k < m; ++k) {
        auto [a, b] = pairs[k];
        Q v = (xy[a][b] - yx[a][b]) * Q(sign_pow(1 + (a + 1) + (b + 1)));
        if (v != 0) c.emplace_back(i, j, k, v);
      }
    }
  return LieAlgebraData::make(labels, c);
}

std::pair<int, std::vector<int>> alternating_sort(const std::vector<int>& seq) {
  std::vector<int> s = seq;
  int sign = 1;
  for (size_t i = 1; i < s.size(); ++i)
    for (size_t j = i; j > 0 && s[j - 1] >= s[j]; --j) {
      if (s[j - 1] == s[j]) return {0, {}};
      std::swap(s[j - 1], s[j]);
      sign = -sign;
    }
  return {sign, s};
}

void add_chain(Chain& c, const std::vector<int>& t, const Q& v) {
  if (v == 0) return;
  auto [sign, sorted] = alternating_sort(t);
  if (sign == 0) return;
  Q& slot = c[sorted];
  slot += sign * v;
  if (slot == 0) c.erase(sorted);
}

Chain ce_boundary(const LieAlgebraData& g, const Chain& p) {
  Chain out;
  for (const auto& [t, v] : p) {
    int k = static_cast<int>(t.size());
    for (int i = 0; i < k; ++i)
      for (int j = i + 1; j < k; ++j) {
        Element br = g.bracket_basis(t[i], t[j]);
        if (br.is_zero()) continue;
        // positions are 1-based in the sign
        int sign = ((i + j) % 2 == 0) ? 1 : -1;
        std::vector<int> rest;
        for (int l = 0; l < k; ++l)
          if (l != i && l != j) rest.push_back(t[l]);
        for (const auto& [b, c] : br.terms()) {
          std::vector<int> w{b};
          w.insert(w.end(), rest.begin(), rest.end());
          add_chain(out, w, v * c * sign);
        }
      }
  }
  return out;
}

std::vector<std::vector<int>> wedge_basis(int dim, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> t;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(t.size()) == k) {
      out.push_back(t);
      return;
    }
    for (int i = from; i < dim; ++i) {
      t.push_back(i);
      rec(i + 1);
      t.pop_back();
    }
  };
  rec(0);
  return out;
}

Q ce_coboundary(const LieAlgebraData& g, const Cochain& c, const std::vector<int>& p) {
  Chain ch;
  add_chain(ch, p, 1);
  Q r = 0;
  for (const auto& [t, v] : ce_boundary(g, ch)) r += v * c(t);
  return r;
}

// Dgla ------------------------------------------------------------------------

namespace {

std::string tuple_text(const SpacePtr& v, const std::vector<int>& t) {
  std::string s = "(";
  for (size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + v->label(t[i]);
  return s + ")";
}

}  // namespace

void Dgla::validate() const {
  if (!space) throw std::invalid_argument("DGLA: missing space");
  if (d.arity() != 1 || d.degree() != 1) throw std::invalid_argument("DGLA: differential must be unary of degree 1");
  if (bracket.arity() != 2 || bracket.degree() != 0)
    throw std::invalid_argument("DGLA: bracket must be binary of degree 0");
  int n = static_cast<int>(space->dim());
  auto deg = [&](int i) { return space->degree(i); };
  for (int i = 0; i < n; ++i) {
    Element x = bvec(space, i);
    if (!is_zero(d({d({x})}))) throw std::invalid_argument("DGLA: d^2 != 0 on " + space->label(i));
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Element x = bvec(space, i), y = bvec(space, j);
      Element xy = bracket({x, y}), yx = bracket({y, x});
      Q s = sign_pow(static_cast<long>(deg(i)) * deg(j));
      if (!(xy + s * yx).is_zero()) throw std::invalid_argument("DGLA: bracket not graded antisymmetric on " + tuple_text(space, {i, j}));
      Element leib = d({xy}) - bracket({d({x}), y}) - Q(sign_pow(deg(i))) * bracket({x, d({y})});
      if (!leib.is_zero()) throw std::invalid_argument("DGLA: Leibniz rule fails on " + tuple_text(space, {i, j}));
    }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        Element x = bvec(space, i), y = bvec(space, j), z = bvec(space, k);
        // [x,[y,z]] = [[x,y],z] + (-1)^{|x||y|}[y,[x,z]]
        Element jac = bracket({x, bracket({y, z})}) - bracket({bracket({x, y}), z}) -
                      Q(sign_pow(static_cast<long>(deg(i)) * deg(j))) * bracket({y, bracket({x, z})});
        if (!jac.is_zero()) throw std::invalid_argument("DGLA: Jacobi identity fails on " + tuple_text(space, {i, j, k}));
      }
}

SpacePtr negative_part(const SpacePtr& v) {
  std::vector<std::pair<std::string, int>> b;
  for (size_t i = 0; i < v->dim(); ++i)
    if (v->degree(static_cast<int>(i)) < 0) b.emplace_back(v->label(static_cast<int>(i)), v->degree(static_cast<int>(i)));
  if (b.empty()) throw std::invalid_argument("negative part is zero");
  return GradedSpace::make(b);
}

namespace {

// Inclusion and projection between a space and a subspace sharing labels.
Element transfer(const Element& x, const SpacePtr& to) {
  Element r(to);
  for (const auto& [i, c] : x.terms()) {
    int j = to->index(x.space()->label(i));
    if (j >= 0) r.add(j, c);
  }
  return r;
}

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

}  // namespace

LInftyStructure<Element> getzler_truncate(const Dgla& L, int max_arity) {
  L.validate();
  SpacePtr neg = negative_part(L.space);
  LInftyStructure<Element> out;
  out.presentation = Presentation::sym;
  out.max_arity = max_arity;
  auto d = L.d;
  auto br = L.bracket;
  SpacePtr full = L.space;
  out.brackets.emplace(1, EMulti(1, 1, Symmetry::symmetric, [d, full, neg](const std::vector<Element>& xs) {
                         if (xs[0].degree() >= -1) return Element(neg);
                         return transfer(d({transfer(xs[0], full)}), neg);
                       }));
  for (int k = 2; k <= max_arity; ++k) {
    Q b = getzler_coeff(k - 1);
    if (b == 0) continue;
    auto perms = std::make_shared<std::vector<std::vector<int>>>(all_permutations(k));
    out.brackets.emplace(k, EMulti(k, 1, Symmetry::symmetric, [d, br, full, neg, b, perms](const std::vector<Element>& xs) {
                           std::vector<int> ds;
                           std::vector<Element> ys;
                           for (const auto& x : xs) {
                             ds.push_back(x.degree());
                             ys.push_back(transfer(x, full));
                           }
                           Element acc(full);
                           for (const auto& s : *perms) {
                             if (ds[s[0]] != -1) continue;  // D = d o pi_{-1}
                             Element cur = d({ys[s[0]]});
                             for (size_t i = 1; i < s.size() && !cur.is_zero(); ++i) cur = br({cur, ys[s[i]]});
                             if (cur.is_zero()) continue;
                             acc += Q(koszul_sign_idx(s, ds)) * cur;
                           }
                           return transfer(b * acc, neg);
                         }));
  }
  return out;
}

std::pair<SpacePtr, LInftyStructure<Element>> direct_sum(const SpacePtr& v, const LInftyStructure<Element>& a,
                                                         const SpacePtr& w, const LInftyStructure<Element>& b) {
  if (a.presentation != b.presentation) throw std::invalid_argument("direct_sum: presentation mismatch");
  std::vector<std::pair<std::string, int>> basis;
  for (size_t i = 0; i < v->dim(); ++i) basis.emplace_back(v->label(static_cast<int>(i)), v->degree(static_cast<int>(i)));
  for (size_t i = 0; i < w->dim(); ++i) {
    std::string l = w->label(static_cast<int>(i));
    while (v->index(l) >= 0) l += "'";
    basis.emplace_back(l, w->degree(static_cast<int>(i)));
  }
  SpacePtr s = GradedSpace::make(basis);
  int nv = static_cast<int>(v->dim());
  auto proj = [s, v, w, nv](const Element& x, bool first) {
    Element r(first ? v : w);
    for (const auto& [i, c] : x.terms())
      if (first ? i < nv : i >= nv) r.add(first ? i : i - nv, c);
    return r;
  };
  auto incl = [s, nv](const Element& x, bool first) {
    Element r(s);
    for (const auto& [i, c] : x.terms()) r.add(first ? i : i + nv, c);
    return r;
  };
  LInftyStructure<Element> out;
  out.presentation = a.presentation;
  out.max_arity = std::max(a.max_arity, b.max_arity);
  std::set<int> arities;
  for (const auto& [k, f] : a.brackets) arities.insert(k);
  for (const auto& [k, f] : b.brackets) arities.insert(k);
  for (int k : arities) {
    auto fa = a.bracket(k), fb = b.bracket(k);
    if (fa.is_zero_map() && fb.is_zero_map()) continue;
    int deg = fa.is_zero_map() ? fb.degree() : fa.degree();
    out.brackets.emplace(k, EMulti(k, deg, fa.is_zero_map() ? fb.symmetry() : fa.symmetry(),
                                   [fa, fb, proj, incl, s](const std::vector<Element>& xs) {
                                     Element r(s);
                                     for (bool first : {true, false}) {
                                       std::vector<Element> ys;
                                       for (const auto& x : xs) ys.push_back(proj(x, first));
                                       r += incl((first ? fa : fb)(ys), first);
                                     }
                                     return r;
                                   }));
  }
  return {s, out};
}

std::optional<LInftyMorphism<Element>> invert_morphism(const LInftyMorphism<Element>& f, const SpacePtr& v) {
  auto f1 = f.component(1);
  int n = static_cast<int>(v->dim());
  Matrix m(n, std::vector<Q>(n, Q(0)));
  if (!f1.is_zero_map())
    for (int j = 0; j < n; ++j) {
      Element y = f1({bvec(v, j)});
      for (const auto& [i, c] : y.terms()) m[i][j] = c;
    }
  auto inv = inverse(m);
  if (!inv) return std::nullopt;
  Matrix mi = *inv;
  EMulti g1(1, 0, Symmetry::symmetric, [mi, v, n](const std::vector<Element>& xs) {
    Element r(v);
    for (const auto& [j, c] : xs[0].terms())
      for (int i = 0; i < n; ++i)
        if (mi[i][j] != 0) r.add(i, c * mi[i][j]);
    return r;
  });
  return invert_morphism(f, g1);
}

std::vector<Element> basis_corpus(const SpacePtr& v) {
  std::vector<Element> out;
  for (size_t i = 0; i < v->dim(); ++i) out.push_back(bvec(v, static_cast<int>(i)));
  return out;
}

}  // namespace linf
