#include "linf/multimap.hpp"

#include <algorithm>
#include <numeric>

namespace linf {

const char* to_string(Symmetry s) {
  switch (s) {
    case Symmetry::symmetric: return "symmetric";
    case Symmetry::skew: return "skew";
    default: return "none";
  }
}

Symmetry parse_symmetry(const std::string& s) {
  if (s == "symmetric" || s == "sym") return Symmetry::symmetric;
  if (s == "skew") return Symmetry::skew;
  if (s == "none") return Symmetry::none;
  throw std::invalid_argument("unknown symmetry '" + s + "'");
}

bool forced_zero(Symmetry s, int d) {
  bool odd = d % 2 != 0;
  return (s == Symmetry::symmetric && odd) || (s == Symmetry::skew && !odd);
}

std::vector<std::vector<int>> canonical_tuples(const GradedSpace& v, int arity, Symmetry s) {
  std::vector<std::vector<int>> out;
  int n = static_cast<int>(v.dim());
  std::vector<int> t;
  std::function<void(int)> rec = [&](int from) {
    if (static_cast<int>(t.size()) == arity) {
      out.push_back(t);
      return;
    }
    for (int i = (s == Symmetry::none ? 0 : from); i < n; ++i) {
      if (s != Symmetry::none && !t.empty() && t.back() == i && arity > 1 && forced_zero(s, v.degree(i)))
        continue;
      t.push_back(i);
      rec(i);
      t.pop_back();
    }
  };
  if (n > 0) rec(0);
  return out;
}

MultiMap MultiMap::zero(SpacePtr v, int arity, int degree, Symmetry s, SpacePtr w) {
  MultiMap m;
  m.source = v;
  m.target = w ? w : v;
  m.arity = arity;
  m.degree = degree;
  m.symmetry = arity == 1 ? Symmetry::none : s;
  return m;
}

namespace {

// sign and canonical key of a basis tuple; sign 0 when forced to vanish
std::pair<int, std::vector<int>> canonicalize(const GradedSpace& v, Symmetry s, const std::vector<int>& idx) {
  if (s == Symmetry::none) return {1, idx};
  std::vector<int> p(idx.size());
  std::iota(p.begin(), p.end(), 0);
  std::stable_sort(p.begin(), p.end(), [&](int a, int b) { return idx[a] < idx[b]; });
  std::vector<int> key(idx.size());
  std::vector<int> ds(idx.size());
  for (size_t i = 0; i < idx.size(); ++i) {
    key[i] = idx[p[i]];
    ds[i] = v.degree(idx[i]);
  }
  for (size_t i = 1; i < key.size(); ++i)
    if (key[i] == key[i - 1] && forced_zero(s, v.degree(key[i]))) return {0, key};
  int sign = koszul_sign_idx(p, ds);
  if (s == Symmetry::skew) sign *= parity_idx(p);
  return {sign, key};
}

}  // namespace

Element MultiMap::on_basis(const std::vector<int>& idx) const {
  auto [sign, key] = canonicalize(*source, symmetry, idx);
  if (sign == 0) return Element(target);
  auto it = table.find(key);
  if (it == table.end()) return Element(target);
  Element r = it->second;
  if (sign < 0) r *= Q(-1);
  return r;
}

Element MultiMap::operator()(const std::vector<Element>& xs) const {
  if (static_cast<int>(xs.size()) != arity) throw std::invalid_argument("MultiMap: wrong number of arguments");
  Element acc(target);
  std::vector<std::vector<std::pair<int, Q>>> terms;
  for (const auto& x : xs) {
    if (x.is_zero()) return acc;
    if (x.space() != source) throw std::invalid_argument("MultiMap: argument from a different space");
    terms.emplace_back(x.terms().begin(), x.terms().end());
  }
  std::vector<size_t> pos(xs.size(), 0);
  std::vector<int> idx(xs.size());
  while (true) {
    Q c = 1;
    for (size_t i = 0; i < xs.size(); ++i) {
      idx[i] = terms[i][pos[i]].first;
      c *= terms[i][pos[i]].second;
    }
    Element v = on_basis(idx);
    if (!v.is_zero()) acc += c * v;
    size_t i = 0;
    while (i < xs.size() && ++pos[i] == terms[i].size()) pos[i++] = 0;
    if (i == xs.size()) break;
  }
  return acc;
}

void MultiMap::set(const std::vector<int>& idx, const Element& value) {
  auto [sign, key] = canonicalize(*source, symmetry, idx);
  if (sign == 0) {
    if (!value.is_zero()) throw std::invalid_argument("MultiMap: nonzero value on a tuple forced to vanish");
    return;
  }
  if (!value.is_zero()) {
    if (!value.is_homogeneous()) throw std::invalid_argument("MultiMap: inhomogeneous value");
    int expect = degree;
    for (int i : idx) expect += source->degree(i);
    if (value.degree() != expect) throw std::invalid_argument("MultiMap: value of the wrong degree");
  }
  Element v = value;
  if (sign < 0) v *= Q(-1);
  if (v.is_zero())
    table.erase(key);
  else
    table[key] = v;
}

EMulti MultiMap::as_multi() const {
  Symmetry s = symmetry;
  if (table.empty()) return EMulti::zero(arity, degree, s);
  MultiMap copy = *this;
  return EMulti(arity, degree, s, [copy](const std::vector<Element>& xs) { return copy(xs); });
}

bool MultiMap::operator==(const MultiMap& o) const {
  return source == o.source && target == o.target && arity == o.arity && table == o.table &&
         (table.empty() || (degree == o.degree && symmetry == o.symmetry));
}

MultiMap tabulate(const EMulti& f, SpacePtr source, SpacePtr target) {
  MultiMap m = MultiMap::zero(source, f.arity(), f.degree(), f.symmetry(), target);
  for (const auto& t : canonical_tuples(*source, f.arity(), m.symmetry)) {
    std::vector<Element> xs;
    for (int i : t) xs.push_back(bvec(source, i));
    Element v = f(xs);
    if (!v.is_zero()) {
      if (!m.target || v.space() != m.target) m.target = v.space();
      m.table[t] = v;
    }
  }
  return m;
}

std::vector<int> first_difference(const EMulti& f, const EMulti& g, const SpacePtr& v, Symmetry s) {
  if (f.arity() != g.arity()) throw std::invalid_argument("first_difference: arity mismatch");
  for (const auto& t : canonical_tuples(*v, f.arity(), s)) {
    std::vector<Element> xs;
    for (int i : t) xs.push_back(bvec(v, i));
    if (!(f(xs) == g(xs))) return t;
  }
  return {};
}

SpacePtr random_space(std::mt19937_64& rng, int dim, int min_deg, int max_deg) {
  std::vector<std::pair<std::string, int>> b;
  std::uniform_int_distribution<int> deg(min_deg, max_deg);
  for (int i = 0; i < dim; ++i) b.emplace_back("e" + std::to_string(i + 1), deg(rng));
  return GradedSpace::make(b);
}

Q random_rational(std::mt19937_64& rng, int range) {
  std::uniform_int_distribution<int> num(-range, range), den(1, range);
  Q q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

MultiMap random_multimap(std::mt19937_64& rng, SpacePtr v, int arity, int degree, Symmetry s, double density) {
  MultiMap m = MultiMap::zero(v, arity, degree, s);
  std::uniform_real_distribution<double> coin(0, 1);
  for (const auto& t : canonical_tuples(*v, arity, m.symmetry)) {
    int target = degree;
    for (int i : t) target += v->degree(i);
    Element out(v);
    for (size_t i = 0; i < v->dim(); ++i)
      if (v->degree(i) == target && coin(rng) < density) out.add(i, random_rational(rng));
    if (!out.is_zero()) m.table[t] = out;
  }
  return m;
}

}  // namespace linf
