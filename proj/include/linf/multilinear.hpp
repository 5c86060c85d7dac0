#pragma once

// Generic homogeneous multilinear maps and their products.
//
// A Multi<In, Out> wraps an evaluation rule that is called only on lists of
// nonzero homogeneous inputs; operator() extends it multilinearly. Element
// types provide is_zero, is_homogeneous, degree, homogeneous_parts and
// regrade (found by argument dependent lookup), a zero default constructor,
// += and multiplication by a rational.

#include "linf/graded.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace linf {

enum class Symmetry { none, symmetric, skew };

const char* to_string(Symmetry s);
Symmetry parse_symmetry(const std::string& s);

enum class Product { sym, skew, gerstenhaber };

template <class In, class Out = In>
class Multi {
 public:
  using Fn = std::function<Out(const std::vector<In>&)>;

  Multi() : zero_(true) {}
  Multi(int arity, int degree, Symmetry sym, Fn fn)
      : arity_(arity), degree_(degree), sym_(sym), fn_(std::move(fn)), zero_(!fn_) {
    if (arity < 1) throw std::invalid_argument("multilinear map arity must be positive");
  }
  static Multi zero(int arity, int degree, Symmetry sym) {
    Multi m;
    m.arity_ = arity;
    m.degree_ = degree;
    m.sym_ = sym;
    return m;
  }

  int arity() const { return arity_; }
  int degree() const { return degree_; }
  // ||f|| = |f| + arity - 1
  int skew_degree() const { return degree_ + arity_ - 1; }
  Symmetry symmetry() const { return sym_; }
  bool is_symmetric() const { return arity_ == 1 || sym_ == Symmetry::symmetric; }
  bool is_skew() const { return arity_ == 1 || sym_ == Symmetry::skew; }
  bool is_zero_map() const { return zero_; }

  Out operator()(const std::vector<In>& xs) const {
    if (static_cast<int>(xs.size()) != arity_)
      throw std::invalid_argument("multilinear map called with " + std::to_string(xs.size()) +
                                  " arguments, arity " + std::to_string(arity_));
    if (zero_) return Out{};
    bool simple = true;
    for (const auto& x : xs) {
      if (is_zero(x)) return Out{};
      if (!is_homogeneous(x)) simple = false;
    }
    if (simple) return fn_(xs);
    std::vector<std::vector<In>> parts;
    parts.reserve(xs.size());
    for (const auto& x : xs) parts.push_back(homogeneous_parts(x));
    Out acc{};
    std::vector<In> args(xs.size());
    std::vector<size_t> pos(xs.size(), 0);
    while (true) {
      for (size_t i = 0; i < xs.size(); ++i) args[i] = parts[i][pos[i]];
      acc += fn_(args);
      size_t i = 0;
      while (i < xs.size() && ++pos[i] == parts[i].size()) pos[i++] = 0;
      if (i == xs.size()) break;
    }
    return acc;
  }

  // Evaluation on inputs already known to be nonzero and homogeneous.
  Out raw(const std::vector<In>& xs) const { return zero_ ? Out{} : fn_(xs); }

 private:
  int arity_ = 1;
  int degree_ = 0;
  Symmetry sym_ = Symmetry::none;
  Fn fn_;
  bool zero_ = false;
};

template <class E>
using Endo = Multi<E, E>;

namespace detail {

template <class In>
std::vector<int> degrees_of(const std::vector<In>& xs) {
  std::vector<int> d(xs.size());
  for (size_t i = 0; i < xs.size(); ++i) d[i] = degree(xs[i]);
  return d;
}

}  // namespace detail

template <class E>
Endo<E> identity_map() {
  return Endo<E>(1, 0, Symmetry::symmetric, [](const std::vector<E>& xs) { return xs[0]; });
}

template <class In, class Out>
Multi<In, Out> scale(const Q& c, const Multi<In, Out>& f) {
  if (c == 0 || f.is_zero_map()) return Multi<In, Out>::zero(f.arity(), f.degree(), f.symmetry());
  if (c == 1) return f;
  return Multi<In, Out>(f.arity(), f.degree(), f.symmetry(), [c, f](const std::vector<In>& xs) {
    Out r = f.raw(xs);
    r *= c;
    return r;
  });
}

// f + c g
template <class In, class Out>
Multi<In, Out> add(const Multi<In, Out>& f, const Multi<In, Out>& g, const Q& c = 1) {
  if (f.arity() != g.arity()) throw std::invalid_argument("sum of maps of different arity");
  if (g.is_zero_map() || c == 0) return f;
  if (f.is_zero_map()) return scale(c, g);
  if (f.degree() != g.degree()) throw std::invalid_argument("sum of maps of different degree");
  Symmetry s = f.symmetry() == g.symmetry() ? f.symmetry() : Symmetry::none;
  return Multi<In, Out>(f.arity(), f.degree(), s, [f, g, c](const std::vector<In>& xs) {
    Out r = f.raw(xs);
    Out t = g.raw(xs);
    t *= c;
    r += t;
    return r;
  });
}

template <class In, class Out>
Multi<In, Out> operator+(const Multi<In, Out>& f, const Multi<In, Out>& g) { return add(f, g); }
template <class In, class Out>
Multi<In, Out> operator-(const Multi<In, Out>& f, const Multi<In, Out>& g) { return add(f, g, Q(-1)); }

// f o_i g, i 1-based, with the sign (-1)^{|g|(|x_1|+...+|x_{i-1}|)}.
template <class In, class Mid, class Out>
Multi<In, Out> gerstenhaber_i(const Multi<Mid, Out>& f, const Multi<In, Mid>& g, int i) {
  if (i < 1 || i > f.arity()) throw std::invalid_argument("gerstenhaber_i: index out of range");
  int n = f.arity() + g.arity() - 1;
  int deg = f.degree() + g.degree();
  if (f.is_zero_map() || g.is_zero_map()) return Multi<In, Out>::zero(n, deg, Symmetry::none);
  int m = g.arity();
  return Multi<In, Out>(n, deg, Symmetry::none, [f, g, i, m](const std::vector<In>& xs) {
    long pre = 0;
    for (int j = 0; j < i - 1; ++j) pre += degree(xs[j]);
    std::vector<In> inner(xs.begin() + (i - 1), xs.begin() + (i - 1 + m));
    Mid y = g.raw(inner);
    if (is_zero(y)) return Out{};
    std::vector<Mid> outer;
    outer.reserve(f.arity());
    for (int j = 0; j < i - 1; ++j) outer.push_back(xs[j]);
    outer.push_back(std::move(y));
    for (size_t j = i - 1 + m; j < xs.size(); ++j) outer.push_back(xs[j]);
    Out r = f(outer);
    if (sign_pow(static_cast<long>(g.degree()) * pre) < 0) r *= Q(-1);
    return r;
  });
}

template <class E>
Endo<E> gerstenhaber(const Endo<E>& f, const Endo<E>& g) {
  Endo<E> acc = Endo<E>::zero(f.arity() + g.arity() - 1, f.degree() + g.degree(), Symmetry::none);
  for (int i = 1; i <= f.arity(); ++i) acc = add(acc, gerstenhaber_i(f, g, i));
  return acc;
}

namespace detail {

// Shared body of the two Nijenhuis-Richardson products.
template <class In, class Mid, class Out>
Multi<In, Out> nr_product(const Multi<Mid, Out>& f, const Multi<In, Mid>& g, bool skew) {
  int a = f.arity(), m = g.arity();
  int n = a + m - 1;
  int deg = f.degree() + g.degree();
  Symmetry s = skew ? Symmetry::skew : Symmetry::symmetric;
  if (f.is_zero_map() || g.is_zero_map()) return Multi<In, Out>::zero(n, deg, s);
  int pre = (skew && sign_pow(static_cast<long>(g.degree()) * (a - 1)) < 0) ? -1 : 1;
  std::vector<int> blocks{m};
  if (a > 1) blocks.push_back(a - 1);
  return Multi<In, Out>(n, deg, s, [f, g, m, pre, skew, blocks](const std::vector<In>& xs) {
    auto ds = degrees_of(xs);
    Out acc{};
    std::vector<In> inner(m);
    std::vector<Mid> outer(f.arity());
    for (const auto& sigma : unshuffles_idx(blocks)) {
      for (int j = 0; j < m; ++j) inner[j] = xs[sigma[j]];
      Mid y = g.raw(inner);
      if (is_zero(y)) continue;
      outer[0] = std::move(y);
      for (size_t j = m; j < sigma.size(); ++j) outer[j - m + 1] = xs[sigma[j]];
      Out r = f(outer);
      if (is_zero(r)) continue;
      int sign = pre * koszul_sign_idx(sigma, ds);
      if (skew) sign *= parity_idx(sigma);
      if (sign < 0) r *= Q(-1);
      acc += r;
    }
    return acc;
  });
}

}  // namespace detail

template <class In, class Mid, class Out>
Multi<In, Out> nr_sym(const Multi<Mid, Out>& f, const Multi<In, Mid>& g) {
  if (!f.is_symmetric() || !g.is_symmetric()) throw std::invalid_argument("nr_sym needs symmetric maps");
  return detail::nr_product(f, g, false);
}

template <class In, class Mid, class Out>
Multi<In, Out> nr_skew(const Multi<Mid, Out>& f, const Multi<In, Mid>& g) {
  if (!f.is_skew() || !g.is_skew()) throw std::invalid_argument("nr_skew needs skew maps");
  return detail::nr_product(f, g, true);
}

template <class E>
Endo<E> product(Product p, const Endo<E>& f, const Endo<E>& g) {
  switch (p) {
    case Product::sym: return nr_sym(f, g);
    case Product::skew: return nr_skew(f, g);
    default: return gerstenhaber(f, g);
  }
}

// f o g - (-1)^{deg f deg g} g o f
template <class E>
Endo<E> commutator(const Endo<E>& f, const Endo<E>& g, Product p) {
  long df = p == Product::skew ? f.skew_degree() : f.degree();
  long dg = p == Product::skew ? g.skew_degree() : g.degree();
  Q c = sign_pow(df * dg) > 0 ? Q(-1) : Q(1);
  return add(product(p, f, g), product(p, g, f), c);
}

// (f o g) o h - f o (g o h)
template <class E>
Endo<E> associator(Product p, const Endo<E>& f, const Endo<E>& g, const Endo<E>& h) {
  return product(p, product(p, f, g), h) - product(p, f, product(p, g, h));
}

// Right nested power f o (f o (... o f)), k >= 1 factors.
template <class E>
Endo<E> power(Product p, const Endo<E>& f, int k) {
  if (k < 1) throw std::invalid_argument("power: k must be positive");
  Endo<E> r = f;
  for (int i = 1; i < k; ++i) r = product(p, f, r);
  return r;
}

// Dec(f)(x_1[1],...,x_n[1]) = dec_sign(|x|) f(x_1,...,x_n)[1]
template <class In, class Out>
Multi<In, Out> dec_map(const Multi<In, Out>& f) {
  int n = f.arity();
  Symmetry s = f.symmetry() == Symmetry::skew ? Symmetry::symmetric
               : f.symmetry() == Symmetry::symmetric ? Symmetry::skew
                                                     : Symmetry::none;
  if (n == 1) s = Symmetry::symmetric;
  if (f.is_zero_map()) return Multi<In, Out>::zero(n, f.degree() + n - 1, s);
  return Multi<In, Out>(n, f.degree() + n - 1, s, [f](const std::vector<In>& xs) {
    std::vector<In> us(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) us[i] = regrade(xs[i], -1);
    int sign = dec_sign(detail::degrees_of(us));
    Out r = f.raw(us);
    if (is_zero(r)) return r;
    r = regrade(r, 1);
    if (sign < 0) r *= Q(-1);
    return r;
  });
}

template <class In, class Out>
Multi<In, Out> dec_map_inv(const Multi<In, Out>& f) {
  int n = f.arity();
  Symmetry s = f.symmetry() == Symmetry::skew ? Symmetry::symmetric
               : f.symmetry() == Symmetry::symmetric ? Symmetry::skew
                                                     : Symmetry::none;
  if (n == 1) s = Symmetry::symmetric;
  if (f.is_zero_map()) return Multi<In, Out>::zero(n, f.degree() - n + 1, s);
  return Multi<In, Out>(n, f.degree() - n + 1, s, [f](const std::vector<In>& us) {
    int sign = dec_sign(detail::degrees_of(us));
    std::vector<In> xs(us.size());
    for (size_t i = 0; i < us.size(); ++i) xs[i] = regrade(us[i], 1);
    Out r = f.raw(xs);
    if (is_zero(r)) return r;
    r = regrade(r, -1);
    if (sign < 0) r *= Q(-1);
    return r;
  });
}

namespace detail {

template <class In, class Out>
Multi<In, Out> project(const Multi<In, Out>& f, bool skew) {
  int n = f.arity();
  Symmetry s = skew ? Symmetry::skew : Symmetry::symmetric;
  if (f.is_zero_map()) return Multi<In, Out>::zero(n, f.degree(), s);
  Q norm = Q(1) / Q(factorial(n));
  return Multi<In, Out>(n, f.degree(), s, [f, norm, skew](const std::vector<In>& xs) {
    auto ds = degrees_of(xs);
    std::vector<int> idx(xs.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = static_cast<int>(i);
    Out acc{};
    std::vector<In> args(xs.size());
    do {
      for (size_t i = 0; i < idx.size(); ++i) args[i] = xs[idx[i]];
      Out r = f.raw(args);
      if (is_zero(r)) continue;
      int sign = koszul_sign_idx(idx, ds) * (skew ? parity_idx(idx) : 1);
      if (sign < 0) r *= Q(-1);
      acc += r;
    } while (std::next_permutation(idx.begin(), idx.end()));
    acc *= norm;
    return acc;
  });
}

}  // namespace detail

template <class In, class Out>
Multi<In, Out> symmetrize(const Multi<In, Out>& f) { return detail::project(f, false); }
template <class In, class Out>
Multi<In, Out> antisymmetrize(const Multi<In, Out>& f) { return detail::project(f, true); }

// Arity-indexed family of maps (an L-infinity structure or morphism).
template <class In, class Out = In>
using Family = std::map<int, Multi<In, Out>>;

template <class In, class Out>
Multi<In, Out> component(const Family<In, Out>& f, int k) {
  auto it = f.find(k);
  if (it == f.end()) return Multi<In, Out>::zero(k, 0, Symmetry::none);
  return it->second;
}

// g_l o S_{l,m}(f) for l = arity(g). Sums over sorted block sizes and ordered
// unshuffles; the skew variant uses the odd Koszul sign and the extra sign
// (-1)^{sum_{i<l} |f_{k_i}| (l - i)}.
template <class In, class Mid, class Out>
Multi<In, Out> compose_S(const Multi<Mid, Out>& g, const Family<In, Mid>& f, int m, bool skew) {
  int l = g.arity();
  Symmetry s = skew ? Symmetry::skew : Symmetry::symmetric;
  struct Term {
    std::vector<int> blocks;
    std::vector<Multi<In, Mid>> maps;
    int extra;
  };
  std::vector<Term> terms;
  int deg = 0;
  bool have_deg = false;
  if (!g.is_zero_map() && l <= m) {
    std::vector<int> ks;
    std::function<void(int, int)> rec = [&](int left, int minimum) {
      if (static_cast<int>(ks.size()) == l) {
        if (left != 0) return;
        Term t{ks, {}, 1};
        int d = g.degree();
        long e = 0;
        for (int i = 0; i < l; ++i) {
          auto it = f.find(ks[i]);
          if (it == f.end() || it->second.is_zero_map()) return;
          t.maps.push_back(it->second);
          d += it->second.degree();
          e += static_cast<long>(it->second.degree()) * (l - 1 - i);
        }
        if (skew) t.extra = sign_pow(e < 0 ? -e : e);
        if (!have_deg) deg = d, have_deg = true;
        if (d != deg) throw std::invalid_argument("compose_S: inconsistent component degrees");
        terms.push_back(std::move(t));
        return;
      }
      int slots = l - static_cast<int>(ks.size());
      for (int k = minimum; k * slots <= left; ++k) {
        ks.push_back(k);
        rec(left - k, k);
        ks.pop_back();
      }
    };
    rec(m, 1);
  }
  if (terms.empty()) return Multi<In, Out>::zero(m, g.degree(), s);
  return Multi<In, Out>(m, deg, s, [g, terms, skew](const std::vector<In>& xs) {
    auto ds = detail::degrees_of(xs);
    Out acc{};
    std::vector<Mid> ys;
    std::vector<In> block;
    for (const auto& t : terms) {
      for (const auto& sigma : ordered_unshuffles_idx(t.blocks)) {
        int sign = t.extra * koszul_sign_idx(sigma, ds);
        if (skew) sign *= parity_idx(sigma);
        ys.clear();
        long before = 0;
        size_t pos = 0;
        bool dead = false;
        for (size_t b = 0; b < t.blocks.size(); ++b) {
          block.clear();
          long here = 0;
          for (int j = 0; j < t.blocks[b]; ++j, ++pos) {
            block.push_back(xs[sigma[pos]]);
            here += ds[sigma[pos]];
          }
          Mid y = t.maps[b].raw(block);
          if (is_zero(y)) {
            dead = true;
            break;
          }
          if (sign_pow(static_cast<long>(t.maps[b].degree()) * before) < 0) sign = -sign;
          before += here;
          ys.push_back(std::move(y));
        }
        if (dead) continue;
        Out r = g(ys);
        if (is_zero(r)) continue;
        if (sign < 0) r *= Q(-1);
        acc += r;
      }
    }
    return acc;
  });
}

}  // namespace linf
