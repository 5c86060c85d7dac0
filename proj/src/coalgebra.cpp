#include "linf/coalgebra.hpp"

#include <numeric>

namespace linf {

std::pair<int, Word> canonical_word(const GradedSpace& v, const std::vector<int>& seq) {
  std::vector<int> p(seq.size());
  std::iota(p.begin(), p.end(), 0);
  std::stable_sort(p.begin(), p.end(), [&](int a, int b) { return seq[a] < seq[b]; });
  Word w(seq.size());
  std::vector<int> ds(seq.size());
  for (size_t i = 0; i < seq.size(); ++i) {
    w[i] = seq[p[i]];
    ds[i] = v.degree(seq[i]);
  }
  for (size_t i = 1; i < w.size(); ++i)
    if (w[i] == w[i - 1] && v.degree(w[i]) % 2 != 0) return {0, w};
  return {koszul_sign_idx(p, ds), w};
}

int word_degree(const GradedSpace& v, const Word& w) {
  int d = 0;
  for (int i : w) d += v.degree(i);
  return d;
}

std::vector<Word> words_up_to(const GradedSpace& v, int n) {
  std::vector<Word> out;
  for (int k = 1; k <= n; ++k)
    for (auto& t : canonical_tuples(v, k, Symmetry::symmetric)) out.push_back(t);
  return out;
}

void add_to(WordSum& s, const Word& w, const Q& c) {
  if (c == 0) return;
  auto [it, fresh] = s.emplace(w, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) s.erase(it);
  }
}

namespace {

template <class K>
void add_key(std::map<K, Q>& s, const K& k, const Q& c) {
  if (c == 0) return;
  auto [it, fresh] = s.emplace(k, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) s.erase(it);
  }
}

}  // namespace

WordSum product(const GradedSpace& v, const std::vector<Element>& ys) {
  WordSum out;
  std::vector<std::vector<std::pair<int, Q>>> terms;
  for (const auto& y : ys) {
    if (y.is_zero()) return out;
    terms.emplace_back(y.terms().begin(), y.terms().end());
  }
  std::vector<size_t> pos(ys.size(), 0);
  std::vector<int> seq(ys.size());
  while (true) {
    Q c = 1;
    for (size_t i = 0; i < ys.size(); ++i) {
      seq[i] = terms[i][pos[i]].first;
      c *= terms[i][pos[i]].second;
    }
    auto [sg, w] = canonical_word(v, seq);
    if (sg != 0) add_to(out, w, sg * c);
    size_t i = 0;
    while (i < ys.size() && ++pos[i] == terms[i].size()) pos[i++] = 0;
    if (i == ys.size()) break;
  }
  return out;
}

WordPairSum unshuffle_coproduct(const GradedSpace& v, const Word& w) {
  WordPairSum out;
  int n = static_cast<int>(w.size());
  std::vector<int> ds(n);
  for (int i = 0; i < n; ++i) ds[i] = v.degree(w[i]);
  for (int i = 1; i < n; ++i)
    for (const auto& sigma : unshuffles_idx({i, n - i})) {
      std::vector<int> left, right;
      for (int j = 0; j < i; ++j) left.push_back(w[sigma[j]]);
      for (int j = i; j < n; ++j) right.push_back(w[sigma[j]]);
      // both halves are already sorted subsequences of a sorted word
      add_key(out, std::make_pair(left, right), Q(koszul_sign_idx(sigma, ds)));
    }
  return out;
}

WordSum CoalgebraMap::operator()(const WordSum& s) const {
  WordSum out;
  for (const auto& [w, c] : s)
    for (const auto& [u, e] : fn(w)) add_to(out, u, c * e);
  return out;
}

CoalgebraMap identity_coalgebra_map(SpacePtr v, int truncation) {
  return CoalgebraMap{v, v, 0, truncation, [](const Word& w) { return WordSum{{w, Q(1)}}; }};
}

CoalgebraMap compose(const CoalgebraMap& g, const CoalgebraMap& f) {
  if (f.target != g.source) throw std::invalid_argument("compose: coalgebra maps do not chain");
  return CoalgebraMap{f.source, g.target, f.degree + g.degree, std::min(f.truncation, g.truncation),
                      [f, g](const Word& w) { return g(f(w)); }};
}

namespace {

std::vector<Element> basis_elements(const SpacePtr& v, const std::vector<int>& idx) {
  std::vector<Element> xs;
  for (int i : idx) xs.push_back(bvec(v, i));
  return xs;
}

}  // namespace

CoalgebraMap lift_to_morphism(const Family<Element>& f, SpacePtr source, SpacePtr target, int truncation) {
  for (const auto& [k, fk] : f) {
    if (fk.is_zero_map()) continue;
    if (fk.degree() != 0) throw std::invalid_argument("lift_to_morphism: components must have degree 0");
    if (!fk.is_symmetric()) throw std::invalid_argument("lift_to_morphism: components must be symmetric");
  }
  return CoalgebraMap{source, target, 0, truncation, [f, source, target](const Word& w) {
                        WordSum out;
                        int m = static_cast<int>(w.size());
                        auto xs = basis_elements(source, w);
                        std::vector<int> ds(m);
                        for (int i = 0; i < m; ++i) ds[i] = source->degree(w[i]);
                        // sorted block sizes and ordered unshuffles
                        std::vector<int> ks;
                        std::function<void(int, int)> rec = [&](int left, int minimum) {
                          if (left == 0) {
                            for (int k : ks)
                              if (!f.count(k) || f.at(k).is_zero_map()) return;
                            for (const auto& sigma : ordered_unshuffles_idx(ks)) {
                              std::vector<Element> ys;
                              size_t pos = 0;
                              bool dead = false;
                              for (int k : ks) {
                                std::vector<Element> block;
                                for (int j = 0; j < k; ++j) block.push_back(xs[sigma[pos++]]);
                                Element y = f.at(k)(block);
                                if (y.is_zero()) {
                                  dead = true;
                                  break;
                                }
                                ys.push_back(std::move(y));
                              }
                              if (dead) continue;
                              Q sg = koszul_sign_idx(sigma, ds);
                              for (const auto& [u, c] : product(*target, ys)) add_to(out, u, sg * c);
                            }
                            return;
                          }
                          for (int k = minimum; k <= left; ++k) {
                            ks.push_back(k);
                            rec(left - k, k);
                            ks.pop_back();
                          }
                        };
                        rec(m, 1);
                        return out;
                      }};
}

CoalgebraMap lift_to_coderivation(const Family<Element>& q, SpacePtr v, int truncation) {
  int deg = 0;
  bool have = false;
  for (const auto& [k, qk] : q) {
    if (qk.is_zero_map()) continue;
    if (!qk.is_symmetric()) throw std::invalid_argument("lift_to_coderivation: components must be symmetric");
    if (have && qk.degree() != deg) throw std::invalid_argument("lift_to_coderivation: mixed component degrees");
    deg = qk.degree();
    have = true;
  }
  return CoalgebraMap{v, v, deg, truncation, [q, v](const Word& w) {
                        WordSum out;
                        int n = static_cast<int>(w.size());
                        auto xs = basis_elements(v, w);
                        std::vector<int> ds(n);
                        for (int i = 0; i < n; ++i) ds[i] = v->degree(w[i]);
                        for (int i = 1; i <= n; ++i) {
                          auto it = q.find(i);
                          if (it == q.end() || it->second.is_zero_map()) continue;
                          std::vector<std::vector<int>> sigmas;
                          if (i == n) {
                            std::vector<int> id(n);
                            std::iota(id.begin(), id.end(), 0);
                            sigmas.push_back(id);
                          }
                          const auto& list = i == n ? sigmas : unshuffles_idx({i, n - i});
                          for (const auto& sigma : list) {
                            std::vector<Element> args;
                            for (int j = 0; j < i; ++j) args.push_back(xs[sigma[j]]);
                            Element y = it->second(args);
                            if (y.is_zero()) continue;
                            std::vector<Element> ys{y};
                            for (int j = i; j < n; ++j) ys.push_back(xs[sigma[j]]);
                            Q sg = koszul_sign_idx(sigma, ds);
                            for (const auto& [u, c] : product(*v, ys)) add_to(out, u, sg * c);
                          }
                        }
                        return out;
                      }};
}

Family<Element> corestrict(const CoalgebraMap& f) {
  Family<Element> out;
  for (int k = 1; k <= f.truncation; ++k) {
    CoalgebraMap fc = f;
    auto fn = [fc](const std::vector<Element>& xs) {
      Element acc(fc.target);
      std::vector<std::vector<std::pair<int, Q>>> terms;
      for (const auto& x : xs) terms.emplace_back(x.terms().begin(), x.terms().end());
      std::vector<size_t> pos(xs.size(), 0);
      std::vector<int> seq(xs.size());
      while (true) {
        Q c = 1;
        for (size_t i = 0; i < xs.size(); ++i) {
          seq[i] = terms[i][pos[i]].first;
          c *= terms[i][pos[i]].second;
        }
        auto [sg, w] = canonical_word(*fc.source, seq);
        if (sg != 0)
          for (const auto& [u, e] : fc(w))
            if (u.size() == 1) acc.add(u[0], sg * c * e);
        size_t i = 0;
        while (i < xs.size() && ++pos[i] == terms[i].size()) pos[i++] = 0;
        if (i == xs.size()) break;
      }
      return acc;
    };
    out.emplace(k, Endo<Element>(k, f.degree, Symmetry::symmetric, fn));
  }
  return out;
}

CoalgebraMap coder_exponential(const Family<Element>& p, SpacePtr v, int truncation) {
  for (const auto& [k, pk] : p) {
    if (pk.is_zero_map()) continue;
    if (k == 1) throw std::invalid_argument("coder_exponential: p must have no unary component");
    if (pk.degree() != 0) throw std::invalid_argument("coder_exponential: p must have degree 0");
  }
  CoalgebraMap c = lift_to_coderivation(p, v, truncation);
  return CoalgebraMap{v, v, 0, truncation, [c](const Word& w) {
                        WordSum out{{w, Q(1)}};
                        WordSum term{{w, Q(1)}};
                        for (int k = 1; !term.empty(); ++k) {
                          term = c(term);
                          for (auto& [u, e] : term) e /= k;
                          for (const auto& [u, e] : term) add_to(out, u, e);
                        }
                        return out;
                      }};
}

namespace {

WordPairSum coproduct_of(const GradedSpace& v, const WordSum& s) {
  WordPairSum out;
  for (const auto& [w, c] : s)
    for (const auto& [pr, e] : unshuffle_coproduct(v, w)) add_key(out, pr, c * e);
  return out;
}

}  // namespace

std::optional<Word> is_coalgebra_morphism(const CoalgebraMap& f) {
  for (const auto& w : words_up_to(*f.source, f.truncation)) {
    WordPairSum lhs = coproduct_of(*f.target, f(w));
    WordPairSum rhs;
    for (const auto& [pr, c] : unshuffle_coproduct(*f.source, w)) {
      WordSum a = f(pr.first), b = f(pr.second);
      for (const auto& [u1, e1] : a)
        for (const auto& [u2, e2] : b) add_key(rhs, std::make_pair(u1, u2), c * e1 * e2);
    }
    if (lhs != rhs) return w;
  }
  return std::nullopt;
}

std::optional<Word> is_coderivation(const CoalgebraMap& q) {
  const GradedSpace& v = *q.source;
  for (const auto& w : words_up_to(v, q.truncation)) {
    WordPairSum lhs = coproduct_of(v, q(w));
    WordPairSum rhs;
    for (const auto& [pr, c] : unshuffle_coproduct(v, w)) {
      for (const auto& [u, e] : q(pr.first)) add_key(rhs, std::make_pair(u, pr.second), c * e);
      int sg = sign_pow(static_cast<long>(q.degree) * word_degree(v, pr.first));
      for (const auto& [u, e] : q(pr.second)) add_key(rhs, std::make_pair(pr.first, u), sg * c * e);
    }
    if (lhs != rhs) return w;
  }
  return std::nullopt;
}

std::optional<Word> check_coassociative(const GradedSpace& v, int n) {
  for (const auto& w : words_up_to(v, n)) {
    WordTripleSum left, right;
    for (const auto& [pr, c] : unshuffle_coproduct(v, w)) {
      for (const auto& [pr2, e] : unshuffle_coproduct(v, pr.first))
        add_key(left, std::make_tuple(pr2.first, pr2.second, pr.second), c * e);
      for (const auto& [pr2, e] : unshuffle_coproduct(v, pr.second)) {
        // the first factor passes the coproduct, which has degree 0
        add_key(right, std::make_tuple(pr.first, pr2.first, pr2.second), c * e);
      }
    }
    if (left != right) return w;
  }
  return std::nullopt;
}

std::optional<Word> check_cocommutative(const GradedSpace& v, int n) {
  for (const auto& w : words_up_to(v, n)) {
    WordPairSum c = unshuffle_coproduct(v, w), swapped;
    for (const auto& [pr, e] : c) {
      int sg = sign_pow(static_cast<long>(word_degree(v, pr.first)) * word_degree(v, pr.second));
      add_key(swapped, std::make_pair(pr.second, pr.first), sg * e);
    }
    if (c != swapped) return w;
  }
  return std::nullopt;
}

std::string word_string(const GradedSpace& v, const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ".";
    s += v.label(w[i]);
  }
  return s;
}

}  // namespace linf
