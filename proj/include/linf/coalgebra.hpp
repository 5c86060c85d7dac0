#pragma once

// Truncated symmetric coalgebra on a finite graded space.

#include "linf/multimap.hpp"

#include <functional>
#include <optional>
#include <tuple>

namespace linf {

// Nondecreasing list of basis indices; odd vectors appear at most once.
using Word = std::vector<int>;
using WordSum = std::map<Word, Q>;
using WordPairSum = std::map<std::pair<Word, Word>, Q>;
using WordTripleSum = std::map<std::tuple<Word, Word, Word>, Q>;

// Sorts a sequence of basis vectors into a word; sign 0 when the product
// vanishes (a repeated odd vector).
std::pair<int, Word> canonical_word(const GradedSpace& v, const std::vector<int>& seq);
int word_degree(const GradedSpace& v, const Word& w);
// All words of length 1..n.
std::vector<Word> words_up_to(const GradedSpace& v, int n);

void add_to(WordSum& s, const Word& w, const Q& c);
// y_1 . y_2 . ... . y_k expanded into words
WordSum product(const GradedSpace& v, const std::vector<Element>& ys);

WordPairSum unshuffle_coproduct(const GradedSpace& v, const Word& w);

// Linear map on the truncated coalgebra, given on words.
struct CoalgebraMap {
  SpacePtr source;
  SpacePtr target;
  int degree = 0;
  int truncation = 5;
  std::function<WordSum(const Word&)> fn;

  WordSum operator()(const Word& w) const { return fn(w); }
  WordSum operator()(const WordSum& s) const;
};

CoalgebraMap identity_coalgebra_map(SpacePtr v, int truncation);
CoalgebraMap compose(const CoalgebraMap& g, const CoalgebraMap& f);

// Symmetric degree-0 components f_k : V^{.k} -> W.
CoalgebraMap lift_to_morphism(const Family<Element>& f, SpacePtr source, SpacePtr target, int truncation);
// Symmetric components of a common degree.
CoalgebraMap lift_to_coderivation(const Family<Element>& q, SpacePtr v, int truncation);
// Projection of F on word length one, as symmetric maps of arity 1..truncation.
Family<Element> corestrict(const CoalgebraMap& f);
// exp of the coderivation of p (degree 0, no unary part)
CoalgebraMap coder_exponential(const Family<Element>& p, SpacePtr v, int truncation);

// Counterexample word, or nullopt when the structure equation holds on all
// words up to the truncation.
std::optional<Word> is_coalgebra_morphism(const CoalgebraMap& f);
std::optional<Word> is_coderivation(const CoalgebraMap& q);

// Coassociativity and cocommutativity of the coproduct, checked on all words
// up to length n; returns the first failing word.
std::optional<Word> check_coassociative(const GradedSpace& v, int n);
std::optional<Word> check_cocommutative(const GradedSpace& v, int n);

std::string word_string(const GradedSpace& v, const Word& w);

}  // namespace linf
