#include "linf/graded.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace linf {

namespace {

struct SpaceKey {
  std::vector<std::pair<std::string, int>> basis;
  bool operator<(const SpaceKey& o) const { return basis < o.basis; }
};

std::mutex& registry_mutex() {
  static std::mutex m;
  return m;
}

std::map<SpaceKey, SpacePtr>& registry() {
  static std::map<SpaceKey, SpacePtr> r;
  return r;
}

}  // namespace

SpacePtr GradedSpace::make(const std::vector<std::pair<std::string, int>>& basis) {
  std::lock_guard<std::mutex> lock(registry_mutex());
  auto& reg = registry();
  SpaceKey key{basis};
  auto it = reg.find(key);
  if (it != reg.end()) return it->second;
  std::shared_ptr<GradedSpace> s(new GradedSpace());
  for (const auto& [label, deg] : basis) {
    if (s->index_.count(label)) throw std::invalid_argument("duplicate basis label '" + label + "'");
    s->index_[label] = static_cast<int>(s->labels_.size());
    s->labels_.push_back(label);
    s->degrees_.push_back(deg);
  }
  reg.emplace(key, s);
  return s;
}

int GradedSpace::index(const std::string& label) const {
  auto it = index_.find(label);
  return it == index_.end() ? -1 : it->second;
}

SpacePtr GradedSpace::shifted(int k) const {
  std::vector<std::pair<std::string, int>> b;
  b.reserve(dim());
  for (size_t i = 0; i < dim(); ++i) b.emplace_back(labels_[i], degrees_[i] - k);
  return make(b);
}

Element Element::basis(SpacePtr s, int i, const Q& c) {
  Element e(std::move(s));
  e.add(i, c);
  return e;
}

Q Element::coeff(int i) const {
  auto it = terms_.find(i);
  return it == terms_.end() ? Q(0) : it->second;
}

void Element::add(int i, const Q& c) {
  if (c == 0) return;
  auto [it, fresh] = terms_.emplace(i, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

bool Element::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = space_->degree(terms_.begin()->first);
  for (const auto& [i, c] : terms_)
    if (space_->degree(i) != d) return false;
  return true;
}

int Element::degree() const {
  if (terms_.empty()) throw std::logic_error("degree of the zero element");
  if (!is_homogeneous()) throw std::logic_error("degree of an inhomogeneous element");
  return space_->degree(terms_.begin()->first);
}

void Element::adopt(const SpacePtr& s) {
  if (!space_) {
    space_ = s;
  } else if (s && s != space_) {
    throw std::invalid_argument("element space mismatch");
  }
}

Element& Element::operator+=(const Element& o) {
  if (o.terms_.empty()) return *this;
  adopt(o.space_);
  for (const auto& [i, c] : o.terms_) add(i, c);
  return *this;
}

Element& Element::operator-=(const Element& o) {
  if (o.terms_.empty()) return *this;
  adopt(o.space_);
  for (const auto& [i, c] : o.terms_) add(i, -c);
  return *this;
}

Element& Element::operator*=(const Q& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [i, v] : terms_) v *= c;
  return *this;
}

bool Element::operator==(const Element& o) const {
  if (terms_.empty() || o.terms_.empty()) return terms_.empty() && o.terms_.empty();
  return space_ == o.space_ && terms_ == o.terms_;
}

std::string Element::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, c] : terms_) {
    if (!first) os << " + ";
    first = false;
    os << to_string(c) << "*" << space_->label(i);
  }
  return os.str();
}

std::vector<Element> homogeneous_parts(const Element& e) {
  if (e.is_zero()) return {};
  std::map<int, Element> parts;
  for (const auto& [i, c] : e.terms()) {
    auto& p = parts.try_emplace(e.space()->degree(i), Element(e.space())).first->second;
    p.add(i, c);
  }
  std::vector<Element> out;
  for (auto& [d, p] : parts) out.push_back(std::move(p));
  return out;
}

Element regrade(const Element& e, int k) {
  if (e.is_zero() || k == 0) return e;
  Element r(e.space()->shifted(k));
  for (const auto& [i, c] : e.terms()) r.add(i, c);
  return r;
}

Permutation Permutation::identity(int n) {
  Permutation p;
  p.images.resize(n);
  std::iota(p.images.begin(), p.images.end(), 1);
  return p;
}

bool Permutation::valid() const {
  std::vector<char> seen(images.size() + 1, 0);
  for (int v : images) {
    if (v < 1 || v > size() || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

int parity_idx(const std::vector<int>& idx) {
  int inv = 0;
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = a + 1; b < idx.size(); ++b)
      if (idx[a] > idx[b]) ++inv;
  return inv % 2 ? -1 : 1;
}

int koszul_sign_idx(const std::vector<int>& idx, const std::vector<int>& degrees) {
  int inv = 0;
  for (size_t a = 0; a < idx.size(); ++a) {
    if (degrees[idx[a]] % 2 == 0) continue;
    for (size_t b = a + 1; b < idx.size(); ++b)
      if (idx[a] > idx[b] && degrees[idx[b]] % 2 != 0) ++inv;
  }
  return inv % 2 ? -1 : 1;
}

namespace {

std::vector<int> to_idx(const Permutation& s) {
  std::vector<int> idx(s.images.size());
  for (size_t i = 0; i < idx.size(); ++i) idx[i] = s.images[i] - 1;
  return idx;
}

void check(const Permutation& s, const std::vector<int>& degrees) {
  if (!s.valid()) throw std::invalid_argument("not a permutation");
  if (static_cast<int>(degrees.size()) != s.size())
    throw std::invalid_argument("degree list length does not match permutation size");
}

}  // namespace

int Permutation::parity() const { return parity_idx(to_idx(*this)); }

Permutation Permutation::operator*(const Permutation& b) const {
  if (size() != b.size()) throw std::invalid_argument("permutation size mismatch");
  Permutation r;
  r.images.resize(size());
  for (int i = 0; i < size(); ++i) r.images[i] = images[b.images[i] - 1];
  return r;
}

std::vector<int> act(const Permutation& s, const std::vector<int>& degrees) {
  check(s, degrees);
  std::vector<int> out(degrees.size());
  for (int i = 0; i < s.size(); ++i) out[i] = degrees[s.images[i] - 1];
  return out;
}

int koszul_sign(const Permutation& s, const std::vector<int>& degrees) {
  check(s, degrees);
  return koszul_sign_idx(to_idx(s), degrees);
}

int odd_koszul_sign(const Permutation& s, const std::vector<int>& degrees) {
  check(s, degrees);
  auto idx = to_idx(s);
  return parity_idx(idx) * koszul_sign_idx(idx, degrees);
}

namespace {

std::vector<std::vector<int>> enumerate_unshuffles(const std::vector<int>& blocks, bool ordered) {
  if (blocks.empty()) throw std::invalid_argument("unshuffles: empty block list");
  for (int k : blocks)
    if (k < 1) throw std::invalid_argument("unshuffles: block sizes must be positive");
  int n = std::accumulate(blocks.begin(), blocks.end(), 0);
  std::vector<std::vector<int>> out;
  std::vector<int> current;
  std::vector<char> used(n, 0);
  std::vector<int> firsts;

  // choose the index set of block b, increasing, from unused indices
  std::function<void(size_t)> rec = [&](size_t b) {
    if (b == blocks.size()) {
      out.push_back(current);
      return;
    }
    int need = blocks[b];
    std::vector<int> pick;
    std::function<void(int)> choose = [&](int from) {
      if (static_cast<int>(pick.size()) == need) {
        if (ordered && b > 0 && blocks[b - 1] == blocks[b] && firsts[b - 1] > pick[0]) return;
        for (int i : pick) used[i] = 1;
        current.insert(current.end(), pick.begin(), pick.end());
        firsts.push_back(pick[0]);
        rec(b + 1);
        firsts.pop_back();
        current.resize(current.size() - pick.size());
        for (int i : pick) used[i] = 0;
        return;
      }
      for (int i = from; i < n; ++i) {
        if (used[i]) continue;
        pick.push_back(i);
        choose(i + 1);
        pick.pop_back();
      }
    };
    choose(0);
  };
  rec(0);
  std::sort(out.begin(), out.end());
  return out;
}

using Cache = std::map<std::vector<int>, std::vector<std::vector<int>>>;

// Per-thread caches keep parallel evaluation free of locking.
const std::vector<std::vector<int>>& cached(const std::vector<int>& blocks, bool ordered) {
  thread_local Cache plain, ord;
  Cache& c = ordered ? ord : plain;
  auto it = c.find(blocks);
  if (it == c.end()) it = c.emplace(blocks, enumerate_unshuffles(blocks, ordered)).first;
  return it->second;
}

std::vector<Permutation> to_perms(const std::vector<std::vector<int>>& lists) {
  std::vector<Permutation> out;
  out.reserve(lists.size());
  for (const auto& l : lists) {
    Permutation p;
    for (int i : l) p.images.push_back(i + 1);
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

const std::vector<std::vector<int>>& unshuffles_idx(const std::vector<int>& blocks) {
  return cached(blocks, false);
}

const std::vector<std::vector<int>>& ordered_unshuffles_idx(const std::vector<int>& blocks) {
  return cached(blocks, true);
}

std::vector<Permutation> unshuffles(const std::vector<int>& blocks) {
  return to_perms(unshuffles_idx(blocks));
}

std::vector<Permutation> ordered_unshuffles(const std::vector<int>& blocks) {
  return to_perms(ordered_unshuffles_idx(blocks));
}

int varsigma(int k) { return -sign_pow(static_cast<long>(k) * (k + 1) / 2); }

int dec_sign(const std::vector<int>& degrees) {
  long e = 0;
  long n = static_cast<long>(degrees.size());
  for (long i = 0; i < n; ++i) e += (n - 1 - i) * degrees[i];
  return sign_pow(e < 0 ? -e : e);
}

}  // namespace linf
