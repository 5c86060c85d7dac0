#include "linf/cli.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

namespace linf {

namespace {

std::string q_str(const Q& q) { return q.get_str(); }

Json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open " + path);
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError(path + ": " + e.what());
  }
}

Json single_input(const JobConfig& c) {
  if (c.inputs.size() != 1) throw InputError(c.subcommand + ": exactly one input file expected");
  return read_json(c.inputs[0]);
}

const Json& field_of(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw InputError(std::string("missing key '") + key + "'");
  return j.at(key);
}

int int_of(const Json& j, const char* what) {
  if (!j.is_number_integer()) throw InputError(std::string(what) + " must be an integer");
  return j.get<int>();
}

// Recursive descent over + - * ^ ( ) with rational literals and x<i>.
class PolyParser {
 public:
  PolyParser(const std::string& s, int N) : s_(s), N_(N) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& msg) const {
    throw InputError("polynomial '" + s_ + "': " + msg);
  }
  std::string digits() {
    skip();
    size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("digits expected");
    return s_.substr(start, pos_ - start);
  }
  int exponent() {
    if (!eat('^')) return 1;
    std::string d = digits();
    if (d.size() > 3) fail("exponent too large");
    return std::stoi(d);
  }
  static Poly pow(const Poly& p, int e) {
    Poly r(Q(1));
    for (int i = 0; i < e; ++i) r = r * p;
    return r;
  }
  Poly expr() {
    Poly acc;
    bool first = true;
    while (true) {
      Q sign(1);
      if (eat('-'))
        sign = Q(-1);
      else if (!first && !eat('+'))
        break;
      else if (first)
        eat('+');
      acc += sign * term();
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return acc;
  }
  Poly term() {
    Poly p = factor();
    while (eat('*')) p = p * factor();
    return p;
  }
  Poly factor() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end");
    char ch = s_[pos_];
    if (ch == '-') {
      ++pos_;
      return Q(-1) * factor();
    }
    if (ch == '(') {
      ++pos_;
      Poly inner = expr();
      if (!eat(')')) fail("')' expected");
      return pow(inner, exponent());
    }
    if (ch == 'x') {
      ++pos_;
      int i = std::stoi(digits());
      if (i >= N_) fail("variable x" + std::to_string(i) + " outside R^" + std::to_string(N_));
      return pow(Poly::var(i), exponent());
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      std::string num = digits();
      if (eat('/')) {
        std::string den = digits();
        if (den.find_first_not_of('0') == std::string::npos) fail("zero denominator");
        num += "/" + den;
      }
      Q q(num);
      q.canonicalize();
      return Poly(q);
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  const std::string& s_;
  int N_;
  size_t pos_ = 0;
};

Poly poly_of(const Json& j, int N) {
  if (j.is_string()) return parse_poly(j.get<std::string>(), N);
  return Poly(parse_rational(j));
}

std::vector<int> tuple_key(const std::string& key, const LieAlgebraData& g) {
  std::vector<int> t;
  std::stringstream ss(key);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), [](unsigned char c) { return std::isspace(c); }), tok.end());
    int idx = g.space->index(tok);
    if (idx < 0) {
      if (tok.empty() || !std::all_of(tok.begin(), tok.end(), [](unsigned char c) { return std::isdigit(c); }))
        throw InputError("unknown generator '" + tok + "'");
      idx = std::stoi(tok);
    }
    if (idx >= g.dim()) throw InputError("generator index " + tok + " out of range");
    t.push_back(idx);
  }
  if (t.empty()) throw InputError("empty generator tuple");
  return t;
}

std::vector<std::string> labels_of(const LieAlgebraData& g, const std::vector<int>& t) {
  std::vector<std::string> out;
  for (int i : t) out.push_back(g.space->label(i));
  return out;
}

std::map<int, Q> overrides_of(const Json& j) {
  std::map<int, Q> out;
  if (!j.contains("phi_overrides")) return out;
  for (const auto& [k, v] : j.at("phi_overrides").items()) out[std::stoi(k)] = parse_rational(v);
  return out;
}

CorpusOptions corpus_options(const Json& j) {
  CorpusOptions o;
  if (!j.contains("corpus")) return o;
  const Json& c = j.at("corpus");
  if (c.contains("constant_fields")) o.constant_fields = c.at("constant_fields").get<bool>();
  if (c.contains("linear_fields")) o.linear_fields = c.at("linear_fields").get<bool>();
  if (c.contains("closed_pairs")) o.closed_pairs = int_of(c.at("closed_pairs"), "closed_pairs");
  if (c.contains("lower_per_degree")) o.lower_per_degree = int_of(c.at("lower_per_degree"), "lower_per_degree");
  if (c.contains("lower_poly_degree")) o.lower_poly_degree = int_of(c.at("lower_poly_degree"), "lower_poly_degree");
  return o;
}

const Json& space_json(const Json& j) { return j.contains("space") ? j.at("space") : j; }

// Runs check_vanishing arity by arity, sampling arities with too many tuples.
template <class E, class Out>
Json sweep(const std::vector<std::pair<int, Multi<E, Out>>>& maps, const std::vector<E>& corpus, Symmetry s,
           const TupleFilter& skip, const JobConfig& c, bool& ok) {
  Json arities = Json::array();
  Json failures = Json::array();
  long total = 0;
  ok = true;
  for (const auto& [n, f] : maps) {
    std::vector<std::vector<int>> tuples;
    for (auto& t : corpus_tuples(corpus, n, s))
      if (!skip || !skip(t)) tuples.push_back(std::move(t));
    long candidates = static_cast<long>(tuples.size());
    bool sampled = candidates > c.exhaustive_limit;
    if (sampled) {
      std::vector<std::vector<int>> pick;
      std::mt19937_64 rng(c.seed + static_cast<std::uint64_t>(n));
      std::sample(tuples.begin(), tuples.end(), std::back_inserter(pick), c.samples, rng);
      tuples = std::move(pick);
    }
    std::set<std::vector<int>> chosen(tuples.begin(), tuples.end());
    TupleFilter only = [&chosen](const std::vector<int>& t) { return !chosen.count(t); };
    std::vector<std::pair<int, Multi<E, Out>>> one{{n, f}};
    CheckReport r = check_vanishing(one, corpus, s, only);
    total += r.tuples_checked;
    arities.push_back({{"arity", n}, {"candidates", candidates}, {"checked", r.tuples_checked}, {"sampled", sampled}});
    if (!r.ok) {
      ok = false;
      Json entries = Json::array();
      for (int i : r.failure->tuple) entries.push_back(to_text(corpus[i]));
      failures.push_back({{"arity", n}, {"tuple", entries}, {"residual", r.failure->residual}});
      break;
    }
  }
  return {{"arities", arities}, {"failures", failures}, {"tuples_checked", total}};
}

Json checked_list(const Json& sweep_report) {
  Json out = Json::array();
  for (const auto& a : sweep_report.at("arities")) out.push_back(a.at("arity"));
  return out;
}

Json comoment_report_json(const ComomentReport& r, const LieAlgebraData& g) {
  Json j{{"ok", r.ok}, {"tuples_checked", r.tuples_checked}};
  if (r.failure)
    j["failure"] = {{"k", r.failure->k}, {"tuple", labels_of(g, r.failure->tuple)}, {"residual", r.failure->residual}};
  return j;
}

struct ComomentInstance {
  MssSpace M;
  ActionData A;
  Comoment f;
};

ComomentInstance comoment_instance(const Json& j, const JobConfig& c) {
  MssSpace M = parse_space(field_of(j, "space"), c.poly_degree);
  ActionData A = parse_action(field_of(j, "action"), M.N);
  Comoment f = parse_comoment(field_of(j, "comoment"), A, M);
  return {M, A, f};
}

JobResult fail_input(const std::string& msg) {
  return {2, Json{{"status", "input-error"}, {"error", msg}}};
}

}  // namespace

Poly parse_poly(const std::string& s, int N) { return PolyParser(s, N).parse(); }

Q parse_rational(const Json& j) {
  if (j.is_number_integer()) return Q(j.get<long>());
  if (j.is_string()) {
    try {
      return parse_rational(j.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw InputError("rational expected: " + j.get<std::string>());
    }
  }
  throw InputError("rational expected (integer or \"p/q\" string)");
}

PolyForm parse_form(const Json& j, int N) {
  if (j.is_string()) {
    std::string name = j.get<std::string>();
    if (name == "volume") return PolyForm::volume(N);
    if (name == "symplectic") {
      if (N % 2) throw InputError("symplectic form needs even N");
      PolyForm w(N, 2);
      for (int i = 0; i + 1 < N; i += 2) w += PolyForm::basic(N, {i, i + 1});
      return w;
    }
    throw InputError("unknown form '" + name + "'");
  }
  int p = int_of(field_of(j, "degree"), "form degree");
  if (p < 0 || p > N) throw InputError("form degree out of range");
  PolyForm a(N, p);
  if (!j.contains("terms")) return a;
  for (const auto& t : j.at("terms")) {
    std::vector<int> idx;
    for (const auto& i : field_of(t, "dx")) {
      int v = int_of(i, "dx index");
      if (v < 0 || v >= N) throw InputError("dx index out of range");
      idx.push_back(v);
    }
    if (static_cast<int>(idx.size()) != p) throw InputError("term of wrong form degree");
    auto [sign, sorted] = alternating_sort(idx);
    if (sign == 0) throw InputError("repeated dx index");
    Poly coeff = t.contains("coeff") ? poly_of(t.at("coeff"), N) : Poly(Q(1));
    a += PolyForm::basic(N, sorted, Q(sign) * coeff);
  }
  return a;
}

PolyField parse_field(const Json& j, int N) {
  if (!j.is_array() || static_cast<int>(j.size()) != N) throw InputError("a field is an array of N components");
  PolyField x(N, 1);
  for (int i = 0; i < N; ++i) x += PolyField::coordinate(N, i, poly_of(j[i], N));
  return x;
}

MssSpace parse_space(const Json& j, int poly_degree) {
  int N = int_of(field_of(j, "N"), "N");
  if (N < 1 || N > kMaxVars) throw InputError("N out of range");
  PolyForm omega = parse_form(field_of(j, "omega"), N);
  int D = j.contains("D") ? int_of(j.at("D"), "D") : 2;
  if (poly_degree >= 0) D = poly_degree;
  MssSpace M = MssSpace::make(omega, D);
  if (j.contains("n") && int_of(j.at("n"), "n") != M.n)
    throw InputError("n = " + std::to_string(j.at("n").get<int>()) + " does not match the degree of omega");
  return M;
}

ActionData parse_action(const Json& j, int N) {
  if (j.contains("so")) {
    int n = int_of(j.at("so"), "so");
    if (n != N) throw InputError("so(n) acts on R^n: n must equal N");
    return so_n_action(n);
  }
  const Json& fields = field_of(j, "fields");
  if (!j.contains("algebra")) {
    std::vector<std::string> labels;
    std::vector<PolyField> xs;
    for (const auto& [label, f] : fields.items()) {
      labels.push_back(label);
      xs.push_back(parse_field(f, N));
    }
    if (labels.empty()) throw InputError("no fields");
    return action_from_fields(labels, xs);
  }
  const Json& alg = j.at("algebra");
  std::vector<std::string> labels;
  for (const auto& l : field_of(alg, "labels")) labels.push_back(l.get<std::string>());
  std::vector<std::tuple<int, int, int, Q>> consts;
  if (alg.contains("constants"))
    for (const auto& c : alg.at("constants")) {
      if (!c.is_array() || c.size() != 4) throw InputError("structure constant is [i, j, k, c]");
      consts.emplace_back(int_of(c[0], "i"), int_of(c[1], "j"), int_of(c[2], "k"), parse_rational(c[3]));
    }
  auto g = LieAlgebraData::make(labels, consts);
  std::vector<PolyField> xs;
  for (const auto& l : labels) {
    if (!fields.contains(l)) throw InputError("no field for generator " + l);
    xs.push_back(parse_field(fields.at(l), N));
  }
  return ActionData::make(g, xs);
}

Comoment parse_comoment(const Json& j, const ActionData& A, const MssSpace& M) {
  if (j.contains("potential")) return comoment_from_potential(parse_form(j.at("potential"), M.N), A, M);
  Comoment f{M.n, M.N, {}};
  for (const auto& [key, v] : field_of(j, "values").items()) {
    auto t = tuple_key(key, A.algebra);
    int k = static_cast<int>(t.size());
    if (k > M.n) throw InputError("component of arity " + std::to_string(k) + " exceeds n");
    auto [sign, sorted] = alternating_sort(t);
    if (sign == 0) throw InputError("repeated generator in " + key);
    PolyForm a = parse_form(v, M.N);
    if (a.degree() != M.n - k) throw InputError("component " + key + " must have form degree n - k");
    if (sign < 0) a *= Q(-1);
    if (a.is_zero()) continue;
    auto [it, fresh] = f.values.emplace(sorted, a);
    if (!fresh) it->second += a;
  }
  return f;
}

Json form_json(const PolyForm& a) {
  Json terms = Json::array();
  for (const auto& [s, p] : a.comps()) terms.push_back({{"dx", indices_of(s)}, {"coeff", p.str()}});
  return {{"degree", a.degree()}, {"terms", terms}};
}

JobResult run_check_linfty(const JobConfig& c) {
  Json j = single_input(c);
  bool ok = true;
  Json rep;
  if (j.contains("brackets")) {
    Json sj = field_of(j, "space");
    std::vector<std::pair<std::string, int>> basis;
    for (const auto& b : sj) {
      if (b.is_array() && b.size() == 2)
        basis.emplace_back(b[0].get<std::string>(), int_of(b[1], "degree"));
      else
        basis.emplace_back(field_of(b, "label").get<std::string>(), int_of(field_of(b, "degree"), "degree"));
    }
    if (basis.empty()) throw InputError("empty space");
    auto v = GradedSpace::make(basis);
    std::string pres = j.value("presentation", std::string("skew"));
    if (pres != "skew" && pres != "sym") throw InputError("presentation is skew or sym");
    bool skew = pres == "skew";
    Symmetry s = skew ? Symmetry::skew : Symmetry::symmetric;
    LInftyStructure<Element> mu{skew ? Presentation::skew : Presentation::sym, {}, 1};
    for (const auto& [ks, entries] : j.at("brackets").items()) {
      int k = std::stoi(ks);
      if (k < 1) throw InputError("bracket arity must be positive");
      int deg = skew ? 2 - k : 1;
      MultiMap m = MultiMap::zero(v, k, deg, s);
      for (const auto& e : entries) {
        std::vector<int> idx;
        int in_deg = 0;
        for (const auto& l : field_of(e, "in")) {
          int i = v->index(l.get<std::string>());
          if (i < 0) throw InputError("unknown basis label " + l.get<std::string>());
          idx.push_back(i);
          in_deg += v->degree(i);
        }
        if (static_cast<int>(idx.size()) != k) throw InputError("bracket entry of wrong arity");
        Element out(v);
        for (const auto& [l, q] : field_of(e, "out").items()) {
          int i = v->index(l);
          if (i < 0) throw InputError("unknown basis label " + l);
          if (v->degree(i) != in_deg + deg)
            throw InputError("output " + l + " has the wrong degree for arity " + std::to_string(k));
          out.add(i, parse_rational(q));
        }
        m.set(idx, out);
      }
      mu.brackets[k] = m.as_multi();
      mu.max_arity = std::max(mu.max_arity, k);
    }
    int top = c.max_arity > 0 ? c.max_arity : std::max(3, mu.max_arity + 1);
    std::vector<std::pair<int, EMulti>> maps;
    for (int n = 1; n <= top; ++n) maps.emplace_back(n, jacobiator(mu, n));
    rep = sweep(maps, basis_corpus(v), s, nullptr, c, ok);
    rep["structure"] = "finite";
    rep["corpus_size"] = v->dim();
  } else {
    MssSpace M = parse_space(space_json(j), c.poly_degree);
    std::string kind = j.value("structure", std::string("rogers"));
    LInftyStructure<FormVec> mu;
    if (kind == "rogers")
      mu = rogers_structure(M);
    else if (kind == "vinogradov")
      mu = vinogradov_structure(M);
    else
      throw InputError("structure is rogers or vinogradov");
    if (j.contains("scale"))
      for (const auto& [ks, q] : j.at("scale").items()) {
        int k = std::stoi(ks);
        mu.brackets[k] = scale(parse_rational(q), mu.bracket(k));
      }
    auto corpus = observable_corpus(M, corpus_options(j));
    int lower_skip = kind == "rogers" ? 2 : 3;
    int top = c.max_arity > 0 ? c.max_arity : M.n + 2;
    std::vector<std::pair<int, FormMap>> maps;
    for (int n = 1; n <= top; ++n) maps.emplace_back(n, jacobiator(mu, n));
    rep = sweep(maps, corpus, Symmetry::skew, skip_if_lower_at_least(corpus, lower_skip), c, ok);
    rep["structure"] = kind;
    rep["corpus_size"] = corpus.size();
    rep["skipped"] = "tuples with at least " + std::to_string(lower_skip) + " entries of nonzero degree";
  }
  rep["checked_arities"] = checked_list(rep);
  rep["status"] = ok ? "pass" : "fail";
  return {ok ? 0 : 1, rep};
}

JobResult run_check_morphism(const JobConfig& c) {
  Json j = single_input(c);
  MssSpace M = parse_space(space_json(j), c.poly_degree);
  std::string kind = j.value("morphism", std::string("phi"));
  if (kind != "phi") throw InputError("morphism must be phi");
  auto overrides = overrides_of(j);
  int top = c.max_arity > 0 ? c.max_arity : M.n + 1;
  auto phi = phi_morphism(top, overrides);
  auto pi = rogers_structure(M), mu = vinogradov_structure(M);
  auto corpus = observable_corpus(M, corpus_options(j));
  std::vector<std::pair<int, FormMap>> maps;
  for (int m = 1; m <= top; ++m) maps.emplace_back(m, morphism_defect(phi, pi, mu, m));
  bool ok = true;
  Json rep = sweep(maps, corpus, Symmetry::skew, skip_if_lower_at_least(corpus, 3), c, ok);
  Json conj = Json::array();
  if (M.n >= 5)
    for (int m = 5; m <= top; ++m) conj.push_back(m);
  rep["conjectural_arities"] = conj;
  rep["checked_arities"] = checked_list(rep);
  rep["corpus_size"] = corpus.size();
  Json ov = Json::object();
  for (const auto& [k, q] : overrides) ov[std::to_string(k)] = q_str(q);
  rep["phi_overrides"] = ov;
  rep["status"] = ok ? "pass" : "fail";
  return {ok ? 0 : 1, rep};
}

JobResult run_comoment(const JobConfig& c) {
  Json j = single_input(c);
  auto [M, A, f] = comoment_instance(j, c);
  auto v = verify_comoment(f, A, M);
  auto m = check_comoment_morphism(f, A, M);
  auto e = equivariance(f, A);
  Json rep{{"verify", comoment_report_json(v, A.algebra)},
           {"morphism_check", {{"ok", m.ok}, {"tuples_checked", m.tuples_checked}}},
           {"checkers_agree", v.ok == m.ok}};
  Json eq{{"equivariant", e.equivariant}, {"checked", e.checked}};
  if (e.failure)
    eq["failure"] = {{"k", e.failure->k}, {"tuple", labels_of(A.algebra, e.failure->tuple)},
                     {"residual", e.failure->residual}};
  rep["equivariance"] = eq;
  bool ok = v.ok && m.ok;
  if (j.contains("B")) {
    PolyForm B = parse_form(j.at("B"), M.N);
    auto ft = gauge_shift_comoment(f, A, B);
    auto g = verify_comoment(ft, A, M.omega + d(B));
    rep["gauge_shift"] = comoment_report_json(g, A.algebra);
    ok = ok && g.ok;
  }
  Json comps = Json::object();
  for (const auto& [t, a] : f.values) {
    std::string key;
    for (const auto& l : labels_of(A.algebra, t)) key += (key.empty() ? "" : ",") + l;
    comps[key] = form_json(a);
  }
  rep["components"] = comps;
  rep["status"] = ok ? "pass" : "fail";
  return {ok ? 0 : 1, rep};
}

JobResult run_pentagon(const JobConfig& c) {
  Json j = single_input(c);
  auto [M, A, f] = comoment_instance(j, c);
  PolyForm B = j.contains("B") ? parse_form(j.at("B"), M.N) : PolyForm(M.N, M.n);
  int top = c.max_arity > 0 ? c.max_arity : M.n + 1;
  auto r = check_pentagon(M, A, f, B, top, overrides_of(j));
  Json ar = Json::array();
  for (size_t i = 0; i < r.arities.size(); ++i)
    ar.push_back({{"arity", r.arities[i]}, {"checked", i < r.tuples.size() ? r.tuples[i] : 0}});
  Json rep{{"arities", ar}, {"status", r.ok ? "pass" : "fail"}};
  Json failures = Json::array();
  if (r.failure)
    failures.push_back({{"arity", r.failure->k}, {"tuple", labels_of(A.algebra, r.failure->tuple)},
                        {"residual", r.failure->residual}});
  rep["failures"] = failures;
  return {r.ok ? 0 : 1, rep};
}

JobResult run_tables(const JobConfig& c) {
  if (c.trunc < 0) throw InputError("--trunc must be nonnegative");
  Json b = Json::array(), p = Json::array();
  for (int k = 0; k <= c.trunc; ++k) b.push_back(q_str(bernoulli(k)));
  for (int k = 1; k <= std::max(c.trunc, 1); ++k) p.push_back(q_str(phi_coeff(k)));
  return {0, Json{{"bernoulli", b}, {"phi", p}, {"status", "pass"}, {"trunc", c.trunc}}};
}

JobResult run_job(const JobConfig& c) {
  try {
    if (c.samples < 1) throw InputError("--samples must be positive");
    if (c.exhaustive_limit < 0) throw InputError("--exhaustive-limit must be nonnegative");
    if (c.subcommand == "check-linfty") return run_check_linfty(c);
    if (c.subcommand == "check-morphism") return run_check_morphism(c);
    if (c.subcommand == "comoment") return run_comoment(c);
    if (c.subcommand == "pentagon") return run_pentagon(c);
    if (c.subcommand == "tables") return run_tables(c);
    throw InputError("unknown subcommand '" + c.subcommand + "'");
  } catch (const InputError& e) {
    return fail_input(e.what());
  } catch (const Json::exception& e) {
    return fail_input(e.what());
  } catch (const std::invalid_argument& e) {
    return fail_input(e.what());
  }
}

}  // namespace linf
