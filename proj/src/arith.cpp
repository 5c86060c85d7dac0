#include "linf/arith.hpp"

#include <mutex>
#include <stdexcept>
#include <vector>

namespace linf {

Z binomial(unsigned n, unsigned k) {
  Z r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

Z factorial(unsigned n) {
  Z r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

Q bernoulli(int m) {
  if (m < 0) throw std::invalid_argument("bernoulli: negative index");
  static std::mutex mu;
  static std::vector<Q> memo{Q(1)};
  std::lock_guard<std::mutex> lock(mu);
  while (static_cast<int>(memo.size()) <= m) {
    // sum_{j=0}^{s} C(s+1, j) B_j = 0 solved for B_s
    unsigned s = memo.size();
    Q acc = 0;
    for (unsigned j = 0; j < s; ++j) acc += Q(binomial(s + 1, j)) * memo[j];
    Q b = -acc / Q(s + 1);
    b.canonicalize();
    memo.push_back(b);
  }
  return memo[m];
}

Q phi_coeff(int k) {
  if (k < 1) throw std::invalid_argument("phi_coeff: k must be positive");
  Z two = 1;
  two <<= (k - 1);
  Q r = Q(two) * bernoulli(k - 1) / Q(factorial(k - 1));
  r.canonicalize();
  return r;
}

Q vinogradov_coeff(int k) {
  if (k < 3 || k % 2 == 0) throw std::invalid_argument("vinogradov_coeff: odd k >= 3 required");
  Q r = Q(12 * sign_pow((k + 1) / 2)) * bernoulli(k - 1) / Q((k - 1) * (k - 2));
  r.canonicalize();
  return r;
}

Q getzler_coeff(int n) {
  // -B_n/n! agrees with (-1)^n B_n/n! for odd n; for even n >= 2 the sign
  // must be negative or the ternary Jacobi relation fails.
  Q r = -bernoulli(n) / Q(factorial(n));
  r.canonicalize();
  return r;
}

std::string to_string(const Q& value) {
  Q q = value;
  q.canonicalize();
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Q parse_rational(const std::string& s) {
  auto valid_int = [](const std::string& t, bool allow_sign) {
    if (t.empty()) return false;
    size_t i = 0;
    if (allow_sign && (t[0] == '-' || t[0] == '+')) i = 1;
    if (i == t.size()) return false;
    for (; i < t.size(); ++i)
      if (t[i] < '0' || t[i] > '9') return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid_int(num, true) || !valid_int(den, false))
    throw std::invalid_argument("not a rational: '" + s + "'");
  if (num[0] == '+') num = num.substr(1);
  Z d(den);
  if (d == 0) throw std::invalid_argument("zero denominator: '" + s + "'");
  Q q(Z(num), d);
  q.canonicalize();
  return q;
}

}  // namespace linf
