#include "doctest.h"
#include "linf/arith.hpp"

#include <vector>

using namespace linf;

namespace {

// Akiyama-Tanigawa; yields the B_1 = +1/2 convention.
std::vector<Q> akiyama_tanigawa(int n) {
  std::vector<Q> a(n + 1), out;
  for (int m = 0; m <= n; ++m) {
    a[m] = Q(1, m + 1);
    for (int j = m; j >= 1; --j) a[j - 1] = Q(j) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  return out;
}

}  // namespace

TEST_CASE("bernoulli small values") {
  CHECK(bernoulli(0) == 1);
  CHECK(bernoulli(1) == Q(-1, 2));
  CHECK(bernoulli(2) == Q(1, 6));
  CHECK(bernoulli(3) == 0);
  CHECK(bernoulli(4) == Q(-1, 30));
}

TEST_CASE("bernoulli agrees with Akiyama-Tanigawa") {
  auto ref = akiyama_tanigawa(30);
  for (int m = 0; m <= 30; ++m) {
    Q expect = m == 1 ? -ref[1] : ref[m];
    CHECK_MESSAGE(bernoulli(m) == expect, "m = " << m);
  }
}

TEST_CASE("bernoulli recursion holds up to 30") {
  for (int m = 2; m <= 30; ++m) {
    Q s = 0;
    for (int j = 0; j < m; ++j) s += Q(binomial(m, j)) * bernoulli(j);
    CHECK(s == 0);
  }
}

TEST_CASE("phi coefficients") {
  std::vector<Q> table{1, -1, Q(1, 3), 0, Q(-1, 45), 0, Q(2, 945), 0, Q(-1, 4725), 0};
  for (int k = 1; k <= 10; ++k) CHECK(phi_coeff(k) == table[k - 1]);
  for (int k = 2; k <= 15; ++k) CHECK(phi_coeff(2 * k) == 0);
}

TEST_CASE("vinogradov and getzler coefficients") {
  CHECK(vinogradov_coeff(5) == Q(1, 30));
  CHECK(getzler_coeff(1) == Q(1, 2));
  CHECK(getzler_coeff(2) == Q(-1, 12));
  CHECK(getzler_coeff(4) == Q(1, 720));
  CHECK(getzler_coeff(3) == 0);
  CHECK_THROWS(vinogradov_coeff(4));
}

TEST_CASE("rational text round trip") {
  CHECK(to_string(Q(1, 2)) == "1/2");
  CHECK(to_string(Q(-3)) == "-3");
  CHECK(to_string(Q(4, -6)) == "-2/3");
  CHECK(parse_rational("-2/4") == Q(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS(parse_rational("1/0"));
  CHECK_THROWS(parse_rational("x"));
  CHECK_THROWS(parse_rational("1/-2"));
  Q a(7, 9);
  CHECK(a * (Q(1) / a) == 1);
}
