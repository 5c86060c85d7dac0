#pragma once

#include <gmpxx.h>

#include <string>

namespace linf {

using Q = mpq_class;
using Z = mpz_class;

Z binomial(unsigned n, unsigned k);
Z factorial(unsigned n);

// B_m with B_1 = -1/2. Memoized, thread safe.
Q bernoulli(int m);

// phi_k = 2^{k-1} B_{k-1} / (k-1)!
Q phi_coeff(int k);

// c_k = (-1)^{(k+1)/2} 12 B_{k-1} / ((k-1)(k-2)), odd k >= 3.
Q vinogradov_coeff(int k);

// b_n = -B_n / n!, so b_1 = 1/2, b_2 = -1/12, b_4 = 1/720
Q getzler_coeff(int n);

// "p/q", or "p" when q = 1.
std::string to_string(const Q& q);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument otherwise.
Q parse_rational(const std::string& s);

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace linf
