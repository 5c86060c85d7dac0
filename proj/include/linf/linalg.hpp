#pragma once

#include "linf/arith.hpp"

#include <optional>
#include <vector>

namespace linf {

using Matrix = std::vector<std::vector<Q>>;

// Row reduction over Q. Returns some solution of A x = b, or nullopt.
std::optional<std::vector<Q>> solve_linear(const Matrix& a, const std::vector<Q>& b);
int rank(Matrix a);
// Basis of {x : A x = 0}, one vector per free column of the echelon form.
Matrix nullspace(const Matrix& a, int cols);
std::optional<Matrix> inverse(const Matrix& a);
Matrix multiply(const Matrix& a, const Matrix& b);
Matrix identity_matrix(int n);

}  // namespace linf
