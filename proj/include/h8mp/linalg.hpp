#pragma once

#include <optional>
#include <vector>

#include "h8mp/field.hpp"

namespace h8mp {

using Matrix = std::vector<std::vector<FieldElement>>;

Matrix identity_matrix(int n);
Matrix mat_mul(const Matrix& a, const Matrix& b);
std::vector<FieldElement> mat_vec(const Matrix& a, const std::vector<FieldElement>& x);

// Exact Gauss-Jordan inverse; nullopt when singular.
std::optional<Matrix> mat_inverse(const Matrix& a);

int mat_rank(Matrix a);

}  // namespace h8mp
