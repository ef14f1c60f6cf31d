#pragma once

#include <optional>
#include <string>
#include <vector>

#include "oredet/ratfunc.hpp"

namespace oredet {

// Commutative matrices over K, row-major grid. Used for characteristic
// matrices and the leading-coefficient matrices of the dd=1 reduction.
using KMatrix = std::vector<std::vector<RatFunc>>;

KMatrix zero_kmatrix(std::size_t rows, std::size_t cols);
KMatrix identity_kmatrix(std::size_t n);
bool is_square(const KMatrix& m);

/// Determinant by Bareiss fraction-free elimination with row pivoting.
/// Precondition: square (throws std::invalid_argument otherwise).
/// The 0x0 determinant is 1.
RatFunc det_bareiss(const KMatrix& m);

/// A nonzero vector c over K with sum_i c_i * row_i(m) = 0, or nullopt when
/// the rows are linearly independent. Deterministic: fraction-free echelon
/// form of the transpose, the first free variable set to 1, the rest to 0.
std::optional<std::vector<RatFunc>> left_kernel_vector(const KMatrix& m);

std::string to_string(const KMatrix& m);

}  // namespace oredet
