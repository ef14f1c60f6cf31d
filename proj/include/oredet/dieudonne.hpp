#pragma once

#include <string>

#include "oredet/ore_matrix.hpp"

namespace oredet {

/// det A = det1 * lambda^d with lambda formal. det1 = 0 iff d = -infinity.
struct DieudonneDet {
    RatFunc det1;
    OrderValue d;

    bool is_zero() const { return det1.is_zero(); }
    friend bool operator==(const DieudonneDet&, const DieudonneDet&) = default;
    std::string to_string() const;
};

struct Triangularization {
    OreMatrix upper;
    int sign = 1;  // det(upper) = sign * det(input)
    RowOpTranscript transcript;  // swaps and addmuls only
};

bool is_upper_triangular(const OreMatrix& m);

/// Row reduction to upper triangular form using swaps and addmuls only.
/// Per column, the minimal-order nonzero entry at or below the diagonal
/// (lowest row on ties) reduces the others by right division until one
/// nonzero entry is left; that entry is then swapped onto the diagonal.
Triangularization triangularize(const OreMatrix& m);

/// Product/sum rule on an upper triangular matrix.
DieudonneDet triangular_det(const OreMatrix& upper);

/// Fraction-free elimination over Q[x][d]: rows are scaled by elements of K
/// (tracked and divided out at the end) so no rational-function quotients
/// appear.
DieudonneDet dieudonne_det(const OreMatrix& m);
/// triangular_det(triangularize(m)) with the sign applied. Same value,
/// usually much slower because right-division quotients grow.
DieudonneDet dieudonne_det_euclidean(const OreMatrix& m);

}  // namespace oredet
