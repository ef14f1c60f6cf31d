#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace oredet {

// Edge weight, nullopt = forbidden edge.
using Weight = std::optional<std::int64_t>;
using WeightMatrix = std::vector<std::vector<Weight>>;

struct Assignment {
    std::int64_t weight = 0;
    std::vector<std::size_t> col_of_row;  // a permutation
    // Dual certificate: row_pot[i] + col_pot[j] >= w_ij on allowed edges,
    // with equality on the assignment, so sum of potentials == weight.
    std::vector<std::int64_t> row_pot;
    std::vector<std::int64_t> col_pot;
};

/// Maximum-weight perfect matching on a square weight matrix by the
/// Hungarian method (shortest augmenting paths with potentials), O(n^3).
/// Returns nullopt when every perfect matching uses a forbidden edge.
std::optional<Assignment> max_weight_assignment(const WeightMatrix& w);

}  // namespace oredet
