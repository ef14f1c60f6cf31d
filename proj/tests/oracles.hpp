#pragma once

// Independent reference computations. None of these share code paths with
// the library routines they are compared against.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "oredet/linalg.hpp"
#include "oredet/majorant.hpp"

namespace oredet::testing {

/// Laplace expansion along the first row.
inline RatFunc cofactor_det(const KMatrix& m) {
    const std::size_t n = m.size();
    if (n == 0) return RatFunc(1);
    if (n == 1) return m[0][0];
    RatFunc acc;
    for (std::size_t j = 0; j < n; ++j) {
        if (m[0][j].is_zero()) continue;
        KMatrix minor;
        for (std::size_t i = 1; i < n; ++i) {
            std::vector<RatFunc> row;
            for (std::size_t k = 0; k < n; ++k)
                if (k != j) row.push_back(m[i][k]);
            minor.push_back(std::move(row));
        }
        RatFunc term = m[0][j] * cofactor_det(minor);
        acc = (j % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

/// Leibniz sum over permutations, a second determinant route for tiny n.
inline RatFunc permutation_det(const KMatrix& m) {
    const std::size_t n = m.size();
    std::vector<std::size_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    RatFunc acc;
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                if (p[i] > p[j]) ++inversions;
        RatFunc term(1);
        for (std::size_t i = 0; i < n && !term.is_zero(); ++i) term *= m[i][p[i]];
        acc = inversions % 2 ? acc - term : acc + term;
    } while (std::next_permutation(p.begin(), p.end()));
    return acc;
}

/// Every optimal majorant with h in [0, bound]^n, found by enumeration:
/// for a given h the smallest admissible N_j is max_i(ord A_ij + h_i), and a
/// majorant is optimal iff its weight equals the brute-force total order.
inline std::vector<Majorant> enumerate_optimal_majorants(const OreMatrix& m, std::int64_t bound) {
    const std::size_t n = m.size();
    const OrderValue tord = tord_bruteforce(m);
    std::vector<Majorant> found;
    std::vector<std::int64_t> h(n, 0);
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == n) {
            Majorant maj{std::vector<std::int64_t>(n), h};
            for (std::size_t j = 0; j < n; ++j) {
                OrderValue best = OrderValue::neg_inf();
                for (std::size_t r = 0; r < n; ++r) best = std::max(best, m(r, j).ord() + OrderValue(h[r]));
                // An all-zero column admits any N_j; the least useful choice is irrelevant
                // because tord is then -inf and nothing is optimal.
                maj.N[j] = best.is_finite() ? best.value() : 0;
            }
            if (tord.is_finite() && maj.weight() == tord.value()) found.push_back(maj);
            return;
        }
        for (std::int64_t v = 0; v <= bound; ++v) {
            h[i] = v;
            rec(i + 1);
        }
    };
    rec(0);
    return found;
}

}  // namespace oredet::testing
