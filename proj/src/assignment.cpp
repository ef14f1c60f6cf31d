#include "oredet/assignment.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace oredet {

std::optional<Assignment> max_weight_assignment(const WeightMatrix& w) {
    const std::size_t n = w.size();
    for (const auto& row : w)
        if (row.size() != n) throw std::invalid_argument("max_weight_assignment: matrix is not square");
    if (n == 0) return Assignment{};

    // Minimise cost = -weight. Forbidden edges get a cost larger than any
    // perfect matching made of allowed edges can reach in absolute value.
    std::int64_t span = 1;
    for (const auto& row : w)
        for (const auto& e : row)
            if (e) span = std::max(span, std::abs(*e) + 1);
    const std::int64_t forbidden = span * static_cast<std::int64_t>(2 * n + 2);
    auto cost = [&](std::size_t i, std::size_t j) -> std::int64_t {
        const auto& e = w[i - 1][j - 1];
        return e ? -*e : forbidden;
    };

    // 1-based arrays; row/column 0 is the virtual start of each augmentation.
    constexpr std::int64_t inf = std::numeric_limits<std::int64_t>::max() / 4;
    std::vector<std::int64_t> u(n + 1, 0), v(n + 1, 0);
    std::vector<std::size_t> match(n + 1, 0), way(n + 1, 0);
    for (std::size_t i = 1; i <= n; ++i) {
        match[0] = i;
        std::size_t j0 = 0;
        std::vector<std::int64_t> minv(n + 1, inf);
        std::vector<char> used(n + 1, 0);
        do {
            used[j0] = 1;
            std::size_t i0 = match[j0], j1 = 0;
            std::int64_t delta = inf;
            for (std::size_t j = 1; j <= n; ++j) {
                if (used[j]) continue;
                std::int64_t cur = cost(i0, j) - u[i0] - v[j];
                if (cur < minv[j]) {
                    minv[j] = cur;
                    way[j] = j0;
                }
                if (minv[j] < delta) {
                    delta = minv[j];
                    j1 = j;
                }
            }
            for (std::size_t j = 0; j <= n; ++j) {
                if (used[j]) {
                    u[match[j]] += delta;
                    v[j] -= delta;
                } else {
                    minv[j] -= delta;
                }
            }
            j0 = j1;
        } while (match[j0] != 0);
        do {
            std::size_t j1 = way[j0];
            match[j0] = match[j1];
            j0 = j1;
        } while (j0 != 0);
    }

    Assignment a;
    a.col_of_row.assign(n, 0);
    for (std::size_t j = 1; j <= n; ++j) {
        std::size_t i = match[j];
        if (!w[i - 1][j - 1]) return std::nullopt;
        a.col_of_row[i - 1] = j - 1;
        a.weight += *w[i - 1][j - 1];
    }
    // Minimisation duals satisfy u_i + v_j <= cost_ij; negate for the max form.
    a.row_pot.resize(n);
    a.col_pot.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        a.row_pot[i] = -u[i + 1];
        a.col_pot[i] = -v[i + 1];
    }
    return a;
}

}  // namespace oredet
