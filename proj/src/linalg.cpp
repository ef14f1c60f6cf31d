#include "oredet/linalg.hpp"

#include <sstream>
#include <stdexcept>

namespace oredet {

KMatrix zero_kmatrix(std::size_t rows, std::size_t cols) {
    return KMatrix(rows, std::vector<RatFunc>(cols));
}

KMatrix identity_kmatrix(std::size_t n) {
    KMatrix m = zero_kmatrix(n, n);
    for (std::size_t i = 0; i < n; ++i) m[i][i] = RatFunc(1);
    return m;
}

bool is_square(const KMatrix& m) {
    for (const auto& row : m)
        if (row.size() != m.size()) return false;
    return true;
}

RatFunc det_bareiss(const KMatrix& input) {
    if (!is_square(input)) throw std::invalid_argument("det_bareiss: matrix is not square");
    const std::size_t n = input.size();
    if (n == 0) return RatFunc(1);
    KMatrix a = input;
    RatFunc prev(1);
    int sign = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k].is_zero()) {
            std::size_t p = k + 1;
            while (p < n && a[p][k].is_zero()) ++p;
            if (p == n) return {};
            std::swap(a[k], a[p]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            a[i][k] = RatFunc();
        }
        prev = a[k][k];
    }
    RatFunc d = a[n - 1][n - 1];
    return sign < 0 ? -d : d;
}

std::optional<std::vector<RatFunc>> left_kernel_vector(const KMatrix& m) {
    if (!is_square(m)) throw std::invalid_argument("left_kernel_vector: matrix is not square");
    const std::size_t n = m.size();
    if (n == 0) return std::nullopt;

    // Rows of t are the columns of m; unknowns are the row coefficients c_i.
    KMatrix t = zero_kmatrix(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) t[j][i] = m[i][j];

    std::vector<std::size_t> pivot_cols;
    std::size_t row = 0;
    RatFunc prev(1);
    for (std::size_t col = 0; col < n && row < n; ++col) {
        std::size_t p = row;
        while (p < n && t[p][col].is_zero()) ++p;
        if (p == n) continue;
        std::swap(t[row], t[p]);
        for (std::size_t i = row + 1; i < n; ++i) {
            for (std::size_t j = col + 1; j < n; ++j)
                t[i][j] = (t[i][j] * t[row][col] - t[i][col] * t[row][j]) / prev;
            t[i][col] = RatFunc();
        }
        prev = t[row][col];
        pivot_cols.push_back(col);
        ++row;
    }
    if (pivot_cols.size() == n) return std::nullopt;

    std::size_t free_col = 0;
    for (std::size_t pc : pivot_cols) {
        if (pc != free_col) break;
        ++free_col;
    }

    std::vector<RatFunc> c(n);
    c[free_col] = RatFunc(1);
    for (std::size_t r = pivot_cols.size(); r-- > 0;) {
        std::size_t pc = pivot_cols[r];
        RatFunc acc;
        for (std::size_t j = pc + 1; j < n; ++j)
            if (!c[j].is_zero()) acc += t[r][j] * c[j];
        c[pc] = -acc / t[r][pc];
    }
    return c;
}

std::string to_string(const KMatrix& m) {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < m.size(); ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < m[i].size(); ++j) os << (j ? ", " : "") << m[i][j];
        os << ']';
    }
    os << ']';
    return os.str();
}

}  // namespace oredet
