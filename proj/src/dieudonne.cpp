#include "oredet/dieudonne.hpp"

#include <stdexcept>

namespace oredet {

std::string DieudonneDet::to_string() const {
    return "det_1 = " + det1.to_string() + ", d = " + d.to_string();
}

bool is_upper_triangular(const OreMatrix& m) {
    for (std::size_t i = 1; i < m.size(); ++i)
        for (std::size_t j = 0; j < i; ++j)
            if (!m(i, j).is_zero()) return false;
    return true;
}

Triangularization triangularize(const OreMatrix& m) {
    Triangularization t{m, 1, {}};
    OreMatrix& a = t.upper;
    const std::size_t n = a.size();

    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;  // n: no nonzero entry in this column
        for (;;) {
            pivot = n;
            std::size_t nonzero = 0;
            for (std::size_t r = col; r < n; ++r) {
                const OreOp& e = a(r, col);
                if (e.is_zero()) continue;
                ++nonzero;
                if (pivot == n || e.ord() < a(pivot, col).ord()) pivot = r;
            }
            if (nonzero <= 1) break;
            for (std::size_t r = col; r < n; ++r) {
                if (r == pivot || a(r, col).is_zero()) continue;
                OreOp q = right_divmod(a(r, col), a(pivot, col)).quotient;
                rowop::AddMul op{r, pivot, -q};
                apply_row_op_in_place(a, op);
                t.transcript.emplace_back(std::move(op));
            }
        }
        if (pivot != n && pivot != col) {
            rowop::Swap op{col, pivot};
            apply_row_op_in_place(a, op);
            t.transcript.emplace_back(op);
            t.sign = -t.sign;
        }
    }
    return t;
}

DieudonneDet triangular_det(const OreMatrix& upper) {
    if (!is_upper_triangular(upper)) throw std::invalid_argument("triangular_det: matrix is not upper triangular");
    RatFunc det1(1);
    OrderValue d = 0;
    for (std::size_t i = 0; i < upper.size(); ++i) {
        const OreOp& e = upper(i, i);
        if (e.is_zero()) return {RatFunc(), OrderValue::neg_inf()};
        det1 *= e.leading();
        d += e.ord();
    }
    return {det1, d};
}

DieudonneDet dieudonne_det_euclidean(const OreMatrix& m) {
    Triangularization t = triangularize(m);
    DieudonneDet det = triangular_det(t.upper);
    if (t.sign < 0) det.det1 = -det.det1;
    return det;
}

namespace {

// Rows of the working matrix, kept in Q[x][d] with content 1. Every scaling
// of a row by c in K multiplies the determinant by c; `scale` is the product
// of those factors.
struct FractionFree {
    std::vector<std::vector<OreOp>> rows;
    RatFunc scale{1};
    int sign = 1;

    void normalize(std::size_t r) {
        std::vector<RatFunc> flat;
        for (const auto& e : rows[r])
            for (const auto& f : e.coeffs()) flat.push_back(f);
        if (flat.empty()) return;
        PrimitiveVector pv = content_and_primitive(flat);
        if (pv.scale == RatFunc(1)) return;
        std::size_t k = 0;
        for (auto& e : rows[r]) {
            std::vector<RatFunc> c(e.coeffs().size());
            for (auto& f : c) f = RatFunc(std::move(pv.entries[k++]));
            e = OreOp(std::move(c));
        }
        scale *= pv.scale;
    }

    // Lowers ord rows[r][col] below ord rows[p][col] by pseudo-division:
    // row r <- beta * row r - alpha * d^k * row p.
    void reduce(std::size_t r, std::size_t p, std::size_t col) {
        const std::size_t n = rows.size();
        std::int64_t target = rows[p][col].ord().value();
        while (!rows[r][col].is_zero() && rows[r][col].ord().value() >= target) {
            std::int64_t k = rows[r][col].ord().value() - target;
            Poly alpha = rows[r][col].leading().num();
            Poly beta = rows[p][col].leading().num();
            Poly g = gcd(alpha, beta);
            alpha = exact_div(alpha, g);
            beta = exact_div(beta, g);
            for (std::size_t j = col; j < n; ++j) {
                OreOp shifted = rows[p][j];
                for (std::int64_t i = 0; i < k; ++i) shifted = shifted.d_times();
                rows[r][j] = rows[r][j].scaled_left(RatFunc(beta)) - shifted.scaled_left(RatFunc(alpha));
            }
            if (!beta.is_one()) scale *= RatFunc(beta);
        }
        normalize(r);
    }
};

}  // namespace

DieudonneDet dieudonne_det(const OreMatrix& m) {
    const std::size_t n = m.size();
    FractionFree ff;
    ff.rows.assign(n, std::vector<OreOp>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) ff.rows[i][j] = m(i, j);
    for (std::size_t i = 0; i < n; ++i) ff.normalize(i);

    RatFunc det1(1);
    OrderValue d = 0;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = n;
        for (;;) {
            pivot = n;
            std::size_t nonzero = 0;
            for (std::size_t r = col; r < n; ++r) {
                const OreOp& e = ff.rows[r][col];
                if (e.is_zero()) continue;
                ++nonzero;
                if (pivot == n || e.ord() < ff.rows[pivot][col].ord()) pivot = r;
            }
            if (nonzero <= 1) break;
            for (std::size_t r = col; r < n; ++r)
                if (r != pivot && !ff.rows[r][col].is_zero()) ff.reduce(r, pivot, col);
        }
        if (pivot == n) return {RatFunc(), OrderValue::neg_inf()};
        if (pivot != col) {
            std::swap(ff.rows[pivot], ff.rows[col]);
            ff.sign = -ff.sign;
        }
        det1 *= ff.rows[col][col].leading();
        d += ff.rows[col][col].ord();
    }
    det1 = det1 / ff.scale;
    if (ff.sign < 0) det1 = -det1;
    return {det1, d};
}

}  // namespace oredet
