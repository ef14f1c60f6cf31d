#include "oredet/majorant.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "oredet/errors.hpp"

namespace oredet {

std::int64_t Majorant::weight() const {
    return std::accumulate(N.begin(), N.end(), std::int64_t{0}) - std::accumulate(h.begin(), h.end(), std::int64_t{0});
}

Majorant Majorant::shifted(std::int64_t k) const {
    Majorant r = *this;
    for (auto& v : r.N) v += k;
    for (auto& v : r.h) v += k;
    return r;
}

std::string Majorant::to_string() const {
    std::ostringstream os;
    os << "N=(";
    for (std::size_t i = 0; i < N.size(); ++i) os << (i ? "," : "") << N[i];
    os << "), h=(";
    for (std::size_t i = 0; i < h.size(); ++i) os << (i ? "," : "") << h[i];
    os << ')';
    return os.str();
}

WeightMatrix order_weights(const OreMatrix& m) {
    const std::size_t n = m.size();
    WeightMatrix w(n, std::vector<Weight>(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            OrderValue o = m(i, j).ord();
            if (o.is_finite()) w[i][j] = o.value();
        }
    return w;
}

OrderValue total_order(const OreMatrix& m) {
    auto a = max_weight_assignment(order_weights(m));
    if (!a) return OrderValue::neg_inf();
    return a->weight;
}

OrderValue tord_bruteforce(const OreMatrix& m) {
    const std::size_t n = m.size();
    if (n > 8) throw PreconditionError("tord_bruteforce: n = " + std::to_string(n) + " exceeds 8");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    OrderValue best = OrderValue::neg_inf();
    do {
        OrderValue s = 0;
        for (std::size_t i = 0; i < n; ++i) s += m(i, perm[i]).ord();
        best = std::max(best, s);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

bool is_majorant(const OreMatrix& m, const Majorant& maj) {
    const std::size_t n = m.size();
    if (maj.N.size() != n || maj.h.size() != n)
        throw std::invalid_argument("majorant length does not match matrix size " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (m(i, j).ord() > OrderValue(maj.N[j] - maj.h[i])) return false;
    return true;
}

Majorant optimal_majorant(const OreMatrix& m) {
    const std::size_t n = m.size();
    const WeightMatrix w = order_weights(m);
    auto a = max_weight_assignment(w);
    if (!a) throw PreconditionError("no optimal majorant: total order is -inf (determinant is zero)");

    // The solver's own potentials already form an optimal majorant.
    Majorant dual;
    dual.N = a->col_pot;
    dual.h.resize(n);
    for (std::size_t i = 0; i < n; ++i) dual.h[i] = -a->row_pot[i];
    if (!is_majorant(m, dual) || dual.weight() != a->weight)
        throw InternalError("assignment potentials are not an optimal majorant");

    // Optimal duals are exactly those tight on the optimal assignment:
    // N_j = w(k, j) + h_k with k matched to j. Feasibility on edge (i, j)
    // then reads h_k >= h_i + w(i, j) - w(k, j); iterate to the least
    // solution with h >= 0.
    std::vector<std::size_t> row_of_col(n);
    for (std::size_t i = 0; i < n; ++i) row_of_col[a->col_of_row[i]] = i;
    std::vector<std::int64_t> h(n, 0);
    for (std::size_t round = 0;; ++round) {
        bool changed = false;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                if (!w[i][j]) continue;
                std::size_t k = row_of_col[j];
                std::int64_t need = h[i] + *w[i][j] - *w[k][j];
                if (need > h[k]) {
                    h[k] = need;
                    changed = true;
                }
            }
        if (!changed) break;
        if (round > n) throw InternalError("positive cycle in majorant constraints: assignment not optimal");
    }

    Majorant maj;
    maj.h = h;
    maj.N.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
        std::size_t k = row_of_col[j];
        maj.N[j] = *w[k][j] + h[k];
    }
    if (!is_majorant(m, maj) || maj.weight() != a->weight)
        throw InternalError("canonical majorant failed verification");
    return maj;
}

CharMatrix characteristic_matrix(const OreMatrix& m, const Majorant& maj) {
    if (!is_majorant(m, maj)) throw PreconditionError("characteristic_matrix: " + maj.to_string() + " is not a majorant");
    const std::size_t n = m.size();
    CharMatrix c{zero_kmatrix(n, n), maj.weight()};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) c.C[i][j] = m(i, j).coeff_at(maj.N[j] - maj.h[i]);
    return c;
}

CharDet char_det(const OreMatrix& m, const Majorant& maj) {
    CharMatrix c = characteristic_matrix(m, maj);
    return {det_bareiss(c.C), c.total_power};
}

OrderValue degeneracy_degree(const OreMatrix& m) {
    DieudonneDet det = dieudonne_det(m);
    if (det.is_zero()) throw ZeroDeterminant("degeneracy degree undefined: determinant is zero");
    OrderValue t = total_order(m);
    if (!t.is_finite()) throw InternalError("nonzero determinant with tord = -inf");
    return t.value() - det.d.value();
}

std::vector<Majorant> perturbed_majorants(const Majorant& optimal) {
    std::vector<Majorant> out;
    for (std::size_t j = 0; j < optimal.N.size(); ++j) {
        Majorant p = optimal;
        ++p.N[j];
        out.push_back(std::move(p));
    }
    return out;
}

CharTheoremReport check_char_theorem(const OreMatrix& m, const std::vector<Majorant>& sampled) {
    CharTheoremReport r;
    r.det = dieudonne_det(m);
    if (r.det.is_zero()) throw ZeroDeterminant();
    r.tord = total_order(m);
    if (!r.tord.is_finite()) throw InternalError("nonzero determinant with tord = -inf");
    r.dd = r.tord.value() - r.det.d.value();
    r.clause[0] = r.dd >= 0;

    r.optimal = optimal_majorant(m);
    r.clause[1] = is_majorant(m, r.optimal) && r.optimal.weight() == r.tord.value();
    r.clause[2] = true;
    r.clause[3] = true;

    std::vector<Majorant> all{r.optimal};
    all.insert(all.end(), sampled.begin(), sampled.end());
    for (const auto& maj : all) {
        if (!is_majorant(m, maj)) throw PreconditionError("sampled " + maj.to_string() + " is not a majorant");
        MajorantCheck c{maj, maj.weight() == r.tord.value(), char_det(m, maj), false};
        if (r.dd >= 1) {
            c.passed = c.det.coeff.is_zero();
            r.clause[2] = r.clause[2] && c.passed;
        } else if (r.dd == 0) {
            c.passed = c.optimal ? (c.det.coeff == r.det.det1 && c.det.power == r.det.d.value()) : c.det.coeff.is_zero();
            r.clause[3] = r.clause[3] && c.passed;
        }
        r.samples.push_back(std::move(c));
    }
    return r;
}

}  // namespace oredet
