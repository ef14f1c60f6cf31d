#include "oredet/cdsk.hpp"

#include <algorithm>
#include <stdexcept>

#include "oredet/errors.hpp"

namespace oredet {

Majorant UniformForm::majorant() const {
    const std::size_t n = Mp.size();
    return {std::vector<std::int64_t>(n, N), std::vector<std::int64_t>(n, h)};
}

namespace {

OreOp pad_entry(const OreOp& a, std::int64_t left, std::int64_t right) {
    OreOp r = a;
    for (std::int64_t k = 0; k < right; ++k) r = r.times_d();
    for (std::int64_t k = 0; k < left; ++k) r = r.d_times();
    return r;
}

OreMatrix apply_pads(const OreMatrix& m, const std::vector<std::int64_t>& row_pads,
                     const std::vector<std::int64_t>& col_pads) {
    OreMatrix r(m.size());
    for (std::size_t i = 0; i < m.size(); ++i)
        for (std::size_t j = 0; j < m.size(); ++j) r(i, j) = pad_entry(m(i, j), row_pads[i], col_pads[j]);
    return r;
}

// Matrix with the given first row followed by rows 1.. of rest.
KMatrix with_first_row(std::vector<RatFunc> first, const KMatrix& rest) {
    KMatrix k = rest;
    k[0] = std::move(first);
    return k;
}

std::vector<RatFunc> combine_rows(const std::vector<Poly>& c, const KMatrix& rows) {
    const std::size_t n = rows.size();
    std::vector<RatFunc> out(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (c[i].is_zero()) continue;
        for (std::size_t j = 0; j < n; ++j) out[j] += RatFunc(c[i]) * rows[i][j];
    }
    return out;
}

std::vector<RatFunc> scaled_row(const Poly& c, const std::vector<RatFunc>& row) {
    std::vector<RatFunc> out(row.size());
    for (std::size_t j = 0; j < row.size(); ++j) out[j] = RatFunc(c) * row[j];
    return out;
}

Poly as_poly(const RatFunc& f, const char* what) {
    if (!f.is_polynomial()) throw InternalError(std::string(what) + " is not a polynomial: " + f.to_string());
    return f.num();
}

OreMatrix build_m2(const OreMatrix& reordered, const std::vector<Poly>& c) {
    OreMatrix m2 = reordered;
    const std::size_t n = reordered.size();
    for (std::size_t j = 0; j < n; ++j) {
        OreOp acc;
        for (std::size_t i = 0; i < n; ++i)
            if (!c[i].is_zero()) acc += reordered(i, j).scaled_left(RatFunc(c[i]));
        m2(0, j) = std::move(acc);
    }
    return m2;
}

Majorant m2_majorant_for(const UniformForm& u) {
    Majorant maj = u.majorant();
    maj.h[0] += 1;
    return maj;
}

Poly summand_det(const Poly& ci, const std::vector<RatFunc>& b_row, const KMatrix& a_rows) {
    return as_poly(det_bareiss(with_first_row(scaled_row(ci, b_row), a_rows)), "summand determinant");
}

}  // namespace

UniformForm pad_to_uniform(const OreMatrix& m, const Majorant& maj) {
    if (!is_majorant(m, maj)) throw PreconditionError("pad_to_uniform: " + maj.to_string() + " is not a majorant");
    OrderValue t = total_order(m);
    if (!t.is_finite() || maj.weight() != t.value())
        throw PreconditionError("pad_to_uniform: " + maj.to_string() + " is not optimal");

    UniformForm u;
    u.N = *std::max_element(maj.N.begin(), maj.N.end());
    u.h = *std::min_element(maj.h.begin(), maj.h.end());
    for (auto v : maj.N) u.col_pads.push_back(u.N - v);
    for (auto v : maj.h) u.row_pads.push_back(v - u.h);
    u.Mp = apply_pads(m, u.row_pads, u.col_pads);
    return u;
}

LeadingSplit leading_split(const UniformForm& u) {
    const std::size_t n = u.Mp.size();
    LeadingSplit s{zero_kmatrix(n, n), zero_kmatrix(n, n)};
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            s.A[i][j] = u.Mp(i, j).coeff_at(u.order());
            s.B[i][j] = u.Mp(i, j).coeff_at(u.order() - 1);
        }
    return s;
}

RelationVector kernel_relation(const KMatrix& a) {
    auto kernel = left_kernel_vector(a);
    if (!kernel) throw NoKernel();
    PrimitiveVector pv = content_and_primitive(*kernel);
    RelationVector r{std::move(pv.entries), 0};
    while (r.c[r.pivot].is_zero()) ++r.pivot;
    return r;
}

Dd1Certificate cdsk_reduce(const OreMatrix& m) {
    if (!m.in_subring()) throw PreconditionError("cdsk_reduce: entries must have polynomial coefficients");
    Dd1Certificate cert;
    cert.input = m;
    cert.det = dieudonne_det(m);
    if (cert.det.is_zero()) throw ZeroDeterminant();
    OrderValue t = total_order(m);
    if (!t.is_finite()) throw InternalError("nonzero determinant with tord = -inf");
    cert.tord = t.value();
    const std::int64_t dd = cert.tord - cert.det.d.value();
    if (dd != 1) throw PreconditionError("cdsk_reduce requires dd = 1, got dd = " + std::to_string(dd));

    const std::size_t n = m.size();
    cert.majorant = optimal_majorant(m);
    cert.uniform = pad_to_uniform(m, cert.majorant);
    const UniformForm& u = cert.uniform;
    const std::int64_t k = u.order();

    std::int64_t pads = 0;
    for (auto p : u.col_pads) pads += p;
    for (auto p : u.row_pads) pads += p;
    DieudonneDet padded = dieudonne_det(u.Mp);
    if (padded.det1 != cert.det.det1 || padded.d != cert.det.d + OrderValue(pads))
        throw InternalError("padding changed det_1 or shifted d unexpectedly");
    if (total_order(u.Mp) != OrderValue(static_cast<std::int64_t>(n) * k))
        throw InternalError("padded matrix does not have tord n(N-h)");
    for (std::size_t i = 0; i < n; ++i) {
        bool attains = false;
        for (std::size_t j = 0; j < n; ++j) attains = attains || u.Mp(i, j).ord() == OrderValue(k);
        if (!attains) throw InternalError("row " + std::to_string(i) + " of the padded matrix never reaches order N-h");
    }

    cert.split = leading_split(u);
    try {
        cert.relation = kernel_relation(cert.split.A);
    } catch (const NoKernel&) {
        throw InternalError("leading matrix of a degenerate matrix is nonsingular");
    }

    // Bring the pivot row to the top so that c[0] != 0.
    const std::size_t p = cert.relation.pivot;
    cert.swapped_row = p;
    cert.swap_sign = p == 0 ? 1 : -1;
    OreMatrix reordered = u.Mp;
    reordered.swap_rows(0, p);
    KMatrix A = cert.split.A, B = cert.split.B;
    std::swap(A[0], A[p]);
    std::swap(B[0], B[p]);
    cert.c = cert.relation.c;
    std::swap(cert.c[0], cert.c[p]);
    const Poly& c1 = cert.c[0];

    cert.m2 = build_m2(reordered, cert.c);
    cert.m2_majorant = m2_majorant_for(u);
    if (!is_majorant(cert.m2, cert.m2_majorant))
        throw InternalError("(N..N; h+1, h..h) is not a majorant of M''");
    if (total_order(cert.m2) != OrderValue(cert.m2_majorant.weight()))
        throw InternalError("(N..N; h+1, h..h) is not optimal for M''");

    cert.m2_char = with_first_row(combine_rows(cert.c, B), A);
    if (characteristic_matrix(cert.m2, cert.m2_majorant).C != cert.m2_char)
        throw InternalError("characteristic matrix of M'' differs from (sum c_i B_i, A_2..A_n)");

    Poly total;
    for (std::size_t i = 0; i < n; ++i) {
        Poly s = summand_det(cert.c[i], B[i], A);
        auto [q, r] = divmod(s, c1);
        if (!r.is_zero()) throw InternalError("summand " + std::to_string(i) + " is not divisible by c_1");
        total += s;
        cert.summands.push_back(std::move(s));
        cert.summand_quotients.push_back(std::move(q));
    }
    cert.char_det = total;
    if (as_poly(det_bareiss(cert.m2_char), "det M''_char") != total)
        throw InternalError("first-row linearity decomposition does not sum to det M''_char");

    DieudonneDet det_m2 = dieudonne_det(cert.m2);
    const RatFunc expected_m2 = RatFunc(c1) * cert.det.det1 * RatFunc(cert.swap_sign);
    if (det_m2.det1 != expected_m2 || det_m2.d != OrderValue(cert.m2_majorant.weight()))
        throw InternalError("det M'' differs from c_1 * det M'");
    if (RatFunc(total) != expected_m2) throw InternalError("det M''_char differs from c_1 * det_1 M");

    Poly d_reordered = exact_div(total, c1);
    cert.D = cert.swap_sign < 0 ? -d_reordered : d_reordered;
    if (RatFunc(cert.D) != cert.det.det1) throw InternalError("D differs from the independently computed det_1");
    return cert;
}

std::vector<std::string> verify_certificate(const Dd1Certificate& cert) {
    std::vector<std::string> fails;
    auto expect = [&](bool ok, const char* what) {
        if (!ok) fails.emplace_back(what);
    };
    const std::size_t n = cert.input.size();
    const UniformForm& u = cert.uniform;
    try {
        expect(is_majorant(cert.input, cert.majorant), "majorant is not a majorant of the input");
        expect(cert.majorant.weight() == cert.tord, "majorant weight differs from tord");
        expect(cert.tord - cert.det.d.value() == 1, "recorded dd is not 1");
        bool pads_ok = u.col_pads.size() == n && u.row_pads.size() == n;
        for (std::size_t j = 0; pads_ok && j < n; ++j)
            pads_ok = u.col_pads[j] == u.N - cert.majorant.N[j] && u.row_pads[j] == cert.majorant.h[j] - u.h;
        expect(pads_ok, "pad counts do not match the majorant");
        if (!pads_ok) return fails;
        expect(apply_pads(cert.input, u.row_pads, u.col_pads) == u.Mp, "padding replay differs");

        LeadingSplit s = leading_split(u);
        expect(s.A == cert.split.A && s.B == cert.split.B, "leading split differs");

        const auto& c = cert.relation.c;
        bool nonzero = std::any_of(c.begin(), c.end(), [](const Poly& p) { return !p.is_zero(); });
        expect(nonzero, "relation vector is zero");
        expect(cert.relation.pivot < n && !c[cert.relation.pivot].is_zero(), "relation pivot entry is zero");
        bool relation_ok = true;
        for (const auto& f : combine_rows(c, cert.split.A)) relation_ok = relation_ok && f.is_zero();
        expect(relation_ok, "sum c_i A_i != 0");

        const std::size_t p = cert.swapped_row;
        std::vector<Poly> c_re = c;
        std::swap(c_re[0], c_re[p]);
        expect(c_re == cert.c && cert.swap_sign == (p == 0 ? 1 : -1), "reordering inconsistent");
        expect(!cert.c[0].is_zero(), "c_1 is zero");

        OreMatrix reordered = u.Mp;
        reordered.swap_rows(0, p);
        expect(build_m2(reordered, cert.c) == cert.m2, "M'' replay differs");
        expect(cert.m2_majorant == m2_majorant_for(u), "M'' majorant is not (N..N; h+1, h..h)");
        expect(is_majorant(cert.m2, cert.m2_majorant), "M'' majorant fails the order bounds");

        KMatrix A = cert.split.A, B = cert.split.B;
        std::swap(A[0], A[p]);
        std::swap(B[0], B[p]);
        expect(with_first_row(combine_rows(cert.c, B), A) == cert.m2_char, "M''_char differs from its row form");
        expect(characteristic_matrix(cert.m2, cert.m2_majorant).C == cert.m2_char, "M''_char is not the characteristic matrix");

        Poly total;
        bool summands_ok = cert.summands.size() == n && cert.summand_quotients.size() == n;
        for (std::size_t i = 0; summands_ok && i < n; ++i) {
            summands_ok = summand_det(cert.c[i], B[i], A) == cert.summands[i] &&
                          cert.c[0] * cert.summand_quotients[i] == cert.summands[i];
            total += cert.summands[i];
        }
        expect(summands_ok, "summand determinants or their c_1 quotients are wrong");
        expect(total == cert.char_det, "summands do not add up to det M''_char");
        expect(RatFunc(cert.char_det) == det_bareiss(cert.m2_char), "det M''_char recomputation differs");
        Poly signed_d = cert.swap_sign < 0 ? -cert.D : cert.D;
        expect(cert.c[0] * signed_d == cert.char_det, "det M''_char != c_1 * D");
        expect(RatFunc(cert.D) == cert.det.det1, "D differs from det_1");
    } catch (const std::exception& e) {
        fails.emplace_back(std::string("malformed certificate: ") + e.what());
    }
    return fails;
}

MembershipReport membership_report(const OreMatrix& m) {
    MembershipReport r;
    r.det = dieudonne_det(m);
    if (r.det.is_zero()) throw ZeroDeterminant();
    OrderValue t = total_order(m);
    if (!t.is_finite()) throw InternalError("nonzero determinant with tord = -inf");
    r.dd = t.value() - r.det.d.value();
    r.in_subring = r.det.det1.is_polynomial();
    return r;
}

bool verify_membership(const OreMatrix& m) { return membership_report(m).in_subring; }

}  // namespace oredet
