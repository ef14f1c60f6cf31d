#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "oredet/majorant.hpp"

namespace oredet {

/// M padded so that (N,...,N; h,...,h) is an optimal majorant. Column j was
/// right-multiplied by d col_pads[j] = N - N_j times and row i
/// left-multiplied by d row_pads[i] = h_i - h times.
struct UniformForm {
    OreMatrix Mp;
    std::int64_t N = 0;
    std::int64_t h = 0;
    std::vector<std::int64_t> col_pads;
    std::vector<std::int64_t> row_pads;

    std::int64_t order() const { return N - h; }
    Majorant majorant() const;
};

/// Throws PreconditionError unless maj is an optimal majorant of m.
UniformForm pad_to_uniform(const OreMatrix& m, const Majorant& maj);

/// Coefficient matrices of d^(N-h) (A) and d^(N-h-1) (B).
struct LeadingSplit {
    KMatrix A;
    KMatrix B;
};
LeadingSplit leading_split(const UniformForm& u);

/// sum_i c_i * A_i = 0 over the rows A_i, c with entries in Q[x], integer
/// coefficients of overall content 1, c[pivot] the first nonzero entry and
/// with a positive leading coefficient.
struct RelationVector {
    std::vector<Poly> c;
    std::size_t pivot = 0;
};

/// Throws NoKernel when the rows of a are linearly independent over K.
RelationVector kernel_relation(const KMatrix& a);

/// Transcript of the dd = 1 reduction. Indices refer to the reordered
/// matrix, in which the relation's pivot row has been swapped to row 0.
struct Dd1Certificate {
    OreMatrix input;
    DieudonneDet det;  // computed independently by elimination
    std::int64_t tord = 0;
    Majorant majorant;
    UniformForm uniform;
    LeadingSplit split;  // of uniform.Mp, before reordering
    RelationVector relation;  // for the rows of split.A, before reordering
    std::size_t swapped_row = 0;  // row exchanged with row 0 (0: none)
    int swap_sign = 1;
    std::vector<Poly> c;  // relation in reordered indexing; c[0] != 0
    OreMatrix m2;  // row 0 <- sum_i c_i * row_i of the reordered M'
    Majorant m2_majorant;  // (N,...,N; h+1, h, ..., h)
    KMatrix m2_char;  // rows (sum_i c_i B_i, A_2, ..., A_n)
    std::vector<Poly> summands;  // det of m2_char with row 0 replaced by c_i B_i
    std::vector<Poly> summand_quotients;  // summands[i] / c[0]
    Poly char_det;  // det m2_char = sum of summands = c[0] * swap_sign * D
    Poly D;  // det_1 of the input, as an element of Q[x]
};

/// Runs the reduction and certifies det_1 M in Q[x]. Throws
/// PreconditionError when M has entries outside Q[x][d] or dd(M) != 1,
/// ZeroDeterminant when det M = 0, InternalError when any step disagrees
/// with an independent recomputation.
Dd1Certificate cdsk_reduce(const OreMatrix& m);

/// Re-checks a certificate from its stored data: padding replay, the
/// leading split, the relation, the M'' construction, the summand
/// identities and divisibility, and det_1 = D. Returns the list of failed
/// checks (empty when valid).
std::vector<std::string> verify_certificate(const Dd1Certificate& cert);

struct MembershipReport {
    DieudonneDet det;
    std::int64_t dd = 0;
    bool in_subring = false;
};

/// Throws ZeroDeterminant when det m = 0.
MembershipReport membership_report(const OreMatrix& m);
/// det_1 m in Q[x]?
bool verify_membership(const OreMatrix& m);

}  // namespace oredet
