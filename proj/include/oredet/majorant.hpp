#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "oredet/assignment.hpp"
#include "oredet/dieudonne.hpp"
#include "oredet/linalg.hpp"

namespace oredet {

/// Integers (N_1..N_n, h_1..h_n) with ord(A_ij) <= N_j - h_i.
struct Majorant {
    std::vector<std::int64_t> N;
    std::vector<std::int64_t> h;

    /// sum(N) - sum(h); bounded below by tord for every majorant.
    std::int64_t weight() const;
    /// Both vectors shifted by k.
    Majorant shifted(std::int64_t k) const;
    friend bool operator==(const Majorant&, const Majorant&) = default;
    std::string to_string() const;
};

/// Entry orders as assignment weights, zero entries forbidden.
WeightMatrix order_weights(const OreMatrix& m);

/// max over permutations of the summed entry orders, via max_weight_assignment.
OrderValue total_order(const OreMatrix& m);

/// The same quantity by enumerating all n! permutations. Oracle only;
/// throws PreconditionError for n > 8.
OrderValue tord_bruteforce(const OreMatrix& m);

/// Throws std::invalid_argument on a length mismatch.
bool is_majorant(const OreMatrix& m, const Majorant& maj);

/// Optimal majorant from the dual potentials of the maximum-weight
/// assignment, canonicalised to the pointwise-least h >= 0 among all optimal
/// duals (so min(h) = 0). Throws PreconditionError when tord = -inf.
Majorant optimal_majorant(const OreMatrix& m);

/// Characteristic matrix entries C_ij = coefficient of d^(N_j - h_i) in
/// A_ij; the full matrix is C_ij * lambda^(N_j - h_i).
struct CharMatrix {
    KMatrix C;
    std::int64_t total_power = 0;
};

/// Throws PreconditionError if maj is not a majorant of m.
CharMatrix characteristic_matrix(const OreMatrix& m, const Majorant& maj);

/// det of the characteristic matrix = coeff * lambda^power: every
/// permutation term carries the same lambda-degree sum(N) - sum(h).
struct CharDet {
    RatFunc coeff;
    std::int64_t power = 0;
};
CharDet char_det(const OreMatrix& m, const Majorant& maj);

/// tord - d. Throws ZeroDeterminant when det m = 0.
OrderValue degeneracy_degree(const OreMatrix& m);

/// The optimal majorant with one N_j incremented, for each j.
std::vector<Majorant> perturbed_majorants(const Majorant& optimal);

struct MajorantCheck {
    Majorant majorant;
    bool optimal = false;
    CharDet det;
    bool passed = false;
};

struct CharTheoremReport {
    OrderValue tord;
    DieudonneDet det;
    std::int64_t dd = 0;
    Majorant optimal;
    std::vector<MajorantCheck> samples;
    // dd >= 0; optimal majorant exists; dd >= 1 => char det vanishes;
    // dd = 0 => char det vanishes exactly for non-optimal majorants and
    // equals det for optimal ones. Clauses that do not apply pass vacuously.
    std::array<bool, 4> clause{};

    bool passed() const { return clause[0] && clause[1] && clause[2] && clause[3]; }
};

/// Evaluates every clause of the characteristic-matrix theorem on m for the
/// optimal majorant plus the given samples (each must be a majorant).
/// Throws ZeroDeterminant when det m = 0.
CharTheoremReport check_char_theorem(const OreMatrix& m, const std::vector<Majorant>& sampled);

}  // namespace oredet
