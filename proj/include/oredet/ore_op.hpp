#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "oredet/order_value.hpp"
#include "oredet/ratfunc.hpp"

namespace oredet {

/// Differential operator sum_k f_k d^k over K = Q(x) with the commutation
/// rule d*f = f*d + f'. Dense: coefficient of d^k at index k, no trailing
/// zero coefficient, zero operator = empty vector.
class OreOp {
public:
    OreOp() = default;
    OreOp(const RatFunc& f);  // NOLINT: scalars embed as order-0 operators
    OreOp(const Poly& p) : OreOp(RatFunc(p)) {}  // NOLINT
    OreOp(long c) : OreOp(RatFunc(c)) {}  // NOLINT
    explicit OreOp(std::vector<RatFunc> coeffs);

    /// The derivation symbol d.
    static OreOp d() { return term(RatFunc(1), 1); }
    static OreOp x() { return OreOp(RatFunc::x()); }
    /// f * d^k.
    static OreOp term(const RatFunc& f, std::size_t k);

    const std::vector<RatFunc>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    OrderValue ord() const;
    /// Coefficient of d^k; zero for k < 0 or k > ord.
    RatFunc coeff_at(std::int64_t k) const;
    // Precondition: !is_zero().
    const RatFunc& leading() const { return c_.back(); }

    /// True iff every coefficient lies in R = Q[x].
    bool in_subring() const;

    OreOp operator-() const;
    OreOp& operator+=(const OreOp& o);
    OreOp& operator-=(const OreOp& o);
    OreOp& operator*=(const OreOp& o) { return *this = *this * o; }

    friend OreOp operator+(OreOp a, const OreOp& b) { return a += b; }
    friend OreOp operator-(OreOp a, const OreOp& b) { return a -= b; }
    /// Noncommutative product.
    friend OreOp operator*(const OreOp& a, const OreOp& b);
    friend bool operator==(const OreOp& a, const OreOp& b) { return a.c_ == b.c_; }

    /// f * (this): left multiplication by a scalar, no derivatives involved.
    OreOp scaled_left(const RatFunc& f) const;
    /// d * (this), by one application of the commutation rule.
    OreOp d_times() const;
    /// (this) * d: shifts every coefficient up by one.
    OreOp times_d() const;

    /// Canonical descending form, e.g. "x*d^2 + 1/x*d - 3".
    std::string to_string() const;

private:
    void trim();

    std::vector<RatFunc> c_;
};

std::ostream& operator<<(std::ostream& os, const OreOp& a);

struct OreDivMod {
    OreOp quotient;
    OreOp remainder;
};

/// Right Euclidean division: a = q*b + r with ord r < ord b.
/// Throws DivisionByZero for b = 0.
OreDivMod right_divmod(const OreOp& a, const OreOp& b);

}  // namespace oredet
