#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "oredet/poly.hpp"

namespace oredet {

/// Element of K = Q(x) in canonical form: gcd(num, den) = 1 and den monic.
/// Zero is 0/1, so equality and membership in R = Q[x] are syntactic.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Poly& p) : num_(p), den_(1) {}  // NOLINT
    RatFunc(const Rational& c) : num_(c), den_(1) {}  // NOLINT
    RatFunc(long c) : RatFunc(Rational(c)) {}  // NOLINT
    /// Reduces num/den; throws DivisionByZero when den = 0.
    RatFunc(Poly num, Poly den);

    static RatFunc x() { return RatFunc(Poly::x()); }

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    /// Membership in R = Q[x].
    bool is_polynomial() const { return den_.is_one(); }
    /// Sign of the numerator's leading coefficient (0 for zero).
    int leading_sign() const { return num_.is_zero() ? 0 : sgn(num_.leading()); }

    RatFunc inverse() const;
    /// d/dx by the quotient rule.
    RatFunc derive() const;

    RatFunc operator-() const;
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    friend bool operator==(const RatFunc& a, const RatFunc& b) = default;

    /// "num" when den = 1, otherwise "A/B" with each side parenthesized
    /// unless it is a single term.
    std::string to_string() const;

private:
    struct Reduced {};
    RatFunc(Poly num, Poly den, Reduced) : num_(std::move(num)), den_(std::move(den)) {}

    Poly num_;
    Poly den_;
};

std::ostream& operator<<(std::ostream& os, const RatFunc& f);

/// Result of clearing denominators and content from a vector over K:
/// entries[i] = scale * input[i], every entry lies in Q[x] with integer
/// coefficients, the entries have no common polynomial factor and the
/// integer content of all coefficients together is 1. The first nonzero
/// entry has a positive leading coefficient.
struct PrimitiveVector {
    RatFunc scale;
    std::vector<Poly> entries;
};

/// Throws PreconditionError for an all-zero input.
PrimitiveVector content_and_primitive(std::span<const RatFunc> v);

}  // namespace oredet
