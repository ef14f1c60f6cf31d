#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <initializer_list>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "oredet/order_value.hpp"

namespace oredet {

// GMP keeps mpq_class values canonical (coprime, positive denominator, 0 = 0/1)
// as long as every construction from a raw numerator/denominator pair goes
// through make_rational.
using Rational = mpq_class;
using Integer = mpz_class;

Rational make_rational(const Integer& num, const Integer& den);
std::string to_string(const Rational& q);

/// Dense univariate polynomial over Q, coefficient of x^k at index k.
/// The coefficient vector never has a trailing zero; the zero polynomial
/// is the empty vector and has degree -infinity.
class Poly {
public:
    Poly() = default;
    Poly(const Rational& c);  // NOLINT: constants embed implicitly
    Poly(long c) : Poly(Rational(c)) {}  // NOLINT
    explicit Poly(std::vector<Rational> coeffs);
    Poly(std::initializer_list<Rational> coeffs) : Poly(std::vector<Rational>(coeffs)) {}

    static Poly x() { return monomial(1, 1); }
    static Poly monomial(const Rational& c, std::size_t k);

    const std::vector<Rational>& coeffs() const { return c_; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    OrderValue degree() const;
    // Number of stored coefficients, i.e. degree + 1 (0 for the zero polynomial).
    std::size_t size() const { return c_.size(); }

    Rational coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Rational(0); }
    // Precondition: !is_zero().
    const Rational& leading() const { return c_.back(); }
    std::size_t term_count() const;

    Poly derivative() const;
    Poly monic() const;
    Rational eval(const Rational& at) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& s);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
    friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // Descending, e.g. "x^2 - 1/2*x + 3"; parses back through the expression grammar.
    std::string to_string() const;

private:
    void trim();

    std::vector<Rational> c_;
};

std::ostream& operator<<(std::ostream& os, const Poly& p);

struct PolyDivMod {
    Poly quotient;
    Poly remainder;
};

/// a = q*b + r with deg r < deg b. Throws DivisionByZero when b = 0.
PolyDivMod divmod(const Poly& a, const Poly& b);

/// Exact quotient a / b; throws DivisionByZero for b = 0 and
/// std::domain_error when b does not divide a.
Poly exact_div(const Poly& a, const Poly& b);
bool divides(const Poly& b, const Poly& a);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(const Poly& a, const Poly& b);
Poly lcm(const Poly& a, const Poly& b);

/// Positive rational c with p / c having coprime integer coefficients.
/// content(0) = 0.
Rational content(const Poly& p);

}  // namespace oredet
