#include "oredet/ratfunc.hpp"

#include "oredet/errors.hpp"

namespace oredet {

RatFunc::RatFunc(Poly num, Poly den) {
    if (den.is_zero()) throw DivisionByZero("rational function with zero denominator");
    if (num.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (!den.is_constant()) {
        Poly g = gcd(num, den);
        if (!g.is_one()) {
            num = exact_div(num, g);
            den = exact_div(den, g);
        }
    }
    Rational lc = den.leading();
    if (lc != 1) {
        Rational inv = 1 / lc;
        num *= inv;
        den *= inv;
    }
    num_ = std::move(num);
    den_ = std::move(den);
}

RatFunc RatFunc::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero rational function");
    return RatFunc(den_, num_);
}

RatFunc RatFunc::derive() const {
    if (den_.is_one()) return RatFunc(num_.derivative(), Poly(1), Reduced{});
    // (n/d)' = (n'd - nd')/d^2
    return RatFunc(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RatFunc RatFunc::operator-() const { return RatFunc(-num_, den_, Reduced{}); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ + b.num_, Poly(1), RatFunc::Reduced{});
    if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
    Poly g = gcd(a.den_, b.den_);
    Poly bd = exact_div(b.den_, g);
    return RatFunc(a.num_ * bd + b.num_ * exact_div(a.den_, g), a.den_ * bd);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return {};
    if (a.den_.is_one() && b.den_.is_one()) return RatFunc(a.num_ * b.num_, Poly(1), RatFunc::Reduced{});
    return RatFunc(a.num_ * b.num_, a.den_ * b.den_);
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw DivisionByZero("rational function division by zero");
    return RatFunc(a.num_ * b.den_, a.den_ * b.num_);
}

namespace {

std::string atom(const Poly& p) {
    std::string s = p.to_string();
    return p.term_count() > 1 ? "(" + s + ")" : s;
}

}  // namespace

std::string RatFunc::to_string() const {
    if (den_.is_one()) return num_.to_string();
    return atom(num_) + "/" + atom(den_);
}

std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

PrimitiveVector content_and_primitive(std::span<const RatFunc> v) {
    Poly common_den(1);
    bool any = false;
    for (const auto& f : v) {
        if (f.is_zero()) continue;
        any = true;
        common_den = lcm(common_den, f.den());
    }
    if (!any) throw PreconditionError("content_and_primitive: all-zero vector");

    std::vector<Poly> entries;
    entries.reserve(v.size());
    Poly g;
    for (const auto& f : v) {
        Poly e = f.is_zero() ? Poly() : f.num() * exact_div(common_den, f.den());
        g = gcd(g, e);
        entries.push_back(std::move(e));
    }
    // g is monic and nonzero here.
    for (auto& e : entries)
        if (!e.is_zero()) e = exact_div(e, g);

    Integer num_gcd = 0, den_lcm = 1;
    for (const auto& e : entries)
        for (const auto& q : e.coeffs()) {
            if (q == 0) continue;
            mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), q.get_num_mpz_t());
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), q.get_den_mpz_t());
        }
    Rational factor = make_rational(den_lcm, num_gcd);
    for (const auto& e : entries)
        if (!e.is_zero()) {
            if (sgn(e.leading()) < 0) factor = -factor;
            break;
        }
    for (auto& e : entries) e *= factor;

    RatFunc scale = RatFunc(common_den, g) * RatFunc(factor);
    return {std::move(scale), std::move(entries)};
}

}  // namespace oredet
