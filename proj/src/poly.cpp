#include "oredet/poly.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "oredet/errors.hpp"

namespace oredet {

Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero("rational with zero denominator");
    Rational q(num, den);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Poly::Poly(const Rational& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const Rational& c, std::size_t k) {
    Poly p;
    if (c == 0) return p;
    p.c_.assign(k + 1, Rational(0));
    p.c_[k] = c;
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

OrderValue Poly::degree() const {
    if (c_.empty()) return OrderValue::neg_inf();
    return static_cast<std::int64_t>(c_.size() - 1);
}

std::size_t Poly::term_count() const {
    return static_cast<std::size_t>(std::count_if(c_.begin(), c_.end(), [](const Rational& q) { return q != 0; }));
}

Poly Poly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (std::size_t k = 1; k < c_.size(); ++k) d[k - 1] = c_[k] * static_cast<unsigned long>(k);
    return Poly(std::move(d));
}

Poly Poly::monic() const {
    if (is_zero() || leading() == 1) return *this;
    Rational inv = 1 / leading();
    return *this * inv;
}

Rational Poly::eval(const Rational& at) const {
    Rational acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& q : r.c_) q = -q;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& q : c_) q *= s;
    return *this;
}

namespace {

using ZPoly = std::vector<Integer>;

// Divides out the (positive) integer content and returns it.
Integer make_primitive(ZPoly& p) {
    Integer g = 0;
    for (const auto& c : p) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) return g;
    }
    if (g > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    return g;
}

// p = z / den with z integral and den the lcm of the coefficient denominators.
Integer integer_form(const Poly& p, ZPoly& z) {
    Integer l = 1;
    for (const auto& q : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    z.clear();
    z.reserve(p.size());
    for (const auto& q : p.coeffs()) z.push_back(q.get_num() * (l / q.get_den()));
    return l;
}

ZPoly primitive_integer(const Poly& p) {
    ZPoly z;
    integer_form(p, z);
    make_primitive(z);
    return z;
}

Poly from_integer(const ZPoly& z, const Rational& scale) {
    std::vector<Rational> out;
    out.reserve(z.size());
    for (const auto& c : z) {
        Rational q(c);
        if (scale != 1) q *= scale;
        out.push_back(std::move(q));
    }
    return Poly(std::move(out));
}

// Quotient a / b over Z, or nullopt when b does not divide a.
std::optional<ZPoly> exact_quotient_z(ZPoly a, const ZPoly& b) {
    if (a.size() < b.size()) {
        if (a.empty()) return ZPoly{};
        return std::nullopt;
    }
    const Integer& lb = b.back();
    ZPoly q(a.size() - b.size() + 1);
    for (std::size_t shift = q.size(); shift-- > 0;) {
        Integer& top = a[shift + b.size() - 1];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
        mpz_divexact(q[shift].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (std::size_t j = 0; j < b.size(); ++j) mpz_submul(a[shift + j].get_mpz_t(), q[shift].get_mpz_t(), b[j].get_mpz_t());
    }
    for (const auto& c : a)
        if (c != 0) return std::nullopt;
    return q;
}

}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    ZPoly za, zb;
    Integer den = integer_form(a, za) * integer_form(b, zb);
    ZPoly r(za.size() + zb.size() - 1);
    for (std::size_t i = 0; i < za.size(); ++i) {
        if (za[i] == 0) continue;
        for (std::size_t j = 0; j < zb.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), za[i].get_mpz_t(), zb[j].get_mpz_t());
    }
    return from_integer(r, Rational(1) / den);
}

namespace {

void append_monomial(std::ostringstream& os, const Rational& absc, std::size_t k) {
    if (k == 0) {
        os << absc.get_str();
        return;
    }
    if (absc != 1) os << absc.get_str() << '*';
    os << 'x';
    if (k > 1) os << '^' << k;
}

}  // namespace

std::string Poly::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const Rational& q = c_[k];
        if (q == 0) continue;
        bool neg = sgn(q) < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        append_monomial(os, abs(q), k);
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.to_string(); }

PolyDivMod divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    std::vector<Rational> r = a.coeffs();
    const auto& bc = b.coeffs();
    if (r.size() < bc.size()) return {Poly(), a};
    std::vector<Rational> q(r.size() - bc.size() + 1);
    Rational inv = 1 / b.leading();
    for (std::size_t shift = q.size(); shift-- > 0;) {
        const Rational& top = r[shift + bc.size() - 1];
        if (top == 0) continue;
        Rational t = top * inv;
        for (std::size_t j = 0; j < bc.size(); ++j) r[shift + j] -= t * bc[j];
        q[shift] = std::move(t);
    }
    return {Poly(std::move(q)), Poly(std::move(r))};
}

Poly exact_div(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.is_zero()) return {};
    if (b.is_constant()) return a * (1 / b.leading());
    // a = za / da, b = cb * pb / db with pb primitive; by Gauss's lemma pb | za
    // over Q forces an integral quotient.
    ZPoly za, pb;
    Integer da = integer_form(a, za);
    Integer db = integer_form(b, pb);
    Integer cb = make_primitive(pb);
    std::optional<ZPoly> q = exact_quotient_z(std::move(za), pb);
    if (!q) throw std::domain_error("polynomial division is not exact");
    return from_integer(*q, make_rational(db, da * cb));
}

bool divides(const Poly& b, const Poly& a) {
    if (b.is_zero()) return a.is_zero();
    return divmod(a, b).remainder.is_zero();
}

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    for (; e; e >>= 1, a = mulmod(a, a, p))
        if (e & 1) r = mulmod(r, a, p);
    return r;
}

u64 invmod(u64 a, u64 p) { return powmod(a, p - 2, p); }

using ModPoly = std::vector<u64>;

ModPoly reduce_mod(const ZPoly& z, u64 p) {
    ModPoly m(z.size());
    for (std::size_t i = 0; i < z.size(); ++i) m[i] = mpz_fdiv_ui(z[i].get_mpz_t(), p);
    while (!m.empty() && m.back() == 0) m.pop_back();
    return m;
}

// Monic gcd over F_p.
ModPoly gcd_mod(ModPoly a, ModPoly b, u64 p) {
    while (!b.empty()) {
        u64 inv = invmod(b.back(), p);
        while (a.size() >= b.size()) {
            u64 t = mulmod(a.back(), inv, p);
            std::size_t shift = a.size() - b.size();
            for (std::size_t j = 0; j < b.size(); ++j) a[shift + j] = (a[shift + j] + p - mulmod(t, b[j], p)) % p;
            while (!a.empty() && a.back() == 0) a.pop_back();
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        u64 inv = invmod(a.back(), p);
        for (auto& c : a) c = mulmod(c, inv, p);
    }
    return a;
}

// Primes just above 2^62, generated once.
const std::vector<u64>& word_primes() {
    static const std::vector<u64> primes = [] {
        std::vector<u64> out;
        Integer q = Integer(1) << 62;
        for (int i = 0; i < 64; ++i) {
            mpz_nextprime(q.get_mpz_t(), q.get_mpz_t());
            out.push_back(q.get_ui());
        }
        return out;
    }();
    return primes;
}

// gcd of primitive integer polynomials of positive degree by reduction
// modulo word-sized primes and Chinese remaindering. The result is
// primitive; its sign is unspecified.
ZPoly modular_gcd(const ZPoly& a, const ZPoly& b) {
    Integer lc_gcd = gcd(a.back(), b.back());
    const std::vector<u64>& primes = word_primes();
    std::size_t next = 0;
    Integer extra(static_cast<unsigned long>(primes.back()));  // beyond the cached list
    Integer modulus = 0;
    ZPoly image;  // symmetric representative modulo `modulus`
    std::size_t best_deg = std::min(a.size(), b.size());
    for (;;) {
        u64 p = 0;
        if (next < primes.size()) {
            p = primes[next++];
        } else {
            mpz_nextprime(extra.get_mpz_t(), extra.get_mpz_t());
            p = extra.get_ui();
        }
        const Integer prime(static_cast<unsigned long>(p));
        if (mpz_fdiv_ui(a.back().get_mpz_t(), p) == 0 || mpz_fdiv_ui(b.back().get_mpz_t(), p) == 0) continue;
        ModPoly g = gcd_mod(reduce_mod(a, p), reduce_mod(b, p), p);
        const std::size_t deg = g.size() - 1;
        if (deg == 0) return ZPoly{Integer(1)};
        if (deg > best_deg) continue;  // unlucky prime
        u64 scale = mpz_fdiv_ui(lc_gcd.get_mpz_t(), p);
        for (auto& c : g) c = mulmod(c, scale, p);
        if (deg < best_deg || modulus == 0) {
            best_deg = deg;
            modulus = prime;
            image.assign(g.begin(), g.end());
            for (auto& c : image)
                if (c > modulus / 2) c -= modulus;
            continue;
        }
        // CRT: x = image (mod modulus), x = g (mod p).
        u64 minv = invmod(mpz_fdiv_ui(modulus.get_mpz_t(), p), p);
        bool changed = false;
        Integer next_modulus = modulus * prime;
        for (std::size_t i = 0; i < image.size(); ++i) {
            u64 cur = mpz_fdiv_ui(image[i].get_mpz_t(), p);
            u64 delta = mulmod((g[i] + p - cur) % p, minv, p);
            if (delta != 0) {
                changed = true;
                image[i] += modulus * Integer(static_cast<unsigned long>(delta));
                if (image[i] > next_modulus / 2) image[i] -= next_modulus;
            }
        }
        modulus = next_modulus;
        if (changed) continue;
        ZPoly cand = image;
        make_primitive(cand);
        if (exact_quotient_z(a, cand) && exact_quotient_z(b, cand)) return cand;
    }
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    if (a.is_constant() || b.is_constant()) return Poly(1);
    ZPoly g = modular_gcd(primitive_integer(a), primitive_integer(b));
    std::vector<Rational> out(g.begin(), g.end());
    return Poly(std::move(out)).monic();
}

Poly lcm(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    return exact_div(a * b, gcd(a, b)).monic();
}

Rational content(const Poly& p) {
    if (p.is_zero()) return 0;
    Integer g = 0, l = 1;
    for (const auto& q : p.coeffs()) {
        if (q == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), q.get_num_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), q.get_den_mpz_t());
    }
    return make_rational(g, l);
}

}  // namespace oredet
