#include "oredet/ore_op.hpp"

#include <sstream>

#include "oredet/errors.hpp"

namespace oredet {

OreOp::OreOp(const RatFunc& f) {
    if (!f.is_zero()) c_.push_back(f);
}

OreOp::OreOp(std::vector<RatFunc> coeffs) : c_(std::move(coeffs)) { trim(); }

OreOp OreOp::term(const RatFunc& f, std::size_t k) {
    OreOp a;
    if (f.is_zero()) return a;
    a.c_.assign(k + 1, RatFunc());
    a.c_[k] = f;
    return a;
}

void OreOp::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

OrderValue OreOp::ord() const {
    if (c_.empty()) return OrderValue::neg_inf();
    return static_cast<std::int64_t>(c_.size() - 1);
}

RatFunc OreOp::coeff_at(std::int64_t k) const {
    if (k < 0 || static_cast<std::uint64_t>(k) >= c_.size()) return {};
    return c_[static_cast<std::size_t>(k)];
}

bool OreOp::in_subring() const {
    for (const auto& f : c_)
        if (!f.is_polynomial()) return false;
    return true;
}

OreOp OreOp::operator-() const {
    OreOp r = *this;
    for (auto& f : r.c_) f = -f;
    return r;
}

OreOp& OreOp::operator+=(const OreOp& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

OreOp& OreOp::operator-=(const OreOp& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

OreOp OreOp::scaled_left(const RatFunc& f) const {
    if (f.is_zero()) return {};
    OreOp r = *this;
    for (auto& g : r.c_) g *= f;
    return r;
}

OreOp OreOp::d_times() const {
    // d * sum g_i d^i = sum (g_i d^{i+1} + g_i' d^i)
    if (c_.empty()) return {};
    std::vector<RatFunc> r(c_.size() + 1);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        r[i + 1] += c_[i];
        r[i] += c_[i].derive();
    }
    return OreOp(std::move(r));
}

OreOp OreOp::times_d() const {
    if (c_.empty()) return {};
    std::vector<RatFunc> r;
    r.reserve(c_.size() + 1);
    r.emplace_back();
    r.insert(r.end(), c_.begin(), c_.end());
    return OreOp(std::move(r));
}

OreOp operator*(const OreOp& a, const OreOp& b) {
    if (a.is_zero() || b.is_zero()) return {};
    // a*b = sum_k a_k (d^k b), with d^k b built by repeated commutation.
    OreOp acc;
    OreOp dk_b = b;
    for (std::size_t k = 0; k < a.c_.size(); ++k) {
        if (k > 0) dk_b = dk_b.d_times();
        if (!a.c_[k].is_zero()) acc += dk_b.scaled_left(a.c_[k]);
    }
    return acc;
}

namespace {

std::string coefficient_atom(const RatFunc& f) {
    if (f.is_polynomial() && f.num().term_count() > 1) return "(" + f.to_string() + ")";
    return f.to_string();
}

}  // namespace

std::string OreOp::to_string() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = c_.size(); k-- > 0;) {
        const RatFunc& f = c_[k];
        if (f.is_zero()) continue;
        bool neg = f.leading_sign() < 0;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        RatFunc mag = neg ? -f : f;
        if (k == 0) {
            os << (neg ? coefficient_atom(mag) : mag.to_string());
        } else {
            if (!mag.is_one()) os << coefficient_atom(mag) << '*';
            os << 'd';
            if (k > 1) os << '^' << k;
        }
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const OreOp& a) { return os << a.to_string(); }

OreDivMod right_divmod(const OreOp& a, const OreOp& b) {
    if (b.is_zero()) throw DivisionByZero("operator division by zero");
    const std::int64_t ob = b.ord().value();
    const RatFunc inv_lc = b.leading().inverse();
    OreOp q;
    OreOp r = a;
    while (!r.is_zero() && r.ord().value() >= ob) {
        std::int64_t shift = r.ord().value() - ob;
        // lc(t*b) = lc(t)*lc(b) since K is commutative.
        OreOp t = OreOp::term(r.leading() * inv_lc, static_cast<std::size_t>(shift));
        r -= t * b;
        q += t;
    }
    return {std::move(q), std::move(r)};
}

}  // namespace oredet
