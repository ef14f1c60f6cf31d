#include "oredet/expr.hpp"

#include <cctype>

#include "oredet/errors.hpp"

namespace oredet {

namespace {

constexpr unsigned long kMaxExponent = 1000;

class Parser {
public:
    explicit Parser(std::string_view s) : s_(s) {}

    OreOp parse() {
        OreOp r = expr();
        skip_ws();
        if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_ + 1); }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    bool accept(char c) {
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    OreOp expr() {
        bool negate = false;
        if (accept('-'))
            negate = true;
        else
            accept('+');
        OreOp acc = term();
        if (negate) acc = -acc;
        for (;;) {
            if (accept('+'))
                acc += term();
            else if (accept('-'))
                acc -= term();
            else
                return acc;
        }
    }

    OreOp term() {
        OreOp acc = factor();
        for (;;) {
            if (accept('*')) {
                acc = acc * factor();
            } else if (accept('/')) {
                skip_ws();
                std::size_t at = pos_;
                OreOp divisor = factor();
                if (divisor.is_zero()) throw ParseError("division by zero", at + 1);
                if (divisor.ord() > OrderValue(0)) throw ParseError("division by an expression containing d", at + 1);
                acc = acc * OreOp(divisor.leading().inverse());
            } else {
                return acc;
            }
        }
    }

    OreOp factor() {
        OreOp b = base();
        if (!accept('^')) return b;
        skip_ws();
        std::size_t start = pos_;
        unsigned long e = 0;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            e = e * 10 + static_cast<unsigned long>(s_[pos_] - '0');
            if (e > kMaxExponent) throw ParseError("exponent exceeds " + std::to_string(kMaxExponent), start + 1);
            ++pos_;
        }
        if (pos_ == start) fail("expected a natural number exponent");
        OreOp r(1);
        for (unsigned long k = 0; k < e; ++k) r = r * b;
        return r;
    }

    OreOp base() {
        skip_ws();
        if (pos_ >= s_.size()) fail("unexpected end of expression");
        char c = s_[pos_];
        if (c == 'x') {
            ++pos_;
            return OreOp::x();
        }
        if (c == 'd') {
            ++pos_;
            return OreOp::d();
        }
        if (c == '(') {
            ++pos_;
            OreOp r = expr();
            if (!accept(')')) fail("expected ')'");
            return r;
        }
        if (std::isdigit(static_cast<unsigned char>(c))) {
            std::size_t start = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            Integer v(std::string(s_.substr(start, pos_ - start)));
            return OreOp(RatFunc(Rational(v)));
        }
        fail(std::string("unexpected '") + c + "'");
    }

    std::string_view s_;
    std::size_t pos_ = 0;
};

}  // namespace

OreOp parse_operator_expr(std::string_view s) { return Parser(s).parse(); }

std::string render_operator(const OreOp& a) { return a.to_string(); }

}  // namespace oredet
