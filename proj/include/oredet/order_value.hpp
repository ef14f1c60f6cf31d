#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>

namespace oredet {

/// An integer extended by -infinity: orders of operators, degrees of
/// polynomials, and the exponent d of a Dieudonne determinant.
/// Addition is absorbing for -infinity; -infinity compares below every integer.
class OrderValue {
public:
    constexpr OrderValue() = default;  // -infinity
    constexpr OrderValue(std::int64_t v) : value_(v) {}  // NOLINT: implicit by intent

    static constexpr OrderValue neg_inf() { return OrderValue(); }

    constexpr bool is_finite() const { return value_.has_value(); }
    constexpr bool is_neg_inf() const { return !value_.has_value(); }

    // Precondition: is_finite().
    constexpr std::int64_t value() const { return *value_; }

    friend constexpr OrderValue operator+(OrderValue a, OrderValue b) {
        if (a.is_neg_inf() || b.is_neg_inf()) return neg_inf();
        return OrderValue(*a.value_ + *b.value_);
    }
    OrderValue& operator+=(OrderValue o) { return *this = *this + o; }

    friend constexpr bool operator==(OrderValue a, OrderValue b) = default;
    friend constexpr std::strong_ordering operator<=>(OrderValue a, OrderValue b) {
        if (a.is_neg_inf() || b.is_neg_inf())
            return a.is_finite() <=> b.is_finite();
        return *a.value_ <=> *b.value_;
    }

    std::string to_string() const {
        return is_finite() ? std::to_string(*value_) : std::string("-inf");
    }

private:
    std::optional<std::int64_t> value_;
};

inline std::ostream& operator<<(std::ostream& os, OrderValue v) { return os << v.to_string(); }

}  // namespace oredet
