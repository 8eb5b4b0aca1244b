#pragma once

#include <cstdint>
#include <numeric>
#include <string>

#include "kaccoh/errors.hpp"

namespace kaccoh {

/// An element of the circle group written additively: an exact rational
/// modulo 1, normalized to 0 <= num < den with gcd(num, den) = 1.
/// Never floating point; cocycle identities are exact equalities.
struct TorusValue {
    std::int64_t num = 0;
    std::int64_t den = 1;

    TorusValue() = default;
    TorusValue(std::int64_t n, std::int64_t d) : num(n), den(d) { normalize(); }

    void normalize() {
        if (den == 0) throw ArithmeticOverflow("zero denominator");
        if (den < 0) {
            num = -num;
            den = -den;
        }
        num %= den;
        if (num < 0) num += den;
        const std::int64_t g = std::gcd(num, den);
        num /= g;
        den /= g;
    }

    bool is_zero() const { return num == 0; }

    friend TorusValue operator+(const TorusValue& a, const TorusValue& b) {
        std::int64_t d, n1, n2, n;
        if (__builtin_mul_overflow(a.den / std::gcd(a.den, b.den), b.den, &d) ||
            __builtin_mul_overflow(a.num, d / a.den, &n1) ||
            __builtin_mul_overflow(b.num, d / b.den, &n2) ||
            __builtin_add_overflow(n1, n2, &n))
            throw ArithmeticOverflow("torus value arithmetic overflow");
        return TorusValue(n, d);
    }
    friend TorusValue operator-(const TorusValue& a) { return TorusValue(-a.num, a.den); }
    friend TorusValue operator-(const TorusValue& a, const TorusValue& b) { return a + (-b); }
    friend TorusValue operator*(std::int64_t k, const TorusValue& a) {
        std::int64_t n;
        if (__builtin_mul_overflow(k % a.den, a.num, &n))
            throw ArithmeticOverflow("torus value arithmetic overflow");
        return TorusValue(n, a.den);
    }
    friend bool operator==(const TorusValue& a, const TorusValue& b) {
        return a.num == b.num && a.den == b.den;
    }
    friend bool operator!=(const TorusValue& a, const TorusValue& b) { return !(a == b); }

    std::string str() const { return std::to_string(num) + "/" + std::to_string(den); }
};

/// Parses "p/q" or a bare integer "p" (taken mod 1).
TorusValue parse_torus_value(const std::string& text);

}  // namespace kaccoh
