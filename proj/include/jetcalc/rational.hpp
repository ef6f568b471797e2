#pragma once

// Exact coefficient arithmetic.  Every number in the system is either an
// arbitrary-precision rational (characteristic 0) or a residue modulo a
// prime p < 2^31 stored as a rational with denominator 1.  There is no
// floating point anywhere.

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <string>

#include "errors.hpp"

namespace jetcalc {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime_u32(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

// characteristic 0 selects QQ; a prime p selects GF(p).
struct FieldSpec {
    std::uint32_t characteristic = 0;

    bool operator==(const FieldSpec&) const = default;

    void validate() const {
        if (characteristic != 0 && !is_prime_u32(characteristic))
            throw DomainError("field characteristic must be 0 or a prime, got " +
                              std::to_string(characteristic));
    }

    bool is_rational_field() const { return characteristic == 0; }

    std::string name() const {
        return characteristic == 0 ? "QQ" : "GF(" + std::to_string(characteristic) + ")";
    }
};

namespace detail {

inline BigInt mod_reduce(const BigInt& a, std::uint32_t p) {
    BigInt r = a % p;
    if (r < 0) r += p;
    return r;
}

// Inverse of a mod p by extended Euclid; a must be nonzero mod p.
inline BigInt mod_inverse(const BigInt& a, std::uint32_t p) {
    BigInt r0 = p, r1 = mod_reduce(a, p);
    if (r1 == 0) throw DomainError("division by zero in GF(" + std::to_string(p) + ")");
    BigInt s0 = 0, s1 = 1;
    while (r1 != 0) {
        BigInt q = r0 / r1;
        BigInt r2 = r0 - q * r1;
        BigInt s2 = s0 - q * s1;
        r0 = r1; r1 = r2;
        s0 = s1; s1 = s2;
    }
    return mod_reduce(s0, p);
}

}  // namespace detail

// Canonical representative of a value in the given field.  Over QQ this is
// the identity (cpp_rational is always normalized); over GF(p) it maps
// num/den to the residue class in [0, p).
inline Rational field_normalize(const FieldSpec& field, const Rational& v) {
    if (field.characteristic == 0) return v;
    BigInt num = detail::mod_reduce(numerator(v), field.characteristic);
    BigInt den = detail::mod_reduce(denominator(v), field.characteristic);
    return Rational(num * detail::mod_inverse(den, field.characteristic) %
                    field.characteristic);
}

inline Rational field_inverse(const FieldSpec& field, const Rational& v) {
    if (field.characteristic == 0) {
        if (v == 0) throw DomainError("division by zero");
        return 1 / v;
    }
    Rational r = field_normalize(field, v);
    return Rational(detail::mod_inverse(numerator(r), field.characteristic));
}

// Reduced fraction "a/b", or just "a" when the denominator is 1.
inline std::string rational_to_string(const Rational& v) {
    std::string s = numerator(v).str();
    if (denominator(v) != 1) s += "/" + denominator(v).str();
    return s;
}

// Parses "a" or "a/b" (optional leading minus).  Returns nullopt on junk.
inline std::optional<Rational> parse_rational(const std::string& text) {
    if (text.empty()) return std::nullopt;
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(text));
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) return std::nullopt;
        return Rational(num, den);
    } catch (const std::exception&) {
        return std::nullopt;
    }
}

// A rational extended with the +inf / -inf sentinels used by reports.
struct ExtValue {
    enum class Kind { finite, plus_inf, minus_inf };

    Kind kind = Kind::finite;
    Rational value;

    static ExtValue finite(Rational v) { return {Kind::finite, std::move(v)}; }
    static ExtValue plus_inf() { return {Kind::plus_inf, Rational()}; }
    static ExtValue minus_inf() { return {Kind::minus_inf, Rational()}; }

    bool is_finite() const { return kind == Kind::finite; }

    bool operator==(const ExtValue& o) const {
        return kind == o.kind && (kind != Kind::finite || value == o.value);
    }

    std::string str() const {
        switch (kind) {
            case Kind::plus_inf: return "inf";
            case Kind::minus_inf: return "-inf";
            default: return rational_to_string(value);
        }
    }
};

}  // namespace jetcalc
