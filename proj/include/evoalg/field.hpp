#ifndef EVOALG_FIELD_HPP
#define EVOALG_FIELD_HPP

#include <cctype>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>

#include "gf.hpp"
#include "rational.hpp"

namespace evoalg {

/// The rationals as a field context. Stateless; elements are Rational values.
struct Rationals {
    using Element = Rational;

    Element zero() const { return Rational(0); }
    Element one() const { return Rational(1); }
    Element from_int(long long v) const { return Rational(v); }

    Element add(const Element& a, const Element& b) const { return a + b; }
    Element sub(const Element& a, const Element& b) const { return a - b; }
    Element neg(const Element& a) const { return -a; }
    Element mul(const Element& a, const Element& b) const { return a * b; }
    Element div(const Element& a, const Element& b) const { return a / b; }
    Element inv(const Element& a) const { return Rational(1) / a; }
    bool is_zero(const Element& a) const { return a.is_zero(); }

    std::optional<Element> sqrt(const Element& a) const { return a.sqrt(); }

    /// Nonzero integers of small height; enough spread for generic instances.
    template <class Rng>
    Element random_nonzero(Rng& rng) const {
        long long v = 1 + static_cast<long long>(rng() % 9);
        if (rng() & 1) v = -v;
        return Rational(v);
    }
};

inline std::string scalar_str(const Rationals&, const Rational& v) { return v.str(); }
inline std::string scalar_str(const PrimeField&, PrimeField::Element v) { return std::to_string(v); }

/// Field tag parsed from text: "Q" for the rationals, "F<p>" for GF(p).
struct FieldSpec {
    enum class Kind { Rationals, PrimeField };
    Kind kind = Kind::Rationals;
    std::uint64_t modulus = 0;

    static FieldSpec rationals() { return {}; }
    static FieldSpec prime(std::uint64_t p) { return {Kind::PrimeField, p}; }

    static FieldSpec parse(const std::string& text) {
        if (text == "Q" || text == "q") return rationals();
        if ((text.size() > 1) && (text[0] == 'F' || text[0] == 'f')) {
            std::uint64_t p = 0;
            for (std::size_t i = 1; i < text.size(); ++i) {
                if (!std::isdigit(static_cast<unsigned char>(text[i])))
                    throw std::invalid_argument("FieldSpec: bad modulus in '" + text + "'");
                p = p * 10 + (text[i] - '0');
            }
            return prime(p);
        }
        throw std::invalid_argument("FieldSpec: expected Q or F<p>, got '" + text + "'");
    }

    std::string str() const {
        return kind == Kind::Rationals ? "Q" : "F" + std::to_string(modulus);
    }

    friend bool operator==(const FieldSpec& a, const FieldSpec& b) {
        return a.kind == b.kind && a.modulus == b.modulus;
    }
};

namespace detail {

inline std::pair<BigInt, BigInt> parse_fraction(const std::string& text) {
    std::size_t i = 0, n = text.size();
    auto skip = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    auto integer = [&]() -> BigInt {
        skip();
        bool negative = false;
        if (i < n && (text[i] == '+' || text[i] == '-')) negative = text[i++] == '-';
        std::size_t start = i;
        while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) throw std::invalid_argument("scalar: expected digits in '" + text + "'");
        BigInt v(text.substr(start, i - start));
        return negative ? -v : v;
    };
    BigInt num = integer();
    BigInt den = 1;
    skip();
    if (i < n && text[i] == '/') {
        ++i;
        den = integer();
        skip();
    }
    if (i != n) throw std::invalid_argument("scalar: trailing characters in '" + text + "'");
    if (den == 0) throw std::invalid_argument("scalar: zero denominator in '" + text + "'");
    return {num, den};
}

} // namespace detail

/// Text syntax: optional sign, decimal integer, optional "/" denominator.
inline Rational parse_scalar(const std::string& text, const Rationals&) {
    auto [num, den] = detail::parse_fraction(text);
    return Rational(num, den);
}

inline PrimeField::Element parse_scalar(const std::string& text, const PrimeField& f) {
    auto [num, den] = detail::parse_fraction(text);
    BigInt p(f.modulus());
    BigInt nm = num % p;
    if (nm < 0) nm += p;
    BigInt dm = den % p;
    if (dm < 0) dm += p;
    auto n64 = nm.convert_to<std::uint64_t>();
    auto d64 = dm.convert_to<std::uint64_t>();
    if (d64 == 0) throw std::invalid_argument("scalar: denominator vanishes mod p in '" + text + "'");
    return f.div(n64, d64);
}

inline std::optional<Rational> sqrt_scalar(const Rational& x, const Rationals& f) { return f.sqrt(x); }
inline std::optional<PrimeField::Element> sqrt_scalar(PrimeField::Element x, const PrimeField& f) { return f.sqrt(x); }

/// Log of x to the cached generator of GF(p)^x, as an integer mod p-1.
inline std::uint64_t discrete_log(PrimeField::Element x, const PrimeField& f) { return f.dlog(x); }

} // namespace evoalg

#endif
