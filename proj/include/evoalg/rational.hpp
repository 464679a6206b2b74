#ifndef EVOALG_RATIONAL_HPP
#define EVOALG_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace evoalg {

using BigInt = boost::multiprecision::cpp_int;

/// Exact rational with canonical form: reduced, positive denominator.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(long long v) : num_(v), den_(1) {}
    Rational(BigInt n, BigInt d) : num_(std::move(n)), den_(std::move(d)) { normalize(); }
    explicit Rational(BigInt n) : num_(std::move(n)), den_(1) {}

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }

    bool is_zero() const { return num_ == 0; }
    int sign() const { return num_ == 0 ? 0 : (num_ > 0 ? 1 : -1); }

    friend Rational operator+(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator-(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
    }
    friend Rational operator*(const Rational& a, const Rational& b) {
        return Rational(a.num_ * b.num_, a.den_ * b.den_);
    }
    friend Rational operator/(const Rational& a, const Rational& b) {
        if (b.num_ == 0) throw std::domain_error("Rational: division by zero");
        return Rational(a.num_ * b.den_, a.den_ * b.num_);
    }
    Rational operator-() const { return Rational(-num_, den_); }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }
    Rational& operator*=(const Rational& o) { return *this = *this * o; }
    Rational& operator/=(const Rational& o) { return *this = *this / o; }

    friend bool operator==(const Rational& a, const Rational& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ < b.num_ * a.den_;
    }

    std::string str() const {
        std::string s = num_.str();
        if (den_ != 1) s += "/" + den_.str();
        return s;
    }

    /// Canonical square root when one exists in Q: both |num| and den must be
    /// perfect squares; the positive root is returned.
    std::optional<Rational> sqrt() const {
        if (num_ == 0) return Rational(0);
        if (num_ < 0) return std::nullopt;
        BigInt rn = boost::multiprecision::sqrt(num_);
        BigInt rd = boost::multiprecision::sqrt(den_);
        if (rn * rn != num_ || rd * rd != den_) return std::nullopt;
        return Rational(rn, rd);
    }

    /// Prime factorization of |num|/den by trial division:
    /// pairs (prime, exponent) with negative exponents for the denominator.
    std::vector<std::pair<BigInt, long long>> factor() const {
        if (num_ == 0) throw std::domain_error("Rational: factoring zero");
        std::vector<std::pair<BigInt, long long>> out;
        auto run = [&out](BigInt v, long long sgn) {
            if (v < 0) v = -v;
            for (BigInt p = 2; p * p <= v; ++p) {
                long long e = 0;
                while (v % p == 0) { v /= p; ++e; }
                if (e) out.emplace_back(p, e * sgn);
            }
            if (v > 1) out.emplace_back(v, sgn);
        };
        run(num_, +1);
        run(den_, -1);
        // merge duplicates (num and den are coprime, so there are none)
        return out;
    }

private:
    void normalize() {
        if (den_ == 0) throw std::domain_error("Rational: zero denominator");
        if (den_ < 0) { num_ = -num_; den_ = -den_; }
        BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
        if (g > 1) { num_ /= g; den_ /= g; }
        if (num_ == 0) den_ = 1;
    }

    BigInt num_;
    BigInt den_;
};

} // namespace evoalg

#endif
