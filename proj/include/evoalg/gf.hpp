#ifndef EVOALG_GF_HPP
#define EVOALG_GF_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace evoalg {

namespace detail {

inline std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
    return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
    std::uint64_t r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

inline bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        if (n % d == 0) return n == d;
    }
    // deterministic Miller-Rabin for 64-bit with the bases above
    std::uint64_t d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull, 29ull, 31ull, 37ull}) {
        std::uint64_t x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) { composite = false; break; }
        }
        if (composite) return false;
    }
    return true;
}

inline std::vector<std::uint64_t> prime_factors(std::uint64_t v) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t p = 2; p * p <= v; p += (p == 2 ? 1 : 2)) {
        if (v % p == 0) {
            fs.push_back(p);
            while (v % p == 0) v /= p;
        }
    }
    if (v > 1) fs.push_back(v);
    return fs;
}

} // namespace detail

/// Prime field GF(p) for an odd prime p. Elements are residues in [0, p) held
/// as plain uint64_t; all arithmetic goes through the field object.
///
/// The multiplicative generator (smallest primitive root) and the baby-step
/// table for discrete logs are computed once in the constructor and read-only
/// afterwards.
class PrimeField {
public:
    using Element = std::uint64_t;

    explicit PrimeField(std::uint64_t p) : p_(p) {
        if (!detail::is_prime_u64(p) || p == 2)
            throw std::invalid_argument("PrimeField: modulus must be an odd prime");
        auto factors = detail::prime_factors(p - 1);
        for (std::uint64_t g = 2; g < p; ++g) {
            bool primitive = true;
            for (std::uint64_t q : factors)
                if (detail::powmod(g, (p - 1) / q, p) == 1) { primitive = false; break; }
            if (primitive) { gen_ = g; break; }
        }
        // baby-step giant-step table: g^0..g^(m-1) with m = ceil(sqrt(p-1))
        bsgs_m_ = 1;
        while (bsgs_m_ * bsgs_m_ < p - 1) ++bsgs_m_;
        baby_.reserve(bsgs_m_);
        std::uint64_t cur = 1;
        for (std::uint64_t k = 0; k < bsgs_m_; ++k) {
            baby_.emplace(cur, k);
            cur = detail::mulmod(cur, gen_, p_);
        }
        giant_step_ = inv(detail::powmod(gen_, bsgs_m_, p_));
    }

    std::uint64_t modulus() const { return p_; }
    std::uint64_t generator() const { return gen_; }

    Element zero() const { return 0; }
    Element one() const { return 1; }
    Element from_int(long long v) const {
        long long m = v % static_cast<long long>(p_);
        return m < 0 ? m + p_ : m;
    }

    Element add(Element a, Element b) const { Element s = a + b; return s >= p_ ? s - p_ : s; }
    Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
    Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
    Element mul(Element a, Element b) const { return detail::mulmod(a, b, p_); }
    Element inv(Element a) const {
        if (a == 0) throw std::domain_error("PrimeField: inverse of zero");
        return detail::powmod(a, p_ - 2, p_);
    }
    Element div(Element a, Element b) const { return mul(a, inv(b)); }
    Element pow(Element a, std::uint64_t e) const { return detail::powmod(a, e, p_); }
    bool is_zero(Element a) const { return a == 0; }

    /// Canonical square root (the smaller of the two residues) via
    /// Tonelli-Shanks, or nothing for non-residues.
    std::optional<Element> sqrt(Element a) const {
        if (a == 0) return Element(0);
        if (detail::powmod(a, (p_ - 1) / 2, p_) != 1) return std::nullopt;
        std::uint64_t q = p_ - 1;
        int s = 0;
        while ((q & 1) == 0) { q >>= 1; ++s; }
        std::uint64_t r;
        if (s == 1) {
            r = detail::powmod(a, (p_ + 1) / 4, p_);
        } else {
            std::uint64_t z = 2;
            while (detail::powmod(z, (p_ - 1) / 2, p_) != p_ - 1) ++z;
            std::uint64_t c = detail::powmod(z, q, p_);
            std::uint64_t t = detail::powmod(a, q, p_);
            r = detail::powmod(a, (q + 1) / 2, p_);
            int m = s;
            while (t != 1) {
                std::uint64_t t2 = t;
                int i = 0;
                while (t2 != 1) { t2 = mul(t2, t2); ++i; }
                std::uint64_t b = c;
                for (int k = 0; k < m - i - 1; ++k) b = mul(b, b);
                r = mul(r, b);
                c = mul(b, b);
                t = mul(t, c);
                m = i;
            }
        }
        return std::min(r, p_ - r);
    }

    /// Discrete log base the cached generator, by baby-step giant-step.
    std::uint64_t dlog(Element x) const {
        if (x == 0) throw std::domain_error("PrimeField: discrete log of zero");
        std::uint64_t cur = x;
        for (std::uint64_t j = 0; j <= bsgs_m_; ++j) {
            auto it = baby_.find(cur);
            if (it != baby_.end()) {
                std::uint64_t k = j * bsgs_m_ + it->second;
                return k % (p_ - 1);
            }
            cur = mul(cur, giant_step_);
        }
        throw std::logic_error("PrimeField: discrete log not found");
    }

    template <class Rng>
    Element random_nonzero(Rng& rng) const {
        return 1 + rng() % (p_ - 1);
    }

private:
    std::uint64_t p_;
    std::uint64_t gen_ = 0;
    std::uint64_t bsgs_m_ = 0;
    std::uint64_t giant_step_ = 0;
    std::unordered_map<std::uint64_t, std::uint64_t> baby_;
};

} // namespace evoalg

#endif
