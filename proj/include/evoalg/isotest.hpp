#ifndef EVOALG_ISOTEST_HPP
#define EVOALG_ISOTEST_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "algebra.hpp"
#include "fingerprint.hpp"

namespace evoalg {

/// Seeded instantiation of a support pattern: every nonzero cell gets a
/// uniformly random nonzero scalar. When the pattern is generically perfect a
/// singular draw is resampled (bounded retries).
template <class F>
EvolutionAlgebra<F> random_instance(const SupportPattern& p, const F& field,
                                    std::uint64_t seed, int* retries_out = nullptr) {
    std::mt19937_64 rng(seed);
    const bool want_nonsingular = generically_perfect(p);
    for (int attempt = 0; attempt < 64; ++attempt) {
        EvolutionAlgebra<F> a(field, p.dim());
        for (int r = 0; r < p.dim(); ++r)
            for (int c = 0; c < p.dim(); ++c)
                if (p.get(r, c)) a.at(r, c) = field.random_nonzero(rng);
        if (!want_nonsingular || is_perfect(a)) {
            if (retries_out) *retries_out = attempt;
            return a;
        }
    }
    throw std::runtime_error("random_instance: retry bound exceeded");
}

namespace detail {

/// Smith normal form of an integer matrix: u * a * v = d with u, v
/// unimodular and d diagonal. Small dense matrices only.
struct Smith {
    std::vector<std::vector<long long>> u, v;
    std::vector<long long> diag;  // length min(m, n)
    int m, n;
};

inline Smith smith_normal_form(std::vector<std::vector<long long>> a) {
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    Smith s;
    s.m = m; s.n = n;
    s.u.assign(m, std::vector<long long>(m, 0));
    s.v.assign(n, std::vector<long long>(n, 0));
    for (int i = 0; i < m; ++i) s.u[i][i] = 1;
    for (int i = 0; i < n; ++i) s.v[i][i] = 1;

    auto row_op = [&](int r1, int r2, long long q) {  // r2 -= q * r1
        for (int c = 0; c < n; ++c) a[r2][c] -= q * a[r1][c];
        for (int c = 0; c < m; ++c) s.u[r2][c] -= q * s.u[r1][c];
    };
    auto col_op = [&](int c1, int c2, long long q) {  // c2 -= q * c1
        for (int r = 0; r < m; ++r) a[r][c2] -= q * a[r][c1];
        for (int r = 0; r < n; ++r) s.v[r][c2] -= q * s.v[r][c1];
    };
    auto row_swap = [&](int r1, int r2) { std::swap(a[r1], a[r2]); std::swap(s.u[r1], s.u[r2]); };
    auto col_swap = [&](int c1, int c2) {
        for (int r = 0; r < m; ++r) std::swap(a[r][c1], a[r][c2]);
        for (int r = 0; r < n; ++r) std::swap(s.v[r][c1], s.v[r][c2]);
    };

    int k = 0;
    while (k < m && k < n) {
        // find a nonzero pivot of least magnitude
        int pr = -1, pc = -1;
        long long best = 0;
        for (int r = k; r < m; ++r)
            for (int c = k; c < n; ++c)
                if (a[r][c] != 0 && (pr < 0 || std::abs(a[r][c]) < best)) {
                    pr = r; pc = c; best = std::abs(a[r][c]);
                }
        if (pr < 0) break;
        row_swap(k, pr);
        col_swap(k, pc);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (int r = k + 1; r < m; ++r) {
                if (a[r][k] == 0) continue;
                long long q = a[r][k] / a[k][k];
                row_op(k, r, q);
                if (a[r][k] != 0) { row_swap(k, r); clean = false; }
            }
            for (int c = k + 1; c < n; ++c) {
                if (a[k][c] == 0) continue;
                long long q = a[k][c] / a[k][k];
                col_op(k, c, q);
                if (a[k][c] != 0) { col_swap(k, c); clean = false; }
            }
        }
        ++k;
    }
    // diagonal form is enough for solving; no divisibility chain needed
    for (int i = 0; i < std::min(m, n); ++i) {
        if (a[i][i] < 0) {
            for (int c = 0; c < n; ++c) a[i][c] = -a[i][c];
            for (int c = 0; c < m; ++c) s.u[i][c] = -s.u[i][c];
        }
        s.diag.push_back(a[i][i]);
    }
    return s;
}

/// Solve a x = b over the integers (modulus 0) or modulo a positive modulus.
/// Returns any solution.
inline std::optional<std::vector<long long>> solve_linear_integer(
        const std::vector<std::vector<long long>>& a,
        const std::vector<long long>& b,
        long long modulus) {
    const int m = static_cast<int>(a.size());
    const int n = m ? static_cast<int>(a[0].size()) : 0;
    if (m == 0) return std::vector<long long>(n, 0);
    Smith s = smith_normal_form(a);
    // c = u * b
    std::vector<long long> c(m, 0);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) c[i] += s.u[i][j] * b[j];
    std::vector<long long> y(n, 0);
    auto emod = [&](long long v, long long md) {
        long long r = v % md;
        return r < 0 ? r + md : r;
    };
    for (int i = 0; i < m; ++i) {
        long long d = i < static_cast<int>(s.diag.size()) ? s.diag[i] : 0;
        if (modulus == 0) {
            if (d == 0) {
                if (c[i] != 0) return std::nullopt;
            } else {
                if (c[i] % d != 0) return std::nullopt;
                if (i < n) y[i] = c[i] / d;
            }
        } else {
            long long ci = emod(c[i], modulus);
            if (d == 0) {
                if (ci != 0) return std::nullopt;
            } else {
                long long g = std::gcd(d, modulus);
                if (ci % g != 0) return std::nullopt;
                // solve d * y ≡ ci (mod modulus)
                long long d2 = d / g, m2 = modulus / g, c2 = ci / g;
                // inverse of d2 mod m2 by extended euclid
                long long t0 = 0, t1 = 1, r0 = m2, r1 = emod(d2, m2 == 0 ? 1 : m2);
                if (m2 == 1) { if (i < n) y[i] = 0; continue; }
                while (r1 != 0) {
                    long long q = r0 / r1;
                    t0 -= q * t1; std::swap(t0, t1);
                    r0 -= q * r1; std::swap(r0, r1);
                }
                long long invd = emod(t0, m2);
                if (i < n) y[i] = emod(c2 % m2 * invd, m2);
            }
        }
    }
    // x = v * y
    std::vector<long long> x(n, 0);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) x[i] += s.v[i][j] * y[j];
    if (modulus != 0)
        for (auto& v : x) v = emod(v, modulus);
    // verify (the normal form machinery is easy to get subtly wrong)
    for (int i = 0; i < m; ++i) {
        long long acc = 0;
        for (int j = 0; j < n; ++j) acc += a[i][j] * x[j];
        long long want = b[i];
        if (modulus == 0) {
            if (acc != want) return std::nullopt;
        } else if (emod(acc - want, modulus) != 0) {
            return std::nullopt;
        }
    }
    return x;
}

} // namespace detail

/// One multiplicative relation scale_i^2 = ratio * scale_j coming from a
/// matched support cell.
template <class F>
struct ScalingRelation {
    int i, j;
    typename F::Element ratio;
};

template <class F>
using ScalingSystem = std::vector<ScalingRelation<F>>;

template <class F>
std::optional<ScalingSystem<F>> build_scaling_system(const Perm& sigma,
                                                     const EvolutionAlgebra<F>& m,
                                                     const EvolutionAlgebra<F>& n_target) {
    const F& f = m.field();
    const int n = m.dim();
    ScalingSystem<F> sys;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) {
            const auto& src = m.at(sigma(j), sigma(i));
            const auto& dst = n_target.at(j, i);
            if (f.is_zero(src) != f.is_zero(dst)) return std::nullopt;  // support mismatch
            if (!f.is_zero(src)) sys.push_back({i, j, f.div(dst, src)});
        }
    return sys;
}

/// Solve for scales over GF(p): discrete-log every ratio and solve the linear
/// congruence system 2 x_i - x_j = log r modulo p-1 by Smith reduction.
inline std::optional<std::vector<PrimeField::Element>> solve_scaling(
        const Perm& sigma, const EvolutionAlgebra<PrimeField>& m,
        const EvolutionAlgebra<PrimeField>& target) {
    const PrimeField& f = m.field();
    auto sys = build_scaling_system(sigma, m, target);
    if (!sys) return std::nullopt;
    const int n = m.dim();
    std::vector<std::vector<long long>> a;
    std::vector<long long> b;
    for (const auto& rel : *sys) {
        std::vector<long long> row(n, 0);
        row[rel.i] += 2;
        row[rel.j] -= 1;
        a.push_back(std::move(row));
        b.push_back(static_cast<long long>(f.dlog(rel.ratio)));
    }
    auto x = detail::solve_linear_integer(a, b, static_cast<long long>(f.modulus() - 1));
    if (!x) return std::nullopt;
    std::vector<PrimeField::Element> d(n);
    for (int i = 0; i < n; ++i) d[i] = f.pow(f.generator(), static_cast<std::uint64_t>((*x)[i]));
    return d;
}

/// Solve for scales over Q: one integer system 2 x_i - x_j = v_p(r) per prime
/// appearing in any ratio, plus a sign system over {-1, +1}.
inline std::optional<std::vector<Rational>> solve_scaling(
        const Perm& sigma, const EvolutionAlgebra<Rationals>& m,
        const EvolutionAlgebra<Rationals>& target) {
    auto sys = build_scaling_system(sigma, m, target);
    if (!sys) return std::nullopt;
    const int n = m.dim();

    // signs first: each relation forces sign(scale_j) = sign(ratio)
    std::vector<int> sign(n, 0);
    for (const auto& rel : *sys) {
        int s = rel.ratio.sign();
        if (sign[rel.j] == 0) sign[rel.j] = s;
        else if (sign[rel.j] != s) return std::nullopt;
    }
    for (int& s : sign)
        if (s == 0) s = 1;

    // exponent systems share the coefficient matrix
    std::vector<std::vector<long long>> a;
    std::map<BigInt, std::vector<long long>> rhs;  // prime -> v_p per relation
    const std::size_t rels = sys->size();
    for (std::size_t r = 0; r < rels; ++r) {
        std::vector<long long> row(n, 0);
        row[(*sys)[r].i] += 2;
        row[(*sys)[r].j] -= 1;
        a.push_back(std::move(row));
        for (auto& [p, e] : (*sys)[r].ratio.factor()) {
            auto& v = rhs.try_emplace(p, std::vector<long long>(rels, 0)).first->second;
            v[r] = e;
        }
    }
    std::vector<Rational> d(n, Rational(1));
    for (auto& [p, b] : rhs) {
        auto x = detail::solve_linear_integer(a, b, 0);
        if (!x) return std::nullopt;
        for (int i = 0; i < n; ++i) {
            long long e = (*x)[i];
            BigInt pw = boost::multiprecision::pow(p, static_cast<unsigned>(e < 0 ? -e : e));
            d[i] = e >= 0 ? d[i] * Rational(pw) : d[i] / Rational(pw);
        }
    }
    for (int i = 0; i < n; ++i)
        if (sign[i] < 0) d[i] = -d[i];
    return d;
}

enum class IsoVerdict { Isomorphic, SupportObstruction, NoBaseFieldScaling };

template <class F>
struct IsoResult {
    IsoVerdict verdict;
    std::optional<MonomialMap<F>> map;
};

/// Exhaustive monomial-isomorphism search for perfect algebras: try every
/// index relabeling in lexicographic order, solve the scaling system exactly,
/// return the first verified success. For perfect algebras monomial
/// equivalence is the same thing as isomorphism.
template <class F>
IsoResult<F> iso_result(const EvolutionAlgebra<F>& m, const EvolutionAlgebra<F>& target) {
    if (m.dim() != target.dim()) throw std::invalid_argument("iso: dimension mismatch");
    if (!is_perfect(m) || !is_perfect(target))
        throw std::invalid_argument("iso: the monomial criterion needs perfect algebras");
    const int n = m.dim();
    SupportPattern pm = support(m), pt = support(target);
    if (fingerprint(pm) != fingerprint(pt)) return {IsoVerdict::SupportObstruction, std::nullopt};
    bool support_matched = false;
    std::vector<int> img(n);
    std::iota(img.begin(), img.end(), 0);
    do {
        Perm sigma{img};
        if (permute_pattern(sigma, pm) != pt) continue;
        support_matched = true;
        auto d = solve_scaling(sigma, m, target);
        if (!d) continue;
        MonomialMap<F> q{sigma, *d};
        if (apply_monomial(q, m) == target) return {IsoVerdict::Isomorphic, q};
    } while (std::next_permutation(img.begin(), img.end()));
    return {support_matched ? IsoVerdict::NoBaseFieldScaling : IsoVerdict::SupportObstruction,
            std::nullopt};
}

template <class F>
std::optional<MonomialMap<F>> find_isomorphism(const EvolutionAlgebra<F>& m,
                                               const EvolutionAlgebra<F>& target) {
    return iso_result(m, target).map;
}

} // namespace evoalg

#endif
