#include <catch2/catch_amalgamated.hpp>

#include <evoalg/isotest.hpp>

#include <numeric>
#include <random>

using namespace evoalg;

namespace {

SupportPattern from_rows(std::initializer_list<const char*> rows) {
    SupportPattern p(static_cast<int>(rows.size()));
    int r = 0;
    for (const char* row : rows) {
        for (int c = 0; row[c]; ++c)
            if (row[c] == '*' || row[c] == '1') p.set(r, c, true);
        ++r;
    }
    return p;
}

EvolutionAlgebra<Rationals> from_ints(std::initializer_list<std::initializer_list<int>> rows) {
    Rationals q;
    int n = static_cast<int>(rows.size());
    EvolutionAlgebra<Rationals> a(q, n);
    int r = 0;
    for (auto& row : rows) {
        int c = 0;
        for (int v : row) a.at(r, c++) = Rational(v);
        ++r;
    }
    return a;
}

} // namespace

TEST_CASE("random instances are deterministic and land on the support") {
    PrimeField f(10007);
    auto p = from_rows({"**00", "0*0*", "00*0", "000*"});
    auto a = random_instance(p, f, 123);
    auto b = random_instance(p, f, 123);
    CHECK(a == b);
    CHECK(support(a) == p);
    auto c = random_instance(p, f, 124);
    CHECK_FALSE(a == c);

    SupportPattern zero(3);
    auto z = random_instance(zero, f, 5);
    CHECK(support(z).count() == 0);
}

TEST_CASE("generic perfectness agrees with random instantiation") {
    PrimeField f(10007);
    std::mt19937_64 rng(43);
    int worst = 0;
    for (int k = 0; k < 1000; ++k) {
        SupportPattern p(4, static_cast<std::uint32_t>(rng() & 0xFFFF));
        if (generically_perfect(p)) {
            int retries = 0;
            auto a = random_instance(p, f, k, &retries);
            CHECK(is_perfect(a));
            worst = std::max(worst, retries);
        } else {
            // no transversal: the determinant vanishes identically
            auto a = random_instance(p, f, k);
            CHECK_FALSE(is_perfect(a));
        }
    }
    CHECK(worst <= 3);
}

TEST_CASE("integer linear solver handles plain and modular systems") {
    using detail::solve_linear_integer;
    SECTION("integers") {
        // 2x - y = 3, x + y = 3  ->  x = 2, y = 1
        auto s = solve_linear_integer({{2, -1}, {1, 1}}, {3, 3}, 0);
        REQUIRE(s.has_value());
        CHECK((*s)[0] == 2);
        CHECK((*s)[1] == 1);
        CHECK_FALSE(solve_linear_integer({{2, 0}, {2, 0}}, {1, 2}, 0).has_value());
        CHECK_FALSE(solve_linear_integer({{2}}, {3}, 0).has_value());  // 2x = 3 has no integer root
    }
    SECTION("modular") {
        // 2x = 4 (mod 6) has solutions x = 2 and x = 5
        auto s = solve_linear_integer({{2}}, {4}, 6);
        REQUIRE(s.has_value());
        CHECK((2 * (*s)[0]) % 6 == 4);
        CHECK_FALSE(solve_linear_integer({{2}}, {3}, 6).has_value());  // gcd(2,6) does not divide 3
        auto t = solve_linear_integer({{4, 6}, {2, 3}}, {2, 1}, 10);
        REQUIRE(t.has_value());
        CHECK(((4 * (*t)[0] + 6 * (*t)[1]) % 10 + 10) % 10 == 2);
    }
    SECTION("random modular systems verify") {
        std::mt19937_64 rng(47);
        for (int k = 0; k < 200; ++k) {
            int m = 1 + static_cast<int>(rng() % 5), n = 1 + static_cast<int>(rng() % 4);
            std::vector<std::vector<long long>> a(m, std::vector<long long>(n));
            std::vector<long long> x(n), b(m, 0);
            long long mod = 2 + static_cast<long long>(rng() % 40);
            for (auto& row : a)
                for (auto& v : row) v = static_cast<long long>(rng() % 7) - 3;
            for (auto& v : x) v = static_cast<long long>(rng() % mod);
            for (int i = 0; i < m; ++i) {
                for (int j = 0; j < n; ++j) b[i] += a[i][j] * x[j];
                b[i] %= mod;
            }
            auto s = solve_linear_integer(a, b, mod);
            REQUIRE(s.has_value());  // constructed to be solvable
        }
    }
}

TEST_CASE("scaling solve recovers the one-dimensional action") {
    auto m = from_ints({{1}});
    auto n = from_ints({{2}});
    auto d = solve_scaling(Perm::identity(1), m, n);
    REQUIRE(d.has_value());
    CHECK((*d)[0] == Rational(2));
}

TEST_CASE("identity pair admits the all-ones scaling") {
    auto m = from_ints({{1, 1, 0}, {0, 1, 1}, {1, 0, 1}});
    auto d = solve_scaling(Perm::identity(3), m, m);
    REQUIRE(d.has_value());
    MonomialMap<Rationals> q{Perm::identity(3), *d};
    CHECK(apply_monomial(q, m) == m);
}

TEST_CASE("isomorphism oracle on the worked pair") {
    auto left = from_ints({{1, 1, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}});
    auto right = from_ints({{1, 0, 0, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 1, 1}});
    auto r = iso_result(left, right);
    REQUIRE(r.verdict == IsoVerdict::Isomorphic);
    REQUIRE(r.map.has_value());
    CHECK(apply_monomial(*r.map, left) == right);
    for (const auto& s : r.map->scales) CHECK(s == Rational(1));

    auto same = find_isomorphism(left, left);
    REQUIRE(same.has_value());
    CHECK(same->sigma.is_identity());
}

TEST_CASE("fingerprint obstruction short-circuits") {
    auto a = from_ints({{1, 0}, {0, 1}});
    auto b = from_ints({{1, 1}, {0, 1}});
    CHECK(iso_result(a, b).verdict == IsoVerdict::SupportObstruction);
}

TEST_CASE("root obstruction over Q is reported as a scaling failure") {
    // d^2/d * 1 = 2 forces d = 2 in dimension one, but squares can obstruct:
    // the 2x2 loop pair below needs d1^2 = 2 d2, d2^2 = d1 -> d1^3 = ...
    auto m = from_ints({{1, 0}, {0, 1}});
    auto n = from_ints({{2, 0}, {0, 2}});
    auto r = iso_result(m, n);
    // d_i^2/d_i = 2 is solvable with d = 2, so these ARE isomorphic
    CHECK(r.verdict == IsoVerdict::Isomorphic);

    auto n2 = from_ints({{2, 0}, {0, 3}});
    auto r2 = iso_result(m, n2);
    CHECK(r2.verdict == IsoVerdict::Isomorphic);

    // genuine obstruction: loop value transports by d, cycle entries by
    // products forcing a square root of 2 which Q lacks
    auto c1 = from_ints({{0, 1}, {1, 0}});
    auto c2 = from_ints({{0, 2}, {1, 0}});
    auto r3 = iso_result(c1, c2);
    if (r3.verdict == IsoVerdict::Isomorphic) {
        CHECK(apply_monomial(*r3.map, c1) == c2);
    } else {
        CHECK(r3.verdict == IsoVerdict::NoBaseFieldScaling);
    }
}

TEST_CASE("round trip over GF(10007)") {
    PrimeField f(10007);
    std::mt19937_64 rng(53);
    int done = 0;
    std::uint64_t seed = 10;
    while (done < 120) {
        SupportPattern p(4, static_cast<std::uint32_t>(rng() & 0xFFFF));
        if (!generically_perfect(p)) continue;
        auto m = random_instance(p, f, seed++);
        std::vector<int> img{0, 1, 2, 3};
        std::shuffle(img.begin(), img.end(), rng);
        std::vector<PrimeField::Element> d(4);
        for (auto& x : d) x = f.random_nonzero(rng);
        MonomialMap<PrimeField> q{Perm(img), d};
        auto n = apply_monomial(q, m);
        auto r = iso_result(m, n);
        REQUIRE(r.verdict == IsoVerdict::Isomorphic);
        CHECK(apply_monomial(*r.map, m) == n);
        ++done;
    }
}

TEST_CASE("round trip over Q with rational scales") {
    Rationals field;
    std::mt19937_64 rng(59);
    int done = 0;
    std::uint64_t seed = 900;
    while (done < 40) {
        SupportPattern p(4, static_cast<std::uint32_t>(rng() & 0xFFFF));
        if (!generically_perfect(p)) continue;
        auto m = random_instance(p, field, seed++);
        if (!is_perfect(m)) continue;
        std::vector<int> img{0, 1, 2, 3};
        std::shuffle(img.begin(), img.end(), rng);
        std::vector<Rational> d(4);
        static const int choices[] = {1, -1, 2, -2, 3, 6};
        for (auto& x : d) x = Rational(choices[rng() % 6]);
        MonomialMap<Rationals> q{Perm(img), d};
        auto n = apply_monomial(q, m);
        auto r = iso_result(m, n);
        REQUIRE(r.verdict == IsoVerdict::Isomorphic);
        CHECK(apply_monomial(*r.map, m) == n);
        ++done;
    }
}

TEST_CASE("non-perfect inputs are rejected") {
    auto bad = from_ints({{1, 1}, {1, 1}});
    auto good = from_ints({{1, 0}, {0, 1}});
    CHECK_THROWS(iso_result(bad, good));
    CHECK_THROWS(iso_result(good, bad));
}
