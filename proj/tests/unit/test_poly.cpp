#include <doctest.h>

#include <random>

#include "fqrep/errors.hpp"
#include "fqrep/poly.hpp"
#include "fqrep/realize.hpp"

using namespace fqrep;

namespace {

Poly random_poly(const FieldCtx& F, int deg, std::mt19937_64& rng) {
    std::uniform_int_distribution<i64> d(0, F.characteristic() - 1);
    std::vector<i64> c(deg + 1);
    for (auto& x : c) x = d(rng);
    return Poly::from_ints(F, c);
}

// Irreducibility oracle: no monic factor of degree <= deg/2, by enumerating
// every monic candidate (tiny fields only).
bool irreducible_by_trial_division(const Poly& f) {
    const FieldCtx& F = f.ctx();
    const i64 s = F.characteristic();
    for (int d = 1; 2 * d <= f.degree(); ++d) {
        std::vector<i64> c(d + 1, 0);
        c[d] = 1;
        for (;;) {
            if ((f % Poly::from_ints(F, c)).is_zero()) return false;
            int i = 0;
            while (i < d && ++c[i] == s) c[i++] = 0;
            if (i == d) break;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("cyclotomic quartic over F_19") {
    const FieldCtx F = make_prime_field(19);
    const Poly f = Poly::from_ints(F, {1, 1, 1, 1, 1});
    CHECK(f.derivative() == Poly::from_ints(F, {1, 2, 3, 4}));
    CHECK((f % Poly::from_ints(F, {1, -4, 1})).is_zero());
    const auto fs = factor(f);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].poly == Poly::from_ints(F, {1, 5, 1}));  // constant term first, then 5 < 15
    CHECK(fs[1].poly == Poly::from_ints(F, {1, -4, 1}));
    CHECK(fs[0].multiplicity == 1);
    CHECK(f.to_string() == "x^4 + x^3 + x^2 + x + 1");
}

TEST_CASE("Bezout identity for the two quadratic factors") {
    const FieldCtx F = make_prime_field(19);
    const Poly a = Poly::from_ints(F, {1, 5, 1}), b = Poly::from_ints(F, {1, -4, 1});
    const PolyXgcd r = xgcd(a, b);
    CHECK(r.g.is_one());
    CHECK(r.u == Poly::from_ints(F, {-8, 2}));
    CHECK(r.v == Poly::from_ints(F, {9, -2}));
    CHECK(r.u * a + r.v * b == r.g);
    const PolyXgcd z = xgcd(Poly::from_ints(F, {4, 2}), Poly(F));
    CHECK(z.g == Poly::from_ints(F, {2, 1}));
    CHECK(z.u == Poly::from_ints(F, {10}));
}

TEST_CASE("small factorizations") {
    const FieldCtx F5 = make_prime_field(5);
    CHECK(is_irreducible(Poly::from_ints(F5, {1, 1, 1})));
    const auto fs = factor(Poly::from_ints(F5, {-1, 0, 1}));
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].poly == Poly::from_ints(F5, {1, 1}));  // x + 1 sorts before x - 1 = x + 4
    CHECK(fs[1].poly == Poly::from_ints(F5, {-1, 1}));
    const auto sq = factor(Poly::from_ints(F5, {1, 2, 1}) * Poly::from_ints(F5, {2, 0, 1}));
    REQUIRE(sq.size() == 2);
    CHECK(sq[0].multiplicity + sq[1].multiplicity == 3);
    CHECK_THROWS_AS(divmod(Poly::from_ints(F5, {1, 1}), Poly(F5)), DivisionByZero);
}

TEST_CASE("property: factor multiplies back and each factor is irreducible") {
    std::mt19937_64 rng(2024);
    for (u64 s : {2u, 3u, 5u, 7u}) {
        const FieldCtx F = make_prime_field(s);
        for (int trial = 0; trial < 40; ++trial) {
            Poly f = random_poly(F, 1 + trial % 8, rng);
            if (f.is_zero() || f.degree() < 1) continue;
            f = f.monic();
            Poly back = Poly::from_ints(F, {1});
            for (const auto& [p, mult] : factor(f)) {
                REQUIRE(p.is_monic());
                REQUIRE(irreducible_by_trial_division(p));
                REQUIRE(is_irreducible(p));
                for (int i = 0; i < mult; ++i) back = back * p;
            }
            REQUIRE(back == f);
        }
    }
}

TEST_CASE("factor over a non-prime subfield F_4 inside F_16") {
    const FieldCtx L = make_field(2, 4, 2);
    // x^5 - 1 over F_4 splits into x - 1 and two quadratics
    const Poly f = Poly::from_ints(L, {-1, 0, 0, 0, 0, 1});
    const auto fs = factor(f);
    REQUIRE(fs.size() == 3);
    Poly back = Poly::from_ints(L, {1});
    for (const auto& [p, mult] : fs) {
        REQUIRE(p.over_subfield());
        back = back * p;
    }
    CHECK(back == f);
}

TEST_CASE("property: xgcd Bezout identity on random pairs") {
    std::mt19937_64 rng(11);
    const FieldCtx L = make_field(3, 2, 2);
    const FieldCtx F = make_prime_field(37);
    for (const FieldCtx* ctx : {&L, &F})
        for (int i = 0; i < 60; ++i) {
            const Poly a = random_poly(*ctx, i % 7, rng), b = random_poly(*ctx, (i * 3) % 6, rng);
            if (a.is_zero() && b.is_zero()) continue;
            const PolyXgcd r = xgcd(a, b);
            REQUIRE(r.u * a + r.v * b == r.g);
            REQUIRE(r.g.is_monic());
            REQUIRE((a % r.g).is_zero());
            REQUIRE((b % r.g).is_zero());
        }
}

TEST_CASE("orbit polynomials") {
    const auto [L19, z5] = realization_field(19, 5);
    CHECK(orbit_poly(z5, 2, 4) == Poly::from_ints(L19, {1, 1, 1, 1, 1}));

    const auto [L37, z7] = realization_field(37, 7);
    const Poly f = orbit_poly(z7, 2, 3);
    CHECK(f.degree() == 3);
    CHECK(f.over_subfield());
    for (u64 e : {1u, 2u, 4u}) CHECK(f.eval(z7.pow(e)).is_zero());
    // expand the product directly as the oracle
    Poly prod = Poly::from_ints(L37, {1});
    for (u64 e : {1u, 2u, 4u}) prod = prod * Poly(L37, {-z7.pow(e), FieldElem::one(L37)});
    CHECK(prod == f);

    // 3 is not a power of 2 mod 7, so the orbit is not defined over F_3
    const auto [L3, w7] = realization_field(3, 7);
    CHECK_THROWS_AS(orbit_poly(w7, 2, 3), NotRealizable);
}

TEST_CASE("crt_norm_solution reproduces z(x) = 4x^3 - x with z1 pinned") {
    const auto [L, zeta] = realization_field(19, 5);
    const Poly f = orbit_poly(zeta, 2, 4);
    const FieldElem eta = FieldElem::from_int(L, -1);
    const NormSolution sol = crt_norm_solution(f, eta, 2, 4, 5, zeta, Poly::from_ints(L, {3, 2}));
    CHECK(sol.z == Poly::from_ints(L, {0, -1, 0, 4}));
    CHECK(sol.factors[sol.root_factor] == Poly::from_ints(L, {1, -4, 1}));
    CHECK(norm_product_mod(sol.z, 2, 4, 5, f) == Poly::constant(eta));
    CHECK(crt_norm_solution(f, FieldElem::one(L), 2, 4, 5, zeta).z.is_one());
}

TEST_CASE("crt_norm_solution with an irreducible orbit polynomial") {
    const auto [L, zeta] = realization_field(37, 7);
    const Poly f = orbit_poly(zeta, 2, 3);
    const auto fs = factor(f);
    REQUIRE(fs.size() == 1);
    for (i64 target : {10, 26, 36}) {
        const FieldElem eta = FieldElem::from_int(L, target);
        const NormSolution sol = crt_norm_solution(f, eta, 2, 3, 7, zeta);
        REQUIRE(sol.z == sol.z1);
        // brute-force reduction of z(x) z(x^2) z(x^4) mod f
        Poly prod = Poly::from_ints(L, {1});
        for (u64 d : {1u, 2u, 4u}) prod = (prod * substitute_power(sol.z, d)) % f;
        REQUIRE(prod == Poly::constant(eta));
    }
}

TEST_CASE("property: f(x) divides f(x^k) and congruences survive x -> x^k") {
    std::mt19937_64 rng(5);
    for (auto [m, k, q] : std::vector<std::tuple<u64, u64, u64>>{{5, 2, 19}, {7, 2, 37}, {7, 2, 11}, {9, 2, 7}, {13, 5, 8}, {11, 3, 5}}) {
        const auto [L, zeta] = realization_field(q, m);
        const u64 t = ord_mod(k, m);
        const Poly f = orbit_poly(zeta, k, t);
        REQUIRE((substitute_power(f, k) % f).is_zero());
        const FieldCtx& ctx = L;
        for (int i = 0; i < 15; ++i) {
            const Poly g = random_poly(ctx, 2 * t + 3, rng);
            const Poly h = g + random_poly(ctx, 3, rng) * f;
            REQUIRE(g % f == h % f);
            REQUIRE(substitute_power(g, k) % f == substitute_power(h, k) % f);
            REQUIRE(substitute_power_mod(g, k, m) % f == substitute_power(g, k) % f);
        }
    }
}
