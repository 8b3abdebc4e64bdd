#include <doctest.h>

#include <random>
#include <set>

#include "fqrep/errors.hpp"
#include "fqrep/field.hpp"

using namespace fqrep;

namespace {

FieldElem el(const FieldCtx& L, std::vector<i64> c) { return FieldElem::from_coeffs(L, c); }

FieldElem random_elem(const FieldCtx& L, std::mt19937_64& rng) {
    std::uniform_int_distribution<i64> d(0, L.characteristic() - 1);
    std::vector<i64> c(L.degree());
    for (auto& x : c) x = d(rng);
    return FieldElem::from_coeffs(L, c);
}

// All elements of a small field, by coefficient odometer.
std::vector<FieldElem> all_elements(const FieldCtx& L) {
    const u64 s = L.characteristic();
    std::vector<i64> c(L.degree(), 0);
    std::vector<FieldElem> out;
    for (;;) {
        out.push_back(FieldElem::from_coeffs(L, c));
        std::size_t i = 0;
        while (i < c.size() && ++c[i] == static_cast<i64>(s)) c[i++] = 0;
        if (i == c.size()) break;
    }
    return out;
}

}  // namespace

TEST_CASE("prime field construction") {
    CHECK(make_prime_field(19).characteristic() == 19);
    CHECK(make_prime_field(2).degree() == 1);
    CHECK_THROWS_AS(make_prime_field(15), NonPrime);
}

TEST_CASE("F_19: 9^2 = 5") {
    const FieldCtx F = make_prime_field(19);
    CHECK(FieldElem::from_int(F, 9).pow(2) == FieldElem::from_int(F, 5));
    CHECK_THROWS_AS(FieldElem::zero(F).inv(), DivisionByZero);
}

TEST_CASE("F_361 uses x^2 + 1 and multiplies like Gaussian integers mod 19") {
    const FieldCtx L = make_field(19, 2);
    CHECK(L.modulus() == zp::Coeffs{1, 0, 1});
    CHECK(L.element_count() == 361);
    std::mt19937_64 rng(7);
    for (int i = 0; i < 200; ++i) {
        const FieldElem x = random_elem(L, rng), y = random_elem(L, rng);
        const i64 a = x.coeffs()[0], b = x.coeffs()[1], c = y.coeffs()[0], d = y.coeffs()[1];
        REQUIRE(x * y == el(L, {a * c - b * d, a * d + b * c}));
    }
}

TEST_CASE("F_25 modulus is x^2 + x + 1 and contains a primitive cube root") {
    const FieldCtx L = make_field(5, 2);
    CHECK(L.modulus() == zp::Coeffs{1, 1, 1});
    const auto [K, zeta] = primitive_root_of_unity(make_prime_field(5), 3);
    CHECK(K.degree() == 2);
    CHECK((zeta * zeta + zeta + FieldElem::one(K)).is_zero());
}

TEST_CASE("primitive 5th root over F_19") {
    const auto [L, zeta] = primitive_root_of_unity(make_prime_field(19), 5);
    CHECK(L.degree() == 2);
    CHECK(zeta == el(L, {2, 4}));
    // a root of x^2 - 4x + 1
    CHECK((zeta * zeta - FieldElem::from_int(L, 4) * zeta + FieldElem::one(L)).is_zero());
    CHECK(frobenius(zeta, 1) == zeta.pow(4));
    CHECK(has_order_exactly(zeta, 5));
    CHECK_THROWS_AS(primitive_root_of_unity(make_prime_field(5), 10), CharDividesM);
}

TEST_CASE("norm of 3 + 2 zeta is -1 in F_19(zeta_5)") {
    const auto [L, zeta] = primitive_root_of_unity(make_prime_field(19), 5);
    const FieldElem z = FieldElem::from_int(L, 3) + FieldElem::from_int(L, 2) * zeta;
    CHECK(norm(z) == FieldElem::from_int(L, 18));
    // closed form z^{(|L|-1)/(|F|-1)} as an independent route
    CHECK(norm(z) == z.pow(20));
    CHECK(norm(FieldElem::one(L)).is_one());
    CHECK(norm(FieldElem::from_int(L, 7)) == FieldElem::from_int(L, 49));
    CHECK(norm(norm_preimage(L, FieldElem::from_int(L, 18))) == FieldElem::from_int(L, 18));
}

TEST_CASE("primitive roots of unity have exact order") {
    for (u64 q : {2u, 3u, 4u, 5u, 7u, 9u, 19u, 37u})
        for (u64 m = 1; m <= 21; ++m) {
            if (std::gcd(q, m) != 1) continue;
            const auto pp = *as_prime_power(q);
            const auto [L, zeta] = primitive_root_of_unity(make_field(pp.prime, pp.exponent, pp.exponent), m);
            REQUIRE(zeta.pow(m).is_one());
            for (u64 j : prime_factors(m)) REQUIRE(!zeta.pow(m / j).is_one());
            const u64 v = m == 1 ? 1 : ord_mod(q % m, m);
            REQUIRE(L.degree() == pp.exponent * static_cast<int>(v));
        }
}

TEST_CASE("property: Lagrange, Frobenius automorphism, norm multiplicativity") {
    std::mt19937_64 rng(42);
    for (auto [s, D, e] : std::vector<std::tuple<u64, int, int>>{{2, 7, 1}, {3, 4, 2}, {19, 2, 1}, {37, 3, 1}, {5, 6, 3}}) {
        const FieldCtx L = make_field(s, D, e);
        const BigUInt order_minus_one = L.element_count() - 1;
        for (int i = 0; i < 40; ++i) {
            const FieldElem x = random_elem(L, rng), y = random_elem(L, rng);
            if (!x.is_zero()) REQUIRE(x.pow(order_minus_one).is_one());
            REQUIRE(frobenius(x + y, 1) == frobenius(x, 1) + frobenius(y, 1));
            REQUIRE(frobenius(x * y, 1) == frobenius(x, 1) * frobenius(y, 1));
            REQUIRE(frobenius(x, D) == x);
            REQUIRE(norm(x * y) == norm(x) * norm(y));
            REQUIRE(is_fixed_by(norm(x), e));
        }
    }
}

TEST_CASE("property: norm_preimage then norm is the identity, exhaustive for |F| <= 100") {
    for (u64 q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u, 25u, 27u, 49u, 81u, 97u})
        for (int v : {2, 3}) {
            const auto pp = *as_prime_power(q);
            if (checked_pow(q, v) > 1'000'000) continue;
            const FieldCtx L = make_field(pp.prime, pp.exponent * v, pp.exponent);
            const SubfieldView V = subfield_view(L);
            for (u64 i = 1; i < V.order(); ++i) {
                const FieldElem eta = V.element_at(i);
                REQUIRE(!eta.is_zero());
                REQUIRE(norm(norm_preimage(L, eta)) == eta);
            }
        }
}

TEST_CASE("property: the fixed set of x -> x^{s^e} has s^e elements") {
    for (auto [s, D] : std::vector<std::pair<u64, int>>{{2, 6}, {2, 12}, {3, 4}, {3, 6}, {5, 4}, {7, 4}, {19, 2}, {97, 2}}) {
        const FieldCtx L = make_field(s, D);
        for (int e = 1; e <= D; ++e) {
            if (D % e) continue;
            u64 fixed = 0;
            for (const FieldElem& x : all_elements(L)) fixed += is_fixed_by(x, e);
            REQUIRE(fixed == checked_pow(s, e));
            REQUIRE(subfield_view(L, e).order() == fixed);
        }
    }
}

TEST_CASE("subfield view enumerates exactly the fixed field") {
    const FieldCtx L = make_field(3, 4, 2);
    const SubfieldView V = subfield_view(L);
    std::set<std::vector<u32>> seen;
    for (u64 i = 0; i < V.order(); ++i) {
        const FieldElem x = V.element_at(i);
        REQUIRE(V.contains(x));
        seen.insert({x.coeffs().begin(), x.coeffs().end()});
    }
    CHECK(seen.size() == 9);
}

TEST_CASE("coordinates in powers of zeta") {
    const auto [L, zeta] = primitive_root_of_unity(make_prime_field(19), 5);
    const FieldElem z = FieldElem::from_int(L, 3) + FieldElem::from_int(L, 2) * zeta;
    const auto c = coordinates_in_powers(z, zeta);
    REQUIRE(c);
    CHECK((*c)[0] == FieldElem::from_int(L, 3));
    CHECK((*c)[1] == FieldElem::from_int(L, 2));
}

TEST_CASE("context mismatch is rejected") {
    const FieldCtx A = make_prime_field(5), B = make_prime_field(7);
    CHECK_THROWS_AS(FieldElem::one(A) + FieldElem::one(B), ContextMismatch);
}
