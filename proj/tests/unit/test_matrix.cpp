#include <doctest.h>

#include <random>

#include "fqrep/errors.hpp"
#include "fqrep/matrix.hpp"

using namespace fqrep;

namespace {

FieldElem random_elem(const FieldCtx& L, std::mt19937_64& rng) {
    std::uniform_int_distribution<i64> d(0, L.characteristic() - 1);
    std::vector<i64> c(L.degree());
    for (auto& x : c) x = d(rng);
    return FieldElem::from_coeffs(L, c);
}

Matrix random_matrix(const FieldCtx& L, std::size_t n, std::mt19937_64& rng) {
    Matrix m(L, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = random_elem(L, rng);
    return m;
}

Matrix random_invertible(const FieldCtx& L, std::size_t n, std::mt19937_64& rng) {
    for (;;) {
        Matrix m = random_matrix(L, n, rng);
        if (!m.det().is_zero()) return m;
    }
}

// n-cycle permutation matrix sending e_i to e_{i+1}
Matrix cycle_matrix(const FieldCtx& L, std::size_t n) {
    Matrix c(L, n);
    for (std::size_t i = 0; i < n; ++i) c((i + 1) % n, i) = FieldElem::one(L);
    return c;
}

}  // namespace

TEST_CASE("companion matrix of the cyclotomic quartic over F_19") {
    const FieldCtx F = make_prime_field(19);
    const Poly f = Poly::from_ints(F, {1, 1, 1, 1, 1});
    const Matrix c = companion_matrix(f);
    CHECK(c == Matrix::from_ints(F, {{0, 0, 0, -1}, {1, 0, 0, -1}, {0, 1, 0, -1}, {0, 0, 1, -1}}));
    CHECK(char_poly(c) == f);
    CHECK(c.pow(5).is_identity());
    CHECK(companion_matrix(Poly::from_ints(F, {-7, 1})) == Matrix::from_ints(F, {{7}}));
}

TEST_CASE("char_poly agrees with det(cI - M) at every point of a small field") {
    std::mt19937_64 rng(3);
    for (auto [s, D] : std::vector<std::pair<u64, int>>{{2, 1}, {3, 1}, {5, 1}, {2, 3}, {3, 2}}) {
        const FieldCtx L = make_field(s, D);
        for (std::size_t n = 1; n <= 6; ++n) {
            const Matrix m = random_matrix(L, n, rng);
            const Poly cp = char_poly(m);
            REQUIRE(cp.degree() == static_cast<int>(n));
            REQUIRE(cp.is_monic());
            for (u64 i = 0; i < std::min<u64>(30, checked_pow(s, D)); ++i) {
                const FieldElem c = random_elem(L, rng);
                REQUIRE(cp.eval(c) == (c * Matrix::identity(L, n) - m).det());
            }
        }
    }
}

TEST_CASE("char_poly of companion(f) is f for random monic f") {
    std::mt19937_64 rng(9);
    const FieldCtx F = make_prime_field(7);
    for (int i = 0; i < 30; ++i) {
        std::vector<i64> c(1 + i % 6 + 1);
        for (auto& x : c) x = static_cast<i64>(rng() % 7);
        c.back() = 1;
        const Poly f = Poly::from_ints(F, c);
        REQUIRE(char_poly(companion_matrix(f)) == f);
    }
}

TEST_CASE("property: similarity preserves char_poly, trace is cyclic") {
    std::mt19937_64 rng(17);
    const FieldCtx L = make_field(19, 2);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 1 + i % 5;
        const Matrix m = random_matrix(L, n, rng), v = random_invertible(L, n, rng), w = random_matrix(L, n, rng);
        REQUIRE(char_poly(conjugate(v, m)) == char_poly(m));
        REQUIRE((m * w).trace() == (w * m).trace());
        REQUIRE(v * v.inverse() == Matrix::identity(L, n));
    }
}

TEST_CASE("singular and degenerate inputs") {
    const FieldCtx F = make_prime_field(5);
    CHECK_THROWS_AS(Matrix::from_ints(F, {{1, 2}, {2, 4}}).inverse(), Singular);
    CHECK_THROWS_AS(vandermonde({FieldElem::one(F), FieldElem::one(F)}), DuplicatePoints);
}

TEST_CASE("vandermonde_inverse, exhaustive over distinct point tuples in F_5 and F_4") {
    for (auto [s, D] : std::vector<std::pair<u64, int>>{{5, 1}, {2, 2}}) {
        const FieldCtx L = make_field(s, D);
        std::vector<FieldElem> all;
        for (u64 i = 0; i < checked_pow(s, D); ++i) all.push_back(subfield_view(L, D).element_at(i));
        const std::size_t N = all.size();
        for (std::size_t a = 0; a < N; ++a)
            for (std::size_t b = 0; b < N; ++b)
                for (std::size_t c = 0; c < N; ++c) {
                    if (a == b || b == c || a == c) continue;
                    const std::vector<FieldElem> pts{all[a], all[b], all[c]};
                    REQUIRE(vandermonde_inverse(pts) * vandermonde(pts) == Matrix::identity(L, 3));
                    REQUIRE(vandermonde_inverse({all[a], all[b]}) * vandermonde({all[a], all[b]}) ==
                            Matrix::identity(L, 2));
                }
    }
}

TEST_CASE("property: V^-1 C V lies over F_q for a Frobenius cycle of points (50 instances)") {
    std::mt19937_64 rng(23);
    const std::vector<std::tuple<u64, int, int>> shapes{{2, 6, 1}, {2, 6, 2}, {3, 4, 1}, {3, 6, 2}, {5, 3, 1},
                                                         {7, 2, 1}, {19, 2, 1}, {2, 8, 2}, {37, 3, 1}, {2, 4, 2}};
    int done = 0;
    while (done < 50) {
        const auto [s, D, e] = shapes[done % shapes.size()];
        const FieldCtx L = make_field(s, D, e);
        const std::size_t n = static_cast<std::size_t>(D / e);
        const FieldElem x = random_elem(L, rng);
        std::vector<FieldElem> pts{x};
        while (pts.size() < n) pts.push_back(frobenius(pts.back(), e));
        if (frobenius(pts.back(), e) != x) continue;
        bool distinct = true;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j) distinct &= pts[i] != pts[j];
        if (!distinct) continue;
        const Matrix v = vandermonde(pts);
        const Matrix d = conjugate(v, cycle_matrix(L, n));
        REQUIRE(entries_in_subfield(d, e));
        REQUIRE(vandermonde_inverse(pts) * v == Matrix::identity(L, n));
        ++done;
    }
}

TEST_CASE("find_intertwiner certifies conjugate pairs and rejects different char polys") {
    std::mt19937_64 rng(31);
    const FieldCtx L = make_field(5, 2);
    for (int i = 0; i < 20; ++i) {
        const std::size_t n = 1 + i % 4;
        const Matrix a = random_matrix(L, n, rng), b = random_matrix(L, n, rng), v = random_invertible(L, n, rng);
        const auto x = find_intertwiner(a, b, conjugate(v, a), conjugate(v, b));
        REQUIRE(x);
        REQUIRE(!x->det().is_zero());
        REQUIRE(a * *x == *x * conjugate(v, a));
        REQUIRE(b * *x == *x * conjugate(v, b));
    }
    const Matrix a = Matrix::from_ints(L, {{1, 0}, {0, 2}}), b = Matrix::from_ints(L, {{1, 0}, {0, 3}});
    CHECK(!find_intertwiner(a, a, b, b));
}

TEST_CASE("block diagonal and nullspace") {
    const FieldCtx F = make_prime_field(7);
    const Matrix a = Matrix::from_ints(F, {{1, 2}, {3, 4}}), b = Matrix::from_ints(F, {{5}});
    CHECK(block_diagonal({a, b}) == Matrix::from_ints(F, {{1, 2, 0}, {3, 4, 0}, {0, 0, 5}}));
    const auto ns = nullspace({{FieldElem::from_int(F, 1), FieldElem::from_int(F, 2)}}, 2, F);
    REQUIRE(ns.size() == 1);
    CHECK((ns[0][0] + FieldElem::from_int(F, 2) * ns[0][1]).is_zero());
}
