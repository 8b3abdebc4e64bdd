#include <doctest.h>

#include <numeric>

#include "fqrep/errors.hpp"
#include "fqrep/numtheory.hpp"

using namespace fqrep;

namespace {

bool trial_prime(u64 n) {
    if (n < 2) return false;
    for (u64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace

TEST_CASE("is_prime matches trial division below 5000") {
    for (u64 n = 0; n < 5000; ++n) REQUIRE(is_prime(n) == trial_prime(n));
    CHECK(is_prime(2147483647));
    CHECK(!is_prime(4294967297ull));  // 641 * 6700417
}

TEST_CASE("ord_mod by repeated multiplication") {
    for (u64 m = 2; m < 60; ++m)
        for (u64 q = 1; q < m; ++q) {
            if (std::gcd(q, m) != 1) continue;
            u64 x = q % m, o = 1;
            while (x != 1 % m) x = x * q % m, ++o;
            REQUIRE(ord_mod(q, m) == o);
        }
    CHECK(ord_mod(2, 7) == 3);
    CHECK(ord_mod(19, 5) == 2);
}

TEST_CASE("prime powers") {
    CHECK(as_prime_power(361)->prime == 19);
    CHECK(as_prime_power(361)->exponent == 2);
    CHECK(as_prime_power(128)->exponent == 7);
    CHECK(!as_prime_power(12));
    CHECK(!as_prime_power(1));
    CHECK(checked_pow(3, 4) == 81);
}

TEST_CASE("smallest primitive root") {
    for (u64 p : {3u, 5u, 7u, 11u, 13u, 19u, 23u, 37u, 41u, 59u}) {
        const u64 g = smallest_primitive_root(p);
        REQUIRE(ord_mod(g, p) == p - 1);
        for (u64 h = 2; h < g; ++h) REQUIRE(ord_mod(h, p) < p - 1);
    }
    CHECK(smallest_primitive_root(7) == 3);
}

TEST_CASE("cyclic subgroup and discrete log") {
    CHECK(cyclic_subgroup(2, 7) == std::vector<u64>{1, 2, 4});
    CHECK(discrete_log_small(2, 37, 7) == 1u);  // 37 = 2 (mod 7)
    CHECK(discrete_log_small(2, 11, 7) == 2u);  // 11 = 4 (mod 7)
    CHECK(!discrete_log_small(2, 3, 7));
}

TEST_CASE("modular helpers") {
    CHECK(mod_floor(-1, 19) == 18);
    CHECK(inv_mod(3, 19) * 3 % 19 == 1);
    CHECK(pow_mod(2, 10, 1000) == 24);
    CHECK(prime_factors(360) == std::vector<u64>{2, 3, 5});
}
