#include "fqrep/numtheory.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <utility>

#include "fqrep/errors.hpp"

namespace fqrep {

bool is_prime(u64 n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (u64 d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

u64 mul_mod(u64 a, u64 b, u64 m) {
    return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % m);
}

u64 pow_mod(u64 base, u64 exp, u64 m) {
    if (m == 1) return 0;
    u64 result = 1;
    base %= m;
    while (exp) {
        if (exp & 1) result = mul_mod(result, base, m);
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    return result;
}

u64 mod_floor(i64 a, u64 m) {
    if (a >= 0) return static_cast<u64>(a) % m;
    // -(a+1) avoids overflow for INT64_MIN
    u64 r = static_cast<u64>(-(a + 1)) % m;
    return m - 1 - r;
}

u64 inv_mod(u64 a, u64 m) {
    i64 t = 0, new_t = 1;
    i64 r = static_cast<i64>(m), new_r = static_cast<i64>(a % m);
    while (new_r != 0) {
        i64 q = r / new_r;
        t = std::exchange(new_t, t - q * new_t);
        r = std::exchange(new_r, r - q * new_r);
    }
    if (r != 1) {
        if (m == 1) return 0;
        throw NotCoprime("no inverse of " + std::to_string(a) + " modulo " + std::to_string(m));
    }
    return mod_floor(t, m);
}

u64 ord_mod(u64 q, u64 m) {
    if (m == 0) throw InvalidArgument("ord_mod: modulus must be positive");
    if (m == 1) return 1;
    if (std::gcd(q % m, m) != 1)
        throw NotCoprime("ord_mod: gcd(" + std::to_string(q) + ", " + std::to_string(m) + ") != 1");
    u64 x = q % m, v = 1;
    while (x != 1) {
        x = mul_mod(x, q, m);
        ++v;
    }
    return v;
}

std::vector<u64> prime_factors(u64 n) {
    std::vector<u64> out;
    for (u64 d = 2; d <= n / d; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

std::optional<PrimePower> as_prime_power(u64 q) {
    if (q < 2) return std::nullopt;
    auto ps = prime_factors(q);
    if (ps.size() != 1) return std::nullopt;
    int e = 0;
    while (q > 1) {
        q /= ps[0];
        ++e;
    }
    return PrimePower{ps[0], e};
}

u64 checked_pow(u64 s, int e) {
    u64 r = 1;
    for (int i = 0; i < e; ++i) {
        if (r > std::numeric_limits<u64>::max() / s) throw InvalidArgument("integer power overflows 64 bits");
        r *= s;
    }
    return r;
}

u64 smallest_primitive_root(u64 p) {
    if (!is_prime(p)) throw NonPrime(std::to_string(p) + " is not prime");
    if (p == 2) return 1;
    const auto fs = prime_factors(p - 1);
    for (u64 g = 2; g < p; ++g) {
        bool ok = std::all_of(fs.begin(), fs.end(), [&](u64 f) { return pow_mod(g, (p - 1) / f, p) != 1; });
        if (ok) return g;
    }
    throw Error("no primitive root found");  // unreachable for prime p
}

std::vector<u64> cyclic_subgroup(u64 k, u64 m) {
    if (m == 1) return {0};
    if (std::gcd(k % m, m) != 1) throw NotCoprime("cyclic_subgroup: k not a unit");
    std::vector<u64> out;
    u64 x = 1;
    do {
        out.push_back(x);
        x = mul_mod(x, k, m);
    } while (x != 1);
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<u64> discrete_log_small(u64 k, u64 q, u64 m) {
    if (m == 1) return 0;
    q %= m;
    u64 x = 1 % m;
    for (u64 j = 0; j < m; ++j) {
        if (x == q) return j;
        x = mul_mod(x, k, m);
        if (x == 1 % m && j > 0) break;
    }
    return std::nullopt;
}

}  // namespace fqrep
