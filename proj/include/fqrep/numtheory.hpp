/**
 * @file numtheory.hpp
 * @brief Machine-integer number theory: primality, modular powers,
 *        multiplicative orders, prime-power decomposition.
 */
#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace fqrep {

using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i64 = std::int64_t;

/// Trial division; adequate for the desk-scale moduli used here.
bool is_prime(u64 n);

u64 mul_mod(u64 a, u64 b, u64 m);
u64 pow_mod(u64 base, u64 exp, u64 m);

/// Least non-negative residue of a mod m, for signed a.
u64 mod_floor(i64 a, u64 m);

/// Modular inverse of a mod m. Throws NotCoprime if none exists.
u64 inv_mod(u64 a, u64 m);

/// Least v >= 1 with q^v = 1 (mod m). ord_mod(q, 1) = 1.
/// Throws NotCoprime when gcd(q, m) != 1.
u64 ord_mod(u64 q, u64 m);

/// Distinct prime divisors in increasing order.
std::vector<u64> prime_factors(u64 n);

struct PrimePower {
    u64 prime;
    int exponent;
};

/// Decomposes q = s^e; nullopt when q is not a prime power (q < 2 included).
std::optional<PrimePower> as_prime_power(u64 q);

/// s^e, throwing InvalidArgument on overflow.
u64 checked_pow(u64 s, int e);

/// Smallest primitive root modulo the prime p (ascending search, order verified).
u64 smallest_primitive_root(u64 p);

/// The cyclic subgroup <k> of (Z/m)^* as a sorted list of residues.
std::vector<u64> cyclic_subgroup(u64 k, u64 m);

/// Least j >= 0 with k^j = q (mod m), if any.
std::optional<u64> discrete_log_small(u64 k, u64 q, u64 m);

}  // namespace fqrep
