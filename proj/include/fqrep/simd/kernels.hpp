/**
 * @file kernels.hpp
 * @brief Modular arithmetic on coefficient vectors over F_p.
 *
 * Every operation exists in a scalar reference form and, where the CPU
 * supports it, an AVX2 form. `kernels()` returns the table selected at
 * first use; `scalar_kernels()` and `avx2_kernels()` are exposed so the
 * two implementations can be compared directly.
 *
 * All inputs are expected reduced into [0, p). Outputs are reduced.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>

namespace fqrep::simd {

using u32 = std::uint32_t;
using u64 = std::uint64_t;

/// Prime modulus with a precomputed Barrett constant floor(2^32 / p).
struct Modulus {
    u32 p = 2;
    u32 barrett = 0;

    Modulus() = default;
    explicit Modulus(u32 prime);

    u32 reduce(u64 x) const { return static_cast<u32>(x % p); }
};

struct KernelTable {
    std::string_view name;
    /// y[i] = (y[i] + x[i]) mod p
    void (*add)(std::span<u32> y, std::span<const u32> x, const Modulus& mod);
    /// y[i] = (y[i] - x[i]) mod p
    void (*sub)(std::span<u32> y, std::span<const u32> x, const Modulus& mod);
    /// y[i] = (y[i] + c * x[i]) mod p
    void (*axpy)(std::span<u32> y, std::span<const u32> x, u32 c, const Modulus& mod);
    /// y[i] = (c * y[i]) mod p
    void (*scale)(std::span<u32> y, u32 c, const Modulus& mod);
    /// y[i] = (-y[i]) mod p
    void (*negate)(std::span<u32> y, const Modulus& mod);
};

const KernelTable& scalar_kernels();

/// Null when the AVX2 variant was not compiled in or the CPU lacks AVX2.
const KernelTable* avx2_kernels();

const KernelTable& kernels();

namespace detail {
// Largest prime for which the vector path keeps every intermediate below 2^30.
inline constexpr u32 kVectorPrimeLimit = 1u << 15;
}

}  // namespace fqrep::simd
