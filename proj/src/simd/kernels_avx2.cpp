// Compiled with -mavx2; only reached after a runtime CPU check.
#include "fqrep/simd/kernels.hpp"

#include <immintrin.h>

namespace fqrep::simd {

namespace {

constexpr std::size_t kLanes = 8;

inline __m256i load(const u32* p) { return _mm256_loadu_si256(reinterpret_cast<const __m256i*>(p)); }
inline void store(u32* p, __m256i v) { _mm256_storeu_si256(reinterpret_cast<__m256i*>(p), v); }

// r in [0, 2p) -> r mod p
inline __m256i fold(__m256i r, __m256i p) { return _mm256_min_epu32(r, _mm256_sub_epi32(r, p)); }

// x < 2^31, Barrett quotient estimate is off by at most one.
inline __m256i barrett(__m256i x, __m256i mu, __m256i p) {
    __m256i even = _mm256_srli_epi64(_mm256_mul_epu32(x, mu), 32);
    __m256i odd = _mm256_mul_epu32(_mm256_srli_epi64(x, 32), mu);
    __m256i q = _mm256_blend_epi32(even, odd, 0xAA);
    return fold(_mm256_sub_epi32(x, _mm256_mullo_epi32(q, p)), p);
}

void add_avx2(std::span<u32> y, std::span<const u32> x, const Modulus& mod) {
    if (mod.p >= detail::kVectorPrimeLimit) return scalar_kernels().add(y, x, mod);
    const __m256i p = _mm256_set1_epi32(static_cast<int>(mod.p));
    std::size_t i = 0;
    for (; i + kLanes <= y.size(); i += kLanes)
        store(&y[i], fold(_mm256_add_epi32(load(&y[i]), load(&x[i])), p));
    scalar_kernels().add(y.subspan(i), x.subspan(i), mod);
}

void sub_avx2(std::span<u32> y, std::span<const u32> x, const Modulus& mod) {
    if (mod.p >= detail::kVectorPrimeLimit) return scalar_kernels().sub(y, x, mod);
    const __m256i p = _mm256_set1_epi32(static_cast<int>(mod.p));
    std::size_t i = 0;
    for (; i + kLanes <= y.size(); i += kLanes) {
        __m256i d = _mm256_sub_epi32(load(&y[i]), load(&x[i]));
        store(&y[i], _mm256_min_epu32(d, _mm256_add_epi32(d, p)));
    }
    scalar_kernels().sub(y.subspan(i), x.subspan(i), mod);
}

void axpy_avx2(std::span<u32> y, std::span<const u32> x, u32 c, const Modulus& mod) {
    if (c == 0) return;
    if (mod.p >= detail::kVectorPrimeLimit) return scalar_kernels().axpy(y, x, c, mod);
    const __m256i p = _mm256_set1_epi32(static_cast<int>(mod.p));
    const __m256i mu = _mm256_set1_epi32(static_cast<int>(mod.barrett));
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    std::size_t i = 0;
    for (; i + kLanes <= y.size(); i += kLanes) {
        __m256i t = _mm256_add_epi32(load(&y[i]), _mm256_mullo_epi32(cv, load(&x[i])));
        store(&y[i], barrett(t, mu, p));
    }
    scalar_kernels().axpy(y.subspan(i), x.subspan(i), c, mod);
}

void scale_avx2(std::span<u32> y, u32 c, const Modulus& mod) {
    if (mod.p >= detail::kVectorPrimeLimit) return scalar_kernels().scale(y, c, mod);
    const __m256i p = _mm256_set1_epi32(static_cast<int>(mod.p));
    const __m256i mu = _mm256_set1_epi32(static_cast<int>(mod.barrett));
    const __m256i cv = _mm256_set1_epi32(static_cast<int>(c));
    std::size_t i = 0;
    for (; i + kLanes <= y.size(); i += kLanes)
        store(&y[i], barrett(_mm256_mullo_epi32(cv, load(&y[i])), mu, p));
    scalar_kernels().scale(y.subspan(i), c, mod);
}

void negate_avx2(std::span<u32> y, const Modulus& mod) {
    if (mod.p >= detail::kVectorPrimeLimit) return scalar_kernels().negate(y, mod);
    const __m256i p = _mm256_set1_epi32(static_cast<int>(mod.p));
    std::size_t i = 0;
    for (; i + kLanes <= y.size(); i += kLanes)
        store(&y[i], fold(_mm256_sub_epi32(p, load(&y[i])), p));
    scalar_kernels().negate(y.subspan(i), mod);
}

}  // namespace

namespace detail {
const KernelTable& avx2_table() {
    static const KernelTable table{"avx2", add_avx2, sub_avx2, axpy_avx2, scale_avx2, negate_avx2};
    return table;
}
}  // namespace detail

}  // namespace fqrep::simd
