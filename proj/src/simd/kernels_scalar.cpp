#include "fqrep/simd/kernels.hpp"

#include <cassert>
#include <stdexcept>

namespace fqrep::simd {

Modulus::Modulus(u32 prime) : p(prime) {
    if (prime < 2) throw std::invalid_argument("modulus must be at least 2");
    barrett = static_cast<u32>((u64{1} << 32) / prime);
}

namespace {

void add_scalar(std::span<u32> y, std::span<const u32> x, const Modulus& mod) {
    assert(x.size() >= y.size());
    for (std::size_t i = 0; i < y.size(); ++i) {
        u64 s = u64{y[i]} + x[i];
        y[i] = static_cast<u32>(s >= mod.p ? s - mod.p : s);
    }
}

void sub_scalar(std::span<u32> y, std::span<const u32> x, const Modulus& mod) {
    assert(x.size() >= y.size());
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = y[i] >= x[i] ? y[i] - x[i] : static_cast<u32>(u64{y[i]} + mod.p - x[i]);
}

void axpy_scalar(std::span<u32> y, std::span<const u32> x, u32 c, const Modulus& mod) {
    assert(x.size() >= y.size());
    if (c == 0) return;
    for (std::size_t i = 0; i < y.size(); ++i)
        y[i] = static_cast<u32>((u64{y[i]} + u64{c} * x[i]) % mod.p);
}

void scale_scalar(std::span<u32> y, u32 c, const Modulus& mod) {
    for (auto& v : y) v = static_cast<u32>((u64{c} * v) % mod.p);
}

void negate_scalar(std::span<u32> y, const Modulus& mod) {
    for (auto& v : y) v = v == 0 ? 0 : mod.p - v;
}

}  // namespace

const KernelTable& scalar_kernels() {
    static const KernelTable table{"scalar", add_scalar, sub_scalar, axpy_scalar, scale_scalar, negate_scalar};
    return table;
}

}  // namespace fqrep::simd
