#include "fqrep/simd/kernels.hpp"

namespace fqrep::simd {

#ifdef FQREP_HAVE_AVX2
namespace detail {
const KernelTable& avx2_table();
}
#endif

const KernelTable* avx2_kernels() {
#ifdef FQREP_HAVE_AVX2
    static const bool supported = __builtin_cpu_supports("avx2");
    return supported ? &detail::avx2_table() : nullptr;
#else
    return nullptr;
#endif
}

const KernelTable& kernels() {
    static const KernelTable& selected = avx2_kernels() ? *avx2_kernels() : scalar_kernels();
    return selected;
}

}  // namespace fqrep::simd
