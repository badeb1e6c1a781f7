#include "weilzeta/kernels/count_kernel.hpp"

#include <cstdlib>
#include <cstring>

#include "weilzeta/error.hpp"

namespace weilzeta::kernels {

bool isa_available(Isa isa) {
    switch (isa) {
        case Isa::Scalar:
            return true;
        case Isa::Avx2:
#if defined(WEILZETA_HAVE_AVX2_TU) && (defined(__x86_64__) || defined(__i386__))
            return __builtin_cpu_supports("avx2");
#else
            return false;
#endif
    }
    return false;
}

Isa detected_isa() {
    static const Isa isa = [] {
        const char* env = std::getenv("WEILZETA_ISA");
        if (env && std::strcmp(env, "scalar") == 0) return Isa::Scalar;
        return isa_available(Isa::Avx2) ? Isa::Avx2 : Isa::Scalar;
    }();
    return isa;
}

std::string_view to_string(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

std::uint64_t count_roots(std::span<const Code> coeffs, const LogTables& t, Isa isa) {
    if (isa == Isa::Avx2) {
        if (!isa_available(Isa::Avx2)) throw Error(ErrorKind::InvalidArgument, "AVX2 not available on this CPU");
        return count_roots_avx2(coeffs, t);
    }
    return count_roots_scalar(coeffs, t);
}

}  // namespace weilzeta::kernels
