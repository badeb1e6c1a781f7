#include "weilzeta/kernels/count_kernel.hpp"

#include "weilzeta/error.hpp"

#if defined(__AVX2__)
#include <immintrin.h>
#endif

namespace weilzeta::kernels {

#if defined(__AVX2__)

namespace {

inline __m256i mod_reduce(__m256i s, __m256i m) {
    // s in [0, 2m): subtract m where s >= m.
    __m256i ge = _mm256_cmpgt_epi32(s, _mm256_sub_epi32(m, _mm256_set1_epi32(1)));
    return _mm256_sub_epi32(s, _mm256_and_si256(ge, m));
}

inline __m256i mul_codes(__m256i a, __m256i x, __m256i m) {
    __m256i zero_mask = _mm256_or_si256(_mm256_cmpeq_epi32(a, m), _mm256_cmpeq_epi32(x, m));
    __m256i s = mod_reduce(_mm256_add_epi32(a, x), m);
    return _mm256_blendv_epi8(s, m, zero_mask);
}

// a + c for a broadcast nonzero coefficient code c.
inline __m256i add_code(__m256i a, __m256i c, __m256i m, const int* zech) {
    __m256i a_zero = _mm256_cmpeq_epi32(a, m);
    __m256i d = _mm256_sub_epi32(c, a);
    d = _mm256_add_epi32(d, _mm256_and_si256(_mm256_cmpgt_epi32(_mm256_setzero_si256(), d), m));
    __m256i z = _mm256_i32gather_epi32(zech, d, 4);
    __m256i sum_zero = _mm256_cmpeq_epi32(z, m);
    __m256i s = mod_reduce(_mm256_add_epi32(a, z), m);
    s = _mm256_blendv_epi8(s, m, sum_zero);
    return _mm256_blendv_epi8(s, c, a_zero);
}

}  // namespace

std::uint64_t count_roots_avx2(std::span<const Code> coeffs, const LogTables& t) {
    const Code zero = t.zero();
    if (coeffs.empty()) return t.order;
    const std::size_t deg = coeffs.size() - 1;
    const __m256i m = _mm256_set1_epi32(zero);
    const __m256i lane = _mm256_setr_epi32(0, 1, 2, 3, 4, 5, 6, 7);
    const int* zech = t.zech.data();

    std::uint64_t count = 0;
    const Code total = zero + 1;  // every code 0..Q-1 once
    Code x0 = 0;
    for (; x0 + 8 <= total; x0 += 8) {
        __m256i x = _mm256_add_epi32(_mm256_set1_epi32(x0), lane);
        __m256i acc = _mm256_set1_epi32(coeffs[deg]);
        for (std::size_t e = deg; e-- > 0;) {
            acc = mul_codes(acc, x, m);
            if (coeffs[e] != zero) acc = add_code(acc, _mm256_set1_epi32(coeffs[e]), m, zech);
        }
        int mask = _mm256_movemask_ps(_mm256_castsi256_ps(_mm256_cmpeq_epi32(acc, m)));
        count += static_cast<std::uint64_t>(__builtin_popcount(static_cast<unsigned>(mask)));
    }
    for (Code x = x0; x < total; ++x) {
        Code acc = coeffs[deg];
        for (std::size_t e = deg; e-- > 0;) acc = t.add(t.mul(acc, x), coeffs[e]);
        count += acc == zero;
    }
    return count;
}

#else

std::uint64_t count_roots_avx2(std::span<const Code>, const LogTables&) {
    throw Error(ErrorKind::InvalidArgument, "AVX2 kernel not compiled in");
}

#endif

}  // namespace weilzeta::kernels
