// Compiled without -mavx2; functions opt in through target attributes so the rest of the
// binary stays runnable on older CPUs.
#include "impl.hpp"

#if defined(SICCK_HAVE_AVX2_KERNELS)

#include <bit>
#include <immintrin.h>

#define SICCK_AVX2 __attribute__((target("avx2,popcnt")))

namespace sicck::kernels::avx2 {

SICCK_AVX2 SetProfile set_profile(const std::uint64_t* x, const std::uint64_t* y, const std::uint64_t* u,
                                  std::size_t words) {
    __m256i x_only = _mm256_setzero_si256();
    __m256i y_only = _mm256_setzero_si256();
    __m256i both = _mm256_setzero_si256();
    __m256i neither = _mm256_setzero_si256();
    std::size_t i = 0;
    for (; i + 4 <= words; i += 4) {
        const __m256i ui = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(u + i));
        const __m256i xi = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(x + i)), ui);
        const __m256i yi = _mm256_and_si256(_mm256_loadu_si256(reinterpret_cast<const __m256i*>(y + i)), ui);
        x_only = _mm256_or_si256(x_only, _mm256_andnot_si256(yi, xi));
        y_only = _mm256_or_si256(y_only, _mm256_andnot_si256(xi, yi));
        both = _mm256_or_si256(both, _mm256_and_si256(xi, yi));
        neither = _mm256_or_si256(neither, _mm256_andnot_si256(_mm256_or_si256(xi, yi), ui));
    }
    SetProfile out{!_mm256_testz_si256(x_only, x_only), !_mm256_testz_si256(y_only, y_only),
                   !_mm256_testz_si256(both, both), !_mm256_testz_si256(neither, neither)};
    if (i < words) {
        const SetProfile tail = scalar::set_profile(x + i, y + i, u + i, words - i);
        out.x_only |= tail.x_only;
        out.y_only |= tail.y_only;
        out.both |= tail.both;
        out.neither |= tail.neither;
    }
    return out;
}

SICCK_AVX2 void count_test(CountTest test, bool negate, const std::uint8_t* n, const std::uint8_t* k,
                           std::uint8_t* out, std::size_t len) {
    const __m256i zero = _mm256_setzero_si256();
    const __m256i one = _mm256_set1_epi8(1);
    const __m256i flip = negate ? one : zero;
    std::size_t i = 0;
    for (; i + 32 <= len; i += 32) {
        const __m256i nv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(n + i));
        const __m256i kv = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(k + i));
        __m256i mask;  // 0xFF where the test holds
        switch (test) {
            case CountTest::All: mask = _mm256_cmpeq_epi8(kv, nv); break;
            case CountTest::Any: mask = _mm256_xor_si256(_mm256_cmpeq_epi8(kv, zero), _mm256_set1_epi8(-1)); break;
            case CountTest::None: mask = _mm256_cmpeq_epi8(kv, zero); break;
            case CountTest::NotAll: {
                // unsigned k < n  <=>  max(k, n) != k
                const __m256i ge = _mm256_cmpeq_epi8(_mm256_max_epu8(kv, nv), kv);
                mask = _mm256_xor_si256(ge, _mm256_set1_epi8(-1));
                break;
            }
            case CountTest::One: mask = _mm256_cmpeq_epi8(kv, one); break;
            case CountTest::AllButOne: {
                // k + 1 == n without wraparound at k == 255
                const __m256i eq = _mm256_cmpeq_epi8(_mm256_add_epi8(kv, one), nv);
                const __m256i k_max = _mm256_cmpeq_epi8(kv, _mm256_set1_epi8(-1));
                mask = _mm256_andnot_si256(k_max, eq);
                break;
            }
            default: mask = zero; break;
        }
        const __m256i bit = _mm256_and_si256(mask, one);
        _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), _mm256_xor_si256(bit, flip));
    }
    scalar::count_test(test, negate, n + i, k + i, out + i, len - i);
}

SICCK_AVX2 void pack_bits(const std::uint8_t* bytes, std::size_t len, std::uint64_t* words) {
    const std::size_t nwords = (len + 63) / 64;
    const __m256i zero = _mm256_setzero_si256();
    std::size_t w = 0;
    for (; (w + 1) * 64 <= len; ++w) {
        const __m256i lo = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bytes + w * 64));
        const __m256i hi = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(bytes + w * 64 + 32));
        const auto lo_bits = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(lo, zero)));
        const auto hi_bits = static_cast<std::uint32_t>(_mm256_movemask_epi8(_mm256_cmpeq_epi8(hi, zero)));
        words[w] = ~((std::uint64_t{hi_bits} << 32) | lo_bits);
    }
    if (w < nwords) scalar::pack_bits(bytes + w * 64, len - w * 64, words + w);
}

SICCK_AVX2 void confusion_counts(const std::uint8_t* gold, const std::uint8_t* pred, std::size_t len,
                                 std::size_t classes, std::uint64_t* matrix) {
    // one pass per cell over 32-label blocks; classes is small
    std::size_t i = 0;
    const std::size_t blocks = len / 32;
    if (blocks > 0) {
        for (std::size_t g = 0; g < classes; ++g) {
            const __m256i gv = _mm256_set1_epi8(static_cast<char>(g));
            for (std::size_t p = 0; p < classes; ++p) {
                const __m256i pv = _mm256_set1_epi8(static_cast<char>(p));
                std::uint64_t count = 0;
                for (std::size_t b = 0; b < blocks; ++b) {
                    const __m256i ga = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(gold + b * 32));
                    const __m256i pa = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(pred + b * 32));
                    const __m256i hit = _mm256_and_si256(_mm256_cmpeq_epi8(ga, gv), _mm256_cmpeq_epi8(pa, pv));
                    count += static_cast<std::uint64_t>(
                        std::popcount(static_cast<std::uint32_t>(_mm256_movemask_epi8(hit))));
                }
                matrix[g * classes + p] += count;
            }
        }
        i = blocks * 32;
    }
    scalar::confusion_counts(gold + i, pred + i, len - i, classes, matrix);
}

}  // namespace sicck::kernels::avx2

#endif
