#pragma once

#include "sicck/kernels/kernels.hpp"

namespace sicck::kernels {

#define SICCK_KERNEL_SET(ns)                                                                                    \
    namespace ns {                                                                                              \
    SetProfile set_profile(const std::uint64_t* x, const std::uint64_t* y, const std::uint64_t* u,              \
                           std::size_t words);                                                                  \
    void count_test(CountTest test, bool negate, const std::uint8_t* n, const std::uint8_t* k, std::uint8_t* out, \
                    std::size_t len);                                                                           \
    void pack_bits(const std::uint8_t* bytes, std::size_t len, std::uint64_t* words);                           \
    void confusion_counts(const std::uint8_t* gold, const std::uint8_t* pred, std::size_t len,                  \
                          std::size_t classes, std::uint64_t* matrix);                                          \
    }

SICCK_KERNEL_SET(scalar)
#if defined(__x86_64__) || defined(_M_X64)
#define SICCK_HAVE_AVX2_KERNELS 1
SICCK_KERNEL_SET(avx2)
#endif

#undef SICCK_KERNEL_SET

// Shared scalar body for one element; the AVX2 file uses it for tails.
inline bool count_test_one(CountTest test, unsigned n, unsigned k) noexcept {
    switch (test) {
        case CountTest::All: return k == n;
        case CountTest::Any: return k >= 1;
        case CountTest::None: return k == 0;
        case CountTest::NotAll: return k < n;
        case CountTest::One: return k == 1;
        case CountTest::AllButOne: return k + 1 == n;
    }
    return false;
}

}  // namespace sicck::kernels
