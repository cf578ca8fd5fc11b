#include "impl.hpp"

namespace sicck::kernels::scalar {

SetProfile set_profile(const std::uint64_t* x, const std::uint64_t* y, const std::uint64_t* u, std::size_t words) {
    std::uint64_t x_only = 0, y_only = 0, both = 0, neither = 0;
    for (std::size_t i = 0; i < words; ++i) {
        const std::uint64_t xi = x[i] & u[i];
        const std::uint64_t yi = y[i] & u[i];
        x_only |= xi & ~yi;
        y_only |= yi & ~xi;
        both |= xi & yi;
        neither |= u[i] & ~(xi | yi);
    }
    return {x_only != 0, y_only != 0, both != 0, neither != 0};
}

void count_test(CountTest test, bool negate, const std::uint8_t* n, const std::uint8_t* k, std::uint8_t* out,
                std::size_t len) {
    for (std::size_t i = 0; i < len; ++i) {
        out[i] = static_cast<std::uint8_t>(count_test_one(test, n[i], k[i]) != negate);
    }
}

void pack_bits(const std::uint8_t* bytes, std::size_t len, std::uint64_t* words) {
    const std::size_t nwords = (len + 63) / 64;
    for (std::size_t w = 0; w < nwords; ++w) words[w] = 0;
    for (std::size_t i = 0; i < len; ++i) {
        if (bytes[i] != 0) words[i / 64] |= std::uint64_t{1} << (i % 64);
    }
}

void confusion_counts(const std::uint8_t* gold, const std::uint8_t* pred, std::size_t len, std::size_t classes,
                      std::uint64_t* matrix) {
    for (std::size_t i = 0; i < len; ++i) ++matrix[gold[i] * classes + pred[i]];
}

}  // namespace sicck::kernels::scalar
