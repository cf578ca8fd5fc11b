#include "impl.hpp"

#include <atomic>
#include <stdexcept>

namespace sicck::kernels {

namespace {

// -1: detect, otherwise an Isa value
std::atomic<int> g_forced{-1};

Isa detected() noexcept {
    static const Isa isa = cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar;
    return isa;
}

void check_len(std::size_t a, std::size_t b, const char* what) {
    if (a != b) throw std::invalid_argument(what);
}

}  // namespace

std::string_view to_string(Isa isa) noexcept { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool cpu_has_avx2() noexcept {
#if defined(SICCK_HAVE_AVX2_KERNELS)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("popcnt");
#else
    return false;
#endif
}

Isa active_isa() noexcept {
    const int forced = g_forced.load(std::memory_order_relaxed);
    if (forced >= 0) return static_cast<Isa>(forced);
    return detected();
}

void force_isa(std::optional<Isa> isa) noexcept {
    if (isa && *isa == Isa::Avx2 && !cpu_has_avx2()) return;
    g_forced.store(isa ? static_cast<int>(*isa) : -1, std::memory_order_relaxed);
}

SetProfile set_profile(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y,
                       std::span<const std::uint64_t> universe) {
    check_len(x.size(), universe.size(), "set_profile: x and universe differ in length");
    check_len(y.size(), universe.size(), "set_profile: y and universe differ in length");
#if defined(SICCK_HAVE_AVX2_KERNELS)
    if (active_isa() == Isa::Avx2) return avx2::set_profile(x.data(), y.data(), universe.data(), universe.size());
#endif
    return scalar::set_profile(x.data(), y.data(), universe.data(), universe.size());
}

void count_test(CountTest test, bool negate, std::span<const std::uint8_t> n, std::span<const std::uint8_t> k,
                std::span<std::uint8_t> out) {
    check_len(n.size(), k.size(), "count_test: n and k differ in length");
    check_len(n.size(), out.size(), "count_test: output has the wrong length");
#if defined(SICCK_HAVE_AVX2_KERNELS)
    if (active_isa() == Isa::Avx2) return avx2::count_test(test, negate, n.data(), k.data(), out.data(), n.size());
#endif
    scalar::count_test(test, negate, n.data(), k.data(), out.data(), n.size());
}

void pack_bits(std::span<const std::uint8_t> bytes, std::span<std::uint64_t> words) {
    check_len((bytes.size() + 63) / 64, words.size(), "pack_bits: word span has the wrong length");
#if defined(SICCK_HAVE_AVX2_KERNELS)
    if (active_isa() == Isa::Avx2) return avx2::pack_bits(bytes.data(), bytes.size(), words.data());
#endif
    scalar::pack_bits(bytes.data(), bytes.size(), words.data());
}

void confusion_counts(std::span<const std::uint8_t> gold, std::span<const std::uint8_t> pred, std::size_t classes,
                      std::span<std::uint64_t> matrix) {
    check_len(gold.size(), pred.size(), "confusion_counts: gold and pred differ in length");
    check_len(matrix.size(), classes * classes, "confusion_counts: matrix must be classes x classes");
    if (classes == 0 || classes > 16) throw std::invalid_argument("confusion_counts: classes must be in [1, 16]");
    for (std::size_t i = 0; i < gold.size(); ++i) {
        if (gold[i] >= classes || pred[i] >= classes) throw std::invalid_argument("confusion_counts: label out of range");
    }
#if defined(SICCK_HAVE_AVX2_KERNELS)
    if (active_isa() == Isa::Avx2) return avx2::confusion_counts(gold.data(), pred.data(), gold.size(), classes, matrix.data());
#endif
    scalar::confusion_counts(gold.data(), pred.data(), gold.size(), classes, matrix.data());
}

}  // namespace sicck::kernels
