#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string_view>

// Data-parallel inner loops with a scalar reference and an AVX2 variant picked at runtime.
namespace sicck::kernels {

enum class Isa : std::uint8_t { Scalar, Avx2 };

std::string_view to_string(Isa isa) noexcept;

/// Best ISA the CPU supports, unless overridden.
Isa active_isa() noexcept;

/// Pins the dispatch (tests compare variants). nullopt restores detection.
/// Forcing Avx2 on a CPU without it is ignored.
void force_isa(std::optional<Isa> isa) noexcept;

bool cpu_has_avx2() noexcept;

/// Which of the four Venn regions of two sets inside a universe are nonempty.
struct SetProfile {
    bool x_only = false;   // X \ Y
    bool y_only = false;   // Y \ X
    bool both = false;     // X ∩ Y
    bool neither = false;  // U \ (X ∪ Y)

    friend bool operator==(const SetProfile&, const SetProfile&) = default;
};

/// All three spans have the same length. Bits of x and y outside `universe` are ignored.
SetProfile set_profile(std::span<const std::uint64_t> x, std::span<const std::uint64_t> y,
                       std::span<const std::uint64_t> universe);

/// Count conditions on restrictor size n and intersection size k.
enum class CountTest : std::uint8_t {
    All,         // k == n
    Any,         // k >= 1
    None,        // k == 0
    NotAll,      // k < n
    One,         // k == 1
    AllButOne,   // k + 1 == n
};

/// out[i] = test(n[i], k[i]) != negate, as 0/1 bytes.
void count_test(CountTest test, bool negate, std::span<const std::uint8_t> n, std::span<const std::uint8_t> k,
                std::span<std::uint8_t> out);

/// Packs nonzero bytes into bits (bit i of words[i / 64]). words must hold ceil(len / 64) entries;
/// unused high bits of the last word are cleared.
void pack_bits(std::span<const std::uint8_t> bytes, std::span<std::uint64_t> words);

/// matrix[g * classes + p] += #{i : gold[i] == g && pred[i] == p}. Labels must be < classes <= 16.
void confusion_counts(std::span<const std::uint8_t> gold, std::span<const std::uint8_t> pred, std::size_t classes,
                      std::span<std::uint64_t> matrix);

}  // namespace sicck::kernels
