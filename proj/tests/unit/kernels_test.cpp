#include "sicck/kernels/kernels.hpp"

#include <gtest/gtest.h>

#include <random>
#include <vector>

using namespace sicck::kernels;

namespace {

// Runs `f` once per ISA available on this machine and returns the results.
template <typename F>
auto per_isa(F&& f) {
    std::vector<decltype(f())> out;
    force_isa(Isa::Scalar);
    out.push_back(f());
    if (cpu_has_avx2()) {
        force_isa(Isa::Avx2);
        out.push_back(f());
    }
    force_isa(std::nullopt);
    return out;
}

class KernelTest : public ::testing::Test {
protected:
    void TearDown() override { force_isa(std::nullopt); }
    std::mt19937_64 rng{20231016};
};

const std::size_t kLengths[] = {0, 1, 3, 4, 5, 31, 32, 33, 63, 64, 65, 127, 128, 129, 200, 1000};

}  // namespace

TEST_F(KernelTest, ForceIsaRoundTrip) {
    force_isa(Isa::Scalar);
    EXPECT_EQ(active_isa(), Isa::Scalar);
    force_isa(std::nullopt);
    EXPECT_EQ(active_isa(), cpu_has_avx2() ? Isa::Avx2 : Isa::Scalar);
}

TEST_F(KernelTest, SetProfileSmallCases) {
    const std::vector<std::uint64_t> u{0b1111};
    const std::vector<std::uint64_t> x{0b0011};
    const std::vector<std::uint64_t> y{0b0110};
    for (const auto& p : per_isa([&] { return set_profile(x, y, u); })) {
        EXPECT_EQ(p, (SetProfile{true, true, true, true}));
    }
    const std::vector<std::uint64_t> z{0b1100 | (1ull << 40)};  // bit 40 lies outside the universe
    for (const auto& p : per_isa([&] { return set_profile(x, z, u); })) {
        EXPECT_EQ(p, (SetProfile{true, true, false, false}));
    }
}

TEST_F(KernelTest, SetProfileScalarAndAvx2Agree) {
    for (std::size_t words : {0, 1, 3, 4, 5, 8, 9, 17}) {
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<std::uint64_t> x(words), y(words), u(words);
            for (std::size_t i = 0; i < words; ++i) {
                // sparse masks so that every region is sometimes empty
                const int density = trial % 4;
                auto draw = [&] {
                    std::uint64_t v = rng();
                    for (int d = 0; d < density; ++d) v &= rng();
                    return v;
                };
                x[i] = draw();
                y[i] = draw();
                u[i] = trial % 3 == 0 ? ~0ull : rng() | rng();
            }
            const auto r = per_isa([&] { return set_profile(x, y, u); });
            for (const auto& p : r) EXPECT_EQ(p, r.front());
        }
    }
}

TEST_F(KernelTest, CountTestMatchesDefinition) {
    const std::vector<std::uint8_t> n{0, 1, 1, 2, 3, 3, 4};
    const std::vector<std::uint8_t> k{0, 0, 1, 1, 3, 2, 0};
    std::vector<std::uint8_t> out(n.size());
    const std::vector<std::pair<CountTest, std::vector<std::uint8_t>>> expected = {
        {CountTest::All, {1, 0, 1, 0, 1, 0, 0}},       {CountTest::Any, {0, 0, 1, 1, 1, 1, 0}},
        {CountTest::None, {1, 1, 0, 0, 0, 0, 1}},      {CountTest::NotAll, {0, 1, 0, 1, 0, 1, 1}},
        {CountTest::One, {0, 0, 1, 1, 0, 0, 0}},       {CountTest::AllButOne, {0, 1, 0, 1, 0, 1, 0}},
    };
    for (const auto& [test, want] : expected) {
        for (bool negate : {false, true}) {
            for (const auto& got : per_isa([&] {
                     count_test(test, negate, n, k, out);
                     return out;
                 })) {
                for (std::size_t i = 0; i < want.size(); ++i) EXPECT_EQ(got[i], want[i] ^ negate) << i;
            }
        }
    }
}

TEST_F(KernelTest, CountTestScalarAndAvx2Agree) {
    for (std::size_t len : kLengths) {
        std::vector<std::uint8_t> n(len), k(len), out(len);
        for (std::size_t i = 0; i < len; ++i) {
            // include 255 to exercise the k + 1 overflow edge
            n[i] = static_cast<std::uint8_t>(rng() % 6 == 0 ? 255 : rng() % 6);
            k[i] = static_cast<std::uint8_t>(rng() % 7 == 0 ? 255 : rng() % 6);
        }
        for (auto test : {CountTest::All, CountTest::Any, CountTest::None, CountTest::NotAll, CountTest::One,
                          CountTest::AllButOne}) {
            for (bool negate : {false, true}) {
                const auto r = per_isa([&] {
                    count_test(test, negate, n, k, out);
                    return out;
                });
                for (const auto& v : r) EXPECT_EQ(v, r.front()) << "len " << len;
            }
        }
    }
}

TEST_F(KernelTest, PackBitsScalarAndAvx2Agree) {
    for (std::size_t len : kLengths) {
        std::vector<std::uint8_t> bytes(len);
        for (auto& b : bytes) b = static_cast<std::uint8_t>(rng() % 3 == 0 ? 0 : rng() % 256);
        std::vector<std::uint64_t> words((len + 63) / 64, ~0ull);
        const auto r = per_isa([&] {
            pack_bits(bytes, words);
            return words;
        });
        for (const auto& v : r) EXPECT_EQ(v, r.front());
        for (std::size_t i = 0; i < len; ++i) {
            EXPECT_EQ((r.front()[i / 64] >> (i % 64)) & 1u, bytes[i] != 0 ? 1u : 0u);
        }
        if (len % 64 != 0) EXPECT_EQ(r.front().back() >> (len % 64), 0u);
    }
}

TEST_F(KernelTest, ConfusionCountsScalarAndAvx2Agree) {
    for (std::size_t classes : {1, 3, 4, 7}) {
        for (std::size_t len : kLengths) {
            std::vector<std::uint8_t> g(len), p(len);
            for (std::size_t i = 0; i < len; ++i) {
                g[i] = static_cast<std::uint8_t>(rng() % classes);
                p[i] = static_cast<std::uint8_t>(rng() % classes);
            }
            const auto r = per_isa([&] {
                std::vector<std::uint64_t> m(classes * classes, 0);
                confusion_counts(g, p, classes, m);
                return m;
            });
            for (const auto& v : r) EXPECT_EQ(v, r.front());
            std::uint64_t total = 0;
            for (auto c : r.front()) total += c;
            EXPECT_EQ(total, len);
        }
    }
}

TEST_F(KernelTest, ConfusionCountsRejectsBadInput) {
    const std::vector<std::uint8_t> g{0, 4};
    const std::vector<std::uint8_t> p{0, 1};
    std::vector<std::uint64_t> m(16);
    EXPECT_THROW(confusion_counts(g, p, 4, m), std::invalid_argument);
}
