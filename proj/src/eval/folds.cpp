#include "sicck/eval/folds.hpp"

#include "sicck/core/errors.hpp"

#include <fmt/format.h>

#include <random>

namespace sicck::eval {

namespace {

// Uniform draw in [0, bound] by rejection; std::uniform_int_distribution is not portable across
// standard libraries.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) return 0;
    const std::uint64_t range = bound + 1;
    const std::uint64_t limit = range == 0 ? 0 : (~std::uint64_t{0} - range + 1) % range;
    while (true) {
        const std::uint64_t x = rng();
        if (x >= limit) return x % range;
    }
}

}  // namespace

std::vector<Fold> make_folds(const std::vector<std::string>& ids, std::size_t k, std::uint64_t seed) {
    const std::size_t n = ids.size();
    if (k < 2 || k > n) throw FoldConfigError(fmt::format("fold count {} outside [2, {}]", k, n));
    std::vector<std::string> order = ids;
    std::mt19937_64 rng(seed);
    for (std::size_t i = n - 1; i > 0; --i) {
        const auto j = static_cast<std::size_t>(draw(rng, i));
        std::swap(order[i], order[j]);
    }
    std::vector<Fold> folds(k);
    std::size_t begin = 0;
    std::vector<std::pair<std::size_t, std::size_t>> cuts;
    for (std::size_t f = 0; f < k; ++f) {
        const std::size_t size = n / k + (f < n % k ? 1 : 0);
        cuts.emplace_back(begin, begin + size);
        begin += size;
    }
    for (std::size_t f = 0; f < k; ++f) {
        for (std::size_t i = 0; i < n; ++i) {
            (i >= cuts[f].first && i < cuts[f].second ? folds[f].test : folds[f].train).push_back(order[i]);
        }
    }
    return folds;
}

std::string serialize_folds(const std::vector<Fold>& folds) {
    std::string out;
    for (std::size_t f = 0; f < folds.size(); ++f) {
        for (const auto& id : folds[f].test) out += fmt::format("{}\t{}\n", f, id);
    }
    return out;
}

}  // namespace sicck::eval
