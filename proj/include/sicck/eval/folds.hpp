#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace sicck::eval {

struct Fold {
    std::vector<std::string> train;
    std::vector<std::string> test;
};

/// Shuffles the ids with a seeded Fisher-Yates pass and cuts them into k contiguous folds; the
/// first n % k folds get one extra id. Within each fold the ids keep shuffled order.
/// Throws FoldConfigError unless 2 <= k <= ids.size().
std::vector<Fold> make_folds(const std::vector<std::string>& ids, std::size_t k, std::uint64_t seed);

/// One line per id: "<fold>\t<id>", folds numbered from 0.
std::string serialize_folds(const std::vector<Fold>& folds);

}  // namespace sicck::eval
