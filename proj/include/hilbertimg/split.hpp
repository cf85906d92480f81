#pragma once

#include "hilbertimg/manifest.hpp"
#include "hilbertimg/sequence.hpp"

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace hilbertimg {

struct SplitConfig {
    std::uint64_t seed = 42;
    double test_fraction = 0.2;  ///< of all records
    double val_fraction = 0.1;   ///< of the non-test records
    bool stratify = true;
};

/// Partition sizes for `n` records: test = round(n * test_fraction),
/// val = round((n - test) * val_fraction), train = the rest.
struct SplitSizes {
    std::size_t train = 0;
    std::size_t val = 0;
    std::size_t test = 0;
};

SplitSizes split_sizes(std::size_t n, const SplitConfig& config);

struct SplitResult {
    /// One row per record in input order; image paths are left empty.
    DatasetManifest manifest;
    bool stratified = false;
    std::vector<std::string> warnings;
};

/// Seeded shuffle-and-cut into train/val/test with the sizes of split_sizes.
///
/// Stratified when requested, every record is labeled and every class has at
/// least five members: each class gets a share of the test and validation
/// quotas proportional to its size (largest remainder, ties to the earlier
/// class in sorted order). Otherwise the split is unstratified and a warning
/// explains why.
///
/// Shuffling uses std::mt19937_64 with a portable bounded draw, so a given
/// seed yields the same manifest on every platform.
///
/// Throws split_error for fewer than ten records or fractions outside [0, 1).
SplitResult split_dataset(std::span<const SequenceRecord> records, const SplitConfig& config = {});

}  // namespace hilbertimg
