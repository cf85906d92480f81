#include "hilbertimg/split.hpp"

#include "hilbertimg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <random>

namespace hilbertimg {

namespace {

/// Uniform value in [0, bound) by rejection; avoids the implementation-defined
/// std::uniform_int_distribution.
std::uint64_t bounded_draw(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t limit = std::mt19937_64::max() - std::mt19937_64::max() % bound;
    std::uint64_t v;
    do {
        v = rng();
    } while (v >= limit);
    return v % bound;
}

void shuffle(std::vector<std::size_t>& items, std::mt19937_64& rng) {
    for (std::size_t i = items.size(); i > 1; --i) {
        const auto j = static_cast<std::size_t>(bounded_draw(rng, i));
        std::swap(items[i - 1], items[j]);
    }
}

/// Hamilton apportionment of `total` over `weights`.
std::vector<std::size_t> apportion(std::size_t total, const std::vector<std::size_t>& weights) {
    const std::size_t sum = std::accumulate(weights.begin(), weights.end(), std::size_t{0});
    std::vector<std::size_t> share(weights.size());
    std::vector<std::size_t> remainder(weights.size());
    std::size_t assigned = 0;
    for (std::size_t i = 0; i < weights.size(); ++i) {
        share[i] = total * weights[i] / sum;
        remainder[i] = total * weights[i] % sum;
        assigned += share[i];
    }
    std::vector<std::size_t> order(weights.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return remainder[a] > remainder[b]; });
    for (std::size_t k = 0; assigned < total; ++k, ++assigned) {
        ++share[order[k]];
    }
    return share;
}

}  // namespace

SplitSizes split_sizes(std::size_t n, const SplitConfig& config) {
    SplitSizes s;
    s.test = static_cast<std::size_t>(std::llround(static_cast<double>(n) * config.test_fraction));
    const std::size_t rest = n - s.test;
    s.val = static_cast<std::size_t>(std::llround(static_cast<double>(rest) * config.val_fraction));
    s.train = rest - s.val;
    return s;
}

SplitResult split_dataset(std::span<const SequenceRecord> records, const SplitConfig& config) {
    if (!(config.test_fraction >= 0.0 && config.test_fraction < 1.0) ||
        !(config.val_fraction >= 0.0 && config.val_fraction < 1.0)) {
        throw split_error("split fractions must lie in [0, 1)");
    }
    const std::size_t n = records.size();
    if (n < 10) {
        throw split_error("need at least 10 records to split, got " + std::to_string(n));
    }

    std::map<std::string, std::vector<std::size_t>> classes;
    bool all_labeled = true;
    for (std::size_t i = 0; i < n; ++i) {
        all_labeled = all_labeled && records[i].label.has_value();
        classes[records[i].label.value_or("")].push_back(i);
    }

    SplitResult result;
    result.manifest.seed = config.seed;
    result.manifest.rows.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        result.manifest.rows[i].sequence_id = records[i].id;
        result.manifest.rows[i].label = records[i].label.value_or("");
    }

    const SplitSizes sizes = split_sizes(n, config);
    std::mt19937_64 rng(config.seed);

    auto assign = [&](const std::vector<std::size_t>& order, std::size_t test, std::size_t val) {
        for (std::size_t k = 0; k < order.size(); ++k) {
            const Split s = k < test ? Split::test : k < test + val ? Split::val : Split::train;
            result.manifest.rows[order[k]].split = s;
        }
    };

    if (config.stratify) {
        if (!all_labeled) {
            result.warnings.push_back("some records are unlabeled; splitting without stratification");
        } else {
            for (const auto& [label, members] : classes) {
                if (members.size() < 5) {
                    result.warnings.push_back("class '" + label + "' has only " +
                                              std::to_string(members.size()) +
                                              " records; splitting without stratification");
                    break;
                }
            }
        }
        result.stratified = result.warnings.empty();
    }

    if (result.stratified) {
        std::vector<std::size_t> class_sizes;
        for (const auto& [label, members] : classes) {
            class_sizes.push_back(members.size());
        }
        const auto test_share = apportion(sizes.test, class_sizes);
        std::vector<std::size_t> remaining(class_sizes.size());
        for (std::size_t c = 0; c < class_sizes.size(); ++c) {
            remaining[c] = class_sizes[c] - test_share[c];
        }
        const auto val_share = apportion(sizes.val, remaining);
        std::size_t c = 0;
        for (const auto& [label, members] : classes) {
            auto order = members;
            shuffle(order, rng);
            assign(order, test_share[c], val_share[c]);
            ++c;
        }
    } else {
        std::vector<std::size_t> order(n);
        std::iota(order.begin(), order.end(), std::size_t{0});
        shuffle(order, rng);
        assign(order, sizes.test, sizes.val);
    }
    return result;
}

}  // namespace hilbertimg
