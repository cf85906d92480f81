#include "hilbertimg/cgr.hpp"

#include "hilbertimg/errors.hpp"

#include <algorithm>
#include <bit>

namespace hilbertimg {

std::vector<Anchor> cgr_anchors(const Alphabet& alphabet) {
    const auto n = alphabet.size();
    std::vector<Anchor> anchors;
    anchors.reserve(n);
    for (std::size_t k = 0; k < n; ++k) {
        const double s = 4.0 * static_cast<double>(k) / static_cast<double>(n);
        if (s < 1.0) {
            anchors.push_back({0.0, s});
        } else if (s < 2.0) {
            anchors.push_back({s - 1.0, 1.0});
        } else if (s < 3.0) {
            anchors.push_back({1.0, 3.0 - s});
        } else {
            anchors.push_back({4.0 - s, 0.0});
        }
    }
    return anchors;
}

EncodedImage encode_cgr(const SequenceRecord& seq, const CgrConfig& config, const Alphabet& alphabet) {
    const std::size_t res = config.resolution;
    if (res < 2 || !std::has_single_bit(res)) {
        throw domain_error("CGR resolution must be a power of two >= 2, got " + std::to_string(res));
    }
    if (seq.residues.empty()) {
        throw encode_error("sequence '" + seq.id + "' is empty");
    }

    EncodedImage img;
    img.counts = CountGrid(res);
    img.meta.encoder = "cgr";
    img.meta.config = "cgr;resolution=" + std::to_string(res) + ";alphabet=" + alphabet.describe() +
                      ";unknown=" + std::string(to_string(config.unknown_policy)) +
                      ";normalization=" + std::string(to_string(config.normalization));
    img.meta.fingerprint = fingerprint(img.meta.config);
    img.meta.sequence_id = seq.id;
    img.meta.length = seq.residues.size();
    img.meta.uniqueness_precondition = res * res > seq.residues.size();

    const auto anchors = cgr_anchors(alphabet);
    std::vector<bool> seen(alphabet.size(), false);
    const auto last = static_cast<double>(res - 1);
    double x = 0.5;
    double y = 0.5;
    for (std::size_t pos = 0; pos < seq.residues.size(); ++pos) {
        const char c = seq.residues[pos];
        const auto index = index_mapping(c, alphabet);
        if (!index) {
            if (config.unknown_policy == UnknownPolicy::error) {
                throw encode_error("sequence '" + seq.id + "': unknown symbol '" + std::string(1, c) +
                                   "' at position " + std::to_string(pos));
            }
            ++img.meta.skipped;
            continue;
        }
        ++img.meta.mapped;
        seen[*index] = true;
        x = (x + anchors[*index].x) / 2.0;
        y = (y + anchors[*index].y) / 2.0;
        const auto row = static_cast<std::size_t>(std::min(x * static_cast<double>(res), last));
        const auto col = static_cast<std::size_t>(std::min(y * static_cast<double>(res), last));
        ++img.counts.at(row, col);
    }

    if (img.meta.mapped == 0) {
        throw encode_error("sequence '" + seq.id + "' has no symbols from alphabet " +
                           alphabet.describe());
    }
    img.meta.distinct_symbols = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
    const auto& cells = img.counts.cells();
    img.meta.lit_cells =
        static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](auto v) { return v != 0; }));
    img.intensities = normalize(img.counts, config.normalization);
    return img;
}

}  // namespace hilbertimg
