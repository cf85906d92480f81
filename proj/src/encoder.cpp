#include "hilbertimg/encoder.hpp"

#include "hilbertimg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <utility>
#include <vector>

namespace hilbertimg {

namespace {

__extension__ typedef unsigned __int128 u128;

template <typename Enum, std::size_t N>
Enum parse_enum(std::string_view s, const std::pair<std::string_view, Enum> (&names)[N],
                const char* what) {
    for (const auto& [name, value] : names) {
        if (s == name) {
            return value;
        }
    }
    std::string expected;
    for (const auto& [name, value] : names) {
        if (!expected.empty()) {
            expected += ", ";
        }
        expected += name;
    }
    throw usage_error("invalid " + std::string(what) + " '" + std::string(s) + "' (expected one of: " +
                      expected + ")");
}

constexpr std::pair<std::string_view, EncodingMode> mode_names[] = {
    {"paper", EncodingMode::paper}, {"positional", EncodingMode::positional}};
constexpr std::pair<std::string_view, UnknownPolicy> unknown_names[] = {
    {"skip", UnknownPolicy::skip}, {"error", UnknownPolicy::error}};
constexpr std::pair<std::string_view, OverflowPolicy> overflow_names[] = {
    {"modulo", OverflowPolicy::modulo}, {"clamp", OverflowPolicy::clamp}};
constexpr std::pair<std::string_view, Normalization> normalization_names[] = {
    {"max_count", Normalization::max_count}, {"log_max", Normalization::log_max}};

template <typename Enum, std::size_t N>
std::string_view name_of(Enum value, const std::pair<std::string_view, Enum> (&names)[N]) {
    for (const auto& [name, v] : names) {
        if (v == value) {
            return name;
        }
    }
    return "?";
}

std::uint8_t scale_to_byte(double ratio) {
    return static_cast<std::uint8_t>(std::lround(255.0 * ratio));
}

}  // namespace

std::string_view to_string(EncodingMode m) { return name_of(m, mode_names); }
std::string_view to_string(UnknownPolicy p) { return name_of(p, unknown_names); }
std::string_view to_string(OverflowPolicy p) { return name_of(p, overflow_names); }
std::string_view to_string(Normalization n) { return name_of(n, normalization_names); }

EncodingMode parse_encoding_mode(std::string_view s) { return parse_enum(s, mode_names, "mode"); }
UnknownPolicy parse_unknown_policy(std::string_view s) {
    return parse_enum(s, unknown_names, "unknown-symbol policy");
}
OverflowPolicy parse_overflow_policy(std::string_view s) {
    return parse_enum(s, overflow_names, "overflow policy");
}
Normalization parse_normalization(std::string_view s) {
    return parse_enum(s, normalization_names, "normalization");
}

std::string EncodingConfig::describe() const {
    std::string out = "hilbert;order=" + std::to_string(params.order()) +
                      ";dims=" + std::to_string(params.dims()) + ";alphabet=" + alphabet.describe();
    out += ";mode=";
    out += to_string(mode);
    out += ";unknown=";
    out += to_string(unknown_policy);
    out += ";overflow=";
    out += to_string(overflow_policy);
    out += ";normalization=";
    out += to_string(normalization);
    return out;
}

std::string fingerprint(std::string_view text) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

CurveDistance distance_for_symbol(std::uint64_t index, std::uint64_t seq_len,
                                  const CurveParams& params, OverflowPolicy overflow) {
    if (seq_len == 0) {
        throw encode_error("cannot scale a symbol index by an empty sequence length");
    }
    const std::uint64_t theta = params.theta();
    const u128 scaled = static_cast<u128>(index) * theta / seq_len;
    switch (overflow) {
        case OverflowPolicy::modulo:
            return CurveDistance{static_cast<std::uint64_t>(scaled % theta)};
        case OverflowPolicy::clamp:
            return CurveDistance{scaled >= theta ? theta - 1 : static_cast<std::uint64_t>(scaled)};
    }
    return CurveDistance{};
}

IntensityGrid normalize(const CountGrid& counts, Normalization normalization) {
    IntensityGrid out(counts.side());
    const auto& in = counts.cells();
    const std::uint64_t max = in.empty() ? 0 : *std::max_element(in.begin(), in.end());
    if (max == 0) {
        return out;
    }
    auto& px = out.cells();
    const double denom = normalization == Normalization::max_count
                             ? static_cast<double>(max)
                             : std::log1p(static_cast<double>(max));
    for (std::size_t i = 0; i < in.size(); ++i) {
        const double value = normalization == Normalization::max_count
                                 ? static_cast<double>(in[i])
                                 : std::log1p(static_cast<double>(in[i]));
        px[i] = scale_to_byte(value / denom);
    }
    return out;
}

EncodedImage encode_sequence(const SequenceRecord& seq, const EncodingConfig& config) {
    const CurveParams& params = config.params;
    if (params.dims() != 2) {
        throw domain_error("image encoding needs a two-dimensional curve, got dims=" +
                           std::to_string(params.dims()));
    }
    const std::string& residues = seq.residues;
    const std::uint64_t length = residues.size();
    if (length == 0) {
        throw encode_error("sequence '" + seq.id + "' is empty");
    }

    EncodedImage img;
    img.counts = CountGrid(params.side());
    img.meta.encoder = "hilbert";
    img.meta.config = config.describe();
    img.meta.fingerprint = fingerprint(img.meta.config);
    img.meta.sequence_id = seq.id;
    img.meta.length = residues.size();
    img.meta.uniqueness_precondition = params.theta() > length;

    // In paper mode a symbol's cell depends only on its index, so cache it.
    std::vector<std::optional<std::pair<std::uint64_t, std::uint64_t>>> cell_of(
        config.alphabet.size());
    std::vector<bool> seen(config.alphabet.size(), false);

    for (std::size_t pos = 0; pos < residues.size(); ++pos) {
        const char c = residues[pos];
        const auto index = index_mapping(c, config.alphabet);
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

        if (config.mode == EncodingMode::paper) {
            auto& cell = cell_of[*index];
            if (!cell) {
                const auto d = distance_for_symbol(*index, length, params, config.overflow_policy);
                const auto pt = point_from_distance(d, params);
                cell.emplace(pt.coords[0], pt.coords[1]);
            }
            ++img.counts.at(cell->first, cell->second);
        } else {
            const auto d = distance_for_symbol(pos, length, params, config.overflow_policy);
            const auto pt = point_from_distance(d, params);
            img.counts.at(pt.coords[0], pt.coords[1]) = *index + 1;
        }
    }

    if (img.meta.mapped == 0) {
        throw encode_error("sequence '" + seq.id + "' has no symbols from alphabet " +
                           config.alphabet.describe());
    }

    img.meta.distinct_symbols = static_cast<std::size_t>(std::count(seen.begin(), seen.end(), true));
    const auto& cells = img.counts.cells();
    img.meta.lit_cells =
        static_cast<std::size_t>(std::count_if(cells.begin(), cells.end(), [](auto v) { return v != 0; }));
    if (config.mode == EncodingMode::paper) {
        img.meta.collisions = img.meta.distinct_symbols - img.meta.lit_cells;
    }
    img.intensities = normalize(img.counts, config.normalization);
    return img;
}

}  // namespace hilbertimg
