#pragma once

#include "hilbertimg/alphabet.hpp"
#include "hilbertimg/grid.hpp"
#include "hilbertimg/hilbert.hpp"
#include "hilbertimg/sequence.hpp"

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

namespace hilbertimg {

/// How a symbol picks its curve distance.
///
///  - paper: distance = floor(alphabet_index / length * theta); each cell
///    accumulates one count per occurrence.
///  - positional: distance = floor(position / length * theta); the cell holds
///    alphabet_index + 1 and later symbols overwrite earlier ones. This keeps
///    the order of residues in the image and is an extension, not the
///    alphabet-index formula.
enum class EncodingMode { paper, positional };

enum class UnknownPolicy { skip, error };

/// Applied when the scaled distance reaches theta (index >= length).
enum class OverflowPolicy { modulo, clamp };

enum class Normalization { max_count, log_max };

std::string_view to_string(EncodingMode m);
std::string_view to_string(UnknownPolicy p);
std::string_view to_string(OverflowPolicy p);
std::string_view to_string(Normalization n);

/// Parsers for the textual enum names above; throw usage_error otherwise.
EncodingMode parse_encoding_mode(std::string_view s);
UnknownPolicy parse_unknown_policy(std::string_view s);
OverflowPolicy parse_overflow_policy(std::string_view s);
Normalization parse_normalization(std::string_view s);

struct EncodingConfig {
    CurveParams params{6, 2};
    Alphabet alphabet = Alphabet::protein20();
    EncodingMode mode = EncodingMode::paper;
    UnknownPolicy unknown_policy = UnknownPolicy::skip;
    OverflowPolicy overflow_policy = OverflowPolicy::modulo;
    Normalization normalization = Normalization::max_count;

    /// Canonical one-line description; equal configs give equal strings.
    std::string describe() const;
};

struct ImageMeta {
    std::string encoder;          ///< "hilbert" or "cgr"
    std::string config;           ///< canonical config description
    std::string fingerprint;      ///< 16 hex digits, FNV-1a of `config`
    std::string sequence_id;
    std::size_t length = 0;       ///< residues in the input, unknown ones included
    std::size_t mapped = 0;
    std::size_t skipped = 0;
    std::size_t distinct_symbols = 0;
    std::size_t lit_cells = 0;
    /// Distinct symbols that share their cell with another distinct symbol
    /// (paper mode only), counted as distinct_symbols - lit_cells.
    std::size_t collisions = 0;
    /// theta > length, the condition under which every position can own a
    /// separate curve point.
    bool uniqueness_precondition = false;

    friend bool operator==(const ImageMeta&, const ImageMeta&) = default;
};

/// A side x side image: raw hit counts plus their 8-bit rendering.
struct EncodedImage {
    CountGrid counts;
    IntensityGrid intensities;
    ImageMeta meta;

    std::size_t side() const noexcept { return counts.side(); }

    friend bool operator==(const EncodedImage&, const EncodedImage&) = default;
};

/// Scales a symbol index onto the curve: floor(index / seq_len * theta),
/// computed exactly in integer arithmetic, then wrapped (modulo) or
/// saturated (clamp) into [0, theta).
///
/// Throws encode_error when seq_len is zero.
CurveDistance distance_for_symbol(std::uint64_t index, std::uint64_t seq_len,
                                  const CurveParams& params, OverflowPolicy overflow);

/// Maps counts to 8-bit intensities.
///
/// max_count: round(255 * c / max); log_max: round(255 * ln(1 + c) / ln(1 + max)).
/// Rounding is half away from zero. An all-zero grid stays all zero.
IntensityGrid normalize(const CountGrid& counts, Normalization normalization);

/// Encodes one sequence as a Hilbert-curve image. The input is upper-cased
/// before lookup. Throws encode_error when no symbol survives filtering or
/// when an unknown symbol is met under UnknownPolicy::error (the message
/// names the symbol and its 0-based position), and domain_error when the
/// config does not describe a two-dimensional curve.
EncodedImage encode_sequence(const SequenceRecord& seq, const EncodingConfig& config);

/// 64-bit FNV-1a of `text`, as 16 lowercase hex digits.
std::string fingerprint(std::string_view text);

}  // namespace hilbertimg
