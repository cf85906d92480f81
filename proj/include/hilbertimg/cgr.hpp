#pragma once

#include "hilbertimg/alphabet.hpp"
#include "hilbertimg/encoder.hpp"
#include "hilbertimg/sequence.hpp"

#include <cstddef>
#include <vector>

namespace hilbertimg {

/// Frequency chaos-game representation settings.
struct CgrConfig {
    std::size_t resolution = 64;  ///< grid side, a power of two
    UnknownPolicy unknown_policy = UnknownPolicy::skip;
    Normalization normalization = Normalization::max_count;
};

struct Anchor {
    double x = 0.0;
    double y = 0.0;
};

/// One anchor per symbol, spaced at equal arc length along the perimeter of
/// the unit square starting at (0,0) and walking (0,0) -> (0,1) -> (1,1) ->
/// (1,0). Four symbols land on the corners in that order, so "ACGT" gets the
/// classic A(0,0) C(0,1) G(1,1) T(1,0) layout.
std::vector<Anchor> cgr_anchors(const Alphabet& alphabet);

/// Iterated-midpoint walk from the centre of the unit square; each step moves
/// halfway to the symbol's anchor and counts a hit in the containing cell
/// (row = floor(x * resolution), column = floor(y * resolution)).
///
/// Throws domain_error when the resolution is not a power of two (>= 2) and
/// encode_error under the same conditions as encode_sequence.
EncodedImage encode_cgr(const SequenceRecord& seq, const CgrConfig& config, const Alphabet& alphabet);

}  // namespace hilbertimg
