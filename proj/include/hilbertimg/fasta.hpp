#pragma once

#include "hilbertimg/sequence.hpp"

#include <istream>
#include <vector>

namespace hilbertimg {

/// Reads FASTA records. The id is the header text up to the first whitespace;
/// wrapped sequence lines are concatenated with whitespace removed. Blank
/// lines are ignored.
///
/// Throws parse_error (with the 1-based line) for sequence data before the
/// first header, a header with no sequence, an empty id or a repeated id.
std::vector<SequenceRecord> parse_fasta(std::istream& in);

/// Like parse_fasta, but input whose first non-blank line is not a header is
/// read as one sequence per non-blank line, with ids "seq1", "seq2", ...
std::vector<SequenceRecord> parse_fasta_or_plain(std::istream& in);

}  // namespace hilbertimg
