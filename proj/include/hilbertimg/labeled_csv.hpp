#pragma once

#include "hilbertimg/sequence.hpp"

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <vector>

namespace hilbertimg {

struct CsvColumns {
    std::string sequence = "sequence";
    std::string label = "class";
    /// When unset, a column named "id" (any case) is used if present, and the
    /// 1-based data row number otherwise.
    std::optional<std::string> id;
};

struct LabeledDataset {
    std::vector<SequenceRecord> records;
    /// Blank lines; nothing else is ever skipped.
    std::size_t skipped_rows = 0;
};

/// Reads a comma-separated file with a header row. Fields may be quoted with
/// '"' (doubled quotes escape). Column names match case-insensitively after
/// trimming. Labels are trimmed and lower-cased; an empty label cell gives a
/// record without a label.
///
/// Throws schema_error when a named column is missing and parse_error (with
/// the 1-based line) for a row with the wrong field count, an empty sequence
/// cell or a repeated id.
LabeledDataset parse_labeled_csv(std::istream& in, const CsvColumns& columns = {});

}  // namespace hilbertimg
