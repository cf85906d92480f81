#pragma once

#include <optional>
#include <string>

namespace hilbertimg {

/// One identified molecular sequence, optionally carrying a class label.
struct SequenceRecord {
    std::string id;
    std::string residues;
    std::optional<std::string> label;

    friend bool operator==(const SequenceRecord&, const SequenceRecord&) = default;
};

}  // namespace hilbertimg
