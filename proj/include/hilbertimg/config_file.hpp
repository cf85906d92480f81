#pragma once

#include <filesystem>
#include <istream>
#include <map>
#include <string>

namespace hilbertimg {

/// Line-oriented "key = value" settings; '#' starts a comment, blank lines are
/// ignored. Keys are trimmed and '_' is folded to '-', so "seq_column" and
/// "seq-column" are the same key. A later line overrides an earlier one.
///
/// Throws usage_error (naming the line) for a line without '=' or an empty key.
std::map<std::string, std::string> parse_config(std::istream& in);

/// Throws io_error when the file cannot be opened.
std::map<std::string, std::string> read_config_file(const std::filesystem::path& path);

}  // namespace hilbertimg
