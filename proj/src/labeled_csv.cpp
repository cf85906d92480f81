#include "hilbertimg/labeled_csv.hpp"

#include "hilbertimg/errors.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace hilbertimg {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::string lower(std::string s) {
    std::transform(s.begin(), s.end(), s.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return s;
}

/// Pulls one CSV record at a time; quoted fields may span lines.
class CsvReader {
public:
    explicit CsvReader(std::istream& in) : in_(in) {}

    /// False at end of input. `start_line` receives the record's first line.
    bool next(std::vector<std::string>& fields, std::size_t& start_line) {
        fields.clear();
        if (in_.peek() == std::char_traits<char>::eof()) {
            return false;
        }
        start_line = ++line_;
        std::string field;
        bool quoted = false;
        bool was_quoted = false;
        char c;
        while (in_.get(c)) {
            if (quoted) {
                if (c == '"') {
                    if (in_.peek() == '"') {
                        in_.get(c);
                        field.push_back('"');
                    } else {
                        quoted = false;
                    }
                } else {
                    if (c == '\n') {
                        ++line_;
                    }
                    field.push_back(c);
                }
                continue;
            }
            if (c == '"' && trim(field).empty() && !was_quoted) {
                field.clear();
                quoted = true;
                was_quoted = true;
            } else if (c == ',') {
                fields.push_back(std::move(field));
                field.clear();
                was_quoted = false;
            } else if (c == '\n') {
                break;
            } else if (c != '\r') {
                field.push_back(c);
            }
        }
        if (quoted) {
            throw parse_error("unterminated quoted field starting on line " + std::to_string(start_line),
                              start_line);
        }
        fields.push_back(std::move(field));
        return true;
    }

private:
    std::istream& in_;
    std::size_t line_ = 0;
};

bool blank_row(const std::vector<std::string>& fields) {
    return std::all_of(fields.begin(), fields.end(), [](const std::string& f) { return trim(f).empty(); });
}

}  // namespace

LabeledDataset parse_labeled_csv(std::istream& in, const CsvColumns& columns) {
    CsvReader reader(in);
    std::vector<std::string> fields;
    std::size_t line = 0;
    LabeledDataset out;

    std::vector<std::string> header;
    while (reader.next(fields, line)) {
        if (!blank_row(fields)) {
            header = fields;
            break;
        }
    }
    if (header.empty()) {
        throw schema_error("CSV input has no header row");
    }
    if (!header[0].empty() && header[0].rfind("\xEF\xBB\xBF", 0) == 0) {
        header[0].erase(0, 3);
    }

    auto find_column = [&](const std::string& name) -> std::optional<std::size_t> {
        const auto wanted = lower(trim(name));
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (lower(trim(header[i])) == wanted) {
                return i;
            }
        }
        return std::nullopt;
    };
    auto require_column = [&](const std::string& name) {
        auto col = find_column(name);
        if (!col) {
            throw schema_error("CSV header lacks required column '" + name + "'");
        }
        return *col;
    };

    const std::size_t seq_col = require_column(columns.sequence);
    const std::size_t label_col = require_column(columns.label);
    const std::optional<std::size_t> id_col =
        columns.id ? std::optional<std::size_t>(require_column(*columns.id)) : find_column("id");

    std::set<std::string> ids;
    std::size_t data_row = 0;
    while (reader.next(fields, line)) {
        if (blank_row(fields)) {
            ++out.skipped_rows;
            continue;
        }
        ++data_row;
        if (fields.size() != header.size()) {
            throw parse_error("CSV line " + std::to_string(line) + " has " + std::to_string(fields.size()) +
                                  " fields, header has " + std::to_string(header.size()),
                              line);
        }
        SequenceRecord rec;
        rec.residues = trim(fields[seq_col]);
        if (rec.residues.empty()) {
            throw parse_error("CSV line " + std::to_string(line) + " has an empty sequence cell", line);
        }
        rec.id = id_col ? trim(fields[*id_col]) : std::to_string(data_row);
        if (rec.id.empty()) {
            throw parse_error("CSV line " + std::to_string(line) + " has an empty id cell", line);
        }
        if (!ids.insert(rec.id).second) {
            throw parse_error("CSV line " + std::to_string(line) + " repeats id '" + rec.id + "'", line);
        }
        auto label = lower(trim(fields[label_col]));
        if (!label.empty()) {
            rec.label = std::move(label);
        }
        out.records.push_back(std::move(rec));
    }
    return out;
}

}  // namespace hilbertimg
