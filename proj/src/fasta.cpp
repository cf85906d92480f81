#include "hilbertimg/fasta.hpp"

#include "hilbertimg/errors.hpp"

#include <cctype>
#include <set>
#include <sstream>
#include <string>

namespace hilbertimg {

namespace {

std::string strip_all_space(const std::string& line) {
    std::string out;
    out.reserve(line.size());
    for (char c : line) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out.push_back(c);
        }
    }
    return out;
}

bool is_blank(const std::string& line) { return strip_all_space(line).empty(); }

}  // namespace

std::vector<SequenceRecord> parse_fasta(std::istream& in) {
    std::vector<SequenceRecord> records;
    std::set<std::string> ids;
    std::size_t header_line = 0;
    std::size_t line_no = 0;
    std::string line;

    auto finish = [&] {
        if (!records.empty() && records.back().residues.empty()) {
            throw parse_error("record '" + records.back().id + "' starting at line " +
                                  std::to_string(header_line) + " has no sequence",
                              header_line);
        }
    };

    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (!line.empty() && line.front() == '>') {
            finish();
            std::istringstream header(line.substr(1));
            std::string id;
            header >> id;
            if (id.empty()) {
                throw parse_error("empty FASTA id at line " + std::to_string(line_no), line_no);
            }
            if (!ids.insert(id).second) {
                throw parse_error("duplicate FASTA id '" + id + "' at line " + std::to_string(line_no),
                                  line_no);
            }
            records.push_back(SequenceRecord{id, {}, std::nullopt});
            header_line = line_no;
            continue;
        }
        if (is_blank(line)) {
            continue;
        }
        if (records.empty()) {
            throw parse_error("sequence data before the first FASTA header at line " +
                                  std::to_string(line_no),
                              line_no);
        }
        records.back().residues += strip_all_space(line);
    }
    finish();
    return records;
}

std::vector<SequenceRecord> parse_fasta_or_plain(std::istream& in) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    std::istringstream probe(text);
    std::string line;
    bool fasta = false;
    while (std::getline(probe, line)) {
        if (!is_blank(line)) {
            fasta = line.front() == '>';
            break;
        }
    }

    std::istringstream body(text);
    if (fasta) {
        return parse_fasta(body);
    }
    std::vector<SequenceRecord> records;
    while (std::getline(body, line)) {
        auto residues = strip_all_space(line);
        if (residues.empty()) {
            continue;
        }
        records.push_back(
            SequenceRecord{"seq" + std::to_string(records.size() + 1), std::move(residues), std::nullopt});
    }
    return records;
}

}  // namespace hilbertimg
