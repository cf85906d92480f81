#include "hilbertimg/manifest.hpp"

#include "hilbertimg/errors.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>

namespace hilbertimg {

namespace {

void check_field(const std::string& field) {
    if (field.find_first_of("\t\r\n") != std::string::npos) {
        throw schema_error("manifest field contains a tab or line break: '" + field + "'");
    }
}

std::vector<std::string> split_tabs(const std::string& line) {
    std::vector<std::string> out;
    std::size_t start = 0;
    while (true) {
        const auto tab = line.find('\t', start);
        out.push_back(line.substr(start, tab - start));
        if (tab == std::string::npos) {
            break;
        }
        start = tab + 1;
    }
    return out;
}

}  // namespace

std::string_view to_string(Split s) {
    switch (s) {
        case Split::train:
            return "train";
        case Split::val:
            return "val";
        case Split::test:
            return "test";
    }
    return "?";
}

Split parse_split(std::string_view s) {
    if (s == "train") return Split::train;
    if (s == "val") return Split::val;
    if (s == "test") return Split::test;
    throw parse_error("unknown split '" + std::string(s) + "'", 0);
}

std::size_t DatasetManifest::count(Split s) const {
    return static_cast<std::size_t>(
        std::count_if(rows.begin(), rows.end(), [s](const ManifestRow& r) { return r.split == s; }));
}

void write_manifest(const DatasetManifest& manifest, std::ostream& out) {
    out << "# seed=" << manifest.seed << '\n' << manifest_header << '\n';
    for (const auto& row : manifest.rows) {
        check_field(row.image_path);
        check_field(row.label);
        check_field(row.sequence_id);
        out << row.image_path << '\t' << row.label << '\t' << to_string(row.split) << '\t'
            << row.sequence_id << '\n';
    }
}

void write_manifest(const DatasetManifest& manifest, const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw io_error("cannot write manifest " + path.string());
    }
    write_manifest(manifest, out);
    out.flush();
    if (!out) {
        throw io_error("failed writing manifest " + path.string());
    }
}

DatasetManifest read_manifest(std::istream& in) {
    DatasetManifest manifest;
    std::string line;
    std::size_t line_no = 1;

    constexpr std::string_view seed_prefix = "# seed=";
    if (!std::getline(in, line) || !line.starts_with(seed_prefix)) {
        throw parse_error("manifest must start with '# seed=<n>'", 1);
    }
    const auto digits = std::string_view(line).substr(seed_prefix.size());
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), manifest.seed);
    if (ec != std::errc{} || ptr != digits.data() + digits.size()) {
        throw parse_error("bad seed in manifest line 1", 1);
    }

    ++line_no;
    if (!std::getline(in, line) || line != manifest_header) {
        throw parse_error("manifest line 2 must be the column header", 2);
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (line.empty()) {
            continue;
        }
        auto fields = split_tabs(line);
        if (fields.size() != 4) {
            throw parse_error("manifest line " + std::to_string(line_no) + " has " +
                                  std::to_string(fields.size()) + " fields, expected 4",
                              line_no);
        }
        ManifestRow row;
        row.image_path = std::move(fields[0]);
        row.label = std::move(fields[1]);
        try {
            row.split = parse_split(fields[2]);
        } catch (const parse_error& e) {
            throw parse_error(std::string(e.what()) + " on manifest line " + std::to_string(line_no), line_no);
        }
        row.sequence_id = std::move(fields[3]);
        manifest.rows.push_back(std::move(row));
    }
    return manifest;
}

DatasetManifest read_manifest(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open manifest " + path.string());
    }
    return read_manifest(in);
}

}  // namespace hilbertimg
