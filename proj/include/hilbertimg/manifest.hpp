#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

namespace hilbertimg {

enum class Split { train, val, test };

std::string_view to_string(Split s);
/// Throws parse_error (line 0) for anything but "train", "val" or "test".
Split parse_split(std::string_view s);

struct ManifestRow {
    std::string image_path;  ///< relative to the manifest's directory
    std::string label;       ///< empty for unlabeled records
    Split split = Split::train;
    std::string sequence_id;

    friend bool operator==(const ManifestRow&, const ManifestRow&) = default;
};

/// Binds exported images to labels and train/val/test membership.
///
/// On disk: a "# seed=<n>" comment line, then the tab-separated header
/// "image_path\tlabel\tsplit\tsequence_id", then one row per record.
struct DatasetManifest {
    std::uint64_t seed = 0;
    std::vector<ManifestRow> rows;

    std::size_t count(Split s) const;

    friend bool operator==(const DatasetManifest&, const DatasetManifest&) = default;
};

inline constexpr std::string_view manifest_header = "image_path\tlabel\tsplit\tsequence_id";

/// Throws schema_error if a field contains a tab or newline.
void write_manifest(const DatasetManifest& manifest, std::ostream& out);
/// Throws io_error when the file cannot be written.
void write_manifest(const DatasetManifest& manifest, const std::filesystem::path& path);

/// Throws parse_error on a missing seed line, wrong header or malformed row.
DatasetManifest read_manifest(std::istream& in);
DatasetManifest read_manifest(const std::filesystem::path& path);

}  // namespace hilbertimg
