#pragma once

#include "hilbertimg/encoder.hpp"
#include "hilbertimg/grid.hpp"

#include <filesystem>
#include <string_view>

namespace hilbertimg {

enum class ImageFormat { pgm, png, csv };

std::string_view to_string(ImageFormat f);
/// Throws usage_error for anything but "pgm", "png" or "csv".
ImageFormat parse_image_format(std::string_view s);

/// Writes `img`, creating missing parent directories.
///
///  - pgm: binary P5, "P5\n<side> <side>\n255\n", then the intensities row by row.
///  - png: 8-bit single-channel grayscale of the intensities.
///  - csv: one line per row of comma-separated raw counts.
///
/// Throws io_error naming the path on failure.
void write_image(const EncodedImage& img, const std::filesystem::path& path, ImageFormat format);

/// Reads a binary P5 file with maxval 255 (comments in the header allowed).
/// Throws io_error or parse_error.
IntensityGrid read_pgm(const std::filesystem::path& path);

/// Reads a PNG, converting it to 8-bit grayscale. Throws io_error for a
/// missing, undecodable or non-square image.
IntensityGrid read_png(const std::filesystem::path& path);

/// Dispatches on the file extension (.pgm or .png).
IntensityGrid read_image(const std::filesystem::path& path);

}  // namespace hilbertimg
