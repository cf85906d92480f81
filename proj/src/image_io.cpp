#include "hilbertimg/image_io.hpp"

#include "hilbertimg/errors.hpp"

#include <png.h>

#include <cctype>
#include <cstring>
#include <fstream>
#include <string>

namespace hilbertimg {

namespace fs = std::filesystem;

namespace {

void ensure_parent(const fs::path& path) {
    const auto parent = path.parent_path();
    if (parent.empty()) {
        return;
    }
    std::error_code ec;
    fs::create_directories(parent, ec);
    if (ec) {
        throw io_error("cannot create directory " + parent.string() + ": " + ec.message());
    }
}

std::ofstream open_out(const fs::path& path) {
    ensure_parent(path);
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw io_error("cannot open " + path.string() + " for writing");
    }
    return out;
}

void finish(std::ofstream& out, const fs::path& path) {
    out.flush();
    if (!out) {
        throw io_error("failed writing " + path.string());
    }
}

void write_pgm(const IntensityGrid& px, const fs::path& path) {
    auto out = open_out(path);
    const auto side = std::to_string(px.side());
    out << "P5\n" << side << ' ' << side << "\n255\n";
    out.write(reinterpret_cast<const char*>(px.cells().data()), static_cast<std::streamsize>(px.size()));
    finish(out, path);
}

void write_csv(const CountGrid& counts, const fs::path& path) {
    auto out = open_out(path);
    for (std::size_t r = 0; r < counts.side(); ++r) {
        for (std::size_t c = 0; c < counts.side(); ++c) {
            if (c) out << ',';
            out << counts.at(r, c);
        }
        out << '\n';
    }
    finish(out, path);
}

void write_png(const IntensityGrid& px, const fs::path& path) {
    ensure_parent(path);
    png_image image;
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
    image.width = static_cast<png_uint_32>(px.side());
    image.height = static_cast<png_uint_32>(px.side());
    image.format = PNG_FORMAT_GRAY;
    if (!png_image_write_to_file(&image, path.c_str(), 0, px.cells().data(), 0, nullptr)) {
        const std::string message = image.message;
        png_image_free(&image);
        throw io_error("cannot write PNG " + path.string() + ": " + message);
    }
}

/// Next whitespace-delimited header token, skipping '#' comments.
std::string pnm_token(std::istream& in) {
    std::string token;
    int c;
    while ((c = in.get()) != EOF) {
        if (c == '#') {
            while ((c = in.get()) != EOF && c != '\n') {
            }
            continue;
        }
        if (std::isspace(c)) {
            if (!token.empty()) break;
            continue;
        }
        token.push_back(static_cast<char>(c));
    }
    return token;
}

}  // namespace

std::string_view to_string(ImageFormat f) {
    switch (f) {
        case ImageFormat::pgm:
            return "pgm";
        case ImageFormat::png:
            return "png";
        case ImageFormat::csv:
            return "csv";
    }
    return "?";
}

ImageFormat parse_image_format(std::string_view s) {
    if (s == "pgm") return ImageFormat::pgm;
    if (s == "png") return ImageFormat::png;
    if (s == "csv") return ImageFormat::csv;
    throw usage_error("invalid image format '" + std::string(s) + "' (expected one of: pgm, png, csv)");
}

void write_image(const EncodedImage& img, const fs::path& path, ImageFormat format) {
    switch (format) {
        case ImageFormat::pgm:
            write_pgm(img.intensities, path);
            break;
        case ImageFormat::png:
            write_png(img.intensities, path);
            break;
        case ImageFormat::csv:
            write_csv(img.counts, path);
            break;
    }
}

IntensityGrid read_pgm(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io_error("cannot open " + path.string());
    }
    if (pnm_token(in) != "P5") {
        throw parse_error(path.string() + " is not a binary PGM (P5)", 1);
    }
    std::size_t width = 0;
    std::size_t height = 0;
    std::size_t maxval = 0;
    try {
        width = std::stoul(pnm_token(in));
        height = std::stoul(pnm_token(in));
        maxval = std::stoul(pnm_token(in));
    } catch (const std::exception&) {
        throw parse_error(path.string() + " has a malformed PGM header", 1);
    }
    if (maxval != 255) {
        throw parse_error(path.string() + ": only maxval 255 is supported", 1);
    }
    if (width != height) {
        throw parse_error(path.string() + ": image is not square", 1);
    }
    IntensityGrid px(width);
    in.read(reinterpret_cast<char*>(px.cells().data()), static_cast<std::streamsize>(px.size()));
    if (static_cast<std::size_t>(in.gcount()) != px.size()) {
        throw parse_error(path.string() + ": truncated pixel data", 0);
    }
    return px;
}

IntensityGrid read_png(const fs::path& path) {
    png_image image;
    std::memset(&image, 0, sizeof image);
    image.version = PNG_IMAGE_VERSION;
    if (!png_image_begin_read_from_file(&image, path.c_str())) {
        const std::string message = image.message;
        png_image_free(&image);
        throw io_error("cannot read PNG " + path.string() + ": " + message);
    }
    image.format = PNG_FORMAT_GRAY;
    if (image.width != image.height) {
        png_image_free(&image);
        throw io_error(path.string() + ": image is not square");
    }
    IntensityGrid px(image.width);
    if (!png_image_finish_read(&image, nullptr, px.cells().data(), 0, nullptr)) {
        const std::string message = image.message;
        png_image_free(&image);
        throw io_error("cannot decode PNG " + path.string() + ": " + message);
    }
    return px;
}

IntensityGrid read_image(const fs::path& path) {
    const auto ext = path.extension().string();
    if (ext == ".pgm") return read_pgm(path);
    if (ext == ".png") return read_png(path);
    throw io_error("unsupported image extension '" + ext + "' for " + path.string());
}

}  // namespace hilbertimg
