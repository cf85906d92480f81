#include "hilbertimg/config_file.hpp"

#include "hilbertimg/errors.hpp"

#include <algorithm>
#include <fstream>

namespace hilbertimg {

namespace {

std::string trim(const std::string& s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string::npos) {
        return {};
    }
    return s.substr(first, s.find_last_not_of(" \t\r") - first + 1);
}

}  // namespace

std::map<std::string, std::string> parse_config(std::istream& in) {
    std::map<std::string, std::string> values;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw usage_error("config line " + std::to_string(line_no) + ": expected 'key = value'");
        }
        auto key = trim(line.substr(0, eq));
        if (key.empty()) {
            throw usage_error("config line " + std::to_string(line_no) + ": empty key");
        }
        std::replace(key.begin(), key.end(), '_', '-');
        values[key] = trim(line.substr(eq + 1));
    }
    return values;
}

std::map<std::string, std::string> read_config_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) {
        throw io_error("cannot open config file " + path.string());
    }
    return parse_config(in);
}

}  // namespace hilbertimg
