#include "hilbertimg/alphabet.hpp"

#include "hilbertimg/errors.hpp"

#include <cctype>

namespace hilbertimg {

namespace {

char upper(char c) {
    return static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
}

}  // namespace

Alphabet::Alphabet(std::string name, std::string_view symbols) : name_(std::move(name)) {
    lookup_.fill(-1);
    symbols_.reserve(symbols.size());
    for (char raw : symbols) {
        const char c = upper(raw);
        const auto slot = static_cast<unsigned char>(c);
        if (lookup_[slot] >= 0) {
            throw domain_error("alphabet '" + name_ + "' repeats symbol '" + std::string(1, c) + "'");
        }
        lookup_[slot] = static_cast<std::int16_t>(symbols_.size());
        symbols_.push_back(c);
    }
    if (symbols_.size() < 2) {
        throw domain_error("alphabet '" + name_ + "' needs at least two symbols");
    }
}

Alphabet Alphabet::protein20() { return Alphabet("protein20", "ACDEFGHIKLMNPQRSTVWY"); }

Alphabet Alphabet::dna4() { return Alphabet("dna4", "ACGT"); }

Alphabet Alphabet::from_name(std::string_view spec) {
    if (spec == "protein20" || spec == "protein-20") {
        return protein20();
    }
    if (spec == "dna4" || spec == "dna-4") {
        return dna4();
    }
    constexpr std::string_view custom = "custom:";
    if (spec.starts_with(custom)) {
        return Alphabet("custom", spec.substr(custom.size()));
    }
    throw domain_error("unknown alphabet '" + std::string(spec) +
                       "' (expected protein20, dna4 or custom:<symbols>)");
}

std::optional<std::size_t> Alphabet::index_of(char c) const noexcept {
    const auto idx = lookup_[static_cast<unsigned char>(upper(c))];
    if (idx < 0) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(idx);
}

std::optional<std::size_t> index_mapping(char c, const Alphabet& alphabet) noexcept {
    return alphabet.index_of(c);
}

}  // namespace hilbertimg
