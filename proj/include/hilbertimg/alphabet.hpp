#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace hilbertimg {

/// Ordered set of single-character symbols. A symbol's position is its index.
///
/// Symbols are stored upper-cased; sequences are upper-cased before lookup, so
/// matching is case-insensitive.
class Alphabet {
public:
    /// Throws domain_error on fewer than two symbols or a duplicate symbol.
    Alphabet(std::string name, std::string_view symbols);

    /// "ACDEFGHIKLMNPQRSTVWY"
    static Alphabet protein20();
    /// "ACGT"
    static Alphabet dna4();

    /// Resolves "protein20", "protein-20", "dna4", "dna-4" or "custom:<symbols>".
    static Alphabet from_name(std::string_view spec);

    const std::string& name() const noexcept { return name_; }
    const std::string& symbols() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return symbols_.size(); }

    std::optional<std::size_t> index_of(char c) const noexcept;

    /// Stable textual identity, e.g. "dna4:ACGT".
    std::string describe() const { return name_ + ":" + symbols_; }

private:
    std::string name_;
    std::string symbols_;
    std::array<std::int16_t, 256> lookup_{};
};

/// Zero-based alphabet position of `c` (case-insensitive); std::nullopt when
/// the symbol is not part of the alphabet.
std::optional<std::size_t> index_mapping(char c, const Alphabet& alphabet) noexcept;

}  // namespace hilbertimg
