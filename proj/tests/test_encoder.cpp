#include "hilbertimg/encoder.hpp"
#include "hilbertimg/errors.hpp"
#include "support/hilbert_oracle.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace hilbertimg;
using hilbertimg::testing::reference_point_from_distance;

namespace {

SequenceRecord rec(std::string residues, std::string id = "s") {
    return SequenceRecord{std::move(id), std::move(residues), std::nullopt};
}

std::uint64_t total(const CountGrid& g) {
    return std::accumulate(g.cells().begin(), g.cells().end(), std::uint64_t{0});
}

std::size_t lit(const CountGrid& g) {
    return static_cast<std::size_t>(std::count_if(g.cells().begin(), g.cells().end(), [](auto v) { return v; }));
}

std::string random_peptide(std::mt19937_64& rng, std::size_t len, const std::string& symbols) {
    std::string s;
    for (std::size_t i = 0; i < len; ++i) {
        s.push_back(symbols[rng() % symbols.size()]);
    }
    return s;
}

}  // namespace

TEST_CASE("alphabet construction and index mapping") {
    const auto protein = Alphabet::protein20();
    CHECK(protein.size() == 20);
    CHECK(index_mapping('A', protein) == 0u);
    CHECK(index_mapping('Y', protein) == 19u);
    CHECK(index_mapping('y', protein) == 19u);
    CHECK_FALSE(index_mapping('B', protein).has_value());
    CHECK_FALSE(index_mapping('*', protein).has_value());

    CHECK(Alphabet::from_name("dna-4").symbols() == "ACGT");
    CHECK(Alphabet::from_name("custom:acgu").symbols() == "ACGU");
    CHECK_THROWS_AS(Alphabet("dup", "ACA"), domain_error);
    CHECK_THROWS_AS(Alphabet("dup", "aA"), domain_error);
    CHECK_THROWS_AS(Alphabet("tiny", "A"), domain_error);
    CHECK_THROWS_AS(Alphabet::from_name("rna"), domain_error);
}

TEST_CASE("distance_for_symbol") {
    const CurveParams p(6, 2);
    CHECK(distance_for_symbol(0, 10, p, OverflowPolicy::modulo).value == 0);
    CHECK(distance_for_symbol(4, 8, p, OverflowPolicy::modulo).value == 2048);
    CHECK(distance_for_symbol(19, 5, p, OverflowPolicy::modulo).value == 3276);
    CHECK(distance_for_symbol(19, 5, p, OverflowPolicy::clamp).value == 4095);
    CHECK(distance_for_symbol(1, 3, p, OverflowPolicy::clamp).value == 1365);
    CHECK_THROWS_AS(distance_for_symbol(0, 0, p, OverflowPolicy::modulo), encode_error);

    // No intermediate overflow at the largest supported curve.
    const CurveParams big(31, 2);
    CHECK(distance_for_symbol(3, 4, big, OverflowPolicy::modulo).value == 3 * (std::uint64_t{1} << 60));
}

TEST_CASE("normalize") {
    CountGrid zeros(4);
    CHECK(normalize(zeros, Normalization::max_count) == IntensityGrid(4));
    CHECK(normalize(zeros, Normalization::log_max) == IntensityGrid(4));

    CountGrid single(4);
    single.at(2, 1) = 4;
    const auto one = normalize(single, Normalization::max_count);
    CHECK(one.at(2, 1) == 255);
    CHECK(std::count(one.cells().begin(), one.cells().end(), 0) == 15);

    // 255/4 = 63.75 -> 64; 127.5 -> 128 (half away from zero); 255.
    CountGrid three(2);
    three.at(0, 0) = 1;
    three.at(0, 1) = 2;
    three.at(1, 0) = 4;
    const auto px = normalize(three, Normalization::max_count);
    CHECK(px.at(0, 0) == 64);
    CHECK(px.at(0, 1) == 128);
    CHECK(px.at(1, 0) == 255);
    CHECK(px.at(1, 1) == 0);

    // ln(2)/ln(4) = 0.5 -> 127.5 -> 128.
    CountGrid logs(2);
    logs.at(0, 0) = 1;
    logs.at(1, 1) = 3;
    const auto lp = normalize(logs, Normalization::log_max);
    CHECK(lp.at(0, 0) == 128);
    CHECK(lp.at(1, 1) == 255);
}

TEST_CASE("encode: a repeated first symbol lights only the origin") {
    const auto img = encode_sequence(rec("AAAA"), EncodingConfig{});
    REQUIRE(img.side() == 64);
    CHECK(img.counts.at(0, 0) == 4);
    CHECK(total(img.counts) == 4);
    CHECK(img.intensities.at(0, 0) == 255);
    CHECK(std::count(img.intensities.cells().begin(), img.intensities.cells().end(), 0) == 4095);
    CHECK(img.meta.mapped == 4);
    CHECK(img.meta.lit_cells == 1);
}

TEST_CASE("encode: ACDC lights the oracle cells of distances 0, 1024 and 2048") {
    const auto img = encode_sequence(rec("ACDC"), EncodingConfig{});
    const auto a = reference_point_from_distance(0, 6);
    const auto c = reference_point_from_distance(1024, 6);
    const auto d = reference_point_from_distance(2048, 6);
    CHECK(img.counts.at(a.first, a.second) == 1);
    CHECK(img.counts.at(c.first, c.second) == 2);
    CHECK(img.counts.at(d.first, d.second) == 1);
    CHECK(lit(img.counts) == 3);
    CHECK(img.intensities.at(c.first, c.second) == 255);
    CHECK(img.intensities.at(a.first, a.second) == 128);
    CHECK(img.meta.distinct_symbols == 3);
    CHECK(img.meta.collisions == 0);
}

TEST_CASE("encode: input is upper-cased before mapping") {
    CHECK(encode_sequence(rec("acdc"), EncodingConfig{}).counts == encode_sequence(rec("ACDC"), EncodingConfig{}).counts);
}

TEST_CASE("encode: unknown symbols") {
    EncodingConfig config;
    const auto img = encode_sequence(rec("ACXBA"), config);
    CHECK(img.meta.mapped == 3);
    CHECK(img.meta.skipped == 2);
    CHECK(img.meta.length == 5);
    CHECK(total(img.counts) == 3);

    config.unknown_policy = UnknownPolicy::error;
    CHECK_THROWS_WITH_AS(encode_sequence(rec("ACXB"), config), doctest::Contains("'X' at position 2"), encode_error);

    CHECK_THROWS_AS(encode_sequence(rec("XXBZ"), EncodingConfig{}), encode_error);
    CHECK_THROWS_AS(encode_sequence(rec(""), EncodingConfig{}), encode_error);
}

TEST_CASE("encode: orders and dimensions") {
    EncodingConfig config;
    config.params = CurveParams(7, 2);
    CHECK(encode_sequence(rec("ACDEFG"), config).side() == 128);
    config.params = CurveParams(3, 3);
    CHECK_THROWS_AS(encode_sequence(rec("ACD"), config), domain_error);
}

TEST_CASE("encode: overflow policies on a short sequence") {
    // L = 5: W (index 18) -> floor(18/5 * 4096) = 14745 -> 14745 mod 4096 = 2457.
    EncodingConfig config;
    const auto modulo = encode_sequence(rec("WWWWW"), config);
    const auto m = reference_point_from_distance(2457, 6);
    CHECK(modulo.counts.at(m.first, m.second) == 5);

    config.overflow_policy = OverflowPolicy::clamp;
    const auto clamp = encode_sequence(rec("WWWWW"), config);
    const auto c = reference_point_from_distance(4095, 6);
    CHECK(clamp.counts.at(c.first, c.second) == 5);

    // A (index 0) and G (index 5 -> 4096 mod 4096 = 0) share the origin.
    const auto collide = encode_sequence(rec("AGAGA"), EncodingConfig{});
    CHECK(collide.counts.at(0, 0) == 5);
    CHECK(collide.meta.distinct_symbols == 2);
    CHECK(collide.meta.collisions == 1);
}

TEST_CASE("encode: positional mode keeps the last symbol index per position cell") {
    EncodingConfig config;
    config.mode = EncodingMode::positional;
    const auto img = encode_sequence(rec("ACD"), config);
    const std::uint64_t distances[] = {0, 1365, 2730};
    for (std::uint64_t pos = 0; pos < 3; ++pos) {
        const auto cell = reference_point_from_distance(distances[pos], 6);
        CHECK(img.counts.at(cell.first, cell.second) == pos + 1);
    }
    CHECK(img.meta.collisions == 0);
    CHECK(img.meta.mapped == 3);
}

TEST_CASE("encode: metadata and determinism") {
    EncodingConfig config;
    const auto a = encode_sequence(rec("MKWVTFISLLLLFSSAYS", "p1"), config);
    const auto b = encode_sequence(rec("MKWVTFISLLLLFSSAYS", "p1"), config);
    CHECK(a == b);
    CHECK(a.meta.fingerprint.size() == 16);
    CHECK(a.meta.sequence_id == "p1");
    CHECK(a.meta.uniqueness_precondition);
    CHECK(a.meta.config ==
          "hilbert;order=6;dims=2;alphabet=protein20:ACDEFGHIKLMNPQRSTVWY;mode=paper;unknown=skip;"
          "overflow=modulo;normalization=max_count");

    EncodingConfig other = config;
    other.normalization = Normalization::log_max;
    CHECK(encode_sequence(rec("MKWV"), other).meta.fingerprint != a.meta.fingerprint);

    EncodingConfig tiny;
    tiny.params = CurveParams(1, 2);
    tiny.alphabet = Alphabet::dna4();
    CHECK_FALSE(encode_sequence(rec("ACGTA"), tiny).meta.uniqueness_precondition);
    CHECK(fingerprint("") == "cbf29ce484222325");
}

TEST_CASE("encode: properties over a seeded fuzz corpus") {
    std::mt19937_64 rng(2024);
    const std::string with_unknowns = "ACDEFGHIKLMNPQRSTVWYXBZ";
    for (int i = 0; i < 300; ++i) {
        const auto len = 1 + rng() % 60;
        const auto seq = random_peptide(rng, len, with_unknowns);
        EncodingConfig config;
        CAPTURE(seq);
        EncodedImage img;
        try {
            img = encode_sequence(rec(seq), config);
        } catch (const encode_error&) {
            CHECK(std::all_of(seq.begin(), seq.end(), [](char c) { return c == 'X' || c == 'B' || c == 'Z'; }));
            continue;
        }
        const auto known = static_cast<std::size_t>(std::count_if(seq.begin(), seq.end(), [](char c) {
            return c != 'X' && c != 'B' && c != 'Z';
        }));
        CHECK(total(img.counts) == known);
        CHECK(img.meta.mapped == known);
        CHECK(img.meta.skipped == seq.size() - known);
        CHECK(*std::max_element(img.intensities.cells().begin(), img.intensities.cells().end()) == 255);

        std::set<char> distinct;
        for (char c : seq) {
            if (index_mapping(c, config.alphabet)) distinct.insert(c);
        }
        CHECK(img.meta.distinct_symbols == distinct.size());
        CHECK(img.meta.lit_cells == lit(img.counts));
        CHECK(img.meta.lit_cells + img.meta.collisions == distinct.size());
        if (seq.size() >= config.alphabet.size()) {
            // Every index is below the length, so distances stay distinct.
            CHECK(img.meta.collisions == 0);
        }
        CHECK(img == encode_sequence(rec(seq), config));
    }
}
