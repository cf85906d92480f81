#include "hilbertimg/cgr.hpp"
#include "hilbertimg/errors.hpp"

#include <doctest.h>

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <set>

using namespace hilbertimg;

namespace {

SequenceRecord rec(std::string residues) { return SequenceRecord{"s", std::move(residues), std::nullopt}; }

}  // namespace

TEST_CASE("anchors: DNA recovers the classic corner layout") {
    const auto a = cgr_anchors(Alphabet::dna4());
    REQUIRE(a.size() == 4);
    CHECK((a[0].x == 0.0 && a[0].y == 0.0));
    CHECK((a[1].x == 0.0 && a[1].y == 1.0));
    CHECK((a[2].x == 1.0 && a[2].y == 1.0));
    CHECK((a[3].x == 1.0 && a[3].y == 0.0));
}

TEST_CASE("anchors: protein alphabet gets distinct perimeter points") {
    const auto a = cgr_anchors(Alphabet::protein20());
    std::set<std::pair<double, double>> unique;
    for (const auto& p : a) {
        unique.insert({p.x, p.y});
        const bool on_edge = p.x == 0.0 || p.x == 1.0 || p.y == 0.0 || p.y == 1.0;
        CHECK(on_edge);
    }
    CHECK(unique.size() == 20);
}

TEST_CASE("CGR walk for ACGTTGCA matches the hand trace") {
    // Exact dyadic midpoints from (1/2, 1/2), binned at resolution 4.
    CgrConfig config;
    config.resolution = 4;
    const auto img = encode_cgr(rec("ACGTTGCA"), config, Alphabet::dna4());
    CountGrid expected(4);
    for (auto [r, c] : {std::pair{1, 1}, {0, 2}, {2, 3}, {3, 1}, {3, 0}, {3, 2}, {1, 3}, {0, 1}}) {
        ++expected.at(r, c);
    }
    CHECK(img.counts == expected);
    CHECK(img.meta.mapped == 8);
    CHECK(img.meta.encoder == "cgr");
}

TEST_CASE("CGR: a repeated symbol walks monotonically toward its anchor") {
    CgrConfig config;
    config.resolution = 64;
    std::size_t prev_distance = 64;
    for (std::size_t n = 1; n <= 10; ++n) {
        const auto img = encode_cgr(rec(std::string(n, 'A')), config, Alphabet::dna4());
        // The cell visited last is the one nearest the anchor at (0,0).
        std::size_t nearest = 64;
        for (std::size_t r = 0; r < 64; ++r) {
            for (std::size_t c = 0; c < 64; ++c) {
                if (img.counts.at(r, c)) nearest = std::min(nearest, std::max(r, c));
            }
        }
        CHECK(nearest <= prev_distance);
        prev_distance = nearest;
    }
    CHECK(prev_distance == 0);
}

TEST_CASE("CGR: errors and conservation") {
    CgrConfig config;
    CHECK_THROWS_AS(encode_cgr(rec("NNNN"), config, Alphabet::dna4()), encode_error);
    CHECK_THROWS_AS(encode_cgr(rec(""), config, Alphabet::dna4()), encode_error);
    config.unknown_policy = UnknownPolicy::error;
    CHECK_THROWS_WITH_AS(encode_cgr(rec("ACNT"), config, Alphabet::dna4()), doctest::Contains("position 2"),
                         encode_error);
    config.resolution = 48;
    CHECK_THROWS_AS(encode_cgr(rec("ACGT"), config, Alphabet::dna4()), domain_error);

    CgrConfig defaults;
    const auto img = encode_cgr(rec("MKWVTFISLLXLLFSSAYS"), defaults, Alphabet::protein20());
    const auto sum = std::accumulate(img.counts.cells().begin(), img.counts.cells().end(), std::uint64_t{0});
    CHECK(sum == 18);
    CHECK(img.meta.skipped == 1);
    CHECK(img.side() == 64);
    CHECK(img == encode_cgr(rec("MKWVTFISLLXLLFSSAYS"), defaults, Alphabet::protein20()));
}
