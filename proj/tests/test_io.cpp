#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include <staircover/construct.hpp>
#include <staircover/json_io.hpp>
#include <staircover/render.hpp>

#include "testsupport.hpp"

using namespace staircover;
using testsupport::random_tile;
using testsupport::uniform;

namespace {

Covering reference_covering() {
    return Covering{{4, 4},
                    {Tile{Direction::increasing, 0, {2, 4, 4, 4, 4}},
                     Tile{Direction::increasing, 0, {1, 1, 2, 2, 3}},
                     Tile{Direction::decreasing, 1, {3, 3, 1, 1}}}};
}

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    REQUIRE(f.good());
    std::ostringstream buf;
    buf << f.rdbuf();
    return buf.str();
}

} // namespace

TEST_CASE("covering JSON encoding is stable") {
    const std::string expected =
        R"({"m":4,"n":4,"tiles":[{"dir":"inc","start":0,"values":[2,4,4,4,4]},)"
        R"({"dir":"inc","start":0,"values":[1,1,2,2,3]},)"
        R"({"dir":"dec","start":1,"values":[3,3,1,1]}]})";
    CHECK(covering_to_json(reference_covering()) == expected);
}

TEST_CASE("covering JSON round trip") {
    const Covering ref = reference_covering();
    const Covering back = covering_from_json(covering_to_json(ref));
    CHECK(back.dims == ref.dims);
    CHECK(back.tiles == ref.tiles);

    const Covering empty = covering_from_json(R"({"m":0,"n":0,"tiles":[]})");
    CHECK(empty.dims == RectDims{0, 0});
    CHECK(empty.tiles.empty());

    // field order does not matter
    const Covering shuffled = covering_from_json(
        R"({"tiles":[{"values":[3,3,1,1],"dir":"dec","start":1}],"n":4,"m":4})");
    CHECK(shuffled.tiles == std::vector<Tile>{Tile{Direction::decreasing, 1, {3, 3, 1, 1}}});
}

TEST_CASE("covering JSON round trip on random coverings") {
    std::mt19937 rng(31337);
    for (int round = 0; round < 500; ++round) {
        const RectDims dims{uniform(rng, 1, 9), uniform(rng, 1, 9)};
        Covering c{dims, {}};
        const int count = uniform(rng, 0, 5);
        for (int i = 0; i < count; ++i) c.tiles.push_back(random_tile(rng, dims));
        const Covering back = covering_from_json(covering_to_json(c));
        CHECK(back.dims == c.dims);
        CHECK(back.tiles == c.tiles);
    }
}

TEST_CASE("covering JSON rejects malformed input") {
    CHECK_THROWS_AS(covering_from_json("not json"), parse_error);
    CHECK_THROWS_AS(covering_from_json(R"([1,2,3])"), parse_error);
    CHECK_THROWS_AS(covering_from_json(R"({"m":2,"n":2})"), parse_error);
    CHECK_THROWS_AS(covering_from_json(R"({"m":2,"n":2,"tiles":[],"extra":1})"), parse_error);
    CHECK_THROWS_AS(covering_from_json(R"({"m":2.5,"n":2,"tiles":[]})"), parse_error);
    CHECK_THROWS_AS(covering_from_json(R"({"m":-1,"n":2,"tiles":[]})"), parse_error);

    const auto name_of_second_tile = [] {
        try {
            covering_from_json(
                R"({"m":3,"n":3,"tiles":[{"dir":"inc","start":0,"values":[1,2]},)"
                R"({"dir":"inc","start":0,"values":[2,1]}]})");
        } catch (const parse_error& e) {
            return std::string(e.what());
        }
        return std::string();
    }();
    CHECK(name_of_second_tile.find("tile 1") != std::string::npos); // names the offender

    CHECK_THROWS_AS(
        covering_from_json(R"({"m":2,"n":2,"tiles":[{"dir":"inc","start":0,"values":[3,3]}]})"),
        parse_error); // value out of range
    CHECK_THROWS_AS(
        covering_from_json(R"({"m":2,"n":2,"tiles":[{"dir":"up","start":0,"values":[1,1]}]})"),
        parse_error);
    CHECK_THROWS_AS(
        covering_from_json(R"({"m":2,"n":2,"tiles":[{"dir":"inc","start":0,"values":[]}]})"),
        parse_error);
}

TEST_CASE("truncated JSON never crashes the parser") {
    const std::string full = covering_to_json(reference_covering());
    for (std::size_t len = 0; len < full.size(); ++len)
        CHECK_THROWS_AS(covering_from_json(full.substr(0, len)), parse_error);
}

TEST_CASE("ascii_render") {
    Covering bottom{{3, 2}, {constant_tile(Direction::increasing, 1, 3)}};
    CHECK(ascii_render(bottom) == "...\n111\n");

    CHECK(ascii_render(Covering{{2, 2}, {}}) == "..\n..\n");

    CHECK(ascii_render(reference_covering()) == "1111\n1332\n12*2\n2233\n");
}

TEST_CASE("ascii_render widens fields for two-digit indices") {
    Covering tall{{2, 12}, {}};
    for (int j = 1; j <= 12; ++j) tall.tiles.push_back(constant_tile(Direction::increasing, j, 2));
    const std::string text = ascii_render(tall);
    CHECK(text.substr(0, 6) == "12 12\n");
    CHECK(text.find(" 9  9\n") != std::string::npos);
}

TEST_CASE("svg_render structure") {
    const std::string one = svg_render(Covering{{1, 1}, {Tile{Direction::increasing, 0, {1, 1}}}});
    CHECK(one.find("<circle") != std::string::npos); // single-point arc becomes a dot

    const std::string ref = svg_render(reference_covering());
    CHECK(ref.rfind("<svg ", 0) == 0);
    CHECK(ref.find("</svg>") != std::string::npos);
    CHECK(ref.find("<polyline") != std::string::npos);

    // byte-determinism
    CHECK(svg_render(reference_covering()) == ref);

    // never crashes on partial or overlapping coverings
    Covering partial{{3, 3}, {Tile{Direction::increasing, 1, {2, 3}}}};
    partial.tiles.push_back(partial.tiles[0]);
    CHECK(!svg_render(partial).empty());
    CHECK(!ascii_render(partial).empty());

    // a full constructed board parses as balanced markup
    const std::string big = svg_render(construct_min_covering(10, 10));
    long depth = 0;
    for (std::size_t i = 0; i < big.size(); ++i) {
        if (big[i] == '<') depth += big[i + 1] == '/' ? -1 : 1;
        if (big[i] == '/' && big[i + 1] == '>') --depth; // self-closing
        REQUIRE(depth >= 0);
    }
    CHECK(depth == 0);
}

TEST_CASE("golden renderings of the reference covering") {
    const std::string dir = STAIRCOVER_GOLDEN_DIR;
    const Covering ref = reference_covering();
    CHECK(covering_to_json(ref) + "\n" == slurp(dir + "/figure1.json"));
    CHECK(ascii_render(ref) == slurp(dir + "/figure1.txt"));
    CHECK(svg_render(ref) == slurp(dir + "/figure1.svg"));
}
