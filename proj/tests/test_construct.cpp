#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <staircover/construct.hpp>

#include "property_suites.hpp"

using namespace staircover;

TEST_CASE("strip_covering") {
    const Covering c = strip_covering(7, 2, 1);
    CHECK(c.dims == RectDims{7, 3});
    REQUIRE(c.tiles.size() == 3);
    CHECK(c.tiles[0] == constant_tile(Direction::increasing, 1, 7));
    CHECK(c.tiles[1] == constant_tile(Direction::increasing, 2, 7));
    CHECK(c.tiles[2] == constant_tile(Direction::decreasing, 3, 7));
    CHECK(is_covering(c));

    CHECK(is_covering(strip_covering(0, 1, 1)));
    CHECK(strip_covering(4, 0, 0).tiles.empty());
}

TEST_CASE("build_prefix single column") {
    // no residual tiles at all: one increasing tile climbing the only column
    const Covering seed{{0, 1}, {}};
    const Covering c = build_prefix(1, 1, 0, seed);
    CHECK(c.dims == RectDims{1, 2});
    REQUIRE(c.tiles.size() == 1);
    CHECK(c.tiles[0] == Tile{Direction::increasing, 0, {1, 2}});
    CHECK(is_covering(c));
}

TEST_CASE("build_prefix 3x3 and 5x4 steps") {
    // residual: the single decreasing strip covering a 1x2 rectangle
    const Covering r1{{1, 2}, {Tile{Direction::decreasing, 0, {2, 1}}}};
    const Covering c33 = build_prefix(1, 1, 1, r1);
    CHECK(c33.dims == RectDims{3, 3});
    REQUIRE(c33.tiles.size() == 2);
    CHECK(c33.tiles[0] == Tile{Direction::increasing, 0, {1, 1, 3, 3}});
    CHECK(c33.tiles[1] == Tile{Direction::decreasing, 0, {3, 2, 2, 1}});
    CHECK(is_covering(c33));
    CHECK(ExtNat(c33.dims.m) == max_width_split(3, 1, 1));

    const Covering c54 = build_prefix(1, 2, 1, c33);
    CHECK(c54.dims == RectDims{5, 4});
    REQUIRE(c54.tiles.size() == 3);
    CHECK(c54.tiles[0] == Tile{Direction::increasing, 0, {1, 1, 1, 1, 3, 3}});
    CHECK(c54.tiles[1] == Tile{Direction::increasing, 0, {2, 2, 4, 4, 4, 4}});
    CHECK(c54.tiles[2] == Tile{Direction::decreasing, 0, {4, 3, 3, 2, 2, 1}});
    CHECK(is_covering(c54));
    CHECK(ExtNat(c54.dims.m) == max_width_split(4, 2, 1));
}

TEST_CASE("build_prefix validates the residual") {
    const Covering bad{{1, 2}, {Tile{Direction::decreasing, 0, {1, 1}}}}; // wrong anchor
    CHECK_THROWS_AS(build_prefix(1, 1, 1, bad), precondition_error);
    const Covering wrong_class{{1, 2}, {Tile{Direction::increasing, 0, {2, 2}}}};
    CHECK_THROWS_AS(build_prefix(1, 1, 1, wrong_class), precondition_error);
    const Covering r1{{1, 2}, {Tile{Direction::decreasing, 0, {2, 1}}}};
    CHECK_THROWS_AS(build_prefix(0, 1, 1, r1), precondition_error);
    CHECK_THROWS_AS(build_prefix(2, 1, 1, r1), precondition_error); // inc < excess
}

TEST_CASE("extremal_covering pinned instances") {
    const Covering strips = extremal_covering(0, 2, 1, 7);
    CHECK(strips.dims == RectDims{7, 3});
    CHECK(strips.tiles.size() == 3);
    CHECK(is_covering(strips));

    const Covering c3 = extremal_covering(1, 1, 1);
    CHECK(c3.dims == RectDims{3, 3});
    CHECK(c3.tiles.size() == 2);
    CHECK(is_covering(c3));
    CHECK(min_cover_count(3, 3) == 2);

    const Covering c2 = extremal_covering(2, 1, 1); // reduction branch
    CHECK(c2.dims == RectDims{2, 4});
    REQUIRE(c2.tiles.size() == 2);
    CHECK(is_covering(c2));
    // one anchored tile climbs the right column, the other drops from the top
    CHECK(c2.tiles[0] == Tile{Direction::increasing, 0, {1, 1, 4}});
    CHECK(c2.tiles[1] == Tile{Direction::decreasing, 0, {4, 1, 1}});

    const Covering c5 = extremal_covering(1, 2, 1);
    CHECK(c5.dims == RectDims{5, 4});
    CHECK(c5.tiles.size() == 3);
    CHECK(is_covering(c5));
}

TEST_CASE("extremal_covering argument checks") {
    CHECK_THROWS_AS(extremal_covering(0, 1, 1), precondition_error);    // missing width
    CHECK_THROWS_AS(extremal_covering(1, 1, 1, 5), precondition_error); // unexpected width
}

TEST_CASE("extremal sharpness up to height 10") {
    const auto report = testsupport::extremal_sharpness_suite(10);
    INFO(report.first_failure);
    CHECK(report.violations == 0);
}

TEST_CASE("mirror symmetry of the construction") {
    for (int n = 2; n <= 8; ++n)
        for (int inc = 0; inc < n; ++inc)
            for (int dec = 0; inc + dec < n; ++dec) {
                const Covering a = extremal_covering(n - inc - dec, inc, dec);
                const Covering b = mirror_covering(extremal_covering(n - inc - dec, dec, inc));
                CHECK(a.dims == b.dims);
                CHECK(a.increasing_count() == b.increasing_count());
                CHECK(a.decreasing_count() == b.decreasing_count());
                CHECK(is_covering(b));
            }
}

TEST_CASE("construct_covering") {
    const Covering ok = construct_covering(5, 4, 2, 1);
    CHECK(ok.dims == RectDims{5, 4});
    CHECK(ok.tiles.size() == 3);
    CHECK(is_covering(ok));

    CHECK_THROWS_AS(construct_covering(6, 4, 2, 1), infeasible_error);
    CHECK_THROWS_AS(construct_covering(4, 4, 2, 3), domain_error);
    CHECK_THROWS_AS(construct_covering(1, 1, 0, 0), infeasible_error);

    const Covering trimmed = construct_covering(4, 4, 2, 1);
    CHECK(trimmed.dims == RectDims{4, 4});
    CHECK(trimmed.tiles.size() == 3);
    CHECK(is_covering(trimmed));

    // strips for inc + dec == n, any width
    const Covering wide = construct_covering(1000, 3, 2, 1);
    CHECK(wide.dims == RectDims{1000, 3});
    CHECK(is_covering(wide));
}

TEST_CASE("construct_min_covering") {
    const Covering c44 = construct_min_covering(4, 4);
    CHECK(c44.tiles.size() == 3);
    CHECK(is_covering(c44));

    const Covering row = construct_min_covering(9, 1);
    REQUIRE(row.tiles.size() == 1);
    CHECK(row.tiles[0] == constant_tile(Direction::increasing, 1, 9));

    // flat case: the strips are already optimal
    CHECK(trivial_is_minimal(7, 4));
    const Covering flat = construct_min_covering(7, 4);
    CHECK(flat.tiles.size() == 4);
    for (const Tile& t : flat.tiles) CHECK(tile_size(t) == 7);
    CHECK(is_covering(flat));

    CHECK(construct_min_covering(0, 5).tiles.empty());
    CHECK(is_covering(construct_min_covering(0, 5)));

    // zero-width request keeps the tiles as single boundary values
    const Covering zero = construct_covering(0, 4, 2, 1);
    CHECK(zero.dims == RectDims{0, 4});
    CHECK(zero.tiles.size() == 3);
    CHECK(is_covering(zero));
}

TEST_CASE("constructor optimality on small boards") {
    const auto report = testsupport::constructor_optimality_suite(25);
    INFO(report.first_failure);
    CHECK(report.violations == 0);
}

TEST_CASE("construction succeeds at every feasible width and split") {
    for (int n = 1; n <= 6; ++n)
        for (int inc = 0; inc <= n; ++inc)
            for (int dec = 0; inc + dec <= n; ++dec) {
                const ExtNat cap = max_width_split(n, inc, dec);
                const int limit = cap.is_unbounded() ? 9 : static_cast<int>(cap.value());
                for (int m = 0; m <= limit; ++m) {
                    if (m >= 1 && inc + dec == 0) continue; // nothing covers a real board
                    const Covering c = construct_covering(m, n, inc, dec);
                    REQUIRE(is_covering(c));
                    REQUIRE(c.increasing_count() == inc);
                    REQUIRE(c.decreasing_count() == dec);
                    REQUIRE(c.dims == RectDims{m, n});
                }
            }
}

TEST_CASE("anchors hold on every constructed covering") {
    for (int n = 2; n <= 8; ++n)
        for (int inc = 0; inc < n; ++inc)
            for (int dec = 0; inc + dec < n; ++dec) {
                const Covering c = extremal_covering(n - inc - dec, inc, dec);
                int seen_inc = 0;
                int seen_dec = 0;
                for (const Tile& t : c.tiles) {
                    REQUIRE(t.full_domain(c.dims.m));
                    if (t.direction == Direction::increasing)
                        CHECK(t.values.front() == ++seen_inc);
                    else
                        CHECK(t.values.front() == n - seen_dec++);
                }
            }
}

TEST_CASE("deep reductions stay iterative") {
    // long prefix chains must not recurse on the call stack
    const Covering c = extremal_covering(1, 400, 2);
    CHECK(c.dims.n == 403);
    CHECK(ExtNat(c.dims.m) == max_width_split(403, 400, 2));
    CHECK(static_cast<int>(c.tiles.size()) == 402);
}
