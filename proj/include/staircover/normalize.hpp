#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace staircover {

namespace detail {

inline void require_increasing_class(const std::vector<Tile>& tiles, const char* who) {
    for (const Tile& t : tiles)
        if (t.direction != Direction::increasing)
            throw precondition_error(std::string(who) + " operates on increasing tiles only");
}

} // namespace detail

// One peeling step. Extends every tile to the full domain, drops exact
// duplicates, extracts a tile that covers the largest part of the region at
// and above the highest reached row, and clips all remaining tiles strictly
// below that row. The union of cells never shrinks, the rest is strictly
// smaller than the input, and every rest tile ends strictly below the top.
inline std::pair<Tile, std::vector<Tile>> peel_top(const std::vector<Tile>& tiles, RectDims dims) {
    if (tiles.empty()) throw precondition_error("peel_top needs at least one tile");
    detail::require_increasing_class(tiles, "peel_top");

    std::vector<Tile> work;
    work.reserve(tiles.size());
    for (const Tile& t : tiles) {
        validate_tile(t, dims);
        Tile full = extend_to_full_domain(t, dims.m);
        if (std::find(work.begin(), work.end(), full) == work.end())
            work.push_back(std::move(full));
    }

    int top_row = 0;
    for (const Tile& t : work) top_row = std::max(top_row, t.values.back());

    // A tile's cells in the top row sit at the boundaries whose value already
    // reached top_row, so counting those picks the tile covering the most of
    // the region above top_row - 1. Ties go to input order.
    std::size_t best = 0;
    int best_cells = -1;
    for (std::size_t k = 0; k < work.size(); ++k) {
        if (work[k].values.back() != top_row) continue;
        int cells = 0;
        for (std::size_t j = 1; j < work[k].values.size(); ++j)
            cells += work[k].values[j] == top_row;
        if (cells > best_cells) {
            best_cells = cells;
            best = k;
        }
    }

    Tile top = work[best];
    std::vector<Tile> rest;
    if (top_row >= 2) {
        for (std::size_t k = 0; k < work.size(); ++k) {
            if (k == best) continue;
            Tile clipped = work[k];
            for (int& v : clipped.values) v = std::min(v, top_row - 1);
            if (std::find(rest.begin(), rest.end(), clipped) == rest.end())
                rest.push_back(std::move(clipped));
        }
    }
    return {std::move(top), std::move(rest)};
}

// Iterates peel_top to exhaustion: at most as many full-domain tiles as given,
// final values strictly decreasing, jointly covering at least the input cells.
inline std::vector<Tile> canonical_top(std::vector<Tile> tiles, RectDims dims) {
    std::vector<Tile> out;
    while (!tiles.empty()) {
        auto [top, rest] = peel_top(tiles, dims);
        out.push_back(std::move(top));
        tiles = std::move(rest);
    }
    return out;
}

// Replaces two full-domain increasing tiles with distinct final values by a
// non-overlapping pair (lower, upper) covering at least their union. The
// lower tile is the pointwise minimum; the upper one is lifted just enough to
// stay strictly above it: lower(k) < upper(k-1) for every column k.
inline std::pair<Tile, Tile> untangle_pair(const Tile& a, const Tile& b) {
    if (a.direction != Direction::increasing || b.direction != Direction::increasing)
        throw precondition_error("untangle_pair operates on increasing tiles only");
    if (a.domain_start != 0 || b.domain_start != 0 || a.values.size() != b.values.size())
        throw precondition_error("untangle_pair expects full-domain tiles on the same boundaries");
    if (!a.is_monotone() || !b.is_monotone())
        throw precondition_error("untangle_pair expects monotone tiles");
    if (a.values.back() == b.values.back())
        throw precondition_error("untangle_pair requires distinct final values");

    const std::size_t len = a.values.size();
    std::vector<int> lower(len);
    std::vector<int> upper(len);
    for (std::size_t k = 0; k < len; ++k) {
        lower[k] = std::min(a.values[k], b.values[k]);
        upper[k] = std::max(a.values[k], b.values[k]);
        if (k + 1 < len)
            upper[k] = std::max(upper[k], std::min(a.values[k + 1], b.values[k + 1]) + 1);
    }
    return {Tile{Direction::increasing, 0, std::move(lower)},
            Tile{Direction::increasing, 0, std::move(upper)}};
}

// Rewrites a family of increasing tiles into pairwise disjoint full-domain
// tiles, ordered bottom to top, covering at least the original union and
// never using more tiles. Repeatedly extracts the pointwise minimum of the
// remaining family as the next output tile.
inline std::vector<Tile> disentangle(const std::vector<Tile>& tiles, RectDims dims) {
    std::vector<Tile> work = canonical_top(tiles, dims);
    std::reverse(work.begin(), work.end()); // ascending final values
    std::vector<Tile> out;
    out.reserve(work.size());
    while (work.size() > 1) {
        Tile low = std::move(work.front());
        std::vector<Tile> next;
        next.reserve(work.size() - 1);
        for (std::size_t k = 1; k < work.size(); ++k) {
            auto [l, u] = untangle_pair(low, work[k]);
            low = std::move(l);
            next.push_back(std::move(u));
        }
        out.push_back(std::move(low));
        work = std::move(next);
    }
    if (!work.empty()) out.push_back(std::move(work.front()));
    return out;
}

// Rewrites c into a covering of the same rectangle with exactly `inc`
// increasing tiles starting at rows 1..inc and `dec` decreasing tiles
// starting at rows n..n+1-dec on the left edge, padding with constant tiles
// when a class has fewer tiles than requested. Output order: increasing tiles
// bottom to top, then decreasing tiles top to bottom.
inline Covering anchor_left(const Covering& c, int inc, int dec) {
    if (inc < 0 || dec < 0) throw precondition_error("anchor_left: negative class count");
    if (inc + dec > c.dims.n) throw domain_error("anchor_left: class counts exceed the height");
    if (!is_covering(c)) throw precondition_error("anchor_left requires a covering");

    std::vector<Tile> inc_in;
    std::vector<Tile> dec_in;
    for (const Tile& t : c.tiles)
        (t.direction == Direction::increasing ? inc_in : dec_in).push_back(t);
    if (static_cast<int>(inc_in.size()) > inc || static_cast<int>(dec_in.size()) > dec)
        throw precondition_error("anchor_left: target class counts below the actual ones");

    std::vector<Tile> lows = disentangle(inc_in, c.dims);

    // The decreasing class goes through a vertical flip, reusing the
    // increasing machinery; flipping back reverses the order, so the first
    // entry of `highs` is the topmost tile.
    std::vector<Tile> flipped;
    flipped.reserve(dec_in.size());
    for (const Tile& t : dec_in) flipped.push_back(mirror_tile(t, c.dims.n));
    std::vector<Tile> highs;
    for (const Tile& t : disentangle(flipped, c.dims)) highs.push_back(mirror_tile(t, c.dims.n));

    Covering out{c.dims, {}};
    out.tiles.reserve(static_cast<std::size_t>(inc) + dec);
    for (int j = 1; j <= inc; ++j) {
        if (j <= static_cast<int>(lows.size())) {
            Tile t = lows[j - 1];
            // disjoint ordered tiles start at pairwise distinct rows, so the
            // j-th one starts at row >= j; lowering the start only grows it
            if (t.values.front() < j)
                throw std::logic_error("disentangled increasing tiles out of order");
            t.values.front() = j;
            out.tiles.push_back(std::move(t));
        } else {
            out.tiles.push_back(constant_tile(Direction::increasing, j, c.dims.m));
        }
    }
    for (int k = 1; k <= dec; ++k) {
        if (k <= static_cast<int>(highs.size())) {
            Tile t = highs[k - 1];
            if (t.values.front() > c.dims.n + 1 - k)
                throw std::logic_error("disentangled decreasing tiles out of order");
            t.values.front() = c.dims.n + 1 - k;
            out.tiles.push_back(std::move(t));
        } else {
            out.tiles.push_back(constant_tile(Direction::decreasing, c.dims.n + 1 - k, c.dims.m));
        }
    }
    return out;
}

} // namespace staircover
