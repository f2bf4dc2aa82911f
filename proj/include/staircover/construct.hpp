#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "formulas.hpp"
#include "geometry.hpp"
#include "normalize.hpp"

namespace staircover {

// Horizontal strips: rows 1..inc bottom-up as increasing tiles, then rows
// n..n+1-dec top-down as decreasing tiles. Already anchored.
inline Covering strip_covering(int width, int inc, int dec) {
    if (width < 0 || inc < 0 || dec < 0)
        throw precondition_error("strip_covering: negative argument");
    const int n = inc + dec;
    Covering c{{width, n}, {}};
    c.tiles.reserve(static_cast<std::size_t>(n));
    for (int j = 1; j <= inc; ++j) c.tiles.push_back(constant_tile(Direction::increasing, j, width));
    for (int k = 1; k <= dec; ++k)
        c.tiles.push_back(constant_tile(Direction::decreasing, n + 1 - k, width));
    return c;
}

namespace detail {

// Structural checks for the anchored convention the construction maintains:
// increasing tiles first with left-edge rows 1..inc, then decreasing tiles
// with left-edge rows n..n+1-dec, all full-domain.
inline void require_anchored(const Covering& c, int inc, int dec, const char* who) {
    if (static_cast<int>(c.tiles.size()) != inc + dec)
        throw precondition_error(std::string(who) + ": expected " + std::to_string(inc + dec) +
                                 " tiles, got " + std::to_string(c.tiles.size()));
    for (int j = 1; j <= inc; ++j) {
        const Tile& t = c.tiles[static_cast<std::size_t>(j - 1)];
        if (t.direction != Direction::increasing || !t.full_domain(c.dims.m) ||
            t.values.front() != j)
            throw precondition_error(std::string(who) + ": increasing tile " + std::to_string(j) +
                                     " is not anchored");
    }
    for (int k = 1; k <= dec; ++k) {
        const Tile& t = c.tiles[static_cast<std::size_t>(inc + k - 1)];
        if (t.direction != Direction::decreasing || !t.full_domain(c.dims.m) ||
            t.values.front() != c.dims.n + 1 - k)
            throw precondition_error(std::string(who) + ": decreasing tile " + std::to_string(k) +
                                     " is not anchored");
    }
}

} // namespace detail

// Extends an anchored (inc-excess, dec)-covering of a w x (inc+dec) rectangle
// to an anchored (inc, dec)-covering of a (dec+excess+w) x (excess+inc+dec)
// rectangle. The first dec columns lower the decreasing tiles by `excess`
// rows (topmost drops last), the next `excess` columns lift the top `excess`
// increasing tiles onto the added rows (topmost jumps first), and the
// residual covering continues unchanged to the right of those columns.
inline Covering build_prefix(int excess, int inc, int dec, const Covering& residual) {
    if (excess < 1) throw precondition_error("build_prefix requires excess >= 1");
    if (inc < excess) throw precondition_error("build_prefix requires inc >= excess");
    if (dec < 0) throw precondition_error("build_prefix: negative class count");
    if (residual.dims.n != inc + dec)
        throw precondition_error("build_prefix: residual height must be inc + dec");
    detail::require_anchored(residual, inc - excess, dec, "build_prefix residual");

    const int n = excess + inc + dec;
    const int w = residual.dims.m;
    const int width = dec + excess + w;

    Covering out{{width, n}, {}};
    out.tiles.reserve(static_cast<std::size_t>(inc) + dec);

    // Bottom increasing tiles: constant across the new columns, then the
    // residual tile shifted right. The residual anchor row equals j, so the
    // junction is seamless.
    for (int j = 1; j <= inc - excess; ++j) {
        const Tile& res = residual.tiles[static_cast<std::size_t>(j - 1)];
        std::vector<int> v(static_cast<std::size_t>(dec + excess), j);
        v.insert(v.end(), res.values.begin(), res.values.end());
        out.tiles.push_back(Tile{Direction::increasing, 0, std::move(v)});
    }
    // Lifted increasing tiles: tile t starts at row inc-excess+t and jumps to
    // row inc+dec+t in column dec+excess+1-t, then stays constant.
    for (int t = 1; t <= excess; ++t) {
        std::vector<int> v(static_cast<std::size_t>(width) + 1, inc + dec + t);
        for (int b = 0; b <= dec + excess - t; ++b) v[static_cast<std::size_t>(b)] = inc - excess + t;
        out.tiles.push_back(Tile{Direction::increasing, 0, std::move(v)});
    }
    // Decreasing tiles: tile k starts at row n+1-k, drops by `excess` in
    // column dec+1-k, and continues as the residual's decreasing tile, whose
    // anchor row inc+dec+1-k equals the dropped level.
    for (int k = 1; k <= dec; ++k) {
        const Tile& res = residual.tiles[static_cast<std::size_t>(inc - excess + k - 1)];
        std::vector<int> v;
        v.reserve(static_cast<std::size_t>(width) + 1);
        v.insert(v.end(), static_cast<std::size_t>(dec - k + 1), n + 1 - k);
        v.insert(v.end(), static_cast<std::size_t>(excess + k - 1), n + 1 - k - excess);
        v.insert(v.end(), res.values.begin(), res.values.end());
        out.tiles.push_back(Tile{Direction::decreasing, 0, std::move(v)});
    }
    return out;
}

// Builds an anchored (inc, dec)-covering of the widest coverable rectangle of
// height excess+inc+dec. For excess == 0 every width is coverable by strips,
// so the caller must request one; otherwise the resulting width is exactly
// inc + dec + floor(inc*dec/excess).
//
// The reduction is driven iteratively so the step chain can grow without
// bounding the call stack: as long as one class has at least `excess` tiles,
// a prefix block absorbs `excess` of them (classes swap via a vertical mirror
// when needed); once both classes are smaller than `excess`, the problem is
// transposed, i.e. solved for the reduced excess floor(inc*dec/excess), then
// trimmed and reflected across y = -x back into shape.
inline Covering extremal_covering(int excess, int inc, int dec,
                                  std::optional<int> width = std::nullopt) {
    if (excess < 0 || inc < 0 || dec < 0)
        throw precondition_error("extremal_covering: negative argument");
    if (excess == 0 && !width)
        throw precondition_error("extremal_covering: width request required when excess == 0");
    if (excess != 0 && width)
        throw precondition_error("extremal_covering: width request only allowed when excess == 0");
    if (width && *width < 0) throw precondition_error("extremal_covering: negative width");

    struct Step {
        enum Kind { prefix, swap_classes, transpose } kind;
        int excess;
        int inc;
        int dec;
    };
    std::vector<Step> steps;

    int e = excess;
    int i = inc;
    int d = dec;
    std::optional<int> base_width = width;
    while (e > 0) {
        if (i >= e) {
            steps.push_back({Step::prefix, e, i, d});
            i -= e;
        } else if (d >= e) {
            steps.push_back({Step::swap_classes, e, i, d});
            std::swap(i, d);
        } else {
            steps.push_back({Step::transpose, e, i, d});
            const int e2 = i * d / e; // < e because i, d < e
            if (e2 == 0) base_width = i + d + e;
            e = e2;
        }
    }

    Covering c = strip_covering(*base_width, i, d);
    for (auto it = steps.rbegin(); it != steps.rend(); ++it) {
        switch (it->kind) {
        case Step::prefix:
            c = build_prefix(it->excess, it->inc, it->dec, c);
            break;
        case Step::swap_classes:
            // the inner covering solved (excess, dec, inc); flip it and
            // restore the increasing-first tile order
            c = mirror_covering(c);
            std::rotate(c.tiles.begin(), c.tiles.begin() + it->dec, c.tiles.end());
            break;
        case Step::transpose: {
            const int target_w = it->inc + it->dec + it->excess;
            if (c.dims.m < target_w)
                throw std::logic_error("reduction produced a covering that is too narrow");
            c = anchor_left(reflect_covering(trim_covering(c, target_w)), it->inc, it->dec);
            break;
        }
        }
    }

    if (excess > 0) {
        if (ExtNat(c.dims.m) != max_width_excess(excess, inc, dec) ||
            c.dims.n != excess + inc + dec)
            throw std::logic_error("constructed covering has unexpected dimensions");
        detail::require_anchored(c, inc, dec, "extremal_covering result");
    }
    return c;
}

// An (inc, dec)-covering of the m x n rectangle, built by trimming the
// extremal covering; infeasible when m exceeds the maximal coverable width.
inline Covering construct_covering(int m, int n, int inc, int dec) {
    if (m < 0 || n < 0 || inc < 0 || dec < 0)
        throw precondition_error("construct_covering: negative argument");
    if (inc + dec > n) throw domain_error("class counts exceed the height");
    const ExtNat cap = max_width_split(n, inc, dec);
    if (ExtNat(m) > cap)
        throw infeasible_error("no covering of width " + std::to_string(m) + " with " +
                               std::to_string(inc) + " increasing and " + std::to_string(dec) +
                               " decreasing tiles at height " + std::to_string(n) +
                               "; the maximum width is " + cap.to_string());
    const int excess = n - inc - dec;
    if (excess == 0) return strip_covering(m, inc, dec);
    return trim_covering(extremal_covering(excess, inc, dec), m);
}

// A minimum-cardinality covering of the m x n rectangle: the optimal tile
// count, split as evenly as possible between the two directions.
inline Covering construct_min_covering(int m, int n) {
    if (m < 0 || n < 0) throw precondition_error("construct_min_covering: negative argument");
    if (m == 0 || n == 0) return Covering{{m, n}, {}};
    const int p = static_cast<int>(min_cover_count(m, n));
    return construct_covering(m, n, (p + 1) / 2, p / 2);
}

} // namespace staircover
