#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "extnat.hpp"
#include "formulas.hpp"
#include "geometry.hpp"

namespace staircover {
namespace oracle {

// All weakly monotone boundary-value sequences of length m+1 over 1..n, i.e.
// every full-domain tile of the given direction. Any covering converts into
// one that uses only such tiles, so searches may restrict to them.
inline std::vector<Tile> enumerate_full_domain_tiles(int m, int n, Direction dir) {
    if (m < 1 || n < 1)
        throw precondition_error("enumerate_full_domain_tiles requires m, n >= 1");
    std::vector<Tile> out;
    std::vector<int> cur;
    cur.reserve(static_cast<std::size_t>(m) + 1);
    auto rec = [&](auto&& self) -> void {
        if (static_cast<int>(cur.size()) == m + 1) {
            std::vector<int> v = cur;
            if (dir == Direction::decreasing) std::reverse(v.begin(), v.end());
            out.push_back(Tile{dir, 0, std::move(v)});
            return;
        }
        for (int v = cur.empty() ? 1 : cur.back(); v <= n; ++v) {
            cur.push_back(v);
            self(self);
            cur.pop_back();
        }
    };
    rec(rec);
    return out;
}

struct MinCoverResult {
    int count = 0;
    Covering witness;
};

// Exact minimum cover cardinality by iterative-deepening branch and bound
// over full-domain tiles: branch on the uncovered cell with the fewest
// candidate tiles (ties to the lowest row, then the lowest column) and cut a
// branch when the remaining budget cannot pay for the uncovered cells, since
// one tile covers at most m + n - 1 of them. Exhausting budget p - 1
// certifies the minimum found at budget p. Intended for min(m, n) <= 6.
inline MinCoverResult min_cover(int m, int n, std::optional<Direction> filter = std::nullopt) {
    if (m < 1 || n < 1) throw precondition_error("min_cover requires m, n >= 1");
    if (std::int64_t{1} * m * n > 64)
        throw precondition_error("board too large for the exact search (needs m*n <= 64)");

    const RectDims dims{m, n};
    std::vector<Tile> tiles;
    std::vector<std::uint64_t> masks;
    std::unordered_set<std::uint64_t> seen;
    auto add = [&](std::vector<Tile>&& batch) {
        for (Tile& t : batch) {
            const CellSet cs = tile_cells(t, dims);
            std::uint64_t mask = 0;
            for (int row = 1; row <= n; ++row)
                for (int col = 1; col <= m; ++col)
                    if (cs.contains(col, row))
                        mask |= std::uint64_t{1} << ((row - 1) * m + (col - 1));
            if (seen.insert(mask).second) {
                masks.push_back(mask);
                tiles.push_back(std::move(t));
            }
        }
    };
    if (!filter || *filter == Direction::increasing)
        add(enumerate_full_domain_tiles(m, n, Direction::increasing));
    if (!filter || *filter == Direction::decreasing)
        add(enumerate_full_domain_tiles(m, n, Direction::decreasing));

    // cells indexed row-major from the bottom row, so ascending index order
    // is "lowest row, then lowest column"
    const int cells = m * n;
    std::vector<std::vector<int>> candidates(static_cast<std::size_t>(cells));
    for (int idx = 0; idx < static_cast<int>(tiles.size()); ++idx)
        for (int cell = 0; cell < cells; ++cell)
            if (masks[static_cast<std::size_t>(idx)] >> cell & 1)
                candidates[static_cast<std::size_t>(cell)].push_back(idx);

    const std::uint64_t full =
        cells == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << cells) - 1;
    const int max_tile_cells = m + n - 1;

    std::vector<int> chosen;
    auto search = [&](auto&& self, std::uint64_t uncovered, int budget) -> bool {
        if (uncovered == 0) return true;
        if (std::int64_t{budget} * max_tile_cells < std::popcount(uncovered)) return false;
        int branch_cell = -1;
        for (int cell = 0; cell < cells; ++cell)
            if (uncovered >> cell & 1)
                if (branch_cell < 0 ||
                    candidates[static_cast<std::size_t>(cell)].size() <
                        candidates[static_cast<std::size_t>(branch_cell)].size())
                    branch_cell = cell;
        // try the candidates that cover the most still-uncovered cells first;
        // ordering only, the enumeration stays exhaustive
        std::vector<int> order = candidates[static_cast<std::size_t>(branch_cell)];
        std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
            return std::popcount(masks[static_cast<std::size_t>(a)] & uncovered) >
                   std::popcount(masks[static_cast<std::size_t>(b)] & uncovered);
        });
        for (int idx : order) {
            chosen.push_back(idx);
            if (self(self, uncovered & ~masks[static_cast<std::size_t>(idx)], budget - 1))
                return true;
            chosen.pop_back();
        }
        return false;
    };

    for (int budget = 1;; ++budget) {
        if (budget > std::min(m, n))
            throw std::logic_error("exact search exceeded the strip bound");
        chosen.clear();
        if (search(search, full, budget)) {
            Covering witness{dims, {}};
            for (int idx : chosen) witness.tiles.push_back(tiles[static_cast<std::size_t>(idx)]);
            return {budget, std::move(witness)};
        }
    }
}

namespace detail {

// Column-by-column reachability over anchored boundary states. A state is
// the tuple of boundary values of the inc+dec tiles; boundary 0 is pinned to
// the anchors (increasing tiles at rows 1..inc, decreasing at n..n+1-dec),
// which loses no coverings. A transition assigns every tile a monotone
// continuation such that the new column is fully covered.
struct ColumnReach {
    std::vector<std::vector<std::int32_t>> parents; // per boundary: state -> predecessor
    std::int64_t state_count = 0;
    int anchor = 0;
    int last_boundary = 0; // deepest boundary with a reachable state
};

inline ColumnReach reach_columns(int n, int inc, int dec, int max_boundary) {
    const int tile_count = inc + dec;
    std::int64_t state_count = 1;
    for (int t = 0; t < tile_count; ++t) {
        state_count *= n;
        if (state_count > (std::int64_t{1} << 22))
            throw precondition_error("state space too large for the exact search");
    }
    if (max_boundary > 0 && n > 30)
        throw precondition_error("height too large for the exact search (needs n <= 30)");
    if ((max_boundary + std::int64_t{1}) * state_count > (std::int64_t{1} << 24))
        throw precondition_error("width too large for the exact search");

    std::vector<std::int64_t> pow(static_cast<std::size_t>(tile_count) + 1, 1);
    for (int t = 0; t < tile_count; ++t) pow[static_cast<std::size_t>(t) + 1] = pow[static_cast<std::size_t>(t)] * n;

    std::int64_t anchor = 0;
    for (int j = 0; j < inc; ++j) anchor += std::int64_t{j} * pow[static_cast<std::size_t>(j)];
    for (int k = 0; k < dec; ++k)
        anchor += std::int64_t{n - 1 - k} * pow[static_cast<std::size_t>(inc + k)];

    ColumnReach r;
    r.state_count = state_count;
    r.anchor = static_cast<int>(anchor);
    r.parents.emplace_back(static_cast<std::size_t>(state_count), -1);
    r.parents[0][static_cast<std::size_t>(anchor)] = static_cast<std::int32_t>(anchor);
    r.last_boundary = 0;

    const std::uint32_t full_mask = (n >= 31) ? 0 : (std::uint32_t{1} << n) - 1;
    auto row_bit = [](int row) { return std::uint32_t{1} << (row - 1); };

    std::vector<std::int32_t> frontier{static_cast<std::int32_t>(anchor)};
    std::vector<int> vals(static_cast<std::size_t>(tile_count));
    std::vector<std::uint32_t> suffix(static_cast<std::size_t>(tile_count) + 1);

    for (int b = 1; b <= max_boundary && !frontier.empty(); ++b) {
        std::vector<std::int32_t> next(static_cast<std::size_t>(state_count), -1);
        std::vector<std::int32_t> next_frontier;

        for (std::int32_t u : frontier) {
            std::int64_t rem = u;
            for (int t = 0; t < tile_count; ++t) {
                vals[static_cast<std::size_t>(t)] = static_cast<int>(rem % n) + 1;
                rem /= n;
            }
            // the most a tile can still cover this column: everything from
            // its boundary value towards its direction
            suffix[static_cast<std::size_t>(tile_count)] = 0;
            for (int t = tile_count - 1; t >= 0; --t) {
                const int v = vals[static_cast<std::size_t>(t)];
                const std::uint32_t span =
                    t < inc ? (full_mask & ~(row_bit(v) - 1))            // rows v..n
                            : (row_bit(v) - 1) | row_bit(v);             // rows 1..v
                suffix[static_cast<std::size_t>(t)] = suffix[static_cast<std::size_t>(t) + 1] | span;
            }

            auto dfs = [&](auto&& self, int t, std::uint32_t covered, std::int64_t partial) -> void {
                if ((covered | suffix[static_cast<std::size_t>(t)]) != full_mask) return;
                if (t == tile_count) {
                    auto& slot = next[static_cast<std::size_t>(partial)];
                    if (slot < 0) {
                        slot = u;
                        next_frontier.push_back(static_cast<std::int32_t>(partial));
                    }
                    return;
                }
                const int v = vals[static_cast<std::size_t>(t)];
                std::uint32_t add = row_bit(v);
                if (t < inc) {
                    for (int w = v; w <= n; ++w) {
                        add |= row_bit(w);
                        self(self, t + 1, covered | add, partial + std::int64_t{w - 1} * pow[static_cast<std::size_t>(t)]);
                    }
                } else {
                    for (int w = v; w >= 1; --w) {
                        add |= row_bit(w);
                        self(self, t + 1, covered | add, partial + std::int64_t{w - 1} * pow[static_cast<std::size_t>(t)]);
                    }
                }
            };
            dfs(dfs, 0, 0, 0);
        }

        if (next_frontier.empty()) break;
        std::sort(next_frontier.begin(), next_frontier.end());
        r.parents.push_back(std::move(next));
        r.last_boundary = b;
        frontier = std::move(next_frontier);
    }
    return r;
}

} // namespace detail

// Some (inc, dec)-covering of the m x n rectangle found by exhaustive
// anchored column search, or nothing when none exists. The counting bound
// short-circuits hopeless widths.
inline std::optional<Covering> find_covering(int m, int n, int inc, int dec) {
    if (m < 1 || n < 1) throw precondition_error("find_covering requires m, n >= 1");
    if (inc < 0 || dec < 0) throw precondition_error("find_covering: negative class count");
    if (inc + dec > n) throw domain_error("class counts exceed the height");
    if (inc + dec < n && m > counting_width_bound(n, inc, dec)) return std::nullopt;

    const auto reach = detail::reach_columns(n, inc, dec, m);
    if (reach.last_boundary < m) return std::nullopt;

    // walk the parent chain back from the smallest reachable final state
    std::int64_t state = -1;
    for (std::int64_t s = 0; s < reach.state_count; ++s)
        if (reach.parents[static_cast<std::size_t>(m)][static_cast<std::size_t>(s)] >= 0) {
            state = s;
            break;
        }
    const int tile_count = inc + dec;
    std::vector<std::vector<int>> values(static_cast<std::size_t>(tile_count),
                                         std::vector<int>(static_cast<std::size_t>(m) + 1));
    for (int b = m;; --b) {
        std::int64_t rem = state;
        for (int t = 0; t < tile_count; ++t) {
            values[static_cast<std::size_t>(t)][static_cast<std::size_t>(b)] =
                static_cast<int>(rem % n) + 1;
            rem /= n;
        }
        if (b == 0) break;
        state = reach.parents[static_cast<std::size_t>(b)][static_cast<std::size_t>(state)];
    }

    Covering c{{m, n}, {}};
    for (int t = 0; t < tile_count; ++t)
        c.tiles.push_back(Tile{t < inc ? Direction::increasing : Direction::decreasing, 0,
                               std::move(values[static_cast<std::size_t>(t)])});
    return c;
}

// Exact maximal coverable width for the given class counts: the deepest
// column the anchored search can reach, scanned up to the counting bound.
// Unbounded when inc + dec == n.
inline ExtNat max_width(int n, int inc, int dec) {
    if (n < 1) throw precondition_error("max_width requires n >= 1");
    if (inc < 0 || dec < 0) throw precondition_error("max_width: negative class count");
    if (inc + dec > n) throw domain_error("class counts exceed the height");
    if (inc + dec == n) return ExtNat::unbounded();
    const auto bound = static_cast<int>(counting_width_bound(n, inc, dec));
    return {detail::reach_columns(n, inc, dec, bound).last_boundary};
}

} // namespace oracle
} // namespace staircover
