#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "errors.hpp"
#include "rational.hpp"

namespace staircover {

// Width m (number of columns) and height n (number of rows) of a lattice
// rectangle. Cells are 1-based: S(k,l) is the unit square in column k, row l.
// The rectangle is empty iff min(m,n) == 0.
struct RectDims {
    int m = 0;
    int n = 0;

    bool empty() const { return m <= 0 || n <= 0; }
    std::int64_t cell_count() const { return empty() ? 0 : std::int64_t{1} * m * n; }

    friend bool operator==(const RectDims&, const RectDims&) = default;
};

enum class Direction { increasing, decreasing };

inline Direction opposite(Direction d) {
    return d == Direction::increasing ? Direction::decreasing : Direction::increasing;
}

inline const char* to_cstring(Direction d) {
    return d == Direction::increasing ? "inc" : "dec";
}

// A monotone staircase polyomino stored as its boundary-value function:
// values[j] is the row assigned to column boundary domain_start + j, and
// column c of the tile covers the rows between the values at boundaries c-1
// and c. The values are weakly monotone in the tagged direction; a constant
// tile is valid under either tag. A tile with a single value spans no column
// and covers no cell.
struct Tile {
    Direction direction = Direction::increasing;
    int domain_start = 0;
    std::vector<int> values;

    int domain_end() const { return domain_start + static_cast<int>(values.size()) - 1; }
    int first_column() const { return domain_start + 1; }
    int last_column() const { return domain_end(); }
    int column_count() const { return static_cast<int>(values.size()) - 1; }

    bool full_domain(int m) const { return domain_start == 0 && domain_end() == m; }

    bool is_monotone() const {
        for (std::size_t j = 1; j < values.size(); ++j) {
            const bool ok = direction == Direction::increasing ? values[j] >= values[j - 1]
                                                               : values[j] <= values[j - 1];
            if (!ok) return false;
        }
        return true;
    }

    friend bool operator==(const Tile&, const Tile&) = default;
};

// Constant tile at `row`, fully defined on the boundaries 0..m.
inline Tile constant_tile(Direction dir, int row, int m) {
    return Tile{dir, 0, std::vector<int>(static_cast<std::size_t>(m) + 1, row)};
}

// Throws unless t is a structurally valid tile lying inside dims.
inline void validate_tile(const Tile& t, RectDims dims) {
    if (t.values.empty()) throw precondition_error("tile has no boundary values");
    if (!t.is_monotone())
        throw precondition_error("tile values are not monotone in the tagged direction");
    if (t.domain_start < 0 || t.domain_end() > dims.m)
        throw dimension_error("tile domain [" + std::to_string(t.domain_start) + ", " +
                              std::to_string(t.domain_end()) + "] does not fit in width " +
                              std::to_string(dims.m));
    for (int v : t.values)
        if (v < 1 || v > dims.n)
            throw dimension_error("tile value " + std::to_string(v) + " outside rows 1.." +
                                  std::to_string(dims.n));
}

// Per-cell membership over an m x n rectangle. Queries outside the grid are
// errors, not false.
class CellSet {
public:
    explicit CellSet(RectDims dims) : dims_(dims) {
        if (dims.m < 0 || dims.n < 0) throw dimension_error("negative rectangle dimensions");
        bits_.assign(static_cast<std::size_t>(dims.cell_count()), 0);
    }

    RectDims dims() const { return dims_; }

    bool contains(int col, int row) const { return bits_[index(col, row)] != 0; }
    void insert(int col, int row) { bits_[index(col, row)] = 1; }

    int count() const {
        int c = 0;
        for (auto b : bits_) c += b;
        return c;
    }

    bool full() const {
        return std::all_of(bits_.begin(), bits_.end(), [](std::uint8_t b) { return b != 0; });
    }

    bool includes(const CellSet& other) const {
        require_same_dims(other);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (other.bits_[i] && !bits_[i]) return false;
        return true;
    }

    bool intersects(const CellSet& other) const {
        require_same_dims(other);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (other.bits_[i] && bits_[i]) return true;
        return false;
    }

    void insert_all(const CellSet& other) {
        require_same_dims(other);
        for (std::size_t i = 0; i < bits_.size(); ++i)
            if (other.bits_[i]) bits_[i] = 1;
    }

    friend bool operator==(const CellSet&, const CellSet&) = default;

private:
    std::size_t index(int col, int row) const {
        if (col < 1 || col > dims_.m || row < 1 || row > dims_.n)
            throw dimension_error("cell (" + std::to_string(col) + ", " + std::to_string(row) +
                                  ") outside the " + std::to_string(dims_.m) + "x" +
                                  std::to_string(dims_.n) + " rectangle");
        return static_cast<std::size_t>(row - 1) * dims_.m + static_cast<std::size_t>(col - 1);
    }

    void require_same_dims(const CellSet& other) const {
        if (!(dims_ == other.dims_)) throw dimension_error("cell sets over different rectangles");
    }

    RectDims dims_;
    std::vector<std::uint8_t> bits_;
};

// A rectangle together with the tiles that are claimed to cover it.
struct Covering {
    RectDims dims;
    std::vector<Tile> tiles;

    int increasing_count() const {
        return static_cast<int>(std::count_if(tiles.begin(), tiles.end(), [](const Tile& t) {
            return t.direction == Direction::increasing;
        }));
    }
    int decreasing_count() const { return static_cast<int>(tiles.size()) - increasing_count(); }
};

// The set of cells occupied by t inside dims: in each column of the tile's
// domain, the rows between the two adjacent boundary values.
inline CellSet tile_cells(const Tile& t, RectDims dims) {
    validate_tile(t, dims);
    CellSet cells(dims);
    for (int c = t.first_column(); c <= t.last_column(); ++c) {
        const int a = t.values[static_cast<std::size_t>(c - 1 - t.domain_start)];
        const int b = t.values[static_cast<std::size_t>(c - t.domain_start)];
        for (int row = std::min(a, b); row <= std::max(a, b); ++row) cells.insert(c, row);
    }
    return cells;
}

// Number of cells of t, via the closed per-column count: the columns
// telescope to column_count + |last - first| for a monotone tile.
inline int tile_size(const Tile& t) {
    if (t.values.empty()) throw precondition_error("tile has no boundary values");
    if (!t.is_monotone())
        throw precondition_error("tile values are not monotone in the tagged direction");
    if (t.column_count() == 0) return 0;
    return t.column_count() + std::abs(t.values.back() - t.values.front());
}

inline CellSet covering_cells(const Covering& c) {
    CellSet cells(c.dims);
    for (const Tile& t : c.tiles) cells.insert_all(tile_cells(t, c.dims));
    return cells;
}

// True iff the tiles cover every cell of the rectangle. Vacuously true on an
// empty rectangle.
inline bool is_covering(const Covering& c) {
    return covering_cells(c).full();
}

// The tile made of the cells met by the segment y = slope*x + intercept for
// x in [x0, x1]. The segment must avoid integer values at integer abscissae
// and stay strictly between 0 and n; its boundary values are then the
// ceilings of the line at the integer abscissae.
inline Tile tile_from_line(const Rational& slope, const Rational& intercept, int x0, int x1,
                           RectDims dims) {
    if (x0 >= x1) throw precondition_error("line domain must satisfy x0 < x1");
    if (x0 < 0 || x1 > dims.m)
        throw dimension_error("line domain [" + std::to_string(x0) + ", " + std::to_string(x1) +
                              "] outside column boundaries 0.." + std::to_string(dims.m));
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(x1 - x0) + 1);
    for (int k = x0; k <= x1; ++k) {
        const Rational y = slope * Rational(k) + intercept;
        if (y.is_integer())
            throw degenerate_line_error("line passes through an integer value at x = " +
                                        std::to_string(k));
        if (y < Rational(0) || y > Rational(dims.n))
            throw dimension_error("line exits the rectangle at x = " + std::to_string(k));
        values.push_back(static_cast<int>(y.ceil()));
    }
    const Direction dir = slope >= Rational(0) ? Direction::increasing : Direction::decreasing;
    Tile t{dir, x0, std::move(values)};
    validate_tile(t, dims);
    return t;
}

// Extends t constantly to the left and to the right so it is defined on all
// boundaries 0..m. Never removes cells.
inline Tile extend_to_full_domain(const Tile& t, int m) {
    if (t.values.empty()) throw precondition_error("tile has no boundary values");
    if (t.domain_start < 0 || t.domain_end() > m)
        throw dimension_error("tile does not fit in width " + std::to_string(m));
    std::vector<int> values;
    values.reserve(static_cast<std::size_t>(m) + 1);
    values.insert(values.end(), static_cast<std::size_t>(t.domain_start), t.values.front());
    values.insert(values.end(), t.values.begin(), t.values.end());
    values.insert(values.end(), static_cast<std::size_t>(m - t.domain_end()), t.values.back());
    return Tile{t.direction, 0, std::move(values)};
}

// Restricts a covering made of full-domain tiles to its leftmost w columns.
// Surviving columns are untouched, so a covering stays a covering.
inline Covering trim_covering(const Covering& c, int w) {
    if (w < 0 || w > c.dims.m)
        throw dimension_error("trim width " + std::to_string(w) + " outside 0.." +
                              std::to_string(c.dims.m));
    Covering out{{w, c.dims.n}, {}};
    out.tiles.reserve(c.tiles.size());
    for (std::size_t i = 0; i < c.tiles.size(); ++i) {
        const Tile& t = c.tiles[i];
        if (!t.full_domain(c.dims.m))
            throw precondition_error("trim requires full-domain tiles (tile " + std::to_string(i) +
                                     " is not)");
        out.tiles.push_back(
            Tile{t.direction, 0, std::vector<int>(t.values.begin(), t.values.begin() + w + 1)});
    }
    return out;
}

// Rebuilds the boundary-value form of a staircase from its cell set. The
// cells must occupy a contiguous column range, a contiguous row interval per
// column, and adjacent columns must share a boundary row.
inline Tile tile_from_cells(const CellSet& cells, Direction dir) {
    const RectDims dims = cells.dims();
    int first = 0;
    int last = -1;
    std::vector<std::pair<int, int>> span; // (lowest, highest) row per covered column
    for (int col = 1; col <= dims.m; ++col) {
        int lo = 0;
        int hi = 0;
        for (int row = 1; row <= dims.n; ++row) {
            if (!cells.contains(col, row)) continue;
            if (lo == 0) lo = row;
            if (hi != 0 && row != hi + 1)
                throw precondition_error("cells of a column are not contiguous");
            hi = row;
        }
        if (lo == 0) continue;
        if (first == 0)
            first = col;
        else if (col != last + 1)
            throw precondition_error("covered columns are not contiguous");
        last = col;
        span.emplace_back(lo, hi);
    }
    if (first == 0) throw precondition_error("cannot rebuild a tile from an empty cell set");

    std::vector<int> values;
    values.reserve(span.size() + 1);
    if (dir == Direction::increasing) {
        values.push_back(span.front().first);
        for (std::size_t j = 0; j < span.size(); ++j) {
            if (j > 0 && span[j].first != span[j - 1].second)
                throw precondition_error("cells do not form an increasing staircase");
            values.push_back(span[j].second);
        }
    } else {
        values.push_back(span.front().second);
        for (std::size_t j = 0; j < span.size(); ++j) {
            if (j > 0 && span[j].second != span[j - 1].first)
                throw precondition_error("cells do not form a decreasing staircase");
            values.push_back(span[j].first);
        }
    }
    return Tile{dir, first - 1, std::move(values)};
}

// Reflects the covering across the line y = -x (up to translation): the
// dimensions m x n become n x m and cell S(x,y) maps to S(n+1-y, m+1-x).
// Both tile directions are preserved by this map.
inline Covering reflect_covering(const Covering& c) {
    if (c.dims.empty()) return Covering{{c.dims.n, c.dims.m}, {}};
    const RectDims out_dims{c.dims.n, c.dims.m};
    Covering out{out_dims, {}};
    out.tiles.reserve(c.tiles.size());
    for (const Tile& t : c.tiles) {
        const CellSet src = tile_cells(t, c.dims);
        CellSet dst(out_dims);
        for (int x = 1; x <= c.dims.m; ++x)
            for (int y = 1; y <= c.dims.n; ++y)
                if (src.contains(x, y)) dst.insert(c.dims.n + 1 - y, c.dims.m + 1 - x);
        out.tiles.push_back(tile_from_cells(dst, t.direction));
    }
    return out;
}

// Vertical flip of one tile inside height n: rows map to n+1-row and the
// monotony direction swaps.
inline Tile mirror_tile(const Tile& t, int n) {
    Tile out{opposite(t.direction), t.domain_start, t.values};
    for (int& v : out.values) v = n + 1 - v;
    return out;
}

// Flips the covering upside down; an (i,d)-covering becomes a (d,i)-covering
// over the same rectangle.
inline Covering mirror_covering(const Covering& c) {
    Covering out{c.dims, {}};
    out.tiles.reserve(c.tiles.size());
    for (const Tile& t : c.tiles) out.tiles.push_back(mirror_tile(t, c.dims.n));
    return out;
}

} // namespace staircover
