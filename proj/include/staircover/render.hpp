#pragma once

#include <string>
#include <utility>
#include <vector>

#include "geometry.hpp"

namespace staircover {

// Text picture of the covering, top row first. Each cell shows the 1-based
// index of the unique tile covering it, '*' when several tiles do, '.' when
// none. Fields widen and get space-separated once indices need two digits.
inline std::string ascii_render(const Covering& c) {
    std::vector<int> owner(static_cast<std::size_t>(c.dims.cell_count()), 0); // 0 free, -1 shared
    for (int idx = 1; idx <= static_cast<int>(c.tiles.size()); ++idx) {
        const CellSet cells = tile_cells(c.tiles[static_cast<std::size_t>(idx - 1)], c.dims);
        for (int row = 1; row <= c.dims.n; ++row)
            for (int col = 1; col <= c.dims.m; ++col)
                if (cells.contains(col, row)) {
                    int& o = owner[static_cast<std::size_t>(row - 1) * c.dims.m + (col - 1)];
                    o = o == 0 ? idx : -1;
                }
    }

    const int field = static_cast<int>(std::to_string(std::max<std::size_t>(c.tiles.size(), 1)).size());
    std::string out;
    for (int row = c.dims.n; row >= 1; --row) {
        for (int col = 1; col <= c.dims.m; ++col) {
            if (col > 1 && field > 1) out += ' ';
            const int o = owner[static_cast<std::size_t>(row - 1) * c.dims.m + (col - 1)];
            const std::string cell = o == 0 ? "." : o == -1 ? "*" : std::to_string(o);
            out.append(static_cast<std::size_t>(field) - cell.size(), ' ');
            out += cell;
        }
        out += '\n';
    }
    return out;
}

// Standalone SVG: the cell grid plus one rectilinear arc per tile running
// through the centres of its cells (horizontal, then vertical between
// consecutive columns). A one-point arc degenerates to a dot marker. All
// coordinates are integers, so the output is byte-deterministic.
inline std::string svg_render(const Covering& c) {
    constexpr int cell = 40;
    constexpr int margin = 20;
    const int w = c.dims.m * cell + 2 * margin;
    const int h = c.dims.n * cell + 2 * margin;

    const auto bx = [&](int boundary) { return margin + boundary * cell; };
    const auto cx = [&](int col) { return margin + col * cell - cell / 2; };
    const auto cy = [&](int row) { return margin + (c.dims.n - row) * cell + cell / 2; };

    static constexpr const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                              "#ff7f0e", "#8c564b", "#e377c2", "#17becf",
                                              "#bcbd22", "#7f7f7f"};
    constexpr int palette_size = 10;

    std::string s;
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + std::to_string(w) +
         "\" height=\"" + std::to_string(h) + "\" viewBox=\"0 0 " + std::to_string(w) + " " +
         std::to_string(h) + "\">\n";
    s += "<rect x=\"0\" y=\"0\" width=\"" + std::to_string(w) + "\" height=\"" +
         std::to_string(h) + "\" fill=\"#ffffff\"/>\n";
    for (int b = 0; b <= c.dims.m; ++b)
        s += "<line x1=\"" + std::to_string(bx(b)) + "\" y1=\"" + std::to_string(margin) +
             "\" x2=\"" + std::to_string(bx(b)) + "\" y2=\"" + std::to_string(h - margin) +
             "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    for (int r = 0; r <= c.dims.n; ++r)
        s += "<line x1=\"" + std::to_string(margin) + "\" y1=\"" +
             std::to_string(margin + r * cell) + "\" x2=\"" + std::to_string(w - margin) +
             "\" y2=\"" + std::to_string(margin + r * cell) +
             "\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";
    s += "<rect x=\"" + std::to_string(margin) + "\" y=\"" + std::to_string(margin) +
         "\" width=\"" + std::to_string(c.dims.m * cell) + "\" height=\"" +
         std::to_string(c.dims.n * cell) + "\" fill=\"none\" stroke=\"#333333\" stroke-width=\"2\"/>\n";

    for (int idx = 1; idx <= static_cast<int>(c.tiles.size()); ++idx) {
        const Tile& t = c.tiles[static_cast<std::size_t>(idx - 1)];
        validate_tile(t, c.dims);
        const char* color = palette[(idx - 1) % palette_size];

        std::vector<std::pair<int, int>> pts;
        if (t.column_count() == 0) {
            pts.emplace_back(bx(t.domain_start), cy(t.values.front()));
        } else {
            for (int col = t.first_column(); col <= t.last_column(); ++col) {
                const int a = t.values[static_cast<std::size_t>(col - 1 - t.domain_start)];
                const int b = t.values[static_cast<std::size_t>(col - t.domain_start)];
                const std::pair<int, int> enter{cx(col), cy(a)};
                const std::pair<int, int> leave{cx(col), cy(b)};
                if (pts.empty() || pts.back() != enter) pts.push_back(enter);
                if (pts.back() != leave) pts.push_back(leave);
            }
        }

        if (pts.size() == 1) {
            s += "<circle cx=\"" + std::to_string(pts[0].first) + "\" cy=\"" +
                 std::to_string(pts[0].second) + "\" r=\"6\" fill=\"" + color + "\"/>\n";
        } else {
            s += "<polyline points=\"";
            for (std::size_t i = 0; i < pts.size(); ++i) {
                if (i > 0) s += ' ';
                s += std::to_string(pts[i].first) + "," + std::to_string(pts[i].second);
            }
            s += "\" fill=\"none\" stroke=\"" + std::string(color) +
                 "\" stroke-width=\"5\" stroke-linecap=\"round\" stroke-linejoin=\"round\"/>\n";
        }
    }
    s += "</svg>\n";
    return s;
}

} // namespace staircover
