#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "construct.hpp"
#include "formulas.hpp"
#include "geometry.hpp"
#include "json_io.hpp"
#include "oracle.hpp"
#include "render.hpp"

namespace staircover {

// Exit codes: 0 success/verified, 1 verification failed, 2 usage error,
// 3 infeasible request.
inline int run_cli(std::vector<std::string> args, std::istream& in, std::ostream& out,
                   std::ostream& err) {
    CLI::App app{"minimum coverings of lattice rectangles by monotone staircase polyominoes"};
    app.name("staircover");
    app.require_subcommand(1);
    int rc = 0;

    // p M N
    {
        auto* sub = app.add_subcommand("p", "minimum number of tiles covering an MxN rectangle");
        auto m = std::make_shared<std::int64_t>();
        auto n = std::make_shared<std::int64_t>();
        sub->add_option("M", *m, "width")->required();
        sub->add_option("N", *n, "height")->required();
        sub->callback([&out, m, n] { out << min_cover_count(*m, *n) << "\n"; });
    }

    // width N P
    {
        auto* sub = app.add_subcommand("width", "maximal width coverable by P tiles at height N");
        auto n = std::make_shared<std::int64_t>();
        auto p = std::make_shared<std::int64_t>();
        sub->add_option("N", *n, "height")->required();
        sub->add_option("P", *p, "tile count")->required();
        sub->callback([&out, n, p] { out << max_width(*n, *p).to_string() << "\n"; });
    }

    // width-id N I D
    {
        auto* sub = app.add_subcommand(
            "width-id", "maximal width coverable by I increasing and D decreasing tiles");
        auto n = std::make_shared<std::int64_t>();
        auto i = std::make_shared<std::int64_t>();
        auto d = std::make_shared<std::int64_t>();
        sub->add_option("N", *n, "height")->required();
        sub->add_option("I", *i, "increasing tiles")->required();
        sub->add_option("D", *d, "decreasing tiles")->required();
        sub->callback([&out, n, i, d] { out << max_width_split(*n, *i, *d).to_string() << "\n"; });
    }

    // cover M N [--split I D] [--format json|ascii|svg] [-o FILE]
    {
        auto* sub = app.add_subcommand("cover", "build a covering of an MxN rectangle");
        auto m = std::make_shared<int>();
        auto n = std::make_shared<int>();
        auto split = std::make_shared<std::vector<int>>();
        auto format = std::make_shared<std::string>("json");
        auto file = std::make_shared<std::string>();
        sub->add_option("M", *m, "width")->required();
        sub->add_option("N", *n, "height")->required();
        sub->add_option("--split", *split, "class counts I D")->expected(2);
        sub->add_option("--format", *format, "output format")
            ->check(CLI::IsMember({"json", "ascii", "svg"}));
        sub->add_option("-o,--output", *file, "write to FILE instead of stdout");
        sub->callback([&out, m, n, split, format, file] {
            const Covering c = split->empty()
                                   ? construct_min_covering(*m, *n)
                                   : construct_covering(*m, *n, (*split)[0], (*split)[1]);
            std::string text;
            if (*format == "json")
                text = covering_to_json(c) + "\n";
            else if (*format == "ascii")
                text = ascii_render(c);
            else
                text = svg_render(c);
            if (file->empty()) {
                out << text;
            } else {
                std::ofstream f(*file, std::ios::binary);
                if (!f) throw precondition_error("cannot open output file " + *file);
                f << text;
            }
        });
    }

    // verify [FILE] [--expect-min]
    {
        auto* sub = app.add_subcommand("verify", "check that a JSON covering covers its rectangle");
        auto file = std::make_shared<std::string>("-");
        auto expect_min = std::make_shared<bool>(false);
        sub->add_option("FILE", *file, "covering JSON, '-' for stdin");
        sub->add_flag("--expect-min", *expect_min, "also require a minimum-cardinality covering");
        sub->callback([&in, &out, &err, &rc, file, expect_min] {
            std::string text;
            if (*file == "-") {
                std::ostringstream buf;
                buf << in.rdbuf();
                text = buf.str();
            } else {
                std::ifstream f(*file, std::ios::binary);
                if (!f) throw precondition_error("cannot open input file " + *file);
                std::ostringstream buf;
                buf << f.rdbuf();
                text = buf.str();
            }
            Covering c;
            try {
                c = covering_from_json(text);
            } catch (const parse_error& e) {
                err << "not a covering: " << e.what() << "\n";
                rc = 1;
                return;
            }
            if (!is_covering(c)) {
                err << "verification failed: the tiles do not cover the rectangle\n";
                rc = 1;
                return;
            }
            if (*expect_min) {
                const auto p = min_cover_count(c.dims.m, c.dims.n);
                if (static_cast<std::int64_t>(c.tiles.size()) != p) {
                    err << "verification failed: " << c.tiles.size()
                        << " tiles used but the minimum is " << p << "\n";
                    rc = 1;
                    return;
                }
            }
            out << "ok: " << c.dims.m << "x" << c.dims.n << " covered by " << c.tiles.size()
                << " tiles\n";
        });
    }

    // oracle min | oracle width
    {
        auto* sub = app.add_subcommand("oracle", "exact searches on small boards");
        sub->require_subcommand(1);
        {
            auto* cmd = sub->add_subcommand("min", "exact minimum tile count by exhaustive search");
            auto m = std::make_shared<int>();
            auto n = std::make_shared<int>();
            auto dir = std::make_shared<std::string>();
            cmd->add_option("M", *m, "width")->required();
            cmd->add_option("N", *n, "height")->required();
            cmd->add_option("--dir", *dir, "restrict to one direction")
                ->check(CLI::IsMember({"inc", "dec"}));
            cmd->callback([&out, m, n, dir] {
                std::optional<Direction> filter;
                if (*dir == "inc") filter = Direction::increasing;
                if (*dir == "dec") filter = Direction::decreasing;
                out << oracle::min_cover(*m, *n, filter).count << "\n";
            });
        }
        {
            auto* cmd = sub->add_subcommand("width", "exact maximal width by exhaustive search");
            auto n = std::make_shared<int>();
            auto i = std::make_shared<int>();
            auto d = std::make_shared<int>();
            cmd->add_option("N", *n, "height")->required();
            cmd->add_option("I", *i, "increasing tiles")->required();
            cmd->add_option("D", *d, "decreasing tiles")->required();
            cmd->callback([&out, n, i, d] { out << oracle::max_width(*n, *i, *d).to_string() << "\n"; });
        }
    }

    // line SLOPE INTERCEPT X0 X1 M N
    {
        auto* sub = app.add_subcommand("line", "tile of cells met by a rational line segment");
        auto slope = std::make_shared<std::string>();
        auto intercept = std::make_shared<std::string>();
        auto x0 = std::make_shared<int>();
        auto x1 = std::make_shared<int>();
        auto m = std::make_shared<int>();
        auto n = std::make_shared<int>();
        sub->add_option("SLOPE", *slope, "rational a/b")->required();
        sub->add_option("INTERCEPT", *intercept, "rational a/b")->required();
        sub->add_option("X0", *x0, "left abscissa")->required();
        sub->add_option("X1", *x1, "right abscissa")->required();
        sub->add_option("M", *m, "width")->required();
        sub->add_option("N", *n, "height")->required();
        sub->callback([&out, slope, intercept, x0, x1, m, n] {
            Rational s{0};
            Rational c0{0};
            try {
                s = Rational::parse(*slope);
                c0 = Rational::parse(*intercept);
            } catch (const parse_error& e) {
                throw precondition_error(e.what());
            }
            const Tile t = tile_from_line(s, c0, *x0, *x1, {*m, *n});
            out << tile_to_json(t).dump() << "\n";
        });
    }

    // table PMAX [--csv]
    {
        auto* sub = app.add_subcommand("table", "minimum tile counts for all m, n up to PMAX");
        auto pmax = std::make_shared<std::int64_t>();
        auto csv = std::make_shared<bool>(false);
        sub->add_option("PMAX", *pmax, "largest side length")->required();
        sub->add_flag("--csv", *csv, "comma-separated output");
        sub->callback([&out, pmax, csv] {
            if (*pmax < 1) throw precondition_error("PMAX must be at least 1");
            for (std::int64_t n = 1; n <= *pmax; ++n) {
                for (std::int64_t m = 1; m <= *pmax; ++m) {
                    if (m > 1) out << (*csv ? "," : " ");
                    out << min_cover_count(m, n);
                }
                out << "\n";
            }
        });
    }

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    } catch (const infeasible_error& e) {
        err << "infeasible: " << e.what() << "\n";
        return 3;
    } catch (const error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 2;
    }
    return rc;
}

} // namespace staircover
