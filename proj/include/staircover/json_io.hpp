#pragma once

#include <cstdint>
#include <initializer_list>
#include <limits>
#include <string>

#include <json.hpp>

#include "geometry.hpp"

namespace staircover {

inline nlohmann::json tile_to_json(const Tile& t) {
    return nlohmann::json{
        {"dir", to_cstring(t.direction)}, {"start", t.domain_start}, {"values", t.values}};
}

// Compact single-line JSON with the fixed schema
// {"m": int, "n": int, "tiles": [{"dir": "inc"|"dec", "start": int,
// "values": [int, ...]}, ...]}.
inline std::string covering_to_json(const Covering& c) {
    nlohmann::json j;
    j["m"] = c.dims.m;
    j["n"] = c.dims.n;
    j["tiles"] = nlohmann::json::array();
    for (const Tile& t : c.tiles) j["tiles"].push_back(tile_to_json(t));
    return j.dump();
}

namespace detail {

inline void require_keys(const nlohmann::json& obj, std::initializer_list<const char*> keys,
                         const std::string& where) {
    for (const char* k : keys)
        if (!obj.contains(k)) throw parse_error(where + ": missing field \"" + k + "\"");
    if (obj.size() == keys.size()) return;
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        bool known = false;
        for (const char* k : keys) known = known || it.key() == k;
        if (!known) throw parse_error(where + ": unknown field \"" + it.key() + "\"");
    }
}

inline int int_field(const nlohmann::json& obj, const char* key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_number_integer())
        throw parse_error(where + ": field \"" + key + "\" must be an integer");
    const auto wide = v.get<std::int64_t>();
    if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max())
        throw parse_error(where + ": field \"" + key + "\" out of range");
    return static_cast<int>(wide);
}

} // namespace detail

// Strict inverse of covering_to_json: unknown fields, non-integer numbers,
// non-monotone or out-of-range tiles are all rejected, naming the offending
// tile index.
inline Covering covering_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("invalid JSON: ") + e.what());
    }
    if (!j.is_object()) throw parse_error("covering: expected a JSON object");
    detail::require_keys(j, {"m", "n", "tiles"}, "covering");

    Covering c;
    c.dims.m = detail::int_field(j, "m", "covering");
    c.dims.n = detail::int_field(j, "n", "covering");
    if (c.dims.m < 0 || c.dims.n < 0) throw parse_error("covering: negative dimensions");
    const auto& tiles = j.at("tiles");
    if (!tiles.is_array()) throw parse_error("covering: field \"tiles\" must be an array");

    std::size_t idx = 0;
    for (const auto& jt : tiles) {
        const std::string where = "tile " + std::to_string(idx);
        if (!jt.is_object()) throw parse_error(where + ": expected an object");
        detail::require_keys(jt, {"dir", "start", "values"}, where);

        Tile t;
        const auto& dir = jt.at("dir");
        if (!dir.is_string() || (dir != "inc" && dir != "dec"))
            throw parse_error(where + ": field \"dir\" must be \"inc\" or \"dec\"");
        t.direction = dir == "inc" ? Direction::increasing : Direction::decreasing;
        t.domain_start = detail::int_field(jt, "start", where);
        const auto& values = jt.at("values");
        if (!values.is_array() || values.empty())
            throw parse_error(where + ": field \"values\" must be a non-empty array");
        for (const auto& v : values) {
            if (!v.is_number_integer()) throw parse_error(where + ": values must be integers");
            const auto wide = v.get<std::int64_t>();
            if (wide < std::numeric_limits<int>::min() || wide > std::numeric_limits<int>::max())
                throw parse_error(where + ": value out of range");
            t.values.push_back(static_cast<int>(wide));
        }
        try {
            validate_tile(t, c.dims);
        } catch (const error& e) {
            throw parse_error(where + ": " + e.what());
        }
        c.tiles.push_back(std::move(t));
        ++idx;
    }
    return c;
}

} // namespace staircover
