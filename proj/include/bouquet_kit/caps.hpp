#pragma once

#include <string>
#include <string_view>

#include "bouquet_kit/errors.hpp"

namespace bouquet_kit {

/// Size guards for the enumeration and homology cores. Minimal transversal
/// counts and Hochster scans grow exponentially, so operations refuse inputs
/// past these caps with ErrorKind::size_guard instead of running away.
struct Caps {
    int max_vertices = 30;              // cover enumeration
    long long max_covers = 1'000'000;   // emitted minimal covers
    int dprime_max_edges = 10;          // exhaustive d' search
    int dprime_max_vertices = 12;
    int homology_max_ground = 16;       // reduced homology ground set
    int pd_max_vertices = 14;           // Hochster scan runs 2^n restrictions
};

/// Parses an override string of the form "vertices=30,covers=1000000".
/// Recognized keys: vertices, covers, dprime_edges, dprime_vertices,
/// pd_vertices, homology_ground.
inline Caps parse_caps_override(std::string_view text, Caps base = {}) {
    Caps caps = base;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find(',', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view item = text.substr(pos, end - pos);
        pos = end + 1;
        if (item.empty()) continue;
        size_t eq = item.find('=');
        if (eq == std::string_view::npos)
            fail(ErrorKind::bad_params, "caps override item '" + std::string(item) + "' is not key=value");
        std::string key(item.substr(0, eq));
        std::string value(item.substr(eq + 1));
        long long parsed = 0;
        try {
            size_t used = 0;
            parsed = std::stoll(value, &used);
            if (used != value.size()) throw std::invalid_argument(value);
        } catch (const std::exception&) {
            fail(ErrorKind::bad_params, "caps override value '" + value + "' for '" + key + "' is not an integer");
        }
        if (parsed < 0)
            fail(ErrorKind::bad_params, "caps override '" + key + "' must be nonnegative");
        if (key == "vertices") caps.max_vertices = static_cast<int>(parsed);
        else if (key == "covers") caps.max_covers = parsed;
        else if (key == "dprime_edges") caps.dprime_max_edges = static_cast<int>(parsed);
        else if (key == "dprime_vertices") caps.dprime_max_vertices = static_cast<int>(parsed);
        else if (key == "pd_vertices") caps.pd_max_vertices = static_cast<int>(parsed);
        else if (key == "homology_ground") caps.homology_max_ground = static_cast<int>(parsed);
        else fail(ErrorKind::bad_params, "unknown caps override key '" + key + "'");
    }
    return caps;
}

} // namespace bouquet_kit
