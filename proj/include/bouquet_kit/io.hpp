#pragma once

#include <cctype>
#include <fstream>
#include <istream>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

#include "bouquet_kit/errors.hpp"
#include "bouquet_kit/hypergraph.hpp"

namespace bouquet_kit {

namespace detail {

inline bool valid_label(const std::string& label) {
    if (label.empty()) return false;
    for (char ch : label)
        if (ch == '#' || std::isspace(static_cast<unsigned char>(ch))) return false;
    return true;
}

inline Hypergraph parse_text(const std::string& text, BuildMode mode) {
    std::vector<std::vector<std::string>> raw;
    std::vector<int> line_of;   // 1-based source line per raw edge
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        std::vector<std::string> edge;
        std::string token;
        while (tokens >> token) edge.push_back(token);
        if (edge.empty()) continue;
        raw.push_back(std::move(edge));
        line_of.push_back(line_no);
    }
    try {
        return build_hypergraph(raw, mode);
    } catch (const NotAntichainError& e) {
        fail(ErrorKind::not_antichain,
             "edges do not form an antichain: the edge at line " +
                 std::to_string(line_of[static_cast<size_t>(e.contained_pos)]) +
                 " is contained in the edge at line " +
                 std::to_string(line_of[static_cast<size_t>(e.container_pos)]));
    }
}

inline Hypergraph parse_json(const std::string& text, BuildMode mode) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        fail(ErrorKind::parse_error, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("edges") || !doc["edges"].is_array())
        fail(ErrorKind::parse_error, "JSON input must be an object with an \"edges\" array");
    std::vector<std::vector<std::string>> raw;
    for (const auto& entry : doc["edges"]) {
        if (!entry.is_array())
            fail(ErrorKind::parse_error,
                 "edge " + std::to_string(raw.size() + 1) + " is not an array of labels");
        std::vector<std::string> edge;
        for (const auto& item : entry) {
            if (!item.is_string())
                fail(ErrorKind::parse_error,
                     "edge " + std::to_string(raw.size() + 1) + " contains a non-string label");
            std::string label = item.get<std::string>();
            if (!valid_label(label))
                fail(ErrorKind::parse_error,
                     "label '" + label + "' is invalid (labels are nonempty, without whitespace or '#')");
            edge.push_back(std::move(label));
        }
        raw.push_back(std::move(edge));
    }
    try {
        return build_hypergraph(raw, mode);
    } catch (const NotAntichainError& e) {
        fail(ErrorKind::not_antichain,
             "edges do not form an antichain: edge " + std::to_string(e.contained_pos + 1) +
                 " is contained in edge " + std::to_string(e.container_pos + 1));
    }
}

} // namespace detail

/// Parses a hypergraph from either supported format, auto-detected: input
/// whose first non-whitespace character is '{' is JSON ({"edges": [[...]]}),
/// anything else is the text format (one edge per line, whitespace-separated
/// labels, '#' comments, blank lines ignored). Input with no edges parses to
/// the empty hypergraph.
inline Hypergraph parse_hypergraph(std::istream& in, BuildMode mode = BuildMode::strict) {
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    size_t first = text.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && text[first] == '{')
        return detail::parse_json(text, mode);
    return detail::parse_text(text, mode);
}

inline Hypergraph parse_hypergraph_file(const std::string& path, BuildMode mode = BuildMode::strict) {
    std::ifstream in(path);
    if (!in) fail(ErrorKind::parse_error, "cannot open '" + path + "'");
    return parse_hypergraph(in, mode);
}

/// Text format serialization: one edge per line, labels space-separated.
inline std::string to_text(const Hypergraph& h) {
    std::string out;
    for (const auto& edge : h.edge_labels()) {
        for (size_t i = 0; i < edge.size(); ++i) {
            if (i) out += ' ';
            out += edge[i];
        }
        out += '\n';
    }
    return out;
}

/// JSON input-format serialization: {"edges": [["a","b"], ...]}.
inline nlohmann::json to_input_json(const Hypergraph& h) {
    nlohmann::json edges = nlohmann::json::array();
    for (const auto& edge : h.edge_labels()) edges.push_back(edge);
    return nlohmann::json{{"edges", std::move(edges)}};
}

} // namespace bouquet_kit
