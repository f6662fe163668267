#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <string>

#if __has_include(<nlohmann/json.hpp>)
#include <nlohmann/json.hpp>
#else
#include <json.hpp>
#endif

#include "bouquet_kit/bouquets.hpp"
#include "bouquet_kit/hypergraph.hpp"

namespace bouquet_kit {

inline std::uint64_t fnv1a64(std::string_view data) {
    std::uint64_t hash = 0xcbf29ce484222325ULL;
    for (unsigned char byte : data) {
        hash ^= byte;
        hash *= 0x100000001b3ULL;
    }
    return hash;
}

/// Canonical digest of a hypergraph: stable across runs and independent of
/// the input edge order (edges are hashed in canonical order).
inline std::string hypergraph_digest(const Hypergraph& h) {
    std::string canon = "n=" + std::to_string(h.vertex_count()) + ";";
    for (const auto& label : h.labels()) {
        canon += std::to_string(label.size());
        canon += ':';
        canon += label;
    }
    canon += ";";
    std::vector<VertexSet> edges = h.edges();
    std::sort(edges.begin(), edges.end(), canonical_less);
    for (const auto& e : edges) {
        canon += 'e';
        for (int v = e.first(); v >= 0; v = e.next(v)) {
            canon += std::to_string(v);
            canon += ',';
        }
    }
    char hex[17];
    std::snprintf(hex, sizeof hex, "%016llx",
                  static_cast<unsigned long long>(fnv1a64(canon)));
    return std::string("fnv1a:") + hex;
}

/// Machine-readable result of one CLI invocation.
struct AnalysisReport {
    int schema_version = 1;
    std::string command;
    std::string input_digest;
    std::string status = "ok";   // ok | size_guard | error
    std::string detail;          // nonempty for size_guard / error
    nlohmann::json results = nlohmann::json::object();
    nlohmann::json timings = nlohmann::json::object();

    nlohmann::json to_json() const {
        return nlohmann::json{
            {"schema_version", schema_version}, {"command", command},
            {"input_digest", input_digest},     {"status", status},
            {"detail", detail},                 {"results", results},
            {"timings", timings},
        };
    }

    static AnalysisReport from_json(const nlohmann::json& j) {
        AnalysisReport r;
        r.schema_version = j.at("schema_version").get<int>();
        r.command = j.at("command").get<std::string>();
        r.input_digest = j.at("input_digest").get<std::string>();
        r.status = j.at("status").get<std::string>();
        r.detail = j.value("detail", std::string{});
        r.results = j.value("results", nlohmann::json::object());
        r.timings = j.value("timings", nlohmann::json::object());
        return r;
    }

    bool operator==(const AnalysisReport&) const = default;
};

// --- JSON rendering of library results -------------------------------------

inline nlohmann::json labels_json(const Hypergraph& h, const VertexSet& s) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto& label : h.labels_of(s)) out.push_back(label);
    return out;
}

inline nlohmann::json bouquet_json(const Hypergraph& h, const Bouquet& b) {
    nlohmann::json edges = nlohmann::json::array();
    for (int e : b.edge_indices) {
        nlohmann::json edge = nlohmann::json::array();
        for (const auto& label : h.labels_of(h.edge(e))) edge.push_back(label);
        edges.push_back(std::move(edge));
    }
    nlohmann::json flowers = nlohmann::json::array();
    for (int v : b.flowers) flowers.push_back(h.label(v));
    nlohmann::json out{{"edges", std::move(edges)}, {"flowers", std::move(flowers)}};
    if (b.stem)
        out["stem"] = h.label(*b.stem);
    else
        out["stem"] = nullptr;
    return out;
}

inline nlohmann::json bouquet_set_json(const Hypergraph& h, const BouquetSet& s) {
    nlohmann::json bouquets = nlohmann::json::array();
    for (const auto& b : s.bouquets) bouquets.push_back(bouquet_json(h, b));
    return nlohmann::json{
        {"bouquets", std::move(bouquets)},
        {"flower_set", labels_json(h, flower_set(h, s))},
        {"edge_count", bouquet_edge_count(s)},
    };
}

} // namespace bouquet_kit
