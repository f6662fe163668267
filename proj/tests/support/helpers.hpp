#pragma once

#include <set>
#include <string>
#include <vector>

#include "bouquet_kit/hypergraph.hpp"

namespace helpers {

using bouquet_kit::Hypergraph;
using bouquet_kit::VertexSet;

inline Hypergraph graph(std::vector<std::vector<std::string>> edges,
                        bouquet_kit::BuildMode mode = bouquet_kit::BuildMode::strict) {
    return bouquet_kit::build_hypergraph(edges, mode);
}

/// Fixtures used throughout: fig2 is two disjoint 3-paths, fig3 adds the
/// bridging edge {b,e} (alpha drops from 4 to 3).
inline Hypergraph fig2() { return graph({{"a", "b"}, {"b", "c"}, {"d", "e"}, {"e", "f"}}); }

inline Hypergraph fig3() {
    return graph({{"a", "b"}, {"b", "c"}, {"d", "e"}, {"e", "f"}, {"b", "e"}});
}

inline Hypergraph path3() { return graph({{"a", "b"}, {"b", "c"}}); }

inline Hypergraph triangle() { return graph({{"a", "b"}, {"b", "c"}, {"c", "a"}}); }

inline std::set<std::string> label_set(const Hypergraph& h, const VertexSet& s) {
    auto l = h.labels_of(s);
    return {l.begin(), l.end()};
}

inline std::vector<std::set<std::string>> label_sets(const Hypergraph& h,
                                                     const std::vector<VertexSet>& sets) {
    std::vector<std::set<std::string>> out;
    for (const auto& s : sets) out.push_back(label_set(h, s));
    return out;
}

} // namespace helpers
