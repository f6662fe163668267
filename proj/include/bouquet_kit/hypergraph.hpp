#pragma once

#include <algorithm>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "bouquet_kit/errors.hpp"
#include "bouquet_kit/vertex_set.hpp"

namespace bouquet_kit {

/// How build_hypergraph treats an edge contained in another edge:
/// `strict` rejects with NotAntichain, `minimalize` drops the containing
/// (non-minimal) edge and then drops any vertex left without an edge.
enum class BuildMode { strict, minimalize };

struct Vertex {
    std::string label;
    int index = 0;
};

/// A simple hypergraph: a frozen vertex universe (labels indexed 0..n-1 by
/// first appearance) and an antichain of nonempty edges whose union is the
/// whole universe. The default-constructed value is the empty hypergraph.
/// Instances are immutable after construction.
class Hypergraph {
public:
    Hypergraph() = default;

    int vertex_count() const { return static_cast<int>(labels_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    const std::vector<std::string>& labels() const { return labels_; }

    const std::string& label(int v) const {
        if (v < 0 || v >= vertex_count())
            fail(ErrorKind::unknown_vertex, "vertex index " + std::to_string(v) + " out of range");
        return labels_[static_cast<size_t>(v)];
    }

    Vertex vertex(int v) const { return {label(v), v}; }

    int index_of(std::string_view label) const {
        auto it = index_.find(std::string(label));
        if (it == index_.end())
            fail(ErrorKind::unknown_vertex, "unknown vertex label '" + std::string(label) + "'");
        return it->second;
    }

    bool has_vertex(std::string_view label) const {
        return index_.contains(std::string(label));
    }

    const VertexSet& edge(int e) const {
        if (e < 0 || e >= edge_count())
            fail(ErrorKind::bad_edge_index, "edge index " + std::to_string(e) + " out of range");
        return edges_[static_cast<size_t>(e)];
    }

    const std::vector<VertexSet>& edges() const { return edges_; }

    VertexSet all_vertices() const {
        VertexSet s(vertex_count());
        for (int v = 0; v < vertex_count(); ++v) s.add(v);
        return s;
    }

    VertexSet empty_set() const { return VertexSet(vertex_count()); }

    /// Translates labels to a vertex set; unknown labels raise UnknownVertex.
    VertexSet vertex_set(std::span<const std::string> labels) const {
        VertexSet s(vertex_count());
        for (const auto& l : labels) s.add(index_of(l));
        return s;
    }

    VertexSet vertex_set(std::initializer_list<std::string> labels) const {
        return vertex_set(std::span<const std::string>(labels.begin(), labels.size()));
    }

    std::vector<std::string> labels_of(const VertexSet& s) const {
        std::vector<std::string> out;
        for (int v = s.first(); v >= 0; v = s.next(v)) out.push_back(label(v));
        return out;
    }

    std::vector<std::vector<std::string>> edge_labels() const {
        std::vector<std::vector<std::string>> out;
        out.reserve(edges_.size());
        for (const auto& e : edges_) out.push_back(labels_of(e));
        return out;
    }

    bool operator==(const Hypergraph& o) const {
        return labels_ == o.labels_ && edges_ == o.edges_;
    }

private:
    friend Hypergraph build_hypergraph(const std::vector<std::vector<std::string>>&, BuildMode);

    std::vector<std::string> labels_;
    std::unordered_map<std::string, int> index_;
    std::vector<VertexSet> edges_;
};

/// Builds a hypergraph from raw label sets. Duplicate edges collapse (first
/// occurrence kept, order preserved); vertex indices follow first appearance.
/// Containments raise NotAntichain in strict mode and drop the non-minimal
/// edge in minimalize mode. An empty input yields the empty hypergraph.
inline Hypergraph build_hypergraph(const std::vector<std::vector<std::string>>& raw_edges,
                                   BuildMode mode = BuildMode::strict) {
    // Provisional indexing over the full input.
    std::unordered_map<std::string, int> pre_index;
    std::vector<std::string> pre_labels;
    std::vector<std::vector<int>> members;
    members.reserve(raw_edges.size());
    for (size_t pos = 0; pos < raw_edges.size(); ++pos) {
        const auto& raw = raw_edges[pos];
        if (raw.empty())
            fail(ErrorKind::empty_edge, "edge " + std::to_string(pos + 1) + " is empty");
        std::vector<int> m;
        for (const auto& label : raw) {
            auto [it, inserted] = pre_index.try_emplace(label, static_cast<int>(pre_labels.size()));
            if (inserted) pre_labels.push_back(label);
            m.push_back(it->second);
        }
        std::sort(m.begin(), m.end());
        m.erase(std::unique(m.begin(), m.end()), m.end());
        members.push_back(std::move(m));
    }

    // Collapse duplicates, keeping first occurrences in order.
    std::vector<size_t> kept;
    for (size_t pos = 0; pos < members.size(); ++pos) {
        bool dup = false;
        for (size_t k : kept)
            if (members[k] == members[pos]) { dup = true; break; }
        if (!dup) kept.push_back(pos);
    }

    auto contains = [&](size_t big, size_t small) {
        return std::includes(members[big].begin(), members[big].end(),
                             members[small].begin(), members[small].end());
    };

    if (mode == BuildMode::strict) {
        for (size_t i = 0; i < kept.size(); ++i) {
            for (size_t j = i + 1; j < kept.size(); ++j) {
                size_t a = kept[i], b = kept[j];
                size_t small = members[a].size() <= members[b].size() ? a : b;
                size_t big = small == a ? b : a;
                if (contains(big, small)) {
                    std::string msg = "edges do not form an antichain: edge " +
                                      std::to_string(small + 1) + " is contained in edge " +
                                      std::to_string(big + 1);
                    throw NotAntichainError(msg, static_cast<int>(small), static_cast<int>(big));
                }
            }
        }
    } else {
        std::vector<size_t> minimal;
        for (size_t a : kept) {
            bool has_subedge = false;
            for (size_t b : kept) {
                if (a == b) continue;
                if (members[a].size() > members[b].size() && contains(a, b)) {
                    has_subedge = true;
                    break;
                }
            }
            if (!has_subedge) minimal.push_back(a);
        }
        kept = std::move(minimal);
    }

    // Freeze: reindex by first appearance over the kept edges, scanning
    // members in the order the caller wrote them.
    Hypergraph h;
    std::vector<int> remap(pre_labels.size(), -1);
    for (size_t pos : kept) {
        for (const auto& label : raw_edges[pos]) {
            int old = pre_index.at(label);
            auto& slot = remap[static_cast<size_t>(old)];
            if (slot < 0) {
                slot = static_cast<int>(h.labels_.size());
                h.labels_.push_back(label);
            }
        }
    }
    for (size_t v = 0; v < h.labels_.size(); ++v)
        h.index_.emplace(h.labels_[v], static_cast<int>(v));
    const int n = static_cast<int>(h.labels_.size());
    for (size_t pos : kept) {
        VertexSet e(n);
        for (int old : members[pos]) e.add(remap[static_cast<size_t>(old)]);
        h.edges_.push_back(std::move(e));
    }
    return h;
}

/// H|_A: the partial hypergraph on a vertex set. Keeps exactly the edges
/// contained in A; the result's vertex set is their union, which may be a
/// proper subset of A. Empty hypergraph when no edge fits.
inline Hypergraph partial_on_vertices(const Hypergraph& h, const VertexSet& a) {
    std::vector<std::vector<std::string>> kept;
    for (const auto& e : h.edges())
        if (e.subset_of(a)) kept.push_back(h.labels_of(e));
    return build_hypergraph(kept);
}

inline Hypergraph partial_on_vertices(const Hypergraph& h, std::span<const std::string> labels) {
    return partial_on_vertices(h, h.vertex_set(labels));
}

/// Partial hypergraph with the selected edges; indices are deduplicated and
/// taken in ascending order. J = {} yields the empty hypergraph.
inline Hypergraph partial_by_edges(const Hypergraph& h, std::vector<int> edge_indices) {
    std::sort(edge_indices.begin(), edge_indices.end());
    edge_indices.erase(std::unique(edge_indices.begin(), edge_indices.end()), edge_indices.end());
    std::vector<std::vector<std::string>> kept;
    for (int e : edge_indices) kept.push_back(h.labels_of(h.edge(e)));
    return build_hypergraph(kept);
}

/// True iff no edge of H is contained in A, i.e. H|_A has no edges.
/// Vacuously true on the empty hypergraph.
inline bool is_independent(const Hypergraph& h, const VertexSet& a) {
    for (const auto& e : h.edges())
        if (e.subset_of(a)) return false;
    return true;
}

inline bool is_independent(const Hypergraph& h, std::span<const std::string> labels) {
    return is_independent(h, h.vertex_set(labels));
}

} // namespace bouquet_kit
