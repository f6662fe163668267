#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <span>
#include <utility>
#include <vector>

#include "bouquet_kit/caps.hpp"
#include "bouquet_kit/errors.hpp"
#include "bouquet_kit/hypergraph.hpp"

namespace bouquet_kit {

/// A vertex set asserted to be a minimal vertex cover; its cardinality is
/// the height of the corresponding minimal prime of the edge ideal.
struct CoverCertificate {
    VertexSet cover;
    int cardinality = 0;
    bool minimal = true;

    bool operator==(const CoverCertificate&) const = default;
};

inline CoverCertificate make_cover_certificate(VertexSet cover) {
    int card = cover.count();
    return CoverCertificate{std::move(cover), card, true};
}

/// True iff every edge of H meets C. The empty hypergraph is covered by the
/// empty set.
inline bool is_vertex_cover(const Hypergraph& h, const VertexSet& c) {
    for (const auto& e : h.edges())
        if (!e.intersects(c)) return false;
    return true;
}

inline bool is_vertex_cover(const Hypergraph& h, std::span<const std::string> labels) {
    return is_vertex_cover(h, h.vertex_set(labels));
}

/// Private-witness test: an edge whose only cover element is v.
inline bool has_private_witness(const Hypergraph& h, const VertexSet& c, int v) {
    for (const auto& e : h.edges())
        if (e.contains(v) && e.intersection_count(c) == 1) return true;
    return false;
}

/// Minimality via private witnesses: C covers and every v in C has an edge E
/// with E ∩ C = {v}. Equivalent to "no proper subset covers" and linear in
/// |C| · |E(H)|. On the empty hypergraph only the empty set is minimal.
inline bool is_minimal_vertex_cover(const Hypergraph& h, const VertexSet& c) {
    if (!is_vertex_cover(h, c)) return false;
    for (int v = c.first(); v >= 0; v = c.next(v))
        if (!has_private_witness(h, c, v)) return false;
    return true;
}

inline bool is_minimal_vertex_cover(const Hypergraph& h, std::span<const std::string> labels) {
    return is_minimal_vertex_cover(h, h.vertex_set(labels));
}

namespace detail {

/// Branch-and-reduce enumeration of minimal vertex covers. Branches on the
/// lexicographically first uncovered edge; within an edge, the branch for
/// vertex v forbids the vertices before v, which makes the leaves pairwise
/// distinct. A branch dies as soon as some chosen vertex has no private
/// witness left, so every emitted set is already minimal. Emission order is
/// DFS order, not canonical order.
template <typename Sink>
void for_each_minimal_cover(const Hypergraph& h, const Caps& caps, Sink&& sink) {
    if (h.vertex_count() > caps.max_vertices)
        fail(ErrorKind::size_guard,
             "cover enumeration capped at " + std::to_string(caps.max_vertices) +
                 " vertices, got " + std::to_string(h.vertex_count()));

    std::vector<int> edge_order(static_cast<size_t>(h.edge_count()));
    std::iota(edge_order.begin(), edge_order.end(), 0);
    std::sort(edge_order.begin(), edge_order.end(),
              [&](int a, int b) { return h.edge(a).lex_less(h.edge(b)); });

    long long emitted = 0;
    VertexSet cover(h.vertex_count());

    auto all_private = [&](const VertexSet& c) {
        for (int v = c.first(); v >= 0; v = c.next(v))
            if (!has_private_witness(h, c, v)) return false;
        return true;
    };

    std::function<void(const VertexSet&)> recurse = [&](const VertexSet& forbidden) {
        int uncovered = -1;
        for (int e : edge_order) {
            if (!h.edge(e).intersects(cover)) {
                uncovered = e;
                break;
            }
        }
        if (uncovered < 0) {
            if (++emitted > caps.max_covers)
                fail(ErrorKind::size_guard,
                     "more than " + std::to_string(caps.max_covers) + " minimal covers");
            sink(std::as_const(cover));
            return;
        }
        const VertexSet& e = h.edge(uncovered);
        VertexSet branch_forbidden = forbidden;
        for (int v = e.first(); v >= 0; v = e.next(v)) {
            if (!forbidden.contains(v)) {
                cover.add(v);
                if (all_private(cover)) recurse(branch_forbidden);
                cover.remove(v);
            }
            branch_forbidden.add(v);
        }
    };

    recurse(VertexSet(h.vertex_count()));
}

/// Indices of the edges of H contained in U, i.e. the edges of H|_U kept in
/// H's own indexing.
inline std::vector<int> edges_within(const Hypergraph& h, const VertexSet& u) {
    std::vector<int> out;
    for (int e = 0; e < h.edge_count(); ++e)
        if (h.edge(e).subset_of(u)) out.push_back(e);
    return out;
}

} // namespace detail

/// All minimal vertex covers, each exactly once, in canonical order
/// (cardinality, then lexicographic on sorted indices). The empty hypergraph
/// has the single empty cover.
inline std::vector<CoverCertificate> enumerate_minimal_covers(const Hypergraph& h,
                                                              const Caps& caps = {}) {
    std::vector<VertexSet> found;
    detail::for_each_minimal_cover(h, caps, [&](const VertexSet& c) { found.push_back(c); });
    std::sort(found.begin(), found.end(), canonical_less);
    std::vector<CoverCertificate> out;
    out.reserve(found.size());
    for (auto& c : found) {
        assert(is_minimal_vertex_cover(h, c));
        out.push_back(make_cover_certificate(std::move(c)));
    }
    return out;
}

struct AlphaResult {
    int value = 0;
    CoverCertificate witness;
};

/// α₀'(H): the maximum cardinality of a minimal vertex cover, with the
/// canonically first witness achieving it. Equals the big height of the edge
/// ideal I(H). 0 with the empty witness for the empty hypergraph.
inline AlphaResult alpha0_prime(const Hypergraph& h, const Caps& caps = {}) {
    VertexSet best(h.vertex_count());
    bool have = false;
    detail::for_each_minimal_cover(h, caps, [&](const VertexSet& c) {
        if (!have || c.count() > best.count() ||
            (c.count() == best.count() && c.lex_less(best))) {
            best = c;
            have = true;
        }
    });
    internal_check(have, "cover enumeration emitted nothing");
    return AlphaResult{best.count(), make_cover_certificate(std::move(best))};
}

/// Extends a minimal vertex cover C of K = H|_U to a minimal vertex cover of
/// H: starts from (V(H) \ V(K)) ∪ C and removes redundant vertices in
/// ascending index order. The removed vertices are necessarily outside C, so
/// the result C' satisfies C' ⊇ C and C' \ (V(H) \ V(K)) = C. When H|_U has
/// no edges the only valid C is empty and any minimal cover of H comes back.
inline CoverCertificate extend_cover(const Hypergraph& h, const VertexSet& u, const VertexSet& c) {
    std::vector<int> k_edges = detail::edges_within(h, u);
    VertexSet vk(h.vertex_count());
    for (int e : k_edges) vk |= h.edge(e);

    // Precondition: C is a minimal vertex cover of K.
    if (!c.subset_of(vk))
        fail(ErrorKind::not_minimal_cover, "cover is not contained in the vertex set of H|_U");
    for (int e : k_edges)
        if (!h.edge(e).intersects(c))
            fail(ErrorKind::not_minimal_cover, "given set does not cover H|_U");
    for (int v = c.first(); v >= 0; v = c.next(v)) {
        bool priv = false;
        for (int e : k_edges)
            if (h.edge(e).contains(v) && h.edge(e).intersection_count(c) == 1) {
                priv = true;
                break;
            }
        if (!priv)
            fail(ErrorKind::not_minimal_cover,
                 "given cover of H|_U is not minimal: '" + h.label(v) + "' is redundant");
    }

    VertexSet candidate = (h.all_vertices() - vk) | c;
    for (int v = candidate.first(); v >= 0; v = candidate.next(v)) {
        bool needed = false;
        for (const auto& e : h.edges())
            if (e.contains(v) && e.intersection_count(candidate) == 1) {
                needed = true;
                break;
            }
        if (!needed) candidate.remove(v);
    }

    internal_check(c.subset_of(candidate), "extend_cover lost part of C");
    internal_check(is_minimal_vertex_cover(h, candidate), "extend_cover result not minimal");
    internal_check((candidate & vk) == c, "extend_cover removed inside V(K)");
    return make_cover_certificate(std::move(candidate));
}

inline CoverCertificate extend_cover(const Hypergraph& h, std::span<const std::string> u,
                                     std::span<const std::string> c) {
    return extend_cover(h, h.vertex_set(u), h.vertex_set(c));
}

} // namespace bouquet_kit
