#pragma once

#include <optional>
#include <string>
#include <vector>

#include "bouquet_kit/covers.hpp"
#include "bouquet_kit/hypergraph.hpp"

namespace bouquet_kit {

/// A bouquet of a host hypergraph: a set of its edges with a nonempty common
/// intersection and one designated flower per edge, each flower lying in its
/// own edge only. The stem is a recorded common vertex on constructed
/// bouquets; user-supplied bouquets may omit it.
struct Bouquet {
    std::vector<int> edge_indices;
    std::vector<int> flowers;   // parallel to edge_indices
    std::optional<int> stem;

    bool operator==(const Bouquet&) const = default;
};

struct BouquetSet {
    std::vector<Bouquet> bouquets;

    bool operator==(const BouquetSet&) const = default;
};

/// Predicate result carrying the first violated condition with witnesses.
struct CheckResult {
    bool ok = true;
    std::string violation;

    explicit operator bool() const { return ok; }
};

inline VertexSet flower_set(const Hypergraph& h, const Bouquet& b) {
    VertexSet f(h.vertex_count());
    for (int v : b.flowers) f.add(v);
    return f;
}

inline VertexSet flower_set(const Hypergraph& h, const BouquetSet& s) {
    VertexSet f(h.vertex_count());
    for (const auto& b : s.bouquets)
        for (int v : b.flowers) f.add(v);
    return f;
}

inline VertexSet bouquet_vertex_set(const Hypergraph& h, const BouquetSet& s) {
    VertexSet u(h.vertex_count());
    for (const auto& b : s.bouquets)
        for (int e : b.edge_indices) u |= h.edge(e);
    return u;
}

/// Distinct edge indices used across the set, ascending.
inline std::vector<int> bouquet_edge_indices(const BouquetSet& s) {
    std::vector<int> all;
    for (const auto& b : s.bouquets)
        all.insert(all.end(), b.edge_indices.begin(), b.edge_indices.end());
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    return all;
}

/// |E(𝓑)|: the number of distinct edges used by the set.
inline int bouquet_edge_count(const BouquetSet& s) {
    return static_cast<int>(bouquet_edge_indices(s).size());
}

namespace detail {

inline std::string render_set(const Hypergraph& h, const VertexSet& s) {
    std::string out = "{";
    bool sep = false;
    for (int v = s.first(); v >= 0; v = s.next(v)) {
        if (sep) out += ' ';
        out += h.label(v);
        sep = true;
    }
    return out + "}";
}

} // namespace detail

/// Checks the two bouquet conditions: nonempty common intersection of the
/// edges, and flower ℓ_i ∈ E_j ⇔ i = j. Malformed input (index out of range,
/// flower list length mismatch) raises; a well-formed non-bouquet returns the
/// first violated condition.
inline CheckResult validate_bouquet(const Hypergraph& h, const Bouquet& b) {
    if (b.edge_indices.size() != b.flowers.size())
        fail(ErrorKind::length_mismatch,
             "bouquet has " + std::to_string(b.edge_indices.size()) + " edges but " +
                 std::to_string(b.flowers.size()) + " flowers");
    if (b.edge_indices.empty())
        return {false, "bouquet has no edges"};
    for (int e : b.edge_indices) h.edge(e);  // range check
    for (int v : b.flowers)
        if (v < 0 || v >= h.vertex_count())
            fail(ErrorKind::unknown_vertex, "flower index " + std::to_string(v) + " out of range");
    if (b.stem && (*b.stem < 0 || *b.stem >= h.vertex_count()))
        fail(ErrorKind::unknown_vertex, "stem index " + std::to_string(*b.stem) + " out of range");

    VertexSet common = h.edge(b.edge_indices.front());
    for (size_t i = 1; i < b.edge_indices.size(); ++i) common &= h.edge(b.edge_indices[i]);
    if (common.empty())
        return {false, "condition (1): the edges have an empty common intersection"};

    for (size_t i = 0; i < b.flowers.size(); ++i) {
        for (size_t j = 0; j < b.edge_indices.size(); ++j) {
            bool in = h.edge(b.edge_indices[j]).contains(b.flowers[i]);
            if (in != (i == j)) {
                std::string flower = h.label(b.flowers[i]);
                std::string edge = detail::render_set(h, h.edge(b.edge_indices[j]));
                return {false, in ? "condition (2): flower '" + flower + "' also lies in edge " + edge
                                  : "condition (2): flower '" + flower + "' is missing from its edge " + edge};
            }
        }
    }

    if (b.stem) {
        for (int e : b.edge_indices)
            if (!h.edge(e).contains(*b.stem))
                return {false, "stem '" + h.label(*b.stem) + "' is missing from edge " +
                                   detail::render_set(h, h.edge(e))};
        for (int f : b.flowers)
            if (f == *b.stem)
                return {false, "stem '" + h.label(*b.stem) + "' is also a flower"};
    }
    return {};
}

/// Semi-strong disjointness: (1) no edge of a bouquet meets another
/// bouquet's flowers, and (2) the non-flower vertices V(𝓑) \ F(𝓑) form an
/// independent set. Members must individually be valid bouquets
/// (InvalidBouquet otherwise).
inline CheckResult is_semi_strongly_disjoint(const Hypergraph& h, const BouquetSet& s) {
    for (size_t p = 0; p < s.bouquets.size(); ++p) {
        CheckResult r = validate_bouquet(h, s.bouquets[p]);
        if (!r.ok)
            fail(ErrorKind::invalid_bouquet,
                 "bouquet " + std::to_string(p + 1) + " is not a bouquet: " + r.violation);
    }

    std::vector<VertexSet> flowers;
    flowers.reserve(s.bouquets.size());
    for (const auto& b : s.bouquets) flowers.push_back(flower_set(h, b));

    for (size_t p = 0; p < s.bouquets.size(); ++p) {
        for (int e : s.bouquets[p].edge_indices) {
            for (size_t q = 0; q < s.bouquets.size(); ++q) {
                if (q == p) continue;
                if (h.edge(e).intersects(flowers[q])) {
                    VertexSet hit = h.edge(e) & flowers[q];
                    return {false, "condition (1): edge " + detail::render_set(h, h.edge(e)) +
                                       " of bouquet " + std::to_string(p + 1) + " meets flower '" +
                                       h.label(hit.first()) + "' of bouquet " + std::to_string(q + 1)};
                }
            }
        }
    }

    VertexSet rest = bouquet_vertex_set(h, s) - flower_set(h, s);
    for (const auto& e : h.edges()) {
        if (e.subset_of(rest))
            return {false, "condition (2): edge " + detail::render_set(h, e) +
                               " lies inside the non-flower vertices " + detail::render_set(h, rest)};
    }

    // Consequence of (1)+(2): flowers never collide across bouquets and edge
    // sets are disjoint, so |F(𝓑)| = |E(𝓑)|.
    size_t flower_total = 0, edge_total = 0;
    for (const auto& b : s.bouquets) {
        flower_total += b.flowers.size();
        edge_total += b.edge_indices.size();
    }
    internal_check(flower_set(h, s).count() == static_cast<int>(flower_total),
                   "semi-strongly disjoint set has colliding flowers");
    internal_check(bouquet_edge_count(s) == static_cast<int>(edge_total),
                   "semi-strongly disjoint set reuses an edge");
    return {};
}

struct DPrimeResult {
    int value = 0;
    BouquetSet witness;
};

namespace detail {

/// Enumerates set partitions of {0..k-1} as restricted growth strings in
/// lexicographic order; returns false when exhausted.
inline bool next_partition(std::vector<int>& rgs) {
    const int k = static_cast<int>(rgs.size());
    for (int i = k - 1; i > 0; --i) {
        int max_prev = 0;
        for (int j = 0; j < i; ++j) max_prev = std::max(max_prev, rgs[static_cast<size_t>(j)]);
        if (rgs[static_cast<size_t>(i)] <= max_prev) {
            ++rgs[static_cast<size_t>(i)];
            std::fill(rgs.begin() + i + 1, rgs.end(), 0);
            return true;
        }
    }
    return false;
}

inline std::optional<int> pick_stem(const Hypergraph& h, const std::vector<int>& edges,
                                    const std::vector<int>& flowers) {
    VertexSet common = h.edge(edges.front());
    for (size_t i = 1; i < edges.size(); ++i) common &= h.edge(edges[i]);
    for (int f : flowers)
        if (common.contains(f)) common.remove(f);
    if (common.empty()) return std::nullopt;
    return common.first();
}

/// Searches the edge subset T (ascending indices) for a semi-strongly
/// disjoint decomposition: partitions in RGS order, then flower assignments
/// in lexicographic order, filtered by the full predicate. Flower candidates
/// are restricted to the vertices private to each edge within T, which both
/// bouquet condition (2) and disjointness condition (1) force anyway.
inline bool decompose_edge_subset(const Hypergraph& h, const std::vector<int>& t,
                                  BouquetSet& witness) {
    const size_t k = t.size();
    std::vector<std::vector<int>> candidates(k);
    for (size_t i = 0; i < k; ++i) {
        VertexSet priv = h.edge(t[i]);
        for (size_t j = 0; j < k; ++j)
            if (j != i) priv -= h.edge(t[j]);
        if (priv.empty()) return false;
        candidates[i] = priv.indices();
    }

    std::vector<int> rgs(k, 0);
    do {
        int groups = 0;
        for (int g : rgs) groups = std::max(groups, g + 1);
        bool groups_ok = true;
        for (int g = 0; g < groups && groups_ok; ++g) {
            VertexSet common(h.vertex_count());
            bool started = false;
            for (size_t i = 0; i < k; ++i) {
                if (rgs[i] != g) continue;
                if (!started) {
                    common = h.edge(t[i]);
                    started = true;
                } else {
                    common &= h.edge(t[i]);
                }
            }
            if (common.empty()) groups_ok = false;
        }
        if (!groups_ok) continue;

        std::vector<size_t> choice(k, 0);
        while (true) {
            BouquetSet s;
            s.bouquets.resize(static_cast<size_t>(groups));
            for (size_t i = 0; i < k; ++i) {
                auto& b = s.bouquets[static_cast<size_t>(rgs[i])];
                b.edge_indices.push_back(t[i]);
                b.flowers.push_back(candidates[i][choice[i]]);
            }
            for (auto& b : s.bouquets) b.stem = pick_stem(h, b.edge_indices, b.flowers);
            if (is_semi_strongly_disjoint(h, s).ok) {
                witness = std::move(s);
                return true;
            }
            size_t i = k;
            while (i > 0) {
                --i;
                if (++choice[i] < candidates[i].size()) break;
                choice[i] = 0;
                if (i == 0) goto next_partition;
            }
        }
    next_partition:;
    } while (next_partition(rgs));
    return false;
}

} // namespace detail

/// Exhaustive d'_H: the maximum |E(𝓑)| over all semi-strongly disjoint sets
/// of bouquets, found by scanning edge subsets by increasing size (sizes not
/// beating the best value are skipped), partitions of each subset, and flower
/// assignments, filtered by is_semi_strongly_disjoint. Independent of the
/// cover machinery, so it serves as the oracle for the duality equality.
/// The empty hypergraph has d' = 0 with the empty witness.
inline DPrimeResult d_prime_bruteforce(const Hypergraph& h, const Caps& caps = {}) {
    if (h.edge_count() > caps.dprime_max_edges)
        fail(ErrorKind::size_guard,
             "exhaustive d' search capped at " + std::to_string(caps.dprime_max_edges) +
                 " edges, got " + std::to_string(h.edge_count()));
    if (h.vertex_count() > caps.dprime_max_vertices)
        fail(ErrorKind::size_guard,
             "exhaustive d' search capped at " + std::to_string(caps.dprime_max_vertices) +
                 " vertices, got " + std::to_string(h.vertex_count()));

    const int d = h.edge_count();
    DPrimeResult best;
    for (int s = 1; s <= d; ++s) {
        if (s <= best.value) continue;
        // s-subsets in lexicographic order
        std::vector<int> t(static_cast<size_t>(s));
        std::iota(t.begin(), t.end(), 0);
        while (true) {
            BouquetSet witness;
            if (detail::decompose_edge_subset(h, t, witness)) {
                best = {s, std::move(witness)};
                break;
            }
            int i = s - 1;
            while (i >= 0 && t[static_cast<size_t>(i)] == d - s + i) --i;
            if (i < 0) break;
            ++t[static_cast<size_t>(i)];
            for (int j = i + 1; j < s; ++j)
                t[static_cast<size_t>(j)] = t[static_cast<size_t>(j - 1)] + 1;
        }
    }
    return best;
}

/// Builds a semi-strongly disjoint set of bouquets with flower set exactly C
/// from a minimal vertex cover C. Singleton edges {c} with c ∈ C become
/// singleton bouquets; the remaining flowers are grouped greedily by shared
/// stem: the smallest unassigned flower picks its lexicographically smallest
/// witness edge E (E ∩ C = {ℓ}), the stem is the smallest vertex of E \ {ℓ},
/// and every unassigned flower with a witness edge through that stem joins
/// the bouquet. The empty cover of the empty hypergraph yields no bouquets.
inline BouquetSet construct_bouquets_from_cover(const Hypergraph& h, const VertexSet& c) {
    if (!is_minimal_vertex_cover(h, c))
        fail(ErrorKind::not_minimal_cover, "given set is not a minimal vertex cover");

    // Lexicographically smallest edge with edge ∩ C = {flower}, optionally
    // required to pass through `stem`.
    auto witness_edge = [&](int flower, int stem) {
        int best = -1;
        for (int e = 0; e < h.edge_count(); ++e) {
            const VertexSet& edge = h.edge(e);
            if (!edge.contains(flower) || edge.intersection_count(c) != 1) continue;
            if (stem >= 0 && !edge.contains(stem)) continue;
            if (best < 0 || edge.lex_less(h.edge(best))) best = e;
        }
        return best;
    };

    BouquetSet out;
    VertexSet assigned(h.vertex_count());
    for (int v = c.first(); v >= 0; v = c.next(v)) {
        for (int e = 0; e < h.edge_count(); ++e) {
            if (h.edge(e).count() == 1 && h.edge(e).contains(v)) {
                out.bouquets.push_back(Bouquet{{e}, {v}, std::nullopt});
                assigned.add(v);
                break;
            }
        }
    }

    VertexSet unassigned = c - assigned;
    while (!unassigned.empty()) {
        int lead = unassigned.first();
        int lead_edge = witness_edge(lead, -1);
        internal_check(lead_edge >= 0, "minimal cover element without a witness edge");
        VertexSet stem_pool = h.edge(lead_edge);
        stem_pool.remove(lead);
        internal_check(!stem_pool.empty(), "witness edge of a non-singleton flower is a singleton");
        int stem = stem_pool.first();

        Bouquet b;
        b.stem = stem;
        for (int v = unassigned.first(); v >= 0; v = unassigned.next(v)) {
            int e = witness_edge(v, stem);
            if (e >= 0) {
                b.edge_indices.push_back(e);
                b.flowers.push_back(v);
            }
        }
        for (int v : b.flowers) unassigned.remove(v);
        out.bouquets.push_back(std::move(b));
    }

    internal_check(flower_set(h, out) == c, "constructed flower set differs from the cover");
    internal_check(is_semi_strongly_disjoint(h, out).ok,
                   "constructed bouquets are not semi-strongly disjoint");
    return out;
}

inline BouquetSet construct_bouquets_from_cover(const Hypergraph& h,
                                                std::span<const std::string> cover) {
    return construct_bouquets_from_cover(h, h.vertex_set(cover));
}

/// The forward direction of the duality: the flower set of a semi-strongly
/// disjoint set is a minimal vertex cover of H|_{V(𝓑)} and extends to a
/// minimal vertex cover of H.
inline CoverCertificate extend_flowers_to_cover(const Hypergraph& h, const BouquetSet& s) {
    CheckResult r = is_semi_strongly_disjoint(h, s);
    if (!r.ok) fail(ErrorKind::not_semi_strongly_disjoint, r.violation);
    return extend_cover(h, bouquet_vertex_set(h, s), flower_set(h, s));
}

struct DualityReport {
    int alpha = 0;
    int d_prime = 0;
    bool equal = false;
    bool exact = false;
    CoverCertificate cover_witness;
    BouquetSet bouquet_witness;
};

/// Checks α₀'(H) = d'_H. In exact mode d' comes from the exhaustive search
/// and the reported cover witness is the flower set of the found bouquet
/// set (verified to be a maximum minimal cover); otherwise d' is realized
/// constructively from a maximum minimal cover, whose bouquets then have
/// flower set equal to the cover witness by construction.
inline DualityReport verify_duality(const Hypergraph& h, bool exact, const Caps& caps = {}) {
    DualityReport rep;
    rep.exact = exact;
    AlphaResult alpha = alpha0_prime(h, caps);
    rep.alpha = alpha.value;
    if (exact) {
        DPrimeResult dp = d_prime_bruteforce(h, caps);
        rep.d_prime = dp.value;
        rep.bouquet_witness = std::move(dp.witness);
        rep.equal = rep.alpha == rep.d_prime;
        VertexSet flowers = flower_set(h, rep.bouquet_witness);
        if (rep.equal && flowers.count() == rep.alpha && is_minimal_vertex_cover(h, flowers)) {
            rep.cover_witness = make_cover_certificate(std::move(flowers));
        } else {
            // Witness flower set failed to be a maximum minimal cover:
            // report inequality so the caller sees the identity is broken.
            rep.equal = false;
            rep.cover_witness = std::move(alpha.witness);
        }
    } else {
        rep.cover_witness = alpha.witness;
        rep.bouquet_witness = construct_bouquets_from_cover(h, alpha.witness.cover);
        rep.d_prime = bouquet_edge_count(rep.bouquet_witness);
        rep.equal = rep.alpha == rep.d_prime;
    }
    return rep;
}

} // namespace bouquet_kit
