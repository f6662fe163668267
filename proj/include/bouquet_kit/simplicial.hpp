#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "bouquet_kit/caps.hpp"
#include "bouquet_kit/covers.hpp"
#include "bouquet_kit/errors.hpp"
#include "bouquet_kit/exact_rank.hpp"
#include "bouquet_kit/hypergraph.hpp"

namespace bouquet_kit {

/// An abstract simplicial complex given by its facets (an antichain); the
/// faces are all subsets of facets. facets = [{}] is the complex whose only
/// face is the empty face; an empty facet list is the void complex with no
/// faces at all.
struct SimplicialComplex {
    int ground_size = 0;
    std::vector<VertexSet> facets;

    bool operator==(const SimplicialComplex&) const = default;
};

/// The independence complex of H: faces are exactly the independent sets,
/// so the facets are the maximal independent sets, i.e. the complements of
/// the minimal vertex covers. Facets are listed in canonical order. The
/// empty hypergraph maps to the empty-face complex on the empty ground set.
inline SimplicialComplex independence_complex(const Hypergraph& h, const Caps& caps = {}) {
    SimplicialComplex x;
    x.ground_size = h.vertex_count();
    for (const auto& cert : enumerate_minimal_covers(h, caps))
        x.facets.push_back(h.all_vertices() - cert.cover);
    std::sort(x.facets.begin(), x.facets.end(), canonical_less);
    return x;
}

/// Carrier of a coefficient field: the rationals or GF(p) for a prime p.
struct FieldTag {
    enum class Kind { rationals, prime_field };

    Kind kind = Kind::rationals;
    int characteristic = 0;

    static FieldTag rationals() { return {}; }

    static FieldTag gf(int p) {
        if (p < 2) fail(ErrorKind::bad_params, "field characteristic must be a prime");
        for (int d = 2; d * d <= p; ++d)
            if (p % d == 0)
                fail(ErrorKind::bad_params, std::to_string(p) + " is not prime");
        return {Kind::prime_field, p};
    }

    std::string name() const {
        return kind == Kind::rationals ? "q" : "gf" + std::to_string(characteristic);
    }

    bool operator==(const FieldTag&) const = default;
};

/// Reduced homology dimensions, indexed from degree -1 (the empty face).
/// Degrees outside the stored range are zero; a void complex stores nothing.
struct HomologyDims {
    std::vector<long long> dims;   // dims[k + 1] = dim H~_k

    long long at(int degree) const {
        size_t slot = static_cast<size_t>(degree + 1);
        return degree >= -1 && slot < dims.size() ? dims[slot] : 0;
    }

    int top_degree() const { return static_cast<int>(dims.size()) - 2; }

    bool all_zero() const {
        for (auto d : dims)
            if (d != 0) return false;
        return true;
    }
};

namespace detail {

/// Lexicographic order on faces seen as sorted index tuples.
inline bool mask_lex_less(std::uint32_t a, std::uint32_t b) {
    while (a && b) {
        int va = std::countr_zero(a), vb = std::countr_zero(b);
        if (va != vb) return va < vb;
        a &= a - 1;
        b &= b - 1;
    }
    return b != 0;
}

/// Reduced homology over a field, from the facet masks of a complex (an
/// empty list is the void complex). Faces are enumerated per dimension in
/// lexicographic order, boundary matrices carry the sign (-1)^j for dropping
/// the j-th smallest vertex, and ranks are exact in either field.
inline HomologyDims homology_from_facet_masks(const std::vector<std::uint32_t>& facets,
                                              FieldTag field) {
    HomologyDims out;
    if (facets.empty()) return out;

    // All faces, grouped by cardinality.
    std::vector<std::uint32_t> seen;
    for (std::uint32_t f : facets) {
        std::uint32_t sub = f;
        while (true) {
            seen.push_back(sub);
            if (sub == 0) break;
            sub = (sub - 1) & f;
        }
    }
    std::sort(seen.begin(), seen.end());
    seen.erase(std::unique(seen.begin(), seen.end()), seen.end());

    int top = 0;
    for (std::uint32_t f : seen) top = std::max(top, std::popcount(f));
    std::vector<std::vector<std::uint32_t>> level(static_cast<size_t>(top + 1));
    for (std::uint32_t f : seen) level[static_cast<size_t>(std::popcount(f))].push_back(f);
    for (auto& l : level) std::sort(l.begin(), l.end(), mask_lex_less);

    // rank_of_boundary[t] = rank of the map from t-element faces to
    // (t-1)-element faces.
    std::vector<int> rank_of_boundary(static_cast<size_t>(top + 2), 0);
    for (int t = 1; t <= top; ++t) {
        const auto& domain = level[static_cast<size_t>(t)];
        const auto& codomain = level[static_cast<size_t>(t - 1)];
        if (domain.empty() || codomain.empty()) continue;
        std::unordered_map<std::uint32_t, int> row_of;
        row_of.reserve(codomain.size());
        for (size_t r = 0; r < codomain.size(); ++r)
            row_of.emplace(codomain[r], static_cast<int>(r));

        if (field.kind == FieldTag::Kind::rationals) {
            std::vector<std::vector<BigInt>> m(codomain.size(),
                                               std::vector<BigInt>(domain.size(), 0));
            for (size_t c = 0; c < domain.size(); ++c) {
                std::uint32_t face = domain[c];
                int j = 0;
                for (std::uint32_t rest = face; rest; rest &= rest - 1, ++j) {
                    std::uint32_t sub = face & ~(rest & -rest);
                    m[static_cast<size_t>(row_of.at(sub))][c] = (j % 2 == 0) ? 1 : -1;
                }
            }
            rank_of_boundary[static_cast<size_t>(t)] = rank_fraction_free(std::move(m));
        } else {
            std::vector<std::vector<std::int64_t>> m(codomain.size(),
                                                     std::vector<std::int64_t>(domain.size(), 0));
            for (size_t c = 0; c < domain.size(); ++c) {
                std::uint32_t face = domain[c];
                int j = 0;
                for (std::uint32_t rest = face; rest; rest &= rest - 1, ++j) {
                    std::uint32_t sub = face & ~(rest & -rest);
                    m[static_cast<size_t>(row_of.at(sub))][c] = (j % 2 == 0) ? 1 : -1;
                }
            }
            rank_of_boundary[static_cast<size_t>(t)] =
                rank_mod_p(std::move(m), field.characteristic);
        }
    }

    out.dims.resize(static_cast<size_t>(top + 1), 0);
    for (int t = 0; t <= top; ++t) {
        long long faces = static_cast<long long>(level[static_cast<size_t>(t)].size());
        out.dims[static_cast<size_t>(t)] = faces - rank_of_boundary[static_cast<size_t>(t)] -
                                           rank_of_boundary[static_cast<size_t>(t + 1)];
    }
    return out;
}

inline std::uint32_t to_mask(const VertexSet& s) {
    std::uint32_t m = 0;
    for (int v = s.first(); v >= 0; v = s.next(v)) m |= std::uint32_t{1} << v;
    return m;
}

inline VertexSet from_mask(std::uint32_t m, int universe) {
    VertexSet s(universe);
    for (std::uint32_t rest = m; rest; rest &= rest - 1)
        s.add(std::countr_zero(rest));
    return s;
}

} // namespace detail

/// Dimensions of the reduced simplicial homology of X over the chosen field,
/// for degrees -1 .. dim X, computed from exact boundary matrix ranks.
inline HomologyDims reduced_homology_dims(const SimplicialComplex& x, FieldTag field,
                                          const Caps& caps = {}) {
    if (x.ground_size > caps.homology_max_ground)
        fail(ErrorKind::size_guard,
             "homology ground set capped at " + std::to_string(caps.homology_max_ground) +
                 " vertices, got " + std::to_string(x.ground_size));
    if (x.ground_size > 24)
        fail(ErrorKind::size_guard, "homology supports at most 24 ground vertices");
    std::vector<std::uint32_t> facets;
    facets.reserve(x.facets.size());
    for (const auto& f : x.facets) facets.push_back(detail::to_mask(f));
    return detail::homology_from_facet_masks(facets, field);
}

} // namespace bouquet_kit
