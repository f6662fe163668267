#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

#include "bouquet_kit/bouquets.hpp"
#include "bouquet_kit/simplicial.hpp"

namespace bouquet_kit {

/// One nonzero multigraded Betti number of S/I(H): β_{i,σ} = dim.
struct BettiEntry {
    int i = 0;
    VertexSet sigma;
    long long dim = 0;

    bool operator==(const BettiEntry&) const = default;
};

/// The nonzero multigraded Betti numbers over one field, and the projective
/// dimension pd = max{ i : β_{i,σ} > 0 }.
struct BettiTable {
    FieldTag field;
    std::vector<BettiEntry> entries;
    int pd = 0;

    bool operator==(const BettiTable&) const = default;
};

/// Computes pd S/I(H) with its Betti table via the Hochster multigraded
/// formula: β_{i,σ} = dim H~_{|σ|-i-1} of the independence complex
/// restricted to σ, scanning all σ ⊆ V(H). Restrictions that are cones
/// (some vertex in every restricted facet) are acyclic and skipped. Entries
/// are sorted by (i, canonical σ). The empty hypergraph has pd 0 with the
/// single entry β_{0,{}} = 1.
inline BettiTable projective_dimension(const Hypergraph& h, FieldTag field,
                                       const Caps& caps = {}) {
    if (h.vertex_count() > caps.pd_max_vertices)
        fail(ErrorKind::size_guard,
             "projective dimension scan capped at " + std::to_string(caps.pd_max_vertices) +
                 " vertices, got " + std::to_string(h.vertex_count()));
    if (h.vertex_count() > 24)
        fail(ErrorKind::size_guard, "projective dimension supports at most 24 vertices");

    const int n = h.vertex_count();
    SimplicialComplex complex = independence_complex(h, caps);
    std::vector<std::uint32_t> facets;
    facets.reserve(complex.facets.size());
    for (const auto& f : complex.facets) facets.push_back(detail::to_mask(f));

    BettiTable table;
    table.field = field;

    std::vector<std::uint32_t> restricted;
    for (std::uint32_t sigma = 0; sigma < (std::uint32_t{1} << n); ++sigma) {
        // Facets of the restriction: maximal intersections with sigma.
        restricted.clear();
        for (std::uint32_t f : facets) restricted.push_back(f & sigma);
        std::sort(restricted.begin(), restricted.end());
        restricted.erase(std::unique(restricted.begin(), restricted.end()), restricted.end());
        std::vector<std::uint32_t> maximal;
        for (std::uint32_t a : restricted) {
            bool dominated = false;
            for (std::uint32_t b : restricted)
                if (a != b && (a & ~b) == 0) { dominated = true; break; }
            if (!dominated) maximal.push_back(a);
        }
        restricted.swap(maximal);

        // Cone prune: a vertex in every restricted facet makes the
        // restriction acyclic.
        std::uint32_t apex = ~std::uint32_t{0};
        for (std::uint32_t f : restricted) apex &= f;
        if (apex != 0) continue;

        HomologyDims dims = detail::homology_from_facet_masks(restricted, field);
        const int size = std::popcount(sigma);
        for (int k = -1; k <= dims.top_degree(); ++k) {
            long long d = dims.at(k);
            if (d <= 0) continue;
            int i = size - k - 1;
            table.entries.push_back(BettiEntry{i, detail::from_mask(sigma, n), d});
            table.pd = std::max(table.pd, i);
        }
    }

    std::sort(table.entries.begin(), table.entries.end(), [](const BettiEntry& a, const BettiEntry& b) {
        if (a.i != b.i) return a.i < b.i;
        return canonical_less(a.sigma, b.sigma);
    });
    return table;
}

struct PdBoundReport {
    int pd = 0;
    int d_prime = 0;
    bool bound_holds = false;
};

/// Checks the lower bound pd S/I(H) ≥ d'_H, with d' realized constructively
/// through the cover–bouquet duality. bound_holds must come back true on
/// every valid input; false signals an implementation bug.
inline PdBoundReport check_pd_bound(const Hypergraph& h, FieldTag field, const Caps& caps = {}) {
    BettiTable table = projective_dimension(h, field, caps);
    DualityReport duality = verify_duality(h, /*exact=*/false, caps);
    return PdBoundReport{table.pd, duality.d_prime, table.pd >= duality.d_prime};
}

} // namespace bouquet_kit
