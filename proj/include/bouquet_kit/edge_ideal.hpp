#pragma once

#include <vector>

#include "bouquet_kit/covers.hpp"
#include "bouquet_kit/hypergraph.hpp"

namespace bouquet_kit {

/// A squarefree monomial, stored as its support.
struct Monomial {
    VertexSet support;

    bool operator==(const Monomial&) const = default;
};

/// A squarefree monomial ideal of S = k[x_0..x_{n-1}], generated by an
/// antichain of supports.
struct MonomialIdeal {
    std::vector<Monomial> generators;
    int ambient_n = 0;

    bool operator==(const MonomialIdeal&) const = default;
};

/// I(H): one generator per edge, x_{i_1}···x_{i_t} for the edge {i_1..i_t}.
/// The antichain property is inherited from the hypergraph; the empty
/// hypergraph gives the zero ideal (no generators).
inline MonomialIdeal edge_ideal(const Hypergraph& h) {
    MonomialIdeal ideal;
    ideal.ambient_n = h.vertex_count();
    ideal.generators.reserve(static_cast<size_t>(h.edge_count()));
    for (const auto& e : h.edges()) ideal.generators.push_back(Monomial{e});
    return ideal;
}

/// The minimal primes of I(H), presented as the variable supports
/// (x_i : i in C) for the minimal vertex covers C, in canonical order. The
/// zero ideal of the empty hypergraph has the single empty support.
inline std::vector<VertexSet> minimal_primes(const Hypergraph& h, const Caps& caps = {}) {
    std::vector<VertexSet> out;
    for (auto& cert : enumerate_minimal_covers(h, caps)) out.push_back(std::move(cert.cover));
    return out;
}

/// bigheight I(H): the maximum height of a minimal prime. Coincides with
/// α₀'(H); exposed under the algebraic name.
inline int big_height(const Hypergraph& h, const Caps& caps = {}) {
    return alpha0_prime(h, caps).value;
}

} // namespace bouquet_kit
