#pragma once

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

#include "bouquet_kit/errors.hpp"
#include "bouquet_kit/hypergraph.hpp"

namespace bouquet_kit {

/// splitmix64. Hand-rolled so that seeded output is identical across
/// platforms and standard library implementations.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform in [0, bound), bound >= 1. Masked rejection sampling, unbiased.
    std::uint64_t below(std::uint64_t bound) {
        if (bound <= 1) return 0;
        std::uint64_t mask = ~std::uint64_t{0} >> std::countl_zero(bound - 1);
        std::uint64_t v;
        do {
            v = next() & mask;
        } while (v >= bound);
        return v;
    }

private:
    std::uint64_t state_;
};

struct RandomHypergraphParams {
    int vertex_count = 0;          // n >= 1; labels v0..v{n-1}
    int edge_attempts = 0;         // m draws; realized edge count may be less
    int arity_min = 1;
    int arity_max = 1;
    std::uint64_t seed = 0;
};

/// Draws `edge_attempts` random edges with uniform arity in the given range,
/// then minimalizes the family to an antichain (dropping non-minimal edges
/// and any vertex left isolated). Deterministic for a fixed seed; the
/// realized edge count may be smaller than requested, and vertices that end
/// up in no edge are absent from the result. Zero draws yield the empty
/// hypergraph.
inline Hypergraph generate_random_hypergraph(const RandomHypergraphParams& p) {
    if (p.vertex_count < 1)
        fail(ErrorKind::bad_params, "vertex count must be at least 1");
    if (p.edge_attempts < 0)
        fail(ErrorKind::bad_params, "edge attempts must be nonnegative");
    if (p.arity_min < 1 || p.arity_min > p.arity_max || p.arity_max > p.vertex_count)
        fail(ErrorKind::bad_params, "arity bounds must satisfy 1 <= min <= max <= n");

    SplitMix64 rng(p.seed);
    std::vector<std::string> labels;
    labels.reserve(static_cast<size_t>(p.vertex_count));
    for (int v = 0; v < p.vertex_count; ++v) labels.push_back("v" + std::to_string(v));

    std::vector<std::vector<std::string>> raw;
    raw.reserve(static_cast<size_t>(p.edge_attempts));
    std::vector<int> pool(static_cast<size_t>(p.vertex_count));
    for (int t = 0; t < p.edge_attempts; ++t) {
        int arity = p.arity_min +
                    static_cast<int>(rng.below(static_cast<std::uint64_t>(p.arity_max - p.arity_min + 1)));
        std::iota(pool.begin(), pool.end(), 0);
        std::vector<int> picked;
        picked.reserve(static_cast<size_t>(arity));
        for (int j = 0; j < arity; ++j) {
            size_t k = static_cast<size_t>(j) +
                       static_cast<size_t>(rng.below(static_cast<std::uint64_t>(p.vertex_count - j)));
            std::swap(pool[static_cast<size_t>(j)], pool[k]);
            picked.push_back(pool[static_cast<size_t>(j)]);
        }
        std::sort(picked.begin(), picked.end());
        std::vector<std::string> edge;
        edge.reserve(picked.size());
        for (int v : picked) edge.push_back(labels[static_cast<size_t>(v)]);
        raw.push_back(std::move(edge));
    }
    return build_hypergraph(raw, BuildMode::minimalize);
}

} // namespace bouquet_kit
