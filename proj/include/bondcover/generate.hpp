#pragma once

#include <random>
#include <utility>
#include <vector>

#include "bondcover/graph.hpp"

namespace bondc {

// Deterministic instance generators: the same seed always yields the same
// graph.  Weights are small positive rationals.

namespace detail {

inline Weight random_weight(std::mt19937_64& rng) {
    static const int dens[] = {1, 1, 2, 3, 4};
    const int num = 1 + static_cast<int>(rng() % 20);
    const int den = dens[rng() % 5];
    return Weight(num, den);
}

}  // namespace detail

// Erdos-Renyi style: each pair is an edge with probability p, multiplicities
// uniform in 1..mult_max.
inline WeightedMultigraph generate_gnp(int n, double p, std::uint64_t seed, int mult_max = 1) {
    if (n < 0 || p < 0.0 || p > 1.0 || mult_max < 1) throw ValidationError("invalid gnp parameters");
    std::mt19937_64 rng(seed);
    WeightedMultigraph g;
    for (int v = 1; v <= n; ++v) g.add_vertex(v, detail::random_weight(rng));
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) {
            const double coin = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (coin < p) g.add_edge(u, v, 1 + static_cast<int>(rng() % mult_max));
        }
    return g;
}

struct PlantedInstance {
    WeightedMultigraph graph;
    VertexSet planted;  // a known cover: every non-base edge touches it
};

// A theta_c-minor-free base (a random tree with multiplicities < c) plus
// extra edges that all touch the planted set, so the planted set is a cover
// and its weight upper-bounds the optimum.
inline PlantedInstance generate_planted(int n, int planted_size, int extra_edges, int c, std::uint64_t seed) {
    if (n < 1 || planted_size < 0 || planted_size > n || extra_edges < 0 || c < 1)
        throw ValidationError("invalid planted parameters");
    std::mt19937_64 rng(seed);
    PlantedInstance out;
    for (int v = 1; v <= n; ++v) out.graph.add_vertex(v, detail::random_weight(rng));
    if (c >= 2)
        for (int v = 2; v <= n; ++v) {
            const int parent = 1 + static_cast<int>(rng() % (v - 1));
            out.graph.add_edge(v, parent, 1 + static_cast<int>(rng() % (c - 1)));
        }
    std::vector<Vertex> ids;
    for (int v = 1; v <= n; ++v) ids.push_back(v);
    for (int i = 0; i < planted_size; ++i) {
        const int j = i + static_cast<int>(rng() % (n - i));
        std::swap(ids[i], ids[j]);
        out.planted.insert(ids[i]);
    }
    if (!out.planted.empty() && n >= 2)
        for (int i = 0; i < extra_edges; ++i) {
            auto it = out.planted.begin();
            std::advance(it, static_cast<long>(rng() % out.planted.size()));
            const Vertex x = *it;
            Vertex y = 1 + static_cast<int>(rng() % n);
            if (y == x) y = y == n ? 1 : y + 1;
            out.graph.add_edge(x, y, 1 + static_cast<int>(rng() % c));
        }
    return out;
}

// A small random core plus pendant two-terminal lobes: each lobe is a random
// tree with multiplicities < c attached to two core vertices by single
// multi-edges, so it forms a c-outgrowth of the requested size.
inline WeightedMultigraph generate_gadget_chain(int core_n, int lobes, int lobe_size, int c, std::uint64_t seed) {
    if (core_n < 2 || lobes < 0 || lobe_size < 1 || c < 2) throw ValidationError("invalid gadget-chain parameters");
    std::mt19937_64 rng(seed);
    WeightedMultigraph g;
    for (int v = 1; v <= core_n; ++v) g.add_vertex(v, detail::random_weight(rng));
    for (int v = 2; v <= core_n; ++v) g.add_edge(v, 1 + static_cast<int>(rng() % (v - 1)), 1 + static_cast<int>(rng() % c));
    for (int u = 1; u <= core_n; ++u)
        for (int v = u + 1; v <= core_n; ++v)
            if (rng() % 4 == 0 && g.edge_multiplicity(u, v) == 0) g.add_edge(u, v, 1 + static_cast<int>(rng() % c));

    int next = core_n + 1;
    for (int l = 0; l < lobes; ++l) {
        const Vertex u = 1 + static_cast<int>(rng() % core_n);
        Vertex v = 1 + static_cast<int>(rng() % core_n);
        if (v == u) v = v == core_n ? 1 : v + 1;
        std::vector<Vertex> lobe;
        for (int i = 0; i < lobe_size; ++i) {
            const Vertex x = next++;
            g.add_vertex(x, detail::random_weight(rng));
            if (!lobe.empty()) g.add_edge(x, lobe[rng() % lobe.size()], 1 + static_cast<int>(rng() % (c - 1)));
            lobe.push_back(x);
        }
        g.add_edge(u, lobe[rng() % lobe.size()], 1 + static_cast<int>(rng() % (c - 1)));
        g.add_edge(v, lobe[rng() % lobe.size()], 1 + static_cast<int>(rng() % (c - 1)));
    }
    return g;
}

}  // namespace bondc
