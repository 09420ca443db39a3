#pragma once

// Independent brute-force oracles used to validate the library.  Everything
// here works on bitmask representations and never calls into the search code
// it is checking (the minimal-cover enumerator is the one exception: it uses
// the exact detector, which is itself validated against the bond oracle).

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <vector>

#include "bondcover/detect.hpp"
#include "bondcover/graph.hpp"

namespace oracle {

using bondc::Vertex;
using bondc::VertexSet;
using bondc::Weight;
using bondc::WeightedMultigraph;

struct MaskGraph {
    int n = 0;
    std::vector<Vertex> ids;              // index -> vertex id
    std::vector<std::vector<int>> mult;   // multiplicity matrix
    std::vector<std::uint32_t> nbr;       // simple adjacency bitmasks

    static MaskGraph from(const WeightedMultigraph& g) {
        MaskGraph mg;
        mg.ids = g.vertices();
        mg.n = static_cast<int>(mg.ids.size());
        if (mg.n > 24) throw bondc::Error("oracle limited to 24 vertices");
        mg.mult.assign(mg.n, std::vector<int>(mg.n, 0));
        mg.nbr.assign(mg.n, 0);
        std::map<Vertex, int> index;
        for (int i = 0; i < mg.n; ++i) index[mg.ids[i]] = i;
        for (const auto& [u, v, m] : g.edges()) {
            const int a = index[u], b = index[v];
            mg.mult[a][b] = mg.mult[b][a] = m;
            mg.nbr[a] |= 1u << b;
            mg.nbr[b] |= 1u << a;
        }
        return mg;
    }

    std::uint32_t full() const { return n == 32 ? ~0u : (1u << n) - 1; }

    VertexSet to_set(std::uint32_t mask) const {
        VertexSet out;
        for (int i = 0; i < n; ++i)
            if (mask & (1u << i)) out.insert(ids[i]);
        return out;
    }

    bool connected(std::uint32_t sub) const {
        if (sub == 0) return false;
        const std::uint32_t start = sub & (~sub + 1);
        std::uint32_t seen = start, frontier = start;
        while (frontier) {
            std::uint32_t next = 0;
            for (std::uint32_t f = frontier; f;) {
                const int i = __builtin_ctz(f);
                f &= f - 1;
                next |= nbr[i] & sub & ~seen;
            }
            seen |= next;
            frontier = next;
        }
        return seen == sub;
    }

    long long crossing(std::uint32_t a, std::uint32_t b) const {
        long long sum = 0;
        for (std::uint32_t x = a; x;) {
            const int i = __builtin_ctz(x);
            x &= x - 1;
            for (std::uint32_t y = b & nbr[i]; y;) {
                const int j = __builtin_ctz(y);
                y &= y - 1;
                sum += mult[i][j];
            }
        }
        return sum;
    }

    std::vector<std::uint32_t> components(std::uint32_t within) const {
        std::vector<std::uint32_t> out;
        std::uint32_t left = within;
        while (left) {
            const std::uint32_t start = left & (~left + 1);
            std::uint32_t seen = start, frontier = start;
            while (frontier) {
                std::uint32_t next = 0;
                for (std::uint32_t f = frontier; f;) {
                    const int i = __builtin_ctz(f);
                    f &= f - 1;
                    next |= nbr[i] & within & ~seen;
                }
                seen |= next;
                frontier = next;
            }
            out.push_back(seen);
            left &= ~seen;
        }
        return out;
    }
};

// Largest bond size of the subgraph induced on `mask` (0 when none): per
// component, every bipartition with both sides connected is a bond.
inline long long max_bond(const MaskGraph& mg, std::uint32_t mask) {
    long long best = 0;
    for (std::uint32_t comp : mg.components(mask)) {
        if (__builtin_popcount(comp) < 2) continue;
        const std::uint32_t low = comp & (~comp + 1);
        const std::uint32_t rest = comp & ~low;
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            const std::uint32_t a = sub | low;
            const std::uint32_t b = comp & ~a;
            if (b != 0 && mg.connected(a) && mg.connected(b)) best = std::max(best, mg.crossing(a, b));
            if (sub == 0) break;
        }
    }
    return best;
}

inline bool has_c_bond(const MaskGraph& mg, std::uint32_t mask, int c) {
    for (std::uint32_t comp : mg.components(mask)) {
        if (__builtin_popcount(comp) < 2) continue;
        const std::uint32_t low = comp & (~comp + 1);
        const std::uint32_t rest = comp & ~low;
        for (std::uint32_t sub = rest;; sub = (sub - 1) & rest) {
            const std::uint32_t a = sub | low;
            const std::uint32_t b = comp & ~a;
            if (b != 0 && mg.crossing(a, b) >= c && mg.connected(a) && mg.connected(b)) return true;
            if (sub == 0) break;
        }
    }
    return false;
}

inline bool has_c_bond(const WeightedMultigraph& g, int c) {
    const MaskGraph mg = MaskGraph::from(g);
    return has_c_bond(mg, mg.full(), c);
}

// Exhaustive minimum-weight cover: enumerates all 2^n deletion sets, deciding
// feasibility by bond enumeration.
inline std::pair<VertexSet, Weight> exact_cover_bruteforce(const WeightedMultigraph& g, int c) {
    const MaskGraph mg = MaskGraph::from(g);
    const std::uint32_t full = mg.full();
    std::optional<Weight> best;
    std::uint32_t best_mask = 0;
    for (std::uint32_t keep = full;; keep = (keep - 1) & full) {
        if (!has_c_bond(mg, keep, c)) {
            Weight w = 0;
            for (int i = 0; i < mg.n; ++i)
                if (!(keep & (1u << i))) w += g.weight(mg.ids[i]);
            if (!best || w < *best) {
                best = w;
                best_mask = full & ~keep;
            }
        }
        if (keep == 0) break;
    }
    return {mg.to_set(best_mask), *best};
}

// Exhaustive minimum-weight feedback vertex set via an independent cycle
// test: a multigraph is acyclic iff all multiplicities are 1 and the simple
// skeleton is a forest.
inline bool mask_is_forest(const MaskGraph& mg, std::uint32_t mask) {
    int edges = 0;
    for (int i = 0; i < mg.n; ++i) {
        if (!(mask & (1u << i))) continue;
        for (int j = i + 1; j < mg.n; ++j) {
            if (!(mask & (1u << j)) || mg.mult[i][j] == 0) continue;
            if (mg.mult[i][j] > 1) return false;
            ++edges;
        }
    }
    int verts = __builtin_popcount(mask);
    int comps = static_cast<int>(mg.components(mask).size());
    return edges == verts - comps;
}

inline std::pair<VertexSet, Weight> weighted_fvs_bruteforce(const WeightedMultigraph& g) {
    const MaskGraph mg = MaskGraph::from(g);
    const std::uint32_t full = mg.full();
    std::optional<Weight> best;
    std::uint32_t best_mask = 0;
    for (std::uint32_t keep = full;; keep = (keep - 1) & full) {
        if (mask_is_forest(mg, keep)) {
            Weight w = 0;
            for (int i = 0; i < mg.n; ++i)
                if (!(keep & (1u << i))) w += g.weight(mg.ids[i]);
            if (!best || w < *best) {
                best = w;
                best_mask = full & ~keep;
            }
        }
        if (keep == 0) break;
    }
    return {mg.to_set(best_mask), *best};
}

// All inclusion-minimal covers, by branching over minimized models with state
// deduplication.  Uses the exact detector for feasibility.
inline std::set<VertexSet> enumerate_minimal_covers(const WeightedMultigraph& g, int c) {
    std::set<VertexSet> states, raw;
    const auto rec = [&](auto&& self, const WeightedMultigraph& cur, VertexSet chosen) -> void {
        if (!states.insert(chosen).second) return;
        const auto model = bondc::find_theta_model(cur, c);
        if (!model) {
            raw.insert(chosen);
            return;
        }
        const auto slim = bondc::minimize_model(cur, *model);
        for (Vertex v : slim.vertex_set()) {
            VertexSet next = chosen;
            next.insert(v);
            self(self, cur.delete_vertex(v), std::move(next));
        }
    };
    rec(rec, g, {});
    std::set<VertexSet> minimal;
    for (const auto& s : raw) {
        bool keep = true;
        for (const auto& t : raw)
            if (t.size() < s.size() && std::includes(s.begin(), s.end(), t.begin(), t.end())) {
                keep = false;
                break;
            }
        if (keep) minimal.insert(s);
    }
    return minimal;
}

// Minimal covers by direct 2^n filtering (tiny graphs; validates the
// enumerator above).
inline std::set<VertexSet> minimal_covers_bruteforce(const WeightedMultigraph& g, int c) {
    const MaskGraph mg = MaskGraph::from(g);
    const std::uint32_t full = mg.full();
    std::vector<std::uint32_t> covers;
    for (std::uint32_t keep = full;; keep = (keep - 1) & full) {
        if (!has_c_bond(mg, keep, c)) covers.push_back(full & ~keep);
        if (keep == 0) break;
    }
    std::set<VertexSet> out;
    for (std::uint32_t s : covers) {
        bool minimal = true;
        for (std::uint32_t t : covers)
            if (t != s && (t & s) == t) {
                minimal = false;
                break;
            }
        if (minimal) out.insert(mg.to_set(s));
    }
    return out;
}

// Random connected multigraph on up to `max_n` vertices with multiplicities
// up to `mult_max`; unit weights unless randomized.
inline WeightedMultigraph random_connected_multigraph(std::mt19937_64& rng, int min_n, int max_n, int mult_max,
                                                      bool random_weights = false) {
    const int n = min_n + static_cast<int>(rng() % (max_n - min_n + 1));
    WeightedMultigraph g;
    for (int v = 1; v <= n; ++v) {
        Weight w = 1;
        if (random_weights) w = Weight(1 + static_cast<int>(rng() % 12), 1 + static_cast<int>(rng() % 3));
        g.add_vertex(v, w);
    }
    for (int v = 2; v <= n; ++v) g.add_edge(v, 1 + static_cast<int>(rng() % (v - 1)), 1 + static_cast<int>(rng() % mult_max));
    const int extra = static_cast<int>(rng() % (n + 1));
    for (int i = 0; i < extra && n >= 2; ++i) {
        const int u = 1 + static_cast<int>(rng() % n);
        int v = 1 + static_cast<int>(rng() % n);
        if (u == v) v = v == n ? 1 : v + 1;
        g.add_edge(u, v, 1 + static_cast<int>(rng() % mult_max));
    }
    return g;
}

}  // namespace oracle
