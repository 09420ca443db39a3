#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "bondcover/replacer.hpp"
#include "bondcover/structure.hpp"
#include "bondcover/weighting.hpp"

namespace bondc {

struct SolveConfig {
    int c = 2;
    StructureParams params;
    bool reverse_delete = false;
    SearchBudget budget;

    static SolveConfig for_order(int c) {
        if (c < 1) throw ValidationError("order must be positive");
        SolveConfig cfg;
        cfg.c = c;
        cfg.params = StructureParams::defaults(c);
        return cfg;
    }
};

struct TraceEvent {
    enum class Kind { ZeroLayer, ModelLayer, ClusterLayer, Replacement };
    Kind kind = Kind::ZeroLayer;

    // Snapshot of the graph the event was applied to, for validation; full
    // graphs are re-derived by replaying the chain.
    VertexSet vertices_before;
    std::map<Vertex, Weight> weights_before;

    ThinLayer layer;        // layer events
    VertexSet deleted;      // D_i = V_i \ V_{i+1} for layer events
    ReplacementRecord replacement;  // replacement events

    bool is_layer() const { return kind != Kind::Replacement; }
};

struct PeelTrace {
    int c = 1;
    std::vector<TraceEvent> events;
    Weight realized_alpha = 1;  // max layer ratio: |M| for models, 4*capacity for clusters
};

struct SolveResult {
    VertexSet cover;
    Weight weight = 0;
    PeelTrace trace;
    Weight realized_alpha = 1;
    std::vector<WeightedMultigraph> chain;  // G_1, ..., G_ell; the last is theta_c-minor-free
};

inline bool verify_cover(const WeightedMultigraph& g, int c, const VertexSet& s) {
    for (Vertex v : s)
        if (!g.has_vertex(v)) throw ValidationError("solution vertex " + std::to_string(v) + " not in the graph");
    return !find_theta_model(g.delete_vertices(s), c);
}

// Re-derives the graph sequence G_1..G_ell from the input graph and a trace,
// checking each event's snapshot on the way.
inline std::vector<WeightedMultigraph> replay_chain(const WeightedMultigraph& g, const PeelTrace& trace) {
    std::vector<WeightedMultigraph> chain{g};
    for (const TraceEvent& ev : trace.events) {
        const WeightedMultigraph& cur = chain.back();
        if (cur.vertex_set() != ev.vertices_before || cur.weights() != ev.weights_before)
            throw ValidationError("trace snapshot does not match the replayed chain");
        if (ev.is_layer())
            chain.push_back(subtract_layer(cur, ev.layer));
        else
            chain.push_back(apply_record(cur, ev.replacement));
    }
    return chain;
}

// Backward pass: starting from the empty cover of the final graph, add each
// layer's deleted set (optionally pruning) and lift through replacements.
inline VertexSet reconstruct(const PeelTrace& trace, const std::vector<WeightedMultigraph>& chain,
                             bool reverse_delete = false) {
    if (chain.size() != trace.events.size() + 1) throw ValidationError("chain and trace lengths disagree");
    VertexSet s;
    for (std::size_t i = trace.events.size(); i-- > 0;) {
        const TraceEvent& ev = trace.events[i];
        const WeightedMultigraph& before = chain[i];
        if (ev.is_layer()) {
            s.insert(ev.deleted.begin(), ev.deleted.end());
            if (reverse_delete) s = detail::minimalize_cover(before, trace.c, s);
        } else {
            s = lift_solution(before, ev.replacement, s, trace.c);
        }
    }
    return s;
}

// The primal-dual loop: peel zero-weight vertices, then iterate the structure
// theorem; replace large outgrowths, peel model or cluster layers, stop at a
// theta_c-minor-free graph and reconstruct backwards.  The returned cover S
// satisfies w(S) <= realized_alpha * opt(g).
inline SolveResult solve(const WeightedMultigraph& g, const SolveConfig& cfg) {
    if (cfg.c < 1) throw ValidationError("order must be positive");
    if (cfg.params.t < 1 || cfg.params.k < 1 || cfg.params.r < 1 || cfg.params.model_bound < 1)
        throw ValidationError("structure parameters must be positive");

    SolveResult res;
    res.trace.c = cfg.c;
    res.chain.push_back(g);

    const auto snapshot = [](TraceEvent& ev, const WeightedMultigraph& cur) {
        ev.vertices_before = cur.vertex_set();
        ev.weights_before = cur.weights();
    };
    const auto push_layer = [&](TraceEvent::Kind kind, ThinLayer layer) {
        const WeightedMultigraph& cur = res.chain.back();
        TraceEvent ev;
        ev.kind = kind;
        snapshot(ev, cur);
        WeightedMultigraph next = subtract_layer(cur, layer);
        for (Vertex v : cur.vertices())
            if (!next.has_vertex(v)) ev.deleted.insert(v);
        res.trace.realized_alpha = std::max(res.trace.realized_alpha, layer.alpha);
        ev.layer = std::move(layer);
        res.trace.events.push_back(std::move(ev));
        res.chain.push_back(std::move(next));
    };

    while (true) {
        const WeightedMultigraph& cur = res.chain.back();

        VertexSet zero;
        for (const auto& [v, w] : cur.weights())
            if (w == 0) zero.insert(v);
        if (!zero.empty()) {
            ThinLayer free_layer;
            free_layer.alpha = 1;
            free_layer.deleted = zero;
            push_layer(TraceEvent::Kind::ZeroLayer, std::move(free_layer));
            continue;
        }

        const StructureOutcome outcome = structure(cur, cfg.c, cfg.params, cfg.budget);
        if (outcome.is_theta_free()) break;
        if (outcome.is_outgrowth()) {
            TraceEvent ev;
            ev.kind = TraceEvent::Kind::Replacement;
            snapshot(ev, cur);
            auto [next, rec] = replace_outgrowth(cur, outcome.outgrowth(), cfg.c, cfg.budget);
            ev.replacement = std::move(rec);
            res.trace.events.push_back(std::move(ev));
            res.chain.push_back(std::move(next));
            continue;
        }
        if (outcome.is_clusters()) {
            const ClusterCollection& cc = outcome.clusters();
            const auto contracted = contract_clusters(cur, cc);
            if (contracted.graph.vertex_count() > 0 && contracted.graph.min_edge_degree() >= 8LL * cfg.c) {
                push_layer(TraceEvent::Kind::ClusterLayer, cluster_layer(cur, cc, cfg.c));
                continue;
            }
            // Configured t below 8c: the cluster outcome misses the layer
            // hypothesis, peel a model instead.
            const auto m = find_theta_model(cur, cfg.c);
            push_layer(TraceEvent::Kind::ModelLayer, model_layer(cur, minimize_model(cur, *m)));
            continue;
        }
        push_layer(TraceEvent::Kind::ModelLayer, model_layer(cur, outcome.model()));
    }

    res.cover = reconstruct(res.trace, res.chain, cfg.reverse_delete);
    if (!verify_cover(g, cfg.c, res.cover)) throw Error("internal: reconstructed set is not a cover");
    res.weight = g.total_weight(res.cover);
    res.realized_alpha = res.trace.realized_alpha;
    return res;
}

}  // namespace bondc
