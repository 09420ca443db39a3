#pragma once

#include <map>
#include <utility>

#include "bondcover/detect.hpp"
#include "bondcover/graph.hpp"

namespace bondc {

// One primal-dual unit: a sub-weighting w^o <= w, tight on at least one
// vertex, such that every cover pays at least a 1/alpha share of its total.
// Vertices absent from layer_weight carry w^o = 0.
struct ThinLayer {
    std::map<Vertex, Weight> layer_weight;
    Weight alpha = 1;
    VertexSet deleted;  // vertices whose residual weight reaches zero

    Weight at(Vertex v) const {
        const auto it = layer_weight.find(v);
        return it == layer_weight.end() ? Weight(0) : it->second;
    }
    Weight total() const {
        Weight sum = 0;
        for (const auto& [v, w] : layer_weight) sum += w;
        return sum;
    }
    Weight total_over(const VertexSet& s) const {
        Weight sum = 0;
        for (Vertex v : s) sum += at(v);
        return sum;
    }
};

// w_C(v) = |ext(C)| / |C| for v in cluster C, exact; ext is measured inside
// the subgraph induced on the union of the clusters.
inline std::map<Vertex, Weight> cluster_weighting(const WeightedMultigraph& g, const ClusterCollection& cc) {
    const WeightedMultigraph sub = g.induced(cc.union_set());
    std::map<Vertex, Weight> out;
    for (const auto& cl : cc.clusters()) {
        const Weight w(BigInt(sub.ext_edges(cl)), BigInt(cl.size()));
        for (Vertex v : cl) out[v] = w;
    }
    return out;
}

// Uniform layer on a small model: epsilon = min weight on M.  Every cover
// intersects M, so the layer is |M|-thin.
inline ThinLayer model_layer(const WeightedMultigraph& g, const ThetaModel& m) {
    if (!is_valid_model(g, m)) throw ValidationError("invalid theta-model");
    ThinLayer layer;
    bool first = true;
    Weight eps = 0;
    for (Vertex v : m.vertex_set()) {
        const Weight& w = g.weight(v);
        if (w == 0) throw ValidationError("zero-weight vertex " + std::to_string(v) + " on the model");
        if (first || w < eps) eps = w;
        first = false;
    }
    for (Vertex v : m.vertex_set()) {
        layer.layer_weight[v] = eps;
        if (g.weight(v) == eps) layer.deleted.insert(v);
    }
    layer.alpha = Weight(BigInt(m.size()));
    return layer;
}

// Proportional layer on a cluster collection with delta(G/C) >= 8c:
// w^o = epsilon * w_C on the union, epsilon = min w(v)/w_C(v).  The layer is
// (4 * capacity)-thin.
inline ThinLayer cluster_layer(const WeightedMultigraph& g, const ClusterCollection& cc, int c) {
    const auto contracted = contract_clusters(g, cc);
    if (contracted.graph.vertex_count() == 0 || contracted.graph.min_edge_degree() < 8LL * c)
        throw ValidationError("cluster layer requires delta(G/C) >= 8c");
    const auto wc = cluster_weighting(g, cc);
    bool first = true;
    Weight eps = 0;
    for (const auto& [v, w_c] : wc) {
        const Weight& w = g.weight(v);
        if (w == 0) throw ValidationError("zero-weight vertex " + std::to_string(v) + " in the cluster union");
        if (w_c == 0) throw ValidationError("cluster with no external edges");
        const Weight ratio = w / w_c;
        if (first || ratio < eps) eps = ratio;
        first = false;
    }
    ThinLayer layer;
    for (const auto& [v, w_c] : wc) {
        layer.layer_weight[v] = eps * w_c;
        if (g.weight(v) == layer.layer_weight[v]) layer.deleted.insert(v);
    }
    layer.alpha = Weight(4 * BigInt(cc.capacity()));
    return layer;
}

// w(v) = edeg(v): under delta(G) >= 6c and mu(G) < c every cover is a
// 4-approximation for this weighting.
inline std::map<Vertex, long long> edge_degree_weighting(const WeightedMultigraph& g) {
    std::map<Vertex, long long> out;
    for (Vertex v : g.vertices()) out[v] = g.edge_degree(v);
    return out;
}

// Residual graph after peeling a layer: weights w - w^o, vertices whose
// residual reaches zero removed.
inline WeightedMultigraph subtract_layer(const WeightedMultigraph& g, const ThinLayer& layer) {
    WeightedMultigraph out = g;
    VertexSet zeroed;
    for (Vertex v : g.vertices()) {
        const Weight residual = g.weight(v) - layer.at(v);
        if (residual < 0) throw ValidationError("layer exceeds vertex weight at " + std::to_string(v));
        if (residual == 0)
            zeroed.insert(v);
        else
            out.set_weight(v, residual);
    }
    for (Vertex v : layer.deleted)
        if (!zeroed.count(v)) throw ValidationError("deleted vertex with nonzero residual");
    if (zeroed.empty()) throw ValidationError("layer is nowhere tight");
    return out.delete_vertices(zeroed);
}

}  // namespace bondc
