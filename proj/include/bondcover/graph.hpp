#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "bondcover/errors.hpp"
#include "bondcover/rational.hpp"

namespace bondc {

using Vertex = int;
using VertexSet = std::set<Vertex>;

// Loopless multigraph with exact rational vertex weights and positive integer
// edge multiplicities.  Vertex identifiers are stable: operations that derive
// a new graph (induced subgraph, deletion, contraction) keep the identifier
// counter of the host, so freshly allocated identifiers never collide with
// any identifier used earlier in the derivation chain.
class WeightedMultigraph {
public:
    WeightedMultigraph() = default;

    Vertex add_vertex(const Weight& w = Weight(0)) {
        const Vertex v = next_id_++;
        add_vertex(v, w);
        return v;
    }

    void add_vertex(Vertex v, const Weight& w = Weight(0)) {
        if (w < 0) throw ValidationError("negative weight for vertex " + std::to_string(v));
        if (weight_.count(v)) throw ValidationError("duplicate vertex " + std::to_string(v));
        weight_[v] = w;
        adj_[v];
        next_id_ = std::max(next_id_, v + 1);
    }

    // Adds `mult` to the multiplicity of {u, v}.  Loops are rejected.
    void add_edge(Vertex u, Vertex v, int mult = 1) {
        if (u == v) throw ValidationError("loop at vertex " + std::to_string(u));
        if (mult < 1) throw ValidationError("non-positive edge multiplicity");
        require_vertex(u);
        require_vertex(v);
        adj_[u][v] += mult;
        adj_[v][u] += mult;
    }

    bool has_vertex(Vertex v) const { return weight_.count(v) != 0; }

    std::size_t vertex_count() const { return weight_.size(); }

    std::vector<Vertex> vertices() const {
        std::vector<Vertex> out;
        out.reserve(weight_.size());
        for (const auto& [v, w] : weight_) out.push_back(v);
        return out;
    }

    VertexSet vertex_set() const {
        VertexSet out;
        for (const auto& [v, w] : weight_) out.insert(v);
        return out;
    }

    const Weight& weight(Vertex v) const {
        const auto it = weight_.find(v);
        if (it == weight_.end()) throw ValidationError("unknown vertex " + std::to_string(v));
        return it->second;
    }

    void set_weight(Vertex v, const Weight& w) {
        if (w < 0) throw ValidationError("negative weight for vertex " + std::to_string(v));
        require_vertex(v);
        weight_[v] = w;
    }

    const std::map<Vertex, Weight>& weights() const { return weight_; }

    Weight total_weight(const VertexSet& s) const {
        Weight sum = 0;
        for (Vertex v : s) sum += weight(v);
        return sum;
    }

    int edge_multiplicity(Vertex u, Vertex v) const {
        const auto it = adj_.find(u);
        if (it == adj_.end()) return 0;
        const auto jt = it->second.find(v);
        return jt == it->second.end() ? 0 : jt->second;
    }

    // Neighbors of v with multiplicities, in identifier order.
    const std::map<Vertex, int>& neighbors(Vertex v) const {
        const auto it = adj_.find(v);
        if (it == adj_.end()) throw ValidationError("unknown vertex " + std::to_string(v));
        return it->second;
    }

    // Distinct edges as (u, v, multiplicity) with u < v, sorted.
    std::vector<std::tuple<Vertex, Vertex, int>> edges() const {
        std::vector<std::tuple<Vertex, Vertex, int>> out;
        for (const auto& [u, nbrs] : adj_)
            for (const auto& [v, m] : nbrs)
                if (u < v) out.emplace_back(u, v, m);
        return out;
    }

    std::size_t distinct_edge_count() const {
        std::size_t n = 0;
        for (const auto& [u, nbrs] : adj_)
            for (const auto& [v, m] : nbrs)
                if (u < v) ++n;
        return n;
    }

    // |E(G)| counted with multiplicity.
    long long total_multiplicity() const {
        long long sum = 0;
        for (const auto& [u, nbrs] : adj_)
            for (const auto& [v, m] : nbrs)
                if (u < v) sum += m;
        return sum;
    }

    // Sum of multiplicities of edges incident to v.
    long long edge_degree(Vertex v) const {
        long long sum = 0;
        for (const auto& [w, m] : neighbors(v)) sum += m;
        return sum;
    }

    // Number of distinct neighbors of v.
    int vertex_degree(Vertex v) const { return static_cast<int>(neighbors(v).size()); }

    // delta(G); 0 for the empty graph.
    long long min_edge_degree() const {
        long long best = -1;
        for (const auto& [v, w] : weight_) {
            const long long d = edge_degree(v);
            if (best < 0 || d < best) best = d;
        }
        return best < 0 ? 0 : best;
    }

    // mu(G); 0 for an edgeless graph.
    int max_multiplicity() const {
        int best = 0;
        for (const auto& [u, nbrs] : adj_)
            for (const auto& [v, m] : nbrs) best = std::max(best, m);
        return best;
    }

    std::optional<std::pair<Vertex, Vertex>> max_multiplicity_edge() const {
        std::optional<std::pair<Vertex, Vertex>> best;
        int best_m = 0;
        for (const auto& [u, nbrs] : adj_)
            for (const auto& [v, m] : nbrs)
                if (u < v && m > best_m) {
                    best_m = m;
                    best = {u, v};
                }
        return best;
    }

    WeightedMultigraph induced(const VertexSet& keep) const {
        WeightedMultigraph out;
        out.next_id_ = next_id_;
        for (Vertex v : keep) out.add_vertex(v, weight(v));
        for (Vertex v : keep)
            for (const auto& [w, m] : neighbors(v))
                if (v < w && keep.count(w)) out.add_edge(v, w, m);
        return out;
    }

    WeightedMultigraph delete_vertices(const VertexSet& drop) const {
        VertexSet keep;
        for (const auto& [v, w] : weight_)
            if (!drop.count(v)) keep.insert(v);
        return induced(keep);
    }

    WeightedMultigraph delete_vertex(Vertex v) const { return delete_vertices({v}); }

    // Removes every edge between u and v, keeping both vertices.
    WeightedMultigraph without_edges_between(Vertex u, Vertex v) const {
        require_vertex(u);
        require_vertex(v);
        WeightedMultigraph out = *this;
        out.adj_[u].erase(v);
        out.adj_[v].erase(u);
        return out;
    }

    // Ensures future fresh identifiers are at least `floor`.
    void reserve_ids(Vertex floor) { next_id_ = std::max(next_id_, floor); }

    // Connected components as vertex sets, ordered by smallest member.
    std::vector<VertexSet> components() const {
        std::vector<VertexSet> out;
        VertexSet seen;
        for (const auto& [start, w] : weight_) {
            if (seen.count(start)) continue;
            VertexSet comp;
            std::vector<Vertex> stack{start};
            seen.insert(start);
            while (!stack.empty()) {
                const Vertex v = stack.back();
                stack.pop_back();
                comp.insert(v);
                for (const auto& [nb, m] : neighbors(v))
                    if (!seen.count(nb)) {
                        seen.insert(nb);
                        stack.push_back(nb);
                    }
            }
            out.push_back(std::move(comp));
        }
        return out;
    }

    bool is_connected_set(const VertexSet& s) const {
        if (s.empty()) return false;
        VertexSet seen;
        std::vector<Vertex> stack{*s.begin()};
        seen.insert(*s.begin());
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (const auto& [nb, m] : neighbors(v))
                if (s.count(nb) && !seen.count(nb)) {
                    seen.insert(nb);
                    stack.push_back(nb);
                }
        }
        return seen.size() == s.size();
    }

    // Distinct neighbors of the set s outside s.
    VertexSet neighborhood(const VertexSet& s) const {
        VertexSet out;
        for (Vertex v : s)
            for (const auto& [nb, m] : neighbors(v))
                if (!s.count(nb)) out.insert(nb);
        return out;
    }

    // Total multiplicity of edges with exactly one endpoint in c.
    long long ext_edges(const VertexSet& c) const {
        long long sum = 0;
        for (Vertex v : c) {
            require_vertex(v);
            for (const auto& [nb, m] : neighbors(v))
                if (!c.count(nb)) sum += m;
        }
        return sum;
    }

    // Blocks: isolated vertices, bridges and biconnected components, as vertex
    // sets.  Every edge lies in exactly one block; cut vertices repeat.
    std::vector<VertexSet> blocks() const {
        std::vector<VertexSet> out;
        std::map<Vertex, int> depth, low;
        std::vector<std::pair<Vertex, Vertex>> edge_stack;

        struct Frame {
            Vertex v;
            Vertex parent;
            std::map<Vertex, int>::const_iterator it, end;
        };

        for (const auto& [root, wr] : weight_) {
            if (depth.count(root)) continue;
            if (neighbors(root).empty()) {
                out.push_back({root});
                continue;
            }
            std::vector<Frame> stack;
            depth[root] = 0;
            low[root] = 0;
            stack.push_back({root, -1, neighbors(root).begin(), neighbors(root).end()});
            while (!stack.empty()) {
                Frame& f = stack.back();
                if (f.it != f.end) {
                    const Vertex nb = f.it->first;
                    ++f.it;
                    if (!depth.count(nb)) {
                        edge_stack.emplace_back(f.v, nb);
                        depth[nb] = depth[f.v] + 1;
                        low[nb] = depth[nb];
                        stack.push_back({nb, f.v, neighbors(nb).begin(), neighbors(nb).end()});
                    } else if (nb != f.parent && depth.at(nb) < depth.at(f.v)) {
                        edge_stack.emplace_back(f.v, nb);
                        low[f.v] = std::min(low[f.v], depth.at(nb));
                    }
                } else {
                    const Frame done = f;
                    stack.pop_back();
                    if (!stack.empty()) {
                        Frame& up = stack.back();
                        low[up.v] = std::min(low[up.v], low[done.v]);
                        if (low[done.v] >= depth[up.v]) {
                            VertexSet block;
                            while (true) {
                                const auto [a, b] = edge_stack.back();
                                edge_stack.pop_back();
                                block.insert(a);
                                block.insert(b);
                                if (a == up.v && b == done.v) break;
                            }
                            out.push_back(std::move(block));
                        }
                    }
                }
            }
        }
        std::sort(out.begin(), out.end());
        return out;
    }

    Vertex peek_next_id() const { return next_id_; }

    bool operator==(const WeightedMultigraph& other) const {
        return weight_ == other.weight_ && adj_ == other.adj_;
    }

private:
    void require_vertex(Vertex v) const {
        if (!weight_.count(v)) throw ValidationError("unknown vertex " + std::to_string(v));
    }

    std::map<Vertex, Weight> weight_;
    std::map<Vertex, std::map<Vertex, int>> adj_;
    Vertex next_id_ = 1;
};

// Pairwise-disjoint non-empty connected vertex sets of a host graph.
class ClusterCollection {
public:
    ClusterCollection(const WeightedMultigraph& host, std::vector<VertexSet> clusters)
        : clusters_(std::move(clusters)) {
        VertexSet seen;
        for (const auto& c : clusters_) {
            if (c.empty()) throw ValidationError("empty cluster");
            for (Vertex v : c) {
                if (!host.has_vertex(v)) throw ValidationError("cluster vertex " + std::to_string(v) + " not in host");
                if (!seen.insert(v).second) throw ValidationError("overlapping clusters at vertex " + std::to_string(v));
            }
            if (!host.is_connected_set(c)) throw ValidationError("disconnected cluster");
        }
    }

    const std::vector<VertexSet>& clusters() const { return clusters_; }

    std::size_t size() const { return clusters_.size(); }

    std::size_t capacity() const {
        std::size_t cap = 0;
        for (const auto& c : clusters_) cap = std::max(cap, c.size());
        return cap;
    }

    VertexSet union_set() const {
        VertexSet out;
        for (const auto& c : clusters_) out.insert(c.begin(), c.end());
        return out;
    }

private:
    std::vector<VertexSet> clusters_;
};

struct ContractionResult {
    WeightedMultigraph graph;                 // G/C, restricted to the union of the clusters
    std::map<Vertex, VertexSet> origin;       // contracted vertex -> original cluster
};

// Contracts each cluster of cc to a single fresh vertex.  Multiplicities of
// parallel edges between clusters are summed; loops are suppressed.  The
// contracted vertex inherits the sum of the cluster's weights.
inline ContractionResult contract_clusters(const WeightedMultigraph& g, const ClusterCollection& cc) {
    // Re-validate against this host: cc may have been built elsewhere.
    ClusterCollection checked(g, cc.clusters());

    ContractionResult res;
    std::map<Vertex, std::size_t> cluster_of;
    for (std::size_t i = 0; i < checked.clusters().size(); ++i)
        for (Vertex v : checked.clusters()[i]) cluster_of[v] = i;

    std::vector<Vertex> rep(checked.clusters().size());
    WeightedMultigraph out;
    Vertex fresh = g.peek_next_id();
    out.reserve_ids(fresh);
    for (std::size_t i = 0; i < checked.clusters().size(); ++i) {
        Weight sum = 0;
        for (Vertex v : checked.clusters()[i]) sum += g.weight(v);
        rep[i] = fresh++;
        out.add_vertex(rep[i], sum);
        res.origin[rep[i]] = checked.clusters()[i];
    }
    for (std::size_t i = 0; i < checked.clusters().size(); ++i)
        for (Vertex v : checked.clusters()[i])
            for (const auto& [nb, m] : g.neighbors(v)) {
                const auto it = cluster_of.find(nb);
                if (it == cluster_of.end() || it->second == i) continue;  // outside the union, or a loop
                if (rep[i] < rep[it->second]) out.add_edge(rep[i], rep[it->second], m);
            }
    res.graph = std::move(out);
    return res;
}

}  // namespace bondc
