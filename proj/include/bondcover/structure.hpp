#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "bondcover/detect.hpp"
#include "bondcover/exact.hpp"
#include "bondcover/graph.hpp"

namespace bondc {

// A component K of G - {u, v} whose neighborhood is exactly {u, v} and whose
// anchored graph K^{(u,v)} (all u-v edges removed) is theta_c-minor-free.
struct Outgrowth {
    VertexSet component;
    Vertex u = 0;
    Vertex v = 0;

    std::size_t size() const { return component.size(); }
    VertexSet closure() const {
        VertexSet out = component;
        out.insert(u);
        out.insert(v);
        return out;
    }
};

struct StructureParams {
    int t = 1;
    int k = 1;
    int r = 1;
    int model_bound = 1;

    // Practical defaults; the theoretical constants (k = c*t, r = (2c)^{2c}*k)
    // are far beyond desk scale and the decomposition falls back gracefully
    // when these smaller values miss the guarantee.
    static StructureParams defaults(int c) {
        StructureParams p;
        p.t = 8 * c;
        p.k = p.t;
        p.r = 4 * p.k;
        p.model_bound = 16 * c;
        return p;
    }
};

struct ThetaFree {};

struct StructureOutcome {
    std::variant<Outgrowth, ThetaModel, ClusterCollection, ThetaFree> value;

    bool is_outgrowth() const { return std::holds_alternative<Outgrowth>(value); }
    bool is_model() const { return std::holds_alternative<ThetaModel>(value); }
    bool is_clusters() const { return std::holds_alternative<ClusterCollection>(value); }
    bool is_theta_free() const { return std::holds_alternative<ThetaFree>(value); }

    const Outgrowth& outgrowth() const { return std::get<Outgrowth>(value); }
    const ThetaModel& model() const { return std::get<ThetaModel>(value); }
    const ClusterCollection& clusters() const { return std::get<ClusterCollection>(value); }
};

inline WeightedMultigraph anchored_graph(const WeightedMultigraph& g, const Outgrowth& og) {
    VertexSet keep = og.closure();
    return g.induced(keep).without_edges_between(og.u, og.v);
}

inline AnchoredOutgrowth to_anchored(const WeightedMultigraph& g, const Outgrowth& og) {
    return AnchoredOutgrowth{anchored_graph(g, og), og.component, og.u, og.v};
}

inline bool is_outgrowth(const WeightedMultigraph& g, const Outgrowth& og, int c) {
    if (og.u == og.v || !g.has_vertex(og.u) || !g.has_vertex(og.v)) return false;
    if (og.component.empty() || og.component.count(og.u) || og.component.count(og.v)) return false;
    for (Vertex x : og.component)
        if (!g.has_vertex(x)) return false;
    if (!g.is_connected_set(og.component)) return false;
    VertexSet nbhd = g.neighborhood(og.component);
    if (nbhd != VertexSet{og.u, og.v}) return false;
    return !find_theta_model(anchored_graph(g, og), c);
}

// First c-outgrowth of size >= min_size in pair-scan order, if any.
inline std::optional<Outgrowth> find_outgrowth(const WeightedMultigraph& g, int c, std::size_t min_size) {
    const std::vector<Vertex> verts = g.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            const Vertex x = verts[i], y = verts[j];
            const WeightedMultigraph rest = g.delete_vertices({x, y});
            for (const auto& comp : rest.components()) {
                if (comp.size() < min_size) continue;
                if (g.neighborhood(comp) != VertexSet{x, y}) continue;
                Outgrowth og{comp, x, y};
                if (!find_theta_model(anchored_graph(g, og), c)) return og;
            }
        }
    return std::nullopt;
}

// All c-outgrowths with 1 <= |K| <= max_size, in pair-scan order.
inline std::vector<Outgrowth> enumerate_outgrowths(const WeightedMultigraph& g, int c, std::size_t max_size) {
    std::vector<Outgrowth> out;
    if (max_size == 0) return out;
    const std::vector<Vertex> verts = g.vertices();
    for (std::size_t i = 0; i < verts.size(); ++i)
        for (std::size_t j = i + 1; j < verts.size(); ++j) {
            const Vertex x = verts[i], y = verts[j];
            const WeightedMultigraph rest = g.delete_vertices({x, y});
            for (const auto& comp : rest.components()) {
                if (comp.size() > max_size) continue;
                if (g.neighborhood(comp) != VertexSet{x, y}) continue;
                Outgrowth og{comp, x, y};
                if (!find_theta_model(anchored_graph(g, og), c)) out.push_back(std::move(og));
            }
        }
    return out;
}

// Strips theta_c-minor-free blocks, iterated to a fixpoint, so that every
// block of the result contains a theta_c-model.  A free block loses its edges
// and its non-cut vertices; cut vertices stay with their other blocks.  Any
// model of order >= 2 lies inside a single block, so presence is preserved.
inline WeightedMultigraph strip_theta_free_blocks(const WeightedMultigraph& g, int c) {
    WeightedMultigraph work = g;
    while (true) {
        const auto blocks = work.blocks();
        std::map<Vertex, int> block_count;
        for (const auto& b : blocks)
            for (Vertex v : b) ++block_count[v];
        VertexSet drop_vertices;
        std::vector<VertexSet> free_blocks;
        for (const auto& b : blocks) {
            if (find_theta_model(work.induced(b), c)) continue;
            free_blocks.push_back(b);
            for (Vertex v : b)
                if (block_count[v] == 1) drop_vertices.insert(v);
        }
        if (free_blocks.empty()) return work;
        WeightedMultigraph next;
        next.reserve_ids(work.peek_next_id());
        for (Vertex v : work.vertices())
            if (!drop_vertices.count(v)) next.add_vertex(v, work.weight(v));
        for (const auto& [u, v, m] : work.edges()) {
            if (drop_vertices.count(u) || drop_vertices.count(v)) continue;
            bool in_free = false;
            for (const auto& b : free_blocks)
                if (b.count(u) && b.count(v)) in_free = true;
            if (!in_free) next.add_edge(u, v, m);
        }
        work = std::move(next);
    }
}

// One replaced small outgrowth: V(K) was removed and `multiplicity` parallel
// u-v edges were added.  The anchored graph is kept for expanding models and
// clusters of the reduced graph back to the original one.
struct ReductionRecord {
    VertexSet component;
    Vertex u = 0;
    Vertex v = 0;
    int multiplicity = 0;
    WeightedMultigraph anchored;
};

struct OutgrowthReduction {
    WeightedMultigraph reduced;
    std::vector<ReductionRecord> records;
};

// Replaces a complete collection of maximal small outgrowths by weighted
// anchor edges, repeating until no small outgrowth is left.  The added
// multiplicity i_K is the least i for which the constrained cover is empty,
// i.e. the largest order of a model separating the anchors inside K^{(u,v)}.
inline OutgrowthReduction reduce_to_1_reduced(const WeightedMultigraph& g, int c, const SearchBudget& budget = {}) {
    if (auto big = find_outgrowth(g, c, static_cast<std::size_t>(c)))
        throw ValidationError("graph has a c-outgrowth of size " + std::to_string(big->size()) +
                              " at anchors {" + std::to_string(big->u) + "," + std::to_string(big->v) + "}");
    OutgrowthReduction res;
    res.reduced = g;
    if (c <= 1) return res;

    while (true) {
        const auto all = enumerate_outgrowths(res.reduced, c, static_cast<std::size_t>(c) - 1);
        if (all.empty()) break;

        std::vector<Outgrowth> chosen;
        VertexSet used_members, used_anchors;
        for (const auto& og : all) {
            // Maximal: no other small outgrowth whose closure properly contains this one.
            const VertexSet cl = og.closure();
            bool maximal = true;
            for (const auto& other : all) {
                const VertexSet ocl = other.closure();
                if (ocl.size() <= cl.size()) continue;
                if (std::includes(ocl.begin(), ocl.end(), cl.begin(), cl.end())) {
                    maximal = false;
                    break;
                }
            }
            if (!maximal) continue;
            // Completeness, strengthened so the replacement stays well defined:
            // components pairwise disjoint, nobody's anchor inside a removed
            // component and no component touching a kept anchor.
            bool clash = false;
            for (Vertex x : og.component)
                if (used_members.count(x) || used_anchors.count(x)) clash = true;
            if (used_members.count(og.u) || used_members.count(og.v)) clash = true;
            if (clash) continue;
            chosen.push_back(og);
            used_members.insert(og.component.begin(), og.component.end());
            used_anchors.insert(og.u);
            used_anchors.insert(og.v);
        }
        if (chosen.empty()) break;

        for (const auto& og : chosen) {
            const AnchoredOutgrowth anchored = to_anchored(res.reduced, og);
            int ik = c - 1;
            for (int i = 0; i < c; ++i)
                if (constrained_cover(anchored, i, c, budget).cover.empty()) {
                    ik = i;
                    break;
                }
            res.records.push_back({og.component, og.u, og.v, ik, anchored.anchored});
            res.reduced = res.reduced.delete_vertices(og.component);
            if (ik >= 1) res.reduced.add_edge(og.u, og.v, ik);
        }
        // A large outgrowth may emerge from the added edges; stop reducing then.
        if (find_outgrowth(res.reduced, c, static_cast<std::size_t>(c))) break;
    }
    return res;
}

namespace detail {

// Grafts the separating structure of one replaced outgrowth back into model
// sides that use its anchor edge.
inline void expand_through_record(const ReductionRecord& rec, VertexSet& x, VertexSet& y) {
    const bool ux = x.count(rec.u), uy = y.count(rec.u);
    const bool vx = x.count(rec.v), vy = y.count(rec.v);
    if (rec.multiplicity < 1) return;
    if ((ux && vy) || (uy && vx)) {
        auto sep = find_separating_model(rec.anchored, rec.u, rec.v, rec.multiplicity);
        if (!sep) throw Error("internal: recorded separation order not realizable");
        const ThetaModel slim = minimize_model_keeping(rec.anchored, *sep, {rec.u, rec.v});
        VertexSet& u_side = ux ? x : y;
        VertexSet& v_side = ux ? y : x;
        u_side.insert(slim.x_side.begin(), slim.x_side.end());
        v_side.insert(slim.y_side.begin(), slim.y_side.end());
    } else if ((ux && vx) || (uy && vy)) {
        // Same side: the side's connectivity may rely on the anchor edge;
        // splice in a u-v connection through K.
        auto sep = find_separating_model(rec.anchored, rec.u, rec.v, 1);
        if (!sep) throw Error("internal: recorded connectivity not realizable");
        const ThetaModel slim = minimize_model_keeping(rec.anchored, *sep, {rec.u, rec.v});
        VertexSet& side = ux ? x : y;
        side.insert(slim.x_side.begin(), slim.x_side.end());
        side.insert(slim.y_side.begin(), slim.y_side.end());
    }
}

}  // namespace detail

// Converts a model of the reduced graph into a model of the graph the
// records were produced from, processing replacements newest first.
inline ThetaModel expand_model(const std::vector<ReductionRecord>& records, const ThetaModel& reduced_model) {
    ThetaModel out = reduced_model;
    for (auto it = records.rbegin(); it != records.rend(); ++it)
        detail::expand_through_record(*it, out.x_side, out.y_side);
    return out;
}

// Converts a cluster collection of the reduced graph into one of the original
// graph: anchor edges inside a cluster are replaced by a connecting path
// through the outgrowth, and anchor edges between two clusters by the two
// sides of a separating model, preserving contracted edge-degrees.
inline std::vector<VertexSet> expand_clusters(const std::vector<ReductionRecord>& records,
                                              std::vector<VertexSet> clusters) {
    for (auto it = records.rbegin(); it != records.rend(); ++it) {
        const ReductionRecord& rec = *it;
        if (rec.multiplicity < 1) continue;
        int cu = -1, cv = -1;
        for (std::size_t i = 0; i < clusters.size(); ++i) {
            if (clusters[i].count(rec.u)) cu = static_cast<int>(i);
            if (clusters[i].count(rec.v)) cv = static_cast<int>(i);
        }
        if (cu < 0 || cv < 0) continue;
        if (cu == cv) {
            auto sep = find_separating_model(rec.anchored, rec.u, rec.v, 1);
            if (!sep) throw Error("internal: recorded connectivity not realizable");
            const ThetaModel slim = minimize_model_keeping(rec.anchored, *sep, {rec.u, rec.v});
            clusters[cu].insert(slim.x_side.begin(), slim.x_side.end());
            clusters[cu].insert(slim.y_side.begin(), slim.y_side.end());
        } else {
            auto sep = find_separating_model(rec.anchored, rec.u, rec.v, rec.multiplicity);
            if (!sep) throw Error("internal: recorded separation order not realizable");
            const ThetaModel slim = minimize_model_keeping(rec.anchored, *sep, {rec.u, rec.v});
            clusters[cu].insert(slim.x_side.begin(), slim.x_side.end());
            clusters[cv].insert(slim.y_side.begin(), slim.y_side.end());
        }
    }
    return clusters;
}

// Greedy collection of pairwise disjoint induced multipaths on exactly r
// vertices (a multipath is a connected graph whose simple skeleton is a path).
inline std::vector<VertexSet> greedy_multipaths(const WeightedMultigraph& g, int r) {
    std::vector<VertexSet> out;
    if (r < 1) return out;
    WeightedMultigraph remaining = g;
    while (remaining.vertex_count() >= static_cast<std::size_t>(r)) {
        std::vector<Vertex> path;
        bool found = false;
        const auto extend = [&](auto&& self, Vertex tail) -> bool {
            if (static_cast<int>(path.size()) == r) return true;
            for (const auto& [nb, m] : remaining.neighbors(tail)) {
                bool induced_ok = true;
                for (std::size_t idx = 0; idx + 1 < path.size(); ++idx)
                    if (remaining.edge_multiplicity(nb, path[idx]) > 0) {
                        induced_ok = false;
                        break;
                    }
                if (!induced_ok || std::find(path.begin(), path.end(), nb) != path.end()) continue;
                path.push_back(nb);
                if (self(self, nb)) return true;
                path.pop_back();
            }
            return false;
        };
        for (Vertex start : remaining.vertices()) {
            path = {start};
            if (r == 1 || extend(extend, start)) {
                found = true;
                break;
            }
        }
        if (!found) break;
        VertexSet taken(path.begin(), path.end());
        out.push_back(taken);
        remaining = remaining.delete_vertices(taken);
    }
    return out;
}

// Greedy cluster augmentation: given a partition {A, B} of Z with mu(Z) < c,
// A-degrees >= k, B independent with vertex-degrees >= 2, builds clusters
// {a} ∪ B_a of size <= k+1 whose contraction has minimum edge-degree >= k/c.
inline ClusterCollection merge_clusters(const WeightedMultigraph& z, const VertexSet& a_side, const VertexSet& b_side,
                                        int k, int c) {
    if (k < 1 || c < 1) throw ValidationError("merge_clusters requires positive k and c");
    if (z.max_multiplicity() >= c) throw ValidationError("merge_clusters requires mu(Z) < c");
    for (Vertex v : z.vertices())
        if (a_side.count(v) + b_side.count(v) != 1) throw ValidationError("A,B must partition V(Z)");
    for (Vertex v : a_side) {
        if (!z.has_vertex(v)) throw ValidationError("A vertex not in Z");
        if (z.edge_degree(v) < k) throw ValidationError("A vertex with edge-degree below k");
    }
    for (Vertex v : b_side) {
        if (!z.has_vertex(v)) throw ValidationError("B vertex not in Z");
        if (z.vertex_degree(v) < 2) throw ValidationError("B vertex with vertex-degree below 2");
        for (const auto& [nb, m] : z.neighbors(v))
            if (b_side.count(nb)) throw ValidationError("B is not independent");
    }

    std::map<Vertex, Vertex> owner;  // assigned vertex -> the a it belongs to
    for (Vertex a : a_side) owner[a] = a;
    std::map<Vertex, VertexSet> b_of;
    for (Vertex a : a_side) b_of[a];

    const auto cross_edges = [&](Vertex a) {
        long long cross = 0;
        VertexSet own = b_of[a];
        own.insert(a);
        for (Vertex x : own)
            for (const auto& [nb, m] : z.neighbors(x)) {
                const auto it = owner.find(nb);
                if (it != owner.end() && it->second != a) cross += m;
            }
        return cross;
    };

    for (Vertex a : a_side) {
        if (cross_edges(a) * c >= k) continue;
        long long p = 0;
        for (const auto& [nb, m] : z.neighbors(a)) {
            const auto it = owner.find(nb);
            if (it != owner.end() && it->second != a) p += m;
        }
        const long long need = k - p;
        std::vector<Vertex> picked;
        long long got = 0;
        for (const auto& [nb, m] : z.neighbors(a)) {
            if (owner.count(nb) || !b_side.count(nb)) continue;
            picked.push_back(nb);
            got += m;
            if (got >= need) break;
        }
        if (got < need) throw Error("internal: augmentation pool exhausted");
        // Inclusion-minimal: drop members whose multiplicity is not needed.
        for (std::size_t idx = 0; idx < picked.size();) {
            const long long m = z.edge_multiplicity(a, picked[idx]);
            if (got - m >= need) {
                got -= m;
                picked.erase(picked.begin() + static_cast<long>(idx));
            } else {
                ++idx;
            }
        }
        for (Vertex b : picked) {
            owner[b] = a;
            b_of[a].insert(b);
        }
    }

    std::vector<VertexSet> clusters;
    for (Vertex a : a_side) {
        VertexSet cl = b_of[a];
        cl.insert(a);
        clusters.push_back(std::move(cl));
    }
    ClusterCollection cc(z, clusters);
    if (cc.capacity() > static_cast<std::size_t>(k) + 1) throw Error("internal: cluster capacity exceeded k+1");
    return cc;
}

struct DecomposeFailure {
    std::string reason;
};

using DecomposeResult = std::variant<ThetaModel, ClusterCollection, DecomposeFailure>;

// The decomposition of a 1-reduced graph: a small theta_c-model whenever one
// of the short-circuits fires, otherwise a cluster collection whose
// contraction has minimum edge-degree >= t, or a failure report when the
// configured (k, r) are too small for the guarantee.
inline DecomposeResult decompose_1_reduced(const WeightedMultigraph& g1, int c, const StructureParams& params) {
    if (find_outgrowth(g1, c, 1)) throw ValidationError("input graph is not 1-reduced");

    if (g1.max_multiplicity() >= c) {
        const auto [u, v] = *g1.max_multiplicity_edge();
        return ThetaModel{{u}, {v}, c};
    }

    const WeightedMultigraph h = strip_theta_free_blocks(g1, c);
    if (h.vertex_count() == 0) return DecomposeFailure{"theta_c-minor-free"};

    const int k = params.k, r = params.r, t = params.t;
    VertexSet w_set;
    for (Vertex v : h.vertices())
        if (h.edge_degree(v) >= k) w_set.insert(v);

    const WeightedMultigraph hw = h.delete_vertices(w_set);
    const std::vector<VertexSet> p_clusters = greedy_multipaths(hw, r);
    VertexSet p_union;
    for (const auto& p : p_clusters) p_union.insert(p.begin(), p.end());
    VertexSet wp = w_set;
    wp.insert(p_union.begin(), p_union.end());
    const std::vector<VertexSet> c_clusters = h.delete_vertices(wp).components();

    enum class Kind { W, P, C };
    std::vector<VertexSet> all_clusters;
    std::vector<Kind> kind;
    for (Vertex w : w_set) {
        all_clusters.push_back({w});
        kind.push_back(Kind::W);
    }
    for (const auto& p : p_clusters) {
        all_clusters.push_back(p);
        kind.push_back(Kind::P);
    }
    for (const auto& cc : c_clusters) {
        all_clusters.push_back(cc);
        kind.push_back(Kind::C);
    }
    const auto k0 = contract_clusters(h, ClusterCollection(h, all_clusters));
    std::map<Vertex, Kind> kind_of;
    {
        std::size_t idx = 0;
        for (const auto& [rep, origin] : k0.origin) kind_of[rep] = kind[idx++];
    }

    if (k0.graph.max_multiplicity() >= c) {
        const auto [a, b] = *k0.graph.max_multiplicity_edge();
        const ThetaModel m{k0.origin.at(a), k0.origin.at(b), c};
        return minimize_model(h, m);
    }

    VertexSet bad_union;
    std::vector<VertexSet> good_c;
    for (const auto& [rep, origin] : k0.origin) {
        if (kind_of.at(rep) != Kind::C) continue;
        const int deg = k0.graph.vertex_degree(rep);
        if (deg == 0) {
            // An isolated remainder component is a whole block-stripped
            // component, so it carries a model.
            auto m = find_theta_model(h.induced(origin), c);
            if (!m) throw Error("internal: isolated component without a model after stripping");
            return minimize_model(h.induced(origin), *m);
        }
        if (deg == 1) {
            const Vertex nb = k0.graph.neighbors(rep).begin()->first;
            if (kind_of.at(nb) == Kind::W) {
                VertexSet rel = origin;
                rel.insert(*k0.origin.at(nb).begin());
                auto m = find_theta_model(h.induced(rel), c);
                if (!m) throw Error("internal: pendant component on a heavy vertex without a model");
                return minimize_model(h.induced(rel), *m);
            }
            if (kind_of.at(nb) == Kind::C) throw Error("internal: adjacent remainder components");
            bad_union.insert(origin.begin(), origin.end());
            continue;
        }
        good_c.push_back(origin);
    }

    std::vector<VertexSet> cc1;
    std::vector<bool> cc1_is_b;
    for (Vertex w : w_set) {
        cc1.push_back({w});
        cc1_is_b.push_back(false);
    }
    for (const auto& p : p_clusters) {
        cc1.push_back(p);
        cc1_is_b.push_back(false);
    }
    for (const auto& gc : good_c) {
        cc1.push_back(gc);
        cc1_is_b.push_back(true);
    }
    if (cc1.empty()) return DecomposeFailure{"no clusters to merge"};

    const auto zc = contract_clusters(h, ClusterCollection(h, cc1));
    VertexSet a_reps, b_reps;
    {
        std::size_t idx = 0;
        for (const auto& [rep, origin] : zc.origin) {
            (cc1_is_b[idx++] ? b_reps : a_reps).insert(rep);
        }
    }

    if (zc.graph.max_multiplicity() >= c) {
        const auto [a, b] = *zc.graph.max_multiplicity_edge();
        const ThetaModel m{zc.origin.at(a), zc.origin.at(b), c};
        return minimize_model(h, m);
    }

    for (Vertex a : a_reps) {
        if (zc.graph.edge_degree(a) >= k) continue;
        // The white-vertex guarantee missed at these parameters.  Look for a
        // model inside the cluster together with its attached bad components.
        VertexSet rel = zc.origin.at(a);
        for (Vertex x : zc.origin.at(a))
            for (const auto& [nb, m] : h.neighbors(x))
                if (bad_union.count(nb)) {
                    for (const auto& comp : h.induced(bad_union).components())
                        if (comp.count(nb)) rel.insert(comp.begin(), comp.end());
                }
        auto m = find_theta_model(h.induced(rel), c);
        if (m) return minimize_model(h.induced(rel), *m);
        return DecomposeFailure{"cluster edge-degree below k at the configured parameters"};
    }

    const ClusterCollection cc2 = merge_clusters(zc.graph, a_reps, b_reps, k, c);
    std::vector<VertexSet> cc3;
    for (const auto& zcluster : cc2.clusters()) {
        VertexSet expanded;
        for (Vertex rep : zcluster) {
            const auto& origin = zc.origin.at(rep);
            expanded.insert(origin.begin(), origin.end());
        }
        cc3.push_back(std::move(expanded));
    }
    const ClusterCollection result(h, cc3);
    const auto check = contract_clusters(h, result);
    if (check.graph.vertex_count() == 0 || check.graph.min_edge_degree() < t)
        return DecomposeFailure{"contracted minimum edge-degree below t at the configured parameters"};
    return result;
}

// The four-way decomposition: certify theta_c-minor-freeness, hand out a large
// outgrowth, or reduce and decompose; a minimized model of the input graph is
// the fallback that keeps the solver progressing when the configured
// parameters are too small.
inline StructureOutcome structure(const WeightedMultigraph& g, int c, const StructureParams& params,
                                  const SearchBudget& budget = {}) {
    const auto any_model = find_theta_model(g, c);
    if (!any_model) return {ThetaFree{}};
    if (auto og = find_outgrowth(g, c, static_cast<std::size_t>(c))) return {*og};

    const auto fallback = [&]() -> StructureOutcome { return {minimize_model(g, *any_model)}; };

    OutgrowthReduction red = reduce_to_1_reduced(g, c, budget);
    if (find_outgrowth(red.reduced, c, 1)) return fallback();

    DecomposeResult dec = decompose_1_reduced(red.reduced, c, params);
    if (std::holds_alternative<DecomposeFailure>(dec)) return fallback();
    if (std::holds_alternative<ThetaModel>(dec)) {
        const ThetaModel expanded = expand_model(red.records, std::get<ThetaModel>(dec));
        if (!is_valid_model(g, expanded)) throw Error("internal: expanded model invalid");
        return {minimize_model(g, expanded)};
    }
    const auto& cc_reduced = std::get<ClusterCollection>(dec);
    std::vector<VertexSet> expanded = expand_clusters(red.records, cc_reduced.clusters());
    try {
        ClusterCollection cc(g, expanded);
        const auto check = contract_clusters(g, cc);
        if (check.graph.vertex_count() > 0 && check.graph.min_edge_degree() >= params.t) return {cc};
    } catch (const ValidationError&) {
    }
    return fallback();
}

}  // namespace bondc
