#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "bondcover/graph.hpp"

namespace bondc {

// Two disjoint connected vertex sets crossed by at least `order` edges.
struct ThetaModel {
    VertexSet x_side;
    VertexSet y_side;
    int order = 1;

    VertexSet vertex_set() const {
        VertexSet out = x_side;
        out.insert(y_side.begin(), y_side.end());
        return out;
    }
    std::size_t size() const { return x_side.size() + y_side.size(); }
};

inline long long crossing_multiplicity(const WeightedMultigraph& g, const VertexSet& x, const VertexSet& y) {
    long long sum = 0;
    for (Vertex v : x)
        for (const auto& [nb, m] : g.neighbors(v))
            if (y.count(nb)) sum += m;
    return sum;
}

inline bool is_valid_model(const WeightedMultigraph& g, const ThetaModel& m) {
    if (m.order < 1 || m.x_side.empty() || m.y_side.empty()) return false;
    for (Vertex v : m.x_side)
        if (m.y_side.count(v) || !g.has_vertex(v)) return false;
    for (Vertex v : m.y_side)
        if (!g.has_vertex(v)) return false;
    if (!g.is_connected_set(m.x_side) || !g.is_connected_set(m.y_side)) return false;
    return crossing_multiplicity(g, m.x_side, m.y_side) >= m.order;
}

namespace detail {

// Exhaustive search for a bipartition (A, B) of one connected component with
// both sides inducing connected subgraphs and crossing multiplicity >= order.
// A model of order c exists in the component iff such a bipartition exists
// (every model extends to a bond).  Branches on boundary vertices in
// identifier order, A before B, so the first hit is deterministic.
class BipartitionSearch {
public:
    BipartitionSearch(const WeightedMultigraph& g, const std::vector<Vertex>& comp, int order)
        : g_(g), comp_(comp), order_(order) {
        for (Vertex v : comp_) side_[v] = Unassigned;
        for (Vertex v : comp_)
            for (const auto& [nb, m] : g_.neighbors(v))
                if (v < nb && side_.count(nb)) potential_ += m;
    }

    // pin_a / pin_b are pre-assigned vertices (either may be absent).
    std::optional<std::pair<VertexSet, VertexSet>> run(std::optional<Vertex> pin_a, std::optional<Vertex> pin_b) {
        if (pin_a) assign(*pin_a, SideA);
        if (pin_b) assign(*pin_b, SideB);
        if (!pin_a && !pin_b && !comp_.empty()) assign(comp_.front(), SideA);
        if (search()) return std::make_pair(found_a_, found_b_);
        return std::nullopt;
    }

private:
    enum Side : char { Unassigned = 0, SideA = 1, SideB = 2 };

    void assign(Vertex v, Side s) {
        side_[v] = s;
        ++assigned_;
        for (const auto& [nb, m] : g_.neighbors(v)) {
            const auto it = side_.find(nb);
            if (it == side_.end()) continue;
            if (it->second == Unassigned) continue;
            potential_ -= m;
            if (it->second != s) crossing_ += m;
        }
    }

    void unassign(Vertex v) {
        const Side s = side_[v];
        side_[v] = Unassigned;
        --assigned_;
        for (const auto& [nb, m] : g_.neighbors(v)) {
            const auto it = side_.find(nb);
            if (it == side_.end()) continue;
            if (it->second == Unassigned) continue;
            potential_ += m;
            if (it->second != s) crossing_ -= m;
        }
    }

    // A side is still completable iff all its vertices lie in one component
    // of the graph induced on (side ∪ unassigned).
    bool side_completable(Side s) const {
        Vertex start = -1;
        std::size_t side_count = 0;
        for (const auto& [v, sv] : side_)
            if (sv == s) {
                start = v;
                ++side_count;
            }
        if (side_count <= 1) return true;
        VertexSet seen{start};
        std::vector<Vertex> stack{start};
        std::size_t reached = 1;
        while (!stack.empty()) {
            const Vertex v = stack.back();
            stack.pop_back();
            for (const auto& [nb, m] : g_.neighbors(v)) {
                const auto it = side_.find(nb);
                if (it == side_.end()) continue;
                if (it->second != s && it->second != Unassigned) continue;
                if (!seen.insert(nb).second) continue;
                if (it->second == s) ++reached;
                stack.push_back(nb);
            }
        }
        return reached == side_count;
    }

    std::optional<Vertex> pick_branch_vertex() const {
        // Smallest unassigned vertex adjacent to an assigned one.
        for (const auto& [v, sv] : side_) {
            if (sv != Unassigned) continue;
            for (const auto& [nb, m] : g_.neighbors(v)) {
                const auto it = side_.find(nb);
                if (it != side_.end() && it->second != Unassigned) return v;
            }
        }
        // No assigned vertex yet, or remaining vertices are isolated from the
        // assigned part (possible only if the component were disconnected).
        for (const auto& [v, sv] : side_)
            if (sv == Unassigned) return v;
        return std::nullopt;
    }

    bool search() {
        if (crossing_ + potential_ < order_) return false;
        if (!side_completable(SideA) || !side_completable(SideB)) return false;
        if (assigned_ == comp_.size()) {
            if (crossing_ < order_) return false;
            found_a_.clear();
            found_b_.clear();
            bool has_a = false, has_b = false;
            for (const auto& [v, sv] : side_) {
                if (sv == SideA) {
                    found_a_.insert(v);
                    has_a = true;
                } else {
                    found_b_.insert(v);
                    has_b = true;
                }
            }
            return has_a && has_b;
        }
        const Vertex v = *pick_branch_vertex();
        for (Side s : {SideA, SideB}) {
            assign(v, s);
            if (search()) return true;
            unassign(v);
        }
        return false;
    }

    const WeightedMultigraph& g_;
    std::vector<Vertex> comp_;
    int order_;
    std::map<Vertex, Side> side_;
    std::size_t assigned_ = 0;
    long long crossing_ = 0;
    long long potential_ = 0;
    VertexSet found_a_, found_b_;
};

}  // namespace detail

// Exact detection: returns a model of the given order if one exists, in a
// deterministic vertex-identifier order; absence certifies that the graph is
// theta_c-minor-free.
inline std::optional<ThetaModel> find_theta_model(const WeightedMultigraph& g, int c) {
    if (c < 1) throw ValidationError("order must be positive");
    for (const auto& comp : g.components()) {
        if (comp.size() < 2) continue;
        const WeightedMultigraph sub = g.induced(comp);
        // Sufficient pre-check: a theta_c-minor-free multigraph has at most
        // 2c|V| edges, so a denser component must contain a model.
        const bool guaranteed = sub.total_multiplicity() > 2LL * c * static_cast<long long>(comp.size());
        std::vector<Vertex> order(comp.begin(), comp.end());
        detail::BipartitionSearch search(sub, order, c);
        if (auto hit = search.run(std::nullopt, std::nullopt))
            return ThetaModel{hit->first, hit->second, c};
        if (guaranteed) throw Error("internal: dense component without a model");
    }
    return std::nullopt;
}

// Inclusion-minimizes a model while keeping every vertex of `keep`: after the
// call, no single vertex outside `keep` can be dropped from its side without
// breaking connectivity or the crossing count.
inline ThetaModel minimize_model_keeping(const WeightedMultigraph& g, ThetaModel m, const VertexSet& keep) {
    if (!is_valid_model(g, m)) throw ValidationError("invalid theta-model");
    bool changed = true;
    while (changed) {
        changed = false;
        for (Vertex v : m.vertex_set()) {
            if (keep.count(v)) continue;
            ThetaModel cand = m;
            if (cand.x_side.count(v))
                cand.x_side.erase(v);
            else
                cand.y_side.erase(v);
            if (is_valid_model(g, cand)) {
                m = std::move(cand);
                changed = true;
                break;
            }
        }
    }
    return m;
}

inline ThetaModel minimize_model(const WeightedMultigraph& g, const ThetaModel& m) {
    return minimize_model_keeping(g, m, {});
}

// Extends a model to a bond: a bipartition (X', V \ X') of the host whose
// crossing edges form a minimal cut of size >= order.  Every vertex of the
// model's component is absorbed into the side where it has a neighbor.
inline std::pair<VertexSet, VertexSet> model_to_bond(const WeightedMultigraph& g, const ThetaModel& m) {
    if (!is_valid_model(g, m)) throw ValidationError("invalid theta-model");
    VertexSet x = m.x_side;
    VertexSet y = m.y_side;
    VertexSet comp;
    for (const auto& c : g.components())
        if (c.count(*x.begin())) {
            comp = c;
            break;
        }
    VertexSet rest;
    for (Vertex v : comp)
        if (!x.count(v) && !y.count(v)) rest.insert(v);
    while (!rest.empty()) {
        bool progressed = false;
        for (Vertex v : rest) {
            bool near_x = false, near_y = false;
            for (const auto& [nb, mm] : g.neighbors(v)) {
                if (x.count(nb)) near_x = true;
                if (y.count(nb)) near_y = true;
            }
            if (near_x || near_y) {
                (near_x ? x : y).insert(v);
                rest.erase(v);
                progressed = true;
                break;
            }
        }
        if (!progressed) throw Error("internal: component absorption stalled");
    }
    VertexSet complement;
    for (Vertex v : g.vertices())
        if (!x.count(v)) complement.insert(v);
    return {x, complement};
}

// A theta_i-model with u in the X side and v in the Y side, if one exists.
inline std::optional<ThetaModel> find_separating_model(const WeightedMultigraph& g, Vertex u, Vertex v, int i) {
    if (u == v) throw ValidationError("separating model requires distinct vertices");
    if (i < 1) throw ValidationError("order must be positive");
    g.weight(u);
    g.weight(v);
    for (const auto& comp : g.components()) {
        if (!comp.count(u)) continue;
        if (!comp.count(v)) return std::nullopt;  // different components cross no edges
        const WeightedMultigraph sub = g.induced(comp);
        std::vector<Vertex> order(comp.begin(), comp.end());
        detail::BipartitionSearch search(sub, order, i);
        if (auto hit = search.run(u, v)) return ThetaModel{hit->first, hit->second, i};
        return std::nullopt;
    }
    return std::nullopt;
}

// Maximum ell < c such that a theta_ell-model separates u and v; 0 when u and
// v are disconnected.
inline int max_separating_theta(const WeightedMultigraph& g, Vertex u, Vertex v, int c) {
    for (int ell = c - 1; ell >= 1; --ell)
        if (find_separating_model(g, u, v, ell)) return ell;
    return 0;
}

}  // namespace bondc
