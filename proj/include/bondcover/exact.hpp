#pragma once

#include <optional>
#include <utility>

#include "bondcover/detect.hpp"
#include "bondcover/graph.hpp"

namespace bondc {

struct SearchBudget {
    long long max_nodes = 10'000'000;
};

struct CoverResult {
    VertexSet cover;
    Weight weight = 0;
};

namespace detail {

inline bool lex_less(const VertexSet& a, const VertexSet& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

class ExactCoverSearch {
public:
    ExactCoverSearch(int c, const SearchBudget& budget) : c_(c), budget_(budget) {}

    CoverResult run(const WeightedMultigraph& g) {
        best_.reset();
        nodes_ = 0;
        VertexSet chosen;
        recurse(g, chosen, Weight(0));
        return *best_;
    }

private:
    void recurse(const WeightedMultigraph& g, VertexSet& chosen, const Weight& acc) {
        if (++nodes_ > budget_.max_nodes)
            throw BudgetError("exact cover search exceeded " + std::to_string(budget_.max_nodes) + " nodes");
        if (best_ && acc > best_->weight) return;
        const auto model = find_theta_model(g, c_);
        if (!model) {
            if (!best_ || acc < best_->weight || (acc == best_->weight && lex_less(chosen, best_->cover)))
                best_ = CoverResult{chosen, acc};
            return;
        }
        // Any cover must hit this model; minimizing it narrows the branching.
        const ThetaModel minimal = minimize_model(g, *model);
        for (Vertex v : minimal.vertex_set()) {
            const Weight next = acc + g.weight(v);
            if (best_ && next > best_->weight) continue;
            chosen.insert(v);
            recurse(g.delete_vertex(v), chosen, next);
            chosen.erase(v);
        }
    }

    int c_;
    SearchBudget budget_;
    long long nodes_ = 0;
    std::optional<CoverResult> best_;
};

}  // namespace detail

// Minimum-weight set S with g - S theta_c-minor-free.  Exact; ties among
// optimal covers are broken toward the lexicographically smallest identifier
// set among inclusion-minimal optima.  Raises BudgetError instead of running
// unbounded.
inline CoverResult exact_cover(const WeightedMultigraph& g, int c, const SearchBudget& budget = {}) {
    if (c < 1) throw ValidationError("order must be positive");
    detail::ExactCoverSearch search(c, budget);
    return search.run(g);
}

// A c-outgrowth (K, u, v) presented with its anchored graph K^{(u,v)}: the
// subgraph induced on K and the anchors with all u-v edges removed.
struct AnchoredOutgrowth {
    WeightedMultigraph anchored;
    VertexSet component;
    Vertex u = 0;
    Vertex v = 0;
};

// Minimum-weight T_i inside V(K) such that K^{(u,v)} - T_i has no
// theta_{i+1}-model separating u and v.  Computed by adding c parallel u-v
// edges, giving the anchors prohibitively large weights, and covering order
// c + i + 1 exactly.
inline CoverResult constrained_cover(const AnchoredOutgrowth& og, int i, int c, const SearchBudget& budget = {}) {
    if (i < 0 || i >= c) throw ValidationError("constrained cover index out of range");
    WeightedMultigraph star = og.anchored;
    star.add_edge(og.u, og.v, c);
    Weight big = 1;
    for (Vertex x : og.component) big += star.weight(x);
    star.set_weight(og.u, big);
    star.set_weight(og.v, big);
    CoverResult res = exact_cover(star, c + i + 1, budget);
    if (res.cover.count(og.u) || res.cover.count(og.v))
        throw Error("internal: constrained cover touched an anchor");
    Weight true_weight = 0;
    for (Vertex x : res.cover) true_weight += og.anchored.weight(x);
    return {res.cover, true_weight};
}

}  // namespace bondc
