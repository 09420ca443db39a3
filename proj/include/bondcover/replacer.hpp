#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "bondcover/detect.hpp"
#include "bondcover/exact.hpp"
#include "bondcover/structure.hpp"

namespace bondc {

// Everything needed to undo one outgrowth replacement: the removed component,
// the gadget vertices x_1..x_{c-1} with weights w_1 <= ... <= w_{c-1}, and the
// constrained separators T_0..T_{c-1} with weights 0 = w_0 <= ... <= w_{c-1}.
struct ReplacementRecord {
    Vertex u = 0;
    Vertex v = 0;
    VertexSet removed;
    std::vector<Vertex> gadget;
    std::vector<Weight> gadget_weights;
    std::vector<VertexSet> separators;
    std::vector<Weight> separator_weights;

    VertexSet gadget_set() const { return VertexSet(gadget.begin(), gadget.end()); }
};

// Gadget skeleton on fresh vertices x_1..x_{c-1}: the path
// u, x_1, ..., x_{c-1}, v plus a chord (x_i, u) for each 2 <= i <= c-1.
inline void attach_gadget(WeightedMultigraph& g, const ReplacementRecord& rec) {
    const int n = static_cast<int>(rec.gadget.size());
    for (int i = 0; i < n; ++i) g.add_vertex(rec.gadget[i], rec.gadget_weights[i]);
    if (n == 0) return;
    g.add_edge(rec.u, rec.gadget.front());
    for (int i = 0; i + 1 < n; ++i) g.add_edge(rec.gadget[i], rec.gadget[i + 1]);
    g.add_edge(rec.gadget.back(), rec.v);
    for (int i = 1; i < n; ++i) g.add_edge(rec.gadget[i], rec.u);
}

// Rebuilds the replaced graph g' from the original graph and a record.
inline WeightedMultigraph apply_record(const WeightedMultigraph& g, const ReplacementRecord& rec) {
    WeightedMultigraph out = g.delete_vertices(rec.removed);
    attach_gadget(out, rec);
    return out;
}

// Substitutes a size >= c outgrowth by the (c-1)-vertex gadget whose weights
// are the constrained cover optima, preserving the optimal cover weight.
inline std::pair<WeightedMultigraph, ReplacementRecord> replace_outgrowth(const WeightedMultigraph& g,
                                                                          const Outgrowth& og, int c,
                                                                          const SearchBudget& budget = {}) {
    if (!is_outgrowth(g, og, c)) throw ValidationError("not a valid c-outgrowth");
    if (og.size() < static_cast<std::size_t>(c)) throw ValidationError("outgrowth smaller than c");

    const AnchoredOutgrowth anchored = to_anchored(g, og);
    ReplacementRecord rec;
    rec.u = og.u;
    rec.v = og.v;
    rec.removed = og.component;

    // T_i makes K^{(u,v)} with i extra anchor edges theta_c-minor-free, which
    // is the constrained cover against separating models of order c - i.
    for (int i = 0; i < c; ++i) {
        const CoverResult t = i == 0 ? CoverResult{} : constrained_cover(anchored, c - 1 - i, c, budget);
        rec.separators.push_back(t.cover);
        rec.separator_weights.push_back(t.weight);
    }
    for (int i = 1; i < c; ++i)
        if (rec.separator_weights[i] < rec.separator_weights[i - 1])
            throw Error("internal: separator weights not monotone");

    WeightedMultigraph out = g.delete_vertices(og.component);
    Vertex next = out.peek_next_id();
    for (int i = 1; i < c; ++i) {
        rec.gadget.push_back(next++);
        rec.gadget_weights.push_back(rec.separator_weights[i]);
    }
    attach_gadget(out, rec);
    return {out, rec};
}

namespace detail {

// Reverse-delete minimalization: drops vertices in decreasing weight (ties by
// identifier) while the set stays a cover.
inline VertexSet minimalize_cover(const WeightedMultigraph& g, int c, VertexSet s) {
    std::vector<Vertex> order(s.begin(), s.end());
    std::stable_sort(order.begin(), order.end(),
                     [&](Vertex a, Vertex b) { return g.weight(a) > g.weight(b) || (g.weight(a) == g.weight(b) && a < b); });
    for (Vertex v : order) {
        VertexSet cand = s;
        cand.erase(v);
        if (!find_theta_model(g.delete_vertices(cand), c)) s = std::move(cand);
    }
    return s;
}

}  // namespace detail

// Lifts a cover of the replaced graph back to one of the original graph of no
// larger weight: minimalize, drop the gadget, and when neither anchor is in
// the cover add the separator matching the residual separation order.
inline VertexSet lift_solution(const WeightedMultigraph& g, const ReplacementRecord& rec, const VertexSet& s_prime,
                               int c) {
    const WeightedMultigraph replaced = apply_record(g, rec);
    for (Vertex v : s_prime)
        if (!replaced.has_vertex(v)) throw ValidationError("solution vertex " + std::to_string(v) + " not in replaced graph");
    if (find_theta_model(replaced.delete_vertices(s_prime), c))
        throw ValidationError("input set is not a cover of the replaced graph");

    const VertexSet minimal = detail::minimalize_cover(replaced, c, s_prime);
    VertexSet lifted;
    const VertexSet gadget = rec.gadget_set();
    for (Vertex v : minimal)
        if (!gadget.count(v)) lifted.insert(v);

    if (minimal.count(rec.u) || minimal.count(rec.v)) return lifted;

    VertexSet drop = gadget;
    drop.insert(minimal.begin(), minimal.end());
    const WeightedMultigraph rest = replaced.delete_vertices(drop);
    const int ell = max_separating_theta(rest, rec.u, rec.v, c);
    lifted.insert(rec.separators[ell].begin(), rec.separators[ell].end());
    return lifted;
}

}  // namespace bondc
