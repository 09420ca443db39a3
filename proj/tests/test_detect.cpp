#include <catch2/catch_amalgamated.hpp>

#include "bondcover/detect.hpp"
#include "oracles.hpp"

using namespace bondc;

namespace {

WeightedMultigraph theta(int c) {
    WeightedMultigraph g;
    g.add_vertex(1, Weight(1));
    g.add_vertex(2, Weight(1));
    g.add_edge(1, 2, c);
    return g;
}

WeightedMultigraph path(int n) {
    WeightedMultigraph g;
    for (int v = 1; v <= n; ++v) g.add_vertex(v, Weight(1));
    for (int v = 1; v < n; ++v) g.add_edge(v, v + 1);
    return g;
}

WeightedMultigraph cycle(int n) {
    auto g = path(n);
    g.add_edge(n, 1);
    return g;
}

WeightedMultigraph complete(int n) {
    WeightedMultigraph g;
    for (int v = 1; v <= n; ++v) g.add_vertex(v, Weight(1));
    for (int u = 1; u <= n; ++u)
        for (int v = u + 1; v <= n; ++v) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("find_theta_model basics") {
    SECTION("theta_3 itself") {
        const auto m = find_theta_model(theta(3), 3);
        REQUIRE(m);
        REQUIRE(m->vertex_set() == VertexSet{1, 2});
    }
    SECTION("a forest has no 2-bond") { REQUIRE_FALSE(find_theta_model(path(5), 2)); }
    SECTION("diamond has a theta_3") {
        auto g = complete(4).without_edges_between(3, 4);
        const auto m = find_theta_model(g, 3);
        REQUIRE(m);
        REQUIRE(is_valid_model(g, *m));
    }
    SECTION("found models are always valid") {
        std::mt19937_64 rng(7);
        for (int trial = 0; trial < 60; ++trial) {
            const auto g = oracle::random_connected_multigraph(rng, 2, 9, 3);
            for (int c = 1; c <= 4; ++c) {
                const auto m = find_theta_model(g, c);
                if (m) {
                    REQUIRE(m->order == c);
                    REQUIRE(is_valid_model(g, *m));
                }
            }
        }
    }
}

TEST_CASE("detection agrees with brute-force bond enumeration") {
    std::mt19937_64 rng(42);
    for (int trial = 0; trial < 250; ++trial) {
        const auto g = oracle::random_connected_multigraph(rng, 2, 7, 3);
        for (int c = 2; c <= 4; ++c) {
            REQUIRE(find_theta_model(g, c).has_value() == oracle::has_c_bond(g, c));
        }
    }
}

TEST_CASE("edge-count witness when no model exists") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 100; ++trial) {
        const auto g = oracle::random_connected_multigraph(rng, 2, 8, 3);
        for (int c = 2; c <= 4; ++c)
            if (!find_theta_model(g, c))
                REQUIRE(g.total_multiplicity() <= 2LL * c * static_cast<long long>(g.vertex_count()));
    }
}

TEST_CASE("model monotonicity in the order") {
    std::mt19937_64 rng(13);
    for (int trial = 0; trial < 60; ++trial) {
        const auto g = oracle::random_connected_multigraph(rng, 2, 8, 3);
        for (int c = 4; c >= 2; --c)
            if (find_theta_model(g, c))
                REQUIRE(find_theta_model(g, c - 1));
    }
}

TEST_CASE("minimize_model") {
    SECTION("already minimal stays fixed") {
        const auto g = cycle(3);
        const ThetaModel m{{1}, {2, 3}, 2};
        REQUIRE(minimize_model(g, m).vertex_set() == m.vertex_set());
    }
    SECTION("K4 model shrinks to three vertices") {
        const auto g = complete(4);
        const ThetaModel m{{1}, {2, 3, 4}, 2};
        const auto slim = minimize_model(g, m);
        REQUIRE(slim.size() == 3);
        REQUIRE(is_valid_model(g, slim));
    }
    SECTION("single-vertex removals all break the result") {
        std::mt19937_64 rng(3);
        for (int trial = 0; trial < 40; ++trial) {
            const auto g = oracle::random_connected_multigraph(rng, 3, 8, 2);
            const auto m = find_theta_model(g, 2);
            if (!m) continue;
            const auto slim = minimize_model(g, *m);
            for (Vertex v : slim.vertex_set()) {
                ThetaModel cand = slim;
                if (cand.x_side.count(v))
                    cand.x_side.erase(v);
                else
                    cand.y_side.erase(v);
                REQUIRE_FALSE(is_valid_model(g, cand));
            }
        }
    }
    SECTION("invalid input is rejected") {
        REQUIRE_THROWS_AS(minimize_model(path(3), ThetaModel{{1}, {3}, 2}), ValidationError);
    }
}

TEST_CASE("model_to_bond") {
    SECTION("theta_3") {
        const auto g = theta(3);
        const auto [x, y] = model_to_bond(g, ThetaModel{{1}, {2}, 3});
        REQUIRE(x == VertexSet{1});
        REQUIRE(y == VertexSet{2});
    }
    SECTION("triangle") {
        const auto g = cycle(3);
        const auto [x, y] = model_to_bond(g, ThetaModel{{1}, {2, 3}, 2});
        REQUIRE(x == VertexSet{1});
        REQUIRE(y == VertexSet{2, 3});
        REQUIRE(crossing_multiplicity(g, x, y) == 2);
    }
    SECTION("outputs are minimal cuts: no proper nonempty subset is a cut") {
        std::mt19937_64 rng(17);
        for (int trial = 0; trial < 25; ++trial) {
            const auto g = oracle::random_connected_multigraph(rng, 3, 9, 2);
            const auto m = find_theta_model(g, 2);
            if (!m) continue;
            const auto [x, rest] = model_to_bond(g, *m);
            REQUIRE(crossing_multiplicity(g, x, rest) >= 2);

            using EdgeSet = std::set<std::pair<Vertex, Vertex>>;
            const auto cut_of = [&](const VertexSet& a) {
                EdgeSet f;
                for (Vertex v : a)
                    for (const auto& [nb, mm] : g.neighbors(v))
                        if (!a.count(nb)) f.insert({std::min(v, nb), std::max(v, nb)});
                return f;
            };
            const EdgeSet f = cut_of(x);
            REQUIRE_FALSE(f.empty());
            // enumerate all bipartitions and collect their cuts
            const auto verts = g.vertices();
            std::set<EdgeSet> cuts;
            for (std::uint32_t bits = 0; bits < (1u << (verts.size() - 1)); ++bits) {
                VertexSet a{verts[0]};
                for (std::size_t i = 1; i < verts.size(); ++i)
                    if (bits & (1u << (i - 1))) a.insert(verts[i]);
                const EdgeSet cand = cut_of(a);
                if (!cand.empty()) cuts.insert(cand);
            }
            for (const EdgeSet& cand : cuts) {
                const bool proper_subset =
                    cand.size() < f.size() && std::includes(f.begin(), f.end(), cand.begin(), cand.end());
                REQUIRE_FALSE(proper_subset);
            }
        }
    }
}

TEST_CASE("find_separating_model") {
    SECTION("different components") {
        WeightedMultigraph g;
        for (int v = 1; v <= 4; ++v) g.add_vertex(v, Weight(1));
        g.add_edge(1, 2);
        g.add_edge(3, 4);
        REQUIRE_FALSE(find_separating_model(g, 1, 3, 1));
    }
    SECTION("path of length two") {
        const auto g = path(3);
        const auto m = find_separating_model(g, 1, 3, 1);
        REQUIRE(m);
        REQUIRE(m->x_side.count(1));
        REQUIRE(m->y_side.count(3));
        REQUIRE(is_valid_model(g, *m));
    }
    SECTION("4-cycle separates opposite vertices with order 2") {
        const auto g = cycle(4);
        const auto m = find_separating_model(g, 1, 3, 2);
        REQUIRE(m);
        REQUIRE(m->x_side.count(1));
        REQUIRE(m->y_side.count(3));
        REQUIRE(crossing_multiplicity(g, m->x_side, m->y_side) >= 2);
    }
    SECTION("u == v is rejected") { REQUIRE_THROWS_AS(find_separating_model(path(3), 1, 1, 1), ValidationError); }
}

TEST_CASE("max_separating_theta") {
    SECTION("disconnected pair gives 0") {
        WeightedMultigraph g;
        g.add_vertex(1, Weight(1));
        g.add_vertex(2, Weight(1));
        REQUIRE(max_separating_theta(g, 1, 2, 3) == 0);
    }
    SECTION("path gives 1") { REQUIRE(max_separating_theta(path(3), 1, 3, 3) == 1); }
    SECTION("4-cycle gives 2") { REQUIRE(max_separating_theta(cycle(4), 1, 3, 4) == 2); }
}
