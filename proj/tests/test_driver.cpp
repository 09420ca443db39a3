#include <catch2/catch_amalgamated.hpp>

#include "bondcover/driver.hpp"
#include "bondcover/exact.hpp"
#include "bondcover/generate.hpp"
#include "oracles.hpp"

using namespace bondc;

namespace {

WeightedMultigraph unit_triangle() {
    WeightedMultigraph g;
    for (int v = 1; v <= 3; ++v) g.add_vertex(v, Weight(1));
    g.add_edge(1, 2);
    g.add_edge(2, 3);
    g.add_edge(1, 3);
    return g;
}

}  // namespace

TEST_CASE("solve on a free input is a no-op") {
    WeightedMultigraph g;
    for (int v = 1; v <= 5; ++v) g.add_vertex(v, Weight(2));
    for (int v = 1; v < 5; ++v) g.add_edge(v, v + 1);
    const auto res = solve(g, SolveConfig::for_order(2));
    REQUIRE(res.cover.empty());
    REQUIRE(res.weight == 0);
    REQUIRE(res.trace.events.empty());
    REQUIRE(res.realized_alpha == 1);
}

TEST_CASE("solve picks the cheap endpoint of theta_3") {
    WeightedMultigraph g;
    g.add_vertex(1, Weight(5));
    g.add_vertex(2, Weight(1));
    g.add_edge(1, 2, 3);
    const auto res = solve(g, SolveConfig::for_order(3));
    REQUIRE(res.cover == VertexSet{2});
    REQUIRE(res.weight == 1);
    REQUIRE(res.weight == exact_cover(g, 3).weight);
}

TEST_CASE("zero-weight vertices are taken for free") {
    auto g = unit_triangle();
    g.set_weight(2, Weight(0));
    const auto res = solve(g, SolveConfig::for_order(2));
    REQUIRE(res.cover == VertexSet{2});
    REQUIRE(res.weight == 0);
    REQUIRE(res.trace.events.front().kind == TraceEvent::Kind::ZeroLayer);
}

TEST_CASE("reconstruct adds layer deletions back") {
    const auto g = unit_triangle();
    const auto res = solve(g, SolveConfig::for_order(2));
    REQUIRE(res.cover == VertexSet{1, 2, 3});  // the whole uniform layer is peeled
    REQUIRE(res.weight <= res.realized_alpha * exact_cover(g, 2).weight);
}

TEST_CASE("reverse delete prunes to an inclusion-minimal cover") {
    auto cfg = SolveConfig::for_order(2);
    cfg.reverse_delete = true;
    const auto res = solve(unit_triangle(), cfg);
    REQUIRE(res.cover.size() == 1);
    REQUIRE(res.weight == 1);

    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const auto g = oracle::random_connected_multigraph(rng, 3, 10, 2, true);
        const auto res2 = solve(g, cfg);
        for (Vertex v : res2.cover) {
            VertexSet smaller = res2.cover;
            smaller.erase(v);
            REQUIRE(find_theta_model(g.delete_vertices(smaller), 2));
        }
    }
}

TEST_CASE("traces replay, shrink strictly, and end free") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 25; ++trial) {
        const auto g = oracle::random_connected_multigraph(rng, 2, 10, 3, true);
        for (int c = 2; c <= 3; ++c) {
            const auto res = solve(g, SolveConfig::for_order(c));
            const auto chain = replay_chain(g, res.trace);
            REQUIRE(chain.size() == res.chain.size());
            for (std::size_t i = 0; i < chain.size(); ++i) REQUIRE(chain[i] == res.chain[i]);
            for (std::size_t i = 1; i < chain.size(); ++i)
                REQUIRE(chain[i].vertex_count() < chain[i - 1].vertex_count());
            REQUIRE_FALSE(find_theta_model(chain.back(), c));
            REQUIRE(verify_cover(g, c, res.cover));
        }
    }
}

TEST_CASE("ratio certificate holds on a random corpus") {
    std::mt19937_64 rng(2025);
    for (int trial = 0; trial < 30; ++trial) {
        const auto g = oracle::random_connected_multigraph(rng, 3, 11, 2, true);
        for (int c = 2; c <= 3; ++c) {
            const auto res = solve(g, SolveConfig::for_order(c));
            const auto opt = exact_cover(g, c);
            if (opt.weight == 0)
                REQUIRE(res.weight == 0);
            else
                REQUIRE(res.weight <= res.realized_alpha * opt.weight);
        }
    }
}

TEST_CASE("determinism") {
    const auto g = generate_gnp(10, 0.35, 99, 2);
    const auto a = solve(g, SolveConfig::for_order(2));
    const auto b = solve(g, SolveConfig::for_order(2));
    REQUIRE(a.cover == b.cover);
    REQUIRE(a.realized_alpha == b.realized_alpha);
    REQUIRE(a.trace.events.size() == b.trace.events.size());
    for (std::size_t i = 0; i < a.trace.events.size(); ++i) {
        REQUIRE(a.trace.events[i].kind == b.trace.events[i].kind);
        REQUIRE(a.trace.events[i].deleted == b.trace.events[i].deleted);
    }
}

TEST_CASE("verify_cover") {
    WeightedMultigraph g;
    g.add_vertex(1, Weight(1));
    g.add_vertex(2, Weight(1));
    g.add_edge(1, 2, 3);
    REQUIRE(verify_cover(g, 3, {1, 2}));
    REQUIRE_FALSE(verify_cover(g, 3, {}));
    REQUIRE_THROWS_AS(verify_cover(g, 3, {9}), ValidationError);
}

TEST_CASE("thin-layer conditions hold along every trace") {
    std::mt19937_64 rng(31337);
    for (int trial = 0; trial < 10; ++trial) {
        const auto g = oracle::random_connected_multigraph(rng, 3, 9, 2, true);
        const int c = 2;
        const auto res = solve(g, SolveConfig::for_order(c));
        for (std::size_t i = 0; i < res.trace.events.size(); ++i) {
            const auto& ev = res.trace.events[i];
            if (!ev.is_layer()) continue;
            const auto& before = res.chain[i];
            bool tight = false;
            for (Vertex v : before.vertices()) {
                REQUIRE(ev.layer.at(v) <= before.weight(v));
                if (ev.layer.at(v) == before.weight(v)) tight = true;
            }
            REQUIRE(tight);
            if (before.vertex_count() <= 9)
                for (const auto& s : oracle::enumerate_minimal_covers(before, c))
                    REQUIRE(ev.layer.total_over(s) * ev.layer.alpha >= ev.layer.total());
        }
    }
}
