#include <doctest.h>

#include "mpg/domination.hpp"
#include "mpg/errors.hpp"
#include "mpg/structure.hpp"
#include "oracle.hpp"

using namespace mpg;

TEST_CASE("six-cycle census of ST(3,2)") {
    const auto g = build_graph({3, 2}, GeneratorFamily::star());
    const auto census = classify_six_cycles(g.graph, sigma_total_coloring(g));
    CHECK(census.cycles.size() == 90);
    CHECK(census.type1 == 30);
    CHECK(census.type2 == 60);
    CHECK(census.other == 0);
    const auto c234 = census.find(SixCycleType::Type1, {2, 3, 4});
    REQUIRE(c234.has_value());
    for (int i = 0; i < 3; ++i) CHECK(c234->edge_colors[i] == c234->edge_colors[i + 3]);
}

TEST_CASE("ST(2,2) is one Type1 cycle on colours 1, 2, 3") {
    const auto g = build_graph({2, 2}, GeneratorFamily::star());
    const auto census = classify_six_cycles(g.graph, sigma_total_coloring(g));
    REQUIRE(census.cycles.size() == 1);
    CHECK(census.cycles.front().type == SixCycleType::Type1);
    CHECK(census.cycles.front().colors == std::vector<int>{1, 2, 3});
}

TEST_CASE("classification of hand-coloured hexagons") {
    const auto c6 = cycle_graph(6);
    TotalColoring alt{{0, 0, 0, 0, 0, 0}, {}, {}};
    // edges of cycle_graph(6) in id order: (0,1) (0,5) (1,2) (2,3) (3,4) (4,5)
    alt.edge = {1, 2, 2, 1, 2, 1};
    const SixCycle cyc{0, 1, 2, 3, 4, 5};
    const auto c = classify_six_cycle(c6, alt, cyc);
    CHECK(c.type == SixCycleType::Type2);
    CHECK(c.colors == std::vector<int>{1, 2});
    alt.edge = {1, 3, 2, 3, 1, 2};
    CHECK(classify_six_cycle(c6, alt, cyc).type == SixCycleType::Type1);
    alt.edge = {1, 2, 2, 3, 1, 2};
    CHECK(classify_six_cycle(c6, alt, cyc).type == SixCycleType::Other);
}

TEST_CASE("chi items on ST(3,2)") {
    const auto g = build_graph({3, 2}, GeneratorFamily::star());
    const auto tc = sigma_total_coloring(g);
    const auto ref = build_graph({2, 2}, GeneratorFamily::star());
    const auto r = theorem_chi_suite(g.graph, tc, &ref.graph, 12);
    CHECK(r.h == 6);
    CHECK(r.hypothesis);
    CHECK(r.pass());
    REQUIRE(r.items.size() == 5);
    for (const auto& item : r.items) {
        CAPTURE(item.color);
        CHECK(item.class_size == 18);
        CHECK(item.components.size() == 12);
        for (const auto& c : item.components) {
            CHECK(c.vertices == 6);
            CHECK(c.isomorphic_to_reference == true);
        }
        // Independent recount: delete the class and its colour edges, then union-find the rest.
        std::vector<bool> dead(g.order(), false);
        for (VertexId v = 0; v < g.order(); ++v) dead[v] = tc.vertex[v] == item.color;
        std::vector<int> remap(g.order(), -1);
        int next = 0;
        for (VertexId v = 0; v < g.order(); ++v)
            if (!dead[v]) remap[v] = next++;
        std::vector<std::pair<int, int>> kept;
        for (EdgeId e = 0; e < g.graph.size(); ++e) {
            const auto& ed = g.graph.edge(e);
            if (dead[ed.u] || dead[ed.v] || tc.edge[e] == item.color) continue;
            kept.emplace_back(remap[ed.u], remap[ed.v]);
        }
        CHECK(oracle_test::component_sizes(static_cast<std::size_t>(next), kept) == std::vector<std::size_t>(12, 6));

        REQUIRE(item.odd_walk.has_value());
        const auto& w = *item.odd_walk;
        CHECK(w.size() % 2 == 1);
        // The walk lives in G minus the colour-c edges.
        for (std::size_t i = 0; i < w.size(); ++i) {
            const auto e = g.graph.find_edge(w[i], w[(i + 1) % w.size()]);
            REQUIRE(e.has_value());
            CHECK(tc.edge[*e] != item.color);
        }
    }
}

TEST_CASE("chi hypothesis fails on ST(2,2)") {
    const auto g = build_graph({2, 2}, GeneratorFamily::star());
    const auto r = theorem_chi_suite(g.graph, sigma_total_coloring(g));
    CHECK(r.h == 4);
    CHECK_FALSE(r.hypothesis);
}

TEST_CASE("toroidal assembly for k = 3") {
    const auto g = build_graph({3, 2}, GeneratorFamily::star());
    const auto tc = sigma_total_coloring(g);
    const auto a = toroidal_assembly(g, tc, 5, {1, 2, 3, 4});
    CHECK(a.type2_cycles == 24);
    CHECK(a.type1.size() == 12);
    CHECK(a.type1_disjoint);
    CHECK(a.departing_ok);
    CHECK(a.sigma_shape_ok == true);
    CHECK(a.sigma_degrees == std::map<std::size_t, std::size_t>{{4, 18}});
    CHECK(a.distance_ok);
    CHECK(a.pass());
    const auto sigma = sigma_set(g, 5);
    std::vector<std::set<int>> nb(g.order());
    for (const auto& e : g.graph.edges()) {
        nb[e.u].insert(static_cast<int>(e.v));
        nb[e.v].insert(static_cast<int>(e.u));
    }
    for (const auto& t : a.type1) {
        CHECK(t.leftover >= 1);
        CHECK(t.leftover <= 4);
        CHECK_FALSE(std::binary_search(t.cycle.colors.begin(), t.cycle.colors.end(), t.leftover));
        CHECK(t.landings.size() == 6);
        // Independent distance check among landings.
        for (std::size_t i = 0; i < t.landings.size(); ++i) {
            const auto d = oracle_test::bfs(nb, static_cast<int>(t.landings[i]));
            for (std::size_t j = i + 1; j < t.landings.size(); ++j) CHECK(d[t.landings[j]] >= 3);
        }
        for (auto v : t.landings) CHECK(std::binary_search(sigma.begin(), sigma.end(), v));
    }
    CHECK_THROWS_AS(toroidal_assembly(g, tc, 5, {1, 2, 3, 5}), std::invalid_argument);
}

TEST_CASE("augmenting ST(2,2) gives Q_3 with no efficient extension") {
    const auto g = build_graph({2, 2}, GeneratorFamily::star());
    const auto tc = sigma_total_coloring(g);
    const auto a = augment_supergraph(g.graph, tc, {se_set(g, 0), se_set(g, 1)}, 2);
    CHECK(a.graph.order() == 8);
    CHECK(a.new_edges == 6);
    CHECK(a.classes_disjoint);
    CHECK(a.classes_cover);
    CHECK(a.classes_dominate);
    CHECK_FALSE(a.extension_exists);
    CHECK(a.pass());
    CHECK(isomorphism(a.graph, hypercube(3)).has_value());

    const auto same = augment_supergraph(g.graph, tc, {}, 2);
    CHECK(same.graph.order() == g.order());
    CHECK(same.graph.size() == g.graph.size());
}
