#include <doctest.h>

#include <sstream>

#include "mpg/errors.hpp"
#include "mpg/graph.hpp"
#include "oracle.hpp"

using namespace mpg;

namespace {

std::set<oracle_test::StrEdge> edge_strings(const PermGraph& g) {
    std::set<oracle_test::StrEdge> out;
    for (const auto& e : g.graph.edges()) out.emplace(g.graph.name(e.u), g.graph.name(e.v));
    return out;
}

std::vector<std::set<int>> adjacency_of(const Graph& g) {
    std::vector<std::set<int>> nb(g.order());
    for (const auto& e : g.edges()) {
        nb[e.u].insert(static_cast<int>(e.v));
        nb[e.v].insert(static_cast<int>(e.u));
    }
    return nb;
}

}  // namespace

TEST_CASE("star and pancake graphs agree with the naive construction") {
    for (auto [k, l] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 1}, {4, 1}, {2, 4}}) {
        CAPTURE(k);
        CAPTURE(l);
        CHECK(edge_strings(build_graph({k, l}, GeneratorFamily::star())) == oracle_test::naive_edges(k, l, false));
        CHECK(edge_strings(build_graph({k, l}, GeneratorFamily::pancake())) == oracle_test::naive_edges(k, l, true));
    }
}

TEST_CASE("ST(2,2) is the 6-cycle in the stated order") {
    const auto g = build_graph({2, 2}, GeneratorFamily::star());
    const std::vector<std::string> order{"0011", "1001", "0101", "1100", "0110", "1010"};
    CHECK(g.graph.size() == 6);
    for (std::size_t i = 0; i < 6; ++i) {
        const auto a = *g.graph.find_vertex(order[i]);
        const auto b = *g.graph.find_vertex(order[(i + 1) % 6]);
        CHECK(g.graph.adjacent(a, b));
    }
}

TEST_CASE("metrics of small instances") {
    const auto st23 = analyze(build_graph({2, 3}, GeneratorFamily::star()).graph);
    CHECK(st23.vertices == 20);
    CHECK(st23.regular);
    CHECK(st23.degree_histogram.begin()->first == 3);
    CHECK(st23.bipartite);
    CHECK(st23.girth == 6);
    CHECK(st23.connected);

    const auto st32 = analyze(build_graph({3, 2}, GeneratorFamily::star()).graph);
    CHECK(st32.vertices == 90);
    CHECK(st32.edges == 180);
    CHECK(st32.regular);
    CHECK(st32.degree_histogram.begin()->first == 4);

    const auto st21 = analyze(build_graph({2, 1}, GeneratorFamily::star()).graph);
    CHECK(st21.girth == kInfiniteGirth);

    const auto pc32 = analyze(build_graph({3, 2}, GeneratorFamily::pancake()).graph);
    CHECK(pc32.regular);
    CHECK(pc32.degree_histogram.begin()->first == 4);
}

TEST_CASE("parallel build is deterministic") {
    const auto a = build_graph({4, 2}, GeneratorFamily::star());
    setenv("MPG_THREADS", "1", 1);
    const auto b = build_graph({4, 2}, GeneratorFamily::star());
    unsetenv("MPG_THREADS");
    REQUIRE(a.graph.size() == b.graph.size());
    for (EdgeId e = 0; e < a.graph.size(); ++e) {
        CHECK(a.graph.edge(e).u == b.graph.edge(e).u);
        CHECK(a.graph.edge(e).v == b.graph.edge(e).v);
    }
}

TEST_CASE("girth and triangles on reference graphs") {
    CHECK(girth(cycle_graph(7)) == 7);
    CHECK(girth(hypercube(4)) == 4);
    CHECK(girth(complete_bipartite(2, 3)) == 4);
    CHECK(girth(complete_graph(4)) == 3);
    CHECK(has_triangle(complete_graph(3)));
    CHECK_FALSE(has_triangle(hypercube(3)));
    // Petersen graph
    std::vector<Edge> e;
    for (VertexId i = 0; i < 5; ++i) {
        e.push_back({i, (i + 1) % 5, {}});
        e.push_back({i, i + 5, {}});
        e.push_back({i + 5, (i + 2) % 5 + 5, {}});
    }
    CHECK(girth(Graph::from_edges(10, e)) == 5);
}

TEST_CASE("odd closed walk is a genuine odd closed walk") {
    const auto g = complete_graph(5);
    const auto w = odd_closed_walk(g);
    REQUIRE(w.has_value());
    CHECK(w->size() % 2 == 1);
    for (std::size_t i = 0; i < w->size(); ++i) CHECK(g.adjacent((*w)[i], (*w)[(i + 1) % w->size()]));
    CHECK_FALSE(odd_closed_walk(hypercube(3)).has_value());
}

TEST_CASE("six-cycle enumeration matches the brute-force count") {
    for (auto [k, l] : {std::pair{2, 2}, {3, 2}, {2, 3}}) {
        const auto g = build_graph({k, l}, GeneratorFamily::star());
        CHECK(six_cycles(g.graph).size() == oracle_test::count_six_cycles(adjacency_of(g.graph)));
    }
    CHECK(six_cycles(build_graph({3, 2}, GeneratorFamily::star()).graph).size() == 90);
    for (const auto& c : six_cycles(hypercube(3))) {
        CHECK(c[0] == *std::min_element(c.begin(), c.end()));
        CHECK(c[1] < c[5]);
    }
}

TEST_CASE("subgraphs track their origins") {
    const auto g = cycle_graph(6);
    const auto s = subgraph(g, {0}, {*g.find_edge(2, 3)});
    CHECK(s.graph.order() == 5);
    CHECK(s.graph.size() == 3);
    for (EdgeId e = 0; e < s.graph.size(); ++e) {
        const auto& pe = g.edge(s.edge_origin[e]);
        CHECK(pe.u == s.origin[s.graph.edge(e).u]);
        CHECK(pe.v == s.origin[s.graph.edge(e).v]);
    }
    CHECK(components(s.graph).size() == 2);
}

TEST_CASE("isomorphism agrees with brute force on small graphs") {
    const auto q3 = hypercube(3);
    const auto st22 = build_graph({2, 2}, GeneratorFamily::star()).graph;
    const auto c6 = cycle_graph(6);
    const auto k33 = complete_bipartite(3, 3);
    std::vector<Edge> prism_e;
    for (VertexId i = 0; i < 3; ++i) {
        prism_e.push_back({i, (i + 1) % 3, {}});
        prism_e.push_back({i + 3, (i + 1) % 3 + 3, {}});
        prism_e.push_back({i, i + 3, {}});
    }
    const auto prism = Graph::from_edges(6, prism_e);
    const std::vector<const Graph*> graphs{&st22, &c6, &k33, &prism};
    for (auto* a : graphs)
        for (auto* b : graphs) {
            const auto m = isomorphism(*a, *b);
            CHECK(m.has_value() == oracle_test::brute_isomorphic(adjacency_of(*a), adjacency_of(*b)));
            if (m) CHECK(is_isomorphism(*a, *b, *m));
        }
    CHECK(isomorphism(q3, q3).has_value());
    CHECK_FALSE(isomorphism(q3, complete_bipartite(4, 4)).has_value());
}

TEST_CASE("components of ST(4,2) minus Sigma_7 are ST(3,2) copies") {
    const auto g = build_graph({4, 2}, GeneratorFamily::star());
    const auto ref = build_graph({3, 2}, GeneratorFamily::star());
    VertexSet sigma;
    std::vector<EdgeId> e7;
    for (VertexId v = 0; v < g.order(); ++v)
        if (repeat_position(g.vertex(v), g.params) == 7) sigma.push_back(v);
    for (EdgeId e = 0; e < g.graph.size(); ++e)
        if (g.graph.edge(e).labels.front() == 7) e7.push_back(e);
    const auto comps = components(subgraph(g.graph, sigma, e7).graph);
    REQUIRE(!comps.empty());
    const auto m = isomorphism(comps.front().graph, ref.graph);
    REQUIRE(m.has_value());
    CHECK(is_isomorphism(comps.front().graph, ref.graph, *m));
}

TEST_CASE("graph construction errors") {
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0, {}}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2, {}}}), std::invalid_argument);
    const auto merged = Graph::from_edges(2, {{0, 1, {1}}, {1, 0, {2}}});
    CHECK(merged.size() == 1);
    CHECK(merged.edge(0).labels == std::vector<int>{1, 2});
    CHECK_THROWS_AS(build_graph({9, 3}, GeneratorFamily::star()), InstanceTooLarge);
}

TEST_CASE("custom families") {
    std::istringstream in("# pi_3 = (1 2)\n3 1 2\n");
    const auto fam = read_custom_family(in);
    CHECK(fam.kind == GeneratorFamily::Kind::Custom);
    CHECK(fam.generator(3, 6) == std::vector<int>{3, 2, 1, 0, 4, 5});
    std::istringstream bad("2 1 1\n");
    CHECK_THROWS_AS(read_custom_family(bad).validate(6), std::invalid_argument);
    std::istringstream identity("");
    const auto id = build_graph({3, 2}, read_custom_family(identity));
    CHECK(id.graph.size() == build_graph({3, 2}, GeneratorFamily::star()).graph.size());
    CHECK(id.non_star_like.empty());
}

TEST_CASE("odd complete colouring reproduces the K_5 list") {
    const auto [k5, tc] = build_odd_complete_colored(2);
    const std::vector<std::pair<VertexId, VertexId>> order{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0},
                                                          {0, 2}, {1, 3}, {2, 4}, {3, 0}, {4, 1}};
    std::vector<int> colors;
    for (auto [a, b] : order) colors.push_back(tc.edge[*k5.find_edge(a, b)]);
    CHECK(colors == std::vector<int>{3, 4, 0, 1, 2, 1, 2, 3, 4, 0});
    for (VertexId v = 0; v < 5; ++v) CHECK(tc.vertex[v] == static_cast<int>(v));
}
