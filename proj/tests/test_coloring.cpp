#include <doctest.h>

#include "mpg/coloring.hpp"
#include "mpg/errors.hpp"

using namespace mpg;

namespace {

// Definition-level check: adjacent vertices, incident edges, and vertex/edge incidences all differ.
bool brute_total(const Graph& g, const TotalColoring& tc) {
    for (const auto& e : g.edges())
        if (tc.vertex[e.u] == tc.vertex[e.v]) return false;
    for (EdgeId a = 0; a < g.size(); ++a) {
        const auto& ea = g.edge(a);
        if (tc.edge[a] == tc.vertex[ea.u] || tc.edge[a] == tc.vertex[ea.v]) return false;
        for (EdgeId b = a + 1; b < g.size(); ++b) {
            const auto& eb = g.edge(b);
            const bool share = ea.u == eb.u || ea.u == eb.v || ea.v == eb.u || ea.v == eb.v;
            if (share && tc.edge[a] == tc.edge[b]) return false;
        }
    }
    return true;
}

}  // namespace

TEST_CASE("sigma colouring is total and efficient with 2k-1 colours") {
    for (int k = 2; k <= 4; ++k) {
        const auto g = build_graph({k, 2}, GeneratorFamily::star());
        const auto tc = sigma_total_coloring(g);
        CHECK(tc.palette.size() == static_cast<std::size_t>(2 * k - 1));
        const auto r = verify_coloring(g.graph, tc, ColoringMode::Efficient);
        CHECK(r.passed());
        CHECK(r.violation_count == 0);
        if (k <= 3) CHECK(brute_total(g.graph, tc));
    }
}

TEST_CASE("ST(2,2) sigma colouring matches the stated classes") {
    const auto g = build_graph({2, 2}, GeneratorFamily::star());
    const auto tc = sigma_total_coloring(g);
    auto color_of = [&](const char* s) { return tc.vertex[*g.graph.find_vertex(s)]; };
    auto edge_color = [&](const char* a, const char* b) {
        return tc.edge[*g.graph.find_edge(*g.graph.find_vertex(a), *g.graph.find_vertex(b))];
    };
    CHECK(color_of("0011") == 1);
    CHECK(color_of("1100") == 1);
    CHECK(color_of("0101") == 2);
    CHECK(color_of("1010") == 2);
    CHECK(color_of("0110") == 3);
    CHECK(color_of("1001") == 3);
    CHECK(edge_color("0101", "1001") == 1);
    CHECK(edge_color("0110", "1010") == 1);
    CHECK(edge_color("0110", "1100") == 2);
    CHECK(edge_color("0011", "1001") == 2);
    CHECK(edge_color("0011", "1010") == 3);
    CHECK(edge_color("0101", "1100") == 3);
}

TEST_CASE("K_5 example colouring is efficient") {
    const auto [k5, tc] = build_odd_complete_colored(2);
    CHECK(verify_coloring(k5, tc, ColoringMode::Efficient).passed());
    CHECK(brute_total(k5, tc));
    const auto [k7, tc7] = build_odd_complete_colored(3);
    CHECK(verify_coloring(k7, tc7, ColoringMode::Efficient).passed());
}

TEST_CASE("verifier reports clashes with witnesses") {
    const auto g = cycle_graph(4);
    TotalColoring tc{{1, 2, 1, 2}, {3, 3, 4, 5}, {1, 2, 3, 4, 5}};
    const auto r = verify_coloring(g, tc, ColoringMode::Total);
    CHECK_FALSE(r.passed());
    CHECK_FALSE(r.proper_edge);
    CHECK(r.proper_vertex);
    REQUIRE(!r.witnesses.empty());
    CHECK(r.witnesses.front().kind == "edge-clash");

    TotalColoring clash{{1, 2, 1, 2}, {1, 3, 4, 5}, {}};
    const auto r2 = verify_coloring(g, clash, ColoringMode::Total);
    CHECK_FALSE(r2.vertex_edge);

    TotalColoring off{{1, 2, 1, 9}, {3, 4, 4, 3}, {1, 2, 3, 4}};
    CHECK_FALSE(verify_coloring(g, off, ColoringMode::Total).passed());

    TotalColoring partial{{1, 2, -1, 2}, {3, 4, 3, 4}, {}};
    CHECK_THROWS_AS(verify_coloring(g, partial, ColoringMode::Total), std::invalid_argument);
}

TEST_CASE("witness cap truncates") {
    const auto g = complete_graph(6);
    TotalColoring tc{std::vector<int>(6, 0), std::vector<int>(g.size(), 1), {}};
    const auto r = verify_coloring(g, tc, ColoringMode::Total, 3);
    CHECK(r.witnesses.size() == 3);
    CHECK(r.truncated);
    CHECK(r.violation_count > 3);
}

TEST_CASE("positional colouring requires the star family") {
    CHECK_THROWS_AS(positional_edge_coloring(build_graph({3, 2}, GeneratorFamily::pancake())), PreconditionError);
}

TEST_CASE("choosability on ST(2,3)") {
    const auto g = build_graph({2, 3}, GeneratorFamily::star());
    const auto lo = choosability_suite(g, [](VertexId, const std::vector<int>& l) { return l.front(); });
    const auto hi = choosability_suite(g, [](VertexId, const std::vector<int>& l) { return l.back(); });
    CHECK(g.graph.size() == 30);
    CHECK(lo.lists_disjoint);
    CHECK(lo.proper);
    CHECK(hi.proper);
    CHECK(lo.coloring != hi.coloring);
    CHECK_THROWS_AS(choosability_suite(g, [](VertexId, const std::vector<int>&) { return 0; }), std::invalid_argument);
}

TEST_CASE("efficiency obstruction at 000111") {
    const auto g = build_graph({2, 3}, GeneratorFamily::star());
    const auto r = efficiency_obstruction_witness(g, MString::parse("000111", g.params));
    CHECK(r.pass);
    CHECK(r.exhaustive_enumeration);
    CHECK(r.selections == r.witnessed);
    CHECK(r.same_first_at_distance_two == 6);
    CHECK(r.pigeonhole_count == 2);

    // Backtracking mode gives the same verdict.
    const auto b = efficiency_obstruction_witness(g, MString::parse("000111", g.params), 1);
    CHECK_FALSE(b.exhaustive_enumeration);
    CHECK(b.pass);
}
