#include <doctest.h>

#include <set>

#include "mpg/domination.hpp"
#include "mpg/errors.hpp"
#include "oracle.hpp"

using namespace mpg;

namespace {

std::vector<std::string> names(const Graph& g, const VertexSet& s) {
    std::vector<std::string> out;
    for (auto v : s) out.push_back(g.name(v));
    std::sort(out.begin(), out.end());
    return out;
}

VertexSet ids(const Graph& g, std::vector<std::string> ns) {
    VertexSet out;
    for (const auto& n : ns) out.push_back(*g.find_vertex(n));
    std::sort(out.begin(), out.end());
    return out;
}

bool brute_eset(const Graph& g, const VertexSet& s, int ell) {
    std::vector<std::set<int>> nb(g.order());
    for (const auto& e : g.edges()) {
        nb[e.u].insert(static_cast<int>(e.v));
        nb[e.v].insert(static_cast<int>(e.u));
    }
    return oracle_test::efficient_dominating(nb, std::set<int>(s.begin(), s.end()), ell);
}

}  // namespace

TEST_CASE("D-sets of 010122 in ST(3,2)") {
    const auto g = build_graph({3, 2}, GeneratorFamily::star());
    const auto s0 = se_set(g, 0);
    auto d = [&](const char* v) { return names(g.graph, d_set(g.graph, *g.graph.find_vertex(v), s0)); };
    CHECK(d("100122") == std::vector<std::string>{"001122", "010122"});
    CHECK(d("110022") == std::vector<std::string>{"010122", "011022"});
    CHECK(d("210102") == std::vector<std::string>{"010122", "012102"});
    CHECK(d("210120") == std::vector<std::string>{"010122", "012120"});
    CHECK(d("120120") == std::vector<std::string>{"020121", "021120"});
    CHECK_THROWS_AS(d_set(g.graph, *g.graph.find_vertex("010122"), s0), std::invalid_argument);
}

TEST_CASE("ST(2,2) D-sets of S_0") {
    const auto g = build_graph({2, 2}, GeneratorFamily::star());
    const auto s0 = se_set(g, 0);
    CHECK(names(g.graph, s0) == std::vector<std::string>{"0011", "0101", "0110"});
    auto d = [&](const char* v) { return names(g.graph, d_set(g.graph, *g.graph.find_vertex(v), s0)); };
    CHECK(d("1001") == std::vector<std::string>{"0011", "0101"});
    CHECK(d("1010") == std::vector<std::string>{"0011", "0110"});
    CHECK(d("1100") == std::vector<std::string>{"0101", "0110"});
}

TEST_CASE("SE sets are E^l-sets and agree with the oracle") {
    for (auto [k, l] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 1}, {4, 2}}) {
        const auto g = build_graph({k, l}, GeneratorFamily::star());
        for (int i = 0; i < k; ++i) {
            const auto s = se_set(g, i);
            const auto cert = verify_efficient_domination(g.graph, s, l);
            CHECK(cert.pass);
            if (g.order() <= 90) CHECK(brute_eset(g.graph, s, l));
        }
    }
}

TEST_CASE("Sigma sets: partition, E-sets, distance 3") {
    for (int k = 2; k <= 4; ++k) {
        const auto g = build_graph({k, 2}, GeneratorFamily::star());
        std::size_t total = 0;
        for (int i = 1; i < 2 * k; ++i) {
            const auto s = sigma_set(g, i);
            total += s.size();
            const auto cert = verify_efficient_domination(g.graph, s, 1);
            CHECK(cert.pass);
            CHECK(cert.min_internal_distance == 3);
            if (g.order() <= 90) CHECK(brute_eset(g.graph, s, 1));
        }
        CHECK(total == g.order());
    }
    const auto g3 = build_graph({3, 2}, GeneratorFamily::star());
    CHECK(sigma_set(g3, 5).size() == 18);
    const auto g2 = build_graph({2, 2}, GeneratorFamily::star());
    CHECK(names(g2.graph, sigma_set(g2, 1)) == std::vector<std::string>{"0011", "1100"});
    CHECK(names(g2.graph, sigma_set(g2, 2)) == std::vector<std::string>{"0101", "1010"});
    CHECK(names(g2.graph, sigma_set(g2, 3)) == std::vector<std::string>{"0110", "1001"});
}

TEST_CASE("K_{2,3} fails with a non-unique intersection") {
    const auto g = complete_bipartite(2, 3);
    const auto cert = verify_efficient_domination(g, ids(g, {"w0", "w1"}), 2);
    CHECK_FALSE(cert.pass);
    REQUIRE(!cert.violations.empty());
    CHECK(cert.violations.front().kind == DominationViolation::Kind::NonUniqueIntersection);
    CHECK(cert.violations.front().vertices.size() == 4);
    CHECK_FALSE(brute_eset(g, ids(g, {"w0", "w1"}), 2));
}

TEST_CASE("verifier violations") {
    const auto g = cycle_graph(6);
    const auto adjacent = verify_efficient_domination(g, {0, 1}, 1);
    CHECK_FALSE(adjacent.pass);
    bool saw_independence = false;
    for (const auto& v : adjacent.violations) saw_independence |= v.kind == DominationViolation::Kind::NonIndependent;
    CHECK(saw_independence);

    const auto count = verify_efficient_domination(g, {0}, 1);
    CHECK_FALSE(count.pass);
    CHECK(count.violations.front().kind == DominationViolation::Kind::WrongCount);

    CHECK(verify_efficient_domination(g, {0, 3}, 1).pass);
    CHECK_THROWS_AS(verify_efficient_domination(complete_graph(4), {0}, 1), PreconditionError);
    CHECK_THROWS_AS(verify_efficient_domination(g, {3, 0}, 1), std::invalid_argument);
}

TEST_CASE("partition and double edge cover") {
    for (auto [k, l] : {std::pair{2, 2}, {3, 2}, {2, 3}, {4, 2}}) {
        const auto g = build_graph({k, l}, GeneratorFamily::star());
        const auto se = verify_partition_and_edge_cover(g, SetFamily::SE);
        CHECK(se.pass());
        CHECK(se.expected_membership == static_cast<std::size_t>((k - 1) * l));
        CHECK(se.per_set_edge_partition.has_value() == (k == 2));
        if (l == 2) CHECK(verify_partition_and_edge_cover(g, SetFamily::Sigma).pass());
    }
    const auto g3 = build_graph({3, 2}, GeneratorFamily::star());
    CHECK(verify_partition_and_edge_cover(g3, SetFamily::SE).membership_histogram ==
          std::map<std::size_t, std::size_t>{{4, 90}});
}

TEST_CASE("code search on ST(2,2) finds the Sigma sets and the S_i sets") {
    const auto g = build_graph({2, 2}, GeneratorFamily::star());
    const auto ones = code_search(g.graph, 1);
    std::set<std::vector<std::string>> got1;
    for (const auto& s : ones) got1.insert(names(g.graph, s));
    for (int i = 1; i <= 3; ++i) CHECK(got1.count(names(g.graph, sigma_set(g, i))));
    CHECK(ones.size() == 3);

    const auto twos = code_search(g.graph, 2);
    std::set<std::vector<std::string>> got2;
    for (const auto& s : twos) got2.insert(names(g.graph, s));
    CHECK(got2.count(names(g.graph, se_set(g, 0))));
    CHECK(got2.count(names(g.graph, se_set(g, 1))));
    CHECK(twos.size() == 2);
}

TEST_CASE("code search agrees with exhaustive subset enumeration") {
    for (const auto& g : {cycle_graph(6), cycle_graph(9), hypercube(3), build_graph({2, 2}, GeneratorFamily::pancake()).graph}) {
        for (int ell = 1; ell <= 2; ++ell) {
            std::size_t brute = 0;
            for (std::uint32_t mask = 0; mask < (1u << g.order()); ++mask) {
                VertexSet s;
                for (VertexId v = 0; v < g.order(); ++v)
                    if (mask >> v & 1u) s.push_back(v);
                brute += brute_eset(g, s, ell);
            }
            CHECK(code_search(g, ell).size() == brute);
        }
    }
    CHECK_THROWS_AS(code_search(cycle_graph(2000), 1), InstanceTooLarge);
}

TEST_CASE("E_i edges avoid Sigma_i") {
    for (int k = 2; k <= 4; ++k) {
        const auto g = build_graph({k, 2}, GeneratorFamily::star());
        CHECK(verify_ei_avoidance(g, sigma_total_coloring(g)).pass());
    }
}

TEST_CASE("Sigma_1 of PC(2,2) is not independent") {
    const auto g = build_graph({2, 2}, GeneratorFamily::pancake());
    const auto s = sigma_set(g, 1);
    const auto cert = verify_efficient_domination(g.graph, s, 1);
    CHECK_FALSE(cert.pass);
    REQUIRE(!cert.violations.empty());
    CHECK(cert.violations.front().kind == DominationViolation::Kind::NonIndependent);
    CHECK(names(g.graph, cert.violations.front().vertices) == std::vector<std::string>{"0011", "1100"});
    CHECK_FALSE(brute_eset(g.graph, s, 1));
}

TEST_CASE("ST(2,1) is a single edge") {
    const auto g = build_graph({2, 1}, GeneratorFamily::star());
    CHECK(g.graph.size() == 1);
    CHECK(girth(g.graph) == kInfiniteGirth);
}
