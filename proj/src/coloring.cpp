#include "mpg/coloring.hpp"

#include <algorithm>
#include <limits>
#include <set>
#include <stdexcept>

#include "mpg/errors.hpp"

namespace mpg {

bool ColoringReport::passed() const {
    switch (mode) {
        case ColoringMode::ProperEdge: return proper_edge;
        case ColoringMode::ProperVertex: return proper_vertex;
        case ColoringMode::Total: return total();
        case ColoringMode::Efficient: return total() && efficient;
    }
    return false;
}

std::vector<int> positional_edge_coloring(const PermGraph& g) {
    if (g.family.kind != GeneratorFamily::Kind::Star)
        throw PreconditionError("positional edge colouring is defined for the star family only");
    std::vector<int> colors;
    colors.reserve(g.graph.size());
    for (const auto& e : g.graph.edges()) colors.push_back(e.labels.front());
    return colors;
}

TotalColoring sigma_total_coloring(const PermGraph& g) {
    if (g.params.ell != 2) throw std::invalid_argument("sigma colouring requires l = 2");
    TotalColoring tc;
    tc.edge = positional_edge_coloring(g);
    tc.vertex.reserve(g.order());
    for (const auto& v : g.vertices) tc.vertex.push_back(repeat_position(v, g.params));
    for (int c = 1; c < g.params.length(); ++c) tc.palette.push_back(c);
    return tc;
}

ColoringReport verify_coloring(const Graph& g, const TotalColoring& tc, ColoringMode mode, std::size_t witness_cap) {
    if (tc.vertex.size() != g.order() || tc.edge.size() != g.size())
        throw std::invalid_argument("colouring does not cover the graph");
    for (auto c : tc.vertex)
        if (c < 0) throw std::invalid_argument("uncoloured vertex");
    for (auto c : tc.edge)
        if (c < 0) throw std::invalid_argument("uncoloured edge");

    ColoringReport r;
    r.mode = mode;
    auto record = [&](ColoringViolation v) {
        ++r.violation_count;
        if (r.witnesses.size() < witness_cap) r.witnesses.push_back(std::move(v));
        else r.truncated = true;
    };
    const std::set<int> palette(tc.palette.begin(), tc.palette.end());
    const bool want_edge = mode != ColoringMode::ProperVertex;
    const bool want_vertex = mode != ColoringMode::ProperEdge;
    const bool want_mixed = mode == ColoringMode::Total || mode == ColoringMode::Efficient;

    if (!palette.empty()) {
        for (VertexId v = 0; v < g.order(); ++v)
            if (want_vertex && !palette.count(tc.vertex[v])) {
                r.proper_vertex = false;
                record({"off-palette", {v}, {}, "vertex colour " + std::to_string(tc.vertex[v])});
            }
        for (EdgeId e = 0; e < g.size(); ++e)
            if (want_edge && !palette.count(tc.edge[e])) {
                r.proper_edge = false;
                record({"off-palette", {g.edge(e).u, g.edge(e).v}, {e}, "edge colour " + std::to_string(tc.edge[e])});
            }
    }

    for (VertexId v = 0; v < g.order(); ++v) {
        auto nb = g.neighbors(v);
        auto inc = g.incident(v);
        if (want_edge) {
            for (std::size_t a = 0; a < inc.size(); ++a)
                for (std::size_t b = a + 1; b < inc.size(); ++b)
                    if (tc.edge[inc[a]] == tc.edge[inc[b]]) {
                        r.proper_edge = false;
                        record({"edge-clash", {v}, {inc[a], inc[b]}, "colour " + std::to_string(tc.edge[inc[a]])});
                    }
        }
        if (want_vertex) {
            for (auto w : nb)
                if (w > v && tc.vertex[w] == tc.vertex[v]) {
                    r.proper_vertex = false;
                    record({"vertex-clash", {v, w}, {}, "colour " + std::to_string(tc.vertex[v])});
                }
        }
        if (want_mixed) {
            for (auto e : inc)
                if (tc.edge[e] == tc.vertex[v]) {
                    r.vertex_edge = false;
                    record({"vertex-edge-clash", {v}, {e}, "colour " + std::to_string(tc.vertex[v])});
                }
        }
        if (mode == ColoringMode::Efficient) {
            std::set<int> seen{tc.vertex[v]};
            bool rainbow = true;
            for (auto w : nb) rainbow = seen.insert(tc.vertex[w]).second && rainbow;
            if (!rainbow || seen != palette) {
                r.efficient = false;
                record({"not-rainbow", {v}, {}, "closed neighbourhood shows " + std::to_string(seen.size()) + " of " +
                                                    std::to_string(palette.size()) + " colours"});
            }
        }
    }
    if (mode == ColoringMode::Efficient && g.order() > 0) {
        const auto d = g.degree(0);
        for (VertexId v = 0; v < g.order(); ++v)
            if (g.degree(v) != d) {
                r.efficient = false;
                record({"not-rainbow", {v}, {}, "efficient colouring needs a regular graph"});
                break;
            }
    }
    return r;
}

ChoosabilityResult choosability_suite(const PermGraph& g, const ListSelector& selector) {
    if (g.params.ell < 2) throw std::invalid_argument("choosability requires l >= 2");
    ChoosabilityResult r;
    std::vector<std::vector<int>> lists;
    lists.reserve(g.order());
    for (const auto& v : g.vertices) lists.push_back(list_assignment(v, g.params));
    for (EdgeId e = 0; e < g.graph.size(); ++e) {
        const auto& a = lists[g.graph.edge(e).u];
        const auto& b = lists[g.graph.edge(e).v];
        std::vector<int> common;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(common));
        if (!common.empty() && r.lists_disjoint) {
            r.lists_disjoint = false;
            r.overlapping_edge = e;
        }
    }
    r.coloring.reserve(g.order());
    for (VertexId v = 0; v < g.order(); ++v) {
        const int c = selector(v, lists[v]);
        if (std::find(lists[v].begin(), lists[v].end(), c) == lists[v].end())
            throw std::invalid_argument("selector chose " + std::to_string(c) + " outside L(" + g.graph.name(v) + ")");
        r.coloring.push_back(c);
    }
    for (const auto& e : g.graph.edges())
        if (r.coloring[e.u] == r.coloring[e.v]) r.proper = false;
    return r;
}

ObstructionReport efficiency_obstruction_witness(const PermGraph& g, const MString& v, std::uint64_t enumeration_cap,
                                                 std::size_t ball_cap) {
    if (g.params.ell < 3) throw std::invalid_argument("obstruction check requires l >= 3");
    ObstructionReport r;
    const auto center = g.index_of(v);
    const auto dist = bfs_distances(g.graph, center, 2);
    for (VertexId u = 0; u < g.order(); ++u)
        if (dist[u] >= 0) r.ball.push_back(u);
    if (r.ball.size() > ball_cap) throw InstanceTooLarge("distance-2 ball exceeds cap");
    for (auto u : r.ball)
        if (dist[u] == 2 && g.vertex(u).front() == v.front()) ++r.same_first_at_distance_two;
    r.pigeonhole_count = static_cast<std::size_t>((g.params.ell - 1) * (g.params.ell - 2));

    const auto m = r.ball.size();
    std::vector<std::vector<int>> lists;
    for (auto u : r.ball) lists.push_back(list_assignment(g.vertex(u), g.params));
    // conflict[a] = ball indices b < a at graph distance <= 2 from a
    std::vector<std::vector<std::size_t>> conflict(m);
    for (std::size_t a = 0; a < m; ++a) {
        const auto da = bfs_distances(g.graph, r.ball[a], 2);
        for (std::size_t b = 0; b < a; ++b)
            if (da[r.ball[b]] > 0) conflict[a].push_back(b);
    }

    unsigned __int128 product = 1;
    bool overflow = false;
    for (const auto& l : lists) {
        product *= l.size();
        if (product > enumeration_cap) {
            overflow = true;
            break;
        }
    }
    const auto space = static_cast<std::uint64_t>(product);
    std::vector<std::size_t> pick(m, 0);
    auto colour = [&](std::size_t a) { return lists[a][pick[a]]; };

    if (!overflow) {
        r.exhaustive_enumeration = true;
        r.selections = space;
        for (std::uint64_t s = 0; s < space; ++s) {
            std::uint64_t rest = s;
            for (std::size_t a = 0; a < m; ++a) {
                pick[a] = rest % lists[a].size();
                rest /= lists[a].size();
            }
            bool found = false;
            for (std::size_t a = 0; a < m && !found; ++a)
                for (auto b : conflict[a])
                    if (colour(a) == colour(b)) {
                        found = true;
                        if (r.sample_witnesses.size() < kDefaultWitnessCap)
                            r.sample_witnesses.emplace_back(r.ball[b], r.ball[a]);
                        break;
                    }
            if (found) ++r.witnessed;
        }
        r.pass = r.witnessed == r.selections;
        return r;
    }

    // Complete backtracking: the obstruction holds iff no conflict-free selection exists.
    {
        long double total = 1;
        for (const auto& l : lists) total *= static_cast<long double>(l.size());
        r.selections = total >= 1.8e19L ? std::numeric_limits<std::uint64_t>::max() : static_cast<std::uint64_t>(total);
    }
    auto search = [&](auto&& self, std::size_t a) -> bool {
        if (a == m) return true;
        for (std::size_t c = 0; c < lists[a].size(); ++c) {
            pick[a] = c;
            bool ok = true;
            for (auto b : conflict[a])
                if (colour(b) == colour(a)) {
                    ok = false;
                    break;
                }
            if (ok && self(self, a + 1)) return true;
        }
        return false;
    };
    const bool conflict_free_exists = search(search, 0);
    r.pass = !conflict_free_exists;
    r.witnessed = r.pass ? r.selections : 0;
    return r;
}

}  // namespace mpg
