#include "mpg/structure.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <thread>

#include "mpg/domination.hpp"
#include "mpg/errors.hpp"
#include "mpg/parallel.hpp"

namespace mpg {

std::string to_string(SixCycleType type) {
    switch (type) {
        case SixCycleType::Type1: return "type1";
        case SixCycleType::Type2: return "type2";
        case SixCycleType::Other: return "other";
    }
    return "?";
}

SixCycleClass classify_six_cycle(const Graph& g, const TotalColoring& tc, const SixCycle& cycle) {
    SixCycleClass c;
    c.cycle = cycle;
    for (int i = 0; i < 6; ++i) {
        const auto e = g.find_edge(cycle[i], cycle[(i + 1) % 6]);
        if (!e) throw std::invalid_argument("not a cycle of the graph");
        c.edge_colors[i] = tc.edge[*e];
    }
    const auto& e = c.edge_colors;
    if (e[0] == e[3] && e[1] == e[4] && e[2] == e[5] && e[0] != e[1] && e[1] != e[2] && e[0] != e[2]) {
        c.type = SixCycleType::Type1;
        c.colors = {e[0], e[1], e[2]};
    } else if (e[0] == e[2] && e[2] == e[4] && e[1] == e[3] && e[3] == e[5] && e[0] != e[1]) {
        c.type = SixCycleType::Type2;
        c.colors = {e[0], e[1]};
    }
    std::sort(c.colors.begin(), c.colors.end());
    return c;
}

std::optional<SixCycleClass> SixCycleCensus::find(SixCycleType type, const std::vector<int>& colors) const {
    for (const auto& c : cycles)
        if (c.type == type && c.colors == colors) return c;
    return std::nullopt;
}

SixCycleCensus classify_six_cycles(const Graph& g, const TotalColoring& tc) {
    SixCycleCensus census;
    for (const auto& cycle : six_cycles(g)) {
        auto c = classify_six_cycle(g, tc, cycle);
        switch (c.type) {
            case SixCycleType::Type1: ++census.type1; break;
            case SixCycleType::Type2: ++census.type2; break;
            case SixCycleType::Other: ++census.other; break;
        }
        census.cycles.push_back(std::move(c));
    }
    return census;
}

bool ChiItem::pass() const {
    return removed_connected.value_or(true) && removed_regular.value_or(true) && components_ok && biregular &&
           high_side_is_class && class_independent && odd_walk.has_value();
}

bool ChiReport::pass() const {
    return hypothesis && component_count_ok &&
           std::all_of(items.begin(), items.end(), [](const ChiItem& i) { return i.pass(); });
}

namespace {

TotalColoring restrict_coloring(const TotalColoring& tc, const Subgraph& s) {
    TotalColoring out;
    for (auto v : s.origin) out.vertex.push_back(tc.vertex[v]);
    for (auto e : s.edge_origin) out.edge.push_back(tc.edge[e]);
    std::set<int> used(out.vertex.begin(), out.vertex.end());
    used.insert(out.edge.begin(), out.edge.end());
    out.palette.assign(used.begin(), used.end());
    return out;
}

bool is_regular(const Graph& g, std::size_t degree) {
    for (VertexId v = 0; v < g.order(); ++v)
        if (g.degree(v) != degree) return false;
    return true;
}

ChiItem chi_item(const Graph& g, const TotalColoring& tc, int h, int color, const Graph* reference) {
    ChiItem item;
    item.color = color;
    VertexSet w;
    std::vector<bool> in_w(g.order(), false);
    for (VertexId v = 0; v < g.order(); ++v)
        if (tc.vertex[v] == color) {
            w.push_back(v);
            in_w[v] = true;
        }
    std::vector<EdgeId> e_i;
    for (EdgeId e = 0; e < g.size(); ++e)
        if (tc.edge[e] == color) e_i.push_back(e);
    item.class_size = w.size();

    if (h > 4) {
        const auto removed = subgraph(g, w, {});
        item.removed_connected = connected_components(removed.graph).size() == 1;
        item.removed_regular = is_regular(removed.graph, static_cast<std::size_t>(h - 3));
    }

    const auto both = subgraph(g, w, e_i);
    item.components_ok = true;
    for (const auto& comp : components(both.graph)) {
        Subgraph lifted = comp;
        for (auto& v : lifted.origin) v = both.origin[v];
        for (auto& e : lifted.edge_origin) e = both.edge_origin[e];
        const auto sub_tc = restrict_coloring(tc, lifted);
        ChiComponent c;
        c.vertices = comp.graph.order();
        c.edges = comp.graph.size();
        c.regular = is_regular(comp.graph, static_cast<std::size_t>(h - 4));
        c.total = verify_coloring(comp.graph, sub_tc, ColoringMode::Total, 1).passed();
        c.colors_used = sub_tc.palette.size();
        c.efficient = verify_coloring(comp.graph, sub_tc, ColoringMode::Efficient, 1).passed();
        if (reference) c.isomorphic_to_reference = isomorphism(comp.graph, *reference).has_value();
        item.components_ok = item.components_ok && c.regular && c.total &&
                             c.colors_used == static_cast<std::size_t>(h - 3) &&
                             c.isomorphic_to_reference.value_or(true);
        item.components.push_back(c);
    }

    const auto no_e = subgraph(g, {}, e_i);
    item.high_side_is_class = true;
    for (VertexId v = 0; v < no_e.graph.order(); ++v) {
        const auto d = no_e.graph.degree(v);
        ++item.edge_removed_degrees[d];
        if ((d == static_cast<std::size_t>(h - 2)) != in_w[v]) item.high_side_is_class = false;
    }
    item.biregular = item.edge_removed_degrees.size() == 2 &&
                     item.edge_removed_degrees.count(static_cast<std::size_t>(h - 2)) &&
                     item.edge_removed_degrees.count(static_cast<std::size_t>(h - 3));
    item.class_independent = true;
    for (auto v : w)
        for (auto u : g.neighbors(v))
            if (in_w[u]) item.class_independent = false;
    item.odd_walk = odd_closed_walk(no_e.graph);
    if (item.odd_walk)
        for (auto& x : *item.odd_walk) x = no_e.origin[x];
    return item;
}

}  // namespace

ChiReport theorem_chi_suite(const Graph& g, const TotalColoring& tc, const Graph* reference,
                            std::optional<std::size_t> expected_components) {
    ChiReport r;
    r.h = static_cast<int>(tc.palette.size()) + 1;
    r.expected_components = expected_components;
    if (g.order() == 0 || !is_regular(g, static_cast<std::size_t>(r.h - 2))) {
        r.hypothesis_detail = "graph is not (h-2)-regular";
        return r;
    }
    if (!verify_coloring(g, tc, ColoringMode::Efficient, 1).passed()) {
        r.hypothesis_detail = "colouring is not efficient";
        return r;
    }
    if (r.h % 2 != 0 || r.h <= 4) {
        r.hypothesis_detail = "h = " + std::to_string(r.h) + " is not an even number above 4";
        return r;
    }
    if (connected_components(g).size() != 1) {
        r.hypothesis_detail = "graph is disconnected";
        return r;
    }
    r.hypothesis = true;

    r.items.resize(tc.palette.size());
    const unsigned workers = std::min<unsigned>(thread_count(), static_cast<unsigned>(r.items.size()));
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < workers; ++w)
        pool.emplace_back([&, w] {
            for (std::size_t i = w; i < r.items.size(); i += workers)
                r.items[i] = chi_item(g, tc, r.h, tc.palette[i], reference);
        });
    for (auto& t : pool) t.join();

    if (expected_components)
        for (const auto& item : r.items)
            if (item.components.size() != *expected_components) r.component_count_ok = false;
    return r;
}

bool ToroidalAudit::pass() const {
    return !type1.empty() && type1_disjoint && departing_ok && sigma_shape_ok.value_or(true) && distance_ok;
}

ToroidalAudit toroidal_assembly(const PermGraph& pg, const TotalColoring& tc, int d1, std::array<int, 4> quad) {
    const auto& g = pg.graph;
    if (pg.params.ell != 2 || pg.params.k < 3) throw std::invalid_argument("toroidal assembly requires ST_k^2 with k >= 3");
    std::set<int> distinct(quad.begin(), quad.end());
    distinct.insert(d1);
    const std::set<int> palette(tc.palette.begin(), tc.palette.end());
    if (distinct.size() != 5) throw std::invalid_argument("d1 and quad must be five distinct colours");
    for (int c : distinct)
        if (!palette.count(c)) throw std::invalid_argument("colour " + std::to_string(c) + " is not in the palette");

    ToroidalAudit a;
    a.d1 = d1;
    a.quad = quad;
    const std::set<int> quad_set(quad.begin(), quad.end());
    const auto census = classify_six_cycles(g, tc);

    std::vector<bool> in_union(g.size(), false);
    auto cycle_edges = [&](const SixCycle& c) {
        std::array<EdgeId, 6> out{};
        for (int i = 0; i < 6; ++i) out[i] = *g.find_edge(c[i], c[(i + 1) % 6]);
        return out;
    };
    for (const auto& c : census.cycles) {
        if (c.type != SixCycleType::Type2) continue;
        const int other = c.colors[0] == d1 ? c.colors[1] : c.colors[1] == d1 ? c.colors[0] : -1;
        if (other < 0 || !quad_set.count(other)) continue;
        ++a.type2_cycles;
        for (auto e : cycle_edges(c.cycle)) in_union[e] = true;
    }

    std::vector<bool> in_assembly = in_union;
    std::vector<int> owner(g.order(), -1);
    a.type1_disjoint = true;
    a.departing_ok = true;
    a.distance_ok = true;
    for (const auto& c : census.cycles) {
        if (c.type != SixCycleType::Type1) continue;
        if (!std::all_of(c.colors.begin(), c.colors.end(), [&](int x) { return quad_set.count(x) > 0; })) continue;
        const auto edges = cycle_edges(c.cycle);
        if (!std::all_of(edges.begin(), edges.end(), [&](EdgeId e) { return in_union[e]; })) continue;

        Type1Audit t;
        t.cycle = c;
        for (int q : quad)
            if (!std::binary_search(c.colors.begin(), c.colors.end(), q)) t.leftover = q;
        for (auto x : c.cycle) {
            if (owner[x] >= 0) a.type1_disjoint = false;
            owner[x] = static_cast<int>(a.type1.size());
            const auto nb = g.neighbors(x);
            const auto inc = g.incident(x);
            for (std::size_t p = 0; p < nb.size(); ++p)
                if (tc.edge[inc[p]] == t.leftover) {
                    t.landings.push_back(nb[p]);
                    in_assembly[inc[p]] = true;
                }
        }
        t.six_departing = t.landings.size() == 6;
        t.landings_in_sigma = std::all_of(t.landings.begin(), t.landings.end(), [&](VertexId v) { return tc.vertex[v] == d1; });
        for (std::size_t i = 0; i < t.landings.size(); ++i) {
            const auto dist = bfs_distances(g, t.landings[i]);
            for (std::size_t j = i + 1; j < t.landings.size(); ++j) {
                const int d = dist[t.landings[j]];
                ++t.distance_profile[d];
                t.min_distance = std::min(t.min_distance, d);
            }
        }
        a.departing_ok = a.departing_ok && t.six_departing && t.landings_in_sigma;
        a.distance_ok = a.distance_ok && t.min_distance == 3;
        a.type1.push_back(std::move(t));
    }

    std::vector<bool> touched(g.order(), false);
    std::vector<EdgeId> dropped;
    for (EdgeId e = 0; e < g.size(); ++e) {
        if (in_assembly[e]) touched[g.edge(e).u] = touched[g.edge(e).v] = true;
        else dropped.push_back(e);
    }
    VertexSet untouched;
    for (VertexId v = 0; v < g.order(); ++v)
        if (!touched[v]) untouched.push_back(v);
    a.assembly = subgraph(g, untouched, dropped);

    const int last = pg.params.length() - 1;
    const bool shape_applies = pg.params.k == 3 && d1 == last;
    bool shape_ok = true;
    VertexSet sigma_in_assembly;
    for (VertexId v = 0; v < a.assembly.graph.order(); ++v) {
        const auto parent = a.assembly.origin[v];
        if (tc.vertex[parent] != d1) continue;
        sigma_in_assembly.push_back(parent);
        ++a.sigma_degrees[a.assembly.graph.degree(v)];
        std::set<int> layer;
        for (auto e : a.assembly.graph.incident(v))
            if (!layer.insert(tc.edge[a.assembly.edge_origin[e]]).second) shape_ok = false;
        if (pg.vertex(parent).front() != pg.vertex(parent)[static_cast<std::size_t>(last)]) shape_ok = false;
    }
    if (shape_applies) {
        VertexSet shaped;
        for (VertexId v = 0; v < g.order(); ++v)
            if (pg.vertex(v).front() == pg.vertex(v)[static_cast<std::size_t>(last)]) shaped.push_back(v);
        a.sigma_shape_ok = shape_ok && sigma_in_assembly == shaped;
    }
    return a;
}

AugmentationAudit augment_supergraph(const Graph& g, const TotalColoring& tc, const std::vector<VertexSet>& classes,
                                     int ell, std::size_t max_new_edges) {
    AugmentationAudit a;
    a.classes = classes;
    a.new_color = tc.palette.empty() ? 1 : *std::max_element(tc.palette.begin(), tc.palette.end()) + 1;

    std::vector<int> owner(g.order(), -1);
    a.classes_disjoint = true;
    a.classes_dominate = true;
    for (std::size_t i = 0; i < classes.size(); ++i) {
        for (auto v : classes[i]) {
            if (owner[v] >= 0) a.classes_disjoint = false;
            owner[v] = static_cast<int>(i);
        }
        a.classes_dominate = a.classes_dominate && verify_efficient_domination(g, classes[i], ell, 1).pass;
        a.new_edges += classes[i].size();
    }
    a.classes_cover = std::find(owner.begin(), owner.end(), -1) == owner.end();
    if (a.new_edges > max_new_edges) throw InstanceTooLarge("augmentation search limited to " + std::to_string(max_new_edges) + " new edges");

    const auto n = g.order();
    std::vector<Edge> edges = g.edges();
    std::vector<std::string> names;
    for (VertexId v = 0; v < n; ++v) names.push_back(g.name(v));
    for (std::size_t i = 0; i < classes.size(); ++i) {
        names.push_back("apex" + std::to_string(i));
        for (auto v : classes[i]) edges.push_back({v, static_cast<VertexId>(n + i), {}});
    }
    a.graph = Graph::from_edges(n + classes.size(), edges, names);

    a.coloring.vertex = tc.vertex;
    a.coloring.vertex.resize(a.graph.order(), a.new_color);
    a.coloring.edge.assign(a.graph.size(), -1);
    for (EdgeId e = 0; e < g.size(); ++e)
        a.coloring.edge[*a.graph.find_edge(g.edge(e).u, g.edge(e).v)] = tc.edge[e];
    a.coloring.palette = tc.palette;
    a.coloring.palette.push_back(a.new_color);

    std::vector<EdgeId> open;
    for (EdgeId e = 0; e < a.graph.size(); ++e)
        if (a.coloring.edge[e] < 0) open.push_back(e);

    // Complete backtracking over colours of the new edges; a leaf is accepted only if the result is efficient.
    TotalColoring work = a.coloring;
    auto fits = [&](EdgeId e, int c) {
        const auto& ed = a.graph.edge(e);
        if (work.vertex[ed.u] == c || work.vertex[ed.v] == c) return false;
        for (auto end : {ed.u, ed.v})
            for (auto f : a.graph.incident(end))
                if (f != e && work.edge[f] == c) return false;
        return true;
    };
    auto search = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == open.size()) return verify_coloring(a.graph, work, ColoringMode::Efficient, 1).passed();
        for (int c : work.palette) {
            if (!fits(open[idx], c)) continue;
            work.edge[open[idx]] = c;
            if (self(self, idx + 1)) return true;
            work.edge[open[idx]] = -1;
        }
        return false;
    };
    a.extension_exists = search(search, 0);
    if (a.extension_exists) a.extension = work;
    return a;
}

}  // namespace mpg
