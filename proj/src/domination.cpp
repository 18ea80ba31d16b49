#include "mpg/domination.hpp"

#include <algorithm>
#include <stdexcept>

#include "mpg/errors.hpp"

namespace mpg {

namespace {

std::vector<bool> membership(const Graph& g, const VertexSet& s) {
    std::vector<bool> in(g.order(), false);
    for (auto v : s) {
        if (v >= g.order()) throw std::invalid_argument("set member out of range");
        in[v] = true;
    }
    return in;
}

}  // namespace

VertexSet se_set(const PermGraph& g, int symbol) {
    if (symbol < 0 || symbol >= g.params.k) throw std::out_of_range("symbol out of range");
    VertexSet out;
    for (VertexId v = 0; v < g.order(); ++v)
        if (g.vertex(v).front() == symbol) out.push_back(v);
    return out;
}

VertexSet sigma_set(const PermGraph& g, int position) {
    if (g.params.ell != 2) throw std::invalid_argument("sigma sets require l = 2");
    if (position < 1 || position >= g.params.length()) throw std::out_of_range("sigma position out of range");
    VertexSet out;
    for (VertexId v = 0; v < g.order(); ++v)
        if (repeat_position(g.vertex(v), g.params) == position) out.push_back(v);
    return out;
}

VertexSet d_set(const Graph& g, VertexId v, const VertexSet& s) {
    if (std::binary_search(s.begin(), s.end(), v)) throw std::invalid_argument("d_set: vertex belongs to the set");
    VertexSet out;
    for (auto w : g.neighbors(v))
        if (std::binary_search(s.begin(), s.end(), w)) out.push_back(w);
    return out;
}

std::string to_string(DominationViolation::Kind kind) {
    switch (kind) {
        case DominationViolation::Kind::WrongCount: return "wrong-count";
        case DominationViolation::Kind::NonUniqueIntersection: return "non-unique-intersection";
        case DominationViolation::Kind::NonIndependent: return "non-independent";
        case DominationViolation::Kind::Distance: return "distance";
    }
    return "?";
}

int min_internal_distance(const Graph& g, const VertexSet& s) {
    const auto in = membership(g, s);
    int best = kInfiniteGirth;
    std::vector<int> dist(g.order(), -1);
    std::vector<VertexId> queue;
    for (auto src : s) {
        // queue holds every vertex given a distance, so the reset below is proportional to the search.
        queue.assign(1, src);
        dist[src] = 0;
        bool hit = false;
        for (std::size_t head = 0; head < queue.size() && !hit; ++head) {
            const auto x = queue[head];
            if (best != kInfiniteGirth && dist[x] + 1 >= best) break;
            for (auto y : g.neighbors(x)) {
                if (dist[y] >= 0) continue;
                dist[y] = dist[x] + 1;
                queue.push_back(y);
                if (in[y]) {
                    best = std::min(best, dist[y]);
                    hit = true;
                    break;
                }
            }
        }
        for (auto v : queue) dist[v] = -1;
    }
    return best;
}

DominationCertificate verify_efficient_domination(const Graph& g, const VertexSet& s, int ell, std::size_t witness_cap) {
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    if (has_triangle(g)) throw PreconditionError("girth <= 3: efficient domination verifier requires girth > 3");
    if (!std::is_sorted(s.begin(), s.end()) || std::adjacent_find(s.begin(), s.end()) != s.end())
        throw std::invalid_argument("set must be sorted and duplicate-free");
    const auto in = membership(g, s);

    DominationCertificate cert;
    cert.set = s;
    cert.ell = ell;
    cert.dominators.resize(g.order());
    auto record = [&](DominationViolation v) {
        ++cert.violation_count;
        if (cert.violations.size() < witness_cap) cert.violations.push_back(std::move(v));
        else cert.truncated = true;
    };

    for (auto a : s)
        for (auto b : g.neighbors(a))
            if (b > a && in[b]) record({DominationViolation::Kind::NonIndependent, {a, b}, "adjacent members"});

    std::vector<std::size_t> hits(g.order(), 0);
    std::vector<VertexId> touched;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (in[v]) continue;
        auto& dom = cert.dominators[v];
        for (auto w : g.neighbors(v))
            if (in[w]) dom.push_back(w);
        if (dom.size() != static_cast<std::size_t>(ell)) {
            record({DominationViolation::Kind::WrongCount, {v},
                    std::to_string(dom.size()) + " dominators, expected " + std::to_string(ell)});
            continue;
        }
        for (std::size_t a = 0; a < dom.size(); ++a)
            for (std::size_t b = a + 1; b < dom.size(); ++b)
                if (g.adjacent(dom[a], dom[b]))
                    record({DominationViolation::Kind::NonIndependent, {dom[a], dom[b]}, "dominator set not independent"});
        if (ell > 1) {
            for (auto u : dom)
                for (auto x : g.neighbors(u)) {
                    if (hits[x]++ == 0) touched.push_back(x);
                }
            VertexSet common;
            for (auto x : touched)
                if (hits[x] == dom.size()) common.push_back(x);
            for (auto x : touched) hits[x] = 0;
            touched.clear();
            std::sort(common.begin(), common.end());
            if (common != VertexSet{v}) {
                DominationViolation viol{DominationViolation::Kind::NonUniqueIntersection, {v}, ""};
                viol.vertices.insert(viol.vertices.end(), common.begin(), common.end());
                viol.detail = "neighbourhood intersection has " + std::to_string(common.size()) + " vertices";
                record(std::move(viol));
            }
        }
    }
    if (ell == 1) {
        cert.min_internal_distance = min_internal_distance(g, s);
        if (*cert.min_internal_distance < 3)
            record({DominationViolation::Kind::Distance, {},
                    "minimum internal distance " + std::to_string(*cert.min_internal_distance)});
    }
    cert.pass = cert.violation_count == 0;
    return cert;
}

bool PartitionReport::pass() const {
    return partitions_vertices && stars_are_k1l && double_cover && per_set_edge_partition.value_or(true) &&
           membership_matches;
}

PartitionReport verify_partition_and_edge_cover(const PermGraph& pg, SetFamily family) {
    if (pg.family.kind != GeneratorFamily::Kind::Star)
        throw PreconditionError("partition and edge-cover check is defined for the star family");
    const auto& g = pg.graph;
    PartitionReport r;
    r.family = family;
    if (family == SetFamily::SE) {
        r.ell = pg.params.ell;
        for (int i = 0; i < pg.params.k; ++i) r.sets.push_back(se_set(pg, i));
        r.expected_membership = static_cast<std::size_t>((pg.params.k - 1) * pg.params.ell);
    } else {
        r.ell = 1;
        for (int i = 1; i < pg.params.length(); ++i) r.sets.push_back(sigma_set(pg, i));
        r.expected_membership = static_cast<std::size_t>(2 * pg.params.k - 2);
    }

    std::vector<int> owner(g.order(), -1);
    r.partitions_vertices = true;
    for (std::size_t i = 0; i < r.sets.size(); ++i)
        for (auto v : r.sets[i]) {
            if (owner[v] >= 0) r.partitions_vertices = false;
            owner[v] = static_cast<int>(i);
        }
    if (std::find(owner.begin(), owner.end(), -1) != owner.end()) r.partitions_vertices = false;

    std::vector<int> cover(g.size(), 0);
    std::vector<std::size_t> member_of(g.order(), 0);
    r.stars_are_k1l = true;
    bool per_set_ok = true;
    for (const auto& s : r.sets) {
        std::vector<int> local(g.size(), 0);
        for (VertexId v = 0; v < g.order(); ++v) {
            if (std::binary_search(s.begin(), s.end(), v)) continue;
            const auto dom = d_set(g, v, s);
            // K_{1,ell}: the centre sees all ell leaves by construction, so only leaf pairs need checking.
            bool star = dom.size() == static_cast<std::size_t>(r.ell);
            for (std::size_t a = 0; a < dom.size() && star; ++a)
                for (std::size_t b = a + 1; b < dom.size(); ++b)
                    if (g.adjacent(dom[a], dom[b])) star = false;
            if (!star) r.stars_are_k1l = false;
            for (auto u : dom) {
                const auto e = *g.find_edge(v, u);
                ++cover[e];
                ++local[e];
                ++member_of[u];
            }
        }
        if (std::any_of(local.begin(), local.end(), [](int c) { return c != 1; })) per_set_ok = false;
    }
    r.double_cover = std::all_of(cover.begin(), cover.end(), [](int c) { return c == 2; });
    if (family == SetFamily::SE && pg.params.k == 2) r.per_set_edge_partition = per_set_ok;
    for (auto c : member_of) ++r.membership_histogram[c];
    r.membership_matches = r.membership_histogram.size() == 1 && r.membership_histogram.begin()->first == r.expected_membership;
    return r;
}

namespace oracle {

bool is_efficient_dominating(const Graph& g, const VertexSet& s, int ell) {
    const auto n = g.order();
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (const auto& e : g.edges()) adj[e.u][e.v] = adj[e.v][e.u] = 1;
    std::vector<char> in(n, 0);
    for (auto v : s) in[v] = 1;
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (in[a] && in[b] && adj[a][b]) return false;
    for (std::size_t v = 0; v < n; ++v) {
        if (in[v]) continue;
        std::vector<std::size_t> dom;
        for (std::size_t u = 0; u < n; ++u)
            if (in[u] && adj[v][u]) dom.push_back(u);
        if (dom.size() != static_cast<std::size_t>(ell)) return false;
        if (ell > 1)
            for (std::size_t x = 0; x < n; ++x) {
                if (x == v) continue;
                bool common = true;
                for (auto u : dom) common = common && adj[x][u];
                if (common) return false;
            }
    }
    return true;
}

}  // namespace oracle

std::vector<VertexSet> code_search(const Graph& g, int ell, CodeSearchOptions opts) {
    if (ell < 1) throw std::invalid_argument("ell must be positive");
    const auto n = g.order();
    if (n > opts.max_vertices) throw InstanceTooLarge("code search limited to " + std::to_string(opts.max_vertices) + " vertices");
    if (has_triangle(g)) throw PreconditionError("girth <= 3: code search requires girth > 3");

    enum : char { Undecided, In, Out };
    std::vector<char> state(n, Undecided);
    std::vector<int> in_count(n, 0), open(n, 0);
    for (VertexId v = 0; v < n; ++v) open[v] = static_cast<int>(g.degree(v));

    // BFS order keeps neighbourhoods decided close together, which tightens the count pruning.
    std::vector<VertexId> order;
    {
        std::vector<bool> seen(n, false);
        for (VertexId s = 0; s < n; ++s) {
            if (seen[s]) continue;
            seen[s] = true;
            const auto start = order.size();
            order.push_back(s);
            for (std::size_t h = start; h < order.size(); ++h)
                for (auto y : g.neighbors(order[h]))
                    if (!seen[y]) {
                        seen[y] = true;
                        order.push_back(y);
                    }
        }
    }

    auto feasible_out = [&](VertexId w) { return in_count[w] <= ell && in_count[w] + open[w] >= ell; };

    std::vector<VertexSet> results;
    auto search = [&](auto&& self, std::size_t idx) -> void {
        if (results.size() >= opts.max_results) return;
        if (idx == n) {
            VertexSet s;
            for (VertexId v = 0; v < n; ++v)
                if (state[v] == In) s.push_back(v);
            if (oracle::is_efficient_dominating(g, s, ell)) results.push_back(std::move(s));
            return;
        }
        const auto v = order[idx];
        for (char choice : {In, Out}) {
            bool ok = true;
            if (choice == In) {
                for (auto w : g.neighbors(v))
                    if (state[w] == In || (state[w] == Out && in_count[w] + 1 > ell)) ok = false;
            } else {
                ok = feasible_out(v);
            }
            if (!ok) continue;
            state[v] = choice;
            for (auto w : g.neighbors(v)) {
                --open[w];
                if (choice == In) ++in_count[w];
            }
            bool alive = true;
            for (auto w : g.neighbors(v))
                if (state[w] == Out && !feasible_out(w)) alive = false;
            if (alive) self(self, idx + 1);
            for (auto w : g.neighbors(v)) {
                ++open[w];
                if (choice == In) --in_count[w];
            }
            state[v] = Undecided;
        }
    };
    search(search, 0);
    std::sort(results.begin(), results.end());
    return results;
}

bool EiAvoidanceReport::pass() const {
    return last_position_rule && std::all_of(per_color.begin(), per_color.end(), [](const auto& kv) { return kv.second; });
}

EiAvoidanceReport verify_ei_avoidance(const PermGraph& pg, const TotalColoring& tc) {
    if (pg.params.ell != 2) throw std::invalid_argument("E_i avoidance requires l = 2");
    const auto& g = pg.graph;
    EiAvoidanceReport r;
    for (auto c : tc.palette) r.per_color[c] = true;
    for (EdgeId e = 0; e < g.size(); ++e) {
        const int c = tc.edge[e];
        if (tc.vertex[g.edge(e).u] == c || tc.vertex[g.edge(e).v] == c) {
            r.per_color[c] = false;
            r.offending.emplace_back(c, e);
        }
    }
    const int last = pg.params.length() - 1;
    r.last_position_rule = true;
    for (VertexId v = 0; v < g.order(); ++v)
        if (tc.vertex[v] == last && pg.vertex(v).front() != pg.vertex(v)[static_cast<std::size_t>(last)])
            r.last_position_rule = false;
    return r;
}

}  // namespace mpg
