#include "mpg/graph.hpp"

#include <algorithm>
#include <deque>
#include <istream>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "mpg/errors.hpp"
#include "mpg/parallel.hpp"

namespace mpg {

// ---------------------------------------------------------------------------
// Graph

Graph Graph::from_edges(std::size_t order, std::vector<Edge> edges, std::vector<std::string> names) {
    if (!names.empty() && names.size() != order) throw std::invalid_argument("vertex name count mismatch");
    for (auto& e : edges) {
        if (e.u >= order || e.v >= order) throw std::invalid_argument("edge endpoint out of range");
        if (e.u == e.v) throw std::invalid_argument("loops are not allowed");
        if (e.u > e.v) std::swap(e.u, e.v);
    }
    std::sort(edges.begin(), edges.end(),
              [](const Edge& a, const Edge& b) { return std::tie(a.u, a.v) < std::tie(b.u, b.v); });
    std::vector<Edge> merged;
    merged.reserve(edges.size());
    for (auto& e : edges) {
        if (!merged.empty() && merged.back().u == e.u && merged.back().v == e.v) {
            auto& labels = merged.back().labels;
            labels.insert(labels.end(), e.labels.begin(), e.labels.end());
        } else {
            merged.push_back(std::move(e));
        }
    }
    for (auto& e : merged) {
        std::sort(e.labels.begin(), e.labels.end());
        e.labels.erase(std::unique(e.labels.begin(), e.labels.end()), e.labels.end());
    }

    Graph g;
    g.edges_ = std::move(merged);
    g.names_ = std::move(names);
    g.offsets_.assign(order + 1, 0);
    for (const auto& e : g.edges_) {
        ++g.offsets_[e.u + 1];
        ++g.offsets_[e.v + 1];
    }
    std::partial_sum(g.offsets_.begin(), g.offsets_.end(), g.offsets_.begin());
    std::vector<std::pair<VertexId, EdgeId>> slots(g.offsets_.back());
    std::vector<std::size_t> fill(g.offsets_.begin(), g.offsets_.end() - 1);
    for (EdgeId id = 0; id < g.edges_.size(); ++id) {
        const auto& e = g.edges_[id];
        slots[fill[e.u]++] = {e.v, id};
        slots[fill[e.v]++] = {e.u, id};
    }
    g.nbrs_.resize(slots.size());
    g.inc_.resize(slots.size());
    for (std::size_t v = 0; v < order; ++v) {
        auto first = slots.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v]);
        auto last = slots.begin() + static_cast<std::ptrdiff_t>(g.offsets_[v + 1]);
        std::sort(first, last);
        for (auto it = first; it != last; ++it) {
            const auto pos = static_cast<std::size_t>(it - slots.begin());
            g.nbrs_[pos] = it->first;
            g.inc_[pos] = it->second;
        }
    }
    return g;
}

std::optional<EdgeId> Graph::find_edge(VertexId a, VertexId b) const {
    if (a >= order() || b >= order()) return std::nullopt;
    auto nb = neighbors(a);
    auto it = std::lower_bound(nb.begin(), nb.end(), b);
    if (it == nb.end() || *it != b) return std::nullopt;
    return incident(a)[static_cast<std::size_t>(it - nb.begin())];
}

std::string Graph::name(VertexId v) const {
    return names_.empty() ? std::to_string(v) : names_[v];
}

std::optional<VertexId> Graph::find_vertex(const std::string& name) const {
    if (names_.empty()) {
        try {
            std::size_t used = 0;
            const auto v = std::stoul(name, &used);
            if (used == name.size() && v < order()) return static_cast<VertexId>(v);
        } catch (...) {
        }
        return std::nullopt;
    }
    for (VertexId v = 0; v < names_.size(); ++v)
        if (names_[v] == name) return v;
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Generator families

GeneratorFamily GeneratorFamily::custom(std::vector<std::vector<std::pair<int, int>>> pi) {
    GeneratorFamily f;
    f.kind = Kind::Custom;
    f.pi = std::move(pi);
    return f;
}

std::vector<int> GeneratorFamily::generator(int j, int length) const {
    std::vector<int> map(static_cast<std::size_t>(length));
    std::iota(map.begin(), map.end(), 0);
    switch (kind) {
        case Kind::Star:
            std::swap(map[0], map[static_cast<std::size_t>(j)]);
            break;
        case Kind::Pancake:
            std::reverse(map.begin(), map.begin() + j + 1);
            break;
        case Kind::Custom:
            std::swap(map[0], map[static_cast<std::size_t>(j)]);
            if (static_cast<std::size_t>(j) < pi.size())
                for (auto [a, b] : pi[static_cast<std::size_t>(j)])
                    std::swap(map[static_cast<std::size_t>(a)], map[static_cast<std::size_t>(b)]);
            break;
    }
    return map;
}

void GeneratorFamily::validate(int length) const {
    if (kind != Kind::Custom) return;
    if (pi.size() > static_cast<std::size_t>(std::max(length, 1)))
        throw std::invalid_argument("malformed family: more generators than positions");
    for (std::size_t j = 0; j < pi.size(); ++j) {
        if (j <= 2 && !pi[j].empty())
            throw std::invalid_argument("malformed family: pi_1 and pi_2 must be the identity");
        std::vector<bool> used(j, false);
        for (auto [a, b] : pi[j]) {
            if (a < 1 || b < 1 || a >= static_cast<int>(j) || b >= static_cast<int>(j) || a == b)
                throw std::invalid_argument("malformed family: pi_" + std::to_string(j) +
                                            " must move only positions 1.." + std::to_string(j - 1));
            if (used[static_cast<std::size_t>(a)] || used[static_cast<std::size_t>(b)])
                throw std::invalid_argument("malformed family: transpositions of pi_" + std::to_string(j) +
                                            " are not disjoint");
            used[static_cast<std::size_t>(a)] = used[static_cast<std::size_t>(b)] = true;
        }
    }
}

std::string GeneratorFamily::name() const {
    switch (kind) {
        case Kind::Star: return "st";
        case Kind::Pancake: return "pc";
        case Kind::Custom: return "custom";
    }
    return "?";
}

GeneratorFamily::Kind parse_family_kind(const std::string& text) {
    if (text == "st" || text == "star") return GeneratorFamily::Kind::Star;
    if (text == "pc" || text == "pancake") return GeneratorFamily::Kind::Pancake;
    if (text == "custom") return GeneratorFamily::Kind::Custom;
    throw std::invalid_argument("unknown family '" + text + "'");
}

GeneratorFamily read_custom_family(std::istream& in) {
    std::vector<std::vector<std::pair<int, int>>> pi;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        int j = 0;
        if (!(ls >> j)) continue;
        if (j < 1) throw std::invalid_argument("malformed family: generator index must be >= 1");
        std::vector<int> pts;
        int x = 0;
        while (ls >> x) pts.push_back(x);
        if (!ls.eof()) throw std::invalid_argument("malformed family: bad token on line '" + line + "'");
        if (pts.size() % 2) throw std::invalid_argument("malformed family: odd number of positions");
        if (pi.size() <= static_cast<std::size_t>(j)) pi.resize(static_cast<std::size_t>(j) + 1);
        for (std::size_t t = 0; t < pts.size(); t += 2) pi[static_cast<std::size_t>(j)].emplace_back(pts[t], pts[t + 1]);
    }
    return GeneratorFamily::custom(std::move(pi));
}

// ---------------------------------------------------------------------------
// Permutation graphs

VertexId PermGraph::index_of(const MString& v) const {
    const auto r = rank(v, params);
    if (r >= vertices.size() || vertices[r] != v) throw std::invalid_argument("string is not a vertex of this graph");
    return static_cast<VertexId>(r);
}

namespace {

// Packs strings into 64-bit keys that sort like the strings, when they fit.
struct Packer {
    int bits = 0;
    bool usable = false;

    explicit Packer(const Params& p) {
        bits = 1;
        while ((1 << bits) < p.k) ++bits;
        usable = bits * p.length() <= 64;
    }
    std::uint64_t key(const std::vector<Symbol>& e) const {
        std::uint64_t k = 0;
        for (Symbol s : e) k = (k << bits) | s;
        return k;
    }
};

}  // namespace

PermGraph build_graph(const Params& p, const GeneratorFamily& family, std::uint64_t cap) {
    PermGraph pg;
    pg.params = p;
    pg.family = family;
    family.validate(p.length());
    pg.vertices = enumerate_vertices(p, cap);
    const auto n = pg.vertices.size();
    const int len = p.length();

    std::vector<std::vector<int>> gens(static_cast<std::size_t>(len));
    for (int j = 1; j < len; ++j) gens[static_cast<std::size_t>(j)] = family.generator(j, len);

    const Packer packer(p);
    std::vector<std::uint64_t> keys;
    if (packer.usable) {
        keys.reserve(n);
        for (const auto& v : pg.vertices) keys.push_back(packer.key(v.entries()));
    }
    auto lookup = [&](const std::vector<Symbol>& w) -> VertexId {
        if (packer.usable) {
            const auto k = packer.key(w);
            return static_cast<VertexId>(std::lower_bound(keys.begin(), keys.end(), k) - keys.begin());
        }
        return static_cast<VertexId>(rank(MString(w, p), p));
    };

    const unsigned workers = thread_count();
    std::vector<std::vector<Edge>> chunk_edges(workers);
    std::vector<std::vector<std::pair<VertexId, VertexId>>> chunk_flags(workers);
    parallel_chunks(n, workers, [&](unsigned c, std::size_t begin, std::size_t end) {
        std::vector<Symbol> w(static_cast<std::size_t>(len));
        for (std::size_t vi = begin; vi < end; ++vi) {
            const auto& v = pg.vertices[vi].entries();
            for (int j = 1; j < len; ++j) {
                const bool differs = v[static_cast<std::size_t>(j)] != v[0];
                if (family.kind != GeneratorFamily::Kind::Custom && !differs) continue;
                const auto& g = gens[static_cast<std::size_t>(j)];
                for (int q = 0; q < len; ++q) w[static_cast<std::size_t>(q)] = v[static_cast<std::size_t>(g[static_cast<std::size_t>(q)])];
                if (w == v) continue;
                const VertexId wi = lookup(w);
                if (wi <= vi) continue;
                chunk_edges[c].push_back({static_cast<VertexId>(vi), wi, {j}});
                if (!differs) chunk_flags[c].emplace_back(static_cast<VertexId>(vi), wi);
            }
        }
    });
    std::vector<Edge> edges;
    std::vector<std::pair<VertexId, VertexId>> flagged;
    for (unsigned c = 0; c < workers; ++c) {
        edges.insert(edges.end(), std::make_move_iterator(chunk_edges[c].begin()),
                     std::make_move_iterator(chunk_edges[c].end()));
        flagged.insert(flagged.end(), chunk_flags[c].begin(), chunk_flags[c].end());
    }

    std::vector<std::string> names;
    names.reserve(n);
    for (const auto& v : pg.vertices) names.push_back(format_symbols(v.entries(), p.k));
    pg.graph = Graph::from_edges(n, std::move(edges), std::move(names));
    for (auto [a, b] : flagged) pg.non_star_like.push_back(*pg.graph.find_edge(a, b));
    std::sort(pg.non_star_like.begin(), pg.non_star_like.end());
    pg.non_star_like.erase(std::unique(pg.non_star_like.begin(), pg.non_star_like.end()), pg.non_star_like.end());
    return pg;
}

// ---------------------------------------------------------------------------
// Metrics

std::vector<int> bfs_distances(const Graph& g, VertexId source, int max_depth) {
    std::vector<int> dist(g.order(), -1);
    std::vector<VertexId> queue{source};
    dist[source] = 0;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const auto x = queue[head];
        if (max_depth >= 0 && dist[x] >= max_depth) continue;
        for (auto y : g.neighbors(x)) {
            if (dist[y] < 0) {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    return dist;
}

int girth(const Graph& g, int stop_at_or_below) {
    int best = kInfiniteGirth;
    const auto n = g.order();
    std::vector<int> dist(n, -1);
    std::vector<VertexId> parent(n), queue;
    for (VertexId s = 0; s < n; ++s) {
        queue.assign(1, s);
        dist[s] = 0;
        parent[s] = s;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto x = queue[head];
            if (best != kInfiniteGirth && 2 * dist[x] + 1 >= best) break;
            for (auto y : g.neighbors(x)) {
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (parent[x] != y) {
                    best = std::min(best, dist[x] + dist[y] + 1);
                }
            }
        }
        for (auto v : queue) dist[v] = -1;
        if (best <= stop_at_or_below || best == 3) break;
    }
    return best;
}

bool has_triangle(const Graph& g) {
    for (const auto& e : g.edges()) {
        auto a = g.neighbors(e.u);
        auto b = g.neighbors(e.v);
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] == b[j]) return true;
            a[i] < b[j] ? ++i : ++j;
        }
    }
    return false;
}

std::vector<VertexSet> connected_components(const Graph& g) {
    std::vector<VertexSet> out;
    std::vector<bool> seen(g.order(), false);
    for (VertexId s = 0; s < g.order(); ++s) {
        if (seen[s]) continue;
        VertexSet comp{s};
        seen[s] = true;
        for (std::size_t head = 0; head < comp.size(); ++head)
            for (auto y : g.neighbors(comp[head]))
                if (!seen[y]) {
                    seen[y] = true;
                    comp.push_back(y);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

std::optional<std::vector<VertexId>> odd_closed_walk(const Graph& g) {
    const auto n = g.order();
    std::vector<int> depth(n, -1);
    std::vector<VertexId> parent(n);
    for (VertexId s = 0; s < n; ++s) {
        if (depth[s] >= 0) continue;
        depth[s] = 0;
        parent[s] = s;
        std::vector<VertexId> queue{s};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            const auto x = queue[head];
            for (auto y : g.neighbors(x)) {
                if (depth[y] < 0) {
                    depth[y] = depth[x] + 1;
                    parent[y] = x;
                    queue.push_back(y);
                } else if (depth[y] == depth[x]) {
                    // x and y hang at equal depth: tree paths to their meeting point plus edge xy is odd.
                    std::vector<VertexId> left{x}, right{y};
                    auto a = x, b = y;
                    while (a != b) {
                        a = parent[a];
                        b = parent[b];
                        left.push_back(a);
                        right.push_back(b);
                    }
                    right.pop_back();
                    std::reverse(right.begin(), right.end());
                    left.insert(left.end(), right.begin(), right.end());
                    return left;
                }
            }
        }
    }
    return std::nullopt;
}

GraphMetrics analyze(const Graph& g) {
    GraphMetrics m;
    m.vertices = g.order();
    m.edges = g.size();
    for (VertexId v = 0; v < g.order(); ++v) ++m.degree_histogram[g.degree(v)];
    m.regular = m.degree_histogram.size() == 1;
    m.biregular = m.degree_histogram.size() == 2;
    m.girth = girth(g);
    m.components = connected_components(g).size();
    m.connected = m.components <= 1;
    m.bipartite = !odd_closed_walk(g).has_value();
    return m;
}

// ---------------------------------------------------------------------------
// Cycles

std::vector<SixCycle> six_cycles(const Graph& g, std::size_t max_vertices) {
    if (g.order() > max_vertices)
        throw InstanceTooLarge("six-cycle enumeration limited to " + std::to_string(max_vertices) + " vertices");
    std::vector<SixCycle> out;
    SixCycle path{};
    std::vector<bool> on(g.order(), false);
    auto dfs = [&](auto&& self, int depth) -> void {
        const auto s = path[0];
        const auto x = path[static_cast<std::size_t>(depth - 1)];
        if (depth == 6) {
            if (path[1] < path[5] && g.adjacent(x, s)) out.push_back(path);
            return;
        }
        for (auto y : g.neighbors(x)) {
            if (y <= s || on[y]) continue;
            on[y] = true;
            path[static_cast<std::size_t>(depth)] = y;
            self(self, depth + 1);
            on[y] = false;
        }
    };
    for (VertexId s = 0; s < g.order(); ++s) {
        path[0] = s;
        on[s] = true;
        dfs(dfs, 1);
        on[s] = false;
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---------------------------------------------------------------------------
// Subgraphs

namespace {

Subgraph restrict_graph(const Graph& g, const std::vector<bool>& keep_vertex, const std::vector<bool>& drop_edge) {
    Subgraph s;
    std::vector<VertexId> remap(g.order(), 0);
    std::vector<std::string> names;
    for (VertexId v = 0; v < g.order(); ++v) {
        if (!keep_vertex[v]) continue;
        remap[v] = static_cast<VertexId>(s.origin.size());
        s.origin.push_back(v);
        if (g.has_names()) names.push_back(g.name(v));
    }
    std::vector<Edge> edges;
    for (EdgeId id = 0; id < g.size(); ++id) {
        const auto& e = g.edge(id);
        if ((!drop_edge.empty() && drop_edge[id]) || !keep_vertex[e.u] || !keep_vertex[e.v]) continue;
        edges.push_back({remap[e.u], remap[e.v], e.labels});
        s.edge_origin.push_back(id);
    }
    // Edges keep (u, v) order under a monotone remap, so edge_origin stays aligned with the new ids.
    s.graph = Graph::from_edges(s.origin.size(), std::move(edges), std::move(names));
    return s;
}

}  // namespace

Subgraph subgraph(const Graph& g, const VertexSet& delete_vertices, const std::vector<EdgeId>& delete_edges) {
    std::vector<bool> keep(g.order(), true);
    for (auto v : delete_vertices) {
        if (v >= g.order()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
        keep[v] = false;
    }
    std::vector<bool> drop(g.size(), false);
    for (auto e : delete_edges) {
        if (e >= g.size()) throw std::invalid_argument("unknown edge " + std::to_string(e));
        drop[e] = true;
    }
    return restrict_graph(g, keep, drop);
}

Subgraph induced_subgraph(const Graph& g, const VertexSet& keep_list) {
    std::vector<bool> keep(g.order(), false);
    for (auto v : keep_list) {
        if (v >= g.order()) throw std::invalid_argument("unknown vertex " + std::to_string(v));
        keep[v] = true;
    }
    return restrict_graph(g, keep, {});
}

std::vector<Subgraph> components(const Graph& g) {
    std::vector<Subgraph> out;
    for (const auto& comp : connected_components(g)) out.push_back(induced_subgraph(g, comp));
    return out;
}

// ---------------------------------------------------------------------------
// Isomorphism

namespace {

// Stable colour refinement over the disjoint union of g and h, so colours are comparable across both.
std::vector<int> refine_colors(const Graph& g, const Graph& h) {
    const auto ng = g.order();
    const auto n = ng + h.order();
    auto nbrs = [&](std::size_t v) { return v < ng ? g.neighbors(static_cast<VertexId>(v)) : h.neighbors(static_cast<VertexId>(v - ng)); };
    std::vector<int> color(n);
    for (std::size_t v = 0; v < n; ++v) color[v] = static_cast<int>(nbrs(v).size());
    std::size_t classes = 0;
    for (;;) {
        std::map<std::vector<int>, int> ids;
        std::vector<int> next(n);
        for (std::size_t v = 0; v < n; ++v) {
            std::vector<int> sig{color[v]};
            for (auto y : nbrs(v)) sig.push_back(color[v < ng ? y : y + ng]);
            std::sort(sig.begin() + 1, sig.end());
            next[v] = ids.try_emplace(std::move(sig), static_cast<int>(ids.size())).first->second;
        }
        color = std::move(next);
        if (ids.size() == classes) break;
        classes = ids.size();
    }
    return color;
}

std::vector<std::uint16_t> distance_matrix(const Graph& g) {
    const auto n = g.order();
    std::vector<std::uint16_t> d(n * n, std::numeric_limits<std::uint16_t>::max());
    for (VertexId s = 0; s < n; ++s) {
        auto dist = bfs_distances(g, s);
        for (std::size_t t = 0; t < n; ++t)
            if (dist[t] >= 0) d[s * n + t] = static_cast<std::uint16_t>(dist[t]);
    }
    return d;
}

}  // namespace

bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<VertexId>& mapping) {
    if (g.order() != h.order() || g.size() != h.size() || mapping.size() != g.order()) return false;
    std::vector<bool> hit(h.order(), false);
    for (auto m : mapping) {
        if (m >= h.order() || hit[m]) return false;
        hit[m] = true;
    }
    for (const auto& e : g.edges())
        if (!h.adjacent(mapping[e.u], mapping[e.v])) return false;
    return true;
}

std::optional<std::vector<VertexId>> isomorphism(const Graph& g, const Graph& h, IsomorphismOptions opts) {
    const auto n = g.order();
    if (n > opts.max_vertices || h.order() > opts.max_vertices)
        throw InstanceTooLarge("isomorphism test limited to " + std::to_string(opts.max_vertices) + " vertices");
    if (n != h.order() || g.size() != h.size()) return std::nullopt;
    if (n == 0) return std::vector<VertexId>{};

    const auto color = refine_colors(g, h);
    {
        std::vector<int> cg(color.begin(), color.begin() + static_cast<std::ptrdiff_t>(n));
        std::vector<int> ch(color.begin() + static_cast<std::ptrdiff_t>(n), color.end());
        std::sort(cg.begin(), cg.end());
        std::sort(ch.begin(), ch.end());
        if (cg != ch) return std::nullopt;
    }
    auto color_g = [&](VertexId v) { return color[v]; };
    auto color_h = [&](VertexId v) { return color[n + v]; };

    const bool use_dist = n <= opts.distance_matrix_limit;
    std::vector<std::uint16_t> dg, dh;
    if (use_dist) {
        dg = distance_matrix(g);
        dh = distance_matrix(h);
    }

    // Visit g in BFS order, starting each component at a vertex of its rarest colour.
    std::map<int, int> freq;
    for (VertexId v = 0; v < n; ++v) ++freq[color_g(v)];
    std::vector<VertexId> order;
    std::vector<std::optional<VertexId>> parent(n);
    std::vector<bool> placed(n, false);
    while (order.size() < n) {
        VertexId root = 0;
        int best = std::numeric_limits<int>::max();
        for (VertexId v = 0; v < n; ++v)
            if (!placed[v] && freq[color_g(v)] < best) {
                best = freq[color_g(v)];
                root = v;
            }
        placed[root] = true;
        const auto start = order.size();
        order.push_back(root);
        for (std::size_t head = start; head < order.size(); ++head)
            for (auto y : g.neighbors(order[head]))
                if (!placed[y]) {
                    placed[y] = true;
                    parent[y] = order[head];
                    order.push_back(y);
                }
    }

    std::vector<VertexId> map_g(n, 0);
    std::vector<bool> used_h(n, false), mapped_g(n, false);

    auto consistent = [&](std::size_t idx, VertexId x, VertexId c) {
        if (used_h[c] || color_g(x) != color_h(c) || g.degree(x) != h.degree(c)) return false;
        std::size_t gx = 0, hc = 0;
        for (auto y : g.neighbors(x))
            if (mapped_g[y]) {
                ++gx;
                if (!h.adjacent(c, map_g[y])) return false;
            }
        for (auto z : h.neighbors(c))
            if (used_h[z]) ++hc;
        if (gx != hc) return false;
        if (use_dist)
            for (std::size_t t = 0; t < idx; ++t) {
                const auto y = order[t];
                if (dg[x * n + y] != dh[c * n + map_g[y]]) return false;
            }
        return true;
    };

    auto search = [&](auto&& self, std::size_t idx) -> bool {
        if (idx == n) return true;
        const auto x = order[idx];
        auto attempt = [&](VertexId c) {
            if (!consistent(idx, x, c)) return false;
            map_g[x] = c;
            mapped_g[x] = true;
            used_h[c] = true;
            if (self(self, idx + 1)) return true;
            mapped_g[x] = false;
            used_h[c] = false;
            return false;
        };
        if (parent[x]) {
            for (auto c : h.neighbors(map_g[*parent[x]]))
                if (attempt(c)) return true;
        } else {
            for (VertexId c = 0; c < n; ++c)
                if (attempt(c)) return true;
        }
        return false;
    };
    if (!search(search, 0)) return std::nullopt;
    return map_g;
}

// ---------------------------------------------------------------------------
// Named small graphs

Graph complete_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId a = 0; a < n; ++a)
        for (VertexId b = a + 1; b < n; ++b) edges.push_back({a, b, {}});
    return Graph::from_edges(n, std::move(edges));
}

Graph complete_bipartite(std::size_t a, std::size_t b) {
    std::vector<Edge> edges;
    std::vector<std::string> names;
    for (std::size_t i = 0; i < a; ++i) names.push_back("w" + std::to_string(i));
    for (std::size_t i = 0; i < b; ++i) names.push_back("y" + std::to_string(i));
    for (VertexId x = 0; x < a; ++x)
        for (VertexId y = 0; y < b; ++y) edges.push_back({x, static_cast<VertexId>(a + y), {}});
    return Graph::from_edges(a + b, std::move(edges), std::move(names));
}

Graph hypercube(int dim) {
    const VertexId n = VertexId{1} << dim;
    std::vector<Edge> edges;
    std::vector<std::string> names;
    for (VertexId v = 0; v < n; ++v) {
        std::string s;
        for (int b = dim - 1; b >= 0; --b) s.push_back((v >> b) & 1 ? '1' : '0');
        names.push_back(std::move(s));
        for (int b = 0; b < dim; ++b)
            if (!((v >> b) & 1)) edges.push_back({v, v | (VertexId{1} << b), {b + 1}});
    }
    return Graph::from_edges(n, std::move(edges), std::move(names));
}

Graph cycle_graph(std::size_t n) {
    std::vector<Edge> edges;
    for (VertexId v = 0; v < n; ++v) edges.push_back({v, static_cast<VertexId>((v + 1) % n), {}});
    return Graph::from_edges(n, std::move(edges));
}

std::pair<Graph, TotalColoring> build_odd_complete_colored(int n) {
    if (n < 1) throw std::invalid_argument("build_odd_complete_colored requires n >= 1");
    const int order = 2 * n + 1;
    Graph g = complete_graph(static_cast<std::size_t>(order));
    TotalColoring tc;
    tc.vertex.resize(static_cast<std::size_t>(order));
    std::iota(tc.vertex.begin(), tc.vertex.end(), 0);
    tc.palette = tc.vertex;
    tc.edge.assign(g.size(), -1);
    for (int j = 0; j < order; ++j)
        for (int i = 1; i <= n; ++i) {
            const auto a = static_cast<VertexId>(((j - i) % order + order) % order);
            const auto b = static_cast<VertexId>((j + i) % order);
            tc.edge[*g.find_edge(a, b)] = j;
        }
    return {std::move(g), std::move(tc)};
}

}  // namespace mpg
