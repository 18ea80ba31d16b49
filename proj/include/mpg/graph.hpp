#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <limits>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "mpg/multiset.hpp"

namespace mpg {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;
/// Sorted, duplicate-free vertex list.
using VertexSet = std::vector<VertexId>;

inline constexpr int kInfiniteGirth = std::numeric_limits<int>::max();

struct Edge {
    VertexId u = 0;
    VertexId v = 0;
    /// Generator positions producing this edge (more than one after parallel-edge collapse).
    std::vector<int> labels;
};

/// Immutable simple graph in compressed adjacency form. Edge ids follow (u, v) order with u < v.
class Graph {
public:
    Graph() = default;

    /// Normalizes endpoints, merges parallel edges (label union), rejects loops.
    static Graph from_edges(std::size_t order, std::vector<Edge> edges, std::vector<std::string> names = {});

    std::size_t order() const { return offsets_.empty() ? 0 : offsets_.size() - 1; }
    std::size_t size() const { return edges_.size(); }

    std::span<const VertexId> neighbors(VertexId v) const {
        return {nbrs_.data() + offsets_[v], nbrs_.data() + offsets_[v + 1]};
    }
    /// Edge ids aligned with neighbors(v).
    std::span<const EdgeId> incident(VertexId v) const {
        return {inc_.data() + offsets_[v], inc_.data() + offsets_[v + 1]};
    }
    std::size_t degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

    const Edge& edge(EdgeId e) const { return edges_[e]; }
    const std::vector<Edge>& edges() const { return edges_; }
    std::optional<EdgeId> find_edge(VertexId a, VertexId b) const;
    bool adjacent(VertexId a, VertexId b) const { return find_edge(a, b).has_value(); }

    std::string name(VertexId v) const;
    bool has_names() const { return !names_.empty(); }
    std::optional<VertexId> find_vertex(const std::string& name) const;

private:
    std::vector<std::size_t> offsets_;
    std::vector<VertexId> nbrs_;
    std::vector<EdgeId> inc_;
    std::vector<Edge> edges_;
    std::vector<std::string> names_;
};

/// Generator family A(pi_1, ..., pi_{n-1}); generator j acts as (0 j) composed with pi_j.
struct GeneratorFamily {
    enum class Kind { Star, Pancake, Custom };
    Kind kind = Kind::Star;
    /// For Custom: pi[j] is a list of disjoint transpositions on {1, ..., j-1}. Index 0 unused.
    std::vector<std::vector<std::pair<int, int>>> pi;

    static GeneratorFamily star() { return {}; }
    static GeneratorFamily pancake() { return {Kind::Pancake, {}}; }
    static GeneratorFamily custom(std::vector<std::vector<std::pair<int, int>>> pi);

    /// Position map of generator j on strings of the given length: w[p] = v[map[p]].
    std::vector<int> generator(int j, int length) const;
    void validate(int length) const;
    std::string name() const;
};

GeneratorFamily::Kind parse_family_kind(const std::string& text);

/// Reads a custom involution file: one line per generator, "j a b c d ..." = pi_j = (a b)(c d)...
GeneratorFamily read_custom_family(std::istream& in);

/// Graph on l-set permutations whose vertex ids are lexicographic ranks.
struct PermGraph {
    Params params;
    GeneratorFamily family;
    std::vector<MString> vertices;
    Graph graph;
    /// Custom families only: edges created with v_j == v_0 but a moved string.
    std::vector<EdgeId> non_star_like;

    VertexId index_of(const MString& v) const;
    const MString& vertex(VertexId v) const { return vertices[v]; }
    std::size_t order() const { return graph.order(); }
};

PermGraph build_graph(const Params& p, const GeneratorFamily& family, std::uint64_t cap = kDefaultVertexCap);

struct GraphMetrics {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    /// degree -> number of vertices
    std::map<std::size_t, std::size_t> degree_histogram;
    bool regular = false;
    bool biregular = false;
    int girth = kInfiniteGirth;
    std::size_t components = 0;
    bool connected = false;
    bool bipartite = false;
};

GraphMetrics analyze(const Graph& g);

/// Shortest cycle length; kInfiniteGirth for forests. Stops early once `stop_at_or_below` is reached.
int girth(const Graph& g, int stop_at_or_below = 0);
bool has_triangle(const Graph& g);

/// BFS distances from source; -1 unreachable; search stops beyond max_depth when >= 0.
std::vector<int> bfs_distances(const Graph& g, VertexId source, int max_depth = -1);

std::vector<VertexSet> connected_components(const Graph& g);

/// An odd closed walk when the graph is not bipartite: odd length, last vertex adjacent to the first.
std::optional<std::vector<VertexId>> odd_closed_walk(const Graph& g);

using SixCycle = std::array<VertexId, 6>;

/// Every 6-cycle once, rotated to start at its least vertex, oriented so c[1] < c[5].
std::vector<SixCycle> six_cycles(const Graph& g, std::size_t max_vertices = 10'000);

/// Result of vertex/edge deletion; `origin[v]` is the vertex id in the parent graph.
struct Subgraph {
    Graph graph;
    std::vector<VertexId> origin;
    /// parent edge id for every surviving edge
    std::vector<EdgeId> edge_origin;
};

Subgraph subgraph(const Graph& g, const VertexSet& delete_vertices, const std::vector<EdgeId>& delete_edges);
Subgraph induced_subgraph(const Graph& g, const VertexSet& keep);
/// Components as induced subgraphs, ordered by least parent vertex id.
std::vector<Subgraph> components(const Graph& g);

struct IsomorphismOptions {
    std::size_t max_vertices = 10'000;
    /// Distance-profile pruning is used up to this order.
    std::size_t distance_matrix_limit = 3'000;
};

/// mapping[v in g] = vertex of h, when isomorphic.
std::optional<std::vector<VertexId>> isomorphism(const Graph& g, const Graph& h, IsomorphismOptions opts = {});
bool is_isomorphism(const Graph& g, const Graph& h, const std::vector<VertexId>& mapping);

/// Colours for every vertex and edge; -1 marks an uncoloured element.
struct TotalColoring {
    std::vector<int> vertex;
    std::vector<int> edge;
    std::vector<int> palette;
};

Graph complete_graph(std::size_t n);
Graph complete_bipartite(std::size_t a, std::size_t b);
Graph hypercube(int dim);
Graph cycle_graph(std::size_t n);

/// K_{2n+1} with vertex j coloured j and edge {j-i, j+i} coloured j (mod 2n+1).
std::pair<Graph, TotalColoring> build_odd_complete_colored(int n);

}  // namespace mpg
