#include "mpg/io.hpp"

#include <array>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace mpg {

namespace {

std::string join_labels(const std::vector<int>& labels) {
    if (labels.empty()) return "-";
    std::string out;
    for (auto l : labels) {
        if (!out.empty()) out += ',';
        out += std::to_string(l);
    }
    return out;
}

std::vector<int> split_labels(const std::string& text) {
    std::vector<int> out;
    if (text == "-") return out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad edge label '" + text + "'");
        out.push_back(v);
    }
    return out;
}

void write_edges(std::ostream& out, const Graph& g) {
    for (const auto& e : g.edges()) out << g.name(e.u) << ' ' << g.name(e.v) << ' ' << join_labels(e.labels) << '\n';
}

}  // namespace

void write_edge_list(std::ostream& out, const PermGraph& g) {
    out << g.family.name() << ' ' << g.params.k << ' ' << g.params.ell << ' ' << g.graph.order() << ' ' << g.graph.size()
        << '\n';
    write_edges(out, g.graph);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << "graph 0 0 " << g.order() << ' ' << g.size() << '\n';
    write_edges(out, g);
}

LoadedGraph read_edge_list(std::istream& in) {
    LoadedGraph r;
    std::string header;
    if (!std::getline(in, header)) throw std::invalid_argument("edge list: missing header");
    std::istringstream hs(header);
    std::size_t n = 0, m = 0;
    if (!(hs >> r.family >> r.params.k >> r.params.ell >> n >> m)) throw std::invalid_argument("edge list: malformed header");

    std::vector<std::array<std::string, 3>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::array<std::string, 3> row;
        if (!(ls >> row[0] >> row[1] >> row[2])) throw std::invalid_argument("edge list: malformed line '" + line + "'");
        rows.push_back(std::move(row));
    }
    if (rows.size() != m) throw std::invalid_argument("edge list: header promises " + std::to_string(m) + " edges");

    const bool perm = r.family == "st" || r.family == "pc" || r.family == "custom";
    std::vector<Edge> edges;
    edges.reserve(m);
    if (perm) {
        r.params.validate();
        if (vertex_count(r.params) != n) throw std::invalid_argument("edge list: vertex count does not match k and l");
        PermGraph pg;
        pg.params = r.params;
        pg.family.kind = parse_family_kind(r.family);
        pg.vertices = enumerate_vertices(r.params);
        std::vector<std::string> names;
        for (const auto& v : pg.vertices) names.push_back(v.str());
        for (const auto& row : rows)
            edges.push_back({pg.index_of(MString::parse(row[0], r.params)), pg.index_of(MString::parse(row[1], r.params)),
                             split_labels(row[2])});
        pg.graph = Graph::from_edges(n, std::move(edges), std::move(names));
        r.graph = pg.graph;
        r.perm = std::move(pg);
        return r;
    }

    bool numeric = true;
    for (const auto& row : rows)
        for (int c = 0; c < 2 && numeric; ++c)
            numeric = !row[c].empty() && row[c].find_first_not_of("0123456789") == std::string::npos &&
                      std::stoull(row[c]) < n;
    std::unordered_map<std::string, VertexId> ids;
    std::vector<std::string> names;
    auto id = [&](const std::string& s) -> VertexId {
        if (numeric) return static_cast<VertexId>(std::stoul(s));
        auto [it, fresh] = ids.try_emplace(s, static_cast<VertexId>(names.size()));
        if (fresh) names.push_back(s);
        return it->second;
    };
    for (const auto& row : rows) {
        const auto u = id(row[0]);
        const auto v = id(row[1]);
        edges.push_back({u, v, split_labels(row[2])});
    }
    if (names.size() > n) throw std::invalid_argument("edge list: more vertex names than the header allows");
    if (!numeric)
        while (names.size() < n) names.push_back("v" + std::to_string(names.size()));
    r.graph = Graph::from_edges(n, std::move(edges), std::move(names));
    return r;
}

std::string dot_color(int color) {
    static const char* const table[] = {"gray",   "red",   "blue",  "green", "#8e7618", "black",
                                        "orange", "purple", "cyan", "magenta", "brown"};
    if (color >= 0 && color < static_cast<int>(std::size(table))) return table[color];
    return "gray";
}

void write_dot(std::ostream& out, const Graph& g, const TotalColoring* tc, const std::string& name) {
    out << "graph " << name << " {\n";
    for (VertexId v = 0; v < g.order(); ++v) {
        out << "  \"" << g.name(v) << '"';
        if (tc) out << " [style=filled, fillcolor=\"" << dot_color(tc->vertex[v]) << "\", xlabel=\"" << tc->vertex[v] << "\"]";
        out << ";\n";
    }
    for (EdgeId e = 0; e < g.size(); ++e) {
        const auto& ed = g.edge(e);
        out << "  \"" << g.name(ed.u) << "\" -- \"" << g.name(ed.v) << '"';
        if (tc) out << " [color=\"" << dot_color(tc->edge[e]) << "\", label=\"" << tc->edge[e] << "\"]";
        else if (!ed.labels.empty()) out << " [label=\"" << join_labels(ed.labels) << "\"]";
        out << ";\n";
    }
    out << "}\n";
}

void write_coloring(std::ostream& out, const Graph& g, const TotalColoring& tc) {
    for (VertexId v = 0; v < g.order(); ++v) out << "V " << g.name(v) << ' ' << tc.vertex[v] << '\n';
    for (EdgeId e = 0; e < g.size(); ++e)
        out << "E " << g.name(g.edge(e).u) << ' ' << g.name(g.edge(e).v) << ' ' << tc.edge[e] << '\n';
}

}  // namespace mpg
