#include "mpg/chains.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mpg/errors.hpp"

namespace mpg {

MString kappa_embed(const MString& v, int j, int k) {
    if (k < 1) throw std::invalid_argument("k must be positive");
    if (j < 0 || j > k) throw std::out_of_range("kappa index j must lie in [0, k]");
    if (v.size() != static_cast<std::size_t>(2 * k)) throw std::invalid_argument("kappa_embed expects a vertex of V_k^2");
    const int shift = ((j - k) % (k + 1) + (k + 1)) % (k + 1);
    std::vector<Symbol> out;
    out.reserve(v.size() + 2);
    for (auto s : v.entries()) {
        if (s >= k) throw std::invalid_argument("symbol outside [k]");
        out.push_back(static_cast<Symbol>((s + shift) % (k + 1)));
    }
    out.push_back(static_cast<Symbol>(j));
    out.push_back(static_cast<Symbol>(j));
    return MString(std::move(out), Params{k + 1, 2});
}

bool ChainReport::pass() const {
    return images_disjoint && images_induced_isomorphic && sigma_bijection && blocks_partition &&
           sigma_size == expected_sigma_size;
}

ChainReport verify_chain(int k, std::uint64_t cap) {
    const Params src{k, 2};
    const Params dst{k + 1, 2};
    src.validate();
    check_cap(dst, cap);
    const auto source = build_graph(src, GeneratorFamily::star(), cap);
    const auto target = build_graph(dst, GeneratorFamily::star(), cap);

    ChainReport r;
    r.k = k;
    std::vector<int> image_of(target.order(), -1);
    r.images_disjoint = true;
    r.images_induced_isomorphic = true;
    for (int j = 0; j <= k; ++j) {
        std::vector<VertexId> map(source.order());
        for (VertexId v = 0; v < source.order(); ++v) {
            map[v] = target.index_of(kappa_embed(source.vertex(v), j, k));
            if (image_of[map[v]] >= 0) r.images_disjoint = false;
            image_of[map[v]] = j;
        }
        VertexSet image(map.begin(), map.end());
        std::sort(image.begin(), image.end());
        // The explicit map carries every edge and the induced subgraph has no others, so it is an isomorphism.
        bool edges_carried = true;
        for (const auto& e : source.graph.edges()) edges_carried = edges_carried && target.graph.adjacent(map[e.u], map[e.v]);
        const auto induced = induced_subgraph(target.graph, image);
        r.images_induced_isomorphic = r.images_induced_isomorphic && edges_carried &&
                                      image.size() == source.order() && induced.graph.size() == source.graph.size();
        r.images.push_back(std::move(image));
    }

    const auto sigma = sigma_set(target, 2 * k + 1);
    std::vector<bool> in_sigma(target.order(), false);
    for (auto v : sigma) in_sigma[v] = true;
    r.sigma_size = sigma.size();
    std::uint64_t expected = k + 1;
    for (int i = 2; i <= 2 * k; ++i) expected *= static_cast<std::uint64_t>(i);
    r.expected_sigma_size = static_cast<std::size_t>(expected >> k);

    r.sigma_bijection = true;
    r.blocks.assign(static_cast<std::size_t>(k + 1), {});
    for (auto s : sigma) {
        int hits = 0, block = -1;
        for (auto w : target.graph.neighbors(s))
            if (image_of[w] >= 0) {
                ++hits;
                block = image_of[w];
            }
        if (hits != 1) r.sigma_bijection = false;
        else r.blocks[static_cast<std::size_t>(block)].push_back(s);
    }
    std::set<VertexId> full, restricted;
    for (const auto& image : r.images)
        for (auto x : image) {
            int hits = 0;
            for (auto w : target.graph.neighbors(x)) {
                full.insert(w);
                if (in_sigma[w]) {
                    ++hits;
                    restricted.insert(w);
                }
            }
            if (hits != 1) r.sigma_bijection = false;
        }
    std::size_t block_total = 0;
    for (const auto& b : r.blocks) block_total += b.size();
    r.blocks_partition = block_total == sigma.size();
    r.full_neighbourhood_union = full.size();
    r.full_reading_equals_sigma = VertexSet(full.begin(), full.end()) == sigma;
    r.restricted_reading_equals_sigma = VertexSet(restricted.begin(), restricted.end()) == sigma;
    r.sigma_density = static_cast<double>(sigma.size()) / static_cast<double>(target.order());
    r.thick = sigma.size() * static_cast<std::size_t>(2 * k + 1) == target.order();
    return r;
}

SchreierReport schreier_quotient_check(int k, int ell) {
    const Params p{k, ell};
    p.validate();
    const int n = p.length();
    if (n > 8) throw InstanceTooLarge("Schreier check limited to k * l <= 8");

    const auto quotient = build_graph(p, GeneratorFamily::star());
    SchreierReport r;
    r.table.params = p;
    std::vector<CosetClass> by_rank(quotient.order());
    for (VertexId v = 0; v < quotient.order(); ++v) {
        by_rank[v].vertex = quotient.vertex(v);
        for (int j = 1; j < n; ++j)
            if (quotient.vertex(v)[static_cast<std::size_t>(j)] != quotient.vertex(v).front()) by_rank[v].generators.emplace_back(0, j);
    }

    auto collapse = [&](const std::vector<Symbol>& s) {
        std::vector<Symbol> out(s.size());
        for (std::size_t i = 0; i < s.size(); ++i) out[i] = static_cast<Symbol>(s[i] / ell);
        return quotient.index_of(MString(std::move(out), p));
    };

    std::vector<Symbol> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), Symbol{0});
    std::set<std::pair<VertexId, VertexId>> lifted;
    r.quotient_sound = true;
    do {
        const auto c = collapse(perm);
        by_rank[c].fiber.push_back(perm);
        for (int j = 1; j < n; ++j) {
            if (perm[static_cast<std::size_t>(j)] / ell == perm[0] / ell) continue;
            auto w = perm;
            std::swap(w[0], w[static_cast<std::size_t>(j)]);
            const auto d = collapse(w);
            if (!quotient.graph.adjacent(c, d)) r.quotient_sound = false;
            lifted.emplace(std::min(c, d), std::max(c, d));
        }
    } while (std::next_permutation(perm.begin(), perm.end()));
    r.quotient_complete = lifted.size() == quotient.graph.size();

    r.fiber_size = by_rank.front().fiber.size();
    r.fibers_uniform = true;
    std::size_t young = 1;
    for (int i = 2; i <= ell; ++i) young *= static_cast<std::size_t>(i);
    std::size_t expected = 1;
    for (int i = 0; i < k; ++i) expected *= young;
    for (const auto& c : by_rank)
        if (c.fiber.size() != expected) r.fibers_uniform = false;

    // Young subgroup generators relabel symbols inside a block: a*ell + i <-> a*ell + i + 1.
    r.fibers_are_cosets = true;
    for (const auto& c : by_rank) {
        std::set<std::vector<Symbol>> orbit{c.fiber.front()};
        std::vector<std::vector<Symbol>> queue{c.fiber.front()};
        for (std::size_t h = 0; h < queue.size(); ++h)
            for (int a = 0; a < k; ++a)
                for (int i = 0; i + 1 < ell; ++i) {
                    const auto x = static_cast<Symbol>(a * ell + i), y = static_cast<Symbol>(x + 1);
                    auto next = queue[h];
                    for (auto& s : next) s = s == x ? y : s == y ? x : s;
                    if (orbit.insert(next).second) queue.push_back(std::move(next));
                }
        if (!std::equal(orbit.begin(), orbit.end(), c.fiber.begin(), c.fiber.end())) r.fibers_are_cosets = false;
    }

    r.table.classes = std::move(by_rank);
    if (ell == 2)
        std::stable_sort(r.table.classes.begin(), r.table.classes.end(), [&](const CosetClass& a, const CosetClass& b) {
            return repeat_position(a.vertex, p) < repeat_position(b.vertex, p);
        });
    return r;
}

std::string format_coset_table(const CosetTable& table) {
    std::vector<std::vector<std::string>> columns;
    std::size_t rows = 0;
    for (const auto& c : table.classes) {
        std::vector<std::string> col;
        for (const auto& f : c.fiber) col.push_back(format_symbols(f, table.params.length()));
        rows = std::max(rows, col.size());
        col.push_back(c.vertex.str());
        std::string gens;
        for (const auto& [a, b] : c.generators) {
            if (!gens.empty()) gens += ",";
            gens += "(" + std::to_string(a) + " " + std::to_string(b) + ")";
        }
        col.push_back(gens);
        columns.push_back(std::move(col));
    }
    std::vector<std::size_t> width;
    for (const auto& col : columns) {
        std::size_t w = 0;
        for (const auto& cell : col) w = std::max(w, cell.size());
        width.push_back(w);
    }
    std::vector<std::string> labels(rows + 2);
    labels.front() = "cosets";
    labels[rows] = "vertex";
    labels[rows + 1] = "gens";
    std::size_t label_width = 0;
    for (const auto& l : labels) label_width = std::max(label_width, l.size());

    std::ostringstream out;
    auto emit = [&](std::size_t row) {
        std::string line = labels[row] + std::string(label_width - labels[row].size(), ' ') + " |";
        for (std::size_t c = 0; c < columns.size(); ++c) {
            const auto& cell = columns[c][row];
            line += " " + cell + std::string(width[c] - cell.size(), ' ') + " |";
        }
        line.pop_back();
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out << line << '\n';
    };
    auto rule = [&] {
        std::size_t total = label_width + 1;
        for (auto w : width) total += w + 3;
        out << std::string(total, '-') << '\n';
    };
    for (std::size_t row = 0; row < rows; ++row) emit(row);
    rule();
    emit(rows);
    rule();
    emit(rows + 1);
    return out.str();
}

bool PancakeReport::pass() const {
    return last.pass && others_fail_with_witness && removal_regular && neighbourhoods_partition;
}

PancakeReport pancake_chain_check(int k, const GeneratorFamily& family) {
    if (k < 2 || k > 4) throw InstanceTooLarge("pancake chain check covers 2 <= k <= 4");
    const auto pg = build_graph(Params{k, 2}, family);
    const auto& g = pg.graph;
    const int last = 2 * k - 1;

    PancakeReport r;
    r.k = k;
    r.family = family.name();
    const auto sigma = sigma_set(pg, last);
    r.last = verify_efficient_domination(g, sigma, 1);
    r.others_fail_with_witness = true;
    for (int i = 1; i < last; ++i) {
        auto cert = verify_efficient_domination(g, sigma_set(pg, i), 1);
        const bool failed = !cert.pass && !cert.violations.empty();
        r.others_fail_with_witness = r.others_fail_with_witness && failed;
        r.some_other_fails = r.some_other_fails || failed;
        r.others.emplace_back(i, std::move(cert));
    }

    const auto removed = subgraph(g, sigma, {});
    for (VertexId v = 0; v < removed.graph.order(); ++v) ++r.removal_degrees[removed.graph.degree(v)];
    r.expected_removal_degree = g.order() ? static_cast<int>(g.degree(0)) - 1 : 0;
    r.removal_regular = r.removal_degrees.size() == 1 &&
                        r.removal_degrees.begin()->first == static_cast<std::size_t>(r.expected_removal_degree);

    std::vector<EdgeId> last_edges;
    for (EdgeId e = 0; e < g.size(); ++e) {
        const auto& labels = g.edge(e).labels;
        if (std::find(labels.begin(), labels.end(), last) != labels.end()) last_edges.push_back(e);
    }
    const auto residual = subgraph(g, sigma, last_edges);
    for (const auto& comp : connected_components(residual.graph)) r.residual_component_sizes.push_back(comp.size());

    std::vector<int> cover(g.order(), 0);
    for (auto s : sigma)
        for (auto w : g.neighbors(s)) ++cover[w];
    r.neighbourhoods_partition = true;
    for (VertexId v = 0; v < g.order(); ++v) {
        const bool member = std::binary_search(sigma.begin(), sigma.end(), v);
        if (member ? cover[v] != 0 : cover[v] != 1) r.neighbourhoods_partition = false;
    }
    return r;
}

}  // namespace mpg
