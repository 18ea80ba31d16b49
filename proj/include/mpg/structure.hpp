#pragma once

#include <array>
#include <map>
#include <optional>
#include <vector>

#include "mpg/coloring.hpp"
#include "mpg/graph.hpp"

namespace mpg {

enum class SixCycleType { Type1, Type2, Other };

struct SixCycleClass {
    SixCycle cycle{};
    /// edge_colors[i] colours the edge cycle[i] -- cycle[(i+1) % 6].
    std::array<int, 6> edge_colors{};
    SixCycleType type = SixCycleType::Other;
    /// Type1: the three opposite-pair colours ascending. Type2: the two alternating colours ascending.
    std::vector<int> colors;
};

std::string to_string(SixCycleType type);

/// Type1: opposite edges share a colour, three colours in all. Type2: colours alternate d1, d2.
SixCycleClass classify_six_cycle(const Graph& g, const TotalColoring& tc, const SixCycle& cycle);

struct SixCycleCensus {
    std::vector<SixCycleClass> cycles;
    std::size_t type1 = 0;
    std::size_t type2 = 0;
    std::size_t other = 0;

    /// First cycle of the given type whose colour set equals `colors` (ascending).
    std::optional<SixCycleClass> find(SixCycleType type, const std::vector<int>& colors) const;
};

SixCycleCensus classify_six_cycles(const Graph& g, const TotalColoring& tc);

struct ChiComponent {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    bool regular = false;
    /// Inherited colouring is a proper total colouring.
    bool total = false;
    std::size_t colors_used = 0;
    /// Reported only.
    bool efficient = false;
    std::optional<bool> isomorphic_to_reference;
};

struct ChiItem {
    int color = 0;
    std::size_t class_size = 0;
    /// Item 1, evaluated when h > 4.
    std::optional<bool> removed_connected;
    std::optional<bool> removed_regular;
    /// Item 2.
    std::vector<ChiComponent> components;
    bool components_ok = false;
    /// Item 3.
    std::map<std::size_t, std::size_t> edge_removed_degrees;
    bool biregular = false;
    bool high_side_is_class = false;
    bool class_independent = false;
    /// Odd closed walk in G - E_i, parent vertex ids.
    std::optional<std::vector<VertexId>> odd_walk;

    bool pass() const;
};

struct ChiReport {
    /// One more than the palette size.
    int h = 0;
    bool hypothesis = false;
    std::string hypothesis_detail;
    std::vector<ChiItem> items;
    std::optional<std::size_t> expected_components;
    /// Every item has exactly expected_components components (true when no expectation is set).
    bool component_count_ok = true;

    bool pass() const;
};

/// Checks the three items for every colour. Components are compared against `reference` when supplied.
ChiReport theorem_chi_suite(const Graph& g, const TotalColoring& tc, const Graph* reference = nullptr,
                            std::optional<std::size_t> expected_components = std::nullopt);

struct Type1Audit {
    SixCycleClass cycle;
    int leftover = 0;
    /// Far endpoints of the leftover-colour edges, one per cycle vertex.
    std::vector<VertexId> landings;
    bool six_departing = false;
    bool landings_in_sigma = false;
    int min_distance = kInfiniteGirth;
    /// distance -> number of landing pairs
    std::map<int, std::size_t> distance_profile;
};

struct ToroidalAudit {
    int d1 = 0;
    std::array<int, 4> quad{};
    std::size_t type2_cycles = 0;
    /// Type2 union plus the departing edges of the contained Type1 cycles.
    Subgraph assembly;
    std::vector<Type1Audit> type1;
    /// (a)
    bool type1_disjoint = false;
    /// (b)
    bool departing_ok = false;
    /// (c), evaluated for k = 3 and d1 = 2k-1.
    std::optional<bool> sigma_shape_ok;
    /// total assembly degree -> number of Sigma_{d1} vertices
    std::map<std::size_t, std::size_t> sigma_degrees;
    /// (d)
    bool distance_ok = false;

    bool pass() const;
};

/// Throws std::invalid_argument when d1 and quad are not five distinct palette colours.
ToroidalAudit toroidal_assembly(const PermGraph& g, const TotalColoring& tc, int d1, std::array<int, 4> quad);

struct AugmentationAudit {
    Graph graph;
    /// Original colours, apexes coloured new_color, new edges uncoloured.
    TotalColoring coloring;
    std::vector<VertexSet> classes;
    int new_color = 0;
    std::size_t new_edges = 0;
    /// (a)
    bool classes_disjoint = false;
    bool classes_cover = false;
    bool classes_dominate = false;
    /// (b)
    bool extension_exists = false;
    std::optional<TotalColoring> extension;

    bool pass() const { return classes_disjoint && classes_dominate && !extension_exists; }
};

/// One apex per class, adjacent to every class member. Each class must be an E^ell-set of g.
/// Throws InstanceTooLarge above `max_new_edges`.
AugmentationAudit augment_supergraph(const Graph& g, const TotalColoring& tc, const std::vector<VertexSet>& classes,
                                     int ell, std::size_t max_new_edges = 64);

}  // namespace mpg
