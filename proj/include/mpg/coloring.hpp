#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "mpg/graph.hpp"

namespace mpg {

inline constexpr std::size_t kDefaultWitnessCap = 32;

enum class ColoringMode { ProperEdge, ProperVertex, Total, Efficient };

struct ColoringViolation {
    /// "edge-clash", "vertex-clash", "vertex-edge-clash", "not-rainbow", "off-palette"
    std::string kind;
    std::vector<VertexId> vertices;
    std::vector<EdgeId> edges;
    std::string detail;
};

struct ColoringReport {
    ColoringMode mode = ColoringMode::Total;
    bool proper_edge = true;
    bool proper_vertex = true;
    bool vertex_edge = true;
    bool efficient = true;
    std::vector<ColoringViolation> witnesses;
    std::size_t violation_count = 0;
    bool truncated = false;

    bool total() const { return proper_edge && proper_vertex && vertex_edge; }
    bool passed() const;
};

/// Edge colour = transposition position; star family only.
std::vector<int> positional_edge_coloring(const PermGraph& g);

/// ell = 2: vertex colour = repeat position, edge colour = position; palette {1, ..., 2k-1}.
TotalColoring sigma_total_coloring(const PermGraph& g);

/// Throws std::invalid_argument when an element is uncoloured or sizes mismatch.
ColoringReport verify_coloring(const Graph& g, const TotalColoring& tc, ColoringMode mode,
                               std::size_t witness_cap = kDefaultWitnessCap);

/// Picks one entry of L(v) for vertex v.
using ListSelector = std::function<int(VertexId, const std::vector<int>&)>;

struct ChoosabilityResult {
    bool lists_disjoint = true;
    /// First edge whose endpoint lists meet, when any.
    std::optional<EdgeId> overlapping_edge;
    bool proper = true;
    std::vector<int> coloring;
};

ChoosabilityResult choosability_suite(const PermGraph& g, const ListSelector& selector);

struct ObstructionReport {
    VertexSet ball;
    bool exhaustive_enumeration = false;
    /// Selections enumerated (enumeration mode) or the size of the search space (backtracking mode).
    std::uint64_t selections = 0;
    /// Selections for which a monochromatic pair at distance <= 2 was found.
    std::uint64_t witnessed = 0;
    /// Distance-2 vertices of the ball that share v's first symbol.
    std::size_t same_first_at_distance_two = 0;
    /// (ell-1)(ell-2), the count quoted in the pigeonhole argument.
    std::size_t pigeonhole_count = 0;
    /// Sample witnesses: pairs (a, b) with equal selected colour.
    std::vector<std::pair<VertexId, VertexId>> sample_witnesses;
    bool pass = false;
};

/// Every list selection on the distance-2 ball of v has two same-coloured vertices at distance <= 2.
ObstructionReport efficiency_obstruction_witness(const PermGraph& g, const MString& v,
                                                 std::uint64_t enumeration_cap = std::uint64_t{1} << 20,
                                                 std::size_t ball_cap = 4096);

}  // namespace mpg
