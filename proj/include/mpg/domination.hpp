#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mpg/coloring.hpp"
#include "mpg/graph.hpp"

namespace mpg {

/// Vertices whose first entry is `symbol`.
VertexSet se_set(const PermGraph& g, int symbol);

/// ell = 2: vertices whose first symbol reappears at `position`.
VertexSet sigma_set(const PermGraph& g, int position);

/// N(v) intersected with S; throws when v is in S.
VertexSet d_set(const Graph& g, VertexId v, const VertexSet& s);

struct DominationViolation {
    enum class Kind { WrongCount, NonUniqueIntersection, NonIndependent, Distance };
    Kind kind = Kind::WrongCount;
    /// WrongCount: {v}; NonUniqueIntersection: {v} then the whole intersection; NonIndependent: an adjacent pair.
    std::vector<VertexId> vertices;
    std::string detail;
};

std::string to_string(DominationViolation::Kind kind);

/// Efficient-domination certificate for a candidate S.
struct DominationCertificate {
    VertexSet set;
    int ell = 1;
    bool pass = false;
    /// dominators[v] = N(v) intersected with S for v outside S; empty for members.
    std::vector<VertexSet> dominators;
    std::vector<DominationViolation> violations;
    std::size_t violation_count = 0;
    bool truncated = false;
    /// Least distance between two members; reported for ell = 1.
    std::optional<int> min_internal_distance;
};

/// Checks the E^ell-set conditions. Throws PreconditionError when g has a triangle.
DominationCertificate verify_efficient_domination(const Graph& g, const VertexSet& s, int ell,
                                                  std::size_t witness_cap = kDefaultWitnessCap);

/// Least pairwise graph distance inside S (kInfiniteGirth when |S| < 2 or members are disconnected).
int min_internal_distance(const Graph& g, const VertexSet& s);

enum class SetFamily { SE, Sigma };

struct PartitionReport {
    SetFamily family = SetFamily::SE;
    int ell = 1;
    std::vector<VertexSet> sets;
    bool partitions_vertices = false;
    /// Every dominator set with its centre induces K_{1,ell}.
    bool stars_are_k1l = false;
    /// Each edge is covered exactly twice by all dominator stars, over every set.
    bool double_cover = false;
    /// Only evaluated for k = 2 (SE family): per-set stars partition E(G).
    std::optional<bool> per_set_edge_partition;
    /// member-count -> number of members that lie in that many dominator sets (over all sets)
    std::map<std::size_t, std::size_t> membership_histogram;
    /// (k-1)*ell for SE, 2k-2 for Sigma.
    std::size_t expected_membership = 0;
    bool membership_matches = false;

    bool pass() const;
};

PartitionReport verify_partition_and_edge_cover(const PermGraph& g, SetFamily family);

struct CodeSearchOptions {
    std::size_t max_vertices = 1'000;
    std::size_t max_results = 100'000;
};

/// Complete backtracking search for every E^ell-set; each hit is re-checked by the brute-force predicate.
std::vector<VertexSet> code_search(const Graph& g, int ell, CodeSearchOptions opts = {});

namespace oracle {
/// Direct transcription of the definition over an adjacency matrix; independent of verify_efficient_domination.
bool is_efficient_dominating(const Graph& g, const VertexSet& s, int ell);
}  // namespace oracle

struct EiAvoidanceReport {
    /// colour -> no colour-i edge touches Sigma_i
    std::map<int, bool> per_color;
    /// Every colour-(2k-1) vertex has equal first and last entries.
    bool last_position_rule = false;
    std::vector<std::pair<int, EdgeId>> offending;

    bool pass() const;
};

EiAvoidanceReport verify_ei_avoidance(const PermGraph& g, const TotalColoring& tc);

}  // namespace mpg
