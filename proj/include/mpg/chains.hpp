#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mpg/domination.hpp"
#include "mpg/graph.hpp"

namespace mpg {

/// v in V_k^2 to V_{k+1}^2: every entry shifted by (j - k) mod (k+1), then the suffix j j.
MString kappa_embed(const MString& v, int j, int k);

struct ChainReport {
    int k = 0;
    /// images[j]: target vertex ids of kappa_k^j(V_k^2).
    std::vector<VertexSet> images;
    /// (a)
    bool images_disjoint = false;
    bool images_induced_isomorphic = false;
    /// (b): each Sigma vertex has one image neighbour and each image vertex one Sigma neighbour.
    bool sigma_bijection = false;
    /// blocks[j]: the Sigma_{2k+1} vertices adjacent to images[j].
    std::vector<VertexSet> blocks;
    bool blocks_partition = false;
    /// (c)
    std::size_t sigma_size = 0;
    std::size_t expected_sigma_size = 0;
    /// Union of neighbourhoods of the images under two readings: full open neighbourhoods, and Sigma-restricted ones.
    std::size_t full_neighbourhood_union = 0;
    bool full_reading_equals_sigma = false;
    bool restricted_reading_equals_sigma = false;
    /// |Sigma| / |V| of the target against 1 / (2k + 1).
    double sigma_density = 0;
    bool thick = false;

    bool pass() const;
};

/// Compares the k+1 images inside ST_{k+1}^2.
ChainReport verify_chain(int k, std::uint64_t cap = kDefaultVertexCap);

struct CosetClass {
    MString vertex;
    /// Sym_{k*ell} strings collapsing to `vertex`, ascending.
    std::vector<std::vector<Symbol>> fiber;
    /// Local generator set {(0 j) : v_j != v_0}.
    std::vector<std::pair<int, int>> generators;
};

struct CosetTable {
    Params params;
    /// ell = 2: ordered by repeat position, then lexicographically; otherwise lexicographic.
    std::vector<CosetClass> classes;
};

struct SchreierReport {
    CosetTable table;
    bool fibers_uniform = false;
    std::size_t fiber_size = 0;
    /// Each fiber is one orbit of the Young subgroup acting on symbols.
    bool fibers_are_cosets = false;
    /// Collapsed star-transposition edges with distinct endpoint classes are edges of ST_k^ell.
    bool quotient_sound = false;
    /// Every edge of ST_k^ell is the image of a lifted edge.
    bool quotient_complete = false;

    bool pass() const { return fibers_uniform && fibers_are_cosets && quotient_sound && quotient_complete; }
};

/// Requires k * ell <= 8.
SchreierReport schreier_quotient_check(int k, int ell);

/// Aligned text table: fiber rows, the class row, the generator row.
std::string format_coset_table(const CosetTable& table);

struct PancakeReport {
    int k = 0;
    std::string family;
    /// (a) Sigma_{2k-1}.
    DominationCertificate last;
    /// (b) i -> certificate for Sigma_i, i < 2k-1.
    std::vector<std::pair<int, DominationCertificate>> others;
    bool others_fail_with_witness = false;
    bool some_other_fails = false;
    /// (c)
    std::map<std::size_t, std::size_t> removal_degrees;
    int expected_removal_degree = 0;
    bool removal_regular = false;
    bool neighbourhoods_partition = false;
    std::vector<std::size_t> residual_component_sizes;

    bool pass() const;
};

/// Runs on the graph built from `family` (pancake unless given) with ell = 2.
PancakeReport pancake_chain_check(int k, const GeneratorFamily& family = GeneratorFamily::pancake());

}  // namespace mpg
