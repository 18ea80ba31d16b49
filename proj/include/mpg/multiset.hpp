#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mpg {

using Symbol = std::uint8_t;

inline constexpr std::uint64_t kDefaultVertexCap = 10'000'000;

/// Shape of an l-set permutation: k symbols, each repeated ell times.
struct Params {
    int k = 1;
    int ell = 1;

    int length() const { return k * ell; }
    void validate() const;

    friend bool operator==(const Params&, const Params&) = default;
};

/// (k*ell)! / (ell!)^k, saturating at UINT64_MAX.
std::uint64_t vertex_count(const Params& p);

/// Throws InstanceTooLarge when vertex_count(p) exceeds cap.
void check_cap(const Params& p, std::uint64_t cap = kDefaultVertexCap);

/// A multiset permutation over [k] with every symbol occurring exactly ell times.
class MString {
public:
    MString() = default;
    /// Validates the symbol multiplicities against p.
    MString(std::vector<Symbol> entries, const Params& p);

    /// Parses "010122" (k <= 10) or "0,1,10,..." notation.
    static MString parse(std::string_view text, const Params& p);

    const std::vector<Symbol>& entries() const { return entries_; }
    std::size_t size() const { return entries_.size(); }
    Symbol operator[](std::size_t i) const { return entries_[i]; }
    Symbol front() const { return entries_.front(); }

    std::string str() const;

    friend auto operator<=>(const MString&, const MString&) = default;
    friend bool operator==(const MString&, const MString&) = default;

private:
    friend MString swap_positions(const MString&, int, int);
    friend MString prefix_reversal(const MString&, int);
    struct Unchecked {};
    MString(std::vector<Symbol> entries, Unchecked) : entries_(std::move(entries)) {}

    std::vector<Symbol> entries_;
};

/// Digit string for max symbol < 10, comma-separated decimals otherwise.
std::string format_symbols(const std::vector<Symbol>& entries, int k);

/// All l-set permutations in lexicographic order.
std::vector<MString> enumerate_vertices(const Params& p, std::uint64_t cap = kDefaultVertexCap);

/// Lexicographic rank of v among all l-set permutations of p.
std::uint64_t rank(const MString& v, const Params& p);
MString unrank(std::uint64_t index, const Params& p);

/// Entries i and j exchanged.
MString swap_positions(const MString& v, int i, int j);

/// (j, w) for every j >= 1 with v_j != v_0, w = v with positions 0 and j exchanged.
std::vector<std::pair<int, MString>> star_neighbors(const MString& v);

/// Entries 0..j reversed; 1 <= j < |v|.
MString prefix_reversal(const MString& v, int j);

/// The unique i >= 1 with v_i == v_0; requires ell == 2.
int repeat_position(const MString& v, const Params& p);

/// { j >= 1 : v_j == v_0 }, ascending; requires ell >= 2.
std::vector<int> list_assignment(const MString& v, const Params& p);

}  // namespace mpg
