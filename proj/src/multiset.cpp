#include "mpg/multiset.hpp"

#include <algorithm>
#include <charconv>
#include <limits>
#include <stdexcept>

#include "mpg/errors.hpp"

namespace mpg {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
    unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
    return r > kSaturated ? kSaturated : static_cast<std::uint64_t>(r);
}

// C(n, r) saturating; exact whenever the true value fits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t r) {
    if (r > n) return 0;
    r = std::min(r, n - r);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= r; ++i) {
        acc = acc * (n - r + i) / i;
        if (acc > kSaturated) return kSaturated;
    }
    return static_cast<std::uint64_t>(acc);
}

// Number of distinct arrangements of a multiset with the given symbol counts.
std::uint64_t multinomial(const std::vector<int>& counts) {
    std::uint64_t total = 0;
    std::uint64_t result = 1;
    for (int c : counts) {
        total += static_cast<std::uint64_t>(c);
        result = sat_mul(result, binomial(total, static_cast<std::uint64_t>(c)));
    }
    return result;
}

}  // namespace

void Params::validate() const {
    if (k < 1 || ell < 1) throw std::invalid_argument("k and ell must be positive");
    if (k > 255) throw std::invalid_argument("k must fit in a symbol byte");
}

std::uint64_t vertex_count(const Params& p) {
    p.validate();
    return multinomial(std::vector<int>(static_cast<std::size_t>(p.k), p.ell));
}

void check_cap(const Params& p, std::uint64_t cap) {
    const auto n = vertex_count(p);
    if (n > cap) {
        throw InstanceTooLarge("instance too large: (k=" + std::to_string(p.k) +
                               ", l=" + std::to_string(p.ell) + ") has " +
                               (n == kSaturated ? std::string(">2^64") : std::to_string(n)) +
                               " vertices, cap " + std::to_string(cap));
    }
}

MString::MString(std::vector<Symbol> entries, const Params& p) : entries_(std::move(entries)) {
    p.validate();
    if (entries_.size() != static_cast<std::size_t>(p.length()))
        throw std::invalid_argument("malformed string: length " + std::to_string(entries_.size()) +
                                    " != k*l = " + std::to_string(p.length()));
    std::vector<int> counts(static_cast<std::size_t>(p.k), 0);
    for (Symbol s : entries_) {
        if (s >= p.k) throw std::invalid_argument("malformed string: symbol out of range");
        ++counts[s];
    }
    for (int c : counts)
        if (c != p.ell) throw std::invalid_argument("malformed string: unequal multiplicities");
}

MString MString::parse(std::string_view text, const Params& p) {
    std::vector<Symbol> out;
    if (text.find(',') != std::string_view::npos) {
        std::size_t pos = 0;
        while (pos <= text.size()) {
            auto next = text.find(',', pos);
            if (next == std::string_view::npos) next = text.size();
            auto tok = text.substr(pos, next - pos);
            unsigned value = 0;
            auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
            if (ec != std::errc{} || ptr != tok.data() + tok.size() || tok.empty() || value > 255)
                throw std::invalid_argument("malformed string: '" + std::string(text) + "'");
            out.push_back(static_cast<Symbol>(value));
            pos = next + 1;
        }
    } else {
        for (char c : text) {
            if (c < '0' || c > '9')
                throw std::invalid_argument("malformed string: '" + std::string(text) + "'");
            out.push_back(static_cast<Symbol>(c - '0'));
        }
    }
    return MString(std::move(out), p);
}

std::string format_symbols(const std::vector<Symbol>& entries, int k) {
    std::string s;
    if (k <= 10) {
        s.reserve(entries.size());
        for (Symbol e : entries) s.push_back(static_cast<char>('0' + e));
        return s;
    }
    for (std::size_t i = 0; i < entries.size(); ++i) {
        if (i) s.push_back(',');
        s += std::to_string(entries[i]);
    }
    return s;
}

std::string MString::str() const {
    const Symbol top = entries_.empty() ? 0 : *std::max_element(entries_.begin(), entries_.end());
    return format_symbols(entries_, top + 1);
}

std::vector<MString> enumerate_vertices(const Params& p, std::uint64_t cap) {
    check_cap(p, cap);
    std::vector<Symbol> cur;
    cur.reserve(static_cast<std::size_t>(p.length()));
    for (int s = 0; s < p.k; ++s) cur.insert(cur.end(), static_cast<std::size_t>(p.ell), static_cast<Symbol>(s));
    std::vector<MString> out;
    out.reserve(vertex_count(p));
    do {
        out.emplace_back(cur, p);
    } while (std::next_permutation(cur.begin(), cur.end()));
    return out;
}

std::uint64_t rank(const MString& v, const Params& p) {
    if (v.size() != static_cast<std::size_t>(p.length())) throw std::invalid_argument("malformed string for params");
    std::vector<int> counts(static_cast<std::size_t>(p.k), p.ell);
    std::uint64_t r = 0;
    for (std::size_t pos = 0; pos < v.size(); ++pos) {
        const Symbol cur = v[pos];
        if (cur >= p.k || counts[cur] == 0) throw std::invalid_argument("malformed string for params");
        for (Symbol s = 0; s < cur; ++s) {
            if (counts[s] == 0) continue;
            --counts[s];
            r += multinomial(counts);
            ++counts[s];
        }
        --counts[cur];
    }
    return r;
}

MString unrank(std::uint64_t index, const Params& p) {
    const auto total = vertex_count(p);
    if (index >= total) throw std::out_of_range("rank " + std::to_string(index) + " out of range");
    std::vector<int> counts(static_cast<std::size_t>(p.k), p.ell);
    std::vector<Symbol> out;
    out.reserve(static_cast<std::size_t>(p.length()));
    for (int pos = 0; pos < p.length(); ++pos) {
        for (int s = 0; s < p.k; ++s) {
            if (counts[static_cast<std::size_t>(s)] == 0) continue;
            --counts[static_cast<std::size_t>(s)];
            const auto block = multinomial(counts);
            if (index < block) {
                out.push_back(static_cast<Symbol>(s));
                break;
            }
            index -= block;
            ++counts[static_cast<std::size_t>(s)];
        }
    }
    return MString(std::move(out), p);
}

MString swap_positions(const MString& v, int i, int j) {
    const auto n = static_cast<int>(v.size());
    if (i < 0 || j < 0 || i >= n || j >= n) throw std::out_of_range("position out of range");
    auto e = v.entries_;
    std::swap(e[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(j)]);
    return MString(std::move(e), MString::Unchecked{});
}

std::vector<std::pair<int, MString>> star_neighbors(const MString& v) {
    std::vector<std::pair<int, MString>> out;
    for (int j = 1; j < static_cast<int>(v.size()); ++j)
        if (v[static_cast<std::size_t>(j)] != v.front()) out.emplace_back(j, swap_positions(v, 0, j));
    return out;
}

MString prefix_reversal(const MString& v, int j) {
    if (j < 1 || j >= static_cast<int>(v.size())) throw std::out_of_range("prefix reversal position out of range");
    auto e = v.entries_;
    std::reverse(e.begin(), e.begin() + j + 1);
    return MString(std::move(e), MString::Unchecked{});
}

int repeat_position(const MString& v, const Params& p) {
    if (p.ell != 2) throw std::invalid_argument("repeat_position requires l = 2");
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] == v.front()) return static_cast<int>(i);
    throw std::invalid_argument("malformed string: first symbol not repeated");
}

std::vector<int> list_assignment(const MString& v, const Params& p) {
    if (p.ell < 2) throw std::invalid_argument("list_assignment requires l >= 2");
    std::vector<int> out;
    for (std::size_t i = 1; i < v.size(); ++i)
        if (v[i] == v.front()) out.push_back(static_cast<int>(i));
    return out;
}

}  // namespace mpg
