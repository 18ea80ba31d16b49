#include <doctest.h>

#include "mpg/errors.hpp"
#include "mpg/multiset.hpp"
#include "oracle.hpp"

using namespace mpg;

TEST_CASE("vertex counts are multinomials") {
    CHECK(vertex_count({2, 1}) == 2);
    CHECK(vertex_count({2, 2}) == 6);
    CHECK(vertex_count({2, 3}) == 20);
    CHECK(vertex_count({3, 2}) == 90);
    CHECK(vertex_count({4, 2}) == 2520);
    CHECK(vertex_count({5, 2}) == 113400);
    CHECK(vertex_count({40, 40}) == UINT64_MAX);
}

TEST_CASE("cap and parameter validation") {
    CHECK_THROWS_AS(check_cap({9, 3}), InstanceTooLarge);
    CHECK_NOTHROW(check_cap({5, 2}));
    CHECK_THROWS_AS(Params({0, 2}).validate(), std::invalid_argument);
    CHECK_THROWS_AS(Params({2, 0}).validate(), std::invalid_argument);
}

TEST_CASE("enumeration matches next_permutation order") {
    for (auto [k, l] : {std::pair{2, 2}, {3, 2}, {2, 3}, {3, 1}}) {
        const auto expect = oracle_test::all_strings(k, l);
        const auto got = enumerate_vertices({k, l});
        REQUIRE(got.size() == expect.size());
        for (std::size_t i = 0; i < got.size(); ++i) CHECK(got[i].str() == expect[i]);
    }
}

TEST_CASE("rank and unrank are inverse") {
    const Params p{3, 2};
    const auto all = enumerate_vertices(p);
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(rank(all[i], p) == i);
        CHECK(unrank(i, p) == all[i]);
    }
    CHECK_THROWS_AS(unrank(90, p), std::out_of_range);
    const Params big{5, 2};
    const auto v = MString::parse("4433221100", big);
    CHECK(rank(v, big) == 113399);
    CHECK(unrank(113399, big) == v);
}

TEST_CASE("parsing") {
    const Params p{3, 2};
    CHECK(MString::parse("010122", p).str() == "010122");
    CHECK(MString::parse("0,1,0,1,2,2", p).str() == "010122");
    CHECK_THROWS_AS(MString::parse("010121", p), std::invalid_argument);
    CHECK_THROWS_AS(MString::parse("01012", p), std::invalid_argument);
    CHECK_THROWS_AS(MString::parse("01x122", p), std::invalid_argument);
    const Params wide{11, 1};
    const auto v = MString::parse("10,0,1,2,3,4,5,6,7,8,9", wide);
    CHECK(v.front() == 10);
    CHECK(v.str() == "10,0,1,2,3,4,5,6,7,8,9");
}

TEST_CASE("star neighbours skip equal symbols") {
    const Params p{2, 2};
    const auto nbrs = star_neighbors(MString::parse("0011", p));
    REQUIRE(nbrs.size() == 2);
    CHECK(nbrs[0].first == 2);
    CHECK(nbrs[0].second.str() == "1001");
    CHECK(nbrs[1].first == 3);
    CHECK(nbrs[1].second.str() == "1010");
}

TEST_CASE("prefix reversal") {
    const Params p{2, 2};
    CHECK(prefix_reversal(MString::parse("0011", p), 3).str() == "1100");
    CHECK(prefix_reversal(MString::parse("0101", p), 2).str() == "0101");
    CHECK_THROWS_AS(prefix_reversal(MString::parse("0011", p), 0), std::out_of_range);
    CHECK_THROWS_AS(prefix_reversal(MString::parse("0011", p), 4), std::out_of_range);
}

TEST_CASE("repeat position and list assignment") {
    const Params p{3, 2};
    CHECK(repeat_position(MString::parse("001122", p), p) == 1);
    CHECK(repeat_position(MString::parse("120120", p), p) == 3);
    CHECK(repeat_position(MString::parse("210102", p), p) == 5);
    CHECK_THROWS_AS(repeat_position(MString::parse("000111", {2, 3}), {2, 3}), std::invalid_argument);
    const Params q{2, 3};
    CHECK(list_assignment(MString::parse("000111", q), q) == std::vector<int>{1, 2});
    CHECK(list_assignment(MString::parse("101010", q), q) == std::vector<int>{2, 4});
}
