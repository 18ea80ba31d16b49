#include <doctest.h>

#include "mpg/chains.hpp"
#include "mpg/errors.hpp"

using namespace mpg;

TEST_CASE("kappa embedding") {
    const Params p{2, 2};
    const auto v = MString::parse("0011", p);
    CHECK(kappa_embed(v, 2, 2).str() == "001122");
    CHECK(kappa_embed(v, 0, 2).str() == "112200");
    CHECK(kappa_embed(v, 1, 2).str() == "220011");
    CHECK_THROWS_AS(kappa_embed(v, 3, 2), std::out_of_range);
    CHECK_THROWS_AS(kappa_embed(v, -1, 2), std::out_of_range);
}

TEST_CASE("chain from ST(2,2) into ST(3,2)") {
    const auto r = verify_chain(2);
    REQUIRE(r.images.size() == 3);
    for (const auto& img : r.images) CHECK(img.size() == 6);
    CHECK(r.images_disjoint);
    CHECK(r.images_induced_isomorphic);
    CHECK(r.sigma_bijection);
    CHECK(r.blocks_partition);
    CHECK(r.sigma_size == 18);
    CHECK(r.expected_sigma_size == 18);
    CHECK(r.restricted_reading_equals_sigma);
    CHECK(r.thick);
    CHECK(r.pass());
}

TEST_CASE("chain from ST(3,2) into ST(4,2)") {
    const auto r = verify_chain(3);
    REQUIRE(r.images.size() == 4);
    for (const auto& img : r.images) CHECK(img.size() == 90);
    CHECK(r.sigma_size == 360);
    CHECK(r.full_neighbourhood_union == 1080);
    CHECK_FALSE(r.full_reading_equals_sigma);
    CHECK(r.restricted_reading_equals_sigma);
    CHECK(r.pass());
}

TEST_CASE("coset table for ST(2,2)") {
    const auto r = schreier_quotient_check(2, 2);
    CHECK(r.pass());
    CHECK(r.fiber_size == 4);
    REQUIRE(r.table.classes.size() == 6);
    const std::vector<std::string> order{"0011", "1100", "0101", "1010", "0110", "1001"};
    const std::vector<std::vector<std::string>> fibers{
        {"0123", "0132", "1023", "1032"}, {"2301", "2310", "3201", "3210"}, {"0213", "0312", "1203", "1302"},
        {"2031", "2130", "3021", "3120"}, {"0231", "0321", "1230", "1320"}, {"2013", "2103", "3012", "3102"}};
    const std::vector<std::vector<std::pair<int, int>>> gens{{{0, 2}, {0, 3}}, {{0, 2}, {0, 3}}, {{0, 1}, {0, 3}},
                                                             {{0, 1}, {0, 3}}, {{0, 1}, {0, 2}}, {{0, 1}, {0, 2}}};
    for (std::size_t i = 0; i < 6; ++i) {
        const auto& c = r.table.classes[i];
        CHECK(c.vertex.str() == order[i]);
        std::vector<std::string> f;
        for (const auto& s : c.fiber) {
            std::string t;
            for (auto x : s) t += static_cast<char>('0' + x);
            f.push_back(t);
        }
        CHECK(f == fibers[i]);
        CHECK(c.generators == gens[i]);
    }
    const auto text = format_coset_table(r.table);
    CHECK(text.find("cosets | 0123") == 0);
    CHECK(text.find("vertex | 0011        | 1100") != std::string::npos);
    CHECK(text.find("gens   | (0 2),(0 3) | (0 2),(0 3) | (0 1),(0 3)") != std::string::npos);
}

TEST_CASE("quotient checks for other shapes") {
    const auto r = schreier_quotient_check(3, 2);
    CHECK(r.pass());
    CHECK(r.table.classes.size() == 90);
    CHECK(r.fiber_size == 8);
    const auto r23 = schreier_quotient_check(2, 3);
    CHECK(r23.pass());
    CHECK(r23.fiber_size == 36);
    CHECK_THROWS_AS(schreier_quotient_check(3, 3), InstanceTooLarge);
}

TEST_CASE("pancake chain checks") {
    const auto r3 = pancake_chain_check(3);
    CHECK(r3.last.pass);
    CHECK(r3.some_other_fails);
    CHECK(r3.others_fail_with_witness);
    CHECK(r3.expected_removal_degree == 3);
    CHECK(r3.removal_regular);
    CHECK(r3.neighbourhoods_partition);
    CHECK(r3.pass());

    const auto r2 = pancake_chain_check(2);
    CHECK(r2.last.pass);
    CHECK_THROWS_AS(pancake_chain_check(5), InstanceTooLarge);
}
