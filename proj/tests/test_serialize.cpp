#include "doctest.h"

#include "pellgroup/errors.hpp"
#include "pellgroup/serialize.hpp"

using namespace pellgroup;

TEST_SUITE("serialize")
{
    TEST_CASE("descriptor schema")
    {
        auto const j = to_json(enumerate_class_group(-136));
        CHECK(j.at("K") == -136);
        CHECK(j.at("class_number") == 4);
        CHECK(j.at("forms") == json::parse("[[1,0,34],[2,0,17],[5,-2,7],[5,2,7]]"));
        CHECK(j.at("orders") == json::parse("[1,2,4,4]"));
        CHECK(j.at("free_z2") == false);
    }

    TEST_CASE("element schema")
    {
        auto const z = make_element(2, 7, 4, 9);
        CHECK(to_json(z) == json::parse(R"({"D":2,"a":7,"b":4,"c":9})"));
    }

    TEST_CASE("solution set schema")
    {
        auto const j = to_json(solve(5, 21));
        CHECK(j == json::parse(R"({"D":5,"c":21,"count":2,"solutions":[
            {"a":19,"b":4,"c":21,"factorization":{"sign":1,"terms":[[3,-1],[7,1]]}},
            {"a":11,"b":8,"c":21,"factorization":{"sign":-1,"terms":[[3,-1],[7,-1]]}}]})"));
    }

    TEST_CASE("round trips")
    {
        for (long D : { 2L, 26L, 34L, 210L }) {
            auto const d = enumerate_class_group(Integer(-4 * D));
            auto const back = descriptor_from_json(json::parse(to_json(d).dump()));
            CHECK(back.reduced_forms == d.reduced_forms);
            CHECK(back.orders == d.orders);
            CHECK(back.is_free_z2 == d.is_free_z2);
        }
        for (long c : { 3L, 21L, 189L, 1617L }) {
            auto const s = solve(5, c);
            auto const back = solution_set_from_json(json::parse(to_json(s).dump()));
            CHECK(back.count == s.count);
            REQUIRE(back.solutions.size() == s.solutions.size());
            for (std::size_t i = 0; i < s.solutions.size(); ++i) {
                CHECK(back.solutions[i].solution == s.solutions[i].solution);
                CHECK(back.solutions[i].factorization == s.solutions[i].factorization);
            }
        }
        auto const z = make_element(13, -6, 1, 7);
        CHECK(element_from_json(json::parse(to_json(z).dump())) == z);
    }

    TEST_CASE("integers outside 64 bits become strings")
    {
        Integer const big("123456789012345678901234567890");
        auto const j = integer_to_json(big);
        CHECK(j.is_string());
        CHECK(integer_from_json(j) == big);
        CHECK(integer_to_json(Integer(-5)) == -5);
        CHECK_THROWS_AS(integer_from_json(json("12x")), InvalidArgument);
        CHECK_THROWS_AS(element_from_json(json::parse(R"({"D":2,"a":1,"b":1,"c":2})")),
                        NotOnEllipse);
    }

    TEST_CASE("sweep csv")
    {
        auto const csv = sweep_to_csv(verify_sweep(2, 11));
        CHECK(csv
              == "D,c,k,theory_count,oracle_count,agree\n"
                 "2,3,1,1,1,true\n"
                 "2,5,1,0,0,true\n"
                 "2,7,1,0,0,true\n"
                 "2,9,1,1,1,true\n"
                 "2,11,1,1,1,true\n");
    }
}
