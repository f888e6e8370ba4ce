#include "doctest.h"

#include <set>

#include "oracles.hpp"
#include "pellgroup/arith.hpp"
#include "pellgroup/errors.hpp"
#include "pellgroup/oracle.hpp"
#include "pellgroup/solutions.hpp"

using namespace pellgroup;

namespace {

std::vector<long> applicable_up_to(long n)
{
    std::vector<long> out;
    for (long D = 2; D <= n; ++D)
        if (check_applicability(D).applicable())
            out.push_back(D);
    return out;
}

NormalizedSolution sol(long D, long a, long b, long c)
{
    return { D, a, b, c };
}

} // namespace

TEST_SUITE("solutions")
{
    TEST_CASE("check_applicability examples")
    {
        auto const d10 = check_applicability(10);
        CHECK(d10.applicable());
        CHECK(d10.class_number == 2);

        auto const d34 = check_applicability(34);
        CHECK_FALSE(d34.applicable());
        CHECK_FALSE(d34.free_z2);
        CHECK(d34.class_number == 4);

        auto const d210 = check_applicability(210);
        CHECK(d210.applicable());
        CHECK(d210.class_number == 8);
    }

    TEST_CASE("check_applicability reasons")
    {
        auto const d1 = check_applicability(1);
        CHECK_FALSE(d1.applicable());
        CHECK(d1.free_z2);
        CHECK_THROWS_AS(d1.require(), NotApplicable);

        auto const d3 = check_applicability(3);
        CHECK_FALSE(d3.residue_ok);
        CHECK_THROWS_AS(d3.require(), UnsupportedResidueClass);

        auto const d12 = check_applicability(12);
        CHECK_FALSE(d12.square_free);

        CHECK_THROWS_AS(check_applicability(26).require(), UnsupportedClassGroup);
        CHECK_THROWS_AS(check_applicability(0), InvalidArgument);
    }

    TEST_CASE("applicable D up to 60")
    {
        auto const all = applicable_up_to(60);
        CHECK(all == std::vector<long> { 2, 5, 6, 10, 13, 21, 22, 30, 33, 37, 42, 57, 58 });
        std::vector<long> small;
        for (long D : all)
            if (check_applicability(D).class_number <= 2)
                small.push_back(D);
        CHECK(small == std::vector<long> { 2, 5, 6, 10, 13, 22, 37, 58 });
    }

    TEST_CASE("solution_exists")
    {
        CHECK(solution_exists(2, 9));
        CHECK_FALSE(solution_exists(2, 4));
        CHECK_FALSE(solution_exists(2, 1));
        CHECK_FALSE(solution_exists(2, 15));
        CHECK_THROWS_AS(solution_exists(26, 5), UnsupportedClassGroup);
        CHECK_THROWS_AS(solution_exists(7, 11), UnsupportedResidueClass);
        CHECK_THROWS_AS(solution_exists(2, 0), InvalidArgument);
    }

    TEST_CASE("zeta examples")
    {
        auto const z = zeta(2, 3);
        CHECK(z.x0 == 1);
        CHECK(z.y0 == 2);
        CHECK(zeta(2, 11).x0 == 7);
        CHECK(zeta(2, 11).y0 == 6);
        CHECK(zeta(5, 7).x0 == 2);
        CHECK(zeta(5, 7).y0 == 3);
        CHECK_THROWS_AS(zeta(2, 5), NotRepresentable);
        CHECK_THROWS_AS(zeta(5, 5), InvalidArgument);
        CHECK_THROWS_AS(zeta(2, 9), InvalidArgument);
        CHECK_THROWS_AS(zeta(26, 5), UnsupportedClassGroup);
    }

    TEST_CASE("zeta is the unique coprime representation")
    {
        for (long D : applicable_up_to(60)) {
            for (long p = 3; p < 200; p += 2) {
                if (!oracle::naive_is_prime(p) || oracle::exhaustive_legendre(-D, p) != 1)
                    continue;
                auto const reps = oracle::scan_prime_square(D, p);
                REQUIRE(reps.size() == 1);
                auto const z = zeta(D, p);
                REQUIRE(z.x0 == reps[0].first);
                REQUIRE(z.y0 == reps[0].second);
            }
        }
    }

    TEST_CASE("divides")
    {
        auto const q = divides(1, 2, -7, 4, 2);
        REQUIRE(q);
        CHECK(q->first == 1);
        CHECK(q->second == 2);
        CHECK_FALSE(divides(1, 2, 7, 4, 2));
        auto const unit = divides(1, 0, 13, -5, 7);
        REQUIRE(unit);
        CHECK(unit->first == 13);
        CHECK(unit->second == -5);
        CHECK_THROWS_AS(divides(0, 0, 1, 1, 2), InvalidArgument);
    }

    TEST_CASE("factor_element examples")
    {
        CHECK(factor_element(make_element(2, -7, 4, 9)) == Factorization { 1, { { 3, 2 } } });
        CHECK(factor_element(make_element(5, -11, 8, 21))
              == Factorization { 1, { { 3, 1 }, { 7, 1 } } });
        CHECK(factor_element(make_element(5, 19, -4, 21))
              == Factorization { 1, { { 3, 1 }, { 7, -1 } } });
        CHECK(factor_element(make_element(2, -1, 0, 1)) == Factorization { -1, {} });
        CHECK_THROWS_AS(factor_element(make_element(26, 1, 0, 1)), UnsupportedClassGroup);
    }

    TEST_CASE("enumerate_solutions examples")
    {
        CHECK(enumerate_solutions(2, 3) == std::vector { sol(2, 1, 2, 3) });
        CHECK(enumerate_solutions(5, 21) == std::vector { sol(5, 19, 4, 21), sol(5, 11, 8, 21) });
        CHECK(enumerate_solutions(2, 33) == std::vector { sol(2, 31, 8, 33), sol(2, 17, 20, 33) });
        CHECK(enumerate_solutions(2, 4).empty());
        CHECK(enumerate_solutions(2, 1).empty());
        CHECK(enumerate_solutions(2, 15).empty());
        CHECK_THROWS_AS(enumerate_solutions(26, 5), UnsupportedClassGroup);
        CHECK_THROWS_AS(enumerate_solutions(34, 5), UnsupportedClassGroup);
    }

    TEST_CASE("count_solutions")
    {
        CHECK(count_solutions(2, 9) == 1);
        CHECK(count_solutions(5, 21) == 2);
        CHECK(count_solutions(2, 15) == 0);
        CHECK(count_solutions(2, 1) == 0);
        CHECK(count_solutions(2, 6) == 0);
        // 3 * 11 * 17 * 19 * 41 * 43: six primes in S for D = 2
        CHECK(count_solutions(2, 3L * 11 * 17 * 19 * 41 * 43) == 32);
        CHECK_THROWS_AS(count_solutions(26, 5), UnsupportedClassGroup);
    }

    TEST_CASE("multiply_solutions")
    {
        CHECK(multiply_solutions(sol(5, 2, 1, 3), sol(5, 2, 3, 7)) == sol(5, 11, 8, 21));
        CHECK(multiply_solutions(sol(2, 1, 2, 3), sol(2, 7, 6, 11)) == sol(2, 17, 20, 33));
        CHECK_THROWS_AS(multiply_solutions(sol(2, 1, 2, 3), sol(2, 1, 2, 3)), InvalidArgument);
        CHECK_THROWS_AS(multiply_solutions(sol(2, 1, 2, 3), sol(5, 2, 3, 7)), InvalidArgument);
        CHECK_THROWS_AS(multiply_solutions(sol(2, 3, 6, 9), sol(2, 7, 6, 11)), InvalidArgument);
    }

    TEST_CASE("theory matches the double-loop oracle for D up to 60, c up to 400")
    {
        for (long D : applicable_up_to(60)) {
            for (long c = 1; c <= 400; ++c) {
                auto const theory = enumerate_solutions(D, c);
                std::set<std::pair<std::int64_t, std::int64_t>> got;
                for (auto const & s : theory)
                    got.emplace(s.a.get_si(), s.b.get_si());
                REQUIRE(got == oracle::double_loop_solutions(D, c));
                REQUIRE(count_solutions(D, c) == theory.size());
                REQUIRE(solution_exists(D, c) == !theory.empty());
            }
        }
    }

    TEST_CASE("factor round trip and exponents follow c")
    {
        for (long D : applicable_up_to(60)) {
            for (long c = 3; c <= 2000; c += 2) {
                auto const fc = factorize(c);
                for (auto const & s : enumerate_solutions(D, c)) {
                    for (auto const & z : { to_element(s), conjugate(to_element(s)) }) {
                        auto const f = factor_element(z);
                        REQUIRE(recompose(D, f) == z);
                        REQUIRE(f.terms.size() == fc.factors.size());
                        for (std::size_t i = 0; i < f.terms.size(); ++i) {
                            REQUIRE(f.terms[i].prime == fc.factors[i].prime);
                            REQUIRE(std::labs(f.terms[i].exponent)
                                    == long(fc.factors[i].exponent));
                        }
                    }
                }
            }
        }
    }

    TEST_CASE("large hypotenuse with many primes")
    {
        // primes in S for D = 5: (-5/p) = 1
        Integer c = 1;
        long k = 0;
        for (long p = 3; k < 8; p += 2)
            if (oracle::naive_is_prime(p) && oracle::exhaustive_legendre(-5, p) == 1) {
                c *= Integer(p) * p;
                ++k;
            }
        auto const sols = enumerate_solutions(5, c);
        REQUIRE(sols.size() == 128);
        for (auto const & s : sols) {
            REQUIRE(s.a * s.a + 5 * s.b * s.b == c * c);
            REQUIRE(gcd(s.a, s.b) == 1);
            REQUIRE(recompose(5, factor_element(to_element(s))) == to_element(s));
        }
    }
}
