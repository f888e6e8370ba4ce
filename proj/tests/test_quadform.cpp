#include "doctest.h"

#include <random>

#include "oracles.hpp"
#include "pellgroup/arith.hpp"
#include "pellgroup/errors.hpp"
#include "pellgroup/quadform.hpp"

using namespace pellgroup;

namespace {

/* f acted on by [[p, q], [r, s]] with p s - q r = 1 */
QuadForm act(QuadForm const & f, long p, long q, long r, long s)
{
    return { f(p, r), 2 * f.a * p * q + f.b * (p * s + q * r) + 2 * f.c * r * s, f(q, s) };
}

std::vector<long> square_free_up_to(long n)
{
    std::vector<long> out;
    for (long D = 1; D <= n; ++D)
        if (is_square_free(D))
            out.push_back(D);
    return out;
}

} // namespace

TEST_SUITE("quadform")
{
    TEST_CASE("make_form validation")
    {
        CHECK_NOTHROW(make_form(1, 0, 26));
        CHECK_THROWS_AS(make_form(1, 3, 1), InvalidArgument);   // indefinite
        CHECK_THROWS_AS(make_form(-1, 0, -2), InvalidArgument); // negative definite
        CHECK_THROWS_AS(make_form(2, 2, 4), InvalidArgument);   // imprimitive
    }

    TEST_CASE("reduce examples")
    {
        CHECK(reduce({ 3, 10, 9 }) == QuadForm { 1, 0, 2 });
        CHECK(reduce({ 1, 0, 26 }) == QuadForm { 1, 0, 26 });
        CHECK(reduce({ 5, 4, 6 }) == QuadForm { 5, 4, 6 });
        CHECK_THROWS_AS(reduce({ 1, 3, 1 }), InvalidArgument);
    }

    TEST_CASE("reduce boundary sign conventions")
    {
        // |b| = a and a = c force b >= 0
        CHECK(reduce({ 2, -2, 3 }) == QuadForm { 2, 2, 3 });
        CHECK(reduce({ 3, -2, 3 }) == QuadForm { 3, 2, 3 });
    }

    TEST_CASE("reduce is idempotent and invariant under SL2(Z)")
    {
        std::mt19937_64 rng(3);
        std::vector<std::array<long, 4>> gens { { 1, 1, 0, 1 }, { 1, -1, 0, 1 }, { 0, -1, 1, 0 },
                                                { 1, 0, 1, 1 }, { 2, 1, 1, 1 } };
        for (long D : { 2L, 5L, 14L, 26L, 34L, 105L, 210L }) {
            auto const group = enumerate_class_group(Integer(-4 * D));
            for (auto const & f : group.reduced_forms) {
                CHECK(reduce(f) == f);
                QuadForm g = f;
                for (int step = 0; step < 8; ++step) {
                    auto const & m = gens[rng() % gens.size()];
                    g = act(g, m[0], m[1], m[2], m[3]);
                    REQUIRE(g.discriminant() == group.K);
                    REQUIRE(reduce(g) == f);
                    REQUIRE(reduce(reduce(g)) == reduce(g));
                }
            }
        }
    }

    TEST_CASE("enumerate_class_group examples")
    {
        auto const g26 = enumerate_class_group(-104);
        CHECK(g26.class_number == 6);
        CHECK_FALSE(g26.is_free_z2);

        auto const g34 = enumerate_class_group(-136);
        CHECK(g34.class_number == 4);
        CHECK_FALSE(g34.is_free_z2);
        CHECK(g34.order_of({ 5, 2, 7 }) == 4);

        auto const g10 = enumerate_class_group(-40);
        CHECK(g10.class_number == 2);
        CHECK(g10.is_free_z2);
        CHECK(g10.reduced_forms == std::vector<QuadForm> { { 1, 0, 10 }, { 2, 0, 5 } });
    }

    TEST_CASE("enumerate_class_group rejects bad discriminants")
    {
        CHECK_THROWS_AS(enumerate_class_group(-7), InvalidArgument);
        CHECK_THROWS_AS(enumerate_class_group(-6), InvalidArgument);
        CHECK_THROWS_AS(enumerate_class_group(0), InvalidArgument);
        CHECK_THROWS_AS(enumerate_class_group(8), InvalidArgument);
    }

    TEST_CASE("small class numbers")
    {
        CHECK(enumerate_class_group(-8).class_number == 1);
        for (long K : { -20L, -24L, -40L, -52L, -88L, -148L, -232L })
            CHECK(enumerate_class_group(K).class_number == 2);
        // the order Z[sqrt(-11)] has class number 3, not 1
        CHECK(enumerate_class_group(-44).class_number == 3);
    }

    TEST_CASE("class numbers match the analytic formula for fundamental -4D")
    {
        for (long D = 2; D < 400; ++D) {
            if (!is_square_free(D) || D % 4 == 3)
                continue;
            auto const group = enumerate_class_group(Integer(-4 * D));
            REQUIRE(group.class_number
                    == static_cast<std::size_t>(oracle::analytic_class_number(-4 * D)));
        }
    }

    TEST_CASE("descriptor invariants")
    {
        for (long D : square_free_up_to(300)) {
            auto const g = enumerate_class_group(Integer(-4 * D));
            REQUIRE(g.class_number == g.reduced_forms.size());
            REQUIRE(g.orders.size() == g.class_number);
            REQUIRE(std::is_sorted(g.reduced_forms.begin(), g.reduced_forms.end()));
            REQUIRE(std::count(g.reduced_forms.begin(), g.reduced_forms.end(), g.identity())
                    == 1);
            bool all_small = true;
            for (std::size_t i = 0; i < g.class_number; ++i) {
                auto const & f = g.reduced_forms[i];
                REQUIRE(is_reduced(f));
                REQUIRE(f.is_primitive());
                REQUIRE(g.class_number % g.orders[i] == 0); // Lagrange
                bool const squares_to_one = compose(f, f) == g.identity();
                REQUIRE((g.orders[i] <= 2) == squares_to_one);
                all_small = all_small && g.orders[i] <= 2;
            }
            REQUIRE(g.is_free_z2 == all_small);
        }
    }

    TEST_CASE("compose examples")
    {
        CHECK(compose({ 1, 0, 10 }, { 2, 0, 5 }) == QuadForm { 2, 0, 5 });
        CHECK(compose({ 3, 2, 9 }, { 3, -2, 9 }) == QuadForm { 1, 0, 26 });
        CHECK(compose({ 2, 0, 5 }, { 2, 0, 5 }) == QuadForm { 1, 0, 10 });
        CHECK_THROWS_AS(compose({ 1, 0, 10 }, { 1, 0, 26 }), InvalidArgument);
    }

    TEST_CASE("compose needs the coprime fallback for equal leading coefficients")
    {
        // gcd(3, 3, (2 + 2)/2) = 1 is fine, gcd(2, 2, 0) = 2 is not
        QuadForm const f { 2, 0, 5 };
        CHECK(compose(f, f) == QuadForm { 1, 0, 10 });
        CHECK(compose({ 3, 2, 9 }, { 3, 2, 9 }) == inverse({ 3, 2, 9 }));
    }

    TEST_CASE("element_order examples")
    {
        CHECK(element_order({ 1, 0, 26 }) == 1);
        CHECK(element_order({ 5, 2, 7 }) == 4);
        CHECK(element_order({ 2, 0, 5 }) == 2);
    }

    TEST_CASE("group axioms hold exhaustively for class numbers up to 8")
    {
        int groups_checked = 0;
        for (long D : square_free_up_to(400)) {
            auto const g = enumerate_class_group(Integer(-4 * D));
            if (g.class_number > 8)
                continue;
            ++groups_checked;
            auto const & forms = g.reduced_forms;
            auto member = [&](QuadForm const & f) {
                return std::binary_search(forms.begin(), forms.end(), f);
            };
            for (auto const & f : forms) {
                REQUIRE(compose(f, g.identity()) == f);
                REQUIRE(compose(f, inverse(f)) == g.identity());
                REQUIRE(member(inverse(f)));
                for (auto const & h : forms) {
                    QuadForm const fh = compose(f, h);
                    REQUIRE(member(fh));
                    REQUIRE(fh == compose(h, f));
                    for (auto const & k : forms)
                        REQUIRE(compose(fh, k) == compose(f, compose(h, k)));
                }
            }
        }
        CHECK(groups_checked > 100);
    }
}
