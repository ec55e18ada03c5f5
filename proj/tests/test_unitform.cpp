#include "doctest.h"

#include <random>

#include "hallq/unit_form.hpp"

using namespace hallq;

namespace {

// A_3 chain bound by the length-2 composite
BoundQuiver chain3()
{
    return parse_quiver(
        "vertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\nrelation 1*a,b\n");
}

// chain 1->2->3->4 bound by the full composite
BoundQuiver chain4()
{
    return parse_quiver(
        "vertex 1\nvertex 2\nvertex 3\nvertex 4\n"
        "arrow a1 1 2\narrow a2 2 3\narrow a3 3 4\nrelation 1*a1,a2,a3\n");
}

// rhombus 1 -> {2,3} -> 4 with the commutativity relation
BoundQuiver rhombus_comm()
{
    return parse_quiver(
        "vertex 1\nvertex 2\nvertex 3\nvertex 4\n"
        "arrow a1 1 2\narrow a2 2 4\narrow b1 1 3\narrow b2 3 4\n"
        "relation 1*a1,a2 + -1*b1,b2\n");
}

// rhombus with both composites set to zero separately
BoundQuiver rhombus_two_zero()
{
    return parse_quiver(
        "vertex 1\nvertex 2\nvertex 3\nvertex 4\n"
        "arrow a1 1 2\narrow a2 2 4\narrow b1 1 3\narrow b2 3 4\n"
        "relation 1*a1,a2\nrelation 1*b1,b2\n");
}

} // namespace

TEST_SUITE_BEGIN("unitform");

TEST_CASE("form coefficients from the bound quiver")
{
    UnitForm T1 = unit_form_of(chain3());
    CHECK(T1.aij(0, 1) == -1);
    CHECK(T1.aij(1, 2) == -1);
    CHECK(T1.aij(0, 2) == 1); // one relation 1 -> 3
    CHECK(T1.aij(1, 0) == 0);
    CHECK(T1.aij(2, 0) == 0);

    UnitForm T4 = unit_form_of(rhombus_two_zero());
    CHECK(T4.aij(0, 3) == 2); // two relations 1 -> 4
    CHECK(T4.aij(0, 1) == -1);
    CHECK(T4.aij(0, 2) == -1);
    CHECK(T4.aij(1, 3) == -1);
    CHECK(T4.aij(2, 3) == -1);

    UnitForm T0 = unit_form_of(parse_quiver("vertex 1\nvertex 2\n"));
    CHECK(T0.aij(0, 1) == 0);
    CHECK(T0.aij(1, 0) == 0);
}

TEST_CASE("evaluation")
{
    UnitForm T = unit_form_of(chain3());
    CHECK(evaluate(T, {1, 1, 1}) == 2); // not a root
    CHECK(evaluate(T, {1, 1, 0}) == 1);
    for (int i = 0; i < 3; ++i) CHECK(evaluate(T, unit_vector(3, i)) == 1);
    CHECK_THROWS_AS(evaluate(T, {1, 1}), hq_error);
}

TEST_CASE("bilinear forms and nu")
{
    UnitForm T = unit_form_of(chain3());
    DimVector a1 = unit_vector(3, 0), a2 = unit_vector(3, 1), a3 = unit_vector(3, 2);
    CHECK(bilinear(T, a1, a3) == 1);
    CHECK(bilinear0(T, a1, a3) == 0);
    CHECK(bilinear(T, a1, a1) == 1);
    CHECK(bilinear(T, a1, a2) - bilinear(T, a2, a1) == -1);

    CHECK(nu(T, a1, a1) == 1);
    CHECK(nu(T, a1, a2) == 0); // delta argument is -1
    CHECK(nu(T, a2, a1) == 0); // delta(0) * 0
}

TEST_CASE("ad exponent")
{
    UnitForm T = unit_form_of(chain3());
    DimVector a1 = unit_vector(3, 0), a2 = unit_vector(3, 1);
    CHECK(ad_exponent(T, a1, a2) == -1);
    CHECK(ad_exponent(T, a1, a1) == 0);
    CHECK(ad_exponent(T, a1, {1, 1, 0}) == 1);
}

TEST_CASE("bilinear and ad properties on random forms")
{
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 2 + int(rng() % 3);
        UnitForm T(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (i != j) T.aij(i, j) = int(rng() % 5) - 2;
        DimVector b(n), bp(n);
        for (int& x : b) x = int(rng() % 4);
        for (int& x : bp) x = int(rng() % 4);
        CHECK(evaluate(T, b) == bilinear(T, b, b));
        CHECK(ad_exponent(T, b, bp) == -ad_exponent(T, bp, b));
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                long long expect = (i == j) ? 1 : T.aij(i, j);
                CHECK(bilinear(T, unit_vector(n, i), unit_vector(n, j)) == expect);
            }
    }
}

TEST_CASE("positive roots of the four gallery forms")
{
    RootSet r1 = positive_roots(unit_form_of(chain3()), 6);
    std::vector<DimVector> expect1 = {
        {0, 0, 1}, {0, 1, 0}, {0, 1, 1}, {1, 0, 0}, {1, 1, 0}};
    CHECK(r1.roots == expect1);

    // chain of length 4: all intervals except the full one
    RootSet r2 = positive_roots(unit_form_of(chain4()), 6);
    std::vector<DimVector> expect2 = {
        {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 1, 1}, {0, 1, 0, 0}, {0, 1, 1, 0},
        {0, 1, 1, 1}, {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 1, 1, 0}};
    CHECK(r2.roots == expect2);

    RootSet r3 = positive_roots(unit_form_of(rhombus_comm()), 6);
    std::vector<DimVector> expect3 = {
        {0, 0, 0, 1}, {0, 0, 1, 0}, {0, 0, 1, 1}, {0, 1, 0, 0}, {0, 1, 0, 1},
        {0, 1, 1, 1}, {1, 0, 0, 0}, {1, 0, 1, 0}, {1, 1, 0, 0}, {1, 1, 1, 0},
        {1, 1, 1, 1}};
    CHECK(r3.roots == expect3);
    CHECK(r3.contains({1, 1, 1, 1}));
    CHECK_FALSE(r3.contains({1, 1, 0, 1}));

    // doubling the 1->4 coefficient removes exactly the full root
    RootSet r4 = positive_roots(unit_form_of(rhombus_two_zero()), 6);
    std::vector<DimVector> expect4 = expect3;
    expect4.erase(std::find(expect4.begin(), expect4.end(), DimVector{1, 1, 1, 1}));
    CHECK(r4.roots == expect4);

    RootSet single = positive_roots(UnitForm(1), 6);
    CHECK(single.roots == std::vector<DimVector>{{1}});
}

TEST_CASE("cap certificate")
{
    // (b1 - b2)^2 = 1 has roots touching every cap
    UnitForm bad(2);
    bad.aij(0, 1) = -2;
    CHECK_THROWS_AS(positive_roots(bad, 6), hq_error);

    // re-running with a larger cap returns the same set when no throw
    for (BoundQuiver bq : {chain3(), chain4(), rhombus_comm(), rhombus_two_zero()}) {
        UnitForm T = unit_form_of(bq);
        CHECK(positive_roots(T, 6).roots == positive_roots(T, 7).roots);
    }
}

TEST_CASE("weak positivity")
{
    CHECK(is_weakly_positive(unit_form_of(chain3()), 6));
    CHECK(is_weakly_positive(UnitForm(1), 6));
    UnitForm bad(2);
    bad.aij(0, 1) = -2;
    CHECK_FALSE(is_weakly_positive(bad, 6)); // (1,1) evaluates to 0
}

TEST_CASE("root envelope test")
{
    RootSet r = positive_roots(unit_form_of(rhombus_comm()), 6);
    CHECK(r.dominated_by_some({0, 1, 1, 0})); // not a root, but under (1,1,1,1)
    CHECK_FALSE(r.dominated_by_some({2, 0, 0, 0}));
}

TEST_SUITE_END();
