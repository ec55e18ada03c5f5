#include "doctest.h"

#include "hallq/ncalg.hpp"

using namespace hallq;

namespace {

UnitForm chain3_form()
{
    return unit_form_of(parse_quiver(
        "vertex 1\nvertex 2\nvertex 3\narrow a 1 2\narrow b 2 3\nrelation 1*a,b\n"));
}

NCElement word(int n, std::initializer_list<int> gens, LaurentPoly coeff = LaurentPoly::constant(1))
{
    NCElement e(n);
    e.terms[NCWord(gens)] = coeff;
    return e;
}

} // namespace

TEST_SUITE_BEGIN("ncalg");

TEST_CASE("product and grading")
{
    NCElement e1 = NCElement::generator(3, 0), e2 = NCElement::generator(3, 1);
    NCElement p = e1 * e2;
    CHECK(p == word(3, {0, 1}));
    CHECK(p.degree() == DimVector{1, 1, 0});
    CHECK((e1 * e1 * e2).degree() == DimVector{2, 1, 0});
    CHECK_THROWS_AS((e1 + e2).degree(), hq_error); // mixed contents
    CHECK((p - p).is_zero());
}

TEST_CASE("twisted adjoint on the chain form")
{
    UnitForm T = chain3_form();
    NCElement e1 = NCElement::generator(3, 0), e2 = NCElement::generator(3, 1);

    NCElement a = ad(T, e1, e2);
    NCElement expect = word(3, {0, 1}) - word(3, {1, 0}, LaurentPoly::monomial(-1));
    CHECK(a == expect);
    CHECK(ad(T, e1, e1).is_zero());

    // nested ad gives the quantum Serre element
    NCElement serre = ad(T, e1, ad(T, e1, e2));
    LaurentPoly vpv = LaurentPoly::monomial(1) + LaurentPoly::monomial(-1);
    NCElement expect2 = word(3, {0, 0, 1}) - word(3, {0, 1, 0}, vpv) + word(3, {1, 0, 0});
    CHECK(serre == expect2);
}

TEST_CASE("twisted commutator")
{
    NCElement e1 = NCElement::generator(3, 0), e3 = NCElement::generator(3, 2);
    NCElement c = twisted_commutator(e3, e1, 1);
    CHECK(c == word(3, {2, 0}, LaurentPoly::monomial(1)) - word(3, {0, 2}));
    NCElement plain = twisted_commutator(e3, e1, 0);
    CHECK(plain == word(3, {2, 0}) - word(3, {0, 2}));
    NCElement sq = twisted_commutator(e3, e1, 2);
    CHECK(sq == word(3, {2, 0}, LaurentPoly::monomial(2)) - word(3, {0, 2}));
}

TEST_CASE("specialization")
{
    UnitForm T = chain3_form();
    NCElement e1 = NCElement::generator(3, 0), e2 = NCElement::generator(3, 1);
    NCElement serre = ad(T, e1, ad(T, e1, e2));

    // classical Serre at v = 1: coefficients 1, -2, 1
    auto at1 = specialize(serre, QSqrtScalar::rational(1, 1));
    REQUIRE(at1.size() == 3);
    CHECK(at1[NCWord{0, 0, 1}] == QSqrtScalar::rational(1, 1));
    CHECK(at1[NCWord{0, 1, 0}] == QSqrtScalar::rational(-2, 1));
    CHECK(at1[NCWord{1, 0, 0}] == QSqrtScalar::rational(1, 1));

    // at v = sqrt(3) the middle coefficient is -(4/3) sqrt 3
    auto at3 = specialize(serre, QSqrtScalar::sqrt_q(3));
    CHECK(at3[NCWord{0, 1, 0}] == QSqrtScalar{0, Rational(-4, 3), 3});

    CHECK_THROWS_AS(specialize(serre, QSqrtScalar::rational(0, 3)), hq_error);
}

TEST_CASE("word enumeration by content")
{
    auto w = words_of_content({2, 1});
    std::vector<NCWord> expect = {{0, 0, 1}, {0, 1, 0}, {1, 0, 0}};
    CHECK(w == expect);
    CHECK(words_of_content({1, 1, 1}).size() == 6);
    CHECK(words_of_content({0, 0}).size() == 1); // the empty word
    CHECK(word_content({0, 0, 1}, 3) == DimVector{2, 1, 0});
}

TEST_SUITE_END();
