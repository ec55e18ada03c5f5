#include "doctest.h"

#include <algorithm>
#include <functional>

#include "hallq/hall.hpp"
#include "hallq/quiver.hpp"

using namespace hallq;

namespace {

const char* kA2 = "vertex 1\nvertex 2\narrow a 1 2\n";

const char* kChain3 =
    "vertex 1\nvertex 2\nvertex 3\n"
    "arrow a 1 2\narrow b 2 3\n"
    "relation 1*a,b\n";

const char* kCommSquare =
    "vertex 1\nvertex 2\nvertex 3\nvertex 4\n"
    "arrow a1 1 2\narrow a2 2 4\narrow b1 1 3\narrow b2 3 4\n"
    "relation 1*a1,a2 + -1*b1,b2\n";

const char* kZeroSquare =
    "vertex 1\nvertex 2\nvertex 3\nvertex 4\n"
    "arrow a1 1 2\narrow a2 2 4\narrow b1 1 3\narrow b2 3 4\n"
    "relation 1*a1,a2\nrelation 1*b1,b2\n";

IndecompTable make_table(const BoundQuiver& bq, int p)
{
    EnumCaps caps;
    caps.component_cap = 2;
    caps.total_cap = 6;
    return enumerate_indecomposables(bq, p, positive_roots(unit_form_of(bq), 6), caps);
}

// coefficient a/ad + (b/bd) * sqrt(q)
QSqrtScalar coeff(long long a, long long ad, long long b, long long bd, uint32_t q)
{
    return {Rational(a, ad), Rational(b, bd), q};
}

// exhaustive two-route comparison over all graded triples with |dim R| bounded
long long route_agreement_triples(HallTable& H, int total_bound)
{
    long long triples = 0;
    std::vector<IsoClass> basis = H.basis();
    for (const IsoClass& R : basis) {
        DimVector dr = H.dim_of(R);
        int tot = total_dim(dr);
        if (tot == 0 || tot > total_bound) continue;
        for (const IsoClass& M : basis) {
            DimVector dm = H.dim_of(M);
            DimVector dn(dr.size());
            bool graded = true;
            for (size_t i = 0; i < dr.size(); ++i) {
                dn[i] = dr[i] - dm[i];
                if (dn[i] < 0) graded = false;
            }
            if (!graded) continue;
            for (const IsoClass& N : H.classes_of_dim(dn)) {
                REQUIRE(H.hall_number(M, N, R) == H.hall_number_via_ext(M, N, R));
                ++triples;
            }
        }
    }
    return triples;
}

} // namespace

TEST_SUITE_BEGIN("hall");

TEST_CASE("element arithmetic drops cancelled terms")
{
    QSqrtScalar one = QSqrtScalar::rational(1, 3);
    HallElement x;
    x.q = 3;
    x.add_term({0}, one);
    x.add_term({1}, QSqrtScalar::sqrt_q(3));
    CHECK(x.terms.size() == 2);

    HallElement y;
    y.q = 3;
    y.add_term({0}, -one);
    HallElement sum = x + y;
    CHECK(sum.terms.size() == 1);
    CHECK(sum.terms.count({1}) == 1);
    CHECK((x - x).is_zero());
    CHECK(x.scaled(QSqrtScalar::rational(0, 3)).is_zero());
}

TEST_CASE("unit class is a two sided identity")
{
    BoundQuiver bq = parse_quiver(kA2);
    HallTable H(bq, make_table(bq, 3));
    HallElement s1 = H.simple(0);
    HallElement mixed = s1 + H.class_element({0, 1}).scaled(QSqrtScalar::sqrt_q(3));
    CHECK(H.product(H.unit(), mixed) == mixed);
    CHECK(H.product(mixed, H.unit()) == mixed);
}

TEST_CASE("hall numbers by subspace sweep")
{
    BoundQuiver bq = parse_quiver(kA2);
    IndecompTable tab = make_table(bq, 3);
    HallTable H(bq, tab);
    int i1 = tab.find({1, 0}), i2 = tab.find({0, 1}), ip = tab.find({1, 1});
    REQUIRE(i1 >= 0);
    REQUIRE(i2 >= 0);
    REQUIRE(ip >= 0);

    // q + 1 lines inside S_1 + S_1
    CHECK(H.hall_number({i1}, {i1}, {i1, i1}) == 4);
    // the unique subrepresentation S_2 of the projective (1,1)
    CHECK(H.hall_number({i1}, {i2}, {ip}) == 1);
    // split class in both orders
    CHECK(H.hall_number({i1}, {i2}, {i1, i2}) == 1);
    CHECK(H.hall_number({i2}, {i1}, {i1, i2}) == 1);
    // S_1 is not a subrepresentation of the projective
    CHECK(H.hall_number({i2}, {i1}, {ip}) == 0);
    // grading: mismatched dimension sums vanish
    CHECK(H.hall_number({i1}, {i1}, {i1, i2}) == 0);
    CHECK(H.hall_number({i1}, {i2}, {i2, i2}) == 0);
}

TEST_CASE("products on the two vertex quiver")
{
    BoundQuiver bq = parse_quiver(kA2);
    IndecompTable tab = make_table(bq, 3);
    HallTable H(bq, tab);
    int i1 = tab.find({1, 0}), i2 = tab.find({0, 1}), ip = tab.find({1, 1});
    HallElement s1 = H.simple(0), s2 = H.simple(1);

    // [S_1][S_1] = sqrt(q) (q+1) [S_1+S_1]
    HallElement sq = H.product(s1, s1);
    CHECK(sq == H.class_element({i1, i1}).scaled(coeff(0, 1, 4, 1, 3)));

    // [S_1][S_2] = sqrt(q)^{-1} ([S_1+S_2] + [P]); 1/sqrt(3) = (1/3) sqrt(3)
    HallElement s12 = H.product(s1, s2);
    HallElement expected = H.class_element({i1, i2}).scaled(coeff(0, 1, 1, 3, 3)) +
                           H.class_element({ip}).scaled(coeff(0, 1, 1, 3, 3));
    CHECK(s12 == expected);

    // opposite order has twist exponent 0 and only the split extension
    CHECK(H.product(s2, s1) == H.class_element({i1, i2}));

    // untwisted product drops the scalar prefactor
    CHECK(H.product_untwisted(s2, s1) == H.class_element({i1, i2}));
    HallElement u12 = H.product_untwisted(s1, s2);
    CHECK(u12 == H.class_element({i1, i2}) + H.class_element({ip}));
}

TEST_CASE("degree bound is enforced rather than truncated")
{
    BoundQuiver bq = parse_quiver(kA2);
    HallTable H(bq, make_table(bq, 3), 3);
    HallElement s1 = H.simple(0);
    HallElement big = H.class_element({0, 0, 0}); // degree 3 already
    CHECK_THROWS_AS((void)H.product(big, s1), hq_error);
    try {
        (void)H.product(big, s1);
    } catch (const hq_error& e) {
        CHECK(e.code == errc::degree_out_of_bounds);
    }
}

TEST_CASE("extension route agrees with the sweep route")
{
    BoundQuiver a2 = parse_quiver(kA2);
    IndecompTable tab2 = make_table(a2, 3);
    HallTable H2(a2, tab2);
    int i1 = tab2.find({1, 0}), i2 = tab2.find({0, 1}), ip = tab2.find({1, 1});
    CHECK(H2.hall_number_via_ext({i1}, {i2}, {ip}) == 1);
    CHECK(H2.hall_number_via_ext({i1}, {i2}, {i1, i2}) == 1);
    // split case with vanishing Hom and Ext in both directions
    CHECK(H2.hall_number_via_ext({i2}, {i1}, {i1, i2}) == 1);
    CHECK(H2.hall_number_via_ext({i1}, {i1}, {i1, i1}) == 4);

    // exhaustive agreement on the bound chain
    BoundQuiver chain = parse_quiver(kChain3);
    HallTable Hc(chain, make_table(chain, 3));
    CHECK(route_agreement_triples(Hc, 4) == 751);

    // exhaustive agreement on the commutative square
    BoundQuiver comm = parse_quiver(kCommSquare);
    HallTable Hs(comm, make_table(comm, 3));
    CHECK(route_agreement_triples(Hs, 4) == 3118);
}

TEST_CASE("associativity at desk scale")
{
    BoundQuiver bq = parse_quiver(kChain3);
    HallTable H(bq, make_table(bq, 3));

    AssocReport twisted = verify_associativity(H, 5, true);
    CHECK(twisted.ok);
    CHECK(twisted.triples == 3532);
    CHECK(twisted.failures.empty());

    AssocReport plain = verify_associativity(H, 5, false);
    CHECK(plain.ok);
    CHECK(plain.triples == 3532);
}

TEST_CASE("coefficient component follows the twist exponent parity")
{
    BoundQuiver bq = parse_quiver(kChain3);
    IndecompTable tab = make_table(bq, 3);
    HallTable H(bq, tab);
    const UnitForm& T = H.form();
    long long pairs = 0;
    for (const IsoClass& M : H.basis()) {
        for (const IsoClass& N : H.basis()) {
            DimVector dm = H.dim_of(M), dn = H.dim_of(N);
            if (total_dim(dm) == 0 || total_dim(dn) == 0) continue;
            if (total_dim(dm) + total_dim(dn) > 4) continue;
            bool odd = bilinear(T, dm, dn) % 2 != 0;
            for (const auto& [cls, c] : H.product(H.class_element(M), H.class_element(N)).terms) {
                (void)cls;
                if (odd) {
                    CHECK(c.a == 0);
                } else {
                    CHECK(c.b == 0);
                }
            }
            for (const auto& [cls, c] :
                 H.product_untwisted(H.class_element(M), H.class_element(N)).terms) {
                (void)cls;
                CHECK(c.b == 0); // untwisted constants are plain integers
            }
            ++pairs;
        }
    }
    CHECK(pairs > 100);
}

TEST_CASE("commutation identity for simples holds on all samples")
{
    for (const char* text : {kA2, kChain3, kCommSquare, kZeroSquare}) {
        BoundQuiver bq = parse_quiver(text);
        HallTable H(bq, make_table(bq, 3));
        HallConReport report = verify_hallcon(H, 6);
        CHECK(report.ok);
        CHECK(report.failures.empty());
    }
    // frozen check counts for the chain and the two squares
    {
        BoundQuiver bq = parse_quiver(kChain3);
        HallTable H(bq, make_table(bq, 3));
        CHECK(verify_hallcon(H, 6).checked == 15);
    }
    {
        BoundQuiver bq = parse_quiver(kCommSquare);
        HallTable H(bq, make_table(bq, 3));
        CHECK(verify_hallcon(H, 6).checked == 44);
    }
    {
        BoundQuiver bq = parse_quiver(kZeroSquare);
        HallTable H(bq, make_table(bq, 3));
        CHECK(verify_hallcon(H, 6).checked == 40);
    }
}

TEST_CASE("graded dimension counts multisets of indecomposables")
{
    BoundQuiver chain = parse_quiver(kChain3);
    HallTable Hc(chain, make_table(chain, 3));
    CHECK(hall_graded_dim(Hc, {1, 1, 1}) == 3);
    CHECK(hall_graded_dim(Hc, {1, 0, 0}) == 1);
    CHECK(hall_graded_dim(Hc, {2, 1, 0}) == 2); // {S1,S1,S2} and {S1,(110)}

    BoundQuiver comm = parse_quiver(kCommSquare);
    HallTable Hs(comm, make_table(comm, 3));
    CHECK(hall_graded_dim(Hs, {1, 1, 1, 1}) == 10);
    CHECK(hall_graded_dim(Hs, {1, 1, 1, 1}) ==
          root_multiset_count(positive_roots(unit_form_of(comm), 6), {1, 1, 1, 1}));

    BoundQuiver zero = parse_quiver(kZeroSquare);
    HallTable Hz(zero, make_table(zero, 3));
    CHECK(hall_graded_dim(Hz, {1, 1, 1, 1}) == 9);
}

TEST_CASE("quantum serre images vanish on the unbound quiver")
{
    BoundQuiver bq = parse_quiver(kA2);
    HallTable H(bq, make_table(bq, 3));
    UnitForm T = unit_form_of(bq);
    NCElement e1 = NCElement::generator(2, 0), e2 = NCElement::generator(2, 1);
    CHECK(rho_image(H, ad(T, e1, ad(T, e1, e2))).is_zero());
    CHECK(rho_image(H, ad(T, e2, ad(T, e2, e1))).is_zero());

    Presentation P = generate_relations(T, positive_roots(T, 6));
    RhoReport report = rho_verify(P, H, 5);
    CHECK(report.ok());
    CHECK(report.homomorphism_ok);
    CHECK(report.isomorphism_checked);
    CHECK(report.isomorphism_ok);
    CHECK(report.relations_checked == 4);
    CHECK(report.degrees_checked == 20);
}

TEST_CASE("rho verification passes on the bound chain")
{
    BoundQuiver bq = parse_quiver(kChain3);
    UnitForm T = unit_form_of(bq);
    Presentation P = generate_relations(T, positive_roots(T, 6));
    for (int q : {2, 3, 5}) {
        HallTable H(bq, make_table(bq, q));
        RhoReport report = rho_verify(P, H, 5);
        CHECK(report.ok());
        CHECK(report.homomorphism_ok);
        CHECK(report.relations_checked == 14);
        CHECK(report.failed_relations.empty());
        // the dimension comparison runs exactly when q != 2
        CHECK(report.isomorphism_checked == (q != 2));
        if (q != 2) {
            CHECK(report.isomorphism_ok);
            CHECK(report.degrees_checked == 55);
            CHECK(report.dim_mismatches.empty());
        }
    }
}

TEST_CASE("rho fails on the commutative square with an explicit witness")
{
    BoundQuiver bq = parse_quiver(kCommSquare);
    IndecompTable tab = make_table(bq, 3);
    HallTable H(bq, tab);
    UnitForm T = unit_form_of(bq);

    // the witness element ad(e1, ad(e2, ad(e3, e1))) of degree (2,1,1,0):
    // its tail (1,1,1,0) is a root, the full degree is not, yet the image
    // is a nonzero multiple of [(1,1,0,0) + (1,0,1,0)]
    NCElement e1 = NCElement::generator(4, 0), e2 = NCElement::generator(4, 1),
              e3 = NCElement::generator(4, 2);
    NCElement witness = ad(T, e1, ad(T, e2, ad(T, e3, e1)));
    IsoClass pair = {tab.find({1, 1, 0, 0}), tab.find({1, 0, 1, 0})};
    std::sort(pair.begin(), pair.end());
    HallElement image = rho_image(H, witness);
    CHECK(image == H.class_element(pair).scaled(coeff(0, 1, 2, 3, 3)));

    // the responsible structure constant, confirmed on both routes
    int s1 = tab.find({1, 0, 0, 0}), m1110 = tab.find({1, 1, 1, 0});
    CHECK(H.hall_number({s1}, {m1110}, pair) == 2);
    CHECK(H.hall_number_via_ext({s1}, {m1110}, pair) == 2);

    Presentation P = generate_relations(T, positive_roots(T, 6));
    RhoReport report = rho_verify(P, H, 5);
    CHECK_FALSE(report.ok());
    CHECK_FALSE(report.homomorphism_ok);
    CHECK(report.relations_checked == 160);
    CHECK(report.failed_relations.size() == 8);
    for (const RhoFailure& f : report.failed_relations) {
        bool anomalous = f.degree == DimVector{2, 1, 1, 0} || f.degree == DimVector{0, 1, 1, 2};
        CHECK(anomalous);
        CHECK_FALSE(f.image.is_zero());
    }
    bool witnessed = false;
    for (const RhoFailure& f : report.failed_relations)
        if (f.sequence == std::vector<int>{0, 1, 2, 0}) {
            witnessed = true;
            CHECK(f.image == image);
        }
    CHECK(witnessed);

    CHECK_FALSE(report.isomorphism_ok);
    std::vector<std::pair<DimVector, std::pair<int, long long>>> got;
    for (const RhoDimMismatch& m : report.dim_mismatches)
        got.push_back({m.alpha, {m.presentation_dim, m.hall_dim}});
    std::sort(got.begin(), got.end());
    std::vector<std::pair<DimVector, std::pair<int, long long>>> expected = {
        {{0, 1, 1, 2}, {4, 5}},  {{0, 1, 1, 3}, {4, 5}},  {{0, 1, 2, 2}, {5, 7}},
        {{0, 2, 1, 2}, {5, 7}},  {{1, 1, 1, 2}, {10, 11}}, {{2, 1, 1, 0}, {4, 5}},
        {{2, 1, 1, 1}, {10, 11}}, {{2, 1, 2, 0}, {5, 7}},  {{2, 2, 1, 0}, {5, 7}},
        {{3, 1, 1, 0}, {4, 5}},
    };
    std::sort(expected.begin(), expected.end());
    CHECK(got == expected);
}

TEST_CASE("rho fails on the zero relation square the same way")
{
    BoundQuiver bq = parse_quiver(kZeroSquare);
    IndecompTable tab = make_table(bq, 3);
    HallTable H(bq, tab);
    UnitForm T = unit_form_of(bq);

    NCElement e1 = NCElement::generator(4, 0), e2 = NCElement::generator(4, 1),
              e3 = NCElement::generator(4, 2);
    NCElement witness = ad(T, e1, ad(T, e2, ad(T, e3, e1)));
    IsoClass pair = {tab.find({1, 1, 0, 0}), tab.find({1, 0, 1, 0})};
    std::sort(pair.begin(), pair.end());
    CHECK(rho_image(H, witness) == H.class_element(pair).scaled(coeff(0, 1, 2, 3, 3)));

    Presentation P = generate_relations(T, positive_roots(T, 6));
    RhoReport report = rho_verify(P, H, 5);
    CHECK_FALSE(report.ok());
    CHECK(report.relations_checked == 76);
    CHECK(report.failed_relations.size() == 8);
    CHECK(report.dim_mismatches.size() == 10);
    for (const RhoDimMismatch& m : report.dim_mismatches) {
        // one basis class short at the thin anomalous degrees, two at the
        // wide ones, exactly as for the commutative square
        CHECK(m.presentation_dim < m.hall_dim);
        if (m.alpha == DimVector{2, 1, 1, 1} || m.alpha == DimVector{1, 1, 1, 2}) {
            CHECK(m.presentation_dim == 9);
            CHECK(m.hall_dim == 10);
        }
    }
}

TEST_SUITE_END();
