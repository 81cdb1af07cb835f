#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtbord/families.hpp"
#include "qtbord/localization.hpp"
#include "qtbord/numtheory.hpp"

using namespace qtb;
using poly::SparsePoly;

TEST_CASE("cpn")
{
    auto f = fam::cpn(3);
    CHECK(f.n == 3);
    CHECK(f.linear_forms.size() == 4);

    // c(CP^n) = (1+v)^{n+1} in the quotient
    SparsePoly v = SparsePoly::variable(1, 0);
    SparsePoly expect = SparsePoly::constant(1, 1);
    for (int i = 0; i < 4; ++i)
        expect = expect * (SparsePoly::constant(1, 1) + v);
    expect = normal_form(expect, f.presentation);
    CHECK(fam::total_chern_class(f) == expect);

    CHECK(fam::s_number_cohomology(f) == 4);
    for (int n = 1; n <= 8; ++n)
        CHECK(fam::s_number_cohomology(fam::cpn(n)) == n + 1);
    CHECK_THROWS(fam::cpn(0));
}

TEST_CASE("proj_sum")
{
    // All degrees zero: the product CP^{n1} x CP^{n2}; numbers multiply.
    auto f00 = fam::proj_sum(1, {0, 0});
    auto p = fam::product(fam::cpn(1), fam::cpn(2));
    for (const auto& omega : qt::all_chern_monomials(3))
        CHECK(fam::chern_number_cohomology(f00, omega) ==
              fam::chern_number_cohomology(p, omega));

    // degrees (1,0,...,0) is the L family
    auto f10 = fam::proj_sum(2, {1, 0});
    auto l = fam::L(2, 2);
    for (const auto& omega : qt::all_chern_monomials(4))
        CHECK(fam::chern_number_cohomology(f10, omega) ==
              fam::chern_number_cohomology(l, omega));

    // c_1 = (n1 + 1 - sum i_j) u + (n2 + 1) v; for (n1,n2,degrees) = (1,1,(2))
    // the u part cancels and c_1 = 2v.
    auto f2 = fam::proj_sum(1, {2});
    SparsePoly c1 = fam::first_chern_class(f2);
    SparsePoly expect(2);
    expect.add_term({0, 1}, 2);
    CHECK(c1 == expect);
}

TEST_CASE("L family")
{
    CHECK(fam::s_number_cohomology(fam::L(2, 1)) == 2);   // 1 - 3 + 3 + 1
    CHECK(fam::s_number_cohomology(fam::L(1, 1)) == 0);   // Hirzebruch surface
    CHECK(fam::s_number_cohomology(fam::L(0, 3)) == 4);   // CP^3
    CHECK(fam::s_number_cohomology(fam::L(3, 0)) == 4);
    CHECK_THROWS(fam::L(0, 0));

    for (int n1 = 0; n1 <= 6; ++n1)
        for (int n2 = 1; n1 + n2 <= 7; ++n2)
            CHECK(fam::s_number_cohomology(fam::L(n1, n2)) ==
                  fam::closed_form_s("lemma1", n1, n2));
}

TEST_CASE("tilde_L")
{
    auto f = fam::tilde_L(2, 3);
    CHECK(qt::su_check(f.pair).has_value());
    CHECK(fam::s_number_cohomology(f) == 5);  // -C(5,1) + C(5,2)
    CHECK(fam::s_number_cohomology(fam::tilde_L(2, 1)) == 0);

    // first Chern class vanishes in the quotient
    CHECK(fam::first_chern_class(f).is_zero());

    // the pair is the documented conjugation of L's pair followed by a
    // lattice renormalization: column sums are all 1
    for (int c = 0; c < f.pair.num_facets(); ++c) {
        mpz_class sum = 0;
        for (int r = 0; r < f.pair.dim(); ++r)
            sum += f.pair.lambda.at(r, c);
        CHECK(sum == 1);
    }
    CHECK_THROWS(fam::tilde_L(1, 1));
    CHECK_THROWS(fam::tilde_L(2, 2));

    for (int n1 = 2; n1 <= 6; n1 += 2)
        for (int n2 = 1; n1 + n2 <= 9; n2 += 2) {
            auto g = fam::tilde_L(n1, n2);
            REQUIRE(qt::su_check(g.pair).has_value());
            REQUIRE(fam::s_number_cohomology(g) == fam::closed_form_s("snL", n1, n2));
        }
}

TEST_CASE("tilde_N")
{
    auto f = fam::tilde_N(2, 3);
    CHECK(qt::validate(f.pair).empty());
    CHECK(qt::su_check(f.pair).has_value());
    CHECK(fam::s_number_cohomology(f) == 14);  // n^2 - 3n - 4 at n = 6
    CHECK(loc::s_number(f.pair) == 14);
    CHECK(fam::first_chern_class(f).is_zero());

    CHECK(fam::s_number_cohomology(fam::tilde_N(2, 1)) == 0);
    CHECK(loc::s_number(fam::tilde_N(2, 1).pair) == 0);
    CHECK(qt::su_check(fam::tilde_N(2, 1).pair).has_value());

    for (int n1 = 2; n1 <= 6; n1 += 2)
        for (int n2 = 1; 1 + n1 + n2 <= 9; n2 += 2) {
            auto g = fam::tilde_N(n1, n2);
            REQUIRE(qt::validate(g.pair).empty());
            REQUIRE(qt::su_check(g.pair).has_value());
            REQUIRE(fam::s_number_cohomology(g) == fam::closed_form_s("snN", n1, n2));
        }
    CHECK_THROWS(fam::tilde_N(3, 1));
}

TEST_CASE("product")
{
    auto s = fam::product(fam::cpn(1), fam::cpn(1));
    qt::ChernMonomial c2{{0, 1}};
    CHECK(fam::chern_number_cohomology(s, c2) == 4);  // vertex count
    CHECK(loc::chern_number(s.pair, c2) == 4);

    // s vanishes on decomposables
    CHECK(fam::s_number_cohomology(fam::product(fam::cpn(2), fam::cpn(2))) == 0);

    // spot values on CP^1 x CP^2
    auto p = fam::product(fam::cpn(1), fam::cpn(2));
    CHECK(fam::chern_number_cohomology(p, qt::ChernMonomial{{3, 0, 0}}) == 54);
    CHECK(fam::chern_number_cohomology(p, qt::ChernMonomial{{1, 1, 0}}) == 24);
    CHECK(fam::chern_number_cohomology(p, qt::ChernMonomial{{0, 0, 1}}) == 6);
    CHECK(loc::chern_number(p.pair, qt::ChernMonomial{{3, 0, 0}}) == 54);
}

TEST_CASE("closed forms")
{
    CHECK(fam::closed_form_s("lemma1", 2, 1) == 2);
    CHECK(fam::closed_form_s("snN", 2, 3) == 14);
    CHECK(fam::closed_form_s("snL", 2, 3) == 5);
    CHECK(fam::closed_form_s("snmilnor", 1, 2) == -3);
    CHECK_THROWS(fam::closed_form_s("unknown", 1, 1));
}

TEST_CASE("form count and homogeneity invariants")
{
    for (const auto& f : {fam::L(2, 3), fam::tilde_L(2, 3), fam::tilde_N(2, 3),
                          fam::product(fam::cpn(2), fam::tilde_L(2, 1))}) {
        CHECK(static_cast<int>(f.linear_forms.size()) == f.pair.num_facets());
        for (const auto& form : f.linear_forms)
            CHECK(form.is_homogeneous(1));
        // su witness exists exactly when the reduced first Chern class is 0
        bool su = qt::su_check(f.pair).has_value();
        CHECK(su == fam::first_chern_class(f).is_zero());
    }
}

TEST_CASE("family spec parser")
{
    CHECK(fam::parse_family_spec("cpn(3)").name == "cpn(3)");
    CHECK(fam::parse_family_spec("L(2,1)").n == 3);
    CHECK(fam::parse_family_spec(" tildeN( 2 , 3 ) ").n == 6);
    CHECK(fam::parse_family_spec("proj(2,1,0,3)").n == 5);
    auto pr = fam::parse_family_spec("product(L(1,2),cpn(2))");
    CHECK(pr.n == 5);
    CHECK(fam::parse_family_spec("product(product(cpn(1),cpn(1)),cpn(1))").n == 3);
    CHECK_THROWS(fam::parse_family_spec("foo(1)"));
    CHECK_THROWS(fam::parse_family_spec("cpn(1,2)"));
    CHECK_THROWS(fam::parse_family_spec("cpn"));
}

TEST_CASE("conjugating one facet moves c1 by -2 times the facet class")
{
    // Family-level statement: the tilde forms differ from L's forms by sign
    // flips, so c1 changes by -2 * (form) at each designated facet.
    auto l = fam::L(2, 3);
    auto t = fam::tilde_L(2, 3);
    SparsePoly delta = fam::first_chern_class(t) - fam::first_chern_class(l);
    SparsePoly expect(2);
    for (size_t i = 0; i < l.linear_forms.size(); ++i) {
        SparsePoly d = t.linear_forms[i] - l.linear_forms[i];
        if (!d.is_zero()) {
            CHECK(d == mpz_class(-2) * l.linear_forms[i]);
            expect = expect + d;
        }
    }
    CHECK(normal_form(expect, l.presentation) == delta);
}

TEST_CASE("printed matrices of the SU families")
{
    // tildeL(2,3): (I | alt) blocks with the single degree entry carried over.
    auto tl = fam::tilde_L(2, 3);
    long expect_tl[5][7] = {
        {1, 0, 1, 0, 0, 0, 0},
        {0, 1, -1, 0, 0, 0, 0},
        {0, 0, 1, 1, 0, 0, 1},
        {0, 0, 0, 0, 1, 0, -1},
        {0, 0, 0, 0, 0, 1, 1},
    };
    for (int r = 0; r < 5; ++r)
        for (int c = 0; c < 7; ++c)
            CHECK(tl.pair.lambda.at(r, c) == expect_tl[r][c]);

    // tildeN(2,3) over the triple product of simplices.
    auto tn = fam::tilde_N(2, 3);
    long expect_tn[6][9] = {
        {1, 1, 0, 0, 0, 0, 0, 0, 0},
        {0, 0, 1, 0, 1, 0, 0, 0, 0},
        {0, 0, 0, 1, -1, 0, 0, 0, 0},
        {0, -1, 0, 0, 0, 1, 0, 0, 1},
        {0, 1, 0, 0, 0, 0, 1, 0, -1},
        {0, 0, 0, 0, 1, 0, 0, 1, 1},
    };
    for (int r = 0; r < 6; ++r)
        for (int c = 0; c < 9; ++c)
            CHECK(tn.pair.lambda.at(r, c) == expect_tn[r][c]);

    // tildeN(n1,1) splits off the bounding two-sphere factor.
    auto tn1 = fam::tilde_N(4, 1);
    for (int c = 0; c < tn1.pair.num_facets(); ++c) {
        mpz_class sum = 0;
        for (int r = 0; r < tn1.pair.dim(); ++r)
            sum += tn1.pair.lambda.at(r, c);
        CHECK(sum == 1);
    }
    for (int c = 2; c < tn1.pair.num_facets(); ++c)
        CHECK(tn1.pair.lambda.at(0, c) == 0);  // rows of the S^2 block decouple
}
