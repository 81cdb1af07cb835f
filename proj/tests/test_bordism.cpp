#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qtbord/bordism.hpp"
#include "qtbord/localization.hpp"
#include "qtbord/numtheory.hpp"

using namespace qtb;
using bord::FormalBordismClass;
using bord::GeneratorCertificate;

TEST_CASE("s_of_class")
{
    FormalBordismClass c;
    c.n = 3;
    c.terms.push_back({1, fam::L(2, 1)});
    c.terms.push_back({-2, fam::L(1, 2)});
    c.terms.push_back({1, fam::L(0, 3)});
    CHECK(bord::s_of_class(c) == 6);  // (-1)^2 C(4,2)

    FormalBordismClass empty;
    empty.n = 4;
    CHECK(bord::s_of_class(empty) == 0);

    FormalBordismClass even;
    even.n = 8;
    even.terms.push_back({2, fam::tilde_N(2, 5)});
    even.terms.push_back({-1, fam::tilde_N(4, 3)});
    CHECK(bord::s_of_class(even) == 12);  // 2 m_8 m_7

    FormalBordismClass bad;
    bad.n = 3;
    bad.terms.push_back({1, fam::cpn(2)});
    CHECK_THROWS(bord::s_of_class(bad));
}

TEST_CASE("milnor generator test")
{
    FormalBordismClass cp2;
    cp2.n = 2;
    cp2.terms.push_back({1, fam::cpn(2)});
    CHECK(bord::milnor_generator_test(cp2, 2));  // s = 3 = m_2

    FormalBordismClass l11;
    l11.n = 2;
    l11.terms.push_back({1, fam::L(1, 1)});
    CHECK(!bord::milnor_generator_test(l11, 2));  // s = 0
}

TEST_CASE("find_y_odd")
{
    GeneratorCertificate c2 = bord::find_y_odd(2);
    CHECK(c2.s_value == 5);
    CHECK(c2.su);
    REQUIRE(c2.cls.terms.size() == 1);
    CHECK(c2.cls.terms[0].coeff == 1);
    CHECK(c2.cls.terms[0].member.name == "tildeL(2,3)");

    GeneratorCertificate c3 = bord::find_y_odd(3);
    CHECK(c3.s_value == 14);
    REQUIRE(c3.cls.terms.size() == 1);
    CHECK(c3.cls.terms[0].member.name == "tildeL(2,5)");

    for (int k = 2; k <= 10; ++k) {
        GeneratorCertificate c = bord::find_y_odd(k);
        mpz_class target = mpz_class(static_cast<long>(nt::m_of(2 * k + 1))) *
                           static_cast<long>(nt::m_of(2 * k));
        REQUIRE(c.s_value == target);
        REQUIRE(c.target == nt::gcd_diff_family(k));
    }
    CHECK_THROWS(bord::find_y_odd(1));
}

TEST_CASE("find_y_even")
{
    GeneratorCertificate c3 = bord::find_y_even(3);
    CHECK(c3.s_value == 14);
    REQUIRE(c3.cls.terms.size() == 1);
    CHECK(c3.cls.terms[0].member.name == "tildeN(2,3)");

    GeneratorCertificate c4 = bord::find_y_even(4);
    CHECK(c4.s_value == 12);
    REQUIRE(c4.cls.terms.size() == 2);
    CHECK(c4.cls.terms[0].coeff == 2);
    CHECK(c4.cls.terms[0].member.name == "tildeN(2,5)");
    CHECK(c4.cls.terms[1].coeff == -1);
    CHECK(c4.cls.terms[1].member.name == "tildeN(4,3)");

    for (int k = 3; k <= 10; ++k) {
        GeneratorCertificate c = bord::find_y_even(k);
        mpz_class target = 2 * mpz_class(static_cast<long>(nt::m_of(2 * k))) *
                           static_cast<long>(nt::m_of(2 * k - 1));
        REQUIRE(c.s_value == target);
        // target = 2 gcd{a_i}
        mpz_class g = 0;
        for (const auto& a : nt::a_family(k))
            mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        REQUIRE(c.target == 2 * g);
        for (const auto& t : c.cls.terms)
            REQUIRE(qt::su_check(t.member.pair).has_value());
    }
    CHECK_THROWS(bord::find_y_even(2));
}

TEST_CASE("find_unitary")
{
    bord::GeneratorCertificate c = bord::find_unitary(2);
    CHECK(c.s_value == 3);
    REQUIRE(c.cls.terms.size() == 1);
    CHECK(c.cls.terms[0].member.name == "cpn(2)");  // L(0,2)
    CHECK(!c.su);

    for (int i = 1; i <= 12; ++i) {
        bord::GeneratorCertificate g = bord::find_unitary(i);
        REQUIRE(g.s_value == mpz_class(static_cast<long>(nt::m_of(i))));
        REQUIRE(bord::milnor_generator_test(g.cls, i));
    }
}

TEST_CASE("realize single term")
{
    GeneratorCertificate c = bord::find_y_odd(2);
    qt::CharacteristicPair p = bord::realize_certificate(c);
    CHECK(p.name == c.cls.terms[0].member.pair.name);
    CHECK(loc::s_number(p) == 5);
}

TEST_CASE("realize a combination and check additivity")
{
    GeneratorCertificate c = bord::find_y_even(4);
    qt::CharacteristicPair p = bord::realize_certificate(c);
    CHECK(qt::validate(p).empty());
    CHECK(loc::s_number(p) == 12);
    CHECK(qt::su_check(p).has_value());

    // Every Chern number of the realization equals the formal sum.
    loc::Context ctx = loc::make_context(p);
    std::vector<loc::Context> members;
    for (const auto& t : c.cls.terms)
        members.push_back(loc::make_context(t.member.pair));
    for (const auto& omega : qt::all_chern_monomials(8)) {
        mpz_class formal = 0;
        for (size_t i = 0; i < c.cls.terms.size(); ++i)
            formal += mpz_class(static_cast<long>(c.cls.terms[i].coeff)) *
                      loc::chern_number(members[i], omega);
        REQUIRE(loc::chern_number(ctx, omega) == formal);
    }
}

TEST_CASE("realize M + (-M) bounds")
{
    GeneratorCertificate c;
    c.cls.n = 3;
    c.cls.terms.push_back({1, fam::L(1, 2)});
    c.cls.terms.push_back({-1, fam::L(1, 2)});
    c.s_value = 0;
    c.target = 0;
    qt::CharacteristicPair p = bord::realize_certificate(c);
    loc::Context ctx = loc::make_context(p);
    for (const auto& omega : qt::all_chern_monomials(3))
        CHECK(loc::chern_number(ctx, omega) == 0);
}

TEST_CASE("realize guards")
{
    GeneratorCertificate small;
    small.cls.n = 2;
    small.cls.terms.push_back({1, fam::cpn(2)});
    small.cls.terms.push_back({1, fam::cpn(2)});
    CHECK_THROWS(bord::realize_certificate(small));  // dimension 4 is too small

    GeneratorCertificate empty;
    empty.cls.n = 5;
    CHECK_THROWS(bord::realize_certificate(empty));
}

TEST_CASE("certificate json")
{
    nlohmann::ordered_json j = bord::certificate_json(bord::find_y_even(4));
    CHECK(j["s_value"] == 12);
    CHECK(j["su"] == true);
    CHECK(j["terms"].size() == 2);
    CHECK(j["terms"][0]["coefficient"] == 2);
    // stable under re-runs
    CHECK(bord::certificate_json(bord::find_y_even(4)).dump() == j.dump());
}
