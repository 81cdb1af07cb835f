#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qtbord/numtheory.hpp"
#include "qtbord/poly.hpp"

using namespace qtb;
using poly::QuotientPresentation;
using poly::SparsePoly;

namespace {

// Z[u,v]/(u^{n1+1}, v^{n2+1} = u v^{n2}), fundamental u^{n1} v^{n2} -> 1.
QuotientPresentation l_presentation(int n1, int n2)
{
    QuotientPresentation q;
    q.arity = 2;
    q.annihilators = {{0, n1 + 1}};
    SparsePoly repl(2);
    repl.add_term({1, n2}, 1);
    q.solved = {{1, n2 + 1, repl}};
    q.fundamental_monomial = {n1, n2};
    q.var_names = {"u", "v"};
    q.validate();
    return q;
}

SparsePoly u_of(int arity = 2) { return SparsePoly::variable(arity, 0); }
SparsePoly v_of(int arity = 2) { return SparsePoly::variable(arity, 1); }

SparsePoly random_poly(std::mt19937& rng, int arity, int max_deg)
{
    std::uniform_int_distribution<int> nterms(0, 5), expo(0, max_deg), coef(-4, 4);
    SparsePoly p(arity);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        poly::Exponents e(static_cast<size_t>(arity));
        for (auto& x : e)
            x = expo(rng);
        p.add_term(e, coef(rng));
    }
    return p;
}

}  // namespace

TEST_CASE("ring arithmetic")
{
    SparsePoly one = SparsePoly::constant(2, 1);
    SparsePoly u = u_of(), v = v_of();

    CHECK((one + u) * (one - u) == one - u * u);

    SparsePoly p = (one + v - u) * (one + v);
    CHECK(p.term_count() == 5);  // 1 + 2v - u + v^2 - uv

    SparsePoly q = u * v - v * u;
    CHECK(q.is_zero());
    CHECK((p - p).is_zero());
    CHECK((mpz_class(3) * u).coefficient({1, 0}) == 3);

    SparsePoly w(3);
    CHECK_THROWS(u * w);
    CHECK_THROWS(u + w);
    CHECK(u.pow(3).coefficient({3, 0}) == 1);
}

TEST_CASE("normal form in the two-variable presentation")
{
    // L(2,1): u^3 = 0, v^2 = uv; v^3 -> u^2 v.
    QuotientPresentation q = l_presentation(2, 1);
    SparsePoly v3 = v_of().pow(3);
    SparsePoly nf = normal_form(v3, q);
    SparsePoly expect(2);
    expect.add_term({2, 1}, 1);
    CHECK(nf == expect);

    CHECK(normal_form(SparsePoly(2), q).is_zero());

    // Idempotence and compatibility with the ring operations.
    std::mt19937 rng(20240901);
    QuotientPresentation q23 = l_presentation(2, 3);
    for (int t = 0; t < 200; ++t) {
        SparsePoly a = random_poly(rng, 2, 6), b = random_poly(rng, 2, 6);
        SparsePoly na = normal_form(a, q23), nb = normal_form(b, q23);
        REQUIRE(normal_form(na, q23) == na);
        REQUIRE(normal_form(a + b, q23) == normal_form(na + nb, q23));
        REQUIRE(normal_form(a * b, q23) == normal_form(na * nb, q23));
    }
}

TEST_CASE("normal form in the three-variable presentation")
{
    // u^2 = 0, v^{n1+1} = 0, w^{n2+1} = 2uw^{n2} - vw^{n2} + 2uvw^{n2-1}.
    int n1 = 2, n2 = 3;
    QuotientPresentation q;
    q.arity = 3;
    q.annihilators = {{0, 2}, {1, n1 + 1}};
    SparsePoly repl(3);
    repl.add_term({1, 0, n2}, 2);
    repl.add_term({0, 1, n2}, -1);
    repl.add_term({1, 1, n2 - 1}, 2);
    q.solved = {{2, n2 + 1, repl}};
    q.fundamental_monomial = {1, n1, n2};
    q.validate();

    // u w^{n2+1} -> -u v w^{n2}
    SparsePoly uw(3);
    uw.add_term({1, 0, n2 + 1}, 1);
    SparsePoly expect(3);
    expect.add_term({1, 1, n2}, -1);
    CHECK(normal_form(uw, q) == expect);

    // and the full reduction chain u w^{n-1} -> u v^{n1} w^{n2}
    SparsePoly top(3);
    top.add_term({1, 0, n1 + n2}, 1);
    SparsePoly fund(3);
    fund.add_term({1, n1, n2}, 1);
    CHECK(normal_form(top, q) == fund);
}

TEST_CASE("fundamental evaluation")
{
    QuotientPresentation q21 = l_presentation(2, 1);
    SparsePoly uv(2);
    uv.add_term({2, 1}, 1);
    CHECK(evaluate_fundamental(uv, q21) == 1);

    // v^{n1+n2} reduces through the relation n1 times.
    for (int n1 = 1; n1 <= 4; ++n1)
        for (int n2 = 1; n2 <= 4; ++n2) {
            QuotientPresentation q = l_presentation(n1, n2);
            CHECK(evaluate_fundamental(v_of().pow(n1 + n2), q) == 1);
        }

    CHECK(evaluate_fundamental(SparsePoly(2), q21) == 0);
    CHECK_THROWS(evaluate_fundamental(v_of(), q21));  // wrong degree

    // An incomplete presentation leaves a residual monomial and must refuse.
    QuotientPresentation incomplete;
    incomplete.arity = 2;
    incomplete.annihilators = {{0, 3}};
    incomplete.fundamental_monomial = {2, 1};
    incomplete.validate();
    CHECK_THROWS(evaluate_fundamental(v_of().pow(3), incomplete));
}

TEST_CASE("alternating binomial identity in the quotient")
{
    // nf((v-u)^{n1+n2} + n2 v^{n1+n2}) = (sum (-1)^j C(n,j) + n2) u^{n1} v^{n2}
    for (int n1 = 1; n1 <= 4; ++n1)
        for (int n2 = 1; n2 <= 4; ++n2) {
            int n = n1 + n2;
            QuotientPresentation q = l_presentation(n1, n2);
            SparsePoly lhs = (v_of() - u_of()).pow(n) +
                             mpz_class(n2) * v_of().pow(n);
            mpz_class coeff = 0;
            for (int j = 0; j <= n1; ++j) {
                mpz_class c = nt::binomial(n, j);
                coeff += (j % 2 == 0) ? c : -c;
            }
            coeff += n2;
            SparsePoly expect(2);
            expect.add_term({n1, n2}, coeff);
            REQUIRE(normal_form(lhs, q) == expect);
        }
}

TEST_CASE("presentation guards")
{
    QuotientPresentation bad;
    bad.arity = 2;
    SparsePoly repl(2);
    repl.add_term({0, 1}, 1);  // replacement does not lower the variable
    bad.solved = {{1, 1, repl}};
    bad.fundamental_monomial = {0, 0};
    CHECK_THROWS(bad.validate());

    QuotientPresentation twice;
    twice.arity = 1;
    twice.annihilators = {{0, 2}, {0, 3}};
    twice.fundamental_monomial = {1};
    CHECK_THROWS(twice.validate());
}
