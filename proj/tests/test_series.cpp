#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dcp/betti.hpp"
#include "dcp/errors.hpp"
#include "dcp/monomial_ideal.hpp"
#include "dcp/series.hpp"
#include "dcp/tanisaki.hpp"

using namespace dcp;

namespace {

BiPoly qt(int i, int j, long c = 1) { return BiPoly::term(c, i, j); }

std::vector<Hook> hooks_up_to(int nmax) {
    std::vector<Hook> v;
    for (int n = 1; n <= nmax; ++n)
        for (int b = 0; b < n; ++b) v.push_back(Hook{n - 1 - b, b});
    return v;
}

} // namespace

TEST_CASE("poincare_J_hook examples") {
    // Hook(2,1): 1 + 6qt^2 + 8q^2t^3 + 3q^3t^4
    BiPoly p = poincare_J_hook(Hook{2, 1});
    BiPoly expect = qt(0, 0) + qt(1, 2, 6) + qt(2, 3, 8) + qt(3, 4, 3);
    CHECK(p == expect);

    // principal ideal: 1 + q t^{b+1}
    for (int b = 0; b <= 6; ++b)
        CHECK(poincare_J_hook(Hook{0, b}) == qt(0, 0) + qt(1, b + 1));

    // one-row hooks telescope to the Koszul complex of the variables
    for (int a = 0; a <= 8; ++a) {
        BiPoly koszul;
        for (int k = 0; k <= a + 1; ++k) koszul = koszul + qt(k, k, binomial(a + 1, k).get_si());
        CHECK(poincare_J_hook(Hook{a, 0}) == koszul);
    }
}

TEST_CASE("poincare_hook examples") {
    BiPoly p = poincare_hook(Hook{2, 1});
    BiPoly expect =
        qt(0, 0) + qt(1, 1) + qt(1, 2, 6) + qt(2, 3, 14) + qt(3, 4, 11) + qt(4, 5, 3);
    CHECK(p == expect);

    BiPoly p11 = poincare_hook(Hook{1, 1});
    CHECK(p11 == qt(0, 0) + qt(1, 1) + qt(1, 2, 3) + qt(2, 3, 5) + qt(3, 4, 2));

    // Hook(a,0) is Koszul: (1+qt)^n
    for (int a = 0; a <= 8; ++a) {
        int n = a + 1;
        BiPoly koszul;
        for (int k = 0; k <= n; ++k) koszul = koszul + qt(k, k, binomial(n, k).get_si());
        CHECK(poincare_hook(Hook{a, 0}) == koszul);
    }

    // Hook(0,b): product of (1+qt^k), k = 1..b+1
    for (int b = 0; b <= 6; ++b) {
        BiPoly prod = BiPoly::one();
        for (int k = 1; k <= b + 1; ++k) prod = mapping_cone_shift(prod, k);
        CHECK(poincare_hook(Hook{0, b}) == prod);
    }
}

TEST_CASE("mapping cone shift") {
    CHECK(mapping_cone_shift(BiPoly::one(), 3) == qt(0, 0) + qt(1, 3));
    BiPoly p = poincare_J_hook(Hook{2, 2});
    CHECK(mapping_cone_shift(mapping_cone_shift(p, 1), 2) ==
          mapping_cone_shift(mapping_cone_shift(p, 2), 1));
    // the full series is the J part shifted by each e_i
    for (const Hook& h : hooks_up_to(10)) {
        BiPoly shifted = poincare_J_hook(h);
        for (int m = 1; m <= h.b; ++m) shifted = mapping_cone_shift(shifted, m);
        CHECK(shifted == poincare_hook(h));
    }
}

TEST_CASE("herzog takayama from set sizes") {
    CHECK(herzog_takayama_poincare({0}, 1) == qt(0, 0) + qt(1, 1));
    CHECK(herzog_takayama_poincare({0, 1}, 1) == qt(0, 0) + qt(1, 1, 2) + qt(2, 2));
    // measured sizes reproduce the closed J-part series
    for (const Hook& h : hooks_up_to(8)) {
        auto lq = linear_quotients_lex(hook_split(h).monomial_part);
        REQUIRE(lq.linear);
        CHECK(herzog_takayama_poincare(lq.set_sizes, h.b + 1) == poincare_J_hook(h));
    }
}

TEST_CASE("graded recursion agrees with the closed form for n <= 10") {
    for (const Hook& h : hooks_up_to(10)) CHECK(poincare_recursive_graded(h) == poincare_hook(h));
}

TEST_CASE("ungraded recursion") {
    // P_{(1|b)}(q) = (1+q)^{b+1} (1 + (b+1) q)
    for (int b = 0; b <= 8; ++b) {
        UniSeries onepq({mpz_class(1), mpz_class(1)});
        UniSeries expect = onepq.pow(b + 1) * UniSeries({mpz_class(1), mpz_class(b + 1)});
        CHECK(poincare_recursive_ungraded(Hook{1, b}) == expect);
    }
    // specializing t = 1 in the graded series gives the ungraded one
    for (const Hook& h : hooks_up_to(10))
        CHECK(poincare_hook(h).eval_t_one() == poincare_recursive_ungraded(h));
}

TEST_CASE("betti tables") {
    BettiTable t21 = betti_table(poincare_hook(Hook{2, 1}));
    CHECK(t21.beta(0, 0) == 1);
    CHECK(t21.beta(1, 1) == 1);
    CHECK(t21.beta(1, 2) == 6);
    CHECK(t21.beta(2, 3) == 14);
    CHECK(t21.beta(3, 4) == 11);
    CHECK(t21.beta(4, 5) == 3);
    CHECK(t21.projective_dimension == 4);
    CHECK(t21.total(1) == 7);

    BettiTable t11 = betti_table(poincare_hook(Hook{1, 1}));
    CHECK(t11.beta(1, 1) == 1);
    CHECK(t11.beta(1, 2) == 3);
    CHECK(t11.beta(2, 3) == 5);
    CHECK(t11.beta(3, 4) == 2);

    // beta_1 = C(n, b+1) + b
    for (const Hook& h : hooks_up_to(10)) {
        BettiTable t = betti_table(poincare_hook(h));
        CHECK(t.total(1) == binomial(h.n(), h.b + 1) + h.b);
    }

    BiPoly bad = qt(0, 0) - qt(1, 1);
    CHECK_THROWS_AS(betti_table(bad), NegativeCoefficient);
    CHECK_THROWS_AS(betti_table(qt(1, 1)), NegativeCoefficient);
}

TEST_CASE("regularity") {
    CHECK(regularity_from_table(betti_table(poincare_hook(Hook{2, 1}))) == 1);
    CHECK(regularity_hook(Hook{2, 1}) == 1);
    CHECK(regularity_hook(Hook{0, 3}) == 6);
    CHECK(regularity_hook(Hook{5, 0}) == 0);
    for (const Hook& h : hooks_up_to(10)) {
        CHECK(regularity_from_table(betti_table(poincare_hook(h))) == regularity_hook(h));
        CHECK(regularity_from_table(betti_table(poincare_hook(h))) == h.b * (h.b + 1) / 2);
    }
}

TEST_CASE("t-binomials") {
    CHECK(t_binomial(2, 1) == UniSeries({mpz_class(1), mpz_class(1)}));
    CHECK(t_binomial(4, 2) ==
          UniSeries({mpz_class(1), mpz_class(1), mpz_class(2), mpz_class(1), mpz_class(1)}));
    // specialization at t = 1
    for (int n = 0; n <= 12; ++n)
        for (int k = 0; k <= n; ++k) CHECK(t_binomial(n, k).eval(1) == binomial(n, k));
    // q-Pascal recurrence: C(n,k)_t = C(n-1,k-1)_t + t^k C(n-1,k)_t
    for (int n = 1; n <= 10; ++n)
        for (int k = 1; k < n; ++k)
            CHECK(t_binomial(n, k) ==
                  t_binomial(n - 1, k - 1) + UniSeries::term(1, k) * t_binomial(n - 1, k));
    CHECK_THROWS_AS(t_binomial(3, 4), IndexOutOfRange);
}

TEST_CASE("inexact division is rejected") {
    UniSeries num({mpz_class(1), mpz_class(1)});      // 1 + t
    UniSeries den({mpz_class(1), mpz_class(1), mpz_class(1)}); // 1 + t + t^2
    CHECK_THROWS_AS(num.divide_exact(den), InexactDivision);
    UniSeries n2({mpz_class(1), mpz_class(0), mpz_class(1)}); // 1 + t^2
    CHECK_THROWS_AS(n2.divide_exact(UniSeries({mpz_class(1), mpz_class(1)})), InexactDivision);
}

TEST_CASE("cauchy identity") {
    CHECK(cauchy_identity_check(0));
    CHECK(cauchy_identity_check(2));
    for (int n = 0; n <= 12; ++n) CHECK(cauchy_identity_check(n));
}

TEST_CASE("hilbert series closed form") {
    CHECK(hilbert_hook(Hook{2, 1}) == UniSeries({mpz_class(1), mpz_class(3)}));
    for (int a = 0; a <= 9; ++a) CHECK(hilbert_hook(Hook{a, 0}) == UniSeries::one());

    // value at q = 1 is n!/(a+1)!, degree is b(b+1)/2
    for (const Hook& h : hooks_up_to(10)) {
        mpz_class expect = 1;
        for (int k = h.a + 2; k <= h.n(); ++k) expect *= k;
        UniSeries hs = hilbert_hook(h);
        CHECK(hs.eval(1) == expect);
        CHECK(hs.degree() == h.b * (h.b + 1) / 2);
    }
}

TEST_CASE("hilbert series via the factorization route") {
    UniSeries h21 = hilbert_via_factorization(Hook{2, 1}, 3);
    CHECK(h21 == UniSeries({mpz_class(1), mpz_class(3)}));
    CHECK(h21.coeff(2) == 0);
    CHECK(h21.coeff(3) == 0);

    CHECK(hilbert_via_factorization(Hook{4, 0}, 2) == UniSeries::one());

    for (const Hook& h : hooks_up_to(10)) {
        int dmax = h.b * (h.b + 1) / 2 + 1;
        CHECK(hilbert_via_factorization(h, dmax) == hilbert_hook(h));
    }

    CHECK_THROWS_AS(hilbert_via_factorization(Hook{1, 2}, 2), TruncationTooSmall);
}

TEST_CASE("euler identity") {
    // Hook(1,1): P(-1,q) = 1 - q - 3q^2 + 5q^3 - 2q^4 = (1+2q)(1-q)^3
    UniSeries lhs = poincare_hook(Hook{1, 1}).eval_q(-1);
    CHECK(lhs == UniSeries({mpz_class(1), mpz_class(-1), mpz_class(-3), mpz_class(5),
                            mpz_class(-2)}));
    for (const Hook& h : hooks_up_to(10)) CHECK(euler_identity_check(h));
}

TEST_CASE("betti renderers") {
    BettiTable t = betti_table(poincare_hook(Hook{2, 1}));
    std::string m2 = render_betti_m2(t);
    CHECK(m2 ==
          "       0 1  2  3 4\n"
          "total: 1 7 14 11 3\n"
          "    0: 1 1  .  . .\n"
          "    1: . 6 14 11 3\n");
    std::string json = render_betti_json(t);
    CHECK(json.find("\"regularity\":1") != std::string::npos);
    CHECK(json.find("\"projective_dimension\":4") != std::string::npos);
}
