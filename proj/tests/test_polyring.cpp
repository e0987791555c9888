#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dcp/errors.hpp"
#include "dcp/mvpoly.hpp"

using namespace dcp;

namespace {

MvPoly x(int i, int n) { return MvPoly::variable(i, n); }

MvPoly random_poly(std::mt19937& rng, int nvars, int maxdeg) {
    std::uniform_int_distribution<int> nterms(1, 4), expo(0, maxdeg), coef(-3, 3);
    MvPoly p(nvars);
    int k = nterms(rng);
    for (int t = 0; t < k; ++t) {
        std::vector<int> e(nvars);
        for (int v = 0; v < nvars; ++v) e[v] = expo(rng) % 3;
        p.add_term(Monomial(e), coef(rng));
    }
    return p;
}

} // namespace

TEST_CASE("monomial basics") {
    Monomial m = Monomial::from_indices({1, 1, 3}, 3); // x1^2 x3
    CHECK(m.degree() == 3);
    CHECK(!m.squarefree());
    CHECK(m.to_string() == "x1^2*x3");
    CHECK(m.index_tuple() == std::vector<int>{1, 1, 3});

    Monomial sf = Monomial::from_indices({2, 4}, 4);
    CHECK(sf.squarefree());
    Monomial other = Monomial::from_indices({2, 3}, 4);
    CHECK(sf.lcm(other) == Monomial::from_indices({2, 3, 4}, 4));
    CHECK((sf.lcm(other) / other) == Monomial::from_indices({4}, 4));
    CHECK(Monomial::from_indices({2}, 4).divides(sf));
    CHECK(!sf.divides(other));
}

TEST_CASE("index-lex order") {
    int n = 3;
    auto m = [&](std::vector<int> idx) { return Monomial::from_indices(idx, n); };
    CHECK(index_lex_less(m({1, 2}), m({1, 3})));
    CHECK(index_lex_less(m({1, 3}), m({2, 3})));
    CHECK(index_lex_less(m({1, 1}), m({1, 2}))); // x1^2 < x1x2
    CHECK(index_lex_less(m({1}), m({1, 1})));    // prefix first
    CHECK(!index_lex_less(m({2, 3}), m({2, 3})));
}

TEST_CASE("arithmetic identities") {
    int n = 2;
    MvPoly a = (x(1, n) + x(2, n)) * (x(1, n) - x(2, n));
    MvPoly b = x(1, n) * x(1, n) - x(2, n) * x(2, n);
    CHECK(a == b);

    std::mt19937 rng(7);
    MvPoly p = random_poly(rng, n, 2);
    CHECK((p + p.scale(-1)).is_zero());

    MvPoly e1 = elementary_symmetric({1, 2}, 1, 2);
    MvPoly prod = e1 * e1 - MvPoly::monomial(Monomial::from_indices({1, 2}, 2), 2);
    MvPoly expect = x(1, n) * x(1, n) + x(2, n) * x(2, n);
    CHECK(prod == expect);

    CHECK_THROWS_AS(x(1, 2) + x(1, 3), DimensionMismatch);
}

TEST_CASE("mul is commutative and associative on random instances") {
    std::mt19937 rng(12345);
    for (int t = 0; t < 100; ++t) {
        int n = 1 + t % 4;
        MvPoly p = random_poly(rng, n, 4), q = random_poly(rng, n, 4), r = random_poly(rng, n, 4);
        CHECK(p * q == q * p);
        CHECK((p * q) * r == p * (q * r));
    }
}

TEST_CASE("elementary symmetric polynomials") {
    MvPoly e = elementary_symmetric({1, 2, 3}, 2, 3);
    MvPoly expect(3);
    expect.add_term(Monomial::from_indices({1, 2}, 3), 1);
    expect.add_term(Monomial::from_indices({1, 3}, 3), 1);
    expect.add_term(Monomial::from_indices({2, 3}, 3), 1);
    CHECK(e == expect);
    CHECK(e.to_string() == "x1*x2 + x1*x3 + x2*x3");

    CHECK(elementary_symmetric({1, 2, 3, 4}, 0, 4) == MvPoly::constant(4, 1));
    CHECK(elementary_symmetric({1, 2}, 3, 4).is_zero());

    // e_i(x1..xn) = e_i(x1..x_{n-1}) + x_n e_{i-1}(x1..x_{n-1})
    for (int n = 2; n <= 8; ++n) {
        std::vector<int> S;
        for (int v = 1; v < n; ++v) S.push_back(v);
        for (int i = 1; i <= n; ++i) {
            MvPoly lhs = elementary_symmetric_full(i, n);
            MvPoly rhs = elementary_symmetric(S, i, n) +
                         x(n, n) * elementary_symmetric(S, i - 1, n);
            CHECK(lhs == rhs);
        }
    }
}

TEST_CASE("term counts and coefficients of e_r") {
    auto choose = [](int n, int k) {
        long long r = 1;
        for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    for (int n = 1; n <= 6; ++n) {
        std::vector<int> S;
        for (int v = 1; v <= n; ++v) S.push_back(v);
        for (int r = 0; r <= n; ++r) {
            MvPoly e = elementary_symmetric(S, r, n);
            CHECK(static_cast<long long>(e.term_count()) == choose(n, r));
            for (const auto& [m, c] : e.terms()) {
                CHECK(m.squarefree());
                CHECK(m.degree() == r);
                CHECK(c == 1);
            }
        }
    }
}

TEST_CASE("sum of e_r z^r at x = 1 is (1+z)^n") {
    auto choose = [](int n, int k) {
        long long r = 1;
        for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
        return r;
    };
    for (int n = 1; n <= 8; ++n) {
        for (int r = 0; r <= n; ++r) {
            // evaluating e_r at all ones counts its terms
            mpq_class val = 0;
            MvPoly e = elementary_symmetric_full(r, n);
            for (const auto& [m, c] : e.terms()) val += c;
            CHECK(val == mpq_class(static_cast<long>(choose(n, r))));
        }
    }
}

TEST_CASE("monomials_of_degree") {
    auto sf = monomials_of_degree(4, 2, true);
    REQUIRE(sf.size() == 6);
    CHECK(sf.front().to_string() == "x1*x2");
    CHECK(sf.back().to_string() == "x3*x4");
    for (size_t i = 1; i < sf.size(); ++i) CHECK(index_lex_less(sf[i - 1], sf[i]));

    auto unit = monomials_of_degree(3, 0);
    REQUIRE(unit.size() == 1);
    CHECK(unit[0].is_one());

    CHECK(monomials_of_degree(5, 3).size() == 35); // C(7,3)
    auto all = monomials_of_degree(3, 4);
    CHECK(all.size() == 15); // C(6,2)
    for (size_t i = 1; i < all.size(); ++i) CHECK(index_lex_less(all[i - 1], all[i]));
}

TEST_CASE("homogeneous degree detection") {
    int n = 2;
    CHECK(elementary_symmetric_full(2, 4).homogeneous_degree() == 2);
    MvPoly mixed = x(1, n) + x(1, n) * x(2, n);
    CHECK(!mixed.homogeneous_degree().has_value());
    CHECK(MvPoly::zero(3).homogeneous_degree() == std::nullopt);
}

TEST_CASE("rendering") {
    int n = 3;
    MvPoly p = x(1, n) * x(1, n).scale(mpq_class(1, 2)) - x(3, n);
    CHECK(p.to_string() == "1/2*x1^2 - x3");
    CHECK(MvPoly::zero(2).to_string() == "0");
    CHECK(MvPoly::constant(2, -1).to_string() == "-1");
}
