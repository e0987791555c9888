#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <set>

#include "dcp/errors.hpp"
#include "dcp/monomial_ideal.hpp"
#include "dcp/mvpoly.hpp"
#include "dcp/oracle.hpp"
#include "dcp/tanisaki.hpp"

using namespace dcp;

namespace {

Monomial sq(const std::vector<int>& idx, int n) { return Monomial::from_indices(idx, n); }

MonomialIdeal ideal(std::vector<Monomial> g, int n) { return MonomialIdeal(std::move(g), n); }

} // namespace

TEST_CASE("minimal generating set") {
    // x1x2 divides x1x2x3, so the latter is dropped
    MonomialIdeal I = ideal({sq({1, 2, 3}, 3), sq({1, 2}, 3)}, 3);
    REQUIRE(I.gens().size() == 1);
    CHECK(I.gens()[0] == sq({1, 2}, 3));
    CHECK(I.contains(sq({1, 2, 3}, 3)));
    CHECK(!I.contains(sq({1, 3}, 3)));
}

TEST_CASE("colon by a monomial") {
    MonomialIdeal I = ideal({sq({1, 2}, 3)}, 3);
    MonomialIdeal Q = colon_by_monomial(I, sq({2, 3}, 3));
    REQUIRE(Q.gens().size() == 1);
    CHECK(Q.gens()[0] == sq({1}, 3));

    MonomialIdeal J = ideal({sq({1, 2}, 3), sq({1, 3}, 3)}, 3);
    CHECK(colon_by_monomial(J, Monomial::one(3)) == J);

    MonomialIdeal Q2 = colon_by_monomial(J, sq({1}, 3));
    REQUIRE(Q2.gens().size() == 2);
    CHECK(Q2.gens()[0] == sq({2}, 3));
    CHECK(Q2.gens()[1] == sq({3}, 3));

    // colon output has no comparable pair of generators
    for (const auto& g1 : Q2.gens())
        for (const auto& g2 : Q2.gens())
            if (!(g1 == g2)) CHECK(!g1.divides(g2));
}

TEST_CASE("linear quotients for J of Hook(2,1)") {
    GeneratorSet gs = hook_split(Hook{2, 1});
    auto lq = linear_quotients_lex(gs.monomial_part);
    CHECK(lq.linear);
    // generators in lex order x1x2,x1x3,x1x4,x2x3,x2x4,x3x4 give set sizes
    // |set(M)| = (largest index) - 2
    CHECK(lq.set_sizes == std::vector<int>{0, 1, 2, 1, 2, 2});
    std::multiset<int> sizes(lq.set_sizes.begin(), lq.set_sizes.end());
    CHECK(sizes == std::multiset<int>{0, 1, 1, 2, 2, 2});
}

TEST_CASE("single generator has linear quotients trivially") {
    auto lq = linear_quotients_lex(ideal({sq({1, 2, 3}, 4)}, 4));
    CHECK(lq.linear);
    CHECK(lq.set_sizes == std::vector<int>{0});
}

TEST_CASE("(x1x2, x3x4) fails linear quotients in lex order") {
    auto lq = linear_quotients_lex(ideal({sq({1, 2}, 4), sq({3, 4}, 4)}, 4));
    CHECK(!lq.linear);
}

TEST_CASE("set size multiset prediction") {
    auto m = set_size_multiset(Hook{2, 1});
    REQUIRE(m.size() == 3);
    CHECK(m[0] == 1);
    CHECK(m[1] == 2);
    CHECK(m[2] == 3);

    auto row = set_size_multiset(Hook{3, 0});
    for (int i = 0; i <= 3; ++i) CHECK(row[i] == 1);

    // totals: sum C(b+i,b) = C(n, b+1)
    for (int a = 0; a <= 6; ++a)
        for (int b = 0; a + b + 1 <= 9; ++b) {
            mpz_class tot = 0;
            for (const auto& [i, c] : set_size_multiset(Hook{a, b})) tot += c;
            mpz_class expect;
            mpz_bin_uiui(expect.get_mpz_t(), a + b + 1, b + 1);
            CHECK(tot == expect);
        }
}

TEST_CASE("measured set sizes match the closed form for hooks n <= 8") {
    for (int n = 1; n <= 8; ++n)
        for (int b = 0; b < n; ++b) {
            Hook h{n - 1 - b, b};
            auto lq = linear_quotients_lex(hook_split(h).monomial_part);
            REQUIRE(lq.linear);
            std::map<int, mpz_class> measured;
            for (int s : lq.set_sizes) measured[s] += 1;
            CHECK(measured == set_size_multiset(h));
        }
}

TEST_CASE("minimal primes match the worked examples") {
    // (xy, xz): primes (x), (y,z)
    auto p1 = minimal_primes(ideal({sq({1, 2}, 3), sq({1, 3}, 3)}, 3));
    REQUIRE(p1.size() == 2);
    CHECK(p1[0] == std::vector<int>{1});
    CHECK(p1[1] == std::vector<int>{2, 3});

    // (xy, xz, yzw): primes (x,y), (x,z), (x,w), (y,z)
    auto p2 = minimal_primes(ideal({sq({1, 2}, 4), sq({1, 3}, 4), sq({2, 3, 4}, 4)}, 4));
    std::set<std::vector<int>> got(p2.begin(), p2.end());
    std::set<std::vector<int>> expect = {{1, 2}, {1, 3}, {1, 4}, {2, 3}};
    CHECK(got == expect);
}

TEST_CASE("minimal primes of J_mu are the (n-b)-subsets") {
    for (int n = 2; n <= 7; ++n)
        for (int b = 0; b < n; ++b) {
            Hook h{n - 1 - b, b};
            auto primes = minimal_primes(hook_split(h).monomial_part);
            size_t expected_count = 1;
            for (int i = 0; i < b; ++i)
                expected_count = expected_count * (n - i) / (i + 1); // C(n, n-b)
            CHECK(primes.size() == expected_count);
            for (const auto& p : primes) CHECK(static_cast<int>(p.size()) == n - b);
        }
}

TEST_CASE("alexander dual") {
    MonomialIdeal I = ideal({sq({1, 2}, 4), sq({1, 3}, 4), sq({2, 3, 4}, 4)}, 4);
    MonomialIdeal dual = alexander_dual(I);
    MonomialIdeal expect =
        ideal({sq({1, 2}, 4), sq({1, 3}, 4), sq({1, 4}, 4), sq({2, 3}, 4)}, 4);
    CHECK(dual == expect);
    CHECK(alexander_dual(dual) == I);
}

TEST_CASE("dual of all squarefree degree-m monomials, n <= 8") {
    for (int n = 1; n <= 8; ++n)
        for (int m = 1; m <= n; ++m) {
            MonomialIdeal I(monomials_of_degree(n, m, true), n);
            MonomialIdeal expect(monomials_of_degree(n, n - m + 1, true), n);
            CHECK(alexander_dual(I) == expect);
        }
}

TEST_CASE("krull dimension") {
    CHECK(krull_dim_quotient(ideal({sq({1, 2}, 3), sq({1, 3}, 3)}, 3)) == 2);
    CHECK(krull_dim_quotient(ideal({}, 4)) == 4);
    for (int n = 2; n <= 7; ++n)
        for (int b = 0; b < n; ++b)
            CHECK(krull_dim_quotient(hook_split(Hook{n - 1 - b, b}).monomial_part) == b);
}

TEST_CASE("minimal_primes enforces the size cap") {
    CHECK_THROWS_AS(minimal_primes(ideal({}, 21)), TooLarge);
}

TEST_CASE("tanisaki generators for mu = (3,1,0,0)") {
    auto gens = tanisaki_generators(make_partition({3, 1}));
    // k=2: six quadratic monomials; k=3: four e_2 on triples and four cubic
    // monomials; k=4: e_1..e_4
    CHECK(gens.size() == 18);
    std::set<std::string> got;
    for (const auto& g : gens) got.insert(g.to_string());

    std::set<std::string> expect;
    for (const auto& m : monomials_of_degree(4, 2, true))
        expect.insert(MvPoly::monomial(m).to_string());
    for (const auto& S : std::vector<std::vector<int>>{{1, 2, 3}, {1, 2, 4}, {1, 3, 4}, {2, 3, 4}}) {
        expect.insert(elementary_symmetric(S, 2, 4).to_string());
        expect.insert(elementary_symmetric(S, 3, 4).to_string());
    }
    for (int r = 1; r <= 4; ++r) expect.insert(elementary_symmetric_full(r, 4).to_string());
    CHECK(got == expect);
}

TEST_CASE("tanisaki for mu = (1) is (x1)") {
    auto gens = tanisaki_generators(make_partition({1}));
    REQUIRE(gens.size() == 1);
    CHECK(gens[0] == MvPoly::variable(1, 1));
}

TEST_CASE("hook split shapes") {
    GeneratorSet g21 = hook_split(Hook{2, 1});
    CHECK(g21.monomial_part.gens().size() == 6);
    REQUIRE(g21.symmetric_part.size() == 1);
    CHECK(g21.symmetric_part[0] == elementary_symmetric_full(1, 4));
    CHECK(g21.full_list.size() == 7);

    GeneratorSet row = hook_split(Hook{3, 0}); // J = (x1..x4), E empty
    CHECK(row.monomial_part.gens().size() == 4);
    CHECK(row.symmetric_part.empty());
    for (const auto& m : row.monomial_part.gens()) CHECK(m.degree() == 1);

    GeneratorSet col = hook_split(Hook{0, 2}); // J = (x1x2x3), E = e_1, e_2
    REQUIRE(col.monomial_part.gens().size() == 1);
    CHECK(col.monomial_part.gens()[0] == sq({1, 2, 3}, 3));
    CHECK(col.symmetric_part.size() == 2);
}

TEST_CASE("equal_as_ideals_truncated") {
    // Tanisaki vs hook split for (3,1,0,0), degree-by-degree to 4
    auto A = tanisaki_generators(make_partition({3, 1}));
    auto B = hook_split(Hook{2, 1}).full_list;
    CHECK(equal_as_ideals_truncated(A, B, 4, 4));
    CHECK(equal_as_ideals_truncated(A, A, 4, 4));

    std::vector<MvPoly> X{MvPoly::variable(1, 2)};
    std::vector<MvPoly> Y{MvPoly::variable(2, 2)};
    CHECK(!equal_as_ideals_truncated(X, Y, 2, 1));
}

TEST_CASE("hook generating set sizes match the minimality count") {
    for (int n = 1; n <= 8; ++n)
        for (int b = 0; b < n; ++b) {
            GeneratorSet gs = hook_split(Hook{n - 1 - b, b});
            mpz_class expect;
            mpz_bin_uiui(expect.get_mpz_t(), n, b + 1);
            expect += b;
            CHECK(mpz_class(static_cast<long>(gs.full_list.size())) == expect);
        }
}
