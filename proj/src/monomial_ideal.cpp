#include "dcp/monomial_ideal.hpp"

#include <algorithm>
#include <iostream>

#include "dcp/errors.hpp"

namespace dcp {

namespace {

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
    std::sort(gens.begin(), gens.end(), IndexLexLess{});
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    std::vector<Monomial> out;
    for (const auto& g : gens) {
        bool redundant = false;
        for (const auto& h : out)
            if (h.divides(g)) { redundant = true; break; }
        if (!redundant) out.push_back(g);
    }
    return out;
}

mpz_class binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

} // namespace

MonomialIdeal::MonomialIdeal(std::vector<Monomial> gens, int nvars) : nvars_(nvars) {
    for (const auto& g : gens)
        if (g.nvars() != nvars)
            throw DimensionMismatch("MonomialIdeal: generator nvars mismatch");
    gens_ = minimalize(std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
    for (const auto& g : gens_)
        if (g.divides(m)) return true;
    return false;
}

MonomialIdeal colon_by_monomial(const MonomialIdeal& I, const Monomial& m) {
    if (m.nvars() != I.nvars())
        throw DimensionMismatch("colon: nvars mismatch");
    std::vector<Monomial> gens;
    gens.reserve(I.gens().size());
    for (const auto& g : I.gens()) gens.push_back(g.lcm(m) / m);
    return MonomialIdeal(std::move(gens), I.nvars());
}

LinearQuotientsResult linear_quotients_lex(const MonomialIdeal& I) {
    LinearQuotientsResult res;
    const auto& gens = I.gens();
    if (gens.empty()) return res;

    bool single_degree = true;
    int d0 = gens.front().degree();
    for (const auto& g : gens)
        if (g.degree() != d0) single_degree = false;
    if (!single_degree)
        std::cerr << "linear_quotients_lex: ideal not generated in a single degree\n";

    res.linear = true;
    res.set_sizes.push_back(0); // set(M_1) is empty
    for (size_t i = 1; i < gens.size(); ++i) {
        std::vector<Monomial> pred(gens.begin(), gens.begin() + i);
        MonomialIdeal Q = colon_by_monomial(MonomialIdeal(std::move(pred), I.nvars()), gens[i]);
        int vars = 0;
        for (const auto& g : Q.gens()) {
            if (g.degree() != 1) { res.linear = false; break; }
            ++vars;
        }
        if (!res.linear) {
            res.set_sizes.clear();
            return res;
        }
        res.set_sizes.push_back(vars);
    }
    return res;
}

std::map<int, mpz_class> set_size_multiset(const Hook& h) {
    std::map<int, mpz_class> m;
    for (int i = 0; i <= h.a; ++i) m[i] = binom(h.b + i, h.b);
    return m;
}

std::vector<std::vector<int>> minimal_primes(const MonomialIdeal& I) {
    const int n = I.nvars();
    if (n > 20)
        throw TooLarge("minimal_primes: n > 20");
    for (const auto& g : I.gens())
        if (!g.squarefree())
            throw std::invalid_argument("minimal_primes: generators must be squarefree");

    std::vector<uint32_t> supports;
    for (const auto& g : I.gens()) {
        uint32_t s = 0;
        for (int v = 1; v <= n; ++v)
            if (g.exp(v) > 0) s |= (1u << (v - 1));
        supports.push_back(s);
    }

    // subsets by increasing cardinality; supersets of found covers skipped
    std::vector<uint32_t> covers;
    std::vector<std::vector<int>> out;
    for (int card = 0; card <= n; ++card) {
        for (uint32_t mask = 0; mask < (1u << n); ++mask) {
            if (__builtin_popcount(mask) != card) continue;
            bool super = false;
            for (uint32_t c : covers)
                if ((c & mask) == c) { super = true; break; }
            if (super) continue;
            bool covering = true;
            for (uint32_t s : supports)
                if ((s & mask) == 0) { covering = false; break; }
            if (!covering) continue;
            covers.push_back(mask);
            std::vector<int> vars;
            for (int v = 1; v <= n; ++v)
                if (mask & (1u << (v - 1))) vars.push_back(v);
            out.push_back(std::move(vars));
        }
    }
    return out;
}

MonomialIdeal alexander_dual(const MonomialIdeal& I) {
    std::vector<Monomial> gens;
    for (const auto& p : minimal_primes(I))
        gens.push_back(Monomial::from_indices(p, I.nvars()));
    return MonomialIdeal(std::move(gens), I.nvars());
}

int krull_dim_quotient(const MonomialIdeal& I) {
    auto primes = minimal_primes(I);
    if (primes.empty()) return -1; // unit ideal, zero ring
    size_t height = primes.front().size();
    for (const auto& p : primes) height = std::min(height, p.size());
    return I.nvars() - static_cast<int>(height);
}

} // namespace dcp
