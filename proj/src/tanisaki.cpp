#include "dcp/tanisaki.hpp"

#include <numeric>
#include <unordered_set>

namespace dcp {

std::vector<MvPoly> tanisaki_generators(const Partition& p) {
    const int n = p.n();
    const std::vector<int> delta = p.delta_sequence();
    std::vector<MvPoly> gens;
    // subsets of {1..n} by size k, each contributing e_r(S) for
    // k >= r > k - delta_k
    for (int k = 1; k <= n; ++k) {
        int lo = k - delta[k - 1]; // r > lo
        if (lo >= k) continue;     // empty window
        std::vector<int> pos(k);
        std::iota(pos.begin(), pos.end(), 0);
        for (;;) {
            std::vector<int> S(k);
            for (int i = 0; i < k; ++i) S[i] = pos[i] + 1;
            for (int r = std::max(lo + 1, 1); r <= k; ++r)
                gens.push_back(elementary_symmetric(S, r, n));
            int i = k - 1;
            while (i >= 0 && pos[i] == n - k + i) --i;
            if (i < 0) break;
            ++pos[i];
            for (int j = i + 1; j < k; ++j) pos[j] = pos[j - 1] + 1;
        }
    }
    // dedupe exact duplicates (distinct (r,S) give distinct polynomials,
    // so this is normally a no-op)
    std::vector<MvPoly> out;
    std::unordered_set<std::string> seen;
    for (auto& g : gens)
        if (seen.insert(g.to_string()).second) out.push_back(std::move(g));
    return out;
}

GeneratorSet hook_split(const Hook& h) {
    const int n = h.n();
    std::vector<Monomial> mons = monomials_of_degree(n, h.b + 1, /*squarefree=*/true);
    MonomialIdeal J(mons, n);
    std::vector<MvPoly> sym;
    for (int i = 1; i <= h.b; ++i) sym.push_back(elementary_symmetric_full(i, n));
    std::vector<MvPoly> full;
    for (const auto& m : J.gens()) full.push_back(MvPoly::monomial(m));
    for (const auto& e : sym) full.push_back(e);
    return GeneratorSet{std::move(J), std::move(sym), std::move(full)};
}

} // namespace dcp
